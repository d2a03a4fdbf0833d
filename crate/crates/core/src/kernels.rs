//! Top-level kernel programs: scalar modular ops, pointwise vector ops, axpy
//! and the forward/inverse NTT, built at the padded width of a word layout
//! and ready for lowering.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ir::{run_ports, InterpError, Program, ProgramBuilder, VarId, WordLayout};
use crate::oracle::{compute_barrett, find_ntt_params, BarrettParams, NttParams, OracleError};
use crate::rewrite::modular::{add_mod, mul_mod_barrett, sub_mod, BarrettShifts};
use crate::rewrite::{lower_program, prune_zero_words, zero_words_of, MulStrategy, RewriteConfig, RewriteError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    Addmod,
    Submod,
    Mulmod,
    Vadd,
    Vsub,
    Vmul,
    Axpy,
    Ntt,
    Intt,
}

impl KernelKind {
    pub const ALL: [KernelKind; 9] = [
        KernelKind::Addmod,
        KernelKind::Submod,
        KernelKind::Mulmod,
        KernelKind::Vadd,
        KernelKind::Vsub,
        KernelKind::Vmul,
        KernelKind::Axpy,
        KernelKind::Ntt,
        KernelKind::Intt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Addmod => "addmod",
            KernelKind::Submod => "submod",
            KernelKind::Mulmod => "mulmod",
            KernelKind::Vadd => "vadd",
            KernelKind::Vsub => "vsub",
            KernelKind::Vmul => "vmul",
            KernelKind::Axpy => "axpy",
            KernelKind::Ntt => "ntt",
            KernelKind::Intt => "intt",
        }
    }

    pub fn is_scalar(self) -> bool {
        matches!(self, KernelKind::Addmod | KernelKind::Submod | KernelKind::Mulmod)
    }

    pub fn is_vector(self) -> bool {
        matches!(self, KernelKind::Vadd | KernelKind::Vsub | KernelKind::Vmul | KernelKind::Axpy)
    }

    pub fn is_ntt(self) -> bool {
        matches!(self, KernelKind::Ntt | KernelKind::Intt)
    }

    /// Whether the kernel multiplies and so needs Barrett constants.
    pub fn needs_barrett(self) -> bool {
        !matches!(self, KernelKind::Addmod | KernelKind::Submod | KernelKind::Vadd | KernelKind::Vsub)
    }

    /// The scalar operation a pointwise kernel applies per element.
    pub fn scalar(self) -> KernelKind {
        match self {
            KernelKind::Vadd => KernelKind::Addmod,
            KernelKind::Vsub => KernelKind::Submod,
            KernelKind::Vmul => KernelKind::Mulmod,
            other => other,
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        KernelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kernel `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("modulus {q} out of range for {lambda}-bit operands")]
    ModulusOutOfRange { q: BigUint, lambda: u32 },
    #[error("invalid NTT parameters: {0}")]
    InvalidNttParams(String),
    #[error("invalid kernel size {0}")]
    InvalidSize(u64),
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

pub type Result<T> = std::result::Result<T, KernelError>;

/// Everything needed to build one kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSpec {
    pub kind: KernelKind,
    pub layout: WordLayout,
    /// Element count; 1 for scalar kernels.
    pub n: u64,
    pub modulus: BigUint,
    /// Present whenever the modulus fits the Barrett layout of `lambda`;
    /// required by the multiplying kernels.
    pub barrett: Option<BarrettParams>,
    pub ntt: Option<NttParams>,
    pub mul_strategy: MulStrategy,
    /// Pass `q` (and `mu`) as inputs instead of baking them in.
    pub runtime_params: bool,
}

impl KernelSpec {
    /// Picks the modulus by the NTT prime scan: the largest suitable prime
    /// of the Barrett range, `p = 1 mod n` for transforms.
    pub fn new(kind: KernelKind, lambda: u32, omega0: u32, n: u64, strategy: MulStrategy) -> Result<Self> {
        let layout = WordLayout::new(lambda, omega0);
        if kind.is_ntt() {
            let ntt = find_ntt_params(lambda, n)?;
            Self::with_ntt(kind, layout, ntt, strategy)
        } else {
            let q = find_ntt_params(lambda, 1)?.p;
            Self::with_modulus(kind, layout, n, q, strategy)
        }
    }

    /// Non-transform kernel with a caller-chosen modulus. Addition and
    /// subtraction accept any `1 < q < 2^lambda`; multiplying kernels need a
    /// modulus inside the Barrett range.
    pub fn with_modulus(
        kind: KernelKind,
        layout: WordLayout,
        n: u64,
        q: BigUint,
        strategy: MulStrategy,
    ) -> Result<Self> {
        if kind.is_ntt() {
            return Err(KernelError::Inconsistent(format!("{kind} needs NTT parameters")));
        }
        let barrett = compute_barrett(&q, layout.lambda).ok();
        let spec = KernelSpec {
            kind,
            layout,
            n: if kind.is_scalar() { 1 } else { n },
            modulus: q,
            barrett,
            ntt: None,
            mul_strategy: strategy,
            runtime_params: false,
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn with_ntt(kind: KernelKind, layout: WordLayout, ntt: NttParams, strategy: MulStrategy) -> Result<Self> {
        let barrett = compute_barrett(&ntt.p, layout.lambda)
            .map_err(|_| KernelError::ModulusOutOfRange { q: ntt.p.clone(), lambda: layout.lambda })?;
        let spec = KernelSpec {
            kind,
            layout,
            n: ntt.n,
            modulus: ntt.p.clone(),
            barrett: Some(barrett),
            ntt: Some(ntt),
            mul_strategy: strategy,
            runtime_params: false,
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<()> {
        let lambda = self.layout.lambda;
        let q = &self.modulus;
        let out_of_range = || KernelError::ModulusOutOfRange { q: q.clone(), lambda };
        if lambda == 0 || self.layout.omega0 == 0 {
            return Err(KernelError::Inconsistent("zero width".into()));
        }
        if q <= &BigUint::one() || q.bits() > u64::from(lambda) {
            return Err(out_of_range());
        }
        if self.n == 0 {
            return Err(KernelError::InvalidSize(self.n));
        }
        if self.kind.is_scalar() && self.n != 1 {
            return Err(KernelError::InvalidSize(self.n));
        }
        match &self.barrett {
            Some(b) if b.q != *q || b.width != lambda => {
                return Err(KernelError::Inconsistent("Barrett parameters do not match the modulus".into()));
            }
            None if self.kind.needs_barrett() => return Err(out_of_range()),
            _ => {}
        }
        if self.kind.is_ntt() {
            let ntt = self.ntt.as_ref().ok_or_else(|| KernelError::InvalidNttParams("missing".into()))?;
            if !ntt.n.is_power_of_two() || ntt.n < 2 || ntt.n != self.n {
                return Err(KernelError::InvalidNttParams(format!("size {} is not a power of two >= 2", ntt.n)));
            }
            if ntt.p != *q || !ntt.check() {
                return Err(KernelError::InvalidNttParams("parameters fail their invariants".into()));
            }
            if self.runtime_params {
                return Err(KernelError::Inconsistent("transforms bake their parameters".into()));
            }
        } else if self.ntt.is_some() {
            return Err(KernelError::Inconsistent(format!("{} takes no NTT parameters", self.kind)));
        }
        Ok(())
    }

    /// Width the kernel program is built at.
    pub fn padded_width(&self) -> u32 {
        self.layout.padded_width()
    }

    pub fn rewrite_config(&self, target_has_double_word: bool) -> RewriteConfig {
        RewriteConfig {
            omega0: self.layout.omega0,
            mul_strategy: self.mul_strategy,
            target_has_double_word,
        }
    }
}

/// One NTT butterfly: `(a[i], a[j]) <- (a[i] + w^e a[j], a[i] - w^e a[j])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Butterfly {
    pub stage: u32,
    pub i: usize,
    pub j: usize,
    pub e: usize,
}

/// Iterative radix-2 decimation-in-time schedule over bit-reversed input.
pub fn butterfly_schedule(n: usize) -> Vec<Butterfly> {
    let mut out = Vec::with_capacity(n / 2 * n.trailing_zeros() as usize);
    let mut len = 2;
    let mut stage = 0;
    while len <= n {
        let half = len / 2;
        let step = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                out.push(Butterfly { stage, i: start + k, j: start + k + half, e: k * step });
            }
        }
        len *= 2;
        stage += 1;
    }
    out
}

pub fn bit_reverse(i: usize, bits: u32) -> usize {
    if bits == 0 {
        0
    } else {
        i.reverse_bits() >> (usize::BITS - bits)
    }
}

/// `root^e mod p` for `e < n/2`, with the inverse root for the inverse
/// transform.
pub fn twiddle_table(ntt: &NttParams, direction: Direction) -> Vec<BigUint> {
    let root = match direction {
        Direction::Forward => &ntt.root,
        Direction::Inverse => &ntt.root_inv,
    };
    let mut out = Vec::with_capacity((ntt.n / 2) as usize);
    let mut w = BigUint::one();
    for _ in 0..ntt.n / 2 {
        out.push(w.clone());
        w = (w * root) % &ntt.p;
    }
    out
}

/// A built kernel. `program` is the scalar body for pointwise kernels and
/// the whole transform for NTTs; `butterfly` is the per-butterfly body that
/// stage-wise drivers call with the twiddle as an input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub spec: KernelSpec,
    pub program: Program,
    pub butterflies: Vec<Butterfly>,
    pub butterfly: Option<Program>,
}

impl Kernel {
    /// Lowers (and zero-prunes) the kernel's programs for a target.
    pub fn lower(&self, target_has_double_word: bool) -> Result<Kernel> {
        let config = self.spec.rewrite_config(target_has_double_word);
        Ok(Kernel {
            spec: self.spec.clone(),
            program: lower_and_prune(&self.program, &config)?,
            butterflies: self.butterflies.clone(),
            butterfly: self.butterfly.as_ref().map(|b| lower_and_prune(b, &config)).transpose()?,
        })
    }
}

/// `lower_program` followed by zero-word pruning.
pub fn lower_and_prune(program: &Program, config: &RewriteConfig) -> Result<Program> {
    let lowered = lower_program(program, config)?;
    let zeros = zero_words_of(&lowered);
    Ok(prune_zero_words(&lowered, &zeros))
}

pub fn build(spec: &KernelSpec) -> Result<Kernel> {
    spec.check()?;
    let kernel = match spec.kind {
        k if k.is_scalar() => Kernel {
            spec: spec.clone(),
            program: build_body(spec, k)?,
            butterflies: Vec::new(),
            butterfly: None,
        },
        k if k.is_vector() => Kernel {
            spec: spec.clone(),
            program: build_vector(spec)?,
            butterflies: Vec::new(),
            butterfly: None,
        },
        k => {
            let direction = if k == KernelKind::Ntt { Direction::Forward } else { Direction::Inverse };
            Kernel {
                spec: spec.clone(),
                program: build_ntt(spec, direction)?,
                butterflies: butterfly_schedule(spec.n as usize),
                butterfly: Some(build_butterfly(spec)?),
            }
        }
    };
    Ok(kernel)
}

/// Shared construction state: the builder plus `q` and `mu` as constants or
/// inputs.
struct Ctx {
    b: ProgramBuilder,
    lambda: u32,
    width: u32,
    q: VarId,
    mu: Option<VarId>,
    shifts: Option<BarrettShifts>,
}

impl Ctx {
    fn new(name: &str, spec: &KernelSpec) -> Self {
        let mut b = ProgramBuilder::new(name);
        b.set_attribute("kernel", spec.kind.name());
        b.set_attribute("lambda", spec.layout.lambda.to_string());
        b.set_attribute("n", spec.n.to_string());
        Ctx {
            b,
            lambda: spec.layout.lambda,
            width: spec.padded_width(),
            q: VarId(0),
            mu: None,
            shifts: spec.barrett.as_ref().map(|p| BarrettShifts { shift1: p.shift1, shift2: p.shift2 }),
        }
    }

    /// Declares an input of the padded width whose port carries the logical
    /// width, so pruning knows the high words are zero.
    fn input(&mut self, name: &str) -> VarId {
        let v = self.b.input(name, self.width);
        self.b.ports_mut().inputs.last_mut().expect("port just added").width = self.lambda;
        v
    }

    fn output(&mut self, name: &str, v: VarId) {
        self.b.output(name, v);
        self.b.ports_mut().outputs.last_mut().expect("port just added").width = self.lambda;
    }

    /// Declares `q` (and `mu` for multiplying kernels). Must run after the
    /// data inputs so runtime parameters trail them.
    fn params(&mut self, spec: &KernelSpec, kind: KernelKind) {
        let needs_mu = kind.needs_barrett();
        if spec.runtime_params {
            self.q = self.input("q");
            if needs_mu {
                self.mu = Some(self.input("mu"));
            }
        } else {
            self.q = self.b.push_named("q", crate::ir::Op::Const(spec.modulus.clone()), &[], self.width);
            if needs_mu {
                let mu = spec.barrett.as_ref().expect("checked").mu.clone();
                self.mu = Some(self.b.push_named("mu", crate::ir::Op::Const(mu), &[], self.width));
            }
        }
    }

    fn constant(&mut self, value: &BigUint) -> VarId {
        self.b.push_named("c", crate::ir::Op::Const(value.clone()), &[], self.width)
    }

    fn addmod(&mut self, a: VarId, b: VarId) -> VarId {
        let (q, w) = (self.q, self.width);
        add_mod(&mut self.b, &a, &b, &q, w)
    }

    fn submod(&mut self, a: VarId, b: VarId) -> VarId {
        let (q, w) = (self.q, self.width);
        sub_mod(&mut self.b, &a, &b, &q, w)
    }

    fn mulmod(&mut self, a: VarId, b: VarId) -> VarId {
        let (q, w) = (self.q, self.width);
        let mu = self.mu.expect("mu declared");
        let shifts = self.shifts.expect("Barrett parameters");
        mul_mod_barrett(&mut self.b, &a, &b, &q, &mu, shifts, w)
    }

    fn finish(self) -> Program {
        let mut p = self.b.finish();
        p.eliminate_dead_code();
        p.compact();
        p
    }
}

/// Scalar `r = a op b mod q` with inputs `a`, `b` of width lambda.
pub fn build_scalar(spec: &KernelSpec) -> Result<Program> {
    if !spec.kind.is_scalar() {
        return Err(KernelError::Inconsistent(format!("{} is not a scalar kernel", spec.kind)));
    }
    spec.check()?;
    build_body(spec, spec.kind)
}

fn build_body(spec: &KernelSpec, kind: KernelKind) -> Result<Program> {
    let mut cx = Ctx::new(spec.kind.name(), spec);
    let a = cx.input("a");
    let b = cx.input("b");
    cx.params(spec, kind);
    let r = match kind {
        KernelKind::Addmod => cx.addmod(a, b),
        KernelKind::Submod => cx.submod(a, b),
        KernelKind::Mulmod => cx.mulmod(a, b),
        other => return Err(KernelError::Inconsistent(format!("{other} has no scalar body"))),
    };
    cx.output("r", r);
    Ok(cx.finish())
}

/// Per-element body of a pointwise kernel; the element count travels as the
/// `n` attribute. axpy takes the scalar `alpha` first and computes
/// `alpha * x + y`.
pub fn build_vector(spec: &KernelSpec) -> Result<Program> {
    if !spec.kind.is_vector() {
        return Err(KernelError::Inconsistent(format!("{} is not a vector kernel", spec.kind)));
    }
    spec.check()?;
    if spec.kind != KernelKind::Axpy {
        return build_body(spec, spec.kind.scalar());
    }
    let mut cx = Ctx::new("axpy", spec);
    let alpha = cx.input("alpha");
    let x = cx.input("x");
    let y = cx.input("y");
    cx.params(spec, KernelKind::Axpy);
    let ax = cx.mulmod(alpha, x);
    let r = cx.addmod(ax, y);
    cx.output("r", r);
    Ok(cx.finish())
}

/// The whole transform as straight-line code: inputs `x_0 .. x_{n-1}` in
/// natural order, outputs `y_0 .. y_{n-1}` in natural order. The
/// bit-reversal permutation is a renaming and is recorded as an attribute.
pub fn build_ntt(spec: &KernelSpec, direction: Direction) -> Result<Program> {
    spec.check()?;
    let ntt = spec.ntt.as_ref().ok_or_else(|| KernelError::InvalidNttParams("missing".into()))?;
    let n = ntt.n as usize;
    let bits = n.trailing_zeros();
    let name = match direction {
        Direction::Forward => "ntt",
        Direction::Inverse => "intt",
    };
    let mut cx = Ctx::new(name, spec);
    let xs: Vec<VarId> = (0..n).map(|i| cx.input(&format!("x_{i}"))).collect();
    cx.params(spec, KernelKind::Ntt);
    let twiddles: Vec<VarId> = twiddle_table(ntt, direction).iter().map(|w| cx.constant(w)).collect();
    let mut a: Vec<VarId> = (0..n).map(|i| xs[bit_reverse(i, bits)]).collect();
    let schedule = butterfly_schedule(n);
    for bf in &schedule {
        let t = cx.mulmod(twiddles[bf.e], a[bf.j]);
        let u = a[bf.i];
        a[bf.i] = cx.addmod(u, t);
        a[bf.j] = cx.submod(u, t);
    }
    if direction == Direction::Inverse {
        let scale = cx.constant(&ntt.n_inv);
        for v in &mut a {
            *v = cx.mulmod(*v, scale);
        }
    }
    for (k, v) in a.into_iter().enumerate() {
        cx.output(&format!("y_{k}"), v);
    }
    let perm: Vec<String> = (0..n).map(|i| bit_reverse(i, bits).to_string()).collect();
    cx.b.set_attribute("bit_reversal", perm.join(","));
    cx.b.set_attribute("butterflies", schedule.len().to_string());
    cx.b.set_attribute("stages", bits.to_string());
    Ok(cx.finish())
}

/// `(u, v, w) -> (u + w v, u - w v) mod p`, the body a stage-wise driver
/// runs once per butterfly.
pub fn build_butterfly(spec: &KernelSpec) -> Result<Program> {
    let mut cx = Ctx::new("butterfly", spec);
    let u = cx.input("u");
    let v = cx.input("v");
    let w = cx.input("w");
    cx.params(spec, KernelKind::Ntt);
    let t = cx.mulmod(w, v);
    let hi = cx.addmod(u, t);
    let lo = cx.submod(u, t);
    cx.output("hi", hi);
    cx.output("lo", lo);
    Ok(cx.finish())
}

/// A lone `P x P -> 2P` multiply at the padded width of `layout`, the unit
/// in which multiplication strategies are compared.
pub fn build_widening_mul(layout: WordLayout) -> Program {
    let width = layout.padded_width();
    let mut b = ProgramBuilder::new("widening_mul");
    let x = b.input("a", width);
    let y = b.input("b", width);
    let p = b.push(crate::ir::Op::Mul, &[x, y], 2 * width);
    b.output("p", p);
    b.finish()
}

/// Runs a kernel program (raw or lowered) on wide arguments.
///
/// Scalar kernels take `[[a], [b]]`, pointwise kernels `[x, y]` (axpy
/// `[[alpha], x, y]`) and transforms `[x]`. Runtime `q` and `mu` are
/// appended from the spec. Strict interpretation is used so any width
/// overflow in generated code surfaces as an error.
pub fn apply(spec: &KernelSpec, program: &Program, args: &[Vec<BigUint>]) -> std::result::Result<Vec<Vec<BigUint>>, InterpError> {
    let trailing = runtime_args(spec);
    let call = |mut values: Vec<BigUint>| {
        values.extend(trailing.iter().cloned());
        run_ports(program, &values, true)
    };
    if spec.kind.is_ntt() {
        let x = args.first().cloned().unwrap_or_default();
        return Ok(vec![call(x)?]);
    }
    let len = args.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        // a single-element argument broadcasts (axpy's alpha)
        let values: Vec<BigUint> = args.iter().map(|a| a[if a.len() == 1 { 0 } else { i }].clone()).collect();
        out.push(call(values)?.remove(0));
    }
    Ok(vec![out])
}

fn runtime_args(spec: &KernelSpec) -> Vec<BigUint> {
    if !spec.runtime_params {
        return Vec::new();
    }
    let mut out = vec![spec.modulus.clone()];
    if spec.kind.needs_barrett() {
        out.push(spec.barrett.as_ref().expect("checked").mu.clone());
    }
    out
}

/// Executes a transform stage by stage through the butterfly body, the way
/// the generated drivers do.
pub fn run_staged(kernel: &Kernel, body: &Program, x: &[BigUint]) -> std::result::Result<Vec<BigUint>, InterpError> {
    let spec = &kernel.spec;
    let ntt = spec.ntt.as_ref().expect("transform kernel");
    let n = x.len();
    let bits = n.trailing_zeros();
    let direction = if spec.kind == KernelKind::Ntt { Direction::Forward } else { Direction::Inverse };
    let table = twiddle_table(ntt, direction);
    let mut a: Vec<BigUint> = (0..n).map(|i| x[bit_reverse(i, bits)].clone()).collect();
    for bf in &kernel.butterflies {
        let out = run_ports(body, &[a[bf.i].clone(), a[bf.j].clone(), table[bf.e].clone()], true)?;
        a[bf.i] = out[0].clone();
        a[bf.j] = out[1].clone();
    }
    if direction == Direction::Inverse {
        for v in &mut a {
            *v = (&*v * &ntt.n_inv) % &ntt.p;
        }
    }
    Ok(a)
}
