//! Recursive word-level rewriting.
//!
//! Each level halves the working unit: every variable wider than the unit is
//! replaced by unit-sized digits and each instruction touching such a
//! variable is rewritten by the rule for its kind (carry chains for add,
//! borrow chains for sub, lexicographic comparison, schoolbook or Karatsuba
//! products, word-dropping shifts). Levels repeat until the unit reaches the
//! machine word.

mod lowerer;
pub mod modular;
mod prune;

pub use lowerer::{Digits, Lowerer};
pub use prune::{prune_zero_words, zero_words_of};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ir::{validate, Op, Port, Program, ProgramBuilder, VarId};
use crate::oracle::BarrettParams;
use modular::BarrettShifts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MulStrategy {
    #[default]
    Schoolbook,
    Karatsuba,
}

impl MulStrategy {
    pub fn name(self) -> &'static str {
        match self {
            MulStrategy::Schoolbook => "schoolbook",
            MulStrategy::Karatsuba => "karatsuba",
        }
    }
}

impl std::str::FromStr for MulStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "schoolbook" => Ok(MulStrategy::Schoolbook),
            "karatsuba" => Ok(MulStrategy::Karatsuba),
            other => Err(format!("unknown multiplication strategy {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteConfig {
    pub omega0: u32,
    pub mul_strategy: MulStrategy,
    /// Whether the target keeps `2 * omega0` bit products and carries. When
    /// false, one more level splits them into half words.
    pub target_has_double_word: bool,
}

impl RewriteConfig {
    pub fn new(omega0: u32, mul_strategy: MulStrategy) -> Self {
        RewriteConfig { omega0, mul_strategy, target_has_double_word: true }
    }

    pub fn check(&self) -> Result<(), RewriteError> {
        if matches!(self.omega0, 8 | 16 | 32 | 64) {
            Ok(())
        } else {
            Err(RewriteError::InvalidWordWidth(self.omega0))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("width {width} is not a power-of-two multiple of the {omega0}-bit word")]
    UnsupportedWidth { width: u32, omega0: u32 },
    #[error("machine word width must be 8, 16, 32 or 64, got {0}")]
    InvalidWordWidth(u32),
    #[error("shift by {shift} is out of range for a {width}-bit value")]
    ShiftOutOfRange { shift: u32, width: u32 },
    #[error("program does not validate: {0}")]
    InvalidProgram(String),
}

/// One rule application: which source instruction was rewritten at which
/// level, and how many instructions replaced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub level: u32,
    pub index: usize,
    pub op: String,
    pub dest: String,
    pub width: u32,
    pub emitted: usize,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {} #{}: {}:{} = {} -> {} instrs",
            self.level, self.index, self.dest, self.width, self.op, self.emitted
        )
    }
}

pub fn format_trace(trace: &[TraceEntry]) -> String {
    trace.iter().map(|t| format!("{t}\n")).collect()
}

/// Where each split variable went: MSW-first word names, `None` for words
/// that are statically zero, plus every lowered var known to be zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SplitMap {
    pub words: BTreeMap<String, Vec<Option<String>>>,
    pub known_zero: BTreeSet<String>,
}

#[derive(Debug, Clone)]
enum Repr {
    Atom(VarId),
    Split(Digits),
}

struct Level<'a> {
    src: &'a Program,
    lw: Lowerer,
    threshold: u32,
    repr: Vec<Option<Repr>>,
    atoms: HashMap<VarId, VarId>,
    splits: HashMap<VarId, Digits>,
}

impl Level<'_> {
    fn atom(&mut self, old: VarId) -> VarId {
        match self.repr[old.index()].clone().expect("operand defined") {
            Repr::Atom(v) => v,
            Repr::Split(d) => {
                if let Some(v) = self.atoms.get(&old) {
                    return *v;
                }
                let v = self.lw.join(&d);
                self.atoms.insert(old, v);
                v
            }
        }
    }

    fn digits(&mut self, old: VarId) -> Digits {
        match self.repr[old.index()].clone().expect("operand defined") {
            Repr::Split(d) => d,
            Repr::Atom(v) => {
                if let Some(d) = self.splits.get(&old) {
                    return d.clone();
                }
                let d = self.lw.split_var(v);
                self.splits.insert(old, d.clone());
                d
            }
        }
    }

    fn rewrite(&mut self, op: &Op, args: &[VarId], width: u32) -> Digits {
        match op {
            Op::Const(v) => self.lw.constant_digits(v, width),
            Op::Add => {
                let ds: Vec<Digits> = args.iter().map(|&a| self.digits(a)).collect();
                let refs: Vec<&Digits> = ds.iter().collect();
                self.lw.add_digits(&refs, width)
            }
            Op::Sub => {
                let mut acc = self.digits(args[0]);
                for &b in &args[1..] {
                    let d = self.digits(b);
                    acc = self.lw.sub_digits(&acc, &d, width);
                }
                if args.len() == 1 {
                    acc = self.lw.resize(&acc, width);
                }
                acc
            }
            Op::Mul => {
                let (a, b) = (self.digits(args[0]), self.digits(args[1]));
                self.lw.mul_digits(&a, &b)
            }
            Op::Shl(s) => {
                let a = self.digits(args[0]);
                self.lw.shl_digits(&a, *s, width)
            }
            Op::Shr(s) => {
                let a = self.digits(args[0]);
                self.lw.shr_digits(&a, *s, width)
            }
            Op::And | Op::Or => {
                let ds: Vec<Digits> = args.iter().map(|&a| self.digits(a)).collect();
                self.lw.bitwise_digits(op.clone(), &ds, width)
            }
            Op::Lt => {
                let (a, b) = (self.digits(args[0]), self.digits(args[1]));
                Digits::single(self.lw.lt_digits(&a, &b), 1)
            }
            Op::Eq => {
                let (a, b) = (self.digits(args[0]), self.digits(args[1]));
                Digits::single(self.lw.eq_digits(&a, &b), 1)
            }
            Op::Select => {
                let c = self.atom(args[0]);
                let (a, b) = (self.digits(args[1]), self.digits(args[2]));
                self.lw.select_digits(c, &a, &b)
            }
            Op::ExtractHi => {
                let a = self.digits(args[0]);
                let shift = self.src.width(args[0]) - width;
                self.lw.shr_digits(&a, shift, width)
            }
            Op::ExtractLo => {
                let a = self.digits(args[0]);
                self.lw.resize(&a, width)
            }
            Op::Concat => {
                let (hi, lo) = (self.digits(args[0]), self.digits(args[1]));
                self.lw.concat_digits(&hi, &lo, width)
            }
        }
    }

    /// MSW-first words of a source var in the lowered program.
    fn words_of(&mut self, old: VarId) -> Vec<VarId> {
        let width = self.src.width(old);
        if width <= self.threshold {
            return vec![self.atom(old)];
        }
        let d = self.digits(old);
        self.lw.materialize(&d)
    }
}

/// One rewrite level: vars wider than `threshold` are split into `unit`-bit
/// digits. Normally `threshold == unit`; the no-double-word fallback keeps
/// machine words whole and splits only the wider intermediates into halves.
fn lower_level(
    src: &Program,
    unit: u32,
    threshold: u32,
    level: u32,
    strategy: MulStrategy,
) -> (Program, SplitMap, Vec<TraceEntry>) {
    let mut b = ProgramBuilder::new(src.name.clone());
    *b.attributes_mut() = src.attributes.clone();
    let mut repr: Vec<Option<Repr>> = vec![None; src.vars.len()];
    let mut input_words: HashMap<VarId, Vec<VarId>> = HashMap::new();
    for &id in &src.inputs {
        let var = src.var(id);
        if var.width <= threshold {
            let v = b.input_var(&var.name, var.width);
            repr[id.index()] = Some(Repr::Atom(v));
            input_words.insert(id, vec![v]);
        } else {
            let n = var.width.div_ceil(unit) as usize;
            let mut msw_first = Vec::with_capacity(n);
            for j in 0..n {
                let pos = n - 1 - j;
                let w = (var.width - pos as u32 * unit).min(unit);
                msw_first.push(b.input_var(&format!("{}{j}", var.name), w));
            }
            let words = msw_first.iter().rev().map(|&v| Some(v)).collect();
            repr[id.index()] = Some(Repr::Split(Digits { words, width: var.width }));
            input_words.insert(id, msw_first);
        }
    }
    b.ports_mut().inputs = src
        .ports
        .inputs
        .iter()
        .map(|p| Port {
            name: p.name.clone(),
            width: p.width,
            words: p.words.iter().flat_map(|w| input_words[w].clone()).collect(),
        })
        .collect();

    let mut st = Level {
        src,
        lw: Lowerer::at_level(b, unit, strategy, level),
        threshold,
        repr,
        atoms: HashMap::new(),
        splits: HashMap::new(),
    };
    for (index, instr) in src.body.iter().enumerate() {
        let width = src.width(instr.dest);
        let small = width <= threshold && instr.args.iter().all(|&a| src.width(a) <= threshold);
        let name = src.name_of(instr.dest);
        if small {
            let args: Vec<VarId> = instr.args.iter().map(|&a| st.atom(a)).collect();
            let v = st.lw.builder().push_named(name, instr.op.clone(), &args, width);
            st.repr[instr.dest.index()] = Some(Repr::Atom(v));
            continue;
        }
        let before = st.lw.builder().program().body.len();
        st.lw.set_hint(name);
        let d = st.rewrite(&instr.op, &instr.args, width);
        let emitted = st.lw.builder().program().body.len() - before;
        st.lw.trace.push(TraceEntry {
            level,
            index,
            op: instr.op.kind().to_string(),
            dest: name.to_string(),
            width,
            emitted,
        });
        st.repr[instr.dest.index()] = Some(Repr::Split(d));
    }

    let mut output_words: HashMap<VarId, Vec<VarId>> = HashMap::new();
    for &o in &src.outputs {
        if output_words.contains_key(&o) {
            continue;
        }
        st.lw.set_hint(src.name_of(o));
        let words = st.words_of(o);
        output_words.insert(o, words);
    }
    let mut split = SplitMap::default();
    for (id, var) in src.vars.iter().enumerate() {
        if let Some(Repr::Split(d)) = &st.repr[id] {
            let names = d
                .words
                .iter()
                .rev()
                .map(|w| w.map(|v| st.lw.builder().program().name_of(v).to_string()))
                .collect();
            split.words.insert(var.name.clone(), names);
        }
    }
    let Level { lw, .. } = st;
    let (mut b, trace) = lw.into_parts();
    for &o in &src.outputs {
        for &w in &output_words[&o] {
            b.mark_output(w);
        }
    }
    b.ports_mut().outputs = src
        .ports
        .outputs
        .iter()
        .map(|p| Port {
            name: p.name.clone(),
            width: p.width,
            words: p.words.iter().flat_map(|w| output_words[w].clone()).collect(),
        })
        .collect();
    let mut program = b.finish();
    program.eliminate_dead_code();
    program.compact();
    for instr in &program.body {
        if matches!(&instr.op, Op::Const(v) if v == &num_bigint::BigUint::default()) {
            split.known_zero.insert(program.name_of(instr.dest).to_string());
        }
    }
    (program, split, trace)
}

fn port_width(program: &Program) -> u32 {
    program.inputs.iter().chain(&program.outputs).map(|&v| program.width(v)).max().unwrap_or(0)
}

/// One level of splitting at unit `omega`: every var wider than `omega`
/// becomes `omega`-bit words.
pub fn split_vars(program: &Program, omega: u32) -> Result<(Program, SplitMap), RewriteError> {
    check_valid(program)?;
    let (p, map, _) = lower_level(program, omega, omega, 1, MulStrategy::Schoolbook);
    Ok((p, map))
}

fn check_valid(program: &Program) -> Result<(), RewriteError> {
    let diags = validate(program);
    if diags.is_empty() {
        Ok(())
    } else {
        let text: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
        Err(RewriteError::InvalidProgram(text.join("; ")))
    }
}

/// Number of halving levels from the widest port down to `omega0`.
pub fn depth_for(width: u32, omega0: u32) -> Result<u32, RewriteError> {
    if width <= omega0 {
        return Ok(0);
    }
    let ratio = width / omega0;
    if width % omega0 != 0 || !ratio.is_power_of_two() {
        return Err(RewriteError::UnsupportedWidth { width, omega0 });
    }
    Ok(ratio.trailing_zeros())
}

/// Rewrites `program` until every operation works on `omega0`-bit words.
/// Products and carries up to `2 * omega0` bits remain when the target has a
/// double-word type.
pub fn lower_program(program: &Program, config: &RewriteConfig) -> Result<Program, RewriteError> {
    lower_program_traced(program, config).map(|(p, _)| p)
}

pub fn lower_program_traced(
    program: &Program,
    config: &RewriteConfig,
) -> Result<(Program, Vec<TraceEntry>), RewriteError> {
    config.check()?;
    check_valid(program)?;
    let omega0 = config.omega0;
    let depth = depth_for(port_width(program), omega0)?;
    let mut current = program.clone();
    let mut trace = Vec::new();
    for level in 1..=depth {
        let unit = port_width(program) >> level;
        let (next, _, t) = lower_level(&current, unit, unit, level, config.mul_strategy);
        current = next;
        trace.extend(t);
    }
    if !config.target_has_double_word && current.max_width() > omega0 {
        let (next, _, t) = lower_level(&current, omega0 / 2, omega0, depth + 1, config.mul_strategy);
        current = next;
        trace.extend(t);
    }
    current.attributes.insert("depth".into(), depth.to_string());
    current.attributes.insert("omega0".into(), omega0.to_string());
    current.attributes.insert("strategy".into(), config.mul_strategy.name().into());
    Ok((current, trace))
}

/// Double-word addition: `[c0, c1, c2] = a + b` with a one-bit carry `c0`.
pub fn lower_add_dd(lw: &mut Lowerer, a: &Digits, b: &Digits) -> Digits {
    let width = a.width.max(b.width) + 1;
    lw.add_digits(&[a, b], width)
}

/// Double-word subtraction with borrow, wrapping modulo `2^width`.
pub fn lower_sub_dd(lw: &mut Lowerer, a: &Digits, b: &Digits) -> Digits {
    lw.sub_digits(a, b, a.width)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpKind {
    Lt,
    Eq,
}

pub fn lower_cmp_dd(lw: &mut Lowerer, kind: CmpKind, a: &Digits, b: &Digits) -> VarId {
    match kind {
        CmpKind::Lt => lw.lt_digits(a, b),
        CmpKind::Eq => lw.eq_digits(a, b),
    }
}

/// Conditional subtraction of `q` from the carry-extended sum of two
/// residues.
pub fn lower_mod_after_add(lw: &mut Lowerer, sum: &Digits, q: &Digits) -> Digits {
    let width = q.width;
    modular::reduce_after_add(lw, sum, q, width)
}

pub fn lower_modsub(lw: &mut Lowerer, a: &Digits, b: &Digits, q: &Digits) -> Digits {
    let width = q.width;
    modular::sub_mod(lw, a, b, q, width)
}

/// Full product with the lowerer's strategy.
pub fn lower_mul_dd(lw: &mut Lowerer, a: &Digits, b: &Digits) -> Digits {
    lw.mul_digits(a, b)
}

/// `floor(src / 2^s)` truncated to `width` bits.
pub fn lower_shr_mw(lw: &mut Lowerer, src: &Digits, s: u32, width: u32) -> Result<Digits, RewriteError> {
    if s >= src.width {
        return Err(RewriteError::ShiftOutOfRange { shift: s, width: src.width });
    }
    Ok(lw.shr_digits(src, s, width))
}

/// Barrett modular multiplication on digits; `q` and `mu` are emitted as
/// constants.
pub fn lower_modmul_barrett(lw: &mut Lowerer, a: &Digits, b: &Digits, params: &BarrettParams) -> Digits {
    let width = a.width.max(b.width);
    let q = lw.constant_digits(&params.q, width);
    let mu = lw.constant_digits(&params.mu, width);
    let shifts = BarrettShifts { shift1: params.shift1, shift2: params.shift2 };
    modular::mul_mod_barrett(lw, a, b, &q, &mu, shifts, width)
}
