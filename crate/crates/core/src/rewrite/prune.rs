use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::ir::{eval_op, Instr, Op, Program, VarId};

/// Input words lying entirely above their port's logical width, plus every
/// constant zero word. These are the seeds the pruning pass starts from.
pub fn zero_words_of(program: &Program) -> BTreeSet<VarId> {
    let mut set = BTreeSet::new();
    for port in &program.ports.inputs {
        let mut below = 0u32;
        for &w in port.words.iter().rev() {
            if below >= port.width {
                set.insert(w);
            }
            below += program.width(w);
        }
    }
    for instr in &program.body {
        if matches!(&instr.op, Op::Const(v) if v.is_zero()) {
            set.insert(instr.dest);
        }
    }
    set
}

fn bits(v: &BigUint) -> u32 {
    v.bits() as u32
}

/// Bits an input word can actually carry given its port's logical width.
fn input_bounds(program: &Program) -> Vec<Option<u32>> {
    let mut bound = vec![None; program.vars.len()];
    for port in &program.ports.inputs {
        let mut below = 0u32;
        for &w in port.words.iter().rev() {
            let width = program.width(w);
            bound[w.index()] = Some(port.width.saturating_sub(below).min(width));
            below += width;
        }
    }
    bound
}

struct Pass<'a> {
    p: &'a Program,
    konst: Vec<Option<BigUint>>,
    bound: Vec<u32>,
    def: Vec<Option<Op>>,
    def_args: Vec<Vec<VarId>>,
    subst: Vec<VarId>,
    outputs: BTreeSet<VarId>,
    body: Vec<Instr>,
}

enum Outcome {
    Keep(Op, Vec<VarId>),
    Alias(VarId),
    Const(BigUint),
}

impl Pass<'_> {
    fn width(&self, v: VarId) -> u32 {
        self.p.width(v)
    }

    fn is_zero(&self, v: VarId) -> bool {
        self.bound[v.index()] == 0
    }

    /// The var a zero extension or lossless truncation was taken from.
    fn look_through(&self, mut v: VarId) -> VarId {
        while let Some(Op::ExtractLo) = &self.def[v.index()] {
            let src = self.def_args[v.index()][0];
            if self.bound[src.index()] <= self.width(v) {
                v = src;
            } else {
                break;
            }
        }
        v
    }

    fn resize_or_alias(&self, dest: VarId, x: VarId) -> Outcome {
        if self.width(x) == self.width(dest) && !self.outputs.contains(&dest) {
            Outcome::Alias(x)
        } else {
            Outcome::Keep(Op::ExtractLo, vec![x])
        }
    }

    fn simplify(&self, op: &Op, args: &[VarId], dest: VarId) -> Outcome {
        let w = self.width(dest);
        if !matches!(op, Op::Const(_)) && args.iter().all(|a| self.konst[a.index()].is_some()) {
            let vals: Vec<BigUint> = args.iter().map(|a| self.konst[a.index()].clone().unwrap()).collect();
            let widths: Vec<u32> = args.iter().map(|&a| self.width(a)).collect();
            return Outcome::Const(eval_op(op, &vals, &widths, w));
        }
        let b = |k: usize| self.bound[args[k].index()];
        let konst = |k: usize| self.konst[args[k].index()].as_ref();
        match op {
            Op::Const(v) => Outcome::Const(v.clone()),
            Op::Add => {
                let rest: Vec<VarId> = args.iter().copied().filter(|&a| !self.is_zero(a)).collect();
                match rest.len() {
                    0 => Outcome::Const(BigUint::zero()),
                    1 => self.resize_or_alias(dest, rest[0]),
                    _ => Outcome::Keep(Op::Add, rest.iter().map(|&a| self.look_through(a)).collect()),
                }
            }
            Op::Sub => {
                let mut rest = vec![args[0]];
                rest.extend(args[1..].iter().copied().filter(|&a| !self.is_zero(a)));
                if rest.len() == 1 {
                    self.resize_or_alias(dest, rest[0])
                } else {
                    Outcome::Keep(Op::Sub, rest.iter().map(|&a| self.look_through(a)).collect())
                }
            }
            Op::Or => {
                let rest: Vec<VarId> = args.iter().copied().filter(|&a| !self.is_zero(a)).collect();
                match rest.len() {
                    0 => Outcome::Const(BigUint::zero()),
                    1 => self.resize_or_alias(dest, rest[0]),
                    _ if rest.len() < args.len() => {
                        // the widest operand may have been dropped
                        let widest = rest.iter().map(|&a| self.width(a)).max().unwrap();
                        if widest == w {
                            Outcome::Keep(Op::Or, rest)
                        } else {
                            Outcome::Keep(Op::Or, args.to_vec())
                        }
                    }
                    _ => Outcome::Keep(Op::Or, rest),
                }
            }
            Op::Lt => {
                if self.is_zero(args[1]) {
                    return Outcome::Const(BigUint::zero());
                }
                // every value of a is below the constant b
                if let Some(y) = konst(1) {
                    if bits(y) > b(0) {
                        return Outcome::Const(BigUint::one());
                    }
                }
                // the constant a is at least every value of b
                if let Some(x) = konst(0) {
                    if bits(x) > b(1) {
                        return Outcome::Const(BigUint::zero());
                    }
                }
                Outcome::Keep(Op::Lt, args.iter().map(|&a| self.look_through(a)).collect())
            }
            Op::Eq => {
                for (k, other) in [(0, 1), (1, 0)] {
                    if let Some(x) = konst(k) {
                        if bits(x) > b(other) {
                            return Outcome::Const(BigUint::zero());
                        }
                    }
                }
                Outcome::Keep(Op::Eq, args.iter().map(|&a| self.look_through(a)).collect())
            }
            Op::Select => {
                if let Some(c) = konst(0) {
                    return Outcome::Alias(if c.is_zero() { args[2] } else { args[1] })
                        .or_copy(self, dest);
                }
                if args[1] == args[2] {
                    return Outcome::Alias(args[1]).or_copy(self, dest);
                }
                Outcome::Keep(Op::Select, args.to_vec())
            }
            Op::Shl(_) | Op::Shr(_) => Outcome::Keep(op.clone(), vec![self.look_through(args[0])]),
            Op::ExtractLo => {
                let src = self.look_through(args[0]);
                if self.width(src) == w && self.bound[src.index()] <= w {
                    return Outcome::Alias(src).or_copy(self, dest);
                }
                Outcome::Keep(Op::ExtractLo, vec![src])
            }
            Op::Concat => {
                if self.is_zero(args[0]) {
                    return Outcome::Keep(Op::ExtractLo, vec![self.look_through(args[1])]);
                }
                Outcome::Keep(Op::Concat, args.to_vec())
            }
            Op::Mul | Op::And | Op::ExtractHi => Outcome::Keep(op.clone(), args.to_vec()),
        }
    }

    /// Upper bound on the bit length of the result.
    fn result_bound(&self, op: &Op, args: &[VarId], w: u32) -> u32 {
        let b: Vec<u32> = args.iter().map(|a| self.bound[a.index()]).collect();
        let r = match op {
            Op::Const(v) => bits(v),
            Op::Add => {
                let total = b.iter().fold(BigUint::zero(), |acc, &x| acc + ((BigUint::one() << x) - 1u32));
                bits(&total)
            }
            Op::Sub => {
                if b[1..].iter().all(|&x| x == 0) {
                    b[0]
                } else {
                    w
                }
            }
            Op::Mul => {
                if b.contains(&0) {
                    0
                } else {
                    b[0] + b[1]
                }
            }
            Op::Shl(s) => {
                if b[0] == 0 {
                    0
                } else {
                    b[0].saturating_add(*s)
                }
            }
            Op::Shr(s) => b[0].saturating_sub(*s),
            Op::And => b.iter().copied().min().unwrap_or(0),
            Op::Or => b.iter().copied().max().unwrap_or(0),
            Op::Lt | Op::Eq => 1,
            Op::Select => b[1].max(b[2]),
            Op::ExtractLo => b[0],
            Op::ExtractHi => b[0].saturating_sub(self.width(args[0]) - w),
            Op::Concat => {
                if b[0] == 0 {
                    b[1]
                } else {
                    self.width(args[1]) + b[0]
                }
            }
        };
        r.min(w)
    }
}

impl Outcome {
    fn or_copy(self, pass: &Pass<'_>, dest: VarId) -> Outcome {
        match self {
            Outcome::Alias(x) if pass.outputs.contains(&dest) || pass.width(x) != pass.width(dest) => {
                Outcome::Keep(Op::ExtractLo, vec![x])
            }
            other => other,
        }
    }
}

fn run_pass(p: &Program, seeds: &BTreeSet<VarId>) -> Program {
    let n = p.vars.len();
    let mut pass = Pass {
        p,
        konst: vec![None; n],
        bound: p.vars.iter().map(|v| v.width).collect(),
        def: vec![None; n],
        def_args: vec![Vec::new(); n],
        subst: (0..n as u32).map(VarId).collect(),
        outputs: p.outputs.iter().copied().collect(),
        body: Vec::with_capacity(p.body.len()),
    };
    for (i, b) in input_bounds(p).into_iter().enumerate() {
        if let Some(b) = b {
            pass.bound[i] = b;
        }
    }
    let mut zero_inputs = Vec::new();
    for &s in seeds {
        if p.inputs.contains(&s) {
            zero_inputs.push(s);
        }
    }
    for &s in &zero_inputs {
        pass.bound[s.index()] = 0;
        pass.konst[s.index()] = Some(BigUint::zero());
    }
    for instr in &p.body {
        let args: Vec<VarId> = instr.args.iter().map(|a| pass.subst[a.index()]).collect();
        let dest = instr.dest;
        let w = p.width(dest);
        let mut outcome = pass.simplify(&instr.op, &args, dest);
        if let Outcome::Keep(op, a) = &outcome {
            if pass.result_bound(op, a, w) == 0 {
                outcome = Outcome::Const(BigUint::zero());
            }
        }
        match outcome {
            Outcome::Alias(x) => {
                pass.subst[dest.index()] = x;
            }
            Outcome::Const(v) => {
                pass.bound[dest.index()] = bits(&v);
                pass.konst[dest.index()] = Some(v.clone());
                pass.def[dest.index()] = Some(Op::Const(v.clone()));
                pass.body.push(Instr { op: Op::Const(v), dest, args: vec![] });
            }
            Outcome::Keep(op, a) => {
                pass.bound[dest.index()] = pass.result_bound(&op, &a, w);
                pass.def[dest.index()] = Some(op.clone());
                pass.def_args[dest.index()] = a.clone();
                pass.body.push(Instr { op, dest, args: a });
            }
        }
    }
    let mut out = p.clone();
    out.body = pass.body;
    rewrite_zero_input_uses(&mut out, &zero_inputs);
    out.eliminate_dead_code();
    out.compact();
    out
}

/// Uses of zero-seeded inputs that survived simplification (as operands of
/// kept instructions) are redirected to an explicit zero constant.
fn rewrite_zero_input_uses(p: &mut Program, zero_inputs: &[VarId]) {
    let used: Vec<VarId> = zero_inputs
        .iter()
        .copied()
        .filter(|z| p.body.iter().any(|i| i.args.contains(z)))
        .collect();
    if used.is_empty() {
        return;
    }
    let mut consts = Vec::new();
    for &z in &used {
        let name = format!("{}_zero", p.name_of(z));
        let mut unique = name.clone();
        let mut k = 1;
        while p.find(&unique).is_some() {
            unique = format!("{name}_{k}");
            k += 1;
        }
        let id = VarId(p.vars.len() as u32);
        p.vars.push(crate::ir::Var { name: unique, width: p.width(z) });
        consts.push((z, id));
    }
    for instr in &mut p.body {
        for a in &mut instr.args {
            if let Some((_, c)) = consts.iter().find(|(z, _)| z == a) {
                *a = *c;
            }
        }
    }
    let prefix: Vec<Instr> =
        consts.iter().map(|&(_, c)| Instr { op: Op::Const(BigUint::zero()), dest: c, args: vec![] }).collect();
    p.body.splice(0..0, prefix);
}

/// Constant-propagates statically zero words through the program.
///
/// Seeds are input words assumed zero; constant instructions and the
/// logical port widths contribute as well. The pass folds constants, drops
/// zero addends, zero products and zero carries, resolves selects on known
/// conditions and removes dead code, repeating until nothing changes. With
/// an empty seed set the program is returned unchanged.
pub fn prune_zero_words(program: &Program, known_zero: &BTreeSet<VarId>) -> Program {
    if known_zero.is_empty() {
        return program.clone();
    }
    let mut current = run_pass(program, known_zero);
    let seeds: BTreeSet<VarId> = known_zero
        .iter()
        .filter(|z| program.inputs.contains(z))
        .filter_map(|z| current.find(program.name_of(*z)))
        .collect();
    loop {
        let next = run_pass(&current, &seeds);
        if next == current {
            return current;
        }
        current = next;
    }
}
