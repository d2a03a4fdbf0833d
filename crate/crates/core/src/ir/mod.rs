//! Typed straight-line IR over fixed-width unsigned integers.
//!
//! A [`Program`] is a list of single-assignment instructions. Every variable
//! carries a bit width; width 1 variables double as carry, borrow and
//! comparison flags. There are no branches: conditional assignment is a
//! [`Op::Select`].

mod cost;
mod interp;
mod json;
mod validate;

pub use cost::{count_ops, OpCounts, WidthClass};
pub(crate) use interp::eval_op;
pub use interp::{interpret, run_ports, InterpError};
pub use json::ProgramJson;
pub use validate::{validate, Diagnostic};

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Bit-width bookkeeping for a wide operand split into machine words.
///
/// Word 0 is the most significant digit: `x = x_0 z^(k-1) + ... + x_(k-1)`
/// with base `z = 2^omega0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordLayout {
    pub lambda: u32,
    pub omega0: u32,
}

impl WordLayout {
    pub fn new(lambda: u32, omega0: u32) -> Self {
        Self { lambda, omega0 }
    }

    /// Number of machine words needed for a `lambda`-bit value.
    pub fn words(&self) -> u32 {
        self.lambda.div_ceil(self.omega0)
    }

    /// Width the rewrite recursion operates on: the word count rounded up to
    /// a power of two.
    pub fn padded_width(&self) -> u32 {
        self.words().next_power_of_two() * self.omega0
    }

    /// Number of halving steps from the padded width down to the machine word.
    pub fn depth(&self) -> u32 {
        self.words().next_power_of_two().trailing_zeros()
    }

    /// Words of a padded value that are always zero, counted from the most
    /// significant end.
    pub fn zero_words(&self) -> u32 {
        self.words().next_power_of_two() - self.words()
    }

    /// MSW-first word decomposition of `value` over `count` words.
    pub fn split(&self, value: &BigUint, count: u32) -> Vec<BigUint> {
        split_words(value, self.omega0, count)
    }
}

/// MSW-first decomposition of `value` into `count` words of `word` bits.
pub fn split_words(value: &BigUint, word: u32, count: u32) -> Vec<BigUint> {
    let mask = (BigUint::from(1u32) << word) - 1u32;
    (0..count).rev().map(|i| (value >> (i * word)) & &mask).collect()
}

/// Inverse of [`split_words`].
pub fn join_words(words: &[BigUint], word: u32) -> BigUint {
    words.iter().fold(BigUint::default(), |acc, w| (acc << word) | w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Var {
    pub name: String,
    pub width: u32,
}

/// Instruction kind, without payload. Used for op counting and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    Const,
    Add,
    Sub,
    Mul,
    Shl,
    Shr,
    And,
    Or,
    Lt,
    Eq,
    Select,
    ExtractHi,
    ExtractLo,
    Concat,
}

impl OpKind {
    pub const ALL: [OpKind; 14] = [
        OpKind::Const,
        OpKind::Add,
        OpKind::Sub,
        OpKind::Mul,
        OpKind::Shl,
        OpKind::Shr,
        OpKind::And,
        OpKind::Or,
        OpKind::Lt,
        OpKind::Eq,
        OpKind::Select,
        OpKind::ExtractHi,
        OpKind::ExtractLo,
        OpKind::Concat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Const => "const",
            OpKind::Add => "add",
            OpKind::Sub => "sub",
            OpKind::Mul => "mul",
            OpKind::Shl => "shl",
            OpKind::Shr => "shr",
            OpKind::And => "and",
            OpKind::Or => "or",
            OpKind::Lt => "lt",
            OpKind::Eq => "eq",
            OpKind::Select => "select",
            OpKind::ExtractHi => "extract_hi",
            OpKind::ExtractLo => "extract_lo",
            OpKind::Concat => "concat",
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Instruction semantics, for a destination of width `W`:
///
/// * `Add` sums all operands. The sum must fit `W` (checked in strict mode,
///   reduced mod `2^W` otherwise).
/// * `Sub` computes `a - b - ...` mod `2^W`.
/// * `Mul` is the exact product; `W` is the sum of the operand widths.
/// * `Shl`/`Shr` shift by a constant and reduce mod `2^W`.
/// * `Lt`/`Eq` produce 1 or 0.
/// * `Select(c, a, b)` is `a` when `c != 0`, else `b`.
/// * `ExtractHi(a)` keeps the top `W` bits of `a`, `ExtractLo(a)` is
///   `a mod 2^W` (and doubles as zero extension when `W` exceeds `a`).
/// * `Concat(hi, lo)` is `hi * 2^width(lo) + lo`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Op {
    Const(BigUint),
    Add,
    Sub,
    Mul,
    Shl(u32),
    Shr(u32),
    And,
    Or,
    Lt,
    Eq,
    Select,
    ExtractHi,
    ExtractLo,
    Concat,
}

impl Op {
    pub fn kind(&self) -> OpKind {
        match self {
            Op::Const(_) => OpKind::Const,
            Op::Add => OpKind::Add,
            Op::Sub => OpKind::Sub,
            Op::Mul => OpKind::Mul,
            Op::Shl(_) => OpKind::Shl,
            Op::Shr(_) => OpKind::Shr,
            Op::And => OpKind::And,
            Op::Or => OpKind::Or,
            Op::Lt => OpKind::Lt,
            Op::Eq => OpKind::Eq,
            Op::Select => OpKind::Select,
            Op::ExtractHi => OpKind::ExtractHi,
            Op::ExtractLo => OpKind::ExtractLo,
            Op::Concat => OpKind::Concat,
        }
    }

    pub fn shift(&self) -> Option<u32> {
        match self {
            Op::Shl(s) | Op::Shr(s) => Some(*s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instr {
    pub op: Op,
    pub dest: VarId,
    pub args: Vec<VarId>,
}

/// A named group of variables that together carry one logical value,
/// MSW first. Before lowering every port holds a single variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Port {
    pub name: String,
    pub width: u32,
    pub words: Vec<VarId>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ports {
    pub inputs: Vec<Port>,
    pub outputs: Vec<Port>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub name: String,
    pub vars: Vec<Var>,
    pub inputs: Vec<VarId>,
    pub outputs: Vec<VarId>,
    pub body: Vec<Instr>,
    pub ports: Ports,
    pub attributes: BTreeMap<String, String>,
}

impl Program {
    pub fn var(&self, id: VarId) -> &Var {
        &self.vars[id.index()]
    }

    pub fn width(&self, id: VarId) -> u32 {
        self.vars[id.index()].width
    }

    pub fn name_of(&self, id: VarId) -> &str {
        &self.vars[id.index()].name
    }

    pub fn find(&self, name: &str) -> Option<VarId> {
        self.vars.iter().position(|v| v.name == name).map(|i| VarId(i as u32))
    }

    pub fn max_width(&self) -> u32 {
        self.vars.iter().map(|v| v.width).max().unwrap_or(0)
    }

    pub fn input_port(&self, name: &str) -> Option<&Port> {
        self.ports.inputs.iter().find(|p| p.name == name)
    }

    /// Renames every variable through `f`. Widths and structure are kept.
    pub fn rename_vars(&self, mut f: impl FnMut(&str) -> String) -> Program {
        let mut out = self.clone();
        for v in &mut out.vars {
            v.name = f(&v.name);
        }
        out
    }

    /// Removes instructions whose results never reach an output.
    pub fn eliminate_dead_code(&mut self) {
        let mut live = vec![false; self.vars.len()];
        for &o in &self.outputs {
            live[o.index()] = true;
        }
        let mut keep = vec![false; self.body.len()];
        for (i, instr) in self.body.iter().enumerate().rev() {
            if live[instr.dest.index()] {
                keep[i] = true;
                for a in &instr.args {
                    live[a.index()] = true;
                }
            }
        }
        let mut index = 0;
        self.body.retain(|_| {
            index += 1;
            keep[index - 1]
        });
    }

    /// Drops variables that are neither inputs, outputs nor assigned, and
    /// renumbers the rest densely.
    pub fn compact(&mut self) {
        let mut used = vec![false; self.vars.len()];
        for id in self.inputs.iter().chain(&self.outputs) {
            used[id.index()] = true;
        }
        for instr in &self.body {
            used[instr.dest.index()] = true;
            for a in &instr.args {
                used[a.index()] = true;
            }
        }
        for port in self.ports.inputs.iter().chain(&self.ports.outputs) {
            for w in &port.words {
                used[w.index()] = true;
            }
        }
        let mut remap = vec![VarId(u32::MAX); self.vars.len()];
        let mut vars = Vec::new();
        for (i, var) in self.vars.iter().enumerate() {
            if used[i] {
                remap[i] = VarId(vars.len() as u32);
                vars.push(var.clone());
            }
        }
        let map = |id: &mut VarId| *id = remap[id.index()];
        self.inputs.iter_mut().for_each(map);
        self.outputs.iter_mut().for_each(map);
        for instr in &mut self.body {
            map(&mut instr.dest);
            instr.args.iter_mut().for_each(map);
        }
        for port in self.ports.inputs.iter_mut().chain(self.ports.outputs.iter_mut()) {
            port.words.iter_mut().for_each(map);
        }
        self.vars = vars;
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ids: &[VarId]| {
            ids.iter()
                .map(|&v| format!("{}:{}", self.name_of(v), self.width(v)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(f, "program {}({}) -> ({})", self.name, list(&self.inputs), list(&self.outputs))?;
        for instr in &self.body {
            let args: Vec<&str> = instr.args.iter().map(|&a| self.name_of(a)).collect();
            let extra = match &instr.op {
                Op::Const(v) => format!(" {v}"),
                Op::Shl(s) | Op::Shr(s) => format!(" #{s}"),
                _ => String::new(),
            };
            writeln!(
                f,
                "  {}:{} = {}{} {}",
                self.name_of(instr.dest),
                self.width(instr.dest),
                instr.op.kind(),
                extra,
                args.join(", ")
            )?;
        }
        Ok(())
    }
}

/// Incremental construction of a [`Program`] with unique variable names.
#[derive(Debug, Clone)]
pub struct ProgramBuilder {
    program: Program,
    names: HashSet<String>,
    temp: usize,
}

impl ProgramBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            program: Program {
                name: name.into(),
                vars: Vec::new(),
                inputs: Vec::new(),
                outputs: Vec::new(),
                body: Vec::new(),
                ports: Ports::default(),
                attributes: BTreeMap::new(),
            },
            names: HashSet::new(),
            temp: 0,
        }
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn width(&self, id: VarId) -> u32 {
        self.program.width(id)
    }

    /// Declares a fresh variable. The name is made unique by appending a
    /// counter when `base` is taken.
    pub fn var(&mut self, base: &str, width: u32) -> VarId {
        let mut name = base.to_string();
        let mut n = 1;
        while self.names.contains(&name) {
            name = format!("{base}_{n}");
            n += 1;
        }
        self.names.insert(name.clone());
        let id = VarId(self.program.vars.len() as u32);
        self.program.vars.push(Var { name, width });
        id
    }

    fn temp(&mut self, width: u32) -> VarId {
        loop {
            let name = format!("t{}", self.temp);
            self.temp += 1;
            if !self.names.contains(&name) {
                return self.var(&name, width);
            }
        }
    }

    /// Declares an input variable without attaching it to a port.
    pub fn input_var(&mut self, name: &str, width: u32) -> VarId {
        let id = self.var(name, width);
        self.program.inputs.push(id);
        id
    }

    /// Appends `var` to the output list without attaching it to a port.
    pub fn mark_output(&mut self, var: VarId) {
        self.program.outputs.push(var);
    }

    pub fn ports_mut(&mut self) -> &mut Ports {
        &mut self.program.ports
    }

    pub fn attributes_mut(&mut self) -> &mut BTreeMap<String, String> {
        &mut self.program.attributes
    }

    /// Declares a single-variable input port.
    pub fn input(&mut self, name: &str, width: u32) -> VarId {
        let id = self.var(name, width);
        self.program.inputs.push(id);
        self.program.ports.inputs.push(Port { name: name.into(), width, words: vec![id] });
        id
    }

    /// Declares an input port made of several word variables, MSW first.
    pub fn input_port(&mut self, name: &str, width: u32, words: &[(String, u32)]) -> Vec<VarId> {
        let ids: Vec<VarId> = words.iter().map(|(n, w)| self.var(n, *w)).collect();
        self.program.inputs.extend(&ids);
        self.program.ports.inputs.push(Port { name: name.into(), width, words: ids.clone() });
        ids
    }

    pub fn output(&mut self, name: &str, var: VarId) {
        let width = self.width(var);
        self.output_port(name, width, &[var]);
    }

    pub fn output_port(&mut self, name: &str, width: u32, words: &[VarId]) {
        self.program.outputs.extend(words);
        self.program.ports.outputs.push(Port { name: name.into(), width, words: words.to_vec() });
    }

    /// Appends `dest = op(args)` into a new temporary of `width` bits.
    pub fn push(&mut self, op: Op, args: &[VarId], width: u32) -> VarId {
        let dest = self.temp(width);
        self.push_into(op, args, dest);
        dest
    }

    /// Appends `dest = op(args)` into a variable named after `hint`.
    pub fn push_named(&mut self, hint: &str, op: Op, args: &[VarId], width: u32) -> VarId {
        let dest = self.var(hint, width);
        self.push_into(op, args, dest);
        dest
    }

    pub fn push_into(&mut self, op: Op, args: &[VarId], dest: VarId) {
        self.program.body.push(Instr { op, dest, args: args.to_vec() });
    }

    pub fn set_attribute(&mut self, key: &str, value: impl Into<String>) {
        self.program.attributes.insert(key.into(), value.into());
    }

    pub fn finish(self) -> Program {
        self.program
    }
}

/// The arithmetic vocabulary shared by top-level kernel construction and the
/// word-level lowering. Modular building blocks are written once against this
/// trait and instantiated on either side.
pub trait Arith {
    type Val: Clone;

    fn width_of(&self, v: &Self::Val) -> u32;
    fn constant(&mut self, value: &BigUint, width: u32) -> Self::Val;
    fn add(&mut self, args: &[Self::Val], width: u32) -> Self::Val;
    /// Wrapping subtraction mod `2^width`.
    fn sub(&mut self, a: &Self::Val, b: &Self::Val, width: u32) -> Self::Val;
    fn mul(&mut self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn shr(&mut self, a: &Self::Val, amount: u32, width: u32) -> Self::Val;
    fn lt(&mut self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn select(&mut self, cond: &Self::Val, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn extract_lo(&mut self, a: &Self::Val, width: u32) -> Self::Val;
}

impl Arith for ProgramBuilder {
    type Val = VarId;

    fn width_of(&self, v: &VarId) -> u32 {
        self.width(*v)
    }

    fn constant(&mut self, value: &BigUint, width: u32) -> VarId {
        self.push(Op::Const(value.clone()), &[], width)
    }

    fn add(&mut self, args: &[VarId], width: u32) -> VarId {
        self.push(Op::Add, args, width)
    }

    fn sub(&mut self, a: &VarId, b: &VarId, width: u32) -> VarId {
        self.push(Op::Sub, &[*a, *b], width)
    }

    fn mul(&mut self, a: &VarId, b: &VarId) -> VarId {
        let width = self.width(*a) + self.width(*b);
        self.push(Op::Mul, &[*a, *b], width)
    }

    fn shr(&mut self, a: &VarId, amount: u32, width: u32) -> VarId {
        self.push(Op::Shr(amount), &[*a], width)
    }

    fn lt(&mut self, a: &VarId, b: &VarId) -> VarId {
        self.push(Op::Lt, &[*a, *b], 1)
    }

    fn select(&mut self, cond: &VarId, a: &VarId, b: &VarId) -> VarId {
        let width = self.width(*a);
        self.push(Op::Select, &[*cond, *a, *b], width)
    }

    fn extract_lo(&mut self, a: &VarId, width: u32) -> VarId {
        self.push(Op::ExtractLo, &[*a], width)
    }
}
