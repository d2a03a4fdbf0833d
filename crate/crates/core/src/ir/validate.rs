use std::collections::HashSet;
use std::fmt;

use super::{Op, Program, VarId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    ZeroWidth { var: String },
    DuplicateName { name: String },
    UnknownVar { index: usize, var: u32 },
    UseBeforeDef { index: usize, var: String },
    Reassigned { index: usize, var: String },
    AssignsInput { index: usize, var: String },
    Arity { index: usize, expected: &'static str, found: usize },
    WidthMismatch { index: usize, detail: String },
    ConstTooWide { index: usize },
    DuplicateInput { var: String },
    UndefinedOutput { var: String },
    BadPort { port: String, detail: String },
}

impl Diagnostic {
    /// Instruction index the diagnostic points at, if any.
    pub fn index(&self) -> Option<usize> {
        match self {
            Diagnostic::UnknownVar { index, .. }
            | Diagnostic::UseBeforeDef { index, .. }
            | Diagnostic::Reassigned { index, .. }
            | Diagnostic::AssignsInput { index, .. }
            | Diagnostic::Arity { index, .. }
            | Diagnostic::WidthMismatch { index, .. }
            | Diagnostic::ConstTooWide { index } => Some(*index),
            _ => None,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::ZeroWidth { var } => write!(f, "variable {var} has width 0"),
            Diagnostic::DuplicateName { name } => write!(f, "duplicate variable name {name}"),
            Diagnostic::UnknownVar { index, var } => write!(f, "UnknownVar@{index}: id {var}"),
            Diagnostic::UseBeforeDef { index, var } => write!(f, "UseBeforeDef@{index}: {var}"),
            Diagnostic::Reassigned { index, var } => write!(f, "Reassigned@{index}: {var}"),
            Diagnostic::AssignsInput { index, var } => write!(f, "AssignsInput@{index}: {var}"),
            Diagnostic::Arity { index, expected, found } => {
                write!(f, "Arity@{index}: expected {expected} operands, found {found}")
            }
            Diagnostic::WidthMismatch { index, detail } => write!(f, "WidthMismatch@{index}: {detail}"),
            Diagnostic::ConstTooWide { index } => write!(f, "ConstTooWide@{index}"),
            Diagnostic::DuplicateInput { var } => write!(f, "input {var} declared twice"),
            Diagnostic::UndefinedOutput { var } => write!(f, "output {var} is never defined"),
            Diagnostic::BadPort { port, detail } => write!(f, "port {port}: {detail}"),
        }
    }
}

fn arity(op: &Op) -> (usize, Option<usize>, &'static str) {
    match op {
        Op::Const(_) => (0, Some(0), "0"),
        Op::Add => (1, None, "at least 1"),
        Op::Sub => (2, None, "at least 2"),
        Op::And | Op::Or => (2, None, "at least 2"),
        Op::Mul | Op::Lt | Op::Eq | Op::Concat => (2, Some(2), "2"),
        Op::Select => (3, Some(3), "3"),
        Op::Shl(_) | Op::Shr(_) | Op::ExtractHi | Op::ExtractLo => (1, Some(1), "1"),
    }
}

/// Checks single assignment, definition order, operand counts and the width
/// rules of every instruction. Returns one diagnostic per violation.
pub fn validate(program: &Program) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let nvars = program.vars.len();
    let mut names = HashSet::new();
    for v in &program.vars {
        if v.width == 0 {
            out.push(Diagnostic::ZeroWidth { var: v.name.clone() });
        }
        if !names.insert(v.name.as_str()) {
            out.push(Diagnostic::DuplicateName { name: v.name.clone() });
        }
    }

    let name = |id: VarId| program.vars[id.index()].name.clone();
    let mut defined = vec![false; nvars];
    let mut is_input = vec![false; nvars];
    for &i in &program.inputs {
        if i.index() >= nvars {
            out.push(Diagnostic::BadPort { port: "inputs".into(), detail: format!("unknown id {}", i.0) });
            continue;
        }
        if is_input[i.index()] {
            out.push(Diagnostic::DuplicateInput { var: name(i) });
        }
        is_input[i.index()] = true;
        defined[i.index()] = true;
    }

    for (index, instr) in program.body.iter().enumerate() {
        let ids = std::iter::once(&instr.dest).chain(&instr.args);
        if let Some(bad) = ids.clone().find(|id| id.index() >= nvars) {
            out.push(Diagnostic::UnknownVar { index, var: bad.0 });
            continue;
        }
        for &a in &instr.args {
            if !defined[a.index()] {
                out.push(Diagnostic::UseBeforeDef { index, var: name(a) });
            }
        }
        let d = instr.dest.index();
        if is_input[d] {
            out.push(Diagnostic::AssignsInput { index, var: name(instr.dest) });
        } else if defined[d] {
            out.push(Diagnostic::Reassigned { index, var: name(instr.dest) });
        }
        defined[d] = true;

        let (min, max, expected) = arity(&instr.op);
        let n = instr.args.len();
        if n < min || max.is_some_and(|m| n > m) {
            out.push(Diagnostic::Arity { index, expected, found: n });
            continue;
        }
        let w = program.width(instr.dest);
        let wa: Vec<u32> = instr.args.iter().map(|&a| program.width(a)).collect();
        let mut mismatch = |detail: String| out.push(Diagnostic::WidthMismatch { index, detail });
        match &instr.op {
            Op::Const(v) => {
                if v.bits() > u64::from(w) {
                    out.push(Diagnostic::ConstTooWide { index });
                }
            }
            Op::Mul => {
                if w != wa[0] + wa[1] {
                    mismatch(format!("mul dest {w} != {} + {}", wa[0], wa[1]));
                }
            }
            Op::Lt | Op::Eq => {
                if w != 1 {
                    mismatch(format!("comparison dest width {w} != 1"));
                }
            }
            Op::Select => {
                if wa[0] != 1 {
                    mismatch(format!("select condition width {} != 1", wa[0]));
                }
                if wa[1] != w || wa[2] != w {
                    mismatch(format!("select arms {}/{} vs dest {w}", wa[1], wa[2]));
                }
            }
            Op::And | Op::Or => {
                let m = wa.iter().copied().max().unwrap_or(0);
                if w != m {
                    mismatch(format!("bitwise dest {w} != widest operand {m}"));
                }
            }
            Op::ExtractHi => {
                if w >= wa[0] {
                    mismatch(format!("extract_hi dest {w} not narrower than {}", wa[0]));
                }
            }
            Op::Concat => {
                if w != wa[0] + wa[1] {
                    mismatch(format!("concat dest {w} != {} + {}", wa[0], wa[1]));
                }
            }
            Op::Add | Op::Sub | Op::Shl(_) | Op::Shr(_) | Op::ExtractLo => {}
        }
    }

    for &o in &program.outputs {
        if o.index() >= nvars {
            out.push(Diagnostic::BadPort { port: "outputs".into(), detail: format!("unknown id {}", o.0) });
        } else if !defined[o.index()] {
            out.push(Diagnostic::UndefinedOutput { var: name(o) });
        }
    }
    let in_set: HashSet<VarId> = program.inputs.iter().copied().collect();
    let out_set: HashSet<VarId> = program.outputs.iter().copied().collect();
    for (ports, set) in [(&program.ports.inputs, &in_set), (&program.ports.outputs, &out_set)] {
        for port in ports {
            if port.words.iter().any(|w| !set.contains(w)) {
                out.push(Diagnostic::BadPort { port: port.name.clone(), detail: "word not declared".into() });
                continue;
            }
            let total: u32 = port.words.iter().map(|&w| program.width(w)).sum();
            if port.width > total {
                out.push(Diagnostic::BadPort {
                    port: port.name.clone(),
                    detail: format!("width {} exceeds its words ({total})", port.width),
                });
            }
        }
    }
    out
}
