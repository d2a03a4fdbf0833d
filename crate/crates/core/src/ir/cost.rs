use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{OpKind, Program};

/// Operand width class relative to the machine word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthClass {
    /// Every operand fits in one machine word.
    Word,
    /// At least one operand is wider than a machine word.
    Wide,
}

/// Static instruction counts keyed by kind and width class.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    counts: BTreeMap<OpKind, BTreeMap<WidthClass, usize>>,
}

impl OpCounts {
    pub fn get(&self, kind: OpKind, class: WidthClass) -> usize {
        self.counts.get(&kind).and_then(|m| m.get(&class)).copied().unwrap_or(0)
    }

    pub fn kind_total(&self, kind: OpKind) -> usize {
        self.counts.get(&kind).map(|m| m.values().sum()).unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().flat_map(|m| m.values()).sum()
    }

    /// Word-sized multiplications, the figure the strategy comparison is about.
    pub fn word_muls(&self) -> usize {
        self.get(OpKind::Mul, WidthClass::Word)
    }

    /// Additions and subtractions at word size.
    pub fn word_addsubs(&self) -> usize {
        self.get(OpKind::Add, WidthClass::Word) + self.get(OpKind::Sub, WidthClass::Word)
    }

    pub fn iter(&self) -> impl Iterator<Item = (OpKind, WidthClass, usize)> + '_ {
        self.counts.iter().flat_map(|(k, m)| m.iter().map(move |(c, n)| (*k, *c, *n)))
    }

    fn bump(&mut self, kind: OpKind, class: WidthClass) {
        *self.counts.entry(kind).or_default().entry(class).or_default() += 1;
    }

    pub fn add_scaled(&mut self, other: &OpCounts, times: usize) {
        for (k, c, n) in other.iter() {
            *self.counts.entry(k).or_default().entry(c).or_default() += n * times;
        }
    }
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(k, c, n)| {
                let class = match c {
                    WidthClass::Word => "w",
                    WidthClass::Wide => "W",
                };
                format!("{k}({class})={n}")
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Counts every instruction once, classed by its widest operand (the
/// destination for constants).
pub fn count_ops(program: &Program, omega0: u32) -> OpCounts {
    let mut counts = OpCounts::default();
    for instr in &program.body {
        let width = if instr.args.is_empty() {
            program.width(instr.dest)
        } else {
            instr.args.iter().map(|&a| program.width(a)).max().unwrap_or(0)
        };
        let class = if width <= omega0 { WidthClass::Word } else { WidthClass::Wide };
        counts.bump(instr.op.kind(), class);
    }
    counts
}
