//! Source generation for lowered programs: portable C with an optional
//! self-test harness, CUDA kernels, and the JSON manifest describing both.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::ir::{join_words, split_words, validate, Instr, Op, Port, Program, VarId};

pub mod c;
pub mod cuda;
pub mod host;
pub mod manifest;

pub use c::emit_c;
pub use cuda::{emit_cuda, LaunchSpec};
pub use manifest::{emit_manifest, Manifest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Language {
    C,
    Cuda,
}

impl Language {
    pub fn name(self) -> &'static str {
        match self {
            Language::C => "c",
            Language::Cuda => "cuda",
        }
    }
}

impl std::str::FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "c" => Ok(Language::C),
            "cuda" => Ok(Language::Cuda),
            _ => Err(format!("unknown target `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmitTarget {
    pub language: Language,
    pub word_type_width: u32,
    /// A `2 * omega0` type exists (`unsigned __int128` for 64-bit words).
    pub has_double_word: bool,
    pub function: String,
    /// Independent problems per launch (CUDA grid y dimension).
    pub batch: Option<u32>,
    /// Append a `main` reading hex test vectors from stdin (C only).
    pub self_test: bool,
}

impl EmitTarget {
    pub fn c(word: u32, function: &str) -> Self {
        EmitTarget {
            language: Language::C,
            word_type_width: word,
            has_double_word: true,
            function: function.into(),
            batch: None,
            self_test: false,
        }
    }

    pub fn cuda(word: u32, function: &str) -> Self {
        EmitTarget { language: Language::Cuda, ..Self::c(word, function) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmitError {
    #[error("target mismatch: {var} has {width} bits, {detail}")]
    TargetMismatch { var: String, width: u32, detail: String },
    #[error("launch of {threads} threads per block exceeds 1024")]
    LaunchTooWide { threads: u64 },
    #[error("cannot emit program: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, EmitError>;

fn type_name(bits: u32) -> &'static str {
    match bits {
        8 => "uint8_t",
        16 => "uint16_t",
        32 => "uint32_t",
        64 => "uint64_t",
        _ => "unsigned __int128",
    }
}

/// Storage and arithmetic types of one program under one target.
pub(crate) struct Types {
    word: u32,
    double: Option<u32>,
}

impl Types {
    pub(crate) fn new(target: &EmitTarget) -> Result<Self> {
        let word = target.word_type_width;
        if !matches!(word, 8 | 16 | 32 | 64) {
            return Err(EmitError::Invalid(format!("unsupported word width {word}")));
        }
        Ok(Types { word, double: target.has_double_word.then_some(2 * word) })
    }

    fn storage_bits(&self, width: u32) -> Option<u32> {
        if width <= self.word {
            Some(self.word)
        } else {
            self.double.filter(|&d| width <= d)
        }
    }

    pub(crate) fn word_type(&self) -> &'static str {
        type_name(self.word)
    }

    /// Rejects programs with vars no target type can hold.
    pub(crate) fn check(&self, program: &Program) -> Result<()> {
        for v in &program.vars {
            if self.storage_bits(v.width).is_none() {
                let detail = match self.double {
                    Some(d) => format!("wider than the {d}-bit double word"),
                    None => format!("wider than the {}-bit word and the target has no double word", self.word),
                };
                return Err(EmitError::TargetMismatch { var: v.name.clone(), width: v.width, detail });
            }
        }
        Ok(())
    }

    pub(crate) fn storage(&self, width: u32) -> &'static str {
        type_name(self.storage_bits(width).expect("checked"))
    }

    pub(crate) fn widest(&self, program: &Program) -> u32 {
        program.vars.iter().map(|v| self.storage_bits(v.width).expect("checked")).max().unwrap_or(self.word)
    }
}

/// A literal of `value` in the unsigned type of `bits` bits.
fn literal(value: &BigUint, bits: u32) -> String {
    let ty = type_name(bits);
    let mask64 = (BigUint::from(1u8) << 64) - 1u8;
    if value.bits() <= 64 {
        format!("(({ty})0x{value:x}ull)")
    } else {
        let hi = value >> 64;
        let lo = value & &mask64;
        format!("((({ty})0x{hi:x}ull << 64) | ({ty})0x{lo:x}ull)")
    }
}

/// Comma-separated word literals of `value`, MSW first, for array
/// initializers.
pub(crate) fn literal_words(value: &BigUint, word: u32, count: usize) -> String {
    split_words(value, word, count as u32).iter().map(|w| format!("0x{w:x}u")).collect::<Vec<_>>().join(", ")
}

fn mask(width: u32, bits: u32) -> Option<String> {
    (width < bits).then(|| literal(&((BigUint::from(1u8) << width) - 1u8), bits))
}

/// C identifiers for every var: the var name with invalid characters
/// replaced, disambiguated by index when that collides.
pub(crate) fn identifiers(program: &Program) -> Vec<String> {
    let mut seen = BTreeSet::new();
    program
        .vars
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let clean: String =
                v.name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' }).collect();
            let mut id = format!("v_{clean}");
            if !seen.insert(id.clone()) {
                id = format!("v{i}_{clean}");
                seen.insert(id.clone());
            }
            id
        })
        .collect()
}

/// Input words in port order, MSW first within each port.
pub(crate) fn input_words(program: &Program) -> Result<Vec<VarId>> {
    let words: Vec<VarId> = program.ports.inputs.iter().flat_map(|p| p.words.iter().copied()).collect();
    let declared: BTreeSet<VarId> = program.inputs.iter().copied().collect();
    let covered: BTreeSet<VarId> = words.iter().copied().collect();
    if declared != covered || words.len() != program.inputs.len() {
        return Err(EmitError::Invalid("input ports do not cover the inputs exactly".into()));
    }
    Ok(words)
}

pub(crate) fn output_words(program: &Program) -> Vec<VarId> {
    program.ports.outputs.iter().flat_map(|p| p.words.iter().copied()).collect()
}

/// Emits the straight-line statements of `program`, one per instruction,
/// each indented by `indent`.
pub(crate) fn statements(program: &Program, types: &Types, ids: &[String], indent: &str) -> String {
    let mut out = String::new();
    for instr in &program.body {
        let dest = instr.dest;
        let ty = types.storage(program.width(dest));
        let expr = expression(program, types, ids, instr);
        writeln!(out, "{indent}const {ty} {} = ({ty})({expr});", ids[dest.index()]).unwrap();
    }
    out
}

fn expression(program: &Program, types: &Types, ids: &[String], instr: &Instr) -> String {
    let width = program.width(instr.dest);
    let widths: Vec<u32> = instr.args.iter().map(|&a| program.width(a)).collect();
    let calc = instr
        .args
        .iter()
        .chain(std::iter::once(&instr.dest))
        .map(|&v| types.storage_bits(program.width(v)).expect("checked"))
        .max()
        .unwrap_or(types.word)
        .max(32);
    let ty = type_name(calc);
    let arg = |k: usize| format!("({ty}){}", ids[instr.args[k].index()]);
    let all = |sep: &str| (0..instr.args.len()).map(arg).collect::<Vec<_>>().join(sep);
    let masked = |e: String| match mask(width, calc) {
        Some(m) => format!("({e}) & {m}"),
        None => e,
    };
    match &instr.op {
        Op::Const(c) => literal(c, calc),
        Op::Add => masked(all(" + ")),
        Op::Sub => masked(all(" - ")),
        Op::Mul => all(" * "),
        Op::And => all(" & "),
        Op::Or => all(" | "),
        Op::Shl(s) | Op::Shr(s) if *s >= calc => literal(&BigUint::zero(), calc),
        Op::Shl(s) => masked(format!("{} << {s}", arg(0))),
        Op::Shr(s) => masked(format!("{} >> {s}", arg(0))),
        Op::Lt => format!("{} < {}", arg(0), arg(1)),
        Op::Eq => format!("{} == {}", arg(0), arg(1)),
        Op::Select => format!(
            "{} ? {} : {}",
            ids[instr.args[0].index()],
            ids[instr.args[1].index()],
            ids[instr.args[2].index()]
        ),
        Op::ExtractHi => format!("{} >> {}", arg(0), widths[0] - width),
        Op::ExtractLo => masked(arg(0)),
        Op::Concat => format!("({} << {}) | {}", arg(0), widths[1], arg(1)),
    }
}

pub(crate) fn checked(program: &Program, target: &EmitTarget) -> Result<Types> {
    let diags = validate(program);
    if !diags.is_empty() {
        let text: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
        return Err(EmitError::Invalid(text.join("; ")));
    }
    let types = Types::new(target)?;
    types.check(program)?;
    Ok(types)
}

fn port_stride(program: &Program, port: &Port) -> u32 {
    port.words.last().map(|&w| program.width(w)).unwrap_or(1)
}

/// One self-test line: every input port value split into its words, hex,
/// MSW first, space-separated.
pub fn format_test_vector(program: &Program, values: &[BigUint]) -> String {
    let mut words = Vec::new();
    for (port, value) in program.ports.inputs.iter().zip(values) {
        let stride = port_stride(program, port);
        for w in split_words(value, stride, port.words.len() as u32) {
            words.push(format!("{w:x}"));
        }
    }
    words.join(" ")
}

/// Parses a self-test output line back into one value per output port.
pub fn parse_test_output(program: &Program, line: &str) -> Option<Vec<BigUint>> {
    let words: Vec<BigUint> =
        line.split_whitespace().map(|t| BigUint::parse_bytes(t.as_bytes(), 16)).collect::<Option<_>>()?;
    let mut out = Vec::new();
    let mut at = 0;
    for port in &program.ports.outputs {
        let k = port.words.len();
        let chunk = words.get(at..at + k)?;
        out.push(join_words(chunk, port_stride(program, port)));
        at += k;
    }
    (at == words.len()).then_some(out)
}
