use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use super::{join_words, split_words, Op, Program};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("instruction {index} overflows its {width}-bit destination")]
    WidthOverflow { index: usize, width: u32 },
    #[error("input {input} does not fit in {width} bits")]
    InputOutOfRange { input: usize, width: u32 },
    #[error("expected {expected} inputs, got {found}")]
    InputCount { expected: usize, found: usize },
}

/// Arithmetic on the value carrier. `u128` covers every program whose
/// variables are at most 128 bits wide; everything else runs on `BigUint`.
trait Value: Clone + Default {
    fn from_big(v: &BigUint) -> Self;
    fn to_big(&self) -> BigUint;
    fn bits(&self) -> u64;
    fn is_zero(&self) -> bool;
    fn flag(b: bool) -> Self;
    /// Sum of `args`; `None` when the carrier itself overflows.
    fn sum(args: &[&Self]) -> Option<Self>;
    fn sub_wrapping(a: &Self, b: &Self, width: u32) -> Self;
    fn mul(a: &Self, b: &Self) -> Self;
    fn shl(a: &Self, s: u32) -> Self;
    fn shr(a: &Self, s: u32) -> Self;
    fn and(a: &Self, b: &Self) -> Self;
    fn or(a: &Self, b: &Self) -> Self;
    fn truncate(a: &Self, width: u32) -> Self;
    fn lt(a: &Self, b: &Self) -> bool;
    fn eq(a: &Self, b: &Self) -> bool;
}

fn mask128(width: u32) -> u128 {
    if width >= 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    }
}

impl Value for u128 {
    fn from_big(v: &BigUint) -> Self {
        v.to_u128().expect("value exceeds 128 bits")
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
    fn bits(&self) -> u64 {
        u64::from(128 - self.leading_zeros())
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn flag(b: bool) -> Self {
        u128::from(b)
    }
    fn sum(args: &[&Self]) -> Option<Self> {
        args.iter().try_fold(0u128, |acc, &&x| acc.checked_add(x))
    }
    fn sub_wrapping(a: &Self, b: &Self, width: u32) -> Self {
        a.wrapping_sub(*b) & mask128(width)
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn shl(a: &Self, s: u32) -> Self {
        if s >= 128 {
            0
        } else {
            a << s
        }
    }
    fn shr(a: &Self, s: u32) -> Self {
        if s >= 128 {
            0
        } else {
            a >> s
        }
    }
    fn and(a: &Self, b: &Self) -> Self {
        a & b
    }
    fn or(a: &Self, b: &Self) -> Self {
        a | b
    }
    fn truncate(a: &Self, width: u32) -> Self {
        a & mask128(width)
    }
    fn lt(a: &Self, b: &Self) -> bool {
        a < b
    }
    fn eq(a: &Self, b: &Self) -> bool {
        a == b
    }
}

fn mask_big(width: u32) -> BigUint {
    (BigUint::one() << width) - 1u32
}

impl Value for BigUint {
    fn from_big(v: &BigUint) -> Self {
        v.clone()
    }
    fn to_big(&self) -> BigUint {
        self.clone()
    }
    fn bits(&self) -> u64 {
        BigUint::bits(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn flag(b: bool) -> Self {
        BigUint::from(u8::from(b))
    }
    fn sum(args: &[&Self]) -> Option<Self> {
        Some(args.iter().fold(BigUint::zero(), |acc, &x| acc + x))
    }
    fn sub_wrapping(a: &Self, b: &Self, width: u32) -> Self {
        let m = BigUint::one() << width;
        let b = b % &m;
        ((a % &m) + &m - b) % m
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn shl(a: &Self, s: u32) -> Self {
        a << s
    }
    fn shr(a: &Self, s: u32) -> Self {
        a >> s
    }
    fn and(a: &Self, b: &Self) -> Self {
        a & b
    }
    fn or(a: &Self, b: &Self) -> Self {
        a | b
    }
    fn truncate(a: &Self, width: u32) -> Self {
        if BigUint::bits(a) <= u64::from(width) {
            a.clone()
        } else {
            a & mask_big(width)
        }
    }
    fn lt(a: &Self, b: &Self) -> bool {
        a < b
    }
    fn eq(a: &Self, b: &Self) -> bool {
        a == b
    }
}

fn run<V: Value>(program: &Program, inputs: &[BigUint], strict: bool) -> Result<Vec<BigUint>, InterpError> {
    let mut env: Vec<V> = vec![V::default(); program.vars.len()];
    for (k, (&id, value)) in program.inputs.iter().zip(inputs).enumerate() {
        let width = program.width(id);
        if value.bits() > u64::from(width) {
            return Err(InterpError::InputOutOfRange { input: k, width });
        }
        env[id.index()] = V::from_big(value);
    }
    for (index, instr) in program.body.iter().enumerate() {
        let w = program.width(instr.dest);
        let a = |k: usize| &env[instr.args[k].index()];
        let width_of = |k: usize| program.width(instr.args[k]);
        let value = match &instr.op {
            Op::Const(c) => V::from_big(c),
            Op::Add => {
                let args: Vec<&V> = instr.args.iter().map(|x| &env[x.index()]).collect();
                match V::sum(&args) {
                    Some(s) if s.bits() <= u64::from(w) => s,
                    _ if strict => return Err(InterpError::WidthOverflow { index, width: w }),
                    Some(s) => V::truncate(&s, w),
                    // the u128 carrier itself overflowed
                    None => wrapping_sum(args.into_iter(), w),
                }
            }
            Op::Sub => {
                let mut acc = V::truncate(a(0), w);
                for k in 1..instr.args.len() {
                    acc = V::sub_wrapping(&acc, a(k), w);
                }
                acc
            }
            Op::Mul => V::mul(a(0), a(1)),
            Op::Shl(s) => V::truncate(&V::shl(a(0), *s), w),
            Op::Shr(s) => V::truncate(&V::shr(a(0), *s), w),
            Op::And => instr.args[1..].iter().fold(a(0).clone(), |acc, x| V::and(&acc, &env[x.index()])),
            Op::Or => instr.args[1..].iter().fold(a(0).clone(), |acc, x| V::or(&acc, &env[x.index()])),
            Op::Lt => V::flag(V::lt(a(0), a(1))),
            Op::Eq => V::flag(V::eq(a(0), a(1))),
            Op::Select => {
                if a(0).is_zero() {
                    a(2).clone()
                } else {
                    a(1).clone()
                }
            }
            Op::ExtractHi => V::shr(a(0), width_of(0) - w),
            Op::ExtractLo => V::truncate(a(0), w),
            Op::Concat => V::or(&V::shl(a(0), width_of(1)), a(1)),
        };
        debug_assert!(value.bits() <= u64::from(w), "instr {index} produced a value wider than {w}");
        env[instr.dest.index()] = value;
    }
    Ok(program.outputs.iter().map(|o| env[o.index()].to_big()).collect())
}

/// Non-strict evaluation of one instruction on constant operands.
pub(crate) fn eval_op(op: &Op, args: &[BigUint], arg_widths: &[u32], width: u32) -> BigUint {
    let v = |k: usize| &args[k];
    match op {
        Op::Const(c) => c.clone(),
        Op::Add => Value::truncate(&args.iter().fold(BigUint::zero(), |acc, x| acc + x), width),
        Op::Sub => args[1..]
            .iter()
            .fold(Value::truncate(v(0), width), |acc: BigUint, x| Value::sub_wrapping(&acc, x, width)),
        Op::Mul => v(0) * v(1),
        Op::Shl(s) => Value::truncate(&(v(0) << *s), width),
        Op::Shr(s) => Value::truncate(&(v(0) >> *s), width),
        Op::And => args[1..].iter().fold(v(0).clone(), |acc, x| acc & x),
        Op::Or => args[1..].iter().fold(v(0).clone(), |acc, x| acc | x),
        Op::Lt => BigUint::from(u8::from(v(0) < v(1))),
        Op::Eq => BigUint::from(u8::from(v(0) == v(1))),
        Op::Select => {
            if Zero::is_zero(v(0)) {
                v(2).clone()
            } else {
                v(1).clone()
            }
        }
        Op::ExtractHi => v(0) >> (arg_widths[0] - width),
        Op::ExtractLo => Value::truncate(v(0), width),
        Op::Concat => (v(0) << arg_widths[1]) | v(1),
    }
}

/// Sum mod 2^w without relying on the carrier holding the full sum.
fn wrapping_sum<'a, V: Value + 'a>(args: impl Iterator<Item = &'a V>, w: u32) -> V {
    let half = w - 1;
    let mut acc = V::default();
    for x in args {
        let x = &V::truncate(x, w);
        let lo = V::sum(&[&V::truncate(&acc, half), &V::truncate(x, half)]).unwrap();
        let hi = V::sum(&[&V::shr(&acc, half), &V::shr(x, half), &V::shr(&lo, half)]).unwrap();
        acc = V::or(&V::shl(&V::truncate(&hi, 1), half), &V::truncate(&lo, half));
    }
    acc
}

/// Evaluates `program` on one value per declared input.
///
/// In strict mode every narrowing `Add` must fit its destination; otherwise
/// the sum is reduced modulo `2^width`.
pub fn interpret(program: &Program, inputs: &[BigUint], strict: bool) -> Result<Vec<BigUint>, InterpError> {
    if inputs.len() != program.inputs.len() {
        return Err(InterpError::InputCount { expected: program.inputs.len(), found: inputs.len() });
    }
    if program.max_width() <= 128 {
        run::<u128>(program, inputs, strict)
    } else {
        run::<BigUint>(program, inputs, strict)
    }
}

/// Evaluates `program` on one value per input port, splitting each value into
/// the port's words and joining the output words back.
pub fn run_ports(program: &Program, inputs: &[BigUint], strict: bool) -> Result<Vec<BigUint>, InterpError> {
    if inputs.len() != program.ports.inputs.len() {
        return Err(InterpError::InputCount { expected: program.ports.inputs.len(), found: inputs.len() });
    }
    let mut flat = Vec::with_capacity(program.inputs.len());
    let mut order = std::collections::HashMap::new();
    for (port, value) in program.ports.inputs.iter().zip(inputs) {
        if value.bits() > u64::from(port.width) {
            let input = program.inputs.iter().position(|i| *i == port.words[0]).unwrap_or(0);
            return Err(InterpError::InputOutOfRange { input, width: port.width });
        }
        let word = program.width(*port.words.last().expect("port without words"));
        let words = split_words(value, word, port.words.len() as u32);
        for (&id, w) in port.words.iter().zip(words) {
            order.insert(id, w);
        }
    }
    for id in &program.inputs {
        flat.push(order.remove(id).unwrap_or_default());
    }
    let values = interpret(program, &flat, strict)?;
    let by_id: std::collections::HashMap<_, _> = program.outputs.iter().zip(values).collect();
    Ok(program
        .ports
        .outputs
        .iter()
        .map(|port| {
            let word = program.width(*port.words.last().expect("port without words"));
            let words: Vec<BigUint> = port.words.iter().map(|id| by_id[id].clone()).collect();
            join_words(&words, word)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{Op, ProgramBuilder};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn select_picks_first_arm_on_true() {
        let mut b = ProgramBuilder::new("sel");
        let c = b.input("c", 1);
        let x = b.input("a", 8);
        let y = b.input("b", 8);
        let out = b.push(Op::Select, &[c, x, y], 8);
        b.output("out", out);
        let p = b.finish();
        assert_eq!(interpret(&p, &[big(1), big(5), big(9)], true).unwrap(), vec![big(5)]);
        assert_eq!(interpret(&p, &[big(0), big(5), big(9)], true).unwrap(), vec![big(9)]);
    }

    #[test]
    fn strict_add_overflow() {
        let mut b = ProgramBuilder::new("add");
        let x = b.input("x", 8);
        let y = b.input("y", 8);
        let s = b.push(Op::Add, &[x, y], 8);
        b.output("s", s);
        let p = b.finish();
        assert_eq!(interpret(&p, &[big(200), big(100)], true), Err(InterpError::WidthOverflow { index: 0, width: 8 }));
        assert_eq!(interpret(&p, &[big(200), big(100)], false).unwrap(), vec![big(44)]);
        assert_eq!(interpret(&p, &[big(100), big(100)], true).unwrap(), vec![big(200)]);
    }

    #[test]
    fn input_range_is_checked() {
        let mut b = ProgramBuilder::new("id");
        let x = b.input("x", 4);
        b.output("x", x);
        let p = b.finish();
        assert_eq!(interpret(&p, &[big(16)], true), Err(InterpError::InputOutOfRange { input: 0, width: 4 }));
    }

    #[test]
    fn extract_concat_and_shifts() {
        let mut b = ProgramBuilder::new("bits");
        let x = b.input("x", 16);
        let hi = b.push(Op::ExtractHi, &[x], 8);
        let lo = b.push(Op::ExtractLo, &[x], 8);
        let back = b.push(Op::Concat, &[hi, lo], 16);
        let shl = b.push(Op::Shl(4), &[x], 16);
        let shr = b.push(Op::Shr(4), &[x], 8);
        let sub = b.push(Op::Sub, &[lo, hi], 8);
        let wide = b.push(Op::ExtractLo, &[lo], 12);
        for (n, v) in [("hi", hi), ("lo", lo), ("back", back), ("shl", shl), ("shr", shr), ("sub", sub), ("wide", wide)] {
            b.output(n, v);
        }
        let p = b.finish();
        let out = interpret(&p, &[big(0x1234)], true).unwrap();
        assert_eq!(out, [0x12, 0x34, 0x1234, 0x2340, 0x23, 0x22, 0x34].map(big));
    }

    #[test]
    fn wide_programs_use_big_carrier() {
        let mut b = ProgramBuilder::new("wide");
        let x = b.input("x", 200);
        let y = b.input("y", 200);
        let m = b.push(Op::Mul, &[x, y], 400);
        let s = b.push(Op::Add, &[x, y], 200);
        b.output("m", m);
        b.output("s", s);
        let p = b.finish();
        let xv = (BigUint::one() << 199u32) + 3u32;
        let out = interpret(&p, &[xv.clone(), xv.clone()], false).unwrap();
        assert_eq!(out[0], &xv * &xv);
        assert_eq!(out[1], big(6));
        assert!(interpret(&p, &[xv.clone(), xv], true).is_err());
    }

    #[test]
    fn full_width_u128_add_wraps() {
        let mut b = ProgramBuilder::new("w128");
        let x = b.input("x", 128);
        let y = b.input("y", 128);
        let s = b.push(Op::Add, &[x, y, y], 128);
        b.output("s", s);
        let p = b.finish();
        let max = big(u64::MAX) * big(u64::MAX) + big(u64::MAX) * big(2);
        let expect = (&max * 3u32) % (BigUint::one() << 128u32);
        assert_eq!(interpret(&p, &[max.clone(), max.clone()], false).unwrap(), vec![expect]);
        assert!(interpret(&p, &[max.clone(), max], true).is_err());
    }

    #[test]
    fn ports_split_and_join() {
        let mut b = ProgramBuilder::new("ports");
        let words = b.input_port("a", 16, &[("a0".into(), 8), ("a1".into(), 8)]);
        b.output_port("r", 16, &[words[1], words[0]]);
        let p = b.finish();
        assert_eq!(run_ports(&p, &[big(0x1234)], true).unwrap(), vec![big(0x3412)]);
    }
}
