//! Modular building blocks written once against [`Arith`], so the same
//! sequence serves top-level kernel construction and word-level rewriting.
//!
//! All corrections compare with `>=` so results are canonical residues.

use crate::ir::Arith;

/// Reduces a sum `s < 2q` to `[0, q)`: `s < q ? s : s - q`.
pub fn reduce_after_add<A: Arith>(ar: &mut A, sum: &A::Val, q: &A::Val, width: u32) -> A::Val {
    let below = ar.lt(sum, q);
    let low = ar.extract_lo(sum, width);
    let diff = ar.sub(sum, q, width);
    ar.select(&below, &low, &diff)
}

pub fn add_mod<A: Arith>(ar: &mut A, a: &A::Val, b: &A::Val, q: &A::Val, width: u32) -> A::Val {
    let sum = ar.add(&[a.clone(), b.clone()], width + 1);
    reduce_after_add(ar, &sum, q, width)
}

/// `a - b`, adding `q` back when the subtraction borrowed.
pub fn sub_mod<A: Arith>(ar: &mut A, a: &A::Val, b: &A::Val, q: &A::Val, width: u32) -> A::Val {
    let diff = ar.sub(a, b, width);
    let borrow = ar.lt(a, b);
    let fixed = ar.add(&[diff.clone(), q.clone()], width + 1);
    let fixed = ar.extract_lo(&fixed, width);
    ar.select(&borrow, &fixed, &diff)
}

/// Shift pair of the Barrett quotient estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarrettShifts {
    pub shift1: u32,
    pub shift2: u32,
}

/// Barrett multiplication: estimate the quotient from the top bits of the
/// product, subtract that multiple of `q` on the low half only (the high
/// halves agree) and correct once.
pub fn mul_mod_barrett<A: Arith>(
    ar: &mut A,
    a: &A::Val,
    b: &A::Val,
    q: &A::Val,
    mu: &A::Val,
    shifts: BarrettShifts,
    width: u32,
) -> A::Val {
    let t = ar.mul(a, b);
    let r1 = ar.shr(&t, shifts.shift1, width);
    let p = ar.mul(&r1, mu);
    let r2 = ar.shr(&p, shifts.shift2, width);
    let s = ar.mul(&r2, q);
    let t_lo = ar.extract_lo(&t, width);
    let s_lo = ar.extract_lo(&s, width);
    let d = ar.sub(&t_lo, &s_lo, width);
    let below = ar.lt(&d, q);
    let e = ar.sub(&d, q, width);
    ar.select(&below, &d, &e)
}
