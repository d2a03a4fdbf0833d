use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{MulStrategy, TraceEntry};
use crate::ir::{split_words, Arith, Op, Program, ProgramBuilder, VarId};

/// A value held as digits of the current unit width, least significant
/// first. `None` marks a digit that is statically zero.
///
/// Each digit is at most `unit` bits wide; the top digit is at most the
/// remaining `width - (len - 1) * unit` bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    pub words: Vec<Option<VarId>>,
    pub width: u32,
}

impl Digits {
    pub fn single(v: VarId, width: u32) -> Self {
        Digits { words: vec![Some(v)], width }
    }

    pub fn word(&self, i: usize) -> Option<VarId> {
        self.words.get(i).copied().flatten()
    }

    pub fn is_full(&self) -> bool {
        self.words.iter().all(Option::is_some)
    }
}

/// Emits word-level code for one rewrite level.
///
/// Every rule takes operands as [`Digits`] over `unit`-bit words and appends
/// instructions to the program under construction.
#[derive(Debug)]
pub struct Lowerer {
    b: ProgramBuilder,
    unit: u32,
    strategy: MulStrategy,
    level: u32,
    hint: String,
    pub(crate) trace: Vec<TraceEntry>,
}

fn value_bound(widths: impl IntoIterator<Item = u32>) -> u32 {
    let total = widths
        .into_iter()
        .fold(BigUint::zero(), |acc, w| acc + ((BigUint::one() << w) - 1u32));
    (total.bits() as u32).max(1)
}

impl Lowerer {
    pub fn new(name: &str, unit: u32, strategy: MulStrategy) -> Self {
        Self::at_level(ProgramBuilder::new(name), unit, strategy, 1)
    }

    pub(crate) fn at_level(b: ProgramBuilder, unit: u32, strategy: MulStrategy, level: u32) -> Self {
        Lowerer { b, unit, strategy, level, hint: "t".into(), trace: Vec::new() }
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn builder(&mut self) -> &mut ProgramBuilder {
        &mut self.b
    }

    pub(crate) fn set_hint(&mut self, hint: &str) {
        self.hint = hint.to_string();
    }

    pub fn positions(&self, width: u32) -> usize {
        width.div_ceil(self.unit).max(1) as usize
    }

    fn pos_width(&self, width: u32, i: usize) -> u32 {
        width.saturating_sub(i as u32 * self.unit).min(self.unit).max(1)
    }

    fn w(&self, v: VarId) -> u32 {
        self.b.width(v)
    }

    fn emit(&mut self, op: Op, args: &[VarId], width: u32) -> VarId {
        let hint = format!("{}_l{}", self.hint, self.level);
        self.b.push_named(&hint, op, args, width)
    }

    fn zero(&mut self, width: u32) -> VarId {
        self.emit(Op::Const(BigUint::zero()), &[], width)
    }

    /// Zero-extends or truncates a single word to exactly `width` bits.
    fn fit(&mut self, v: VarId, width: u32) -> VarId {
        if self.w(v) == width {
            v
        } else {
            self.emit(Op::ExtractLo, &[v], width)
        }
    }

    /// Declares an input port of `width` bits split into words named
    /// `{name}{i}`, most significant first.
    pub fn input_digits(&mut self, name: &str, width: u32) -> Digits {
        let n = self.positions(width);
        let specs: Vec<(String, u32)> =
            (0..n).map(|j| (format!("{name}{j}"), self.pos_width(width, n - 1 - j))).collect();
        let mut ids = self.b.input_port(name, width, &specs);
        ids.reverse();
        Digits { words: ids.into_iter().map(Some).collect(), width }
    }

    /// Materializes `d` as exact-width words and declares them as an output
    /// port, most significant first.
    pub fn output(&mut self, name: &str, d: &Digits) {
        let words = self.materialize(d);
        self.b.output_port(name, d.width, &words);
    }

    /// MSW-first words of `d`, each exactly its position width.
    pub(crate) fn materialize(&mut self, d: &Digits) -> Vec<VarId> {
        let n = self.positions(d.width);
        let mut out = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let pw = self.pos_width(d.width, i);
            let v = match d.word(i) {
                Some(v) => self.fit(v, pw),
                None => self.zero(pw),
            };
            out.push(v);
        }
        out
    }

    pub fn finish(self) -> Program {
        let mut p = self.b.finish();
        p.eliminate_dead_code();
        p.compact();
        p
    }

    pub fn into_parts(self) -> (ProgramBuilder, Vec<TraceEntry>) {
        (self.b, self.trace)
    }

    /// Splits a var wider than the unit into digits with shifts.
    pub(crate) fn split_var(&mut self, v: VarId) -> Digits {
        let width = self.w(v);
        let n = self.positions(width);
        if n == 1 {
            return Digits::single(v, width);
        }
        let mut words = Vec::with_capacity(n);
        for i in 0..n {
            let pw = self.pos_width(width, i);
            let d = if i == 0 {
                self.emit(Op::ExtractLo, &[v], pw)
            } else {
                self.emit(Op::Shr(i as u32 * self.unit), &[v], pw)
            };
            words.push(Some(d));
        }
        Digits { words, width }
    }

    /// Recombines digits into a single var of `d.width` bits.
    pub(crate) fn join(&mut self, d: &Digits) -> VarId {
        let n = self.positions(d.width);
        if n == 1 {
            return match d.word(0) {
                Some(v) => self.fit(v, d.width),
                None => self.zero(d.width),
            };
        }
        let top = n - 1;
        let pw = self.pos_width(d.width, top);
        let mut acc = match d.word(top) {
            Some(v) => self.fit(v, pw),
            None => self.zero(pw),
        };
        for i in (0..top).rev() {
            let part = match d.word(i) {
                Some(v) => self.fit(v, self.unit),
                None => self.zero(self.unit),
            };
            let width = self.w(acc) + self.unit;
            acc = self.emit(Op::Concat, &[acc, part], width);
        }
        acc
    }

    pub fn constant_digits(&mut self, value: &BigUint, width: u32) -> Digits {
        let n = self.positions(width);
        let mut parts = split_words(value, self.unit, n as u32);
        parts.reverse();
        let words = parts
            .into_iter()
            .enumerate()
            .map(|(i, v)| Some(self.emit(Op::Const(v), &[], self.pos_width(width, i))))
            .collect();
        Digits { words, width }
    }

    /// Column addition with carry propagation. `cols[i]` lists the words to
    /// add at digit position `i`. The top position gets a narrow destination
    /// whose fit is checked by strict interpretation.
    pub(crate) fn accumulate(&mut self, mut cols: Vec<Vec<VarId>>, width: u32) -> Digits {
        let n = self.positions(width);
        cols.resize(n, Vec::new());
        let mut carry: Option<VarId> = None;
        let mut words = Vec::with_capacity(n);
        for (i, mut items) in cols.into_iter().enumerate() {
            let pw = self.pos_width(width, i);
            items.extend(carry.take());
            let last = i + 1 == n;
            let digit = match items.len() {
                0 => None,
                1 if self.w(items[0]) <= pw => Some(items[0]),
                _ => {
                    let sw = value_bound(items.iter().map(|&v| self.w(v)));
                    if sw <= pw || last {
                        Some(self.emit(Op::Add, &items, sw.min(pw)))
                    } else {
                        let s = self.emit(Op::Add, &items, sw);
                        carry = Some(self.emit(Op::ExtractHi, &[s], sw - pw));
                        Some(self.emit(Op::ExtractLo, &[s], pw))
                    }
                }
            };
            words.push(digit);
        }
        Digits { words, width }
    }

    fn columns(&self, terms: &[(&Digits, usize)]) -> Vec<Vec<VarId>> {
        let mut cols: Vec<Vec<VarId>> = Vec::new();
        for (d, offset) in terms {
            for (i, w) in d.words.iter().enumerate() {
                if let Some(v) = w {
                    let at = i + offset;
                    if cols.len() <= at {
                        cols.resize(at + 1, Vec::new());
                    }
                    cols[at].push(*v);
                }
            }
        }
        cols
    }

    /// Sum of all terms, `width` bits wide.
    pub fn add_digits(&mut self, terms: &[&Digits], width: u32) -> Digits {
        let shifted: Vec<(&Digits, usize)> = terms.iter().map(|d| (*d, 0)).collect();
        let cols = self.columns(&shifted);
        self.accumulate(cols, width)
    }

    /// `a - b mod 2^width` with a borrow chain.
    pub fn sub_digits(&mut self, a: &Digits, b: &Digits, width: u32) -> Digits {
        let n = self.positions(width);
        let mut borrow: Option<VarId> = None;
        let mut words = Vec::with_capacity(n);
        for i in 0..n {
            let pw = self.pos_width(width, i);
            let last = i + 1 == n;
            let (ai, bi) = (a.word(i), b.word(i));
            if bi.is_none() && borrow.is_none() {
                words.push(ai.map(|v| if self.w(v) > pw { self.fit(v, pw) } else { v }));
                continue;
            }
            let x = match ai {
                Some(v) => v,
                None => self.zero(pw),
            };
            let mut args = vec![x];
            args.extend(bi);
            args.extend(borrow);
            words.push(Some(self.emit(Op::Sub, &args, pw)));
            if !last {
                borrow = Some(match (bi, borrow) {
                    (Some(y), Some(c)) => {
                        let lt = self.emit(Op::Lt, &[x, y], 1);
                        let eq = self.emit(Op::Eq, &[x, y], 1);
                        let both = self.emit(Op::And, &[eq, c], 1);
                        self.emit(Op::Or, &[lt, both], 1)
                    }
                    (Some(y), None) => self.emit(Op::Lt, &[x, y], 1),
                    (None, Some(c)) => self.emit(Op::Lt, &[x, c], 1),
                    (None, None) => unreachable!(),
                });
            }
        }
        Digits { words, width }
    }

    /// Lexicographic `a < b`, most significant digit deciding.
    pub fn lt_digits(&mut self, a: &Digits, b: &Digits) -> VarId {
        let n = self.positions(a.width).max(self.positions(b.width));
        let mut flag: Option<VarId> = None;
        for i in 0..n {
            let (x, y) = match (a.word(i), b.word(i)) {
                (None, None) => continue,
                (Some(x), Some(y)) => (x, y),
                (Some(x), None) => (x, self.zero(self.w(x))),
                (None, Some(y)) => (self.zero(self.w(y)), y),
            };
            let lt = self.emit(Op::Lt, &[x, y], 1);
            flag = Some(match flag {
                None => lt,
                Some(f) => {
                    let eq = self.emit(Op::Eq, &[x, y], 1);
                    let keep = self.emit(Op::And, &[eq, f], 1);
                    self.emit(Op::Or, &[lt, keep], 1)
                }
            });
        }
        match flag {
            Some(f) => f,
            None => self.zero(1),
        }
    }

    pub fn eq_digits(&mut self, a: &Digits, b: &Digits) -> VarId {
        let n = self.positions(a.width).max(self.positions(b.width));
        let mut acc: Option<VarId> = None;
        for i in 0..n {
            let (x, y) = match (a.word(i), b.word(i)) {
                (None, None) => continue,
                (Some(x), Some(y)) => (x, y),
                (Some(x), None) => (x, self.zero(self.w(x))),
                (None, Some(y)) => (self.zero(self.w(y)), y),
            };
            let e = self.emit(Op::Eq, &[x, y], 1);
            acc = Some(match acc {
                None => e,
                Some(p) => self.emit(Op::And, &[p, e], 1),
            });
        }
        match acc {
            Some(f) => f,
            None => self.emit(Op::Const(BigUint::one()), &[], 1),
        }
    }

    /// Digit-wise select; `cond` is a one-bit flag.
    pub fn select_digits(&mut self, cond: VarId, a: &Digits, b: &Digits) -> Digits {
        let width = a.width;
        let n = self.positions(width);
        let mut words = Vec::with_capacity(n);
        for i in 0..n {
            let pw = self.pos_width(width, i);
            let (x, y) = match (a.word(i), b.word(i)) {
                (None, None) => {
                    words.push(None);
                    continue;
                }
                (x, y) => (x, y),
            };
            let x = match x {
                Some(v) => self.fit(v, pw),
                None => self.zero(pw),
            };
            let y = match y {
                Some(v) => self.fit(v, pw),
                None => self.zero(pw),
            };
            words.push(Some(self.emit(Op::Select, &[cond, x, y], pw)));
        }
        Digits { words, width }
    }

    /// Full product of two words as digits.
    fn mul_words(&mut self, x: VarId, y: VarId) -> Digits {
        let width = self.w(x) + self.w(y);
        let p = self.emit(Op::Mul, &[x, y], width);
        if width <= self.unit {
            return Digits::single(p, width);
        }
        let lo = self.emit(Op::ExtractLo, &[p], self.unit);
        let hi = self.emit(Op::ExtractHi, &[p], width - self.unit);
        Digits { words: vec![Some(lo), Some(hi)], width }
    }

    /// Full product; the width is the sum of the operand widths.
    pub fn mul_digits(&mut self, a: &Digits, b: &Digits) -> Digits {
        let karatsuba = self.strategy == MulStrategy::Karatsuba
            && a.words.len() == 2
            && b.words.len() == 2
            && a.is_full()
            && b.is_full();
        if karatsuba {
            self.mul_karatsuba(a, b)
        } else {
            self.mul_schoolbook(a, b)
        }
    }

    fn mul_schoolbook(&mut self, a: &Digits, b: &Digits) -> Digits {
        let width = a.width + b.width;
        let mut cols: Vec<Vec<VarId>> = vec![Vec::new(); a.words.len() + b.words.len()];
        for (i, x) in a.words.iter().enumerate() {
            for (j, y) in b.words.iter().enumerate() {
                if let (Some(x), Some(y)) = (x, y) {
                    let p = self.mul_words(*x, *y);
                    for (k, w) in p.words.iter().enumerate() {
                        cols[i + j + k].extend(*w);
                    }
                }
            }
        }
        self.accumulate(cols, width)
    }

    /// Three word products. The operand sums `a0 + a1` and `b0 + b1` carry
    /// one bit each; the carries enter the middle term through selects and an
    /// and, so no word ever needs more than `unit + 1` bits.
    fn mul_karatsuba(&mut self, a: &Digits, b: &Digits) -> Digits {
        let width = a.width + b.width;
        let (a0, a1) = (a.word(0).unwrap(), a.word(1).unwrap());
        let (b0, b1) = (b.word(0).unwrap(), b.word(1).unwrap());
        let low = self.mul_words(a0, b0);
        let high = self.mul_words(a1, b1);
        let (sa, ca) = self.sum_with_carry(a0, a1);
        let (sb, cb) = self.sum_with_carry(b0, b1);
        let m = self.mul_words(sa, sb);
        let mut cols: Vec<Vec<VarId>> = vec![Vec::new(); 3];
        for (k, w) in m.words.iter().enumerate() {
            cols[k].extend(*w);
        }
        if let Some(ca) = ca {
            let z = self.zero(self.w(sb));
            cols[1].push(self.emit(Op::Select, &[ca, sb, z], self.w(sb)));
        }
        if let Some(cb) = cb {
            let z = self.zero(self.w(sa));
            cols[1].push(self.emit(Op::Select, &[cb, sa, z], self.w(sa)));
        }
        if let (Some(ca), Some(cb)) = (ca, cb) {
            cols[2].push(self.emit(Op::And, &[ca, cb], 1));
        }
        let cross_width = 2 * self.unit + 2;
        let cross = self.accumulate(cols, cross_width);
        let mid_width = 2 * self.unit + 1;
        let t = self.sub_digits(&cross, &low, cross_width);
        let mid = self.sub_digits(&t, &high, mid_width);
        let cols = self.columns(&[(&low, 0), (&mid, 1), (&high, 2)]);
        self.accumulate(cols, width)
    }

    /// `x + y` as a word of at most `unit` bits plus an optional carry flag.
    fn sum_with_carry(&mut self, x: VarId, y: VarId) -> (VarId, Option<VarId>) {
        let sw = value_bound([self.w(x), self.w(y)]);
        let s = self.emit(Op::Add, &[x, y], sw);
        if sw <= self.unit {
            return (s, None);
        }
        let lo = self.emit(Op::ExtractLo, &[s], self.unit);
        let c = self.emit(Op::ExtractHi, &[s], sw - self.unit);
        (lo, Some(c))
    }

    /// `floor(a / 2^s) mod 2^width`.
    pub fn shr_digits(&mut self, a: &Digits, s: u32, width: u32) -> Digits {
        let u = self.unit;
        let (k, r) = ((s / u) as usize, s % u);
        let n = self.positions(width);
        let mut words = Vec::with_capacity(n);
        for i in 0..n {
            let src = i + k;
            let digit = if r == 0 {
                a.word(src)
            } else {
                let low = a.word(src).and_then(|v| {
                    let w = self.w(v);
                    (w > r).then(|| self.emit(Op::Shr(r), &[v], w - r))
                });
                let high = a.word(src + 1).map(|v| self.emit(Op::Shl(u - r), &[v], u));
                match (low, high) {
                    (Some(l), Some(h)) => Some(self.emit(Op::Or, &[l, h], u)),
                    (l, h) => l.or(h),
                }
            };
            words.push(digit);
        }
        self.trim(Digits { words, width })
    }

    /// `a * 2^s mod 2^width`.
    pub fn shl_digits(&mut self, a: &Digits, s: u32, width: u32) -> Digits {
        let u = self.unit;
        let (k, r) = ((s / u) as usize, s % u);
        let n = self.positions(width);
        let mut words = Vec::with_capacity(n);
        for i in 0..n {
            let digit = if i < k {
                None
            } else if r == 0 {
                a.word(i - k)
            } else {
                let low = a.word(i - k).map(|v| self.emit(Op::Shl(r), &[v], u));
                let high = if i > k {
                    a.word(i - k - 1).and_then(|v| {
                        let w = self.w(v);
                        (w > u - r).then(|| self.emit(Op::Shr(u - r), &[v], w - (u - r)))
                    })
                } else {
                    None
                };
                match (low, high) {
                    (Some(l), Some(h)) => Some(self.emit(Op::Or, &[l, h], u)),
                    (l, h) => l.or(h),
                }
            };
            words.push(digit);
        }
        self.trim(Digits { words, width })
    }

    /// Truncates or zero-extends to `width` bits.
    pub fn resize(&mut self, a: &Digits, width: u32) -> Digits {
        let n = self.positions(width);
        let words = (0..n).map(|i| a.word(i)).collect();
        self.trim(Digits { words, width })
    }

    /// Narrows the top digit to its position width.
    fn trim(&mut self, mut d: Digits) -> Digits {
        let n = d.words.len();
        for i in 0..n {
            let pw = self.pos_width(d.width, i);
            if let Some(v) = d.words[i] {
                if self.w(v) > pw {
                    d.words[i] = Some(self.fit(v, pw));
                }
            }
        }
        d
    }

    pub fn bitwise_digits(&mut self, op: Op, args: &[Digits], width: u32) -> Digits {
        let n = self.positions(width);
        let mut words = Vec::with_capacity(n);
        for i in 0..n {
            let present: Vec<VarId> = args.iter().filter_map(|d| d.word(i)).collect();
            let digit = match op {
                Op::And if present.len() < args.len() => None,
                _ if present.is_empty() => None,
                _ if present.len() == 1 => Some(present[0]),
                _ => {
                    let w = present.iter().map(|&v| self.w(v)).max().unwrap();
                    Some(self.emit(op.clone(), &present, w))
                }
            };
            words.push(digit);
        }
        self.trim(Digits { words, width })
    }

    pub fn concat_digits(&mut self, hi: &Digits, lo: &Digits, width: u32) -> Digits {
        let u = self.unit;
        let aligned = lo.width % u == 0 && lo.words.len() == (lo.width / u) as usize;
        if aligned {
            let mut words = lo.words.clone();
            words.extend(hi.words.iter().copied());
            words.resize(self.positions(width), None);
            return Digits { words, width };
        }
        let low = self.resize(lo, width);
        let high = self.shl_digits(hi, lo.width, width);
        self.bitwise_digits(Op::Or, &[low, high], width)
    }
}

impl Arith for Lowerer {
    type Val = Digits;

    fn width_of(&self, v: &Digits) -> u32 {
        v.width
    }

    fn constant(&mut self, value: &BigUint, width: u32) -> Digits {
        self.constant_digits(value, width)
    }

    fn add(&mut self, args: &[Digits], width: u32) -> Digits {
        let refs: Vec<&Digits> = args.iter().collect();
        self.add_digits(&refs, width)
    }

    fn sub(&mut self, a: &Digits, b: &Digits, width: u32) -> Digits {
        self.sub_digits(a, b, width)
    }

    fn mul(&mut self, a: &Digits, b: &Digits) -> Digits {
        self.mul_digits(a, b)
    }

    fn shr(&mut self, a: &Digits, amount: u32, width: u32) -> Digits {
        self.shr_digits(a, amount, width)
    }

    fn lt(&mut self, a: &Digits, b: &Digits) -> Digits {
        let f = self.lt_digits(a, b);
        Digits::single(f, 1)
    }

    fn select(&mut self, cond: &Digits, a: &Digits, b: &Digits) -> Digits {
        let c = self.join(cond);
        self.select_digits(c, a, b)
    }

    fn extract_lo(&mut self, a: &Digits, width: u32) -> Digits {
        self.resize(a, width)
    }
}
