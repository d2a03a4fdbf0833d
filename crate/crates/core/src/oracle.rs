//! Arbitrary-precision reference semantics.
//!
//! Everything the generated word-level code is checked against lives here:
//! canonical modular arithmetic on [`BigUint`], Barrett constant
//! precomputation, Miller-Rabin primality and the NTT parameter search, plus
//! the quadratic-time transforms used as independent oracles.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus must be greater than one")]
    ZeroModulus,
    #[error("modulus {q} out of range for a {width}-bit Barrett layout")]
    ModulusOutOfRange { q: BigUint, width: u32 },
    #[error("no NTT prime of width {width} supports size {n}")]
    NoSuitablePrime { width: u32, n: u64 },
    #[error("operand lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("invalid NTT parameters: {0}")]
    InvalidNttParams(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModOp {
    Add,
    Sub,
    Mul,
    Pow,
}

/// Canonical residue of `a op b` modulo `q`.
pub fn oracle_modop(kind: ModOp, a: &BigUint, b: &BigUint, q: &BigUint) -> Result<BigUint> {
    if q <= &BigUint::one() {
        return Err(OracleError::ZeroModulus);
    }
    Ok(match kind {
        ModOp::Add => (a + b) % q,
        ModOp::Sub => {
            let (a, b) = (a % q, b % q);
            if a >= b {
                a - b
            } else {
                q - b + a
            }
        }
        ModOp::Mul => (a * b) % q,
        ModOp::Pow => a.modpow(b, q),
    })
}

/// An element of the integer ring modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigResidue {
    value: BigUint,
    modulus: BigUint,
}

impl BigResidue {
    pub fn new(value: BigUint, modulus: BigUint) -> Result<Self> {
        if modulus <= BigUint::one() {
            return Err(OracleError::ZeroModulus);
        }
        let value = value % &modulus;
        Ok(Self { value, modulus })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn apply(&self, kind: ModOp, other: &BigUint) -> Self {
        let value = oracle_modop(kind, &self.value, other, &self.modulus)
            .expect("modulus validated at construction");
        Self { value, modulus: self.modulus.clone() }
    }
}

/// Barrett reduction constants for a modulus living in a `width`-bit word.
///
/// The modulus keeps four bits of headroom (`mbits = width - 4`) and
/// `mu = floor(2^(2*mbits + 3) / q)`. Reduction of a product `t = a*b` is
/// `t - floor(floor(t / 2^shift1) * mu / 2^shift2) * q` followed by a single
/// conditional subtraction of `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrettParams {
    #[serde(with = "decimal")]
    pub q: BigUint,
    pub width: u32,
    pub mbits: u32,
    #[serde(with = "decimal")]
    pub mu: BigUint,
    pub shift1: u32,
    pub shift2: u32,
}

impl BarrettParams {
    /// Reference evaluation of the reduction on big integers. Operands must
    /// be canonical residues.
    pub fn mulmod(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let t = a * b;
        let r = ((&t >> self.shift1) * &self.mu) >> self.shift2;
        let c = t - r * &self.q;
        if c >= self.q {
            c - &self.q
        } else {
            c
        }
    }
}

pub fn compute_barrett(q: &BigUint, width: u32) -> Result<BarrettParams> {
    let out_of_range = || OracleError::ModulusOutOfRange { q: q.clone(), width };
    // shift1 = mbits - 2 has to stay non-negative
    if width < 6 {
        return Err(out_of_range());
    }
    let mbits = width - 4;
    let lower = BigUint::one() << (mbits - 1);
    let upper = BigUint::one() << mbits;
    if q <= &lower || q >= &upper {
        return Err(out_of_range());
    }
    let mu = (BigUint::one() << (2 * mbits + 3)) / q;
    if mu.bits() > u64::from(width) {
        return Err(out_of_range());
    }
    Ok(BarrettParams { q: q.clone(), width, mbits, mu, shift1: mbits - 2, shift2: mbits + 5 })
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;
const WITNESS_SEED: u64 = 0x6d6f_6d61_5052_494d;

/// Miller-Rabin. The first twelve prime bases are a deterministic witness set
/// below 2^64; larger candidates additionally get seeded random bases.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;

    let is_witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            return false;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                return false;
            }
        }
        true
    };

    if SMALL_PRIMES.iter().any(|&p| is_witness(&BigUint::from(p))) {
        return false;
    }
    if n.bits() <= 64 {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(WITNESS_SEED);
    let upper = &n_minus_one - 1u32;
    (0..RANDOM_ROUNDS).all(|_| !is_witness(&rng.gen_biguint_range(&two, &upper)))
}

/// Parameters of an `n`-point cyclic NTT over `Z_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NttParams {
    pub n: u64,
    #[serde(with = "decimal")]
    pub p: BigUint,
    #[serde(with = "decimal")]
    pub root: BigUint,
    #[serde(with = "decimal")]
    pub root_inv: BigUint,
    #[serde(with = "decimal")]
    pub n_inv: BigUint,
}

impl NttParams {
    /// Validates a caller-chosen prime and root and derives the inverses.
    pub fn new(n: u64, p: BigUint, root: BigUint) -> Result<Self> {
        let invalid = |msg: &str| OracleError::InvalidNttParams(msg.to_string());
        if n == 0 || !n.is_power_of_two() {
            return Err(invalid("size must be a power of two"));
        }
        if !is_prime(&p) {
            return Err(invalid("modulus is not prime"));
        }
        if !((&p - 1u32) % n).is_zero() {
            return Err(invalid("size does not divide p - 1"));
        }
        if root.is_zero() || root >= p || !is_primitive_root(&root, n, &p) {
            return Err(invalid("root is not a primitive n-th root of unity"));
        }
        let root_inv = mod_inverse(&root, &p);
        let n_inv = mod_inverse(&BigUint::from(n), &p);
        Ok(Self { n, p, root, root_inv, n_inv })
    }

    /// Checks the root-of-unity and inverse identities.
    pub fn check(&self) -> bool {
        let p = &self.p;
        let one = BigUint::one();
        is_primitive_root(&self.root, self.n, p)
            && (&self.root * &self.root_inv) % p == one
            && (BigUint::from(self.n) * &self.n_inv) % p == one
            && ((p - 1u32) % self.n).is_zero()
            && is_prime(p)
    }
}

fn is_primitive_root(root: &BigUint, n: u64, p: &BigUint) -> bool {
    let full = root.modpow(&BigUint::from(n), p);
    if !full.is_one() {
        return false;
    }
    // for n = 2^k the order divides n, so it is n exactly unless root^(n/2) = 1
    n == 1 || !root.modpow(&BigUint::from(n / 2), p).is_one()
}

/// Inverse modulo a prime via Fermat.
fn mod_inverse(a: &BigUint, p: &BigUint) -> BigUint {
    a.modpow(&(p - 2u32), p)
}

/// Descending scan for the largest prime `p` in `(2^(width-5), 2^(width-4))`
/// with `p = 1 mod n`.
///
/// Among the primitive n-th roots the smallest one is returned so the choice
/// does not depend on which generator happened to be tried first.
pub fn find_ntt_params(width: u32, n: u64) -> Result<NttParams> {
    if n == 0 || !n.is_power_of_two() {
        return Err(OracleError::InvalidNttParams("size must be a power of two".into()));
    }
    if width < 8 {
        return Err(OracleError::InvalidNttParams("width must be at least 8 bits".into()));
    }
    let none = || OracleError::NoSuitablePrime { width, n };
    let lower = BigUint::one() << (width - 5);
    let upper = (BigUint::one() << (width - 4)) - 1u32;
    let step = BigUint::from(n);
    // largest candidate <= upper congruent to 1 mod n
    let offset = (&upper - 1u32) % &step;
    let mut p = &upper - offset;
    while p > lower {
        if is_prime(&p) {
            let root = smallest_primitive_root(n, &p);
            return NttParams::new(n, p, root);
        }
        if p < step {
            break;
        }
        p -= &step;
    }
    Err(none())
}

fn smallest_primitive_root(n: u64, p: &BigUint) -> BigUint {
    if n == 1 {
        return BigUint::one();
    }
    let exponent = (p - 1u32) / n;
    let mut g = BigUint::from(2u32);
    let first = loop {
        let candidate = g.modpow(&exponent, p);
        if is_primitive_root(&candidate, n, p) {
            break candidate;
        }
        g += 1u32;
    };
    // every primitive root is first^k for odd k
    let square = (&first * &first) % p;
    let mut best = first.clone();
    let mut current = first;
    for _ in 1..n / 2 {
        current = (&current * &square) % p;
        if current < best {
            best = current.clone();
        }
    }
    best
}

/// Cyclic convolution modulo `x^n - 1`, by the direct double sum.
pub fn convolve_mod(f: &[BigUint], g: &[BigUint], p: &BigUint) -> Result<Vec<BigUint>> {
    if f.len() != g.len() {
        return Err(OracleError::LengthMismatch(f.len(), g.len()));
    }
    if p <= &BigUint::one() {
        return Err(OracleError::ZeroModulus);
    }
    let n = f.len();
    let mut h = vec![BigUint::zero(); n];
    for (i, fi) in f.iter().enumerate() {
        for (j, gj) in g.iter().enumerate() {
            let k = (i + j) % n;
            h[k] = (&h[k] + fi * gj) % p;
        }
    }
    Ok(h)
}

/// Direct O(n^2) evaluation of `y(k) = sum_j x(j) root^(jk) mod p`. With
/// `inverse` the inverse root is used and the result is scaled by `n^-1`.
pub fn dft_mod(x: &[BigUint], params: &NttParams, inverse: bool) -> Result<Vec<BigUint>> {
    let n = x.len();
    if n as u64 != params.n {
        return Err(OracleError::LengthMismatch(n, params.n as usize));
    }
    let p = &params.p;
    let root = if inverse { &params.root_inv } else { &params.root };
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = BigUint::zero();
        for (j, xj) in x.iter().enumerate() {
            let e = BigUint::from(((j * k) % n) as u64);
            acc = (acc + xj * root.modpow(&e, p)) % p;
        }
        if inverse {
            acc = (acc * &params.n_inv) % p;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Serde adapter: big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom(format!("not a decimal integer: {text:?}")))
    }

    pub mod option {
        use num_bigint::BigUint;
        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(value: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.serialize_some(&v.to_str_radix(10)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
            match Option::<String>::deserialize(d)? {
                None => Ok(None),
                Some(text) => BigUint::parse_bytes(text.as_bytes(), 10)
                    .map(Some)
                    .ok_or_else(|| D::Error::custom(format!("not a decimal integer: {text:?}"))),
            }
        }
    }
}
