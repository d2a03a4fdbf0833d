use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ir::{count_ops, OpCounts, Program, WordLayout};
use crate::kernels::{KernelError, KernelKind, KernelSpec};
use crate::oracle::{compute_barrett, decimal, NttParams};
use crate::rewrite::MulStrategy;

/// Everything needed to rebuild and audit one generated kernel. Big integers
/// are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub kernel: KernelKind,
    pub lambda: u32,
    pub omega0: u32,
    pub n: u64,
    #[serde(with = "decimal")]
    pub q: BigUint,
    #[serde(with = "decimal::option")]
    pub mu: Option<BigUint>,
    #[serde(with = "decimal::option")]
    pub p: Option<BigUint>,
    #[serde(with = "decimal::option")]
    pub root: Option<BigUint>,
    pub strategy: MulStrategy,
    pub double_word: bool,
    pub runtime_params: bool,
    pub opcounts: OpCounts,
    pub source_sha256: String,
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Manifest {
    pub fn new(spec: &KernelSpec, program: &Program, source: &str, double_word: bool) -> Self {
        Manifest {
            kernel: spec.kind,
            lambda: spec.layout.lambda,
            omega0: spec.layout.omega0,
            n: spec.n,
            q: spec.modulus.clone(),
            mu: spec.barrett.as_ref().map(|b| b.mu.clone()),
            p: spec.ntt.as_ref().map(|t| t.p.clone()),
            root: spec.ntt.as_ref().map(|t| t.root.clone()),
            strategy: spec.mul_strategy,
            double_word,
            runtime_params: spec.runtime_params,
            opcounts: count_ops(program, spec.layout.omega0),
            source_sha256: sha256_hex(source),
        }
    }

    /// Rebuilds the spec, re-deriving Barrett and NTT parameters and
    /// checking that they agree with the recorded ones.
    pub fn to_spec(&self) -> Result<KernelSpec, KernelError> {
        let layout = WordLayout::new(self.lambda, self.omega0);
        let mut spec = match (&self.p, &self.root) {
            (Some(p), Some(root)) => {
                let ntt = NttParams::new(self.n, p.clone(), root.clone())?;
                KernelSpec::with_ntt(self.kernel, layout, ntt, self.strategy)?
            }
            _ => KernelSpec::with_modulus(self.kernel, layout, self.n, self.q.clone(), self.strategy)?,
        };
        spec.runtime_params = self.runtime_params;
        spec.check()?;
        let mu = compute_barrett(&self.q, self.lambda).ok().map(|b| b.mu);
        if mu != self.mu || spec.modulus != self.q {
            return Err(KernelError::Inconsistent("manifest parameters disagree".into()));
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Manifest JSON for `spec`, describing the (lowered) `program` and the
/// emitted `source`.
pub fn emit_manifest(spec: &KernelSpec, program: &Program, source: &str, double_word: bool) -> String {
    Manifest::new(spec, program, source, double_word).to_json()
}
