//! Static operation counts for both multiplication strategies, plus a rough
//! interpreter timing.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::{BigUint, RandBigInt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use moma::ir::{count_ops, OpCounts};
use moma::kernels::{apply, build, build_widening_mul, Kernel, KernelKind, KernelSpec};
use moma::rewrite::{lower_program, MulStrategy, RewriteConfig};

use crate::{CliError, Config};

const TIMING_CALLS: u64 = 200;

#[derive(Debug, Clone)]
pub struct StrategyCounts {
    pub strategy: MulStrategy,
    /// The whole lowered kernel.
    pub kernel: OpCounts,
    /// One lowered `P x P -> 2P` multiply, unpruned.
    pub widening_mul: OpCounts,
    /// One lowered butterfly body, for transforms.
    pub butterfly: Option<OpCounts>,
    /// Interpreter wall time per element in nanoseconds. Machine dependent.
    pub ns_per_element: f64,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub kernel: KernelKind,
    pub lambda: u32,
    pub omega0: u32,
    pub padded: u32,
    pub depth: u32,
    pub n: u64,
    pub butterflies: usize,
    pub strategies: Vec<StrategyCounts>,
}

pub fn bench_report(config: &Config) -> Result<BenchReport, CliError> {
    let base = config.spec()?;
    let layout = base.layout;
    let mut strategies = Vec::new();
    let mut butterflies = 0;
    for strategy in [MulStrategy::Schoolbook, MulStrategy::Karatsuba] {
        let mut spec = base.clone();
        spec.mul_strategy = strategy;
        let kernel = build(&spec)?.lower(config.double_word)?;
        butterflies = kernel.butterflies.len();
        let rc = RewriteConfig { target_has_double_word: config.double_word, ..RewriteConfig::new(layout.omega0, strategy) };
        let wide = lower_program(&build_widening_mul(layout), &rc).map_err(|e| CliError::Target(e.to_string()))?;
        strategies.push(StrategyCounts {
            strategy,
            kernel: count_ops(&kernel.program, layout.omega0),
            widening_mul: count_ops(&wide, layout.omega0),
            butterfly: kernel.butterfly.as_ref().map(|b| count_ops(b, layout.omega0)),
            ns_per_element: time_kernel(&spec, &kernel, config.seed)?,
        });
    }
    Ok(BenchReport {
        kernel: base.kind,
        lambda: layout.lambda,
        omega0: layout.omega0,
        padded: layout.padded_width(),
        depth: layout.depth(),
        n: base.n,
        butterflies,
        strategies,
    })
}

fn time_kernel(spec: &KernelSpec, kernel: &Kernel, seed: u64) -> Result<f64, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = &spec.modulus;
    let mut vec = |len: u64| -> Vec<BigUint> { (0..len).map(|_| rng.gen_biguint_below(q)).collect() };
    let (args, elements) = match spec.kind {
        k if k.is_scalar() => (vec![vec(1), vec(1)], 1),
        KernelKind::Axpy => (vec![vec(1), vec(spec.n), vec(spec.n)], spec.n),
        k if k.is_vector() => (vec![vec(spec.n), vec(spec.n)], spec.n),
        _ => (vec![vec(spec.n)], spec.n),
    };
    let calls = (TIMING_CALLS / elements).max(1);
    let start = Instant::now();
    for _ in 0..calls {
        apply(spec, &kernel.program, &args).map_err(|e| CliError::Target(e.to_string()))?;
    }
    Ok(start.elapsed().as_nanos() as f64 / (calls * elements) as f64)
}

impl BenchReport {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} lambda={} omega0={} padded={} depth={} n={}",
            self.kernel, self.lambda, self.omega0, self.padded, self.depth, self.n
        );
        for c in &self.strategies {
            let _ = writeln!(s, "\n[{}]", c.strategy.name());
            let _ = writeln!(s, "kernel ops: {} total, {} word muls", c.kernel.total(), c.kernel.word_muls());
            let _ = writeln!(s, "  {}", c.kernel);
            let _ = writeln!(
                s,
                "widening multiply {}x{}: {} word muls, {} total",
                self.padded,
                self.padded,
                c.widening_mul.word_muls(),
                c.widening_mul.total()
            );
            if let Some(b) = &c.butterfly {
                let _ = writeln!(
                    s,
                    "butterfly: {} ops, {} word muls; {} butterflies",
                    b.total(),
                    b.word_muls(),
                    self.butterflies
                );
            }
            let _ = writeln!(s, "interpreter: {:.0} ns per element (reference only)", c.ns_per_element);
        }
        s
    }
}

pub fn cmd_bench(config: &Config) -> Result<String, CliError> {
    Ok(bench_report(config)?.render())
}
