//! Seeded differential verification of lowered kernels.

use num_bigint::{BigUint, RandBigInt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use moma::emit::host::{compile, find_compiler};
use moma::emit::{emit_c, format_test_vector, parse_test_output, EmitTarget, Language};
use moma::ir::{count_ops, run_ports, OpCounts, Program};
use moma::kernels::{build, Kernel, KernelKind, KernelSpec};
use moma::oracle::{convolve_mod, decimal, dft_mod, oracle_modop, ModOp};
use moma::rewrite::MulStrategy;

use crate::{CliError, Config};

/// Listed reproducers are capped; counts are always complete.
const MAX_LISTED: usize = 32;
/// Operand pairs an exhaustive sweep may visit.
const MAX_EXHAUSTIVE: u64 = 1 << 24;
/// Budget of multiply-adds for direct-sum transform checks.
const DIRECT_SUM_BUDGET: u64 = 1 << 20;
const CONVOLUTION_CASES: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: Vec<String>,
    pub expected: Vec<String>,
    pub got: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kernel: KernelKind,
    pub lambda: u32,
    pub omega0: u32,
    pub n: u64,
    #[serde(with = "decimal")]
    pub q: BigUint,
    pub strategy: MulStrategy,
    pub seed: u64,
    pub double_word: bool,
    pub exhaustive: bool,
    pub instructions: usize,
    pub opcounts: OpCounts,
    pub checks: Vec<Check>,
    pub total_failures: u64,
    pub failures: Vec<Failure>,
    pub host_c: String,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn summary(&self) -> String {
        let cases: u64 = self.checks.iter().map(|c| c.cases).sum();
        format!(
            "{} lambda={} omega0={} n={}: {} checks, {} cases, {} failures",
            self.kernel,
            self.lambda,
            self.omega0,
            self.n,
            self.checks.len(),
            cases,
            self.total_failures
        )
    }
}

/// One call of the kernel program: port values and, when the oracle was
/// consulted, the expected outputs.
struct Call {
    values: Vec<BigUint>,
    expected: Option<Vec<BigUint>>,
}

type Outputs = Result<Vec<BigUint>, String>;

fn strings(values: &[BigUint]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn got_strings(got: &Outputs) -> Vec<String> {
    match got {
        Ok(v) => strings(v),
        Err(e) => vec![format!("error: {e}")],
    }
}

#[derive(Default)]
struct Tally {
    checks: Vec<Check>,
    failures: Vec<Failure>,
    total: u64,
}

impl Tally {
    fn record(&mut self, name: &str, cases: u64, failures: Vec<Failure>) {
        let count = failures.len() as u64;
        self.checks.push(Check { name: name.into(), cases, failures: count });
        self.total += count;
        self.failures.extend(failures);
    }
}

fn scalar_op(kind: KernelKind) -> ModOp {
    match kind.scalar() {
        KernelKind::Addmod => ModOp::Add,
        KernelKind::Submod => ModOp::Sub,
        _ => ModOp::Mul,
    }
}

/// Runs the differential checks described by `config` and returns the
/// report; mismatches are reported, not raised.
pub fn cmd_verify(config: &Config) -> Result<VerifyReport, CliError> {
    let spec = config.spec()?;
    let kernel = build(&spec)?.lower(config.double_word)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tally = Tally::default();

    let calls = match spec.kind {
        k if k.is_scalar() => scalar_calls(config, &spec, &mut rng)?,
        k if k.is_vector() => {
            if config.exhaustive {
                return Err(CliError::Usage("--exhaustive applies to scalar kernels only".into()));
            }
            vector_calls(config, &spec, &mut rng)
        }
        _ => {
            if config.exhaustive {
                return Err(CliError::Usage("--exhaustive applies to scalar kernels only".into()));
            }
            transform_calls(config, &spec, &mut rng)
        }
    };

    let program = &kernel.program;
    let got: Vec<Outputs> =
        calls.par_iter().map(|c| run_ports(program, &c.values, true).map_err(|e| e.to_string())).collect();

    let mut failures = Vec::new();
    let mut checked = 0;
    for (call, got) in calls.iter().zip(&got) {
        let Some(expected) = &call.expected else { continue };
        checked += 1;
        if got.as_ref().ok() != Some(expected) {
            failures.push(Failure {
                check: "oracle".into(),
                inputs: strings(&call.values),
                expected: strings(expected),
                got: got_strings(got),
            });
        }
    }
    tally.record("oracle", checked, failures);

    if spec.kind.is_ntt() {
        transform_checks(&spec, &kernel, config.double_word, &calls, &got, &mut rng, &mut tally)?;
    }

    let host_c = host_check(config, program, &calls, &got, &mut tally);

    tally.failures.sort();
    tally.failures.truncate(MAX_LISTED);
    Ok(VerifyReport {
        kernel: spec.kind,
        lambda: spec.layout.lambda,
        omega0: spec.layout.omega0,
        n: spec.n,
        q: spec.modulus.clone(),
        strategy: spec.mul_strategy,
        seed: config.seed,
        double_word: config.double_word,
        exhaustive: config.exhaustive,
        instructions: program.body.len(),
        opcounts: count_ops(program, spec.layout.omega0),
        checks: tally.checks,
        total_failures: tally.total,
        failures: tally.failures,
        host_c,
    })
}

fn scalar_calls(config: &Config, spec: &KernelSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Call>, CliError> {
    let q = &spec.modulus;
    let op = scalar_op(spec.kind);
    let call = |a: BigUint, b: BigUint| {
        let expected = oracle_modop(op, &a, &b, q).expect("modulus > 1");
        Call { values: vec![a, b], expected: Some(vec![expected]) }
    };
    if config.exhaustive {
        let qv = u64::try_from(q).ok().filter(|q| q.saturating_mul(*q) <= MAX_EXHAUSTIVE).ok_or_else(|| {
            CliError::Usage(format!("modulus {q} too large for an exhaustive sweep; pass a smaller --modulus"))
        })?;
        return Ok((0..qv).flat_map(|a| (0..qv).map(move |b| (a, b))).map(|(a, b)| call(a.into(), b.into())).collect());
    }
    let edges = [BigUint::from(0u8), BigUint::from(1u8), q - 1u8];
    let mut calls = Vec::new();
    for a in &edges {
        for b in &edges {
            calls.push(call(a.clone(), b.clone()));
        }
    }
    for _ in 0..config.trials {
        let a = rng.gen_biguint_below(q);
        let b = rng.gen_biguint_below(q);
        calls.push(call(a, b));
    }
    Ok(calls)
}

fn vector_calls(config: &Config, spec: &KernelSpec, rng: &mut ChaCha8Rng) -> Vec<Call> {
    let q = &spec.modulus;
    let mut calls = Vec::new();
    for _ in 0..config.trials {
        let alpha = rng.gen_biguint_below(q);
        for _ in 0..spec.n {
            let x = rng.gen_biguint_below(q);
            let y = rng.gen_biguint_below(q);
            let call = if spec.kind == KernelKind::Axpy {
                let expected = (&alpha * &x + &y) % q;
                Call { values: vec![alpha.clone(), x, y], expected: Some(vec![expected]) }
            } else {
                let expected = oracle_modop(scalar_op(spec.kind), &x, &y, q).expect("modulus > 1");
                Call { values: vec![x, y], expected: Some(vec![expected]) }
            };
            calls.push(call);
        }
    }
    calls
}

fn transform_calls(config: &Config, spec: &KernelSpec, rng: &mut ChaCha8Rng) -> Vec<Call> {
    let params = spec.ntt.as_ref().expect("transform spec");
    let n = spec.n;
    let direct = (DIRECT_SUM_BUDGET / (n * n)).max(1);
    (0..config.trials)
        .map(|t| {
            let x: Vec<BigUint> = (0..n).map(|_| rng.gen_biguint_below(&params.p)).collect();
            let expected = (t < direct)
                .then(|| dft_mod(&x, params, spec.kind == KernelKind::Intt).expect("matching length"));
            Call { values: x, expected }
        })
        .collect()
}

/// Roundtrip through the opposite direction and the convolution theorem.
fn transform_checks(
    spec: &KernelSpec,
    kernel: &Kernel,
    double_word: bool,
    calls: &[Call],
    got: &[Outputs],
    rng: &mut ChaCha8Rng,
    tally: &mut Tally,
) -> Result<(), CliError> {
    let params = spec.ntt.as_ref().expect("transform spec");
    let mut partner_spec = spec.clone();
    partner_spec.kind = if spec.kind == KernelKind::Ntt { KernelKind::Intt } else { KernelKind::Ntt };
    let partner = build(&partner_spec)?.lower(double_word)?;
    let (fwd, inv) = if spec.kind == KernelKind::Ntt {
        (&kernel.program, &partner.program)
    } else {
        (&partner.program, &kernel.program)
    };

    let back: Vec<Option<Outputs>> = got
        .par_iter()
        .map(|g| g.as_ref().ok().map(|y| run_ports(&partner.program, y, true).map_err(|e| e.to_string())))
        .collect();
    let mut failures = Vec::new();
    for ((call, g), b) in calls.iter().zip(got).zip(&back) {
        let ok = matches!(b, Some(Ok(v)) if *v == call.values);
        if !ok {
            failures.push(Failure {
                check: "roundtrip".into(),
                inputs: strings(&call.values),
                expected: strings(&call.values),
                got: b.as_ref().map(got_strings).unwrap_or_else(|| got_strings(g)),
            });
        }
    }
    tally.record("roundtrip", calls.len() as u64, failures);

    let p = &params.p;
    let cases = (calls.len() as u64).min(CONVOLUTION_CASES);
    let mut failures = Vec::new();
    for call in calls.iter().take(cases as usize) {
        let f = &call.values;
        let g: Vec<BigUint> = (0..spec.n).map(|_| rng.gen_biguint_below(p)).collect();
        let want = convolve_mod(f, &g, p).expect("matching length");
        let result = (|| -> Result<Vec<BigUint>, String> {
            let ff = run_ports(fwd, f, true).map_err(|e| e.to_string())?;
            let gg = run_ports(fwd, &g, true).map_err(|e| e.to_string())?;
            let prod: Vec<BigUint> = ff.iter().zip(&gg).map(|(a, b)| (a * b) % p).collect();
            run_ports(inv, &prod, true).map_err(|e| e.to_string())
        })();
        if result.as_ref().ok() != Some(&want) {
            let mut inputs = strings(f);
            inputs.extend(strings(&g));
            failures.push(Failure { check: "convolution".into(), inputs, expected: strings(&want), got: got_strings(&result) });
        }
    }
    tally.record("convolution", cases, failures);
    Ok(())
}

/// Compiles the emitted C with a self-test main and compares it with the
/// interpreter on every call.
fn host_check(config: &Config, program: &Program, calls: &[Call], got: &[Outputs], tally: &mut Tally) -> String {
    if config.target != Language::C {
        return "not applicable to this target".into();
    }
    if !config.compile {
        return "disabled".into();
    }
    let Some(cc) = find_compiler() else {
        return "skipped: no C compiler found".into();
    };
    let mut target = EmitTarget::c(config.word, "kernel");
    target.has_double_word = config.double_word;
    target.self_test = true;
    let fail = |tally: &mut Tally, detail: String| {
        tally.record(
            "host_c",
            1,
            vec![Failure { check: "host_c".into(), inputs: vec![], expected: vec![], got: vec![detail.clone()] }],
        );
        format!("failed: {detail}")
    };
    let source = match emit_c(program, &target) {
        Ok(s) => s,
        Err(e) => return fail(tally, e.to_string()),
    };
    let binary = match compile(&source, &cc) {
        Ok(b) => b,
        Err(e) => return fail(tally, e.to_string()),
    };
    let input: String = calls.iter().map(|c| format_test_vector(program, &c.values) + "\n").collect();
    let output = match binary.run(&input) {
        Ok(o) => o,
        Err(e) => return fail(tally, e.to_string()),
    };
    let lines: Vec<&str> = output.lines().collect();
    let mut failures = Vec::new();
    for (i, call) in calls.iter().enumerate() {
        let compiled = lines.get(i).and_then(|l| parse_test_output(program, l));
        if compiled.as_ref() != got[i].as_ref().ok() {
            failures.push(Failure {
                check: "host_c".into(),
                inputs: strings(&call.values),
                expected: got_strings(&got[i]),
                got: compiled.map(|v| strings(&v)).unwrap_or_else(|| vec!["missing output".into()]),
            });
        }
    }
    let agreed = calls.len() - failures.len();
    tally.record("host_c", calls.len() as u64, failures);
    format!("compiled C agreed with the interpreter on {agreed} of {} calls", calls.len())
}
