//! The `moma` command line: parameter search, kernel generation,
//! differential verification and static cost reports.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use moma::emit::{emit_c, emit_cuda, emit_manifest, EmitError, EmitTarget, Language, LaunchSpec};
use moma::kernels::{build, Kernel, KernelError, KernelKind, KernelSpec};
use moma::ir::WordLayout;
use moma::oracle::{compute_barrett, decimal, find_ntt_params};
use moma::rewrite::MulStrategy;

pub mod bench;
pub mod verify;

pub use bench::cmd_bench;
pub use verify::{cmd_verify, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARAMS: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;
pub const EXIT_TARGET: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "moma", version, about = "Generate and verify multi-word modular arithmetic kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build, lower and emit a kernel with its manifest.
    Gen(Options),
    /// Differentially test a lowered kernel against the big-integer oracle.
    Verify(Options),
    /// Print the modulus, Barrett and NTT parameters for a width.
    Params(Options),
    /// Report static operation counts.
    Bench(Options),
}

#[derive(Debug, Clone, Args)]
struct Options {
    /// addmod, submod, mulmod, vadd, vsub, vmul, axpy, ntt or intt.
    #[arg(long, default_value = "mulmod")]
    kernel: KernelKind,
    /// Operand bit width.
    #[arg(long, short = 'd', default_value_t = 128)]
    bits: u32,
    /// Machine word width: 8, 16, 32 or 64.
    #[arg(long, default_value_t = 64)]
    word: u32,
    /// Element count of vector kernels and transforms.
    #[arg(long, default_value_t = 1)]
    size: u64,
    /// schoolbook or karatsuba.
    #[arg(long, default_value = "schoolbook")]
    strategy: MulStrategy,
    /// c or cuda.
    #[arg(long, default_value = "c")]
    target: Language,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check every operand pair instead of random samples (scalar kernels).
    #[arg(long)]
    exhaustive: bool,
    /// Output directory for `gen`, report file for `verify`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use this modulus instead of the scanned prime (not for transforms).
    #[arg(long)]
    modulus: Option<BigUint>,
    /// Target lacks a double-width word type.
    #[arg(long)]
    no_double_word: bool,
    /// Independent problems per CUDA launch.
    #[arg(long, default_value_t = 1)]
    batch: u32,
    /// Append a stdin/stdout self-test main to generated C.
    #[arg(long)]
    self_test: bool,
    /// Skip compiling generated C during verification.
    #[arg(long)]
    no_compile: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gen,
    Verify,
    Params,
    Bench,
}

/// Validated settings of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub command: CommandKind,
    pub kernel: KernelKind,
    pub bits: u32,
    pub word: u32,
    pub size: u64,
    pub strategy: MulStrategy,
    pub target: Language,
    pub trials: u64,
    pub seed: u64,
    pub exhaustive: bool,
    pub out: Option<PathBuf>,
    pub modulus: Option<BigUint>,
    pub double_word: bool,
    pub batch: u32,
    pub self_test: bool,
    pub compile: bool,
}

impl Config {
    pub fn new(command: CommandKind, kernel: KernelKind, bits: u32, word: u32, size: u64) -> Self {
        Config {
            command,
            kernel,
            bits,
            word,
            size,
            strategy: MulStrategy::Schoolbook,
            target: Language::C,
            trials: 1000,
            seed: 0,
            exhaustive: false,
            out: None,
            modulus: None,
            double_word: true,
            batch: 1,
            self_test: false,
            compile: true,
        }
    }

    fn from_options(command: CommandKind, o: Options) -> Self {
        Config {
            command,
            kernel: o.kernel,
            bits: o.bits,
            word: o.word,
            size: o.size,
            strategy: o.strategy,
            target: o.target,
            trials: o.trials,
            seed: o.seed,
            exhaustive: o.exhaustive,
            out: o.out,
            modulus: o.modulus,
            double_word: !o.no_double_word,
            batch: o.batch,
            self_test: o.self_test,
            compile: !o.no_compile,
        }
    }

    pub fn check(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.command != CommandKind::Params {
            if !matches!(self.word, 8 | 16 | 32 | 64) {
                return usage(format!("--word must be 8, 16, 32 or 64, got {}", self.word));
            }
            if self.bits < self.word {
                return usage(format!("--bits {} is below --word {}", self.bits, self.word));
            }
        }
        if self.kernel.is_ntt() && (self.size < 2 || !self.size.is_power_of_two()) {
            return usage(format!("transform size {} is not a power of two >= 2", self.size));
        }
        if self.size == 0 {
            return usage("--size must be positive".into());
        }
        if self.trials == 0 {
            return usage("--trials must be at least 1".into());
        }
        if self.batch == 0 {
            return usage("--batch must be at least 1".into());
        }
        if self.modulus.is_some() && self.kernel.is_ntt() {
            return usage("transforms choose their own prime; drop --modulus".into());
        }
        Ok(())
    }

    pub fn layout(&self) -> WordLayout {
        WordLayout::new(self.bits, self.word)
    }

    pub fn spec(&self) -> Result<KernelSpec, CliError> {
        let spec = match &self.modulus {
            Some(q) => KernelSpec::with_modulus(self.kernel, self.layout(), self.size, q.clone(), self.strategy),
            None => KernelSpec::new(self.kernel, self.bits, self.word, self.size, self.strategy),
        };
        Ok(spec?)
    }

    /// File stem and C function name of the generated kernel.
    pub fn name(&self) -> String {
        let mut name = format!("{}_{}_{}", self.kernel, self.bits, self.word);
        if !self.kernel.is_scalar() {
            name.push_str(&format!("_n{}", self.size));
        }
        name
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Params(String),
    #[error("verification failed with {0} mismatches")]
    Verify(u64),
    #[error("{0}")]
    Target(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Params(_) => EXIT_PARAMS,
            CliError::Verify(_) => EXIT_VERIFY,
            CliError::Target(_) => EXIT_TARGET,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::Rewrite(r) => CliError::Target(r.to_string()),
            other => CliError::Params(other.to_string()),
        }
    }
}

impl From<EmitError> for CliError {
    fn from(e: EmitError) -> Self {
        CliError::Target(e.to_string())
    }
}

/// Result of one invocation, for `main` and for in-process tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (kind, options) = match cli.command {
        Command::Gen(o) => (CommandKind::Gen, o),
        Command::Verify(o) => (CommandKind::Verify, o),
        Command::Params(o) => (CommandKind::Params, o),
        Command::Bench(o) => (CommandKind::Bench, o),
    };
    let config = Config::from_options(kind, options);
    match dispatch(&config) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err((e, stdout)) => Outcome { code: e.exit_code(), stdout, stderr: format!("error: {e}\n") },
    }
}

fn dispatch(config: &Config) -> Result<String, (CliError, String)> {
    config.check().map_err(|e| (e, String::new()))?;
    match config.command {
        CommandKind::Params => cmd_params(config).map_err(|e| (e, String::new())),
        CommandKind::Bench => cmd_bench(config).map_err(|e| (e, String::new())),
        CommandKind::Gen => {
            let out = cmd_gen(config).map_err(|e| (e, String::new()))?;
            Ok(format!("wrote {}\nwrote {}\n", out.source_path.display(), out.manifest_path.display()))
        }
        CommandKind::Verify => {
            let report = cmd_verify(config).map_err(|e| (e, String::new()))?;
            let text = report.to_json();
            let shown = match &config.out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| (CliError::Io(e), String::new()))?;
                    format!("{}\nreport written to {}\n", report.summary(), path.display())
                }
                None => text,
            };
            match report.total_failures {
                0 => Ok(shown),
                n => Err((CliError::Verify(n), shown)),
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct ParamsReport {
    lambda: u32,
    n: u64,
    #[serde(with = "decimal")]
    q: BigUint,
    #[serde(with = "decimal::option")]
    mu: Option<BigUint>,
    #[serde(with = "decimal::option")]
    p: Option<BigUint>,
    #[serde(with = "decimal::option")]
    root: Option<BigUint>,
    #[serde(with = "decimal::option")]
    root_inv: Option<BigUint>,
    #[serde(with = "decimal::option")]
    n_inv: Option<BigUint>,
}

/// Modulus, Barrett constant and NTT parameters as a JSON fragment.
pub fn cmd_params(config: &Config) -> Result<String, CliError> {
    let report = match &config.modulus {
        Some(q) => ParamsReport {
            lambda: config.bits,
            n: config.size,
            q: q.clone(),
            mu: compute_barrett(q, config.bits).ok().map(|b| b.mu),
            p: None,
            root: None,
            root_inv: None,
            n_inv: None,
        },
        None => {
            let ntt = find_ntt_params(config.bits, config.size).map_err(|e| CliError::Params(e.to_string()))?;
            let mu = compute_barrett(&ntt.p, config.bits).map_err(|e| CliError::Params(e.to_string()))?.mu;
            ParamsReport {
                lambda: config.bits,
                n: config.size,
                q: ntt.p.clone(),
                mu: Some(mu),
                p: Some(ntt.p),
                root: Some(ntt.root),
                root_inv: Some(ntt.root_inv),
                n_inv: Some(ntt.n_inv),
            }
        }
    };
    Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n")
}

#[derive(Debug, Clone)]
pub struct GenOutput {
    pub kernel: Kernel,
    pub source: String,
    pub manifest: String,
    pub source_path: PathBuf,
    pub manifest_path: PathBuf,
}

/// Generated source and manifest text, without touching the file system.
pub fn generate(config: &Config) -> Result<(Kernel, String, String), CliError> {
    let spec = config.spec()?;
    let kernel = build(&spec)?.lower(config.double_word)?;
    let name = config.name();
    let mut target = match config.target {
        Language::C => EmitTarget::c(config.word, &name),
        Language::Cuda => EmitTarget::cuda(config.word, &name),
    };
    target.has_double_word = config.double_word;
    target.self_test = config.self_test;
    target.batch = Some(config.batch);
    let source = match config.target {
        Language::C => emit_c(&kernel.program, &target)?,
        Language::Cuda => emit_cuda(&kernel, &target, &LaunchSpec::for_kernel(&kernel, config.batch))?,
    };
    let manifest = emit_manifest(&spec, &kernel.program, &source, config.double_word);
    Ok((kernel, source, manifest))
}

/// Runs the whole pipeline and writes `<name>.c|.cu` and `<name>.json`
/// into the output directory.
pub fn cmd_gen(config: &Config) -> Result<GenOutput, CliError> {
    let (kernel, source, manifest) = generate(config)?;
    let dir = config.out.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    let ext = match config.target {
        Language::C => "c",
        Language::Cuda => "cu",
    };
    let source_path = dir.join(format!("{}.{ext}", config.name()));
    let manifest_path = dir.join(format!("{}.json", config.name()));
    std::fs::write(&source_path, &source)?;
    std::fs::write(&manifest_path, &manifest)?;
    Ok(GenOutput { kernel, source, manifest, source_path, manifest_path })
}
