//! Compiling and running emitted C on the host, for differential checks
//! against the interpreter.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

/// Overrides the C compiler. Set it to an empty string to disable host
/// compilation altogether.
pub const TOOLCHAIN_ENV: &str = "MOMA_CC";

#[derive(Debug, Error)]
pub enum HostError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("compilation failed:\n{0}")]
    Compile(String),
    #[error("self-test exited with {status}:\n{stderr}")]
    Run { status: String, stderr: String },
}

/// The compiler from `MOMA_CC`, else the first of `cc`, `gcc`, `clang` on
/// the path.
pub fn find_compiler() -> Option<PathBuf> {
    if let Some(cc) = std::env::var_os(TOOLCHAIN_ENV) {
        return (!cc.is_empty()).then(|| PathBuf::from(cc));
    }
    let path = std::env::var_os("PATH")?;
    ["cc", "gcc", "clang"]
        .iter()
        .flat_map(|name| std::env::split_paths(&path).map(move |dir| dir.join(name)))
        .find(|p| p.is_file())
}

/// A compiled self-test binary in a private scratch directory, removed on
/// drop.
#[derive(Debug)]
pub struct Compiled {
    dir: PathBuf,
    exe: PathBuf,
}

static COUNTER: AtomicUsize = AtomicUsize::new(0);

pub fn compile(source: &str, compiler: &Path) -> Result<Compiled, HostError> {
    let id = COUNTER.fetch_add(1, Ordering::Relaxed);
    let dir = std::env::temp_dir().join(format!("moma-{}-{id}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let compiled = Compiled { exe: dir.join("selftest"), dir };
    let src = compiled.dir.join("kernel.c");
    std::fs::write(&src, source)?;
    let output = Command::new(compiler)
        .args(["-std=gnu99", "-O1", "-w", "-o"])
        .arg(&compiled.exe)
        .arg(&src)
        .output()?;
    if !output.status.success() {
        return Err(HostError::Compile(String::from_utf8_lossy(&output.stderr).into_owned()));
    }
    Ok(compiled)
}

impl Compiled {
    /// Feeds `input` (one test vector per line) and returns stdout.
    pub fn run(&self, input: &str) -> Result<String, HostError> {
        let mut child =
            Command::new(&self.exe).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn()?;
        let mut stdin = child.stdin.take().expect("piped stdin");
        let input = input.to_string();
        let writer = std::thread::spawn(move || stdin.write_all(input.as_bytes()));
        let output = child.wait_with_output()?;
        writer.join().expect("writer thread")?;
        if !output.status.success() {
            return Err(HostError::Run {
                status: output.status.to_string(),
                stderr: String::from_utf8_lossy(&output.stderr).into_owned(),
            });
        }
        Ok(String::from_utf8_lossy(&output.stdout).into_owned())
    }
}

impl Drop for Compiled {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.dir);
    }
}
