use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;

use super::c::function;
use super::{checked, literal_words, EmitError, EmitTarget, Result};
use crate::ir::Program;
use crate::kernels::{twiddle_table, Direction, Kernel, KernelKind};

pub const MAX_THREADS: u64 = 1024;

/// Thread mapping of a generated kernel: one thread per element for
/// pointwise kernels, one per butterfly within a stage for transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaunchSpec {
    /// Work items per problem.
    pub parallel: u64,
    pub threads_per_block: u64,
    pub batch: u32,
}

impl LaunchSpec {
    pub fn for_kernel(kernel: &Kernel, batch: u32) -> Self {
        let parallel = if kernel.spec.kind.is_ntt() { kernel.spec.n / 2 } else { kernel.spec.n };
        LaunchSpec { parallel, threads_per_block: parallel.clamp(1, MAX_THREADS), batch: batch.max(1) }
    }

    pub fn blocks(&self) -> u64 {
        self.parallel.div_ceil(self.threads_per_block)
    }

    pub fn check(&self) -> Result<()> {
        if self.threads_per_block > MAX_THREADS || self.threads_per_block == 0 {
            return Err(EmitError::LaunchTooWide { threads: self.threads_per_block });
        }
        Ok(())
    }
}

/// CUDA source for a lowered kernel. Pointwise kernels become one global
/// function over the element index; transforms become a bit-reversal kernel
/// followed by one kernel per stage (and a scaling kernel for the inverse),
/// all calling the butterfly body.
pub fn emit_cuda(kernel: &Kernel, target: &EmitTarget, launch: &LaunchSpec) -> Result<String> {
    launch.check()?;
    let mut target = target.clone();
    if let Some(batch) = target.batch {
        if batch == 0 {
            return Err(EmitError::Invalid("batch must be positive".into()));
        }
    }
    target.self_test = false;
    if kernel.spec.kind.is_ntt() {
        let body = kernel.butterfly.as_ref().ok_or_else(|| EmitError::Invalid("missing butterfly body".into()))?;
        emit_transform(kernel, body, &target, launch)
    } else {
        emit_pointwise(kernel, &target, launch)
    }
}

fn header(out: &mut String, kernel: &Kernel, target: &EmitTarget, launch: &LaunchSpec, program: &Program) {
    let spec = &kernel.spec;
    writeln!(out, "/* {}: {} kernel, generated from program `{}` */", target.function, spec.kind, program.name).unwrap();
    writeln!(
        out,
        "/* lambda = {}, omega0 = {}, n = {}, q = {}, strategy = {} */",
        spec.layout.lambda,
        spec.layout.omega0,
        spec.n,
        spec.modulus,
        spec.mul_strategy.name()
    )
    .unwrap();
    writeln!(
        out,
        "/* launch: {} threads per block, {} blocks, batch {} */",
        launch.threads_per_block,
        launch.blocks(),
        launch.batch
    )
    .unwrap();
    out.push_str("#include <stdint.h>\n#include <cuda_runtime.h>\n\n");
}

/// Ports of the body that do not vary per element.
fn broadcast(kernel: &Kernel, name: &str) -> bool {
    (kernel.spec.kind == KernelKind::Axpy && name == "alpha") || name == "q" || name == "mu"
}

fn port_words_fit(program: &Program, word: u32) -> Result<()> {
    for port in program.ports.inputs.iter().chain(&program.ports.outputs) {
        for &w in &port.words {
            if program.width(w) > word {
                return Err(EmitError::TargetMismatch {
                    var: program.name_of(w).to_string(),
                    width: program.width(w),
                    detail: format!("port words must fit the {}-bit word array", word),
                });
            }
        }
    }
    Ok(())
}

fn emit_pointwise(kernel: &Kernel, target: &EmitTarget, launch: &LaunchSpec) -> Result<String> {
    let program = &kernel.program;
    let types = checked(program, target)?;
    port_words_fit(program, target.word_type_width)?;
    let w = types.word_type();
    let name = &target.function;
    let body_name = format!("{name}_body");
    let mut body_target = target.clone();
    body_target.function = body_name.clone();

    let mut out = String::new();
    header(&mut out, kernel, target, launch, program);
    out.push_str(&function(program, &types, &body_target, "__device__ __forceinline__ void")?);
    out.push('\n');

    let mut params = Vec::new();
    let mut args = Vec::new();
    for port in &program.ports.inputs {
        params.push(format!("const {w} *__restrict__ {}", port.name));
        let k = port.words.len();
        let base = if broadcast(kernel, &port.name) { "batch" } else { "e" };
        for j in 0..k {
            args.push(format!("{}[{base} * {k} + {j}]", port.name));
        }
    }
    for port in &program.ports.outputs {
        params.push(format!("{w} *__restrict__ {}", port.name));
        let k = port.words.len();
        for j in 0..k {
            args.push(format!("&{}[e * {k} + {j}]", port.name));
        }
    }
    params.push("unsigned n".into());
    writeln!(out, "__global__ void {name}({})\n{{", params.join(", ")).unwrap();
    out.push_str("    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;\n");
    out.push_str("    const size_t batch = blockIdx.y;\n");
    out.push_str("    if (tid < n) {\n");
    out.push_str("        const size_t e = batch * n + tid;\n");
    writeln!(out, "        {body_name}({});", args.join(", ")).unwrap();
    out.push_str("    }\n}\n\n");

    let names: Vec<&str> = program.ports.inputs.iter().chain(&program.ports.outputs).map(|p| p.name.as_str()).collect();
    let mut host_params: Vec<String> = program
        .ports
        .inputs
        .iter()
        .map(|p| format!("const {w} *{}", p.name))
        .chain(program.ports.outputs.iter().map(|p| format!("{w} *{}", p.name)))
        .collect();
    host_params.push("unsigned batch, cudaStream_t stream".into());
    writeln!(out, "void {name}_launch({})\n{{", host_params.join(", ")).unwrap();
    writeln!(out, "    const dim3 block({});", launch.threads_per_block).unwrap();
    writeln!(out, "    const dim3 grid({}, batch);", launch.blocks()).unwrap();
    writeln!(out, "    {name}<<<grid, block, 0, stream>>>({}, {}u);", names.join(", "), kernel.spec.n).unwrap();
    out.push_str("}\n");
    Ok(out)
}

fn emit_transform(kernel: &Kernel, body: &Program, target: &EmitTarget, launch: &LaunchSpec) -> Result<String> {
    let spec = &kernel.spec;
    let ntt = spec.ntt.as_ref().ok_or_else(|| EmitError::Invalid("missing NTT parameters".into()))?;
    let types = checked(body, target)?;
    port_words_fit(body, target.word_type_width)?;
    let word = target.word_type_width;
    let w = types.word_type();
    let name = &target.function;
    let n = spec.n as usize;
    let bits = n.trailing_zeros();
    let words = body.ports.inputs[0].words.len();
    let direction = if spec.kind == KernelKind::Ntt { Direction::Forward } else { Direction::Inverse };
    let table = twiddle_table(ntt, direction);

    let mut out = String::new();
    header(&mut out, kernel, target, launch, body);
    let mut body_target = target.clone();
    body_target.function = format!("{name}_butterfly");
    out.push_str(&function(body, &types, &body_target, "__device__ __forceinline__ void")?);
    out.push('\n');

    writeln!(out, "__constant__ {w} {name}_twiddles[{}][{words}] = {{", table.len()).unwrap();
    for t in &table {
        writeln!(out, "    {{{}}},", literal_words(t, word, words)).unwrap();
    }
    out.push_str("};\n\n");

    let elem = |idx: &str| (0..words).map(|j| format!("a[({idx}) * {words} + {j}]")).collect::<Vec<_>>();
    let out_elem = |idx: &str| (0..words).map(|j| format!("&a[({idx}) * {words} + {j}]")).collect::<Vec<_>>();

    // bit reversal: the lower index of each pair swaps
    writeln!(out, "__global__ void {name}_bitrev({w} *data)\n{{").unwrap();
    out.push_str("    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;\n");
    writeln!(out, "    {w} *a = data + (size_t)blockIdx.y * {};", n * words).unwrap();
    writeln!(out, "    if (tid < {n}u) {{").unwrap();
    if bits == 0 {
        out.push_str("        const unsigned j = tid;\n");
    } else {
        writeln!(out, "        const unsigned j = __brev(tid) >> {};", 32 - bits).unwrap();
    }
    out.push_str("        if (tid < j) {\n");
    writeln!(out, "            for (int k = 0; k < {words}; ++k) {{").unwrap();
    writeln!(out, "                const {w} t = a[tid * {words} + k];").unwrap();
    writeln!(out, "                a[tid * {words} + k] = a[j * {words} + k];").unwrap();
    writeln!(out, "                a[j * {words} + k] = t;").unwrap();
    out.push_str("            }\n        }\n    }\n}\n\n");

    let mut len = 2;
    let mut stage = 0;
    while len <= n {
        let half = len / 2;
        let step = n / len;
        writeln!(out, "/* stage {stage}: {} butterflies, span {len} */", n / 2).unwrap();
        writeln!(out, "__global__ void {name}_stage{stage}({w} *data)\n{{").unwrap();
        out.push_str("    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;\n");
        writeln!(out, "    {w} *a = data + (size_t)blockIdx.y * {};", n * words).unwrap();
        writeln!(out, "    if (tid < {}u) {{", n / 2).unwrap();
        writeln!(out, "        const unsigned k = tid % {half}u;").unwrap();
        writeln!(out, "        const unsigned i = (tid / {half}u) * {len}u + k;").unwrap();
        writeln!(out, "        const unsigned j = i + {half}u;").unwrap();
        writeln!(out, "        const {w} *w = {name}_twiddles[k * {step}u];").unwrap();
        let mut args = elem("i");
        args.extend(elem("j"));
        args.extend((0..words).map(|j| format!("w[{j}]")));
        let mut outs = out_elem("i");
        outs.extend(out_elem("j"));
        // inputs go by value, so writing back in place is safe
        args.extend(outs);
        writeln!(out, "        {name}_butterfly({});", args.join(", ")).unwrap();
        out.push_str("    }\n}\n\n");
        len *= 2;
        stage += 1;
    }

    if direction == Direction::Inverse {
        let zero = literal_words(&BigUint::zero(), word, words);
        let scale = literal_words(&ntt.n_inv, word, words);
        writeln!(out, "__global__ void {name}_scale({w} *data)\n{{").unwrap();
        out.push_str("    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;\n");
        writeln!(out, "    {w} *a = data + (size_t)blockIdx.y * {};", n * words).unwrap();
        writeln!(out, "    if (tid < {n}u) {{").unwrap();
        writeln!(out, "        const {w} zero[{words}] = {{{zero}}};").unwrap();
        writeln!(out, "        const {w} scale[{words}] = {{{scale}}};").unwrap();
        writeln!(out, "        {w} drop[{words}];").unwrap();
        let mut args: Vec<String> = (0..words).map(|j| format!("zero[{j}]")).collect();
        args.extend(elem("tid"));
        args.extend((0..words).map(|j| format!("scale[{j}]")));
        args.extend(out_elem("tid"));
        args.extend((0..words).map(|j| format!("&drop[{j}]")));
        writeln!(out, "        {name}_butterfly({});", args.join(", ")).unwrap();
        out.push_str("    }\n}\n\n");
    }

    writeln!(out, "void {name}_launch({w} *data, unsigned batch, cudaStream_t stream)\n{{").unwrap();
    writeln!(out, "    const dim3 block({});", launch.threads_per_block).unwrap();
    let full_blocks = (n as u64).div_ceil(launch.threads_per_block);
    writeln!(out, "    const dim3 all({full_blocks}, batch);").unwrap();
    writeln!(out, "    const dim3 half({}, batch);", launch.blocks()).unwrap();
    writeln!(out, "    {name}_bitrev<<<all, block, 0, stream>>>(data);").unwrap();
    for s in 0..stage {
        writeln!(out, "    {name}_stage{s}<<<half, block, 0, stream>>>(data);").unwrap();
    }
    if direction == Direction::Inverse {
        writeln!(out, "    {name}_scale<<<all, block, 0, stream>>>(data);").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
