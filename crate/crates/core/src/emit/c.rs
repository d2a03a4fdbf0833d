use std::fmt::Write as _;

use super::{checked, identifiers, input_words, output_words, EmitTarget, Language, Result, Types};
use crate::ir::Program;

/// C99 source for `program`: one function taking input words by value and
/// output words by pointer, plus an optional self-test `main`.
pub fn emit_c(program: &Program, target: &EmitTarget) -> Result<String> {
    let types = checked(program, target)?;
    let mut out = String::new();
    writeln!(out, "/* {}: generated from program `{}` */", target.function, program.name).unwrap();
    for (k, v) in &program.attributes {
        writeln!(out, "/* {k} = {v} */").unwrap();
    }
    out.push_str("#include <stdint.h>\n");
    if target.self_test {
        out.push_str("#include <stdio.h>\n#include <string.h>\n");
    }
    out.push('\n');
    out.push_str(&function(program, &types, target, "void")?);
    if target.self_test && target.language == Language::C {
        out.push('\n');
        out.push_str(&self_test(program, &types, target)?);
    }
    Ok(out)
}

/// The function definition shared by the C and CUDA emitters. `qualifier`
/// precedes the return type (`void`, `__device__ void`).
pub(crate) fn function(program: &Program, types: &Types, target: &EmitTarget, qualifier: &str) -> Result<String> {
    let ids = identifiers(program);
    let inputs = input_words(program)?;
    let outputs = output_words(program);
    let mut params: Vec<String> =
        inputs.iter().map(|&v| format!("{} {}", types.storage(program.width(v)), ids[v.index()])).collect();
    params.extend(
        outputs.iter().enumerate().map(|(k, &v)| format!("{} *out{k}", types.storage(program.width(v)))),
    );
    let mut out = String::new();
    writeln!(out, "{qualifier} {}({})", target.function, params.join(", ")).unwrap();
    out.push_str("{\n");
    out.push_str(&super::statements(program, types, &ids, "    "));
    for (k, &v) in outputs.iter().enumerate() {
        writeln!(out, "    *out{k} = {};", ids[v.index()]).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn self_test(program: &Program, types: &Types, target: &EmitTarget) -> Result<String> {
    let inputs = input_words(program)?;
    let outputs = output_words(program);
    let hex = super::type_name(types.widest(program).max(64));
    let mut out = String::new();
    writeln!(out, "static {hex} moma_parse(const char *s)\n{{").unwrap();
    writeln!(out, "    {hex} v = 0;").unwrap();
    out.push_str(
        "    for (; *s; ++s) {\n        int d = *s <= '9' ? *s - '0' : (*s | 32) - 'a' + 10;\n        v = (v << 4) | (unsigned)d;\n    }\n    return v;\n}\n\n",
    );
    writeln!(out, "static void moma_print({hex} v)\n{{").unwrap();
    out.push_str(
        "    char tmp[40];\n    int i = 0;\n    do {\n        tmp[i++] = \"0123456789abcdef\"[(int)(v & 15)];\n        v >>= 4;\n    } while (v);\n    while (i)\n        putchar(tmp[--i]);\n}\n\n",
    );
    out.push_str("static char moma_line[1 << 20];\n\nint main(void)\n{\n");
    out.push_str("    while (fgets(moma_line, sizeof moma_line, stdin)) {\n");
    out.push_str("        const char *sep = \" \\t\\r\\n\";\n        char *tok = strtok(moma_line, sep);\n");
    out.push_str("        if (!tok)\n            continue;\n");
    for (k, &v) in inputs.iter().enumerate() {
        if k > 0 {
            out.push_str("        tok = strtok(NULL, sep);\n        if (!tok)\n            return 1;\n");
        }
        writeln!(out, "        const {ty} in{k} = ({ty})moma_parse(tok);", ty = types.storage(program.width(v))).unwrap();
    }
    for (k, &v) in outputs.iter().enumerate() {
        writeln!(out, "        {} out{k};", types.storage(program.width(v))).unwrap();
    }
    let mut args: Vec<String> = (0..inputs.len()).map(|k| format!("in{k}")).collect();
    args.extend((0..outputs.len()).map(|k| format!("&out{k}")));
    writeln!(out, "        {}({});", target.function, args.join(", ")).unwrap();
    for k in 0..outputs.len() {
        if k > 0 {
            out.push_str("        putchar(' ');\n");
        }
        writeln!(out, "        moma_print(out{k});").unwrap();
    }
    out.push_str("        putchar('\\n');\n    }\n    return 0;\n}\n");
    Ok(out)
}
