use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{Instr, Op, OpKind, Port, Ports, Program, Var, VarId};

/// Stable, name-based JSON form of a [`Program`]. Constants are decimal
/// strings so arbitrary widths survive the round trip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramJson {
    pub name: String,
    pub vars: Vec<Var>,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub body: Vec<InstrJson>,
    pub ports: PortsJson,
    #[serde(default)]
    pub attributes: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstrJson {
    pub op: OpKind,
    pub dest: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PortJson {
    pub name: String,
    pub width: u32,
    pub words: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PortsJson {
    pub inputs: Vec<PortJson>,
    pub outputs: Vec<PortJson>,
}

impl ProgramJson {
    pub fn from_program(p: &Program) -> Self {
        let names = |ids: &[VarId]| ids.iter().map(|&i| p.name_of(i).to_string()).collect::<Vec<_>>();
        let port = |port: &Port| PortJson { name: port.name.clone(), width: port.width, words: names(&port.words) };
        ProgramJson {
            name: p.name.clone(),
            vars: p.vars.clone(),
            inputs: names(&p.inputs),
            outputs: names(&p.outputs),
            body: p
                .body
                .iter()
                .map(|i| InstrJson {
                    op: i.op.kind(),
                    dest: p.name_of(i.dest).to_string(),
                    args: names(&i.args),
                    value: match &i.op {
                        Op::Const(v) => Some(v.to_str_radix(10)),
                        _ => None,
                    },
                    shift: i.op.shift(),
                })
                .collect(),
            ports: PortsJson {
                inputs: p.ports.inputs.iter().map(port).collect(),
                outputs: p.ports.outputs.iter().map(port).collect(),
            },
            attributes: p.attributes.clone(),
        }
    }

    pub fn into_program(self) -> Result<Program, String> {
        let index: HashMap<&str, VarId> =
            self.vars.iter().enumerate().map(|(i, v)| (v.name.as_str(), VarId(i as u32))).collect();
        if index.len() != self.vars.len() {
            return Err("duplicate variable names".into());
        }
        let id = |n: &String| index.get(n.as_str()).copied().ok_or_else(|| format!("unknown variable {n}"));
        let ids = |ns: &[String]| ns.iter().map(id).collect::<Result<Vec<_>, _>>();
        let port = |p: &PortJson| -> Result<Port, String> {
            Ok(Port { name: p.name.clone(), width: p.width, words: ids(&p.words)? })
        };
        let mut body = Vec::with_capacity(self.body.len());
        for i in &self.body {
            let shift = || i.shift.ok_or_else(|| format!("{} needs a shift amount", i.op));
            let op = match i.op {
                OpKind::Const => {
                    let v = i.value.as_deref().ok_or("const without value")?;
                    Op::Const(BigUint::parse_bytes(v.as_bytes(), 10).ok_or_else(|| format!("bad constant {v}"))?)
                }
                OpKind::Add => Op::Add,
                OpKind::Sub => Op::Sub,
                OpKind::Mul => Op::Mul,
                OpKind::Shl => Op::Shl(shift()?),
                OpKind::Shr => Op::Shr(shift()?),
                OpKind::And => Op::And,
                OpKind::Or => Op::Or,
                OpKind::Lt => Op::Lt,
                OpKind::Eq => Op::Eq,
                OpKind::Select => Op::Select,
                OpKind::ExtractHi => Op::ExtractHi,
                OpKind::ExtractLo => Op::ExtractLo,
                OpKind::Concat => Op::Concat,
            };
            body.push(Instr { op, dest: id(&i.dest)?, args: ids(&i.args)? });
        }
        Ok(Program {
            inputs: ids(&self.inputs)?,
            outputs: ids(&self.outputs)?,
            ports: Ports {
                inputs: self.ports.inputs.iter().map(port).collect::<Result<_, _>>()?,
                outputs: self.ports.outputs.iter().map(port).collect::<Result<_, _>>()?,
            },
            name: self.name,
            vars: self.vars,
            body,
            attributes: self.attributes,
        })
    }
}

impl Program {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ProgramJson::from_program(self)).expect("program serializes")
    }

    pub fn from_json(text: &str) -> Result<Program, String> {
        let dto: ProgramJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        dto.into_program()
    }
}
