//! The JSON record of one prime's worth of detection data.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{Error, Result};

/// Current certificate format version.
pub const CERTIFICATE_VERSION: u32 = 1;

/// One detection instance at one prime. Field order is the wire order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessCertificate {
    pub version: u32,
    pub problem: ProblemRecord,
    pub witness: WitnessRecord,
    pub prime: u64,
    /// `a_j mod p` in `[1, p-1]`.
    pub residues: Vec<u64>,
    /// `x_i mod p` for `k <= i <= m`.
    pub targets: Vec<u64>,
    /// Sorted `[r, m_r]` pairs of the representation `xi`.
    pub xi_rep: Vec<(u64, i64)>,
    pub pullbacks: PullbackRecord,
    /// Coefficient of `c^r` in `Xi` evaluated on the pullbacks.
    pub evaluation: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemRecord {
    /// Canonical text of `Xi` in `e, p_1, ..., p_m`.
    pub xi: String,
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub degree_2r: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    /// Witness coordinates as `"num/den"` strings.
    pub z: Vec<String>,
    pub value: String,
    #[serde(rename = "N")]
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PullbackRecord {
    /// Coefficient of `c^n` in the Euler class pullback.
    pub euler: u64,
    /// `[i, coefficient of c^{2i}]` for `1 <= i <= m`.
    #[serde(rename = "L")]
    pub l: Vec<(u32, u64)>,
}

impl WitnessCertificate {
    /// JSON with one key per line, arrays of scalars kept inline, and a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        let mut out = String::new();
        write_compact(&value, 0, &mut out);
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<WitnessCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            offset: 0,
            message: format!("certificate JSON (line {}, column {}): {e}", e.line(), e.column()),
        })
    }
}

fn write_compact(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_compact(val, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_compact(x, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
