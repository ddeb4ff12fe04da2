//! Output records. Field order is fixed by declaration order; absent
//! optional fields are omitted.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct SolveRecord {
    pub schema: u32,
    pub problem: String,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub answer: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_expanded: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub wall_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct KernelRecord {
    pub schema: u32,
    pub problem: String,
    pub kernel: &'static str,
    pub k: usize,
    pub original_size: usize,
    pub reduced_size: Option<usize>,
    pub reduced_k: Option<usize>,
    pub bound: usize,
    pub bound_met: bool,
    pub decided: Option<&'static str>,
    pub output: Option<String>,
    pub wall_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct OracleRecord {
    pub schema: u32,
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub value: Value,
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub fn print_line<T: Serialize>(rec: &T) {
    println!("{}", serde_json::to_string(rec).expect("records serialize"));
}
