//! Serialized output shapes. Every integer is a decimal string so that
//! arbitrary-precision values survive any JSON consumer; field order is the
//! declaration order, which together with compact encoding makes output
//! byte-identical across runs.

use serde::Serialize;

#[derive(Serialize)]
pub struct MobiusOutput {
    pub s: String,
    pub lower: String,
    pub upper: String,
    pub mu: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

#[derive(Serialize)]
pub struct IntervalOutput {
    pub lower: String,
    pub upper: String,
    pub s: String,
    pub elements: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
pub struct ChebyshevOutput {
    pub s: String,
    pub k: String,
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engines_agree: Option<bool>,
}

#[derive(Serialize)]
pub struct CountMOutput {
    #[serde(rename = "M")]
    pub m: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engines_agree: Option<bool>,
}

#[derive(Serialize)]
pub struct ChainTOutput {
    #[serde(rename = "T")]
    pub t: String,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|err| format!("serialization failed: {err}"))
}
