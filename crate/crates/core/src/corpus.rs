//! Bundled algebra corpus, embedded so the CLI, tests, and the browser demo
//! all see identical documents.

use crate::algebra::{load_algebra, AlgebraDoc};
use crate::error::{Error, Result};

pub const LABELS: [&str; 9] = [
    "pauli",
    "poisson3",
    "bad-poisson",
    "m2r-jordan",
    "v2",
    "m2c-indefinite",
    "c-plus-m2",
    "cn-diagonal",
    "dual-numbers",
];

/// Raw JSON document for a corpus label.
pub fn source(label: &str) -> Option<&'static str> {
    Some(match label {
        "pauli" => include_str!("../../../corpus/pauli.json"),
        "poisson3" => include_str!("../../../corpus/poisson3.json"),
        "bad-poisson" => include_str!("../../../corpus/bad-poisson.json"),
        "m2r-jordan" => include_str!("../../../corpus/m2r-jordan.json"),
        "v2" => include_str!("../../../corpus/v2.json"),
        "m2c-indefinite" => include_str!("../../../corpus/m2c-indefinite.json"),
        "c-plus-m2" => include_str!("../../../corpus/c-plus-m2.json"),
        "cn-diagonal" => include_str!("../../../corpus/cn-diagonal.json"),
        "dual-numbers" => include_str!("../../../corpus/dual-numbers.json"),
        _ => return None,
    })
}

pub fn load(label: &str) -> Result<AlgebraDoc> {
    let json =
        source(label).ok_or_else(|| Error::Parse(format!("unknown corpus label {label:?}")))?;
    load_algebra(json)
}
