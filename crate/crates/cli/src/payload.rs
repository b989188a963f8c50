//! JSON payloads for each subcommand, wrapped in a versioned envelope.

use std::collections::BTreeSet;

use affgrass_core::classify::TypeReport;
use affgrass_core::cohomology::PDStatus;
use affgrass_core::verify::PropertyCheck;
use serde::{Deserialize, Serialize};

/// Bumped whenever any payload changes shape.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: u32,
    pub command: String,
    pub type_label: String,
    pub payload: serde_json::Value,
    pub convention_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRow {
    pub element: String,
    pub length: usize,
    pub translation: Vec<i64>,
    pub finite_word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratePayload {
    pub max_len: usize,
    pub level_sizes: Vec<usize>,
    pub elements: Vec<ElementRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePayload {
    pub element: String,
    pub length: usize,
    pub coeffs: Vec<i64>,
    pub polynomial: String,
    pub palindromic: bool,
    pub chain: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarPayload {
    pub left: String,
    pub right: String,
    /// `None` when the product is zero.
    pub result: Option<String>,
    pub result_length: Option<usize>,
    pub length_additive: bool,
    pub product_in_minreps: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentsPayload {
    pub count: usize,
    pub segments: Vec<ElementRow>,
    pub routes_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizePayload {
    pub element: String,
    pub length: usize,
    pub factors: Vec<String>,
    pub refactor_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyPayload {
    pub i_lambda0: BTreeSet<usize>,
    /// `(reduced word, coefficient)` terms of `c_1` in the Schubert basis.
    pub c1: Vec<(Vec<usize>, i64)>,
    pub chain: bool,
    /// `c_1 y_{k-1} = a_k y_k`; absent when the base is not a chain.
    pub a: Option<Vec<i64>>,
    pub pd_status: PDStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyPayload {
    pub max_rank: usize,
    pub reports: Vec<TypeReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub suites: Vec<String>,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<PropertyCheck>,
}
