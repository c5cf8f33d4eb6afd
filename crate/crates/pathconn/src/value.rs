//! Computed connectivity values and where they came from.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::path::SPathFamily;

/// How a [`PiValue`] was obtained: a closed-form branch or exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// A closed-form branch, identified by its case label. `swapped` records
    /// that the inputs were normalized by exchanging the two parts.
    Formula { case: &'static str, swapped: bool },
    /// Exact brute-force search.
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Formula { case, swapped: false } => write!(f, "{case}"),
            Provenance::Formula { case, swapped: true } => write!(f, "{case}, parts swapped"),
            Provenance::Oracle => write!(f, "oracle"),
        }
    }
}

/// A path-connectivity value with provenance and optional certificates.
///
/// When `witness` is present it is a valid family of exactly `value`
/// internally disjoint S-paths; for minimum-over-S results, `argmin_s` is a
/// set attaining the minimum and the witness lives inside that set's search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiValue {
    pub value: usize,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SPathFamily>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmin_s: Option<BTreeSet<u32>>,
}

impl PiValue {
    pub fn from_formula(value: usize, case: &'static str, swapped: bool) -> PiValue {
        PiValue {
            value,
            provenance: Provenance::Formula { case, swapped },
            witness: None,
            argmin_s: None,
        }
    }
}
