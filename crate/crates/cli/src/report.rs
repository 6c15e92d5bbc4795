use fpcoh_core::{CheckReport, Polynomial};
use serde::Serialize;

/// Serializable view of a [`CheckReport`]; polynomials use the parser's
/// grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub check: &'static str,
    pub p: u64,
    pub n: usize,
    pub gens: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<u64>>,
    pub sum_deg: u64,
    pub hypothesis_holds: bool,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_holds: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub memberships: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion_length: Option<usize>,
}

pub fn poly_strings(f: &[Polynomial]) -> Vec<String> {
    f.iter().map(|g| g.to_string()).collect()
}

impl From<&CheckReport> for CheckJson {
    fn from(r: &CheckReport) -> Self {
        CheckJson {
            check: r.kind.as_str(),
            p: r.ring.p(),
            n: r.ring.n(),
            gens: fpcoh_core::format_polynomial_list(&r.gens),
            point: r.point.as_ref().map(|a| a.coords().iter().map(|c| c.value()).collect()),
            sum_deg: r.sum_deg,
            hypothesis_holds: r.hypothesis_holds,
            outcome: r.outcome.as_str(),
            property_holds: r.property_holds,
            witness: poly_strings(&r.witness),
            level: r.level,
            memberships: r.memberships.clone(),
            pd: r.pd,
            depth: r.depth,
            torsion_length: r.torsion_length,
        }
    }
}
