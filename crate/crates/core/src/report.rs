//! JSON-lines records. Every line is one [`Record`]; the `kind` field comes
//! first, then `schema_version`, then the kind's fields in declaration
//! order. Permutations are written in canonical 1-based cycle notation.

use serde::{Deserialize, Serialize};

use crate::dgraph::{Spectrum, SpectrumEntry};
use crate::ekr::{Bound, CliqueCoclique, EkrReport, EkrVerdict, Status, StrictVerdict};
use crate::group::PermutationGroup;
use crate::witness::RefutationCertificate;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupInfo {
    pub fn of(group: &PermutationGroup) -> Self {
        GroupInfo {
            degree: group.degree(),
            order: group.order(),
            generators: group.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

fn cycles(group: &PermutationGroup, set: &[usize]) -> Vec<String> {
    set.iter().map(|&i| group.element(i).to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witnesses {
    /// A maximum (or best found) intersecting set.
    pub independent_set: Vec<String>,
    /// A maximum (or best found) set of pairwise non-intersecting elements.
    pub clique: Vec<String>,
    pub refuting_set: Option<Vec<String>>,
    /// Identity-containing maximum intersecting set that is not a stabilizer.
    pub strict_counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EkrRecord {
    pub schema_version: u32,
    pub label: String,
    pub group: GroupInfo,
    pub transitive: bool,
    pub alpha: usize,
    pub alpha_status: Status,
    pub omega: usize,
    pub omega_status: Status,
    pub max_stabilizer: usize,
    pub ekr: EkrVerdict,
    pub strict_ekr: StrictVerdict,
    pub strict_sets_checked: usize,
    pub clique_coclique: CliqueCoclique,
    pub witnesses: Witnesses,
    pub notes: Vec<String>,
}

impl EkrRecord {
    pub fn new(label: &str, group: &PermutationGroup, report: &EkrReport) -> Self {
        EkrRecord {
            schema_version: SCHEMA_VERSION,
            label: label.to_string(),
            group: GroupInfo::of(group),
            transitive: report.transitive,
            alpha: report.alpha.value,
            alpha_status: report.alpha.status,
            omega: report.omega.value,
            omega_status: report.omega.status,
            max_stabilizer: report.max_stabilizer,
            ekr: report.ekr,
            strict_ekr: report.strict_ekr,
            strict_sets_checked: report.strict_progress.sets_checked,
            clique_coclique: report.clique_coclique,
            witnesses: Witnesses {
                independent_set: cycles(group, &report.alpha.witness),
                clique: cycles(group, &report.omega.witness),
                refuting_set: report.refuting_set.as_ref().map(|s| cycles(group, s)),
                strict_counterexample: report.strict_progress.counterexample.as_ref().map(|s| cycles(group, s)),
            },
            notes: report.notes.clone(),
        }
    }
}

/// Result of the `alpha` or `omega` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub schema_version: u32,
    pub label: String,
    pub group: GroupInfo,
    pub value: usize,
    pub status: Status,
    pub witness: Vec<String>,
}

impl BoundRecord {
    pub fn new(label: &str, group: &PermutationGroup, bound: &Bound) -> Self {
        BoundRecord {
            schema_version: SCHEMA_VERSION,
            label: label.to_string(),
            group: GroupInfo::of(group),
            value: bound.value,
            status: bound.status,
            witness: cycles(group, &bound.witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub schema_version: u32,
    pub label: String,
    pub group: GroupInfo,
    pub eigenvalues: Vec<SpectrumEntry>,
    /// The same buckets rounded, when every value is within 1e-6 of an
    /// integer.
    pub integral: Option<Vec<(i64, usize)>>,
    /// `(copies, size)` when the graph is a disjoint union of equal cliques.
    pub clique_union: Option<(usize, usize)>,
}

impl SpectrumRecord {
    pub fn new(
        label: &str,
        group: &PermutationGroup,
        spectrum: &Spectrum,
        clique_union: Option<(usize, usize)>,
    ) -> Self {
        SpectrumRecord {
            schema_version: SCHEMA_VERSION,
            label: label.to_string(),
            group: GroupInfo::of(group),
            eigenvalues: spectrum.eigenvalues.clone(),
            integral: spectrum.as_integers(1e-6),
            clique_union,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefutationRecord {
    pub schema_version: u32,
    pub label: String,
    pub group: GroupInfo,
    pub intersecting_set: Vec<String>,
    pub set_size: usize,
    pub max_stabilizer_size: usize,
    pub verified: bool,
    pub failing_pair: Option<(String, String)>,
    pub notes: Vec<String>,
}

impl RefutationRecord {
    pub fn new(label: &str, certificate: &RefutationCertificate) -> Self {
        RefutationRecord {
            schema_version: SCHEMA_VERSION,
            label: label.to_string(),
            group: certificate.group.clone(),
            intersecting_set: certificate.intersecting_set.iter().map(|p| p.to_string()).collect(),
            set_size: certificate.set_size,
            max_stabilizer_size: certificate.max_stabilizer_size,
            verified: certificate.verified,
            failing_pair: certificate
                .failing_pair
                .as_ref()
                .map(|(a, b)| (a.to_string(), b.to_string())),
            notes: certificate.notes.clone(),
        }
    }
}

/// A product group with its factors' verdicts alongside its own.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductRecord {
    pub schema_version: u32,
    pub label: String,
    pub product_kind: String,
    pub factors: Vec<String>,
    /// Edge-for-edge comparison of the product's derangement graph with the
    /// graph built from its factors; absent for wreath products.
    pub graph_identity: Option<bool>,
    /// α predicted from the factors' α values: the product for external
    /// products, the largest `α_i · Π_{j≠i} |G_j|` for internal ones, and
    /// the stabilizer size for wreath products whose factors have EKR.
    pub predicted_alpha: Option<usize>,
    pub factor_reports: Vec<EkrRecord>,
    pub report: EkrRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Record {
    Ekr(EkrRecord),
    Alpha(BoundRecord),
    Omega(BoundRecord),
    Spectrum(SpectrumRecord),
    Refutation(RefutationRecord),
    Product(ProductRecord),
}

impl Record {
    /// One JSON line, without the trailing newline.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Record> {
        serde_json::from_str(line)
    }
}
