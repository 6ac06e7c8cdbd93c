//! Analysis report assembly: runs every applicable engine on one graph and
//! aggregates determinant, rank, nullity, class flags, engine agreement, the
//! reduction certificate, and the theorem tags whose preconditions hold.

use serde::Serialize;

use crate::blocks::{classify, ClassFlags};
use crate::engines::{det_block_formula, reduce_to_fixpoint, ReductionStepJson};
use crate::families::{detect_nmk, nmk_is_singular};
use crate::graph::LoopWeightedGraph;
use crate::linalg::adjacency_matrix;
use crate::ratio;

#[derive(Debug, Clone, Serialize)]
pub struct EngineAgreement {
    /// Block-formula determinant equals the dense determinant (when run).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_formula_matches: Option<bool>,
    /// Reduction rank accounting equals the dense rank (when run).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction_matches: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub n: usize,
    pub is_connected: bool,
    pub class: ClassFlags,
    /// Exact determinant as a `p/q` string.
    pub determinant: String,
    pub rank: usize,
    pub nullity: usize,
    pub engines_used: Vec<String>,
    pub agreement: EngineAgreement,
    pub certificate: Vec<ReductionStepJson>,
    pub tags: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

pub fn analyze(g: &LoopWeightedGraph, input: &str) -> AnalysisReport {
    let class = classify(g);
    let adjacency = adjacency_matrix(g);
    let det = adjacency.det_exact().expect("adjacency matrices are square");
    let rank = adjacency.rank_exact();
    let nullity = g.n() - rank;

    let mut engines_used = vec!["det_exact".to_string()];
    let mut agreement = EngineAgreement { block_formula_matches: None, reduction_matches: None };

    let block_formula_applicable =
        class.is_block_graph && g.n() > 0 && g.is_connected() && g.is_loopless();
    if block_formula_applicable {
        let formula = det_block_formula(g).expect("preconditions checked");
        engines_used.push("det_block_formula".to_string());
        agreement.block_formula_matches = Some(formula == det);
    }

    let mut certificate = Vec::new();
    if g.is_loopless() {
        // The reduction engine counts as used only when it found a rewrite.
        let cert = reduce_to_fixpoint(g);
        if !cert.steps.is_empty() {
            engines_used.push("reduction".to_string());
            agreement.reduction_matches = Some(cert.total_rank() == rank);
            certificate = cert.steps.iter().map(ReductionStepJson::from).collect();
        }
    }

    let mut tags = Vec::new();
    if class.is_b31 {
        tags.push("B31-nonsingular".to_string());
    }
    if class.is_p1 {
        tags.push("p1-nonsingular".to_string());
    }
    if g.is_loopless() {
        if let Some((n, m, k)) = detect_nmk(g) {
            let singular = nmk_is_singular(n, m, k).expect("detected parameters are valid");
            tags.push(if singular {
                "NMK-criterion-singular".to_string()
            } else {
                "NMK-criterion-nonsingular".to_string()
            });
        }
    }
    if class.is_tree && g.n() > 0 {
        // A tree is nonsingular exactly when it has a perfect matching.
        tags.push(if nullity == 0 {
            "tree-perfect-matching".to_string()
        } else {
            "tree-no-perfect-matching".to_string()
        });
    }

    AnalysisReport {
        input: input.to_string(),
        n: g.n(),
        is_connected: g.is_connected(),
        class,
        determinant: ratio::format_pq(&det),
        rank,
        nullity,
        engines_used,
        agreement,
        certificate,
        tags,
    }
}

/// Reduction summary for the standalone reduce command.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub input: String,
    pub n: usize,
    pub steps: Vec<ReductionStepJson>,
    pub rank_offset_sum: usize,
    pub residual_n: usize,
    pub residual_rank: usize,
    pub rank: usize,
    pub nullity: usize,
    pub residual_original_ids: Vec<usize>,
    /// Residual graph as edge-list JSON (loops carry the Schur corrections).
    pub residual: serde_json::Value,
}

pub fn reduce_report(g: &LoopWeightedGraph, input: &str) -> ReductionReport {
    let cert = reduce_to_fixpoint(g);
    let residual_rank = adjacency_matrix(&cert.residual).rank_exact();
    let rank = cert.rank_offset_sum() + residual_rank;
    ReductionReport {
        input: input.to_string(),
        n: g.n(),
        steps: cert.steps.iter().map(ReductionStepJson::from).collect(),
        rank_offset_sum: cert.rank_offset_sum(),
        residual_n: cert.residual.n(),
        residual_rank,
        rank,
        nullity: g.n() - rank,
        residual_original_ids: cert.residual_original_ids.clone(),
        residual: serde_json::from_str(&crate::io::write_edge_list_json(&cert.residual))
            .expect("edge list json is valid"),
    }
}

impl ReductionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn analyze_triangle() {
        let report = analyze(&LoopWeightedGraph::complete(3), "k3");
        assert_eq!(report.determinant, "2/1");
        assert_eq!(report.nullity, 0);
        assert_eq!(report.rank + report.nullity, report.n);
        assert!(report.tags.contains(&"B31-nonsingular".to_string()));
        assert_eq!(report.agreement.block_formula_matches, Some(true));
        // no pendant structure: the reduction engine has nothing to do
        assert_eq!(report.agreement.reduction_matches, None);
    }

    #[test]
    fn analyze_reducible_graph_reports_certificate() {
        let g = generate(&FamilySpec::Nmk { n: 3, m: 3, k: 1 }).unwrap();
        let report = analyze(&g, "nmk-3-3-1");
        assert!(report.engines_used.contains(&"reduction".to_string()));
        assert_eq!(report.agreement.reduction_matches, Some(true));
        assert_eq!(report.certificate.len(), 3);
        assert_eq!(report.nullity, 1);
    }

    #[test]
    fn analyze_nmk_fixture() {
        let g = generate(&FamilySpec::Nmk { n: 4, m: 4, k: 2 }).unwrap();
        let report = analyze(&g, "nmk-4-4-2");
        assert_eq!(report.determinant, "0/1");
        assert!(report.nullity >= 1);
        assert!(report.tags.contains(&"NMK-criterion-singular".to_string()));
        assert!(!report.tags.contains(&"B31-nonsingular".to_string()));
    }

    #[test]
    fn analyze_cycle_runs_dense_only() {
        let report = analyze(&LoopWeightedGraph::cycle(5), "c5");
        assert!(!report.class.is_block_graph);
        assert_eq!(report.engines_used, vec!["det_exact".to_string()]);
    }

    #[test]
    fn reduce_report_accounts_rank() {
        let g = generate(&FamilySpec::Nmk { n: 3, m: 3, k: 1 }).unwrap();
        let report = reduce_report(&g, "nmk-3-3-1");
        assert_eq!(report.rank, 8);
        assert_eq!(report.nullity, 1);
        assert_eq!(report.rank_offset_sum, 6);
        assert_eq!(report.residual_n, 3);
    }
}
