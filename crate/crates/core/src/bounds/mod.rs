//! Every inequality of the catalogue as a uniform, checkable predicate.
//!
//! A check compares a bounded quantity (`lhs`: an extended energy, vertex
//! energy or spectral radius) against a formula (`rhs`). Slack is oriented
//! so that a non-negative slack means the inequality holds.

mod catalog;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::energy::{EnergyReport, GraphAnalysis};
use crate::graph::{DegreeProfile, Graph};
use crate::linalg::LinalgError;

pub use catalog::{catalog, lookup, BoundSpec, Rule};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("unknown bound id {0:?}")]
    UnknownBound(String),
    #[error("bound {id:?} has scope {scope:?}, not {expected:?}")]
    WrongScope { id: String, scope: Scope, expected: Scope },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    PerVertex,
    WholeGraph,
    GraphPair,
}

/// Whether `lhs <= rhs` (upper) or `lhs >= rhs` (lower) is claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Equality,
    Violated,
    NotApplicable,
}

/// Relative tolerances, each scaled by `1 + |rhs|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub equality: f64,
    pub violation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { equality: 1e-7, violation: 1e-9 }
    }
}

impl Tolerances {
    /// Violation is tested first: a slack below `-violation` is never
    /// reported as equality even though the equality band is wider. A
    /// non-finite slack counts as a violation.
    pub fn classify(&self, slack: f64, rhs: f64) -> Status {
        let scale = 1.0 + rhs.abs();
        if !slack.is_finite() || slack < -self.violation * scale {
            Status::Violated
        } else if slack.abs() <= self.equality * scale {
            Status::Equality
        } else {
            Status::Holds
        }
    }
}

/// One evaluated inequality instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound_id: String,
    pub scope: Scope,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub status: Status,
    pub witness_note: String,
    /// `Some(true)` when equality coincides with membership in the stated
    /// equality family, `Some(false)` when they disagree, `None` when no
    /// family is stated or the check is not applicable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family_agreement: Option<bool>,
    pub anchor: String,
}

/// Quantities of one graph needed by the evaluators.
#[derive(Debug, Clone)]
pub struct Subject<'a> {
    pub graph: &'a Graph,
    pub profile: DegreeProfile,
    pub report: &'a EnergyReport,
}

impl<'a> Subject<'a> {
    pub fn new(graph: &'a Graph, report: &'a EnergyReport) -> Self {
        Self { graph, profile: DegreeProfile::of(graph), report }
    }

    pub fn from_analysis(graph: &'a Graph, analysis: &'a GraphAnalysis) -> Self {
        Self { graph, profile: analysis.profile.clone(), report: &analysis.report }
    }
}

/// A graph and, for graph-pair bounds, its complement.
#[derive(Debug, Clone)]
pub struct Subjects<'a> {
    pub g: Subject<'a>,
    pub co: Option<Subject<'a>>,
}

impl<'a> Subjects<'a> {
    pub fn single(g: Subject<'a>) -> Self {
        Self { g, co: None }
    }

    pub fn pair(g: Subject<'a>, co: Subject<'a>) -> Self {
        Self { g, co: Some(co) }
    }

    fn co(&self) -> &Subject<'a> {
        self.co.as_ref().expect("graph-pair bound evaluated without a complement")
    }
}

/// Evaluates one catalogue entry. Returns `None` for graph-pair bounds when
/// no complement was supplied.
pub fn evaluate(spec: &BoundSpec, s: &Subjects, tol: &Tolerances) -> Option<Vec<BoundCheck>> {
    if spec.scope == Scope::GraphPair && s.co.is_none() {
        return None;
    }
    Some(match spec.scope {
        Scope::PerVertex => (0..s.g.graph.order()).map(|v| spec.check(s, Some(v), tol)).collect(),
        _ => vec![spec.check(s, None, tol)],
    })
}

/// Evaluates every catalogue entry accepted by `filter`.
pub fn evaluate_all(s: &Subjects, tol: &Tolerances, filter: impl Fn(&BoundSpec) -> bool) -> Vec<BoundCheck> {
    catalog().iter().filter(|spec| filter(spec)).filter_map(|spec| evaluate(spec, s, tol)).flatten().collect()
}

fn spec_with_scope(id: &str, expected: Scope) -> Result<&'static BoundSpec, BoundError> {
    let spec = lookup(id).ok_or_else(|| BoundError::UnknownBound(id.to_string()))?;
    if spec.scope != expected {
        return Err(BoundError::WrongScope { id: id.to_string(), scope: spec.scope, expected });
    }
    Ok(spec)
}

fn vertex_checks(id: &str, g: &Graph, report: &EnergyReport) -> Vec<BoundCheck> {
    let spec = spec_with_scope(id, Scope::PerVertex).expect("built-in per-vertex bound");
    evaluate(spec, &Subjects::single(Subject::new(g, report)), &Tolerances::default())
        .expect("per-vertex bounds need no complement")
}

fn single_check(id: &str, g: &Graph, report: &EnergyReport) -> BoundCheck {
    let spec = spec_with_scope(id, Scope::WholeGraph).expect("built-in whole-graph bound");
    spec.check(&Subjects::single(Subject::new(g, report)), None, &Tolerances::default())
}

/// Extended vertex energy against `ratio * sqrt(d_i)`, equality at star centres.
pub fn check_vertex_upper_star(g: &Graph, report: &EnergyReport) -> Vec<BoundCheck> {
    vertex_checks("vertex_upper_star", g, report)
}

/// Extended vertex energy against the neighbour-degree (forgotten-index) bound.
pub fn check_vertex_upper_forgotten(g: &Graph, report: &EnergyReport) -> Vec<BoundCheck> {
    vertex_checks("vertex_upper_forgotten", g, report)
}

/// Extended vertex energy against `d_i / k`.
pub fn check_vertex_lower(g: &Graph, report: &EnergyReport) -> Vec<BoundCheck> {
    vertex_checks("vertex_lower", g, report)
}

/// `(left, right)` of `E <= E_ex <= ratio * E`.
pub fn check_sandwich(g: &Graph, report: &EnergyReport) -> (BoundCheck, BoundCheck) {
    (single_check("sandwich_left", g, report), single_check("sandwich_right", g, report))
}

/// `(left, right)` of `lambda_1 <= eta_1 <= ratio * lambda_1`.
pub fn check_spectral_radius_sandwich(g: &Graph, report: &EnergyReport) -> (BoundCheck, BoundCheck) {
    (single_check("radius_left", g, report), single_check("radius_right", g, report))
}

/// One of the whole-graph upper bounds on the extended energy.
pub fn check_global_upper(id: &str, g: &Graph, report: &EnergyReport) -> Result<BoundCheck, BoundError> {
    let spec = spec_with_scope(id, Scope::WholeGraph)?;
    if !matches!(spec.rule, Rule::Inequality { direction: Direction::Upper, .. })
        || id.starts_with("sandwich")
        || id.starts_with("radius")
    {
        return Err(BoundError::UnknownBound(id.to_string()));
    }
    Ok(spec.check(&Subjects::single(Subject::new(g, report)), None, &Tolerances::default()))
}

/// One of the graph/complement bounds; the complement and its spectrum are
/// computed here.
pub fn check_ng(id: &str, g: &Graph) -> Result<BoundCheck, BoundError> {
    let spec = spec_with_scope(id, Scope::GraphPair)?;
    if !matches!(spec.rule, Rule::Inequality { .. }) {
        return Err(BoundError::UnknownBound(id.to_string()));
    }
    check_with_complement(spec, g)
}

/// Compares a newer bound formula against the older one it improves on.
pub fn check_dominance(id: &str, g: &Graph) -> Result<BoundCheck, BoundError> {
    let spec = lookup(id).ok_or_else(|| BoundError::UnknownBound(id.to_string()))?;
    if !matches!(spec.rule, Rule::Dominance { .. }) {
        return Err(BoundError::UnknownBound(id.to_string()));
    }
    check_with_complement(spec, g)
}

fn check_with_complement(spec: &BoundSpec, g: &Graph) -> Result<BoundCheck, BoundError> {
    let analysis = GraphAnalysis::of(g)?;
    let co = g.complement();
    let co_analysis = GraphAnalysis::of(&co)?;
    let s = Subjects::pair(Subject::from_analysis(g, &analysis), Subject::from_analysis(&co, &co_analysis));
    Ok(spec.check(&s, None, &Tolerances::default()))
}

/// Expands a comma-separated filter such as `all`, `das_i,sandwich_left` or
/// `dominance:*` into catalogue ids. A trailing `*` matches a prefix.
pub fn resolve_filter(filter: &str) -> Result<Vec<&'static str>, BoundError> {
    let mut ids: Vec<&'static str> = Vec::new();
    for pattern in filter.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let matched: Vec<&'static str> = if pattern == "all" || pattern == "*" {
            catalog().iter().map(|s| s.id).collect()
        } else if let Some(prefix) = pattern.strip_suffix('*') {
            catalog().iter().map(|s| s.id).filter(|id| id.starts_with(prefix)).collect()
        } else {
            lookup(pattern).map(|s| vec![s.id]).unwrap_or_default()
        };
        if matched.is_empty() {
            return Err(BoundError::UnknownBound(pattern.to_string()));
        }
        for id in matched {
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
    }
    // Keep catalogue order regardless of how the filter was written.
    ids.sort_by_key(|id| catalog().iter().position(|s| s.id == *id));
    Ok(ids)
}

#[cfg(test)]
mod tests;
