use super::{BoundCheck, Direction, Scope, Status, Subject, Subjects, Tolerances};
use crate::graph::Graph;

type Quantity = fn(&Subjects, Option<usize>) -> f64;
type Formula = fn(&Subjects, Option<usize>) -> Option<f64>;
type Precondition = fn(&Subjects) -> Result<(), String>;
type Detail = fn(&Subjects) -> String;

/// Structural family for which equality is claimed.
#[derive(Clone, Copy)]
pub struct EqualityFamily {
    pub name: &'static str,
    pub member: fn(&Graph, Option<usize>) -> bool,
}

#[derive(Clone, Copy)]
pub enum Rule {
    Inequality {
        direction: Direction,
        lhs: Quantity,
        rhs: Formula,
        precondition: Precondition,
        detail: Option<Detail>,
        family: Option<EqualityFamily>,
    },
    /// `newer` and `older` are catalogue ids. For upper bounds the newer
    /// formula must not exceed the older one; for lower bounds it must not
    /// fall below it. Applicable whenever both formulas are defined.
    Dominance { direction: Direction, newer: &'static str, older: &'static str },
}

#[derive(Clone, Copy)]
pub struct BoundSpec {
    pub id: &'static str,
    pub scope: Scope,
    pub anchor: &'static str,
    pub statement: &'static str,
    pub precondition: &'static str,
    pub rule: Rule,
}

impl std::fmt::Debug for BoundSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundSpec").field("id", &self.id).field("scope", &self.scope).finish()
    }
}

impl BoundSpec {
    pub fn direction(&self) -> Direction {
        match self.rule {
            Rule::Inequality { direction, .. } | Rule::Dominance { direction, .. } => direction,
        }
    }

    pub fn equality_family(&self) -> Option<&'static str> {
        match self.rule {
            Rule::Inequality { family, .. } => family.map(|f| f.name),
            Rule::Dominance { .. } => None,
        }
    }

    /// The right-hand formula alone, `None` where it is undefined.
    pub fn formula(&self, s: &Subjects, vertex: Option<usize>) -> Option<f64> {
        match self.rule {
            Rule::Inequality { rhs, .. } => rhs(s, vertex),
            Rule::Dominance { .. } => None,
        }
    }

    pub(super) fn check(&self, s: &Subjects, vertex: Option<usize>, tol: &Tolerances) -> BoundCheck {
        let mut out = BoundCheck {
            bound_id: self.id.to_string(),
            scope: self.scope,
            vertex,
            lhs: None,
            rhs: None,
            slack: None,
            status: Status::NotApplicable,
            witness_note: String::new(),
            family_agreement: None,
            anchor: self.anchor.to_string(),
        };
        match self.rule {
            Rule::Inequality { direction, lhs, rhs, precondition, detail, family } => {
                let lhs_value = lhs(s, vertex);
                out.lhs = Some(lhs_value);
                if let Err(reason) = precondition(s) {
                    out.witness_note = reason;
                    return out;
                }
                let Some(rhs_value) = rhs(s, vertex) else {
                    out.witness_note = "formula undefined".into();
                    return out;
                };
                fill(&mut out, direction, lhs_value, rhs_value, tol);
                let mut notes = Vec::new();
                if let Some(detail) = detail {
                    notes.push(detail(s));
                }
                if let Some(family) = family {
                    let member = (family.member)(s.g.graph, vertex);
                    let equal = out.status == Status::Equality;
                    out.family_agreement = Some(member == equal);
                    match (equal, member) {
                        (true, true) => notes.push(family.name.to_string()),
                        (true, false) => notes.push(format!("equality outside stated family ({})", family.name)),
                        (false, true) => notes.push(format!("stated family member ({}) but not equal", family.name)),
                        (false, false) => {}
                    }
                }
                out.witness_note = notes.join("; ");
            }
            Rule::Dominance { direction, newer, older } => {
                let newer_spec = lookup(newer).expect("dominance refers to a registered bound");
                let older_spec = lookup(older).expect("dominance refers to a registered bound");
                match (newer_spec.formula(s, vertex), older_spec.formula(s, vertex)) {
                    (Some(new_rhs), Some(old_rhs)) => {
                        fill(&mut out, direction, new_rhs, old_rhs, tol);
                        out.witness_note = format!("{newer} vs {older}");
                    }
                    (None, _) => out.witness_note = format!("{newer} undefined"),
                    (_, None) => out.witness_note = format!("{older} undefined"),
                }
            }
        }
        out
    }
}

fn fill(out: &mut BoundCheck, direction: Direction, lhs: f64, rhs: f64, tol: &Tolerances) {
    let slack = match direction {
        Direction::Upper => rhs - lhs,
        Direction::Lower => lhs - rhs,
    };
    out.lhs = Some(lhs);
    out.rhs = Some(rhs);
    out.slack = Some(slack);
    out.status = tol.classify(slack, rhs);
}

pub fn catalog() -> &'static [BoundSpec] {
    &CATALOG
}

pub fn lookup(id: &str) -> Option<&'static BoundSpec> {
    CATALOG.iter().find(|s| s.id == id)
}

// ---------------------------------------------------------------------------
// Shared quantities

fn n(s: &Subject) -> f64 {
    s.profile.order() as f64
}

fn e(s: &Subject) -> f64 {
    s.profile.edge_count as f64
}

fn dmin(s: &Subject) -> f64 {
    s.profile.delta_min as f64
}

fn dmax(s: &Subject) -> f64 {
    s.profile.delta_max as f64
}

fn n_hat(s: &Subject) -> f64 {
    s.profile.n_hat() as f64
}

fn ratio(s: &Subject) -> Option<f64> {
    s.profile.ratio_factor()
}

/// Ratio factor with `delta_min >= 1` enforced.
fn ratio_pos(s: &Subject) -> Option<f64> {
    (s.profile.delta_min >= 1).then(|| ratio(s)).flatten()
}

fn vertex(v: Option<usize>) -> usize {
    v.expect("per-vertex bound evaluated without a vertex")
}

fn ext_energy(s: &Subjects, _: Option<usize>) -> f64 {
    s.g.report.extended_energy
}

fn ext_vertex_energy(s: &Subjects, v: Option<usize>) -> f64 {
    s.g.report.extended_vertex_energies[vertex(v)]
}

fn ext_radius(s: &Subjects, _: Option<usize>) -> f64 {
    s.g.report.extended_spectral_radius
}

fn pair_energy(s: &Subjects, _: Option<usize>) -> f64 {
    s.g.report.extended_energy + s.co().report.extended_energy
}

fn pair_radius(s: &Subjects, _: Option<usize>) -> f64 {
    s.g.report.extended_spectral_radius + s.co().report.extended_spectral_radius
}

// ---------------------------------------------------------------------------
// Preconditions

fn always(_: &Subjects) -> Result<(), String> {
    Ok(())
}

fn min_degree_positive(s: &Subjects) -> Result<(), String> {
    if s.g.profile.delta_min >= 1 {
        Ok(())
    } else {
        Err("delta_min = 0".into())
    }
}

fn ratio_defined(s: &Subjects) -> Result<(), String> {
    ratio(&s.g).map(|_| ()).ok_or_else(|| "delta_min = 0 with edges present".into())
}

fn lower_vertex_pre(s: &Subjects) -> Result<(), String> {
    if s.g.profile.edge_count == 0 {
        return Err("no edges".into());
    }
    min_degree_positive(s)
}

fn star_sum_pre(s: &Subjects) -> Result<(), String> {
    if s.g.profile.order() < 2 {
        return Err("n < 2".into());
    }
    ratio_defined(s)
}

fn koolen_moulton_pre(s: &Subjects) -> Result<(), String> {
    if 2 * s.g.profile.edge_count < s.g.profile.order() {
        return Err("2e < n".into());
    }
    ratio_defined(s)
}

fn mm22_pre(s: &Subjects) -> Result<(), String> {
    if s.g.profile.order() < 2 {
        return Err("n < 2".into());
    }
    min_degree_positive(s)
}

fn wang_n_only_pre(s: &Subjects) -> Result<(), String> {
    if s.g.profile.order() < 9 {
        return Err("n < 9".into());
    }
    min_degree_positive(s)
}

fn no_isolated_pair(s: &Subjects) -> Result<(), String> {
    let mut failed = Vec::new();
    if s.g.profile.delta_min == 0 {
        failed.push("isolated vertex in G");
    }
    if s.co().profile.delta_min == 0 {
        failed.push("isolated vertex in complement");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed.join(", "))
    }
}

/// Self-complementary graphs have equal energies that may differ by rounding,
/// so the ordering is tested with a small relative allowance.
fn energy_ordered(s: &Subjects) -> bool {
    let (a, b) = (s.g.report.extended_energy, s.co().report.extended_energy);
    a >= b - 1e-9 * (1.0 + b.abs())
}

fn ng_sum_double_pre(s: &Subjects) -> Result<(), String> {
    no_isolated_pair(s)?;
    if energy_ordered(s) {
        Ok(())
    } else {
        Err("E_ex(G) < E_ex(complement)".into())
    }
}

fn ng_wang_pre(s: &Subjects) -> Result<(), String> {
    let mut failed = Vec::new();
    if !s.g.graph.is_connected() {
        failed.push("G disconnected".to_string());
    }
    if let Err(reason) = no_isolated_pair(s) {
        failed.push(reason);
    }
    if !energy_ordered(s) {
        failed.push("E_ex(G) < E_ex(complement)".to_string());
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed.join(", "))
    }
}

fn both_connected(s: &Subjects) -> Result<(), String> {
    match (s.g.graph.is_connected(), s.co().graph.is_connected()) {
        (true, true) => Ok(()),
        (false, true) => Err("G disconnected".into()),
        (true, false) => Err("complement disconnected".into()),
        (false, false) => Err("G and complement disconnected".into()),
    }
}

fn radius_wang_pre(s: &Subjects) -> Result<(), String> {
    if s.g.profile.delta_max == 0 {
        return Err("delta_max = 0".into());
    }
    if s.g.profile.delta_min == s.g.profile.n_hat() {
        return Err("n - 1 - delta_min = 0".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Formulas

fn rhs_vertex_star(s: &Subjects, v: Option<usize>) -> Option<f64> {
    let d = s.g.profile.degrees[vertex(v)] as f64;
    Some(ratio_pos(&s.g)? * d.sqrt())
}

fn rhs_vertex_forgotten(s: &Subjects, v: Option<usize>) -> Option<f64> {
    let g = &s.g;
    if g.profile.delta_min == 0 {
        return None;
    }
    let i = vertex(v);
    let d = g.profile.degrees[i] as f64;
    let dm2 = dmin(g).powi(2);
    let neighbour_sq: u64 = g.graph.neighbors(i).iter().map(|&j| (g.profile.degrees[j] as u64).pow(2)).sum();
    Some((neighbour_sq as f64 / (4.0 * dm2) + d.powi(3) / (4.0 * dm2) + 0.5 * d).sqrt())
}

fn lower_k(s: &Subject) -> Option<f64> {
    Some(ratio_pos(s)? * dmax(s))
}

fn rhs_vertex_lower(s: &Subjects, v: Option<usize>) -> Option<f64> {
    let k = lower_k(&s.g)?;
    Some(s.g.profile.degrees[vertex(v)] as f64 / k)
}

fn detail_vertex_lower(s: &Subjects) -> String {
    lower_k(&s.g).map_or_else(String::new, |k| format!("k = {k:.12}"))
}

fn rhs_energy(s: &Subjects, _: Option<usize>) -> Option<f64> {
    Some(s.g.report.ordinary_energy)
}

fn rhs_sandwich_right(s: &Subjects, _: Option<usize>) -> Option<f64> {
    Some(ratio_pos(&s.g)? * s.g.report.ordinary_energy)
}

fn rhs_radius(s: &Subjects, _: Option<usize>) -> Option<f64> {
    Some(s.g.report.adjacency_spectral_radius)
}

fn rhs_radius_right(s: &Subjects, _: Option<usize>) -> Option<f64> {
    Some(ratio_pos(&s.g)? * s.g.report.adjacency_spectral_radius)
}

fn rhs_das_i(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    Some(ratio(g)? * (2.0 * n(g) * e(g)).sqrt())
}

fn rhs_das_ii(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    let c = ratio_pos(g)?;
    let f = g.profile.forgotten as f64;
    Some((2.0 * c).sqrt() * (n(g) * f / (2.0 * dmin(g).powi(2))).sqrt())
}

fn rhs_new_star_sum(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    if g.profile.order() < 2 {
        return None;
    }
    let c = ratio(g)?;
    let rest = (n(g) - 2.0) * (2.0 * e(g) - dmin(g) - dmax(g));
    Some(c * (rest.sqrt() + dmin(g).sqrt() + dmax(g).sqrt()))
}

fn rhs_new_forgotten(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    if g.profile.delta_min == 0 {
        return None;
    }
    let f = g.profile.forgotten as f64;
    Some((n(g) * f / (2.0 * dmin(g).powi(2)) + n(g) * e(g)).sqrt())
}

fn rhs_koolen_moulton(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    if 2 * g.profile.edge_count < g.profile.order() {
        return None;
    }
    let c = ratio(g)?;
    let avg = 2.0 * e(g) / n(g);
    Some(c * (avg + (n_hat(g) * (2.0 * e(g) - avg * avg)).sqrt()))
}

fn rhs_mm22(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    if g.profile.order() < 2 {
        return None;
    }
    let c = ratio_pos(g)?;
    let gap = (dmax(g).sqrt() - dmin(g).sqrt()).powi(2);
    Some(c * (2.0 * n(g) * e(g) - 0.5 * n(g) * gap).sqrt())
}

fn rhs_n_only(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    let c = ratio(g)?;
    Some(n(g) / 4.0 * (2.0 * c) * (1.0 + n(g).sqrt()))
}

fn rhs_wang_n_only(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    if g.profile.order() < 9 {
        return None;
    }
    let c = ratio_pos(g)?;
    Some(n(g) / 8.0 * (1.0 + n(g).sqrt()) * (2.0 * c).powi(2))
}

/// `(n-1-delta_min)/(n-1-delta_max) + (n-1-delta_max)/(n-1-delta_min)`,
/// the doubled ratio factor of the complement.
fn complement_ratio_sum(g: &Subject) -> Option<f64> {
    let hi = n_hat(g) - dmin(g);
    let lo = n_hat(g) - dmax(g);
    (lo >= 1.0).then(|| hi / lo + lo / hi)
}

fn rhs_ng_sum_split(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    let c = ratio_pos(g)?;
    let cbar = complement_ratio_sum(g)?;
    let (nn, ee) = (n(g), e(g));
    Some(c * (2.0 * nn * ee).sqrt() + 0.5 * cbar * (nn * nn * n_hat(g) - 2.0 * nn * ee).sqrt())
}

fn rhs_ng_sum_double(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    complement_ratio_sum(g)?;
    Some(2.0 * ratio_pos(g)? * (2.0 * n(g) * e(g)).sqrt())
}

fn rhs_ng_wang(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    ratio_pos(g)?;
    complement_ratio_sum(g)?;
    let r = dmax(g) * (n_hat(g) - dmin(g)) / (dmin(g) * (n_hat(g) - dmax(g)));
    Some((2.0 * n(g) * e(g)).sqrt() * (r + 1.0 / r))
}

fn rhs_ng_radius_lower(s: &Subjects, _: Option<usize>) -> Option<f64> {
    Some(n_hat(&s.g))
}

fn rhs_ng_radius_wang(s: &Subjects, _: Option<usize>) -> Option<f64> {
    let g = &s.g;
    let top = n_hat(g) - dmin(g);
    if g.profile.delta_max == 0 || top < 1.0 {
        return None;
    }
    let f = g.profile.forgotten as f64;
    let fbar: f64 = g.profile.degrees.iter().map(|&d| ((g.profile.n_hat() - d) as f64).powi(3)).sum();
    Some(f / (n(g) * dmax(g).powi(2)) + fbar / (n(g) * top * top))
}

fn rhs_ng_energy_lower(s: &Subjects, _: Option<usize>) -> Option<f64> {
    Some(2.0 * n_hat(&s.g))
}

// ---------------------------------------------------------------------------
// Equality families

fn fam_star_center(g: &Graph, v: Option<usize>) -> bool {
    g.is_star_center(vertex(v))
}

fn fam_k_delta_delta(g: &Graph, _: Option<usize>) -> bool {
    matches!(g.complete_bipartite_parts(), Some((a, b)) if a == b)
}

fn fam_regular(g: &Graph, _: Option<usize>) -> bool {
    g.is_regular()
}

fn fam_regular_or_complete_bipartite(g: &Graph, _: Option<usize>) -> bool {
    g.is_regular() || g.complete_bipartite_parts().is_some()
}

fn fam_empty_or_matching(g: &Graph, _: Option<usize>) -> bool {
    g.size() == 0 || g.is_perfect_matching()
}

fn fam_matching(g: &Graph, _: Option<usize>) -> bool {
    g.is_perfect_matching()
}

fn fam_koolen_moulton(g: &Graph, _: Option<usize>) -> bool {
    if g.is_perfect_matching() || g.is_complete() {
        return true;
    }
    match g.strongly_regular_parameters() {
        // Non-trivial eigenvalues +-theta need lambda = mu and
        // theta^2 = k - mu = (2e - (2e/n)^2)/(n-1) = k(n-k)/(n-1).
        Some((n, k, lambda, mu)) => lambda == mu && (k - mu) * (n - 1) == k * (n - k),
        None => false,
    }
}

fn fam_srg_n_only(g: &Graph, _: Option<usize>) -> bool {
    let n = g.order();
    let root = (n as f64).sqrt().round() as usize;
    if root * root != n || !(n + root).is_multiple_of(2) || !(n + 2 * root).is_multiple_of(4) {
        return false;
    }
    let k = (n + root) / 2;
    let lm = (n + 2 * root) / 4;
    g.strongly_regular_parameters() == Some((n, k, lm, lm))
}

const fn family(name: &'static str, member: fn(&Graph, Option<usize>) -> bool) -> Option<EqualityFamily> {
    Some(EqualityFamily { name, member })
}

// ---------------------------------------------------------------------------

static CATALOG: [BoundSpec; 26] = [
    BoundSpec {
        id: "vertex_upper_star",
        scope: Scope::PerVertex,
        anchor: "Theorem ubexvertex",
        statement: "E_ex_i <= 1/2 (dM/dm + dm/dM) sqrt(d_i)",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_vertex_energy,
            rhs: rhs_vertex_star,
            precondition: min_degree_positive,
            detail: None,
            family: family("star center", fam_star_center),
        },
    },
    BoundSpec {
        id: "vertex_upper_forgotten",
        scope: Scope::PerVertex,
        anchor: "Theorem ubdvertexfth",
        statement: "E_ex_i <= sqrt( sum_{j~i} d_j^2 / 4dm^2 + d_i^3 / 4dm^2 + d_i/2 )",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_vertex_energy,
            rhs: rhs_vertex_forgotten,
            precondition: min_degree_positive,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "vertex_lower",
        scope: Scope::PerVertex,
        anchor: "Theorem (extended vertex energy lower bound)",
        statement: "E_ex_i >= d_i / k, k = 1/2 (dM/dm + dm/dM) dM",
        precondition: "e > 0 and delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Lower,
            lhs: ext_vertex_energy,
            rhs: rhs_vertex_lower,
            precondition: lower_vertex_pre,
            detail: Some(detail_vertex_lower),
            family: family("K_{dM,dM}", fam_k_delta_delta),
        },
    },
    BoundSpec {
        id: "sandwich_left",
        scope: Scope::WholeGraph,
        anchor: "Eq. AAexRelation (left)",
        statement: "E(G) <= E_ex(G)",
        precondition: "none",
        rule: Rule::Inequality {
            direction: Direction::Lower,
            lhs: ext_energy,
            rhs: rhs_energy,
            precondition: always,
            detail: None,
            family: family("regular", fam_regular),
        },
    },
    BoundSpec {
        id: "sandwich_right",
        scope: Scope::WholeGraph,
        anchor: "Eq. AAexRelation (right)",
        statement: "E_ex(G) <= 1/2 (dM/dm + dm/dM) E(G)",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_sandwich_right,
            precondition: min_degree_positive,
            detail: None,
            family: family("regular or complete bipartite", fam_regular_or_complete_bipartite),
        },
    },
    BoundSpec {
        id: "radius_left",
        scope: Scope::WholeGraph,
        anchor: "Lemma lbdsprth (left)",
        statement: "lambda_1 <= eta_1",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Lower,
            lhs: ext_radius,
            rhs: rhs_radius,
            precondition: min_degree_positive,
            detail: None,
            family: family("regular", fam_regular),
        },
    },
    BoundSpec {
        id: "radius_right",
        scope: Scope::WholeGraph,
        anchor: "Lemma lbdsprth (right)",
        statement: "eta_1 <= 1/2 (dM/dm + dm/dM) lambda_1",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_radius,
            rhs: rhs_radius_right,
            precondition: min_degree_positive,
            detail: None,
            family: family("regular or complete bipartite", fam_regular_or_complete_bipartite),
        },
    },
    BoundSpec {
        id: "das_i",
        scope: Scope::WholeGraph,
        anchor: "Lemma dg17ubd (i) / Theorem mcbdex",
        statement: "E_ex <= 1/2 (dM/dm + dm/dM) sqrt(2ne)",
        precondition: "degree ratio defined (delta_min >= 1 or edgeless)",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_das_i,
            precondition: ratio_defined,
            detail: None,
            family: family("edgeless or (n/2)K_2", fam_empty_or_matching),
        },
    },
    BoundSpec {
        id: "das_ii",
        scope: Scope::WholeGraph,
        anchor: "Lemma dg17ubd (ii)",
        statement: "E_ex <= sqrt(dM/dm + dm/dM) sqrt(nF / 2dm^2)",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_das_ii,
            precondition: min_degree_positive,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "new_star_sum",
        scope: Scope::WholeGraph,
        anchor: "Theorem ubtexenergy",
        statement: "E_ex <= 1/2 (dM/dm + dm/dM)(sqrt((n-2)(2e-dm-dM)) + sqrt(dm) + sqrt(dM))",
        precondition: "n >= 2 and degree ratio defined",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_new_star_sum,
            precondition: star_sum_pre,
            detail: None,
            family: family("edgeless or (n/2)K_2", fam_empty_or_matching),
        },
    },
    BoundSpec {
        id: "new_forgotten",
        scope: Scope::WholeGraph,
        anchor: "Theorem ubdexfth",
        statement: "E_ex <= sqrt(nF / 2dm^2 + ne)",
        precondition: "delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_new_forgotten,
            precondition: min_degree_positive,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "koolen_moulton_ex",
        scope: Scope::WholeGraph,
        anchor: "Theorem kmex",
        statement: "E_ex <= 1/2 (dM/dm + dm/dM)(2e/n + sqrt((n-1)(2e - (2e/n)^2)))",
        precondition: "2e >= n and degree ratio defined",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_koolen_moulton,
            precondition: koolen_moulton_pre,
            detail: None,
            family: family("(n/2)K_2, K_n or srg with eigenvalues +-theta", fam_koolen_moulton),
        },
    },
    BoundSpec {
        id: "mm22_ex",
        scope: Scope::WholeGraph,
        anchor: "Theorem ub4ex",
        statement: "E_ex <= 1/2 (dM/dm + dm/dM) sqrt(2ne - n/2 (sqrt(dM) - sqrt(dm))^2)",
        precondition: "n >= 2 and delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_mm22,
            precondition: mm22_pre,
            detail: None,
            family: family("(n/2)K_2", fam_matching),
        },
    },
    BoundSpec {
        id: "n_only_ex",
        scope: Scope::WholeGraph,
        anchor: "Theorem ub5ex",
        statement: "E_ex <= n/4 (dM/dm + dm/dM)(1 + sqrt(n))",
        precondition: "degree ratio defined",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_n_only,
            precondition: ratio_defined,
            detail: None,
            family: family("srg(n, n/2+sqrt(n)/2, n/4+sqrt(n)/2, n/4+sqrt(n)/2)", fam_srg_n_only),
        },
    },
    BoundSpec {
        id: "wang_n_only",
        scope: Scope::WholeGraph,
        anchor: "Lemma ubdexthn1",
        statement: "E_ex <= n/8 (1 + sqrt(n)) (dM/dm + dm/dM)^2",
        precondition: "n >= 9 and delta_min >= 1",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: ext_energy,
            rhs: rhs_wang_n_only,
            precondition: wang_n_only_pre,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "ng_sum_split",
        scope: Scope::GraphPair,
        anchor: "Theorem ubexnorgod",
        statement: "E_ex(G) + E_ex(Gc) <= 1/2 (dM/dm + dm/dM) sqrt(2ne) + 1/2 ((n^-dm)/(n^-dM) + (n^-dM)/(n^-dm)) sqrt(n^2 n^ - 2ne)",
        precondition: "no isolated vertices in G and complement",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: pair_energy,
            rhs: rhs_ng_sum_split,
            precondition: no_isolated_pair,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "ng_sum_double",
        scope: Scope::GraphPair,
        anchor: "Theorem ubexnorgod2",
        statement: "E_ex(G) + E_ex(Gc) <= (dM/dm + dm/dM) sqrt(2ne)",
        precondition: "no isolated vertices in G and complement; E_ex(G) >= E_ex(complement)",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: pair_energy,
            rhs: rhs_ng_sum_double,
            precondition: ng_sum_double_pre,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "ng_wang",
        scope: Scope::GraphPair,
        anchor: "Lemma ubexnorgod1",
        statement: "E_ex(G) + E_ex(Gc) <= sqrt(2ne) (R + 1/R), R = dM(n^-dm) / (dm(n^-dM))",
        precondition: "G connected; no isolated vertices in G and complement; E_ex(G) >= E_ex(complement)",
        rule: Rule::Inequality {
            direction: Direction::Upper,
            lhs: pair_energy,
            rhs: rhs_ng_wang,
            precondition: ng_wang_pre,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "ng_radius_lower",
        scope: Scope::GraphPair,
        anchor: "Theorem lbdngsr1",
        statement: "eta_1(G) + eta_1(Gc) >= n - 1",
        precondition: "G and complement connected",
        rule: Rule::Inequality {
            direction: Direction::Lower,
            lhs: pair_radius,
            rhs: rhs_ng_radius_lower,
            precondition: both_connected,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "ng_radius_wang",
        scope: Scope::GraphPair,
        anchor: "Lemma lbdngsr",
        statement: "eta_1(G) + eta_1(Gc) >= F/(n dM^2) + Fc/(n (n^-dm)^2)",
        precondition: "delta_max >= 1 and delta_min <= n - 2",
        rule: Rule::Inequality {
            direction: Direction::Lower,
            lhs: pair_radius,
            rhs: rhs_ng_radius_wang,
            precondition: radius_wang_pre,
            detail: None,
            family: family("regular", fam_regular),
        },
    },
    BoundSpec {
        id: "ng_energy_lower",
        scope: Scope::GraphPair,
        anchor: "Theorem norgad3",
        statement: "E_ex(G) + E_ex(Gc) >= 2(n - 1)",
        precondition: "G and complement connected",
        rule: Rule::Inequality {
            direction: Direction::Lower,
            lhs: pair_energy,
            rhs: rhs_ng_energy_lower,
            precondition: both_connected,
            detail: None,
            family: None,
        },
    },
    BoundSpec {
        id: "dominance:new_star_sum_vs_das_i",
        scope: Scope::WholeGraph,
        anchor: "Remark after Theorem ubtexenergy",
        statement: "rhs(new_star_sum) <= rhs(das_i)",
        precondition: "both formulas defined",
        rule: Rule::Dominance { direction: Direction::Upper, newer: "new_star_sum", older: "das_i" },
    },
    BoundSpec {
        id: "dominance:new_forgotten_vs_das_ii",
        scope: Scope::WholeGraph,
        anchor: "Remark after Theorem ubdexfth",
        statement: "rhs(new_forgotten) <= rhs(das_ii)",
        precondition: "both formulas defined",
        rule: Rule::Dominance { direction: Direction::Upper, newer: "new_forgotten", older: "das_ii" },
    },
    BoundSpec {
        id: "dominance:n_only_ex_vs_wang_n_only",
        scope: Scope::WholeGraph,
        anchor: "Remark after Lemma ubdexthn1",
        statement: "rhs(n_only_ex) <= rhs(wang_n_only)",
        precondition: "both formulas defined (n >= 9, delta_min >= 1)",
        rule: Rule::Dominance { direction: Direction::Upper, newer: "n_only_ex", older: "wang_n_only" },
    },
    BoundSpec {
        id: "dominance:ng_sum_double_vs_ng_wang",
        scope: Scope::GraphPair,
        anchor: "Remark after Theorem ubexnorgod2",
        statement: "rhs(ng_sum_double) <= rhs(ng_wang)",
        precondition: "both formulas defined",
        rule: Rule::Dominance { direction: Direction::Upper, newer: "ng_sum_double", older: "ng_wang" },
    },
    BoundSpec {
        id: "dominance:ng_radius_lower_vs_ng_radius_wang",
        scope: Scope::GraphPair,
        anchor: "Remark after Theorem lbdngsr1",
        statement: "rhs(ng_radius_lower) >= rhs(ng_radius_wang)",
        precondition: "both formulas defined",
        rule: Rule::Dominance {
            direction: Direction::Lower,
            newer: "ng_radius_lower",
            older: "ng_radius_wang",
        },
    },
];
