//! Adjacency and extended adjacency matrices, graph and vertex energies,
//! and the eigenvector-weight decomposition of extended vertex energies.

use serde::{Deserialize, Serialize};

use crate::graph::{DegreeProfile, Graph};
use crate::linalg::{eig_symmetric, EigenDecomposition, LinalgError, SymmetricMatrix};

/// 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_lower(g.order(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// Extended adjacency matrix: `(d_i/d_j + d_j/d_i) / 2` on edges, 0
/// elsewhere. Ratios are only formed across edges, where both degrees are
/// positive, so isolated vertices just give zero rows.
pub fn extended_adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let degrees = g.degrees();
    SymmetricMatrix::from_lower(g.order(), |i, j| {
        if g.has_edge(i, j) {
            let (a, b) = (degrees[i] as f64, degrees[j] as f64);
            0.5 * (a / b + b / a)
        } else {
            0.0
        }
    })
}

pub fn degree_matrix(g: &Graph) -> SymmetricMatrix {
    let d: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    SymmetricMatrix::diagonal(&d)
}

/// `q[i][r] = w_ir^2` for the orthonormal eigenvectors `w_r` of `A_ex`.
///
/// Columns follow the eigenvalue order of `A_ex` (non-increasing `eta_r`);
/// `abs_eigenvalues[r] = |eta_r|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexEnergyDecomposition {
    pub weights: Vec<Vec<f64>>,
    pub abs_eigenvalues: Vec<f64>,
}

impl VertexEnergyDecomposition {
    pub fn from_eigen(eig: &EigenDecomposition) -> Self {
        let n = eig.order();
        let weights = (0..n).map(|i| (0..n).map(|r| eig.vectors[(i, r)].powi(2)).collect()).collect();
        let abs_eigenvalues = eig.values.iter().map(|v| v.abs()).collect();
        Self { weights, abs_eigenvalues }
    }

    /// `sum_r q_ir |eta_r|`.
    pub fn vertex_energy(&self, i: usize) -> f64 {
        self.weights[i].iter().zip(&self.abs_eigenvalues).map(|(q, e)| q * e).sum()
    }

    /// Largest deviation of any row or column sum from 1.
    pub fn stochastic_residual(&self) -> f64 {
        let n = self.weights.len();
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let row: f64 = self.weights[k].iter().sum();
            let col: f64 = self.weights.iter().map(|r| r[k]).sum();
            worst = worst.max((row - 1.0).abs()).max((col - 1.0).abs());
        }
        worst
    }
}

/// Spectral data of a graph: total and per-vertex energies of `A` and `A_ex`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub ordinary_energy: f64,
    pub extended_energy: f64,
    pub vertex_energies: Vec<f64>,
    pub extended_vertex_energies: Vec<f64>,
    pub adjacency_spectral_radius: f64,
    pub extended_spectral_radius: f64,
    pub spectrum: Vec<f64>,
    pub extended_spectrum: Vec<f64>,
    pub weights: VertexEnergyDecomposition,
}

/// Everything derived from one pair of eigendecompositions.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub profile: DegreeProfile,
    pub report: EnergyReport,
    pub adjacency: SymmetricMatrix,
    pub extended: SymmetricMatrix,
    pub adjacency_eig: EigenDecomposition,
    pub extended_eig: EigenDecomposition,
}

impl GraphAnalysis {
    pub fn of(g: &Graph) -> Result<Self, LinalgError> {
        let adjacency = adjacency_matrix(g);
        let extended = extended_adjacency_matrix(g);
        let adjacency_eig = eig_symmetric(&adjacency)?;
        let extended_eig = eig_symmetric(&extended)?;

        let abs_a = adjacency_eig.spectral_map(f64::abs);
        let abs_ex = extended_eig.spectral_map(f64::abs);
        let report = EnergyReport {
            ordinary_energy: adjacency_eig.values.iter().map(|v| v.abs()).sum(),
            extended_energy: extended_eig.values.iter().map(|v| v.abs()).sum(),
            vertex_energies: abs_a.diag(),
            extended_vertex_energies: abs_ex.diag(),
            adjacency_spectral_radius: adjacency_eig.spectral_radius(),
            extended_spectral_radius: extended_eig.spectral_radius(),
            spectrum: adjacency_eig.values.clone(),
            extended_spectrum: extended_eig.values.clone(),
            weights: VertexEnergyDecomposition::from_eigen(&extended_eig),
        };
        Ok(Self { profile: DegreeProfile::of(g), report, adjacency, extended, adjacency_eig, extended_eig })
    }
}

pub fn energy_report(g: &Graph) -> Result<EnergyReport, LinalgError> {
    Ok(GraphAnalysis::of(g)?.report)
}

pub fn vertex_weight_decomposition(g: &Graph) -> Result<VertexEnergyDecomposition, LinalgError> {
    let eig = eig_symmetric(&extended_adjacency_matrix(g))?;
    Ok(VertexEnergyDecomposition::from_eigen(&eig))
}

/// Largest difference between an extended vertex energy computed on the
/// whole graph and on the component containing that vertex.
pub fn component_locality_residual(g: &Graph, report: &EnergyReport) -> Result<f64, LinalgError> {
    let components = g.connected_components();
    if components.len() == 1 {
        return Ok(0.0);
    }
    let mut worst: f64 = 0.0;
    for component in components {
        let sub = g.induced_subgraph(&component).expect("components are valid vertex sets");
        let local = energy_report(&sub)?;
        for (k, &v) in component.iter().enumerate() {
            let diff = (local.extended_vertex_energies[k] - report.extended_vertex_energies[v]).abs();
            worst = worst.max(diff);
        }
    }
    Ok(worst)
}

/// True when every component reproduces the whole-graph extended vertex
/// energies to within `1e-9`.
pub fn component_locality_check(g: &Graph) -> Result<bool, LinalgError> {
    let report = energy_report(g)?;
    Ok(component_locality_residual(g, &report)? <= 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn assert_report_invariants(r: &EnergyReport) {
        let abs_sum: f64 = r.spectrum.iter().map(|v| v.abs()).sum();
        let abs_sum_ex: f64 = r.extended_spectrum.iter().map(|v| v.abs()).sum();
        assert!(approx(r.ordinary_energy, abs_sum, 1e-9));
        assert!(approx(r.extended_energy, abs_sum_ex, 1e-9));
        assert!(approx(r.vertex_energies.iter().sum(), r.ordinary_energy, 1e-9));
        assert!(approx(r.extended_vertex_energies.iter().sum(), r.extended_energy, 1e-9));
        assert!(r.vertex_energies.iter().chain(&r.extended_vertex_energies).all(|&v| v >= -1e-12));
        assert!(r.weights.stochastic_residual() <= 1e-9);
        for (i, &e) in r.extended_vertex_energies.iter().enumerate() {
            assert!(approx(r.weights.vertex_energy(i), e, 1e-9));
        }
    }

    #[test]
    fn matrices() {
        let k2 = adjacency_matrix(&complete(2).unwrap());
        assert_eq!(k2.as_matrix().to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(adjacency_matrix(&empty(3).unwrap()), SymmetricMatrix::zeros(3));

        let c4 = cycle(4).unwrap();
        assert_eq!(extended_adjacency_matrix(&c4), adjacency_matrix(&c4));

        let p3 = extended_adjacency_matrix(&path(3).unwrap());
        assert_eq!((p3.get(0, 1), p3.get(1, 2), p3.get(0, 2)), (1.25, 1.25, 0.0));

        let s3 = extended_adjacency_matrix(&star(3).unwrap());
        for leaf in 1..4 {
            assert!(approx(s3.get(0, leaf), 5.0 / 3.0, 1e-15));
        }

        assert_eq!(degree_matrix(&complete(3).unwrap()), SymmetricMatrix::diagonal(&[2.0; 3]));
        assert_eq!(degree_matrix(&path(3).unwrap()), SymmetricMatrix::diagonal(&[1.0, 2.0, 1.0]));
        assert_eq!(degree_matrix(&empty(2).unwrap()), SymmetricMatrix::zeros(2));
    }

    #[test]
    fn k2_energies() {
        let r = energy_report(&complete(2).unwrap()).unwrap();
        assert!(approx(r.ordinary_energy, 2.0, 1e-12));
        assert!(approx(r.extended_energy, 2.0, 1e-12));
        assert!(r.extended_vertex_energies.iter().all(|&v| approx(v, 1.0, 1e-12)));
        assert_report_invariants(&r);
    }

    #[test]
    fn p3_energies() {
        // A_ex(P3) = (5/4) A(P3) and the star spectrum is +-sqrt2, 0.
        let r = energy_report(&path(3).unwrap()).unwrap();
        assert!(approx(r.ordinary_energy, 2.0 * SQRT2, 1e-12));
        assert!(approx(r.extended_energy, 1.25 * 2.0 * SQRT2, 1e-12));
        assert!(approx(r.extended_vertex_energies[1], 1.25 * SQRT2, 1e-12));
        assert!(approx(r.ordinary_energy, 2.828427, 1e-6));
        assert!(approx(r.extended_energy, 3.535534, 1e-6));
        assert!(approx(r.extended_vertex_energies[1], 1.767767, 1e-6));
        assert_report_invariants(&r);
    }

    #[test]
    fn star_energies() {
        let s3 = 3f64.sqrt();
        let r = energy_report(&star(3).unwrap()).unwrap();
        assert!(approx(r.ordinary_energy, 2.0 * s3, 1e-12));
        assert!(approx(r.extended_energy, 5.0 / 3.0 * 2.0 * s3, 1e-12));
        assert!(approx(r.extended_vertex_energies[0], 5.0 / 3.0 * s3, 1e-12));
        assert!(approx(r.extended_energy, 5.773503, 1e-6));
        assert!(approx(r.extended_vertex_energies[0], 2.886751, 1e-6));
        assert_report_invariants(&r);
    }

    #[test]
    fn p4_energies() {
        // Path spectrum 2cos(k pi / 5), k = 1..4.
        let oracle: f64 = (1..=4).map(|k| (2.0 * (k as f64 * std::f64::consts::PI / 5.0).cos()).abs()).sum();
        let r = energy_report(&path(4).unwrap()).unwrap();
        assert!(approx(r.ordinary_energy, oracle, 1e-12));
        assert!(approx(r.ordinary_energy, 2.0 * 5f64.sqrt(), 1e-12));
        assert!(approx(r.extended_energy, 2.0 * 7.25f64.sqrt(), 1e-12));
        assert!(approx(r.extended_energy, 5.385165, 1e-6));
        assert_report_invariants(&r);
    }

    #[test]
    fn weights() {
        let q = vertex_weight_decomposition(&complete(2).unwrap()).unwrap();
        for row in &q.weights {
            for &w in row {
                assert!(approx(w, 0.5, 1e-12));
            }
        }
        let q = vertex_weight_decomposition(&star(3).unwrap()).unwrap();
        // Centre weight 1/2 on each of the +-(5/3)sqrt3 eigenvalues, 0 on the zeros.
        assert!(approx(q.weights[0][0], 0.5, 1e-9));
        assert!(approx(q.weights[0][3], 0.5, 1e-9));
        assert!(approx(q.weights[0][1] + q.weights[0][2], 0.0, 1e-9));
        assert!(q.stochastic_residual() <= 1e-9);
    }

    #[test]
    fn locality() {
        let two_k2 = matching(4).unwrap();
        assert!(component_locality_check(&two_k2).unwrap());
        let r = energy_report(&two_k2).unwrap();
        assert!(r.extended_vertex_energies.iter().all(|&v| approx(v, 1.0, 1e-12)));

        let p3_k1 = path(3).unwrap().disjoint_union(&empty(1).unwrap());
        assert!(component_locality_check(&p3_k1).unwrap());
        assert_eq!(energy_report(&p3_k1).unwrap().extended_vertex_energies[3], 0.0);

        let k3_s3 = complete(3).unwrap().disjoint_union(&star(3).unwrap());
        assert!(component_locality_check(&k3_s3).unwrap());
    }

    #[test]
    fn disjoint_union_adds() {
        let a = path(4).unwrap();
        let b = star(3).unwrap();
        let sum = energy_report(&a).unwrap().extended_energy + energy_report(&b).unwrap().extended_energy;
        let union = energy_report(&a.disjoint_union(&b)).unwrap().extended_energy;
        assert!(approx(sum, union, 1e-9));
    }

    #[test]
    fn bidegree_scaling() {
        for (a, b) in [(1, 2), (1, 5), (2, 3), (3, 4)] {
            let g = complete_bipartite(a, b).unwrap();
            let factor = 0.5 * (a as f64 / b as f64 + b as f64 / a as f64);
            let scaled = adjacency_matrix(&g).as_matrix().scale(factor);
            // Both sides form the same two quotients, so this is exact.
            assert_eq!(&scaled, extended_adjacency_matrix(&g).as_matrix());
            let r = energy_report(&g).unwrap();
            assert!(approx(r.extended_energy, factor * r.ordinary_energy, 1e-9));
        }
    }
}
