use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{enumerate_labeled, OracleError};
use crate::graph::generators::random_gnp_stream;
use crate::graph::Graph;
use crate::linalg::{
    kronecker, matrix_abs, operator_norm, polar_factor, vec, verify_s_identity, LinalgError, Matrix, SymmetricMatrix,
};

const S_IDENTITY_TOL: f64 = 1e-8;
const PRECURSOR_TOL: f64 = 1e-12;
const POLAR_RECONSTRUCTION_TOL: f64 = 1e-8;
const POLAR_ORTHOGONALITY_TOL: f64 = 1e-10;
const KRONECKER_TOL: f64 = 1e-10;
const VON_NEUMANN_FLOOR: f64 = -1e-9;
const AM_QM_FLOOR: f64 = -1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityConfig {
    pub seed: u64,
    /// Every connected labeled graph up to this order.
    pub exhaustive_max_order: usize,
    pub random_graphs: usize,
    pub random_max_order: usize,
    pub polar_samples: usize,
    pub polar_max_order: usize,
    pub kronecker_triples: usize,
    pub von_neumann_pairs: usize,
    pub von_neumann_order: usize,
    pub am_qm_tuples: usize,
    pub am_qm_max_len: usize,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            exhaustive_max_order: 5,
            random_graphs: 20,
            random_max_order: 10,
            polar_samples: 200,
            polar_max_order: 8,
            kronecker_triples: 100,
            von_neumann_pairs: 100,
            von_neumann_order: 5,
            am_qm_tuples: 1000,
            am_qm_max_len: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SIdentityResiduals {
    pub graphs: usize,
    pub max_precursor: f64,
    pub max_vec_abs: f64,
    pub worst_graph6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolarResiduals {
    pub samples: usize,
    /// `max |X - |X| U|`.
    pub max_reconstruction: f64,
    /// `max |U^T U - I|`.
    pub max_orthogonality: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KroneckerResiduals {
    pub triples: usize,
    /// `(X1 (x) X2)(X3 (x) X4)` against `X1 X3 (x) X2 X4`.
    pub max_mixed_product: f64,
    /// `vec(X1 X2 X3)` against `(X3^T (x) X1) vec(X2)`.
    pub max_vec_triple: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VonNeumannResiduals {
    pub pairs: usize,
    /// Smallest `||X1|| tr(X2) - |tr(X1 X2)|` with `X2` positive semidefinite.
    pub min_margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmQmResiduals {
    pub tuples: usize,
    /// Smallest `sqrt(r sum t) - sum sqrt(t)`.
    pub min_margin: f64,
    /// Equality detected exactly on the constant tuples.
    pub equality_only_on_constant: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub config: IdentityConfig,
    pub s_identity: SIdentityResiduals,
    pub polar: PolarResiduals,
    pub kronecker: KroneckerResiduals,
    pub von_neumann: VonNeumannResiduals,
    pub am_qm: AmQmResiduals,
    pub passed: bool,
}

/// Runs the matrix identities behind the sandwich theorem on graphs and on
/// random matrices, reporting the largest residual of each.
pub fn identity_suite(cfg: &IdentityConfig) -> Result<IdentitySummary, OracleError> {
    let s_identity = s_identity(cfg).map_err(linalg)?;
    let polar = polar(cfg).map_err(linalg)?;
    let kronecker = kronecker_products(cfg).map_err(linalg)?;
    let von_neumann = von_neumann(cfg).map_err(linalg)?;
    let am_qm = am_qm(cfg);
    let passed = s_identity.max_vec_abs <= S_IDENTITY_TOL
        && s_identity.max_precursor <= PRECURSOR_TOL
        && polar.max_reconstruction <= POLAR_RECONSTRUCTION_TOL
        && polar.max_orthogonality <= POLAR_ORTHOGONALITY_TOL
        && kronecker.max_mixed_product <= KRONECKER_TOL
        && kronecker.max_vec_triple <= KRONECKER_TOL
        && von_neumann.min_margin >= VON_NEUMANN_FLOOR
        && am_qm.min_margin >= AM_QM_FLOOR
        && am_qm.equality_only_on_constant;
    Ok(IdentitySummary { config: cfg.clone(), s_identity, polar, kronecker, von_neumann, am_qm, passed })
}

fn linalg(e: LinalgError) -> OracleError {
    OracleError::Config(format!("identity suite numeric failure: {e}"))
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| r.gen_range(-5.0..5.0))
}

fn random_symmetric(r: &mut ChaCha8Rng, n: usize) -> SymmetricMatrix {
    SymmetricMatrix::from_lower(n, |_, _| r.gen_range(-5.0..5.0))
}

fn s_identity(cfg: &IdentityConfig) -> Result<SIdentityResiduals, LinalgError> {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=cfg.exhaustive_max_order {
        let all = enumerate_labeled(n).expect("exhaustive identity order within enumeration range");
        graphs.extend(all.filter(Graph::is_connected));
    }
    let mut stream = 0;
    let mut drawn = 0;
    while drawn < cfg.random_graphs {
        let n = 2 + (stream as usize) % (cfg.random_max_order - 1);
        let g = random_gnp_stream(n, 0.5, cfg.seed, stream).expect("valid edge probability");
        stream += 1;
        if g.is_connected() {
            graphs.push(g);
            drawn += 1;
        }
    }

    let mut out = SIdentityResiduals { graphs: graphs.len(), max_precursor: 0.0, max_vec_abs: 0.0, worst_graph6: None };
    for g in &graphs {
        let r = verify_s_identity(g)?;
        out.max_precursor = out.max_precursor.max(r.precursor);
        if r.vec_abs > out.max_vec_abs || out.worst_graph6.is_none() {
            out.max_vec_abs = out.max_vec_abs.max(r.vec_abs);
            out.worst_graph6 = Some(g.to_graph6());
        }
    }
    Ok(out)
}

fn polar(cfg: &IdentityConfig) -> Result<PolarResiduals, LinalgError> {
    let mut r = rng(cfg.seed, 1);
    let mut out = PolarResiduals { samples: cfg.polar_samples, max_reconstruction: 0.0, max_orthogonality: 0.0 };
    for _ in 0..cfg.polar_samples {
        let n = r.gen_range(1..=cfg.polar_max_order);
        let x = random_symmetric(&mut r, n);
        let u = polar_factor(&x)?;
        let abs = matrix_abs(&x)?;
        let rebuilt = abs.as_matrix() * u.as_matrix();
        out.max_reconstruction = out.max_reconstruction.max(rebuilt.max_abs_diff(x.as_matrix()));
        out.max_orthogonality = out.max_orthogonality.max(u.orthogonality_residual());
    }
    Ok(out)
}

fn kronecker_products(cfg: &IdentityConfig) -> Result<KroneckerResiduals, LinalgError> {
    let mut r = rng(cfg.seed, 2);
    let mut out = KroneckerResiduals { triples: cfg.kronecker_triples, max_mixed_product: 0.0, max_vec_triple: 0.0 };
    for _ in 0..cfg.kronecker_triples {
        let x: Vec<Matrix> = (0..4).map(|_| random_matrix(&mut r, 3, 3)).collect();
        let lhs = &kronecker(&x[0], &x[1])? * &kronecker(&x[2], &x[3])?;
        let rhs = kronecker(&(&x[0] * &x[2]), &(&x[1] * &x[3]))?;
        out.max_mixed_product = out.max_mixed_product.max(lhs.max_abs_diff(&rhs));

        let product = vec(&(&(&x[0] * &x[1]) * &x[2]));
        let via = kronecker(&x[2].transpose(), &x[0])?.matvec(&vec(&x[1]))?;
        let diff = product.iter().zip(&via).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
        out.max_vec_triple = out.max_vec_triple.max(diff);
    }
    Ok(out)
}

fn von_neumann(cfg: &IdentityConfig) -> Result<VonNeumannResiduals, LinalgError> {
    let mut r = rng(cfg.seed, 3);
    let n = cfg.von_neumann_order;
    let mut min_margin = f64::INFINITY;
    for _ in 0..cfg.von_neumann_pairs {
        let x1 = random_symmetric(&mut r, n);
        let b = random_matrix(&mut r, n, n);
        let x2 = &b * &b.transpose();
        let lhs = (x1.as_matrix() * &x2).trace().abs();
        let rhs = operator_norm(x1.as_matrix())? * x2.trace();
        min_margin = min_margin.min(rhs - lhs);
    }
    if cfg.von_neumann_pairs == 0 {
        min_margin = 0.0;
    }
    Ok(VonNeumannResiduals { pairs: cfg.von_neumann_pairs, min_margin })
}

fn am_qm(cfg: &IdentityConfig) -> AmQmResiduals {
    let mut r = rng(cfg.seed, 4);
    let mut min_margin = f64::INFINITY;
    let mut equality_only_on_constant = true;
    for k in 0..cfg.am_qm_tuples {
        let len = r.gen_range(1..=cfg.am_qm_max_len);
        // Every tenth tuple is constant so the equality case is exercised.
        let constant = k % 10 == 0;
        let t: Vec<f64> = if constant {
            vec![r.gen_range(0.0..10.0); len]
        } else {
            (0..len).map(|_| r.gen_range(0.0..10.0)).collect()
        };
        let sum_roots: f64 = t.iter().map(|x| x.sqrt()).sum();
        let bound = (len as f64 * t.iter().sum::<f64>()).sqrt();
        let margin = bound - sum_roots;
        min_margin = min_margin.min(margin);
        let equal = margin.abs() <= 1e-12 * (1.0 + bound);
        let all_same = t.iter().all(|&x| x == t[0]);
        if equal != all_same {
            equality_only_on_constant = false;
        }
    }
    if cfg.am_qm_tuples == 0 {
        min_margin = 0.0;
    }
    AmQmResiduals { tuples: cfg.am_qm_tuples, min_margin, equality_only_on_constant }
}
