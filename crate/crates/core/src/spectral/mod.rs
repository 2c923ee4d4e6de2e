//! Extremal eigenpairs of graph matrices.
//!
//! Two routes compute the leading eigenpair of `Q(G)` or `A(G)`:
//! shifted power iteration over a graph-aware operator (default), and a full
//! cyclic Jacobi solve on the dense matrix. `Method::Auto` runs the power
//! route and falls back to Jacobi when the iteration cap is hit.

mod checks;
mod jacobi;
mod matrix;

pub use checks::{
    check_difference_identity, check_eigen_equation, edge_count_bound, edge_quadratic_form,
    rayleigh_quotient, signless_rayleigh_forms, EdgeCountBound,
};
pub use jacobi::{symmetric_eigen, Eigen};
pub use matrix::{adjacency_matrix, signless_laplacian, SymMatrix};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    UnitNorm,
    MaxEntryOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Auto,
    Power,
    Jacobi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    SignlessLaplacian,
    Adjacency,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralConfig<T> {
    /// Target ∞-norm of `M h - value h` for the reported vector.
    pub tolerance: T,
    /// Slack applied when comparing eigenvalues against bounds.
    pub slack: T,
    pub max_iterations: usize,
    pub normalization: Normalization,
    pub method: Method,
    /// Largest order the Jacobi route accepts.
    pub jacobi_cap: usize,
}

impl<T: Scalar> Default for SpectralConfig<T> {
    fn default() -> Self {
        SpectralConfig {
            tolerance: T::default_tolerance(),
            slack: T::of(1e-6),
            max_iterations: 20_000,
            normalization: Normalization::UnitNorm,
            method: Method::Auto,
            jacobi_cap: 300,
        }
    }
}

impl<T: Scalar> SpectralConfig<T> {
    pub fn with_normalization(mut self, normalization: Normalization) -> Self {
        self.normalization = normalization;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

/// Leading eigenvalue with a certified eigenvector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult<T> {
    pub value: T,
    pub vector: Vec<T>,
    pub normalization: Normalization,
    /// ∞-norm of `M·vector − value·vector`.
    pub residual: T,
    pub iterations: usize,
    /// Route that produced the result (never `Auto`).
    pub method: Method,
    /// Whether the top two eigenvalues are within the multiplicity gap.
    /// Only the Jacobi route can tell; `None` otherwise.
    pub degenerate: Option<bool>,
}

/// Matrix-free `M x` for `Q(G)` or `A(G)`. Each row sums over whichever of
/// the neighbor or non-neighbor list is shorter, so near-complete graphs
/// cost about as much as sparse ones.
pub(crate) struct GraphOperator {
    diag: Vec<usize>,
    rows: Vec<(bool, Vec<usize>)>,
}

impl GraphOperator {
    pub(crate) fn new(g: &Graph, kind: MatrixKind) -> Self {
        let n = g.order();
        let mut diag = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        for v in 0..n {
            let d = g.degree(v);
            diag.push(match kind {
                MatrixKind::SignlessLaplacian => d,
                MatrixKind::Adjacency => 0,
            });
            if 2 * d <= n {
                rows.push((false, g.neighbors(v).collect()));
            } else {
                let missing = (0..n).filter(|&w| w != v && !g.has_edge(v, w)).collect();
                rows.push((true, missing));
            }
        }
        GraphOperator { diag, rows }
    }

    pub(crate) fn apply<T: Scalar>(&self, x: &[T], y: &mut [T]) {
        let total: T = x.iter().copied().sum();
        for (i, ((complemented, list), &d)) in self.rows.iter().zip(&self.diag).enumerate() {
            let partial: T = list.iter().map(|&j| x[j]).sum();
            let adj = if *complemented {
                total - x[i] - partial
            } else {
                partial
            };
            y[i] = T::count(d) * x[i] + adj;
        }
    }

    fn residual<T: Scalar>(&self, value: T, x: &[T], scratch: &mut [T]) -> T {
        self.apply(x, scratch);
        scratch
            .iter()
            .zip(x)
            .map(|(&a, &b)| (a - value * b).abs())
            .fold(T::zero(), T::max)
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

fn norm2<T: Scalar>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

/// Orients `x` so its entry sum is nonnegative and rescales it.
fn normalize<T: Scalar>(x: &mut [T], mode: Normalization) {
    let s: T = x.iter().copied().sum();
    if s < T::zero() {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    match mode {
        Normalization::UnitNorm => {
            let nrm = norm2(x);
            if nrm > T::zero() {
                x.iter_mut().for_each(|v| *v /= nrm);
            }
        }
        Normalization::MaxEntryOne => {
            let (arg, max) = x
                .iter()
                .copied()
                .enumerate()
                .fold((0, T::neg_infinity()), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });
            if max > T::zero() {
                x.iter_mut().for_each(|v| *v /= max);
                x[arg] = T::one();
            }
        }
    }
}

fn power_route<T: Scalar>(g: &Graph, kind: MatrixKind, cfg: &SpectralConfig<T>) -> Result<SpectralResult<T>> {
    let n = g.order();
    let op = GraphOperator::new(g, kind);
    // Adjacency spectra are symmetric for bipartite graphs; shifting by the
    // max degree makes the top eigenvalue dominant in magnitude.
    let shift = match kind {
        MatrixKind::SignlessLaplacian => T::zero(),
        MatrixKind::Adjacency => T::count(g.degrees().into_iter().max().unwrap_or(0)),
    };
    let mut x = vec![T::one() / T::count(n).sqrt(); n];
    let mut y = vec![T::zero(); n];
    let mut best = (T::infinity(), T::zero(), x.clone());
    for it in 1..=cfg.max_iterations {
        op.apply(&x, &mut y);
        let theta = dot(&x, &y);
        let unit_res = y
            .iter()
            .zip(&x)
            .map(|(&a, &b)| (a - theta * b).abs())
            .fold(T::zero(), T::max);
        let scale = match cfg.normalization {
            Normalization::UnitNorm => T::one(),
            Normalization::MaxEntryOne => x.iter().map(|v| v.abs()).fold(T::zero(), T::max),
        };
        let res = unit_res / scale;
        if res < best.0 {
            best = (res, theta, x.clone());
        }
        if res <= cfg.tolerance {
            let mut vector = x;
            normalize(&mut vector, cfg.normalization);
            let residual = op.residual(theta, &vector, &mut y);
            return Ok(SpectralResult {
                value: theta,
                vector,
                normalization: cfg.normalization,
                residual,
                iterations: it,
                method: Method::Power,
                degenerate: None,
            });
        }
        for (yi, &xi) in y.iter_mut().zip(&x) {
            *yi += shift * xi;
        }
        let nrm = norm2(&y);
        if nrm == T::zero() {
            // M x = 0 with shift 0 is caught above; unreachable in practice.
            break;
        }
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = yi / nrm;
        }
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iterations,
        residual: best.0.to_f64_lossy(),
        value: best.1.to_f64_lossy(),
        vector: best.2.iter().map(|v| v.to_f64_lossy()).collect(),
    })
}

fn jacobi_route<T: Scalar>(g: &Graph, kind: MatrixKind, cfg: &SpectralConfig<T>) -> Result<SpectralResult<T>> {
    let n = g.order();
    if n > cfg.jacobi_cap {
        return Err(Error::TooLarge { n, cap: cfg.jacobi_cap });
    }
    let m = match kind {
        MatrixKind::SignlessLaplacian => signless_laplacian(g)?,
        MatrixKind::Adjacency => adjacency_matrix(g)?,
    };
    let eig = symmetric_eigen(&m)?;
    let value = eig.values[0];
    let mut vector = eig.vectors[0].clone();
    normalize(&mut vector, cfg.normalization);
    let residual = m.residual(value, &vector)?;
    let degenerate = eig.values.get(1).map(|&second| value - second < T::multiplicity_gap());
    Ok(SpectralResult {
        value,
        vector,
        normalization: cfg.normalization,
        residual,
        iterations: eig.sweeps,
        method: Method::Jacobi,
        degenerate: Some(degenerate.unwrap_or(false)),
    })
}

/// Leading eigenpair of `Q(G)` or `A(G)` per `cfg`.
pub fn leading_eigenpair<T: Scalar>(g: &Graph, kind: MatrixKind, cfg: &SpectralConfig<T>) -> Result<SpectralResult<T>> {
    if g.is_null() {
        return Err(Error::TooFewVertices {
            required: 1,
            actual: 0,
        });
    }
    match cfg.method {
        Method::Power => power_route(g, kind, cfg),
        Method::Jacobi => jacobi_route(g, kind, cfg),
        Method::Auto => match power_route(g, kind, cfg) {
            Err(Error::NoConvergence { .. }) if g.order() <= cfg.jacobi_cap => jacobi_route(g, kind, cfg),
            other => other,
        },
    }
}

/// The Q-index `q(G)`, the largest eigenvalue of the signless Laplacian.
pub fn q_index<T: Scalar>(g: &Graph, cfg: &SpectralConfig<T>) -> Result<SpectralResult<T>> {
    leading_eigenpair(g, MatrixKind::SignlessLaplacian, cfg)
}

/// The spectral radius `λ(G)`, the largest adjacency eigenvalue.
pub fn spectral_radius<T: Scalar>(g: &Graph, cfg: &SpectralConfig<T>) -> Result<SpectralResult<T>> {
    leading_eigenpair(g, MatrixKind::Adjacency, cfg)
}

/// `q(G)` in `f64` with default settings.
pub fn q_value(g: &Graph) -> Result<f64> {
    q_index::<f64>(g, &SpectralConfig::default()).map(|r| r.value)
}
