//! Identity and bound checkers evaluated on computed eigenpairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

use super::matrix::SymMatrix;
use super::{q_index, SpectralConfig, SpectralResult};

fn check_nonzero<T: Scalar>(x: &[T]) -> Result<T> {
    let nn: T = x.iter().map(|&v| v * v).sum();
    if nn == T::zero() {
        Err(Error::ZeroVector)
    } else {
        Ok(nn)
    }
}

/// `⟨Mx, x⟩ / ⟨x, x⟩`.
pub fn rayleigh_quotient<T: Scalar>(m: &SymMatrix<T>, x: &[T]) -> Result<T> {
    m.check_len(x)?;
    let nn = check_nonzero(x)?;
    let mx = m.mul_vec(x)?;
    let num: T = mx.iter().zip(x).map(|(&a, &b)| a * b).sum();
    Ok(num / nn)
}

/// `Σ_{ij ∈ E} (x_i + x_j)²`, which equals `⟨Q(G)x, x⟩`.
pub fn edge_quadratic_form<T: Scalar>(g: &Graph, x: &[T]) -> Result<T> {
    if x.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            actual: x.len(),
        });
    }
    Ok(g.edges().map(|(i, j)| (x[i] + x[j]) * (x[i] + x[j])).sum())
}

/// The signless Rayleigh quotient of `x` computed both from the dense
/// matrix and from the edge sum; returns `(matrix_form, edge_form)`.
pub fn signless_rayleigh_forms<T: Scalar>(g: &Graph, x: &[T]) -> Result<(T, T)> {
    let q = super::signless_laplacian(g)?;
    let matrix_form = rayleigh_quotient(&q, x)?;
    let nn = check_nonzero(x)?;
    let edge_form = edge_quadratic_form(g, x)? / nn;
    Ok((matrix_form, edge_form))
}

fn check_result_len<T>(g: &Graph, r: &SpectralResult<T>) -> Result<()> {
    if r.vector.len() == g.order() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: g.order(),
            actual: r.vector.len(),
        })
    }
}

/// Per-vertex `|(q − d(i)) h_i − Σ_{j∼i} h_j|`.
pub fn check_eigen_equation<T: Scalar>(g: &Graph, r: &SpectralResult<T>) -> Result<Vec<T>> {
    check_result_len(g, r)?;
    let h = &r.vector;
    Ok((0..g.order())
        .map(|i| {
            let lhs = (r.value - T::count(g.degree(i))) * h[i];
            let rhs: T = g.neighbors(i).map(|j| h[j]).sum();
            (lhs - rhs).abs()
        })
        .collect())
}

/// `|LHS − RHS|` of the two-vertex difference identity
/// `(q − d(i))(h_i − h_j) = (d(i) − d(j)) h_j + Σ_{N(i)∖N(j)} h − Σ_{N(j)∖N(i)} h`.
pub fn check_difference_identity<T: Scalar>(g: &Graph, r: &SpectralResult<T>, i: usize, j: usize) -> Result<T> {
    check_result_len(g, r)?;
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i == j {
        return Err(Error::InvalidParameters(format!("difference identity needs distinct vertices, got {i} twice")));
    }
    let h = &r.vector;
    let (di, dj) = (T::count(g.degree(i)), T::count(g.degree(j)));
    let lhs = (r.value - di) * (h[i] - h[j]);
    let only_i: T = g.neighbors(i).filter(|&k| !g.has_edge(j, k)).map(|k| h[k]).sum();
    let only_j: T = g.neighbors(j).filter(|&l| !g.has_edge(i, l)).map(|l| h[l]).sum();
    let rhs = (di - dj) * h[j] + only_i - only_j;
    Ok((lhs - rhs).abs())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeCountBound<T> {
    /// `2e(G)/(n−1) + n − 2`.
    pub bound: T,
    pub q: T,
    pub holds: bool,
}

/// Edge-count upper bound on the Q-index; `holds` compares with
/// `cfg.slack`. Rejects `n ≤ 1`.
pub fn edge_count_bound<T: Scalar>(g: &Graph, cfg: &SpectralConfig<T>) -> Result<EdgeCountBound<T>> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, actual: n });
    }
    let bound = T::count(2 * g.edge_count()) / T::count(n - 1) + T::count(n) - T::of(2.0);
    let q = q_index(g, cfg)?.value;
    Ok(EdgeCountBound {
        bound,
        q,
        holds: q <= bound + cfg.slack,
    })
}
