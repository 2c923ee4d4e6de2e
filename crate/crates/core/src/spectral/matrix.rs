use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Dense symmetric matrix stored row-major in full.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            entries: vec![T::zero(); order * order],
        }
    }

    /// Validates symmetry (exact) and finiteness.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        let mut m = SymMatrix::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::LengthMismatch {
                    expected: order,
                    actual: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(Error::NonFinite(i, j));
                }
                m.entries[i * order + j] = x;
            }
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.entries[i * self.order + j] = x;
        self.entries[j * self.order + i] = x;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_len(x)?;
        Ok((0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    pub(crate) fn check_len(&self, x: &[T]) -> Result<()> {
        if x.len() == self.order {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.order,
                actual: x.len(),
            })
        }
    }

    /// ∞-norm of `M x - value x`.
    pub fn residual(&self, value: T, x: &[T]) -> Result<T> {
        let mx = self.mul_vec(x)?;
        Ok(mx
            .iter()
            .zip(x)
            .map(|(&a, &b)| (a - value * b).abs())
            .fold(T::zero(), T::max))
    }

    pub(crate) fn into_entries(self) -> Vec<T> {
        self.entries
    }
}

fn require_vertex<T>(g: &Graph) -> Result<()> {
    if g.is_null() {
        Err(Error::TooFewVertices {
            required: 1,
            actual: 0,
        })
    } else {
        Ok(())
    }
}

/// `A(G)`.
pub fn adjacency_matrix<T: Scalar>(g: &Graph) -> Result<SymMatrix<T>> {
    require_vertex::<T>(g)?;
    let mut m = SymMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m.set(u, v, T::one());
    }
    Ok(m)
}

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian<T: Scalar>(g: &Graph) -> Result<SymMatrix<T>> {
    let mut m = adjacency_matrix(g)?;
    for v in 0..g.order() {
        m.set(v, v, T::count(g.degree(v)));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signless_examples() {
        let q: SymMatrix<f64> = signless_laplacian(&Graph::complete(2)).unwrap();
        assert_eq!(q, SymMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap());
        let z: SymMatrix<f64> = signless_laplacian(&Graph::empty(3)).unwrap();
        assert_eq!(z, SymMatrix::zeros(3));
        let s: SymMatrix<f64> = signless_laplacian(&Graph::star(3)).unwrap();
        assert_eq!(
            s,
            SymMatrix::from_rows(&[
                vec![3.0, 1.0, 1.0, 1.0],
                vec![1.0, 1.0, 0.0, 0.0],
                vec![1.0, 0.0, 1.0, 0.0],
                vec![1.0, 0.0, 0.0, 1.0],
            ])
            .unwrap()
        );
        assert!(signless_laplacian::<f64>(&Graph::empty(0)).is_err());
    }

    #[test]
    fn from_rows_validation() {
        assert!(matches!(
            SymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]),
            Err(Error::NotSymmetric(0, 1))
        ));
        assert!(SymMatrix::from_rows(&[vec![f64::NAN]]).is_err());
        assert!(SymMatrix::<f64>::from_rows(&[vec![1.0, 0.0], vec![0.0]]).is_err());
    }
}
