//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::matrix::SymMatrix;

const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition. `values` are in descending order and
/// `vectors[i]` is the unit eigenvector for `values[i]`.
#[derive(Clone, Debug)]
pub struct Eigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<T>>,
    pub sweeps: usize,
}

/// Diagonalizes `m` by cyclic sweeps of plane rotations until the
/// off-diagonal Frobenius mass is below `n·ε·‖m‖_F`.
pub fn symmetric_eigen<T: Scalar>(m: &SymMatrix<T>) -> Result<Eigen<T>> {
    let n = m.order();
    let mut a = m.clone().into_entries();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let frob2: T = a.iter().map(|&x| x * x).sum();
    let scale = T::epsilon() * T::count(n.max(1));
    let target = frob2 * scale * scale;

    let off2 = |a: &[T]| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        s
    };

    let mut sweeps = 0;
    loop {
        let off = off2(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                iterations: sweeps,
                residual: off.sqrt().to_f64_lossy(),
                value: f64::NAN,
                vector: Vec::new(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (T::of(2.0) * apq);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).expect("finite"));
    let values = idx.iter().map(|&i| a[i * n + i]).collect();
    let vectors = idx
        .iter()
        .map(|&i| (0..n).map(|k| v[k * n + i]).collect())
        .collect();
    Ok(Eigen {
        values,
        vectors,
        sweeps,
    })
}
