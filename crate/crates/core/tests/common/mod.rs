//! Oracles shared by the integration tests. They work with plain matrices
//! and avoid the structure constants used by the library.
#![allow(dead_code)]

use lie_poisson::algebra::{trace_form, Covector, LieAlgebra};
use lie_poisson::linalg::QMatrix;
use lie_poisson::rational::{q, Q};
use num_traits::Zero;

pub fn mat(rows: &[&[i64]]) -> QMatrix {
    let rows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
    QMatrix::from_rows(&rows)
}

pub fn unit(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(i, j)] = q(1);
    m
}

/// `{Y : XY = YX}` in `gl_n`, as a basis of matrices.
pub fn matrix_centralizer(x: &QMatrix) -> Vec<QMatrix> {
    let n = x.rows();
    let mut sys = QMatrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let y = unit(n, a, b);
            let c = x.commutator(&y);
            for i in 0..n {
                for j in 0..n {
                    sys[(i * n + j, a * n + b)] = c[(i, j)].clone();
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|v| {
            let mut m = QMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = v[i * n + j].clone();
                }
            }
            m
        })
        .collect()
}

/// Regularity of `x` in `gl_n` (or `sl_n`): centralizer of dimension `n` in `gl_n`.
pub fn matrix_is_regular(x: &QMatrix) -> bool {
    matrix_centralizer(x).len() == x.rows()
}

/// The covector `(X, .)` of a matrix under the trace form.
pub fn covector_of(g: &LieAlgebra, x: &QMatrix) -> Covector {
    trace_form(g).unwrap().flat(&g.element_from_matrix(x).unwrap())
}

pub fn is_zero_matrix(m: &QMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)].is_zero()))
}
