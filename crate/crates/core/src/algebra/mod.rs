//! Lie algebras given by structure constants over `Q`.

mod cartan;
mod classical;
mod form;
pub mod io;
mod splitting;

pub use cartan::{CartanData, Root};
pub use classical::{build_classical, principal_triple, ClassicalKind, Family, PrincipalTriple};
pub use form::{killing_form, trace_form, InvariantForm};
pub use io::{parse_structure_constants, parse_vectors, write_structure_constants, write_vectors};
pub use splitting::{cartan_splitting, cartan_splitting_from, lower_right_sl2_basis, make_splitting, Splitting, SplittingKind};

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, zero_vector, QMatrix, SpanReport, Vector};
use crate::rational::{fmt_q, Q};

/// A point of the dual space, given by its values on the basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Covector {
    pub coords: Vec<Q>,
}

impl Covector {
    pub fn new(coords: Vec<Q>) -> Self {
        Covector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Covector { coords: zero_vector(dim) }
    }

    /// The dual basis vector: 1 on basis element `i`, 0 elsewhere.
    pub fn dual_basis(dim: usize, i: usize) -> Self {
        Covector { coords: crate::linalg::unit_vector(dim, i) }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn pair(&self, v: &[Q]) -> Q {
        crate::linalg::dot(&self.coords, v)
    }

    pub fn scale(&self, c: &Q) -> Covector {
        Covector { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Covector { coords: crate::linalg::add_vec(&self.coords, &other.coords) }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `brackets[i * dim + j]` holds the coordinates of `[e_i, e_j]`.
    brackets: Vec<Vector>,
    realization: Option<Vec<QMatrix>>,
    family: Family,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.family, self.dim)
    }
}

impl LieAlgebra {
    /// Build from a dense bracket table. Antisymmetry and the Jacobi identity are checked exactly.
    pub fn from_brackets(labels: Vec<String>, brackets: Vec<Vector>, family: Family) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidDimension("a Lie algebra needs at least one basis vector".into()));
        }
        if brackets.len() != dim * dim || brackets.iter().any(|b| b.len() != dim) {
            return Err(Error::InvalidDimension(format!("bracket table does not match dimension {dim}")));
        }
        let g = LieAlgebra { dim, labels, brackets, realization: None, family };
        g.check_antisymmetry()?;
        g.check_jacobi()?;
        Ok(g)
    }

    /// Structure constants computed from matrix commutators of a linearly independent family.
    pub fn from_realization(labels: Vec<String>, matrices: Vec<QMatrix>, family: Family) -> Result<Self> {
        let dim = matrices.len();
        if labels.len() != dim {
            return Err(Error::InvalidDimension("one label per matrix".into()));
        }
        let solver = MatrixCoordinates::new(&matrices)?;
        let mut brackets = Vec::with_capacity(dim * dim);
        for a in &matrices {
            for b in &matrices {
                let c = a.commutator(b);
                brackets.push(solver.coordinates(&c).ok_or_else(|| {
                    Error::NotSubalgebra("matrix span is not closed under commutators".into())
                })?);
            }
        }
        let mut g = Self::from_brackets(labels, brackets, family)?;
        g.realization = Some(matrices);
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn realization(&self) -> Option<&[QMatrix]> {
        self.realization.as_deref()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.brackets[i * self.dim + j][k]
    }

    /// Nonzero structure constants as `(i, j, k, c)` with `[e_i, e_j] = sum c e_k`.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, Q)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in self.basis_bracket(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        out[k] += &c * v;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)` acting on coordinate vectors.
    pub fn ad_matrix(&self, x: &[Q]) -> QMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket(x, &crate::linalg::unit_vector(self.dim, j))).collect();
        QMatrix::from_columns(&cols, self.dim)
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let s = crate::linalg::add_vec(self.basis_bracket(i, j), self.basis_bracket(j, i));
                if !is_zero_vector(&s) {
                    return Err(Error::InvalidParameter(format!("bracket not antisymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let e = |i: usize| crate::linalg::unit_vector(self.dim, i);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let a = self.bracket(self.basis_bracket(i, j), &e(k));
                    let b = self.bracket(self.basis_bracket(j, k), &e(i));
                    let c = self.bracket(self.basis_bracket(k, i), &e(j));
                    if !is_zero_vector(&crate::linalg::add_vec(&crate::linalg::add_vec(&a, &b), &c)) {
                        return Err(Error::InvalidParameter(format!("Jacobi identity fails on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Commutators of realized basis elements agree with the structure constants.
    pub fn check_realization(&self) -> Result<()> {
        let Some(mats) = &self.realization else {
            return Ok(());
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = mats[i].commutator(&mats[j]);
                let rhs = self.element_matrix(self.basis_bracket(i, j))?;
                if lhs != rhs {
                    return Err(Error::Internal(format!("realization disagrees with constants at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn element_matrix(&self, v: &[Q]) -> Result<QMatrix> {
        let mats = self.realization.as_ref().ok_or_else(|| Error::Unsupported("algebra has no matrix realization".into()))?;
        let n = mats[0].rows();
        let mut out = QMatrix::zeros(n, n);
        for (c, m) in v.iter().zip(mats) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        Ok(out)
    }

    pub fn element_from_matrix(&self, m: &QMatrix) -> Result<Vector> {
        let mats = self.realization.as_ref().ok_or_else(|| Error::Unsupported("algebra has no matrix realization".into()))?;
        MatrixCoordinates::new(mats)?
            .coordinates(m)
            .ok_or_else(|| Error::InvalidParameter("matrix does not lie in the algebra".into()))
    }

    /// Coordinates of `x` in the basis `basis`, if `x` lies in its span.
    pub fn coordinates_in(basis: &[Vector], x: &[Q]) -> Option<Vector> {
        let m = QMatrix::from_columns(basis, x.len());
        let sol = m.solve(x)?;
        Some(sol)
    }

    /// `g^xi = { x : xi([x, y]) = 0 for all y }`.
    pub fn centralizer(&self, xi: &Covector) -> SpanReport {
        assert_eq!(xi.dim(), self.dim);
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(j, i)] = xi.pair(self.basis_bracket(i, j));
            }
        }
        SpanReport::from_vectors(self.dim, m.kernel())
    }

    /// `{ y : [y, x] = 0 }` for an element `x` of the algebra.
    pub fn element_centralizer(&self, x: &[Q]) -> SpanReport {
        SpanReport::from_vectors(self.dim, self.ad_matrix(x).kernel())
    }

    /// The bilinear form `gamma-hat(x, y) = gamma([x, y])` as a matrix on the basis.
    pub fn gamma_hat(&self, gamma: &Covector) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = gamma.pair(self.basis_bracket(i, j));
            }
        }
        m
    }

    /// Replace the bracket table, keeping labels (used for deformed structures).
    pub(crate) fn with_brackets(&self, brackets: Vec<Vector>) -> Result<Self> {
        let mut g = Self::from_brackets(self.labels.clone(), brackets, Family::Custom)?;
        g.realization = None;
        Ok(g)
    }
}

/// Solves for coordinates of a matrix in the span of a linearly independent family.
struct MatrixCoordinates {
    system: QMatrix,
}

impl MatrixCoordinates {
    fn new(mats: &[QMatrix]) -> Result<Self> {
        if mats.is_empty() {
            return Err(Error::InvalidDimension("empty matrix family".into()));
        }
        let cols: Vec<Vector> = mats.iter().map(flatten).collect();
        let system = QMatrix::from_columns(&cols, cols[0].len());
        if system.rank() != mats.len() {
            return Err(Error::LinearlyDependent);
        }
        Ok(MatrixCoordinates { system })
    }

    fn coordinates(&self, m: &QMatrix) -> Option<Vector> {
        self.system.solve(&flatten(m))
    }
}

fn flatten(m: &QMatrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}
