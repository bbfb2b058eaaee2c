use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Vector};
use crate::rational::{one, q};

use super::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    Gl,
    Sl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gl(usize),
    Sl(usize),
    Custom,
}

impl Family {
    /// Parse names such as `gl4` or `sl3`.
    pub fn parse(name: &str) -> Option<Family> {
        let name = name.trim().to_ascii_lowercase();
        let (kind, n) = name.split_at(name.len().min(2));
        let n: usize = n.trim_start_matches('_').parse().ok()?;
        match kind {
            "gl" => Some(Family::Gl(n)),
            "sl" => Some(Family::Sl(n)),
            _ => None,
        }
    }

    /// Build the named classical algebra.
    pub fn build(&self) -> Result<LieAlgebra> {
        match *self {
            Family::Gl(n) => build_classical(ClassicalKind::Gl, n),
            Family::Sl(n) => build_classical(ClassicalKind::Sl, n),
            Family::Custom => Err(Error::Unsupported("custom algebras are loaded from structure-constant files".into())),
        }
    }

    pub fn matrix_size(&self) -> Option<usize> {
        match *self {
            Family::Gl(n) | Family::Sl(n) => Some(n),
            Family::Custom => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gl(n) => write!(f, "gl{n}"),
            Family::Sl(n) => write!(f, "sl{n}"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

pub(crate) fn elementary(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(i, j)] = one();
    m
}

/// `gl_n` or `sl_n` with its defining representation.
///
/// Basis order is row-major over matrix positions `(i, j)`. For `gl_n` every
/// position contributes `E_ij`. For `sl_n` the off-diagonal positions
/// contribute `E_ij` and the diagonal position `(i, i)`, `i < n`, contributes
/// `h_i = E_ii - E_(i+1)(i+1)`; position `(n, n)` is skipped. So `sl_2` has
/// basis `(h1, E12, E21)`.
pub fn build_classical(kind: ClassicalKind, n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!("classical algebras need n >= 2, got {n}")));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let fam = match kind {
        ClassicalKind::Gl => Family::Gl(n),
        ClassicalKind::Sl => Family::Sl(n),
    };
    for i in 0..n {
        for j in 0..n {
            match fam {
                Family::Gl(_) => {
                    labels.push(format!("E{}{}", i + 1, j + 1));
                    mats.push(elementary(n, i, j));
                }
                _ if i != j => {
                    labels.push(format!("E{}{}", i + 1, j + 1));
                    mats.push(elementary(n, i, j));
                }
                _ if i + 1 < n => {
                    labels.push(format!("h{}", i + 1));
                    mats.push(elementary(n, i, i).sub(&elementary(n, i + 1, i + 1)));
                }
                _ => {}
            }
        }
    }
    LieAlgebra::from_realization(labels, mats, fam)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalTriple {
    pub e: Vector,
    pub h: Vector,
    pub f: Vector,
}

/// The principal triple with `e = sum E_(i,i+1)`, `h` diagonal and `f` lower triangular.
pub fn principal_triple(g: &LieAlgebra) -> Result<PrincipalTriple> {
    let n = match g.family() {
        Family::Gl(n) | Family::Sl(n) => n,
        Family::Custom => return Err(Error::Unsupported("principal triple needs gl_n or sl_n".into())),
    };
    let mut e = QMatrix::zeros(n, n);
    let mut h = QMatrix::zeros(n, n);
    let mut f = QMatrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = q(n as i64 - 1 - 2 * i as i64);
        if i + 1 < n {
            e[(i, i + 1)] = one();
            f[(i + 1, i)] = q(((i + 1) * (n - 1 - i)) as i64);
        }
    }
    Ok(PrincipalTriple { e: g.element_from_matrix(&e)?, h: g.element_from_matrix(&h)?, f: g.element_from_matrix(&f)? })
}
