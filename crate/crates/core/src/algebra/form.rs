use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{dot, QMatrix, Vector};
use crate::rational::Q;

use super::{Covector, LieAlgebra};

/// A symmetric invariant bilinear form on the algebra, identifying it with its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantForm {
    gram: QMatrix,
    nondegenerate: bool,
    inverse: Option<QMatrix>,
}

impl InvariantForm {
    /// Validates symmetry and invariance `([x,y],z) + (y,[x,z]) = 0` on basis triples.
    pub fn from_gram(g: &LieAlgebra, gram: QMatrix) -> Result<Self> {
        let n = g.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: gram.rows() });
        }
        if gram != gram.transpose() {
            return Err(Error::InvalidParameter("Gram matrix is not symmetric".into()));
        }
        let inverse = gram.inverse().ok();
        let form = InvariantForm { nondegenerate: inverse.is_some(), gram, inverse };
        if let Some((i, j, k)) = form.invariance_defect(g) {
            return Err(Error::InvalidParameter(format!("form is not invariant on basis triple ({i}, {j}, {k})")));
        }
        Ok(form)
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn pair(&self, x: &[Q], y: &[Q]) -> Q {
        dot(x, &self.gram.apply(y))
    }

    /// First basis triple `(x, y, z)` where `([x,y],z) + (y,[x,z])` is nonzero.
    pub fn invariance_defect(&self, g: &LieAlgebra) -> Option<(usize, usize, usize)> {
        let n = g.dim();
        let e = |i| crate::linalg::unit_vector(n, i);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.pair(g.basis_bracket(i, j), &e(k));
                    let b = self.pair(&e(j), g.basis_bracket(i, k));
                    if !(a + b).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `v -> (v, .)`.
    pub fn flat(&self, v: &[Q]) -> Covector {
        Covector::new(self.gram.apply(v))
    }

    /// Inverse of [`flat`](Self::flat); needs a nondegenerate form.
    pub fn sharp(&self, gamma: &Covector) -> Result<Vector> {
        let inv = self.inverse.as_ref().ok_or(Error::DegenerateRestriction)?;
        Ok(inv.apply(&gamma.coords))
    }

    pub fn scaled(&self, c: &Q) -> InvariantForm {
        let gram = self.gram.scale(c);
        let inverse = gram.inverse().ok();
        InvariantForm { nondegenerate: inverse.is_some(), gram, inverse }
    }
}

/// `(x, y) = tr(XY)` in the defining representation.
pub fn trace_form(g: &LieAlgebra) -> Result<InvariantForm> {
    let mats = g
        .realization()
        .ok_or_else(|| Error::Unsupported("trace form needs a matrix realization; supply a form".into()))?;
    let n = g.dim();
    let mut gram = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = mats[i].mul(&mats[j]).trace();
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    InvariantForm::from_gram(g, gram)
}

/// `(x, y) = tr(ad x ad y)`; available for any algebra given by structure constants.
pub fn killing_form(g: &LieAlgebra) -> Result<InvariantForm> {
    let n = g.dim();
    let ads: Vec<QMatrix> = (0..n).map(|i| g.ad_matrix(&crate::linalg::unit_vector(n, i))).collect();
    let mut gram = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].mul(&ads[j]).trace();
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    InvariantForm::from_gram(g, gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_classical, ClassicalKind};
    use crate::rational::q;

    #[test]
    fn sl2_trace_form_values() {
        let g = build_classical(ClassicalKind::Sl, 2).unwrap();
        let f = trace_form(&g).unwrap();
        // basis (h, e, f)
        assert_eq!(f.gram()[(0, 0)], q(2));
        assert_eq!(f.gram()[(1, 2)], q(1));
        assert_eq!(f.gram()[(0, 1)], q(0));
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn gl2_trace_form_values() {
        let g = build_classical(ClassicalKind::Gl, 2).unwrap();
        let f = trace_form(&g).unwrap();
        // basis (E11, E12, E21, E22)
        assert_eq!(f.gram()[(0, 0)], q(1));
        assert_eq!(f.gram()[(0, 3)], q(0));
        assert_eq!(f.gram()[(1, 2)], q(1));
    }

    #[test]
    fn trace_form_is_invariant_on_sl3() {
        let g = build_classical(ClassicalKind::Sl, 3).unwrap();
        assert_eq!(trace_form(&g).unwrap().invariance_defect(&g), None);
    }

    #[test]
    fn killing_form_on_gl_is_degenerate_and_proportional_on_sl() {
        let gl = build_classical(ClassicalKind::Gl, 3).unwrap();
        assert!(!killing_form(&gl).unwrap().is_nondegenerate());
        let sl = build_classical(ClassicalKind::Sl, 3).unwrap();
        let k = killing_form(&sl).unwrap();
        let t = trace_form(&sl).unwrap();
        assert_eq!(k.gram(), &t.gram().scale(&q(6)));
    }

    #[test]
    fn flat_sharp_round_trip() {
        let g = build_classical(ClassicalKind::Sl, 3).unwrap();
        let f = trace_form(&g).unwrap();
        let v: Vec<Q> = (0..8).map(|i| q(i - 3)).collect();
        assert_eq!(f.sharp(&f.flat(&v)).unwrap(), v);
    }

    #[test]
    fn trace_form_needs_realization() {
        let g = build_classical(ClassicalKind::Sl, 2).unwrap();
        let bare = LieAlgebra::from_brackets(g.labels().to_vec(), (0..9).map(|k| g.basis_bracket(k / 3, k % 3).clone()).collect(), crate::algebra::Family::Custom).unwrap();
        assert!(matches!(trace_form(&bare), Err(Error::Unsupported(_))));
    }
}
