use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_vec, is_zero_vector, scale_vec, unit_vector, QMatrix, SpanReport, Vector};
use crate::rational::{one, Q};

use super::cartan::{diagonalize, CartanData};
use super::classical::Family;
use super::form::{trace_form, InvariantForm};
use super::{Covector, LieAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingKind {
    General,
    Cartan(CartanData),
}

/// A decomposition `q = f + m` with `f` a subalgebra and `[f, m]` inside `m`.
#[derive(Clone, Debug)]
pub struct Splitting {
    algebra: Arc<LieAlgebra>,
    form: Option<InvariantForm>,
    f_basis: Vec<Vector>,
    m_basis: Vec<Vector>,
    p_f: QMatrix,
    p_m: QMatrix,
    /// Columns: `f_basis` then `m_basis`.
    adapted: QMatrix,
    adapted_inverse: QMatrix,
    kind: SplittingKind,
}

impl Splitting {
    /// Build from explicit bases of `f` and `m`, validating every splitting invariant.
    pub fn from_bases(g: &LieAlgebra, f_basis: Vec<Vector>, m_basis: Vec<Vector>) -> Result<Self> {
        let n = g.dim();
        for v in f_basis.iter().chain(&m_basis) {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
        }
        if f_basis.len() + m_basis.len() != n {
            return Err(Error::InvalidDimension(format!(
                "dim f + dim m = {} but the algebra has dimension {n}",
                f_basis.len() + m_basis.len()
            )));
        }
        let cols: Vec<Vector> = f_basis.iter().chain(&m_basis).cloned().collect();
        let adapted = QMatrix::from_columns(&cols, n);
        let adapted_inverse = adapted.inverse().map_err(|_| Error::LinearlyDependent)?;
        let mut diag = QMatrix::zeros(n, n);
        for a in 0..f_basis.len() {
            diag[(a, a)] = one();
        }
        let p_f = adapted.mul(&diag).mul(&adapted_inverse);
        let p_m = QMatrix::identity(n).sub(&p_f);
        let split = Splitting {
            algebra: Arc::new(g.clone()),
            form: None,
            f_basis,
            m_basis,
            p_f,
            p_m,
            adapted,
            adapted_inverse,
            kind: SplittingKind::General,
        };
        for (i, x) in split.f_basis.iter().enumerate() {
            for (j, y) in split.f_basis.iter().enumerate().skip(i + 1) {
                if !is_zero_vector(&split.project_m(&g.bracket(x, y))) {
                    return Err(Error::NotSubalgebra(format!("[f_{i}, f_{j}] leaves f")));
                }
            }
        }
        for (i, x) in split.f_basis.iter().enumerate() {
            for (j, v) in split.m_basis.iter().enumerate() {
                if !is_zero_vector(&split.project_f(&g.bracket(x, v))) {
                    return Err(Error::NotStable(format!("[f_{i}, m_{j}] has a nonzero f-component")));
                }
            }
        }
        Ok(split)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn shared_algebra(&self) -> Arc<LieAlgebra> {
        Arc::clone(&self.algebra)
    }

    /// The form `m` was taken orthogonal for, if any.
    pub fn form(&self) -> Option<&InvariantForm> {
        self.form.as_ref()
    }

    pub fn f_basis(&self) -> &[Vector] {
        &self.f_basis
    }

    pub fn m_basis(&self) -> &[Vector] {
        &self.m_basis
    }

    pub fn f_dim(&self) -> usize {
        self.f_basis.len()
    }

    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    pub fn p_f(&self) -> &QMatrix {
        &self.p_f
    }

    pub fn p_m(&self) -> &QMatrix {
        &self.p_m
    }

    pub fn kind(&self) -> &SplittingKind {
        &self.kind
    }

    pub fn cartan(&self) -> Option<&CartanData> {
        match &self.kind {
            SplittingKind::Cartan(c) => Some(c),
            SplittingKind::General => None,
        }
    }

    pub fn project_f(&self, v: &[Q]) -> Vector {
        self.p_f.apply(v)
    }

    pub fn project_m(&self, v: &[Q]) -> Vector {
        self.p_m.apply(v)
    }

    /// `x_f + s x_m`.
    pub fn phi_vector(&self, v: &[Q], s: &Q) -> Vector {
        add_vec(&self.project_f(v), &scale_vec(s, &self.project_m(v)))
    }

    pub fn phi_inverse_vector(&self, v: &[Q], s: &Q) -> Result<Vector> {
        if s.is_zero() {
            return Err(Error::InvalidParameter("phi_0 is not invertible".into()));
        }
        Ok(self.phi_vector(v, &(one() / s)))
    }

    /// `gamma_f`: `gamma` on `f`, zero on `m`.
    pub fn covector_f(&self, gamma: &Covector) -> Covector {
        Covector::new(self.p_f.transpose().apply(&gamma.coords))
    }

    pub fn covector_m(&self, gamma: &Covector) -> Covector {
        Covector::new(self.p_m.transpose().apply(&gamma.coords))
    }

    /// Matrix whose columns are `f_basis` followed by `m_basis`.
    pub fn adapted_matrix(&self) -> &QMatrix {
        &self.adapted
    }

    pub fn adapted_inverse(&self) -> &QMatrix {
        &self.adapted_inverse
    }

    pub fn is_abelian_f(&self) -> bool {
        self.f_basis.iter().all(|x| self.f_basis.iter().all(|y| is_zero_vector(&self.algebra.bracket(x, y))))
    }

    /// `[m, m]` inside `f`; together with the splitting axioms this is a Z/2-grading.
    pub fn is_z2_graded(&self) -> bool {
        self.m_basis
            .iter()
            .all(|x| self.m_basis.iter().all(|y| is_zero_vector(&self.project_m(&self.algebra.bracket(x, y)))))
    }

    pub fn f_span(&self) -> SpanReport {
        SpanReport::from_vectors(self.algebra.dim(), self.f_basis.clone())
    }

    pub fn m_span(&self) -> SpanReport {
        SpanReport::from_vectors(self.algebra.dim(), self.m_basis.clone())
    }
}

/// `m` is the orthogonal complement of `f` for `form`.
pub fn make_splitting(g: &LieAlgebra, form: &InvariantForm, f_basis: Vec<Vector>) -> Result<Splitting> {
    let n = g.dim();
    for v in &f_basis {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: v.len() });
        }
    }
    let k = f_basis.len();
    if SpanReport::from_vectors(n, f_basis.clone()).rank != k {
        return Err(Error::LinearlyDependent);
    }
    let f_span = SpanReport::from_vectors(n, f_basis.clone());
    for (i, x) in f_basis.iter().enumerate() {
        for (j, y) in f_basis.iter().enumerate().skip(i + 1) {
            if !f_span.contains(&g.bracket(x, y)) {
                return Err(Error::NotSubalgebra(format!("[f_{i}, f_{j}] leaves f")));
            }
        }
    }
    let mut restricted = QMatrix::zeros(k, k);
    for a in 0..k {
        for b in 0..k {
            restricted[(a, b)] = form.pair(&f_basis[a], &f_basis[b]);
        }
    }
    if k > 0 && restricted.rank() != k {
        return Err(Error::DegenerateRestriction);
    }
    let m_basis = if k == 0 {
        (0..n).map(|i| unit_vector(n, i)).collect()
    } else {
        let rows: Vec<Vector> = f_basis.iter().map(|v| form.gram().apply(v)).collect();
        QMatrix::from_rows(&rows).kernel()
    };
    let mut split = Splitting::from_bases(g, f_basis, m_basis)?;
    split.form = Some(form.clone());
    Ok(split)
}

/// `h, e, f` of the `sl_2` in the lower-right 2x2 block of `gl_n` or `sl_n`.
pub fn lower_right_sl2_basis(g: &LieAlgebra) -> Result<Vec<Vector>> {
    let n = g
        .family()
        .matrix_size()
        .ok_or_else(|| Error::Unsupported("lower-right sl2 needs gl_n or sl_n".into()))?;
    let el = super::classical::elementary;
    let h = el(n, n - 2, n - 2).sub(&el(n, n - 1, n - 1));
    [h, el(n, n - 2, n - 1), el(n, n - 1, n - 2)].iter().map(|m| g.element_from_matrix(m)).collect()
}

/// Diagonal Cartan subalgebra of `gl_n`/`sl_n`, with root vectors `E_ij`.
pub fn cartan_splitting(g: &LieAlgebra) -> Result<Splitting> {
    let n = match g.family() {
        Family::Gl(n) | Family::Sl(n) => n,
        Family::Custom => {
            return Err(Error::Unsupported("supply a Cartan basis for algebras other than gl_n and sl_n".into()))
        }
    };
    let form = trace_form(g)?;
    let dim = g.dim();
    let mut t_basis = Vec::new();
    let mut roots = Vec::new();
    for (idx, label) in g.labels().iter().enumerate() {
        match off_diagonal_position(g, idx)? {
            None => t_basis.push(unit_vector(dim, idx)),
            Some(_) => roots.push((label.clone(), unit_vector(dim, idx))),
        }
    }
    debug_assert_eq!(t_basis.len() + 1, n + usize::from(matches!(g.family(), Family::Gl(_))));
    let root_vectors: Vec<Vector> = roots.iter().map(|(_, v)| v.clone()).collect();
    let mut split = Splitting::from_bases(g, t_basis.clone(), root_vectors)?;
    split.form = Some(form);
    let regular = super::classical::principal_triple(g)?.h;
    let data = CartanData::from_root_vectors(g, t_basis, roots, Some(regular))?;
    split.kind = SplittingKind::Cartan(data);
    Ok(split)
}

/// `(i, j)` when basis element `idx` is an off-diagonal matrix unit, `None` when it is diagonal.
pub(crate) fn off_diagonal_position(g: &LieAlgebra, idx: usize) -> Result<Option<(usize, usize)>> {
    let m = g.element_matrix(&unit_vector(g.dim(), idx))?;
    let mut off = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j && !m[(i, j)].is_zero() {
                off = Some((i, j));
            }
        }
    }
    Ok(off)
}

/// Cartan splitting for a user-supplied abelian, ad-diagonalizable `t`.
pub fn cartan_splitting_from(g: &LieAlgebra, form: &InvariantForm, t_basis: Vec<Vector>) -> Result<Splitting> {
    for (i, x) in t_basis.iter().enumerate() {
        for y in t_basis.iter().skip(i + 1) {
            if !is_zero_vector(&g.bracket(x, y)) {
                return Err(Error::Unsupported("supplied Cartan basis is not abelian".into()));
            }
        }
    }
    let split = make_splitting(g, form, t_basis.clone())?;
    let vectors = diagonalize(g, &t_basis, split.m_basis())?;
    let roots: Vec<(String, Vector)> =
        vectors.iter().enumerate().map(|(i, v)| (format!("r{}", i + 1), v.clone())).collect();
    let data = CartanData::from_root_vectors(g, t_basis.clone(), roots, None)?;
    let mut split = Splitting::from_bases(g, t_basis, vectors)?;
    split.form = Some(form.clone());
    split.kind = SplittingKind::Cartan(data);
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_classical, ClassicalKind};
    use crate::rational::q;

    fn sl(n: usize) -> LieAlgebra {
        build_classical(ClassicalKind::Sl, n).unwrap()
    }

    fn gl(n: usize) -> LieAlgebra {
        build_classical(ClassicalKind::Gl, n).unwrap()
    }

    #[test]
    fn sl2_cartan_by_form() {
        let g = sl(2);
        let form = trace_form(&g).unwrap();
        let s = make_splitting(&g, &form, vec![unit_vector(3, 0)]).unwrap();
        assert_eq!(s.m_dim(), 2);
        assert!(s.m_span().same_space(&SpanReport::from_vectors(3, vec![unit_vector(3, 1), unit_vector(3, 2)])));
        assert!(s.is_z2_graded());
    }

    #[test]
    fn projections_are_complementary() {
        let g = gl(4);
        let form = trace_form(&g).unwrap();
        let s = make_splitting(&g, &form, lower_right_sl2_basis(&g).unwrap()).unwrap();
        assert_eq!(s.m_dim(), 13);
        assert_eq!(s.p_f().add(s.p_m()), QMatrix::identity(16));
        assert!(s.p_f().mul(s.p_m()).is_zero());
        for v in s.m_basis() {
            for x in s.f_basis() {
                assert_eq!(form.pair(v, x), q(0));
            }
        }
        assert!(!s.is_z2_graded());
    }

    #[test]
    fn isotropic_f_is_rejected() {
        let g = sl(2);
        let form = trace_form(&g).unwrap();
        assert!(matches!(make_splitting(&g, &form, vec![unit_vector(3, 1)]), Err(Error::DegenerateRestriction)));
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let g = sl(2);
        let form = trace_form(&g).unwrap();
        let f = vec![unit_vector(3, 1), unit_vector(3, 2)];
        assert!(matches!(make_splitting(&g, &form, f), Err(Error::NotSubalgebra(_))));
    }

    #[test]
    fn dependent_f_is_rejected() {
        let g = sl(2);
        let form = trace_form(&g).unwrap();
        let f = vec![unit_vector(3, 0), scale_vec(&q(2), &unit_vector(3, 0))];
        assert!(matches!(make_splitting(&g, &form, f), Err(Error::LinearlyDependent)));
    }

    #[test]
    fn cartan_dimensions() {
        let s = cartan_splitting(&sl(2)).unwrap();
        assert_eq!((s.f_dim(), s.m_dim()), (1, 2));
        let s = cartan_splitting(&sl(3)).unwrap();
        assert_eq!((s.f_dim(), s.m_dim()), (2, 6));
        let c = s.cartan().unwrap();
        assert_eq!(c.roots.len(), 6);
        assert_eq!(c.simple_roots().len(), 2);
        assert_eq!(c.roots.iter().filter(|r| r.positive).count(), 3);
        let s = cartan_splitting(&gl(4)).unwrap();
        assert_eq!((s.f_dim(), s.m_dim()), (4, 12));
        assert!(s.is_abelian_f());
    }

    #[test]
    fn upper_triangular_roots_are_positive() {
        let g = sl(4);
        let c = cartan_splitting(&g).unwrap().cartan().unwrap().clone();
        for r in &c.roots {
            let idx = g.labels().iter().position(|l| *l == r.label).unwrap();
            let (i, j) = off_diagonal_position(&g, idx).unwrap().unwrap();
            assert_eq!(r.positive, i < j, "{}", r.label);
            assert_eq!(r.simple, j == i + 1, "{}", r.label);
        }
    }

    #[test]
    fn generic_cartan_path_matches_classical() {
        let g = sl(3);
        let form = trace_form(&g).unwrap();
        let t = vec![unit_vector(8, 0), unit_vector(8, 4)];
        let s = cartan_splitting_from(&g, &form, t).unwrap();
        let c = s.cartan().unwrap();
        assert_eq!(c.roots.len(), 6);
        let classical = cartan_splitting(&g).unwrap();
        assert!(s.m_span().same_space(&classical.m_span()));
        // each root space is one of the E_ij lines
        for r in &c.roots {
            assert_eq!(r.vector.iter().filter(|x| !x.is_zero()).count(), 1);
        }
    }

    #[test]
    fn non_abelian_cartan_rejected() {
        let g = sl(2);
        let form = trace_form(&g).unwrap();
        let t = vec![unit_vector(3, 0), unit_vector(3, 1)];
        assert!(matches!(cartan_splitting_from(&g, &form, t), Err(Error::Unsupported(_))));
    }

    #[test]
    fn nilpotent_cartan_rejected() {
        // <e> in sl2 is abelian but ad(e) is nilpotent; the form is also degenerate on it
        let g = sl(2);
        let form = trace_form(&g).unwrap();
        assert!(cartan_splitting_from(&g, &form, vec![unit_vector(3, 1)]).is_err());
    }

    #[test]
    fn phi_on_vectors() {
        let s = cartan_splitting(&sl(2)).unwrap();
        let v = vec![q(1), q(2), q(3)];
        assert_eq!(s.phi_vector(&v, &q(5)), vec![q(1), q(10), q(15)]);
        assert_eq!(s.phi_inverse_vector(&s.phi_vector(&v, &q(5)), &q(5)).unwrap(), v);
        assert!(s.phi_inverse_vector(&v, &q(0)).is_err());
    }
}
