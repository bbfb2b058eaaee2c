//! Generators of the Poisson centre for `gl_n` and `sl_n`, and checks on them.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{trace_form, Covector, Family, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::linalg::{SpanReport, Vector};
use crate::poisson::poisson_bracket;
use crate::poly::{bihomogeneous_components, Poly};
use crate::rational::qf;

#[derive(Clone, Debug)]
pub struct InvariantSet {
    algebra: Arc<LieAlgebra>,
    gens: Vec<Poly>,
    degrees: Vec<u32>,
    names: Vec<String>,
}

impl InvariantSet {
    /// Accept user-supplied generators after checking each is homogeneous, nonconstant and central.
    pub fn from_polys(g: &LieAlgebra, gens: Vec<Poly>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(gens.len());
        for (i, h) in gens.iter().enumerate() {
            if h.nvars() != g.dim() {
                return Err(Error::DimensionMismatch { expected: g.dim(), got: h.nvars() });
            }
            match h.total_degree() {
                Some(d) if d > 0 && h.is_homogeneous() => degrees.push(d),
                _ => return Err(Error::InvalidParameter(format!("generator {i} is not homogeneous of positive degree"))),
            }
            if !verify_centrality(g, h)?.central {
                return Err(Error::NotCentral { index: i });
            }
        }
        let names = (1..=gens.len()).map(|i| format!("H{i}")).collect();
        Ok(InvariantSet { algebra: Arc::new(g.clone()), gens, degrees, names })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degree_sum(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// One generator per line in canonical text form.
    pub fn to_text(&self) -> String {
        self.gens.iter().map(|h| format!("{h}\n")).collect()
    }

    pub fn parse_text(g: &LieAlgebra, text: &str) -> Result<Self> {
        let gens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| Poly::parse(l, g.dim()))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::Parse("no invariants in file".into()));
        }
        Self::from_polys(g, gens)
    }

    /// Differentials of all generators at `xi`.
    pub fn differential_span(&self, xi: &Covector) -> SpanReport {
        let vs: Vec<Vector> = self.gens.iter().map(|h| h.differential_at(&xi.coords)).collect();
        SpanReport::from_vectors(self.algebra.dim(), vs)
    }
}

/// The generic matrix `sum_a x_a B^a`, where `B^a` realizes the trace-dual of basis vector `a`.
/// Evaluated at `gamma` it is the matrix identified with `gamma` by the trace form.
pub fn generic_matrix(g: &LieAlgebra) -> Result<Vec<Vec<Poly>>> {
    let form = trace_form(g)?;
    if !form.is_nondegenerate() {
        return Err(Error::Unsupported("trace form is degenerate".into()));
    }
    let n = g.dim();
    let size = g.realization().map(|r| r[0].rows()).unwrap_or(0);
    let mut m = vec![vec![Poly::zero(n); size]; size];
    for a in 0..n {
        let dual = form.sharp(&Covector::dual_basis(n, a))?;
        let mat = g.element_matrix(&dual)?;
        let xa = Poly::var(n, a);
        for (r, row) in m.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                if !mat[(r, c)].is_zero() {
                    *entry = &*entry + &xa.scale(&mat[(r, c)]);
                }
            }
        }
    }
    Ok(m)
}

fn poly_matmul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let nvars = a[0][0].nvars();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Poly::zero(nvars);
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&a[i][k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `tr(X^k)` for `k` in `1..=n` (`gl_n`) or `2..=n` (`sl_n`).
pub fn trace_power_invariants(g: &LieAlgebra) -> Result<InvariantSet> {
    let (n, first) = match g.family() {
        Family::Gl(n) => (n, 1),
        Family::Sl(n) => (n, 2),
        Family::Custom => {
            return Err(Error::Unsupported("trace-power invariants need gl_n or sl_n; supply an invariant file".into()))
        }
    };
    let powers = trace_powers(g, n)?;
    let gens: Vec<Poly> = powers[first - 1..].to_vec();
    let degrees = (first as u32..=n as u32).collect();
    let names = (first..=n).map(|k| format!("tr X^{k}")).collect();
    Ok(InvariantSet { algebra: Arc::new(g.clone()), gens, degrees, names })
}

/// `[tr X, tr X^2, ..., tr X^up_to]`.
fn trace_powers(g: &LieAlgebra, up_to: usize) -> Result<Vec<Poly>> {
    let x = generic_matrix(g)?;
    let mut out = Vec::with_capacity(up_to);
    let mut power = x.clone();
    for k in 1..=up_to {
        if k > 1 {
            power = poly_matmul(&power, &x);
        }
        let mut t = Poly::zero(g.dim());
        for (i, row) in power.iter().enumerate() {
            t = &t + &row[i];
        }
        out.push(t);
    }
    Ok(out)
}

/// Coefficients `e_k` of the characteristic polynomial, via Newton's identities.
pub fn char_poly_invariants(g: &LieAlgebra) -> Result<InvariantSet> {
    let (n, first) = match g.family() {
        Family::Gl(n) => (n, 1),
        Family::Sl(n) => (n, 2),
        Family::Custom => return Err(Error::Unsupported("characteristic-polynomial invariants need gl_n or sl_n".into())),
    };
    let p = trace_powers(g, n)?;
    let mut e = vec![Poly::one(g.dim())];
    for k in 1..=n {
        let mut acc = Poly::zero(g.dim());
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&qf(1, k as i64)));
    }
    let gens: Vec<Poly> = e[first..].to_vec();
    let degrees = (first as u32..=n as u32).collect();
    let names = (first..=n).map(|k| format!("c{k}")).collect();
    Ok(InvariantSet { algebra: Arc::new(g.clone()), gens, degrees, names })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityReport {
    pub central: bool,
    /// First coordinate `i` with `{H, x_i} != 0`, and that bracket.
    pub witness: Option<(usize, Poly)>,
}

pub fn verify_centrality(g: &LieAlgebra, h: &Poly) -> Result<CentralityReport> {
    let n = g.dim();
    let brackets: Vec<Poly> =
        (0..n).into_par_iter().map(|i| poisson_bracket(g, h, &Poly::var(n, i))).collect::<Result<_>>()?;
    let witness = brackets.into_iter().enumerate().find(|(_, b)| !b.is_zero());
    Ok(CentralityReport { central: witness.is_none(), witness })
}

/// The `(d, 0)` component, i.e. the restriction to `f` (to `t` for a Cartan splitting).
pub fn restrict_to_cartan(h: &Poly, split: &Splitting) -> Poly {
    bihomogeneous_components(h, split)
        .into_iter()
        .filter(|c| c.m_degree == 0)
        .fold(Poly::zero(h.nvars()), |acc, c| &acc + &c.poly)
}

#[derive(Clone, Debug)]
pub struct KostantReport {
    pub span: SpanReport,
    pub centralizer: SpanReport,
    pub is_regular: bool,
    /// The differentials span the whole centralizer.
    pub span_is_centralizer: bool,
}

impl KostantReport {
    /// The criterion predicts `span_is_centralizer == is_regular`.
    pub fn consistent(&self) -> bool {
        self.span_is_centralizer == self.is_regular
    }
}

/// Compare `<d_xi H_j>` with the centralizer of `xi`; `index` is the index of the algebra.
pub fn kostant_span_check(inv: &InvariantSet, xi: &Covector, index: usize) -> KostantReport {
    let span = inv.differential_span(xi);
    let centralizer = inv.algebra().centralizer(xi);
    let is_regular = centralizer.rank == index;
    let span_is_centralizer = span.same_space(&centralizer);
    KostantReport { span, centralizer, is_regular, span_is_centralizer }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_classical, cartan_splitting, ClassicalKind};
    use crate::rational::q;

    fn gl(n: usize) -> LieAlgebra {
        build_classical(ClassicalKind::Gl, n).unwrap()
    }

    fn sl(n: usize) -> LieAlgebra {
        build_classical(ClassicalKind::Sl, n).unwrap()
    }

    #[test]
    fn gl2_trace_powers() {
        let inv = trace_power_invariants(&gl(2)).unwrap();
        // basis E11 E12 E21 E22
        assert_eq!(inv.gens()[0], Poly::parse("x[0] + x[3]", 4).unwrap());
        assert_eq!(inv.gens()[1], Poly::parse("x[0]^2 + x[3]^2 + 2*x[1]*x[2]", 4).unwrap());
    }

    #[test]
    fn sl2_has_one_quadratic() {
        let inv = trace_power_invariants(&sl(2)).unwrap();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv.degree_sum(), 2);
        // h has dual h/2 under the trace form, so the h-coordinate enters as a^2/2
        assert_eq!(inv.gens()[0], Poly::parse("1/2*x[0]^2 + 2*x[1]*x[2]", 3).unwrap());
    }

    #[test]
    fn gl4_degrees() {
        let inv = trace_power_invariants(&gl(4)).unwrap();
        assert_eq!(inv.degrees(), [1, 2, 3, 4]);
        assert_eq!(inv.degree_sum(), 10);
    }

    #[test]
    fn centrality() {
        let g = gl(3);
        let inv = trace_power_invariants(&g).unwrap();
        assert!(verify_centrality(&g, &inv.gens()[2]).unwrap().central);
        let g2 = gl(2);
        let r = verify_centrality(&g2, &Poly::var(4, 1)).unwrap();
        assert!(!r.central);
        assert_eq!(r.witness.unwrap().0, 0);
        assert!(verify_centrality(&g2, &Poly::constant(4, q(3))).unwrap().central);
    }

    #[test]
    fn char_poly_set_is_central() {
        let g = sl(3);
        let inv = char_poly_invariants(&g).unwrap();
        assert_eq!(inv.degrees(), [2, 3]);
        for h in inv.gens() {
            assert!(verify_centrality(&g, h).unwrap().central);
        }
    }

    #[test]
    fn custom_generators_must_be_central() {
        let g = sl(2);
        assert!(matches!(InvariantSet::from_polys(&g, vec![Poly::var(3, 0)]), Err(Error::NotCentral { index: 0 })));
        let inv = trace_power_invariants(&g).unwrap();
        let back = InvariantSet::parse_text(&g, &inv.to_text()).unwrap();
        assert_eq!(back.gens(), inv.gens());
    }

    #[test]
    fn sl2_restriction() {
        let g = sl(2);
        let split = cartan_splitting(&g).unwrap();
        let inv = trace_power_invariants(&g).unwrap();
        assert_eq!(restrict_to_cartan(&inv.gens()[0], &split), Poly::parse("1/2*x[0]^2", 3).unwrap());
    }

    #[test]
    fn kostant_on_sl2() {
        let g = sl(2);
        let inv = trace_power_invariants(&g).unwrap();
        let r = kostant_span_check(&inv, &Covector::dual_basis(3, 1), 1);
        assert!(r.is_regular && r.span_is_centralizer);
        let r = kostant_span_check(&inv, &Covector::zero(3), 1);
        assert!(!r.is_regular && !r.span_is_centralizer && r.consistent());
    }
}
