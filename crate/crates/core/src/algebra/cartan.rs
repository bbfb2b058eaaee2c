//! Root data of a split Cartan subalgebra: ad-eigenvectors in `m`, their
//! weights, a positive system and the simple roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, QMatrix, SpanReport, Vector};
use crate::rational::{q, Q};

use super::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub label: String,
    /// A root vector, in ambient coordinates.
    pub vector: Vector,
    /// Eigenvalue of each Cartan basis element on `vector`.
    pub weights: Vec<Q>,
    pub positive: bool,
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub t_basis: Vec<Vector>,
    pub roots: Vec<Root>,
}

impl CartanData {
    /// Weights are read off from `[t_a, v] = lambda v`; positivity is the sign on `regular`.
    pub fn from_root_vectors(
        g: &LieAlgebra,
        t_basis: Vec<Vector>,
        root_vectors: Vec<(String, Vector)>,
        regular: Option<Vector>,
    ) -> Result<Self> {
        let mut roots = Vec::with_capacity(root_vectors.len());
        for (label, v) in root_vectors {
            let weights = t_basis
                .iter()
                .map(|t| eigenvalue(&g.bracket(t, &v), &v))
                .collect::<Option<Vec<Q>>>()
                .ok_or_else(|| Error::Unsupported(format!("{label} is not an ad(t)-eigenvector")))?;
            if weights.iter().all(Zero::is_zero) {
                return Err(Error::Unsupported(format!("{label} has weight zero; t is not its own centralizer")));
            }
            roots.push(Root { label, vector: v, weights, positive: false, simple: false });
        }
        let mut data = CartanData { t_basis, roots };
        let regular = match regular {
            Some(r) => r,
            None => data.find_regular()?,
        };
        let coords = data.t_coordinates(&regular).ok_or_else(|| Error::InvalidParameter("regular element is not in t".into()))?;
        for r in &mut data.roots {
            let v = crate::linalg::dot(&r.weights, &coords);
            if v.is_zero() {
                return Err(Error::InvalidParameter(format!("element is not regular: root {} vanishes", r.label)));
            }
            r.positive = v.is_positive();
        }
        let positive: Vec<Vec<Q>> = data.roots.iter().filter(|r| r.positive).map(|r| r.weights.clone()).collect();
        for r in &mut data.roots {
            if !r.positive {
                continue;
            }
            let decomposable = positive.iter().any(|a| {
                let rest = crate::linalg::sub_vec(&r.weights, a);
                positive.contains(&rest)
            });
            r.simple = !decomposable;
        }
        Ok(data)
    }

    pub fn rank(&self) -> usize {
        self.t_basis.len()
    }

    pub fn t_coordinates(&self, h: &[Q]) -> Option<Vector> {
        LieAlgebra::coordinates_in(&self.t_basis, h)
    }

    /// `alpha(h)` for an element `h` of `t`.
    pub fn root_value(&self, root: usize, h: &[Q]) -> Option<Q> {
        let c = self.t_coordinates(h)?;
        Some(crate::linalg::dot(&self.roots[root].weights, &c))
    }

    pub fn simple_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.roots[i].simple).collect()
    }

    pub fn negative_of(&self, root: usize) -> Option<usize> {
        let neg: Vec<Q> = self.roots[root].weights.iter().map(|w| -w.clone()).collect();
        self.roots.iter().position(|r| r.weights == neg)
    }

    pub fn find_root(&self, label: &str) -> Option<usize> {
        self.roots.iter().position(|r| r.label == label)
    }

    /// Span of the negative root vectors.
    pub fn u_minus(&self) -> Vec<Vector> {
        self.roots.iter().filter(|r| !r.positive).map(|r| r.vector.clone()).collect()
    }

    /// Basis of the wall `{h in t : nu(h) = 0}`, in ambient coordinates.
    pub fn wall_basis(&self, root: usize) -> Vec<Vector> {
        let row = QMatrix::from_rows(&[self.roots[root].weights.clone()]);
        row.kernel()
            .into_iter()
            .map(|c| {
                let mut v = crate::linalg::zero_vector(self.t_basis[0].len());
                for (a, ca) in c.iter().enumerate() {
                    v = crate::linalg::add_vec(&v, &crate::linalg::scale_vec(ca, &self.t_basis[a]));
                }
                v
            })
            .collect()
    }

    /// `nu(h) = 0` and `gamma(h) != 0` for every other root `gamma != +-nu`; `h` must be nonzero.
    pub fn is_generic_on_wall(&self, root: usize, h: &[Q]) -> Option<bool> {
        if is_zero_vector(h) {
            return Some(false);
        }
        let neg = self.negative_of(root);
        if !self.root_value(root, h)?.is_zero() {
            return Some(false);
        }
        for i in 0..self.roots.len() {
            if i == root || Some(i) == neg {
                continue;
            }
            if self.root_value(i, h)?.is_zero() {
                return Some(false);
            }
        }
        Some(true)
    }

    fn find_regular(&self) -> Result<Vector> {
        let r = self.rank();
        // coefficients 1, b, b^2, ... on the Cartan basis for growing b
        for base in 2..64i64 {
            let mut coeffs = Vec::with_capacity(r);
            let mut c = 1i64;
            for _ in 0..r {
                coeffs.push(q(c));
                c = c.saturating_mul(base);
            }
            if self.roots.iter().all(|root| !crate::linalg::dot(&root.weights, &coeffs).is_zero()) {
                let mut v = crate::linalg::zero_vector(self.t_basis[0].len());
                for (a, ca) in coeffs.iter().enumerate() {
                    v = crate::linalg::add_vec(&v, &crate::linalg::scale_vec(ca, &self.t_basis[a]));
                }
                return Ok(v);
            }
        }
        Err(Error::Unsupported("no regular element found in t".into()))
    }
}

fn eigenvalue(image: &[Q], v: &[Q]) -> Option<Q> {
    let i = v.iter().position(|x| !x.is_zero())?;
    let lambda = &image[i] / &v[i];
    let ok = image.iter().zip(v).all(|(a, b)| *a == &lambda * b);
    ok.then_some(lambda)
}

/// Joint eigenvectors of `ad(t)` on `m`, provided all eigenvalues are rational.
pub(crate) fn diagonalize(g: &LieAlgebra, t_basis: &[Vector], m_basis: &[Vector]) -> Result<Vec<Vector>> {
    let dim_m = m_basis.len();
    let m_cols = QMatrix::from_columns(m_basis, g.dim());
    let restrict = |t: &Vector| -> Result<QMatrix> {
        let mut a = QMatrix::zeros(dim_m, dim_m);
        for (j, v) in m_basis.iter().enumerate() {
            let img = g.bracket(t, v);
            let c = m_cols.solve(&img).ok_or_else(|| Error::NotStable("[t, m] leaves m".into()))?;
            for i in 0..dim_m {
                a[(i, j)] = c[i].clone();
            }
        }
        Ok(a)
    };
    let blocks: Vec<QMatrix> = t_basis.iter().map(restrict).collect::<Result<_>>()?;
    'attempt: for base in 2..12i64 {
        let mut generic = QMatrix::zeros(dim_m, dim_m);
        let mut c = q(1);
        for b in &blocks {
            generic = generic.add(&b.scale(&c));
            c *= q(base);
        }
        let mut eigenvalues = rational_roots(&charpoly(&generic))?;
        eigenvalues.sort();
        eigenvalues.dedup();
        let mut vectors = Vec::new();
        for lambda in eigenvalues {
            let shifted = generic.sub(&QMatrix::identity(dim_m).scale(&lambda));
            for k in shifted.kernel() {
                for b in &blocks {
                    if eigenvalue(&b.apply(&k), &k).is_none() {
                        continue 'attempt;
                    }
                }
                vectors.push(m_cols.apply(&k));
            }
        }
        if vectors.len() != dim_m {
            return Err(Error::Unsupported("ad(t) is not diagonalizable on m".into()));
        }
        debug_assert_eq!(SpanReport::from_vectors(g.dim(), vectors.clone()).rank, dim_m);
        return Ok(vectors);
    }
    Err(Error::Unsupported("could not separate the joint eigenspaces of ad(t)".into()))
}

/// Characteristic polynomial coefficients `[c_0, ..., c_n]` (monic, `c_n = 1`), Faddeev-LeVerrier.
fn charpoly(a: &QMatrix) -> Vec<Q> {
    let n = a.rows();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut m = QMatrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&QMatrix::identity(n).scale(&coeffs[n + 1 - k]));
        coeffs[n - k] = -a.mul(&m).trace() / q(k as i64);
    }
    coeffs
}

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

/// All rational roots with multiplicity; errors unless the polynomial splits over `Q`.
fn rational_roots(coeffs: &[Q]) -> Result<Vec<Q>> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut poly: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    while poly.len() > 1 && poly[0].is_zero() {
        roots.push(Q::zero());
        poly.remove(0);
    }
    let degree = poly.len() - 1;
    if degree == 0 {
        return Ok(roots);
    }
    let divisors = |x: &BigInt| -> Result<Vec<u64>> {
        let x = x.abs().to_u64().filter(|&v| v <= DIVISOR_SEARCH_LIMIT).ok_or_else(|| {
            Error::Unsupported("characteristic polynomial coefficients too large for rational root search".into())
        })?;
        let mut out = Vec::new();
        let mut d = 1u64;
        while d * d <= x {
            if x % d == 0 {
                out.push(d);
                out.push(x / d);
            }
            d += 1;
        }
        Ok(out)
    };
    let num_divs = divisors(&poly[0])?;
    let den_divs = divisors(&poly[degree])?;
    let mut candidates: Vec<Q> = Vec::new();
    for p in &num_divs {
        for d in &den_divs {
            for sign in [1i64, -1] {
                let c = Q::new(BigInt::from(*p) * sign, BigInt::from(*d));
                if !candidates.contains(&c) {
                    candidates.push(c);
                }
            }
        }
    }
    let mut rat: Vec<Q> = poly.iter().map(|c| Q::from_integer(c.clone())).collect();
    for c in candidates {
        loop {
            if rat.len() <= 1 {
                break;
            }
            let (quot, rem) = synthetic_division(&rat, &c);
            if !rem.is_zero() {
                break;
            }
            roots.push(c.clone());
            rat = quot;
        }
    }
    if rat.len() > 1 {
        return Err(Error::Unsupported("ad(t) has eigenvalues outside Q".into()));
    }
    Ok(roots)
}

/// Divide `sum coeffs[i] x^i` by `x - c`.
fn synthetic_division(coeffs: &[Q], c: &Q) -> (Vec<Q>, Q) {
    let n = coeffs.len() - 1;
    let mut quot = vec![Q::zero(); n];
    let mut carry = coeffs[n].clone();
    for i in (0..n).rev() {
        quot[i] = carry.clone();
        carry = &coeffs[i] + &carry * c;
    }
    (quot, carry)
}
