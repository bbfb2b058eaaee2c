//! Sparse multivariate polynomials over `Q`.
//!
//! Variable `x[i]` is the `i`-th basis vector of the ambient Lie algebra,
//! viewed as a linear function on the dual space. Terms live in a `BTreeMap`
//! keyed by exponent vectors under graded lexicographic order, so iteration
//! (and therefore printing) is canonical.

mod bigraded;
mod text;

pub use bigraded::{
    bihomogeneous_components, bihomogeneous_components_adapted, bihomogeneous_components_capped, phi_s_covector,
    phi_s_poly, phi_s_poly_capped, recover_components_vandermonde, BiComponent,
};

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::{q, Q};

/// Default cap on the number of terms any intermediate polynomial may carry.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), Q::one());
        p
    }

    /// The linear function `sum_i coeffs[i] * x[i]`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.add_term(Monomial(e), c.clone());
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector of wrong length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Q {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn check_cap(&self, cap: usize) -> Result<()> {
        if self.terms.len() > cap {
            return Err(Error::TermCapExceeded { terms: self.terms.len(), cap });
        }
        Ok(())
    }

    fn same_ring(&self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_capped(&self, other: &Poly, cap: usize) -> Result<Poly> {
        self.same_ring(other);
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Q::zero) += ca * cb;
            }
            if acc.len() > cap {
                return Err(Error::TermCapExceeded { terms: acc.len(), cap });
            }
        }
        let terms: BTreeMap<Monomial, Q> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let p = Poly { nvars: self.nvars, terms };
        p.check_cap(cap)?;
        Ok(p)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x[i]`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * q(e as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars, "evaluation point of wrong length");
        let mut powers: Vec<Vec<Q>> = vec![vec![Q::one()]; self.nvars];
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &point[i];
                    powers[i].push(next);
                }
                t *= &powers[i][e];
            }
            acc += t;
        }
        acc
    }

    /// Ring homomorphism `x[i] -> images[i]`; all images share one target ring.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        self.substitute_capped(images, usize::MAX).expect("uncapped substitution")
    }

    pub fn substitute_capped(&self, images: &[Poly], cap: usize) -> Result<Poly> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Poly::nvars);
        for im in images {
            assert_eq!(im.nvars, target, "images live in different rings");
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|im| vec![Poly::one(target), im.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_capped(&images[i], cap)?;
                    powers[i].push(next);
                }
                t = t.mul_capped(&powers[i][e], cap)?;
            }
            for (m, c) in t.terms {
                out.add_term(m, c);
            }
            out.check_cap(cap)?;
        }
        Ok(out)
    }

    /// Reinterpret in a ring with `nvars` variables, keeping the first
    /// `min(self.nvars, nvars)` variables (higher ones must be absent when shrinking).
    pub fn with_nvars(&self, nvars: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            if nvars < e.len() {
                assert!(e[nvars..].iter().all(|&x| x == 0), "cannot drop a variable that occurs");
            }
            e.resize(nvars, 0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// The homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.same_ring(divisor);
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::InvalidParameter("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Err(Error::InvalidParameter("polynomial division is not exact".into()));
            }
            let mut t = Poly::zero(self.nvars);
            t.add_term(m.div(&lm), c / &lc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Directional derivative `d/dt F(x + t*gamma)` at `t = 0`.
    pub fn directional_derivative(&self, gamma: &[Q]) -> Poly {
        assert_eq!(gamma.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (i, g) in gamma.iter().enumerate() {
            if !g.is_zero() {
                out = &out + &self.partial(i).scale(g);
            }
        }
        out
    }

    /// The differential at `gamma`, as a vector of the ambient algebra.
    pub fn differential_at(&self, gamma: &[Q]) -> Vector {
        assert_eq!(gamma.len(), self.nvars);
        let mut grad = vec![Q::zero(); self.nvars];
        for (m, c) in &self.terms {
            for (i, slot) in grad.iter_mut().enumerate() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let mut t = c * q(e as i64);
                for (j, &f) in m.0.iter().enumerate() {
                    let f = if j == i { f - 1 } else { f };
                    for _ in 0..f {
                        t *= &gamma[j];
                    }
                }
                *slot += t;
            }
        }
        grad
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_capped(rhs, usize::MAX).expect("uncapped product")
    }
}
