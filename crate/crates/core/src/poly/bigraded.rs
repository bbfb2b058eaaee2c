//! Bidegrees with respect to a splitting `q = f + m`, and the scaling `phi_s`.
//!
//! The component of `m`-degree `j` of `F` is the coefficient of `t^j` in
//! `F(gamma_f + t gamma_m)`, so it is read off after one linear substitution
//! in a ring with an extra variable `t`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Monomial, Poly, DEFAULT_TERM_CAP};
use crate::algebra::{Covector, Splitting};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, scale_vec, QMatrix};
use crate::rational::{pow_q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiComponent {
    pub f_degree: u32,
    pub m_degree: u32,
    pub poly: Poly,
}

impl BiComponent {
    pub fn bidegree(&self) -> (u32, u32) {
        (self.f_degree, self.m_degree)
    }
}

/// Images `x_k -> sum_l (p_f)_lk x_l + c * sum_l (p_m)_lk x_l` where `c` is
/// either a number or (when `scalar` is `None`) the extra variable `x[n]`.
fn scaling_images(split: &Splitting, scalar: Option<&Q>) -> Vec<Poly> {
    let n = split.algebra().dim();
    let nvars = if scalar.is_some() { n } else { n + 1 };
    let (pf, pm) = (split.p_f(), split.p_m());
    (0..n)
        .map(|k| {
            let mut img = Poly::zero(nvars);
            for l in 0..n {
                let a = &pf[(l, k)];
                let b = &pm[(l, k)];
                let mut e = vec![0u32; nvars];
                e[l] = 1;
                match scalar {
                    Some(s) => img.add_term(Monomial(e), a + b * s),
                    None => {
                        img.add_term(Monomial(e.clone()), a.clone());
                        e[n] = 1;
                        img.add_term(Monomial(e), b.clone());
                    }
                }
            }
            img
        })
        .collect()
}

pub fn bihomogeneous_components(f: &Poly, split: &Splitting) -> Vec<BiComponent> {
    bihomogeneous_components_capped(f, split, DEFAULT_TERM_CAP).expect("term cap exceeded")
}

/// Nonzero components sorted by total degree, then `m`-degree.
pub fn bihomogeneous_components_capped(f: &Poly, split: &Splitting, cap: usize) -> Result<Vec<BiComponent>> {
    let n = split.algebra().dim();
    assert_eq!(f.nvars(), n, "polynomial and splitting live over different algebras");
    let lifted = f.substitute_capped(&scaling_images(split, None), cap)?;
    let mut parts: BTreeMap<(u32, u32), Poly> = BTreeMap::new();
    for (m, c) in lifted.terms() {
        let j = m.exponents()[n];
        let d = m.degree() - j;
        let mut e = m.exponents().to_vec();
        e.truncate(n);
        parts
            .entry((d, j))
            .or_insert_with(|| Poly::zero(n))
            .add_term(Monomial(e), c.clone());
    }
    Ok(parts
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|((d, j), poly)| BiComponent { f_degree: d - j, m_degree: j, poly })
        .collect())
}

/// The same decomposition computed in adapted coordinates: change variables to
/// the basis `f_basis, m_basis`, sort monomials by how many `m`-variables they
/// use, change back. Kept as an independent cross-check.
pub fn bihomogeneous_components_adapted(f: &Poly, split: &Splitting) -> Vec<BiComponent> {
    let n = split.algebra().dim();
    let k = split.f_dim();
    // x_i = sum_a (B^-1)_ai z_a, with z_a the value on the a-th adapted basis vector
    let to_z: Vec<Poly> = (0..n).map(|i| Poly::linear(&split.adapted_inverse().column(i))).collect();
    let back: Vec<Poly> = (0..n).map(|a| Poly::linear(&split.adapted_matrix().column(a))).collect();
    let z = f.substitute(&to_z);
    let mut parts: BTreeMap<(u32, u32), Poly> = BTreeMap::new();
    for (m, c) in z.terms() {
        let i: u32 = m.exponents()[..k].iter().sum();
        let j: u32 = m.exponents()[k..].iter().sum();
        parts.entry((i + j, j)).or_insert_with(|| Poly::zero(n)).add_term(m.clone(), c.clone());
    }
    parts
        .into_iter()
        .map(|((d, j), p)| BiComponent { f_degree: d - j, m_degree: j, poly: p.substitute(&back) })
        .filter(|c| !c.poly.is_zero())
        .collect()
}

/// `F o phi_s`, i.e. every component of `m`-degree `j` multiplied by `s^j`.
pub fn phi_s_poly(f: &Poly, split: &Splitting, s: &Q) -> Result<Poly> {
    phi_s_poly_capped(f, split, s, DEFAULT_TERM_CAP)
}

pub fn phi_s_poly_capped(f: &Poly, split: &Splitting, s: &Q, cap: usize) -> Result<Poly> {
    if s.is_zero() {
        return Err(Error::InvalidParameter("phi_0 is not invertible".into()));
    }
    f.substitute_capped(&scaling_images(split, Some(s)), cap)
}

/// `gamma_f + s gamma_m`.
pub fn phi_s_covector(gamma: &Covector, split: &Splitting, s: &Q) -> Covector {
    let f = split.covector_f(gamma);
    let m = split.covector_m(gamma);
    Covector::new(add_vec(&f.coords, &scale_vec(s, &m.coords)))
}

/// Solve `phi_{s_r}(H) = sum_j s_r^j H_j` for `H_0..H_d` using the first `d + 1` samples.
pub fn recover_components_vandermonde(samples: &[(Q, Poly)], d: u32) -> Result<Vec<Poly>> {
    let size = d as usize + 1;
    if samples.len() < size {
        return Err(Error::InvalidParameter(format!("need {size} samples, got {}", samples.len())));
    }
    let samples = &samples[..size];
    if samples.iter().any(|(s, _)| s.is_zero()) {
        return Err(Error::InvalidParameter("sample parameters must be nonzero".into()));
    }
    let mut v = QMatrix::zeros(size, size);
    for (r, (s, _)) in samples.iter().enumerate() {
        for j in 0..size {
            v[(r, j)] = pow_q(s, j as u32);
        }
    }
    let inv = v.inverse().map_err(|_| Error::Singular("sample parameters are not distinct".into()))?;
    let nvars = samples[0].1.nvars();
    Ok((0..size)
        .map(|j| {
            let mut acc = Poly::zero(nvars);
            for (r, (_, p)) in samples.iter().enumerate() {
                if !inv[(j, r)].is_zero() {
                    acc = &acc + &p.scale(&inv[(j, r)]);
                }
            }
            acc
        })
        .collect())
}
