//! The Lie-Poisson bracket and its deformations along a splitting.

use num_traits::Zero;

use crate::algebra::{Covector, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, scale_vec, sub_vec, unit_vector, Vector};
use crate::poly::{phi_s_poly, Poly, DEFAULT_TERM_CAP};
use crate::rational::{one, q, Q};

/// `{F, G} = sum c_ij^k x_k dF/dx_i dG/dx_j`.
pub fn poisson_bracket(g: &LieAlgebra, f: &Poly, h: &Poly) -> Result<Poly> {
    poisson_bracket_capped(g, f, h, DEFAULT_TERM_CAP)
}

pub fn poisson_bracket_capped(g: &LieAlgebra, f: &Poly, h: &Poly, cap: usize) -> Result<Poly> {
    let n = g.dim();
    for p in [f, h] {
        if p.nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.nvars() });
        }
    }
    let df = f.gradient();
    let dh = h.gradient();
    let mut out = Poly::zero(n);
    for (i, dfi) in df.iter().enumerate() {
        if dfi.is_zero() {
            continue;
        }
        // sum_j [e_i, e_j] dG/dx_j, with [e_i, e_j] read as a linear polynomial
        let mut inner = Poly::zero(n);
        for (j, dhj) in dh.iter().enumerate() {
            let b = g.basis_bracket(i, j);
            if dhj.is_zero() || b.iter().all(Zero::is_zero) {
                continue;
            }
            inner = &inner + &Poly::linear(b).mul_capped(dhj, cap)?;
            inner.check_cap(cap)?;
        }
        if !inner.is_zero() {
            out = &out + &dfi.mul_capped(&inner, cap)?;
            out.check_cap(cap)?;
        }
    }
    Ok(out)
}

/// `{F, G}(gamma) = gamma([d_gamma F, d_gamma G])`.
pub fn bracket_at(g: &LieAlgebra, f: &Poly, h: &Poly, gamma: &Covector) -> Q {
    let a = f.differential_at(&gamma.coords);
    let b = h.differential_at(&gamma.coords);
    gamma.pair(&g.bracket(&a, &b))
}

fn check_s(s: &Q) -> Result<()> {
    if s.is_zero() {
        return Err(Error::InvalidParameter("the deformation parameter must be nonzero".into()));
    }
    Ok(())
}

/// `[x, y]_(s) = phi_s^-1 [phi_s x, phi_s y]`.
pub fn deformed_bracket_vec(split: &Splitting, x: &[Q], y: &[Q], s: &Q) -> Result<Vector> {
    check_s(s)?;
    let g = split.algebra();
    let b = g.bracket(&split.phi_vector(x, s), &split.phi_vector(y, s));
    split.phi_inverse_vector(&b, s)
}

/// `[x_f,y_f] + [x_f,y_m] + [x_m,y_f] + s [x_m,y_m]_m + s^2 [x_m,y_m]_f`.
pub fn deformed_bracket_closed_form(split: &Splitting, x: &[Q], y: &[Q], s: &Q) -> Vector {
    let g = split.algebra();
    let (xf, xm) = (split.project_f(x), split.project_m(x));
    let (yf, ym) = (split.project_f(y), split.project_m(y));
    let mm = g.bracket(&xm, &ym);
    let mut out = g.bracket(&xf, &yf);
    out = add_vec(&out, &g.bracket(&xf, &ym));
    out = add_vec(&out, &g.bracket(&xm, &yf));
    out = add_vec(&out, &scale_vec(s, &split.project_m(&mm)));
    add_vec(&out, &scale_vec(&(s * s), &split.project_f(&mm)))
}

/// The algebra with bracket `[,]_(s)` on the same basis.
pub fn deformed_algebra(split: &Splitting, s: &Q) -> Result<LieAlgebra> {
    check_s(s)?;
    let g = split.algebra();
    let n = g.dim();
    let mut brackets = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            brackets.push(deformed_bracket_vec(split, &unit_vector(n, i), &unit_vector(n, j), s)?);
        }
    }
    g.with_brackets(brackets)
}

pub fn deformed_poisson_bracket(split: &Splitting, f: &Poly, h: &Poly, s: &Q) -> Result<Poly> {
    poisson_bracket(&deformed_algebra(split, s)?, f, h)
}

/// `phi_s^-1(H)`; the centre of `{,}_(s)` is the image of the centre under this map.
pub fn phi_s_inverse_poly(h: &Poly, split: &Splitting, s: &Q) -> Result<Poly> {
    check_s(s)?;
    phi_s_poly(h, split, &(one() / s))
}

/// `2 s~^2 = s^2 + s'^2`.
pub fn is_pencil_triple(s: &Q, s_prime: &Q, s_tilde: &Q) -> bool {
    q(2) * s_tilde * s_tilde == s * s + s_prime * s_prime
}

/// `{F,G}_(s) + {F,G}_(s') - 2 {F,G}_(s~)`.
pub fn pencil_defect(split: &Splitting, f: &Poly, h: &Poly, s: &Q, s_prime: &Q, s_tilde: &Q) -> Result<Poly> {
    let a = deformed_poisson_bracket(split, f, h, s)?;
    let b = deformed_poisson_bracket(split, f, h, s_prime)?;
    let c = deformed_poisson_bracket(split, f, h, s_tilde)?;
    Ok(&(&a + &b) - &c.scale(&q(2)))
}

/// First basis pair `(i, j)` with a nonzero pencil defect on the linear functions.
pub fn pencil_defect_witness(split: &Splitting, s: &Q, s_prime: &Q, s_tilde: &Q) -> Result<Option<(usize, usize, Vector)>> {
    let n = split.algebra().dim();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (unit_vector(n, i), unit_vector(n, j));
            let a = deformed_bracket_vec(split, &x, &y, s)?;
            let b = deformed_bracket_vec(split, &x, &y, s_prime)?;
            let c = deformed_bracket_vec(split, &x, &y, s_tilde)?;
            let d = sub_vec(&add_vec(&a, &b), &scale_vec(&q(2), &c));
            if d.iter().any(|v| !v.is_zero()) {
                return Ok(Some((i, j, d)));
            }
        }
    }
    Ok(None)
}
