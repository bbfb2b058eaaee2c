//! Exact rank certificates: index, regularity, transcendence degree lower
//! bounds, completeness, and span identities at sampled points.
//!
//! Sampling only chooses where to look; every rank is computed exactly, so a
//! rank found at some point is a proven lower bound.

use rayon::prelude::*;

use crate::algebra::{CartanData, Covector, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::invariants::InvariantSet;
use crate::linalg::{add_vec, scale_vec, SpanReport, Vector};
use crate::rational::{q, Q};
use crate::sampling::sample_point;
use crate::subalgebra::{generate_mf, GeneratedSubalgebra};

/// `dim g - max rank(gamma-hat)` over `trials` seeded points in `[-bound, bound]`.
pub fn index_of(g: &LieAlgebra, trials: usize, seed: u64, bound: i64) -> usize {
    let n = g.dim();
    let best = (0..trials.max(1) as u64)
        .into_par_iter()
        .map(|t| g.gamma_hat(&Covector::new(sample_point(seed, t, n, bound))).rank())
        .max()
        .unwrap_or(0);
    n - best
}

pub fn is_regular(g: &LieAlgebra, xi: &Covector, index: usize) -> bool {
    g.centralizer(xi).rank == index
}

/// `(dim + index) / 2`.
pub fn b_of(g: &LieAlgebra, index: usize) -> Result<usize> {
    let sum = g.dim() + index;
    if !sum.is_multiple_of(2) {
        return Err(Error::Internal(format!("dim + index = {sum} is odd")));
    }
    Ok(sum / 2)
}

pub fn differential_span(sub: &GeneratedSubalgebra, gamma: &Covector) -> SpanReport {
    sub.differential_span(gamma)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    /// A point where `rank` is attained.
    pub point: Covector,
}

/// Largest Jacobian rank of the generators over seeded points; stops early at full rank.
pub fn trdeg_lower_bound(sub: &GeneratedSubalgebra, trials: usize, seed: u64, bound: i64) -> RankCertificate {
    let n = sub.algebra().dim();
    let target = sub.len().min(n);
    let mut best = RankCertificate { rank: 0, point: Covector::zero(n) };
    for t in 0..trials.max(1) as u64 {
        let point = Covector::new(sample_point(seed, t, n, bound));
        let rank = sub.differential_span(&point).rank;
        if rank > best.rank {
            best = RankCertificate { rank, point };
        }
        if best.rank == target {
            break;
        }
    }
    best
}

/// Sufficient condition for completeness on the orbit of a regular `gamma`:
/// the differentials at `gamma` span a space of dimension `b(g)`.
pub fn completeness_certificate(sub: &GeneratedSubalgebra, gamma: &Covector, index: usize) -> Result<bool> {
    let g = sub.algebra();
    if !is_regular(g, gamma, index) {
        return Err(Error::Precondition("completeness is certified only at regular points".into()));
    }
    Ok(sub.differential_span(gamma).rank == b_of(g, index)?)
}

#[derive(Clone, Debug)]
pub struct RelMfReport {
    pub h_regular: bool,
    /// Some `s` with `h + s x` regular was found.
    pub precondition_met: bool,
    pub ztilde_span: SpanReport,
    /// `d_h((MF)_x)`.
    pub mf_x_at_h: SpanReport,
    /// `d_x((MF)_h)`.
    pub mf_h_at_x: SpanReport,
    /// `None` when the precondition could not be verified.
    pub holds: Option<bool>,
}

/// For `h` in `t*` and `x` in `m*`: `d_{h+x} Ztilde = t + d_h((MF)_x)`, and when
/// `h` is regular also `= d_h((MF)_x) = d_x((MF)_h)`.
pub fn rel_mf_span_check(
    ztilde: &GeneratedSubalgebra,
    inv: &InvariantSet,
    split: &Splitting,
    h: &Covector,
    x: &Covector,
    index: usize,
    s_samples: &[Q],
) -> Result<RelMfReport> {
    let g = split.algebra();
    let cartan = split.cartan().ok_or_else(|| Error::Unsupported("needs a Cartan splitting".into()))?;
    if !split.covector_m(h).is_zero() {
        return Err(Error::InvalidParameter("h must vanish on m".into()));
    }
    if !split.covector_f(x).is_zero() {
        return Err(Error::InvalidParameter("x must vanish on t".into()));
    }
    let precondition_met = s_samples.iter().any(|s| is_regular(g, &h.add(&x.scale(s)), index));
    let h_regular = is_regular(g, h, index);
    let ztilde_span = ztilde.differential_span(&h.add(x));
    let mf_x_at_h = generate_mf(inv, x).differential_span(h);
    let mf_h_at_x = generate_mf(inv, h).differential_span(x);
    let holds = precondition_met.then(|| {
        let t = SpanReport::from_vectors(g.dim(), cartan.t_basis.clone());
        let mut ok = ztilde_span.same_space(&t.sum(&mf_x_at_h));
        if h_regular {
            ok &= ztilde_span.same_space(&mf_x_at_h) && ztilde_span.same_space(&mf_h_at_x);
        }
        ok
    });
    Ok(RelMfReport { h_regular, precondition_met, ztilde_span, mf_x_at_h, mf_h_at_x, holds })
}

#[derive(Clone, Debug)]
pub struct SubregularReport {
    pub h_prime: Vector,
    pub f: Vector,
    /// `(s, dim g^{h'+sf}, contained)` per sample.
    pub samples: Vec<(Q, usize, bool)>,
}

impl SubregularReport {
    pub fn holds(&self) -> bool {
        self.samples.iter().all(|s| s.2)
    }
}

/// A point on the wall of `nu` off every other wall.
pub fn generic_wall_point(cartan: &CartanData, nu: usize) -> Result<Vector> {
    let basis = cartan.wall_basis(nu);
    if basis.is_empty() {
        return Err(Error::Precondition("the wall of this root is zero".into()));
    }
    for base in 2..64i64 {
        let mut v = crate::linalg::zero_vector(basis[0].len());
        let mut c = q(1);
        for b in &basis {
            v = add_vec(&v, &scale_vec(&c, b));
            c *= q(base);
        }
        if cartan.is_generic_on_wall(nu, &v) == Some(true) {
            return Ok(v);
        }
    }
    Err(Error::Precondition("no generic point found on the wall".into()))
}

/// `g^{h'+sf}` inside `H_nu + u^-`, where `f` is the sum of the negative simple root vectors.
pub fn subregular_containment_check(
    split: &Splitting,
    nu: usize,
    h_prime: Option<Vector>,
    s_samples: &[Q],
) -> Result<SubregularReport> {
    let g = split.algebra();
    let cartan = split.cartan().ok_or_else(|| Error::Unsupported("needs a Cartan splitting".into()))?;
    let h_prime = match h_prime {
        Some(h) => {
            if cartan.is_generic_on_wall(nu, &h) != Some(true) {
                return Err(Error::Precondition("h' is not a generic point of the wall".into()));
            }
            h
        }
        None => generic_wall_point(cartan, nu)?,
    };
    let mut f = crate::linalg::zero_vector(g.dim());
    for a in cartan.simple_roots() {
        let neg = cartan.negative_of(a).ok_or_else(|| Error::Internal("root system not symmetric".into()))?;
        f = add_vec(&f, &cartan.roots[neg].vector);
    }
    let mut target = cartan.wall_basis(nu);
    target.extend(cartan.u_minus());
    let target = SpanReport::from_vectors(g.dim(), target);
    let samples = s_samples
        .iter()
        .map(|s| {
            let c = g.element_centralizer(&add_vec(&h_prime, &scale_vec(s, &f)));
            (s.clone(), c.rank, target.contains_span(&c))
        })
        .collect();
    Ok(SubregularReport { h_prime, f, samples })
}
