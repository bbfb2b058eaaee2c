//! Subalgebras generated by bihomogeneous components or shifted derivatives of
//! invariants, and exact decisions about their commutativity.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{make_splitting, Covector, InvariantForm, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::invariants::{verify_centrality, InvariantSet};
use crate::linalg::{SpanReport, Vector};
use crate::poisson::poisson_bracket_capped;
use crate::poly::{bihomogeneous_components_capped, Monomial, Poly};
use crate::rational::{binomial, falling, one, pow_q, q, qf, Q};
use crate::sampling::{find_nonzero_point, sample_point, WITNESS_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubalgebraKind {
    Z,
    Ztilde,
    MF,
}

impl fmt::Display for SubalgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubalgebraKind::Z => "Z",
            SubalgebraKind::Ztilde => "Ztilde",
            SubalgebraKind::MF => "MF",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorTag {
    /// Component of bidegree `(i, j)` of invariant `source`.
    Component { source: usize, f_degree: u32, m_degree: u32 },
    /// The linear function given by the `index`-th Cartan basis vector.
    CartanCoordinate { index: usize },
    /// `k`-th shifted derivative of invariant `source`.
    Derivative { source: usize, order: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub tag: GeneratorTag,
    pub poly: Poly,
}

impl Generator {
    pub fn label(&self, inv_names: &[String]) -> String {
        let name = |s: usize| inv_names.get(s).cloned().unwrap_or_else(|| format!("H{}", s + 1));
        match &self.tag {
            GeneratorTag::Component { source, f_degree, m_degree } => format!("({}){{{f_degree},{m_degree}}}", name(*source)),
            GeneratorTag::CartanCoordinate { index } => format!("t{}", index + 1),
            GeneratorTag::Derivative { source, order } => format!("D^{order}({})", name(*source)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedSubalgebra {
    pub kind: SubalgebraKind,
    algebra: Arc<LieAlgebra>,
    gens: Vec<Generator>,
    inv_names: Vec<String>,
}

impl GeneratedSubalgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.gens.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn label(&self, i: usize) -> String {
        self.gens[i].label(&self.inv_names)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.label(i)).collect()
    }

    /// Differentials of all generators at `gamma`.
    pub fn differential_span(&self, gamma: &Covector) -> SpanReport {
        let vs: Vec<Vector> = self.gens.iter().map(|g| g.poly.differential_at(&gamma.coords)).collect();
        SpanReport::from_vectors(self.algebra.dim(), vs)
    }
}

/// All nonzero bihomogeneous components of the invariants.
pub fn generate_z(inv: &InvariantSet, split: &Splitting) -> Result<GeneratedSubalgebra> {
    generate_z_capped(inv, split, crate::poly::DEFAULT_TERM_CAP)
}

pub fn generate_z_capped(inv: &InvariantSet, split: &Splitting, cap: usize) -> Result<GeneratedSubalgebra> {
    let mut gens = Vec::new();
    for (source, h) in inv.gens().iter().enumerate() {
        for c in bihomogeneous_components_capped(h, split, cap)? {
            gens.push(Generator {
                tag: GeneratorTag::Component { source, f_degree: c.f_degree, m_degree: c.m_degree },
                poly: c.poly,
            });
        }
    }
    let sub = GeneratedSubalgebra {
        kind: SubalgebraKind::Z,
        algebra: Arc::new(inv.algebra().clone()),
        gens,
        inv_names: inv.names().to_vec(),
    };
    if let Some(i) = f_invariance_defect(&sub, split)? {
        return Err(Error::Internal(format!("component {} is not f-invariant", sub.label(i))));
    }
    Ok(sub)
}

/// First generator with `{x, gen} != 0` for some `x` in `f`.
pub fn f_invariance_defect(sub: &GeneratedSubalgebra, split: &Splitting) -> Result<Option<usize>> {
    let g = sub.algebra();
    for (i, gen) in sub.gens.iter().enumerate() {
        for x in split.f_basis() {
            if !poisson_bracket_capped(g, &Poly::linear(x), &gen.poly, usize::MAX)?.is_zero() {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}

/// `Z` with every pure-Cartan component replaced by a basis of `t`.
pub fn generate_ztilde(inv: &InvariantSet, split: &Splitting) -> Result<GeneratedSubalgebra> {
    let cartan = split.cartan().ok_or_else(|| Error::Unsupported("Ztilde needs a Cartan splitting".into()))?;
    let z = generate_z(inv, split)?;
    let mut gens: Vec<Generator> = cartan
        .t_basis
        .iter()
        .enumerate()
        .map(|(index, v)| Generator { tag: GeneratorTag::CartanCoordinate { index }, poly: Poly::linear(v) })
        .collect();
    gens.extend(z.gens.into_iter().filter(|g| !matches!(g.tag, GeneratorTag::Component { m_degree: 0, .. })));
    Ok(GeneratedSubalgebra { kind: SubalgebraKind::Ztilde, gens, ..z })
}

/// `D^k H_j` for `0 <= k < d_j`, where `D` is the derivative in direction `gamma`; zero ones dropped.
pub fn generate_mf(inv: &InvariantSet, gamma: &Covector) -> GeneratedSubalgebra {
    let mut gens = Vec::new();
    for (source, (h, &d)) in inv.gens().iter().zip(inv.degrees()).enumerate() {
        let mut p = h.clone();
        for order in 0..d {
            if p.is_zero() {
                break;
            }
            gens.push(Generator { tag: GeneratorTag::Derivative { source, order }, poly: p.clone() });
            p = p.directional_derivative(&gamma.coords);
        }
    }
    GeneratedSubalgebra {
        kind: SubalgebraKind::MF,
        algebra: Arc::new(inv.algebra().clone()),
        gens,
        inv_names: inv.names().to_vec(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Commutative,
    NotCommutative,
    Undecided,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Commutative => "COMMUTATIVE",
            Verdict::NotCommutative => "NOT_COMMUTATIVE",
            Verdict::Undecided => "UNDECIDED",
        }
    }

    /// Process exit code for this verdict.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Commutative => 0,
            Verdict::NotCommutative => 2,
            Verdict::Undecided => 3,
        }
    }

    fn combine(statuses: impl Iterator<Item = PairStatusKind>) -> Verdict {
        let mut undecided = false;
        for s in statuses {
            match s {
                PairStatusKind::Nonzero => return Verdict::NotCommutative,
                PairStatusKind::Undecided => undecided = true,
                PairStatusKind::Zero => {}
            }
        }
        if undecided {
            Verdict::Undecided
        } else {
            Verdict::Commutative
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairStatusKind {
    Zero,
    Nonzero,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairStatus {
    Zero,
    Nonzero { bracket: Poly, witness_point: Option<Vector> },
    Undecided { reason: String },
}

impl PairStatus {
    fn kind(&self) -> PairStatusKind {
        match self {
            PairStatus::Zero => PairStatusKind::Zero,
            PairStatus::Nonzero { .. } => PairStatusKind::Nonzero,
            PairStatus::Undecided { .. } => PairStatusKind::Undecided,
        }
    }

    pub fn term_count(&self) -> usize {
        match self {
            PairStatus::Nonzero { bracket, .. } => bracket.term_count(),
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub i: usize,
    pub j: usize,
    pub status: PairStatus,
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub verdict: Verdict,
    pub labels: Vec<String>,
    /// One entry per pair `i < j`, in lexicographic order.
    pub pairs: Vec<PairOutcome>,
}

impl PairReport {
    /// The lexicographically smallest pair with a nonzero bracket.
    pub fn witness(&self) -> Option<&PairOutcome> {
        self.pairs.iter().find(|p| matches!(p.status, PairStatus::Nonzero { .. }))
    }

    pub fn undecided_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().filter(|p| matches!(p.status, PairStatus::Undecided { .. })).map(|p| (p.i, p.j)).collect()
    }
}

/// `{g_i, g_j}` for all `i < j`; a pair whose bracket exceeds `cap` terms is undecided.
pub fn pairwise_bracket_report(sub: &GeneratedSubalgebra, cap: usize, seed: u64) -> PairReport {
    let n = sub.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let g = sub.algebra();
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let status = match poisson_bracket_capped(g, &sub.gens[i].poly, &sub.gens[j].poly, cap) {
                Ok(b) if b.is_zero() => PairStatus::Zero,
                Ok(b) => {
                    let witness_point = find_nonzero_point(&b, seed);
                    PairStatus::Nonzero { bracket: b, witness_point }
                }
                Err(e) => PairStatus::Undecided { reason: e.to_string() },
            };
            PairOutcome { i, j, status }
        })
        .collect();
    PairReport {
        verdict: Verdict::combine(outcomes.iter().map(|o| o.status.kind())),
        labels: sub.labels(),
        pairs: outcomes,
    }
}

/// The criterion polynomial in variables `y_0..y_{n-1}` (the point `gamma`),
/// `y_n = s` and `y_{n+1} = s'`:
/// `gamma_f([ (d_{phi_s gamma} H)_f, (d_{phi_s' gamma} H')_f ])`.
pub fn criterion_polynomial(inv: &InvariantSet, split: &Splitting, a: usize, b: usize, cap: usize) -> Result<Poly> {
    let g = split.algebra();
    let n = g.dim();
    let nv = n + 2;
    let (pf, pm) = (split.p_f(), split.p_m());
    // coordinates of phi_t(gamma) for t the variable y_{n + which}
    let phi_images = |which: usize| -> Vec<Poly> {
        (0..n)
            .map(|k| {
                let mut img = Poly::zero(nv);
                for l in 0..n {
                    let mut e = vec![0u32; nv];
                    e[l] = 1;
                    img.add_term(Monomial::from_exponents(e.clone()), pf[(l, k)].clone());
                    e[n + which] = 1;
                    img.add_term(Monomial::from_exponents(e), pm[(l, k)].clone());
                }
                img
            })
            .collect()
    };
    // (d_{phi_t gamma} H)_f as a vector of polynomials
    let projected_gradient = |h: &Poly, which: usize| -> Result<Vec<Poly>> {
        let images = phi_images(which);
        let grad: Vec<Poly> = h.gradient().iter().map(|p| p.substitute_capped(&images, cap)).collect::<Result<_>>()?;
        Ok((0..n)
            .map(|r| {
                let mut acc = Poly::zero(nv);
                for (k, gk) in grad.iter().enumerate() {
                    if !pf[(r, k)].is_zero() && !gk.is_zero() {
                        acc = &acc + &gk.scale(&pf[(r, k)]);
                    }
                }
                acc
            })
            .collect())
    };
    let u = projected_gradient(&inv.gens()[a], 0)?;
    let v = projected_gradient(&inv.gens()[b], 1)?;
    // gamma_f as a linear form in y
    let gamma_f: Vec<Poly> = (0..n)
        .map(|k| {
            let mut coeffs = vec![Q::zero(); nv];
            for l in 0..n {
                coeffs[l] = pf[(l, k)].clone();
            }
            Poly::linear(&coeffs)
        })
        .collect();
    let mut out = Poly::zero(nv);
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        let mut w = Poly::zero(nv);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let mut l = Poly::zero(nv);
            for (k, c) in g.basis_bracket(i, j).iter().enumerate() {
                if !c.is_zero() {
                    l = &l + &gamma_f[k].scale(c);
                }
            }
            if !l.is_zero() {
                w = &w + &l.mul_capped(vj, cap)?;
            }
        }
        if !w.is_zero() {
            out = &out + &ui.mul_capped(&w, cap)?;
            out.check_cap(cap)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionWitness {
    pub pair: (usize, usize),
    pub gamma: Covector,
    pub s: Q,
    pub s_prime: Q,
    pub value: Q,
}

#[derive(Clone, Debug)]
pub struct CriterionPair {
    pub pair: (usize, usize),
    /// `None` when the cap was hit.
    pub polynomial: Option<Poly>,
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub pairs: Vec<CriterionPair>,
    pub witness: Option<CriterionWitness>,
}

impl CriterionReport {
    pub fn undecided_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().filter(|p| p.polynomial.is_none()).map(|p| p.pair).collect()
    }
}

/// Evaluate the criterion for all invariant pairs `a <= b`. Witness points are
/// tried first at `preferred` covectors with small `s, s'`, then on a seeded grid.
pub fn criterion_verdict(
    inv: &InvariantSet,
    split: &Splitting,
    cap: usize,
    seed: u64,
    preferred: &[Covector],
) -> CriterionReport {
    let l = inv.len();
    let pairs: Vec<(usize, usize)> = (0..l).flat_map(|a| (a..l).map(move |b| (a, b))).collect();
    let results: Vec<CriterionPair> = pairs
        .par_iter()
        .map(|&(a, b)| CriterionPair { pair: (a, b), polynomial: criterion_polynomial(inv, split, a, b, cap).ok() })
        .collect();
    let verdict = Verdict::combine(results.iter().map(|r| match &r.polynomial {
        None => PairStatusKind::Undecided,
        Some(p) if p.is_zero() => PairStatusKind::Zero,
        Some(_) => PairStatusKind::Nonzero,
    }));
    let n = split.algebra().dim();
    let witness = results.iter().find_map(|r| {
        let p = r.polynomial.as_ref().filter(|p| !p.is_zero())?;
        let point = preferred_point(p, preferred, n).or_else(|| find_nonzero_point(p, seed))?;
        Some(CriterionWitness {
            pair: r.pair,
            gamma: Covector::new(point[..n].to_vec()),
            s: point[n].clone(),
            s_prime: point[n + 1].clone(),
            value: p.eval(&point),
        })
    });
    CriterionReport { verdict, pairs: results, witness }
}

fn preferred_point(p: &Poly, preferred: &[Covector], n: usize) -> Option<Vector> {
    for gamma in preferred {
        if gamma.dim() != n {
            continue;
        }
        for s in 1..=WITNESS_BOUND {
            for s2 in 1..=WITNESS_BOUND {
                let mut point = gamma.coords.clone();
                point.push(q(s));
                point.push(q(s2));
                if !p.eval(&point).is_zero() {
                    return Some(point);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct MfIdentityReport {
    /// `(j, k, holds)` for every invariant `j` and derivative order `k`.
    pub identities: Vec<(usize, u32, bool)>,
    /// Inclusion `d_x Z` inside `d_x MF` at each sampled point.
    pub inclusions: Vec<(Covector, bool)>,
}

impl MfIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|t| t.2) && self.inclusions.iter().all(|t| t.1)
    }
}

/// For `f = <h>` and `gamma` the covector with `gamma(h) = 1`, `gamma(m) = 0`, check
/// `D^k H = sum_{r >= k} r(r-1)...(r-k+1) h^(r-k) H_{d-r}` where the component of
/// `h`-degree `r` of `H` is `h^r H_{d-r}`, then compare differential spans.
pub fn mf_identity_check(
    inv: &InvariantSet,
    form: &InvariantForm,
    h: &[Q],
    samples: usize,
    seed: u64,
    bound: i64,
) -> Result<MfIdentityReport> {
    let g = inv.algebra();
    let n = g.dim();
    let hh = form.pair(h, h);
    if hh.is_zero() {
        return Err(Error::DegenerateRestriction);
    }
    let split = make_splitting(g, form, vec![h.to_vec()])?;
    let gamma = form.flat(h).scale(&(one() / &hh));
    let h_poly = Poly::linear(h);
    let mut identities = Vec::new();
    for (j, (big_h, &d)) in inv.gens().iter().zip(inv.degrees()).enumerate() {
        let comps = bihomogeneous_components_capped(big_h, &split, usize::MAX)?;
        // H_{d-r} for r = 0..=d
        let mut reduced = vec![Poly::zero(n); d as usize + 1];
        for c in comps {
            let r = c.f_degree;
            reduced[r as usize] = c.poly.div_exact(&h_poly.pow(r))?;
        }
        let mut lhs = big_h.clone();
        for k in 0..=d {
            let mut rhs = Poly::zero(n);
            for r in k..=d {
                let part = &h_poly.pow(r - k) * &reduced[r as usize];
                rhs = &rhs + &part.scale(&falling(r, k));
            }
            identities.push((j, k, lhs == rhs));
            lhs = lhs.directional_derivative(&gamma.coords);
        }
    }
    let z = generate_z(inv, &split)?;
    let mf = generate_mf(inv, &gamma);
    let inclusions = (0..samples as u64)
        .map(|t| {
            let x = Covector::new(sample_point(seed, t, n, bound));
            let ok = mf.differential_span(&x).contains_span(&z.differential_span(&x));
            (x, ok)
        })
        .collect();
    Ok(MfIdentityReport { identities, inclusions })
}

#[derive(Clone, Debug)]
pub struct TransferReport {
    /// Every component of the larger algebra's invariants is a polynomial in
    /// `z` and the embedded components of the smaller one.
    pub forward: bool,
    /// And conversely.
    pub backward: bool,
    pub z_central: bool,
    pub gl_verdict: Verdict,
    pub sl_verdict: Verdict,
}

impl TransferReport {
    pub fn agrees(&self) -> bool {
        self.forward && self.backward && self.z_central && self.gl_verdict == self.sl_verdict
    }
}

/// Compare `Z` for `gl_n = z + sl_n` against `Z` for `sl_n`, both split along the same `f` inside `sl_n`.
///
/// With `X_0` the traceless part and `z = tr X`,
/// `tr X^k = sum_i C(k,i) (z/n)^(k-i) tr X_0^i`, and `z` has bidegree `(0, 1)`.
pub fn center_transfer_check(
    gl_inv: &InvariantSet,
    gl_split: &Splitting,
    sl_inv: &InvariantSet,
    sl_split: &Splitting,
    cap: usize,
    seed: u64,
) -> Result<TransferReport> {
    let gl = gl_split.algebra();
    let sl = sl_split.algebra();
    let n = gl.family().matrix_size().ok_or_else(|| Error::Unsupported("needs gl_n".into()))?;
    let identity = crate::linalg::QMatrix::identity(n);
    let z_vec = gl.element_from_matrix(&identity)?;
    let z = Poly::linear(&z_vec);
    // x^sl_a -> the sl basis vector a as a linear function on gl*
    let embed: Vec<Poly> = (0..sl.dim())
        .map(|a| {
            let m = sl.element_matrix(&crate::linalg::unit_vector(sl.dim(), a))?;
            Ok(Poly::linear(&gl.element_from_matrix(&m)?))
        })
        .collect::<Result<_>>()?;
    // components of tr X_0^i embedded in gl, indexed by (i, f_degree, m_degree)
    let sl_comp = |i: u32, fd: u32, md: u32| -> Result<Poly> {
        let nv = gl.dim();
        match i {
            0 => Ok(if fd == 0 && md == 0 { Poly::constant(nv, q(n as i64)) } else { Poly::zero(nv) }),
            1 => Ok(Poly::zero(nv)),
            _ => {
                let idx = sl_inv.degrees().iter().position(|&d| d == i).ok_or_else(|| {
                    Error::InvalidParameter(format!("sl invariants lack degree {i}"))
                })?;
                let comps = bihomogeneous_components_capped(&sl_inv.gens()[idx], sl_split, cap)?;
                Ok(comps
                    .into_iter()
                    .find(|c| c.f_degree == fd && c.m_degree == md)
                    .map(|c| c.poly.substitute(&embed))
                    .unwrap_or_else(|| Poly::zero(nv)))
            }
        }
    };
    let gl_comp = |k: u32, fd: u32, md: u32| -> Result<Poly> {
        let nv = gl.dim();
        if k == 0 {
            return Ok(if fd == 0 && md == 0 { Poly::constant(nv, q(n as i64)) } else { Poly::zero(nv) });
        }
        let idx = gl_inv
            .degrees()
            .iter()
            .position(|&d| d == k)
            .ok_or_else(|| Error::InvalidParameter(format!("gl invariants lack degree {k}")))?;
        let comps = bihomogeneous_components_capped(&gl_inv.gens()[idx], gl_split, cap)?;
        Ok(comps.into_iter().find(|c| c.f_degree == fd && c.m_degree == md).map(|c| c.poly).unwrap_or_else(|| Poly::zero(nv)))
    };
    let zn = z.scale(&qf(1, n as i64));
    let mut forward = true;
    let mut backward = true;
    for &k in gl_inv.degrees() {
        for fd in 0..=k {
            let md = k - fd;
            // forward: gl component from sl components
            let mut rhs = Poly::zero(gl.dim());
            for i in 0..=k {
                let shift = k - i;
                if shift > md {
                    continue;
                }
                let term = &zn.pow(shift) * &sl_comp(i, fd, md - shift)?;
                rhs = &rhs + &term.scale(&binomial(k, i));
            }
            forward &= gl_comp(k, fd, md)? == rhs;
            // backward: tr X_0^k from tr X^i and -z/n
            if k >= 2 {
                let mut rhs = Poly::zero(gl.dim());
                for i in 0..=k {
                    let shift = k - i;
                    if shift > md {
                        continue;
                    }
                    let sign = pow_q(&q(-1), shift);
                    let term = &zn.pow(shift) * &gl_comp(i, fd, md - shift)?;
                    rhs = &rhs + &term.scale(&(binomial(k, i) * sign));
                }
                backward &= sl_comp(k, fd, md)? == rhs;
            }
        }
    }
    let z_central = verify_centrality(gl, &z)?.central;
    let gl_verdict = pairwise_bracket_report(&generate_z_capped(gl_inv, gl_split, cap)?, cap, seed).verdict;
    let sl_verdict = pairwise_bracket_report(&generate_z_capped(sl_inv, sl_split, cap)?, cap, seed).verdict;
    Ok(TransferReport { forward, backward, z_central, gl_verdict, sl_verdict })
}
