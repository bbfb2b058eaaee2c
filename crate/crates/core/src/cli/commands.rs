use std::time::Instant;

use crate::algebra::{principal_triple, Covector, LieAlgebra, Splitting};
use crate::counterexample::{self, format_matrix};
use crate::error::{Error, Result};
use crate::invariants::InvariantSet;
use crate::linalg::{add_vec, scale_vec, zero_vector, Vector};
use crate::poly::bihomogeneous_components_capped;
use crate::rank_lab::{b_of, completeness_certificate, generic_wall_point, index_of, is_regular, rel_mf_span_check, trdeg_lower_bound};
use crate::rational::q;
use crate::sampling::sample_point;
use crate::subalgebra::{
    criterion_verdict, generate_z_capped, generate_ztilde, pairwise_bracket_report, CriterionReport, GeneratedSubalgebra,
    PairReport, PairStatus, Verdict,
};

use super::config::{RunConfig, Setup};
use super::report::*;

/// Result of one command: the JSON document, the text summary and the exit code.
pub struct Outcome<T> {
    pub doc: T,
    pub summary: Summary,
    pub exit_code: i32,
}

const RANK_TRIALS: usize = 10;
const REL_MF_PAIRS: u64 = 5;
const COMPLETENESS_POINTS: usize = 3;

fn pair_labels(labels: &[String], i: usize, j: usize) -> [String; 2] {
    [labels[i].clone(), labels[j].clone()]
}

fn pairs_doc(report: &PairReport) -> PairsDoc {
    let results: Vec<PairDoc> = report
        .pairs
        .iter()
        .map(|p| {
            let (verdict, witness_point) = match &p.status {
                PairStatus::Zero => ("ZERO", None),
                PairStatus::Nonzero { witness_point, .. } => ("NONZERO", witness_point.as_deref().map(vec_str)),
                PairStatus::Undecided { .. } => ("UNDECIDED", None),
            };
            PairDoc {
                pair: pair_labels(&report.labels, p.i, p.j),
                verdict,
                witness_point,
                bracket_term_count: p.status.term_count(),
            }
        })
        .collect();
    let witness = report
        .pairs
        .iter()
        .position(|p| matches!(p.status, PairStatus::Nonzero { .. }))
        .map(|k| results[k].clone());
    PairsDoc {
        verdict: report.verdict.as_str(),
        count: report.pairs.len(),
        witness,
        undecided: report.undecided_pairs().into_iter().map(|(i, j)| pair_labels(&report.labels, i, j)).collect(),
        results,
    }
}

fn criterion_doc(report: &CriterionReport, names: &[String]) -> CriterionDoc {
    CriterionDoc {
        verdict: report.verdict.as_str(),
        witness: report.witness.as_ref().map(|w| CriterionWitnessDoc {
            pair: pair_labels(names, w.pair.0, w.pair.1),
            gamma: covector_str(&w.gamma),
            s: q_str(&w.s),
            s_prime: q_str(&w.s_prime),
            value: q_str(&w.value),
        }),
        pairs: report
            .pairs
            .iter()
            .map(|p| CriterionPairDoc {
                pair: pair_labels(names, p.pair.0, p.pair.1),
                status: match &p.polynomial {
                    None => "UNDECIDED",
                    Some(c) if c.is_zero() => "ZERO",
                    Some(_) => "NONZERO",
                },
                terms: p.polynomial.as_ref().map(|c| c.term_count()),
            })
            .collect(),
    }
}

fn generators_doc(sub: &GeneratedSubalgebra) -> Vec<GeneratorDoc> {
    sub.gens().iter().zip(sub.labels()).map(|(g, label)| GeneratorDoc { label, terms: g.poly.term_count() }).collect()
}

/// Merge the criterion and the exhaustive brackets. A decisive disagreement is an error.
fn combine(criterion: Verdict, pairs: Verdict) -> Result<Verdict> {
    use Verdict::*;
    match (criterion, pairs) {
        (NotCommutative, Commutative) | (Commutative, NotCommutative) => {
            Err(Error::Internal("criterion and pairwise brackets disagree".into()))
        }
        (NotCommutative, _) | (_, NotCommutative) => Ok(NotCommutative),
        (Commutative, Commutative) => Ok(Commutative),
        _ => Ok(Undecided),
    }
}

fn summarize_pairs(sum: &mut Summary, report: &PairReport) {
    let zero = report.pairs.iter().filter(|p| p.status == PairStatus::Zero).count();
    sum.line(format!(
        "pairwise brackets: {} ({} pairs, {} zero, {} undecided)",
        report.verdict,
        report.pairs.len(),
        zero,
        report.undecided_pairs().len()
    ));
    if let Some(w) = report.witness() {
        sum.line(format!(
            "  witness pair: {{{}, {}}} with {} terms",
            report.labels[w.i],
            report.labels[w.j],
            w.status.term_count()
        ));
        if let PairStatus::Nonzero { witness_point: Some(p), .. } = &w.status {
            sum.line(format!("  nonzero at [{}]", vec_str(p).join(", ")));
        }
    }
}

fn summarize_criterion(sum: &mut Summary, report: &CriterionReport, names: &[String]) {
    sum.line(format!("criterion: {}", report.verdict));
    if let Some(w) = &report.witness {
        sum.line(format!(
            "  witness: ({}, {}) at gamma = [{}], s = {}, s' = {}, value {}",
            names[w.pair.0],
            names[w.pair.1],
            covector_str(&w.gamma).join(", "),
            q_str(&w.s),
            q_str(&w.s_prime),
            q_str(&w.value)
        ));
    }
}

pub fn pair_report(cfg: &RunConfig) -> Result<Outcome<PairReportDoc>> {
    let mut sum = Summary::default();
    let t = Instant::now();
    let Setup { algebra, split, invariants, .. } = Setup::build(cfg)?;
    let z = generate_z_capped(&invariants, &split, cfg.term_cap)?;
    sum.line(format!("algebra {} (dim {}), split {} (dim f = {})", cfg.algebra, algebra.dim(), cfg.split, split.f_dim()));
    sum.line(format!("invariants: {}", invariants.names().join(", ")));
    sum.line(format!("Z generators: {}", z.len()));
    sum.timing("generators", t.elapsed());

    let t = Instant::now();
    let criterion = criterion_verdict(&invariants, &split, cfg.term_cap, cfg.seed, &[]);
    summarize_criterion(&mut sum, &criterion, invariants.names());
    sum.timing("criterion", t.elapsed());

    let t = Instant::now();
    let pairs = pairwise_bracket_report(&z, cfg.term_cap, cfg.seed);
    summarize_pairs(&mut sum, &pairs);
    sum.timing("pairwise brackets", t.elapsed());

    let verdict = combine(criterion.verdict, pairs.verdict)?;
    sum.line(format!("verdict: {verdict}"));
    let doc = PairReportDoc {
        command: "pair-report",
        algebra: cfg.algebra.clone(),
        dim: algebra.dim(),
        split: cfg.split.clone(),
        f_dim: split.f_dim(),
        invariants: invariants.names().to_vec(),
        seed: cfg.seed,
        term_cap: cfg.term_cap,
        generators: generators_doc(&z),
        criterion: criterion_doc(&criterion, invariants.names()),
        pairs: pairs_doc(&pairs),
        verdict: verdict.as_str(),
        exit_code: verdict.exit_code(),
    };
    Ok(Outcome { doc, summary: sum, exit_code: verdict.exit_code() })
}

/// Fixed `gl_4` replay. Exit code 1 when a computed matrix departs from its fixture.
pub fn counterexample(cfg: &RunConfig) -> Result<Outcome<CounterexampleDoc>> {
    let mut sum = Summary::default();
    let t = Instant::now();
    let r = counterexample::run(cfg.term_cap, cfg.seed)?;
    let show = |m: &counterexample::PolyMatrix| m.iter().map(|row| row.iter().map(|p| p.to_string().replace("x[0]", "s")).collect()).collect();
    sum.line("gl4 split by the lower-right sl2");
    sum.line("gamma =");
    sum.line(format_matrix(&r.gamma_const()));
    sum.line("phi_s(gamma) =");
    sum.line(format_matrix(&r.phi_s_gamma));
    sum.line("phi_s(gamma)^2 =");
    sum.line(format_matrix(&r.squared));
    sum.line("phi_s(gamma)^3 =");
    sum.line(format_matrix(&r.cubed));
    for c in &r.checks {
        sum.line(format!("{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name));
    }
    let at_gamma = r.criterion_at_gamma.to_string().replace("x[0]", "s").replace("x[1]", "s'");
    sum.line(format!("criterion for (tr X^3, tr X^4) at gamma: {at_gamma}"));
    let names: Vec<String> = (1..=4).map(|k| format!("tr X^{k}")).collect();
    summarize_criterion(&mut sum, &r.criterion, &names);
    summarize_pairs(&mut sum, &r.pairs);
    sum.timing("replay", t.elapsed());
    let fixtures_ok = r.all_checks_pass();
    let verdict = combine(r.criterion.verdict, r.pairs.verdict)?;
    let exit_code = if fixtures_ok { verdict.exit_code() } else { 1 };
    sum.line(format!("verdict: {verdict}{}", if fixtures_ok { "" } else { " (fixture mismatch)" }));
    let doc = CounterexampleDoc {
        command: "counterexample",
        gamma: matrix_str(&r.gamma),
        phi_s_gamma: show(&r.phi_s_gamma),
        phi_s_gamma_squared: show(&r.squared),
        phi_s_gamma_cubed: show(&r.cubed),
        checks: r.checks.iter().map(|c| CheckDoc { name: c.name.clone(), passed: c.passed }).collect(),
        criterion_at_gamma: at_gamma,
        criterion: criterion_doc(&r.criterion, &names),
        pairs: pairs_doc(&r.pairs),
        verdict: verdict.as_str(),
        exit_code,
    };
    Ok(Outcome { doc, summary: sum, exit_code })
}

fn t_combination(split: &Splitting, coeffs: &[crate::rational::Q]) -> Vector {
    let g = split.algebra();
    let cartan = split.cartan().expect("Cartan splitting");
    cartan.t_basis.iter().zip(coeffs).fold(zero_vector(g.dim()), |acc, (b, c)| add_vec(&acc, &scale_vec(c, b)))
}

/// Regular points `h + x` with `h` in `t*` and `x` in `m*`: first from the principal triple, then seeded.
fn regular_points(g: &LieAlgebra, split: &Splitting, index: usize, count: usize, seed: u64, bound: i64) -> Result<Vec<Covector>> {
    let form = split.form().ok_or_else(|| Error::Internal("Cartan splitting without a form".into()))?;
    let triple = principal_triple(g)?;
    let mut out = vec![form.flat(&triple.h).add(&form.flat(&add_vec(&triple.e, &triple.f)))];
    let rank = split.f_dim();
    let mut trial = 0u64;
    while out.len() < count && trial < 64 {
        let h = form.flat(&t_combination(split, &sample_point(seed, trial, rank, bound)));
        let x = split.covector_m(&Covector::new(sample_point(seed.wrapping_add(1), trial, g.dim(), bound)));
        trial += 1;
        let p = h.add(&x);
        if is_regular(g, &p, index) {
            out.push(p);
        }
    }
    out.retain(|p| is_regular(g, p, index));
    Ok(out)
}

pub fn cartan_suite(cfg: &RunConfig) -> Result<Outcome<CartanSuiteDoc>> {
    let mut sum = Summary::default();
    let t = Instant::now();
    let algebra = super::config::load_algebra(&cfg.algebra)?;
    let n = algebra.family().matrix_size().ok_or_else(|| Error::Unsupported("the Cartan suite needs gl_n or sl_n".into()))?;
    if n > cfg.max_n {
        return Err(Error::InvalidParameter(format!("n = {n} exceeds the configured maximum {}", cfg.max_n)));
    }
    let g = &algebra;
    let split = crate::algebra::cartan_splitting(g)?;
    let form = split.form().cloned().ok_or_else(|| Error::Internal("Cartan splitting without a form".into()))?;
    let inv: InvariantSet = super::config::load_invariants(g, &cfg.invariants)?;
    let index = index_of(g, RANK_TRIALS, cfg.seed, cfg.bound);
    let b = b_of(g, index)?;
    sum.line(format!("algebra {} (dim {}), index {index}, b = {b}", cfg.algebra, g.dim()));

    let z = generate_z_capped(&inv, &split, cfg.term_cap)?;
    let zt = generate_ztilde(&inv, &split)?;
    sum.line(format!("Z generators: {}, Ztilde generators: {}", z.len(), zt.len()));

    let mut vanishing = Vec::new();
    for (name, (h, &d)) in inv.names().iter().zip(inv.gens().iter().zip(inv.degrees())) {
        if d < 2 {
            continue;
        }
        let comps = bihomogeneous_components_capped(h, &split, cfg.term_cap)?;
        let zero = !comps.iter().any(|c| c.bidegree() == (d - 1, 1));
        vanishing.push(VanishingDoc { invariant: name.clone(), bidegree: [d - 1, 1], zero });
    }
    let all_vanish = vanishing.iter().all(|v| v.zero);
    sum.line(format!("(d-1, 1) components vanish: {all_vanish}"));
    sum.timing("generators", t.elapsed());

    let t = Instant::now();
    let zr = trdeg_lower_bound(&z, RANK_TRIALS, cfg.seed, cfg.bound);
    let ztr = trdeg_lower_bound(&zt, RANK_TRIALS, cfg.seed, cfg.bound);
    sum.line(format!("Jacobian rank: Z {} / {}, Ztilde {} / {}", zr.rank, z.len(), ztr.rank, zt.len()));
    sum.timing("ranks", t.elapsed());

    let t = Instant::now();
    let mut completeness = Vec::new();
    for p in regular_points(g, &split, index, COMPLETENESS_POINTS, cfg.seed, cfg.bound)? {
        let certified = completeness_certificate(&zt, &p, index)?;
        completeness.push(CompletenessDoc {
            point: covector_str(&p),
            regular: true,
            span_rank: zt.differential_span(&p).rank,
            certified,
        });
    }
    let complete = completeness.len() == COMPLETENESS_POINTS && completeness.iter().all(|c| c.certified);
    sum.line(format!(
        "completeness (certified via sufficient condition): {} of {} regular points",
        completeness.iter().filter(|c| c.certified).count(),
        completeness.len()
    ));
    sum.timing("completeness", t.elapsed());

    let t = Instant::now();
    let s_samples: Vec<_> = (1..=5).map(q).collect();
    let mut cases: Vec<(Covector, Covector)> = (0..REL_MF_PAIRS)
        .map(|trial| {
            let h = form.flat(&t_combination(&split, &sample_point(cfg.seed, trial, split.f_dim(), cfg.bound)));
            let x = split.covector_m(&Covector::new(sample_point(cfg.seed.wrapping_add(2), trial, g.dim(), cfg.bound)));
            (h, x)
        })
        .collect();
    let cartan = split.cartan().expect("Cartan splitting");
    if let Some(&nu) = cartan.simple_roots().first() {
        if let Ok(hv) = generic_wall_point(cartan, nu) {
            let x = split.covector_m(&Covector::new(sample_point(cfg.seed.wrapping_add(2), REL_MF_PAIRS, g.dim(), cfg.bound)));
            cases.push((form.flat(&hv), x));
        }
    }
    let mut rel_mf = Vec::new();
    for (h, x) in cases {
        let r = rel_mf_span_check(&zt, &inv, &split, &h, &x, index, &s_samples)?;
        rel_mf.push(RelMfDoc {
            h: covector_str(&h),
            x: covector_str(&x),
            h_regular: r.h_regular,
            precondition_met: r.precondition_met,
            ztilde_rank: r.ztilde_span.rank,
            mf_x_at_h_rank: r.mf_x_at_h.rank,
            holds: r.holds,
        });
    }
    let rel_ok = rel_mf.iter().all(|r| r.holds != Some(false));
    sum.line(format!(
        "span identity d(Ztilde) = t + d(MF): {} of {} cases hold ({} singular h)",
        rel_mf.iter().filter(|r| r.holds == Some(true)).count(),
        rel_mf.len(),
        rel_mf.iter().filter(|r| !r.h_regular).count()
    ));
    sum.timing("span identities", t.elapsed());

    let t = Instant::now();
    let pairs = pairwise_bracket_report(&zt, cfg.term_cap, cfg.seed);
    summarize_pairs(&mut sum, &pairs);
    sum.timing("pairwise brackets", t.elapsed());

    let checks_pass = all_vanish && zr.rank == b && ztr.rank == b && complete && rel_ok;
    let verdict = pairs.verdict;
    let exit_code = if checks_pass { verdict.exit_code() } else { 1 };
    sum.line(format!("checks: {}", if checks_pass { "pass" } else { "FAIL" }));
    sum.line(format!("verdict: {verdict}"));
    let doc = CartanSuiteDoc {
        command: "cartan-suite",
        algebra: cfg.algebra.clone(),
        dim: g.dim(),
        index,
        b,
        seed: cfg.seed,
        bound: cfg.bound,
        z_generators: generators_doc(&z),
        ztilde_generators: generators_doc(&zt),
        vanishing,
        z_rank: RankDoc { generators: z.len(), rank: zr.rank, point: covector_str(&zr.point) },
        ztilde_rank: RankDoc { generators: zt.len(), rank: ztr.rank, point: covector_str(&ztr.point) },
        completeness,
        rel_mf,
        ztilde_pairs: pairs_doc(&pairs),
        checks_pass,
        verdict: verdict.as_str(),
        exit_code,
    };
    Ok(Outcome { doc, summary: sum, exit_code })
}
