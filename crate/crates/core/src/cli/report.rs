//! Report documents. The JSON form carries no timings, so identical
//! `(config, seed)` give byte-identical files; timings go to the text summary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::algebra::Covector;
use crate::error::Result;
use crate::linalg::QMatrix;
use crate::rational::{fmt_q, Q};

pub fn q_str(v: &Q) -> String {
    fmt_q(v)
}

pub fn vec_str(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

pub fn covector_str(c: &Covector) -> Vec<String> {
    vec_str(&c.coords)
}

pub fn matrix_str(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| vec_str(m.row(i))).collect()
}

/// Human summary built line by line, with the elapsed time per phase kept aside.
#[derive(Default)]
pub struct Summary {
    text: String,
}

impl Summary {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn timing(&mut self, phase: &str, elapsed: std::time::Duration) {
        let _ = writeln!(self.text, "  [{phase}: {:.3}s]", elapsed.as_secs_f64());
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

pub fn json_path(stem: &Path) -> PathBuf {
    with_suffix(stem, "json")
}

pub fn text_path(stem: &Path) -> PathBuf {
    with_suffix(stem, "txt")
}

fn with_suffix(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Write `<stem>.json` and `<stem>.txt`.
pub fn write_both<T: Serialize>(stem: &Path, doc: &T, summary: &Summary) -> Result<()> {
    if let Some(dir) = stem.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let mut json = serde_json::to_string_pretty(doc).map_err(|e| crate::Error::Internal(e.to_string()))?;
    json.push('\n');
    std::fs::write(json_path(stem), json)?;
    std::fs::write(text_path(stem), summary.as_str())?;
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorDoc {
    pub label: String,
    pub terms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairDoc {
    pub pair: [String; 2],
    pub verdict: &'static str,
    pub witness_point: Option<Vec<String>>,
    pub bracket_term_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairsDoc {
    pub verdict: &'static str,
    pub count: usize,
    pub witness: Option<PairDoc>,
    pub undecided: Vec<[String; 2]>,
    pub results: Vec<PairDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionPairDoc {
    pub pair: [String; 2],
    pub status: &'static str,
    pub terms: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionWitnessDoc {
    pub pair: [String; 2],
    pub gamma: Vec<String>,
    pub s: String,
    pub s_prime: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionDoc {
    pub verdict: &'static str,
    pub witness: Option<CriterionWitnessDoc>,
    pub pairs: Vec<CriterionPairDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReportDoc {
    pub command: &'static str,
    pub algebra: String,
    pub dim: usize,
    pub split: String,
    pub f_dim: usize,
    pub invariants: Vec<String>,
    pub seed: u64,
    pub term_cap: usize,
    pub generators: Vec<GeneratorDoc>,
    pub criterion: CriterionDoc,
    pub pairs: PairsDoc,
    pub verdict: &'static str,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleDoc {
    pub command: &'static str,
    pub gamma: Vec<Vec<String>>,
    pub phi_s_gamma: Vec<Vec<String>>,
    pub phi_s_gamma_squared: Vec<Vec<String>>,
    pub phi_s_gamma_cubed: Vec<Vec<String>>,
    pub checks: Vec<CheckDoc>,
    /// In the variables `s = x[0]`, `s' = x[1]`.
    pub criterion_at_gamma: String,
    pub criterion: CriterionDoc,
    pub pairs: PairsDoc,
    pub verdict: &'static str,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingDoc {
    pub invariant: String,
    pub bidegree: [u32; 2],
    pub zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankDoc {
    pub generators: usize,
    pub rank: usize,
    pub point: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletenessDoc {
    pub point: Vec<String>,
    pub regular: bool,
    pub span_rank: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelMfDoc {
    pub h: Vec<String>,
    pub x: Vec<String>,
    pub h_regular: bool,
    pub precondition_met: bool,
    pub ztilde_rank: usize,
    pub mf_x_at_h_rank: usize,
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CartanSuiteDoc {
    pub command: &'static str,
    pub algebra: String,
    pub dim: usize,
    pub index: usize,
    pub b: usize,
    pub seed: u64,
    pub bound: i64,
    pub z_generators: Vec<GeneratorDoc>,
    pub ztilde_generators: Vec<GeneratorDoc>,
    pub vanishing: Vec<VanishingDoc>,
    pub z_rank: RankDoc,
    pub ztilde_rank: RankDoc,
    /// Certified via the sufficient condition: full-rank differential span at a regular point.
    pub completeness: Vec<CompletenessDoc>,
    pub rel_mf: Vec<RelMfDoc>,
    pub ztilde_pairs: PairsDoc,
    pub checks_pass: bool,
    pub verdict: &'static str,
    pub exit_code: i32,
}
