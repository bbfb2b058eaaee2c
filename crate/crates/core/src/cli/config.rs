//! Run configuration: a TOML file merged with command-line flags, flags winning.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::algebra::{
    cartan_splitting, killing_form, lower_right_sl2_basis, make_splitting, parse_structure_constants, parse_vectors,
    trace_form, Family, InvariantForm, LieAlgebra, Splitting,
};
use crate::error::{Error, Result};
use crate::invariants::{char_poly_invariants, trace_power_invariants, InvariantSet};
use crate::poly::DEFAULT_TERM_CAP;
use crate::sampling::{DEFAULT_BOUND, DEFAULT_SEED};

/// Largest `n` accepted by the Cartan suite unless configured otherwise.
pub const DEFAULT_MAX_N: usize = 4;

/// Every field is optional so that a file and the flags can be layered.
#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub algebra: Option<String>,
    pub split: Option<String>,
    pub invariants: Option<String>,
    pub seed: Option<u64>,
    pub bound: Option<i64>,
    pub term_cap: Option<usize>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub max_n: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut cfg: ConfigFile = toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        // relative file references resolve against the config file
        let base = path.parent().unwrap_or(Path::new("."));
        for spec in [&mut cfg.algebra, &mut cfg.split, &mut cfg.invariants].into_iter().flatten() {
            if is_file_spec(spec) && Path::new(spec.as_str()).is_relative() {
                *spec = base.join(spec.as_str()).to_string_lossy().into_owned();
            }
        }
        Ok(cfg)
    }

    /// `self` overrides `base` field by field.
    pub fn over(self, base: ConfigFile) -> ConfigFile {
        ConfigFile {
            algebra: self.algebra.or(base.algebra),
            split: self.split.or(base.split),
            invariants: self.invariants.or(base.invariants),
            seed: self.seed.or(base.seed),
            bound: self.bound.or(base.bound),
            term_cap: self.term_cap.or(base.term_cap),
            out: self.out.or(base.out),
            jobs: self.jobs.or(base.jobs),
            max_n: self.max_n.or(base.max_n),
        }
    }
}

fn is_file_spec(spec: &str) -> bool {
    Family::parse(spec).is_none() && !matches!(spec, "cartan" | "lower-right-sl2" | "trace-powers" | "char-poly")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub algebra: String,
    pub split: String,
    pub invariants: String,
    pub seed: u64,
    pub bound: i64,
    pub term_cap: usize,
    pub out: PathBuf,
    pub jobs: Option<usize>,
    pub max_n: usize,
}

impl RunConfig {
    pub fn resolve(cfg: ConfigFile, command: &str) -> Result<RunConfig> {
        let bound = cfg.bound.unwrap_or(DEFAULT_BOUND);
        if bound < 1 {
            return Err(Error::InvalidParameter("bound must be at least 1".into()));
        }
        let term_cap = cfg.term_cap.unwrap_or(DEFAULT_TERM_CAP);
        if term_cap == 0 {
            return Err(Error::InvalidParameter("term cap must be positive".into()));
        }
        Ok(RunConfig {
            algebra: cfg.algebra.unwrap_or_else(|| "sl3".into()),
            split: cfg.split.unwrap_or_else(|| "cartan".into()),
            invariants: cfg.invariants.unwrap_or_else(|| "trace-powers".into()),
            seed: cfg.seed.unwrap_or(DEFAULT_SEED),
            bound,
            term_cap,
            out: cfg.out.unwrap_or_else(|| PathBuf::from(command)),
            jobs: cfg.jobs,
            max_n: cfg.max_n.unwrap_or(DEFAULT_MAX_N),
        })
    }
}

/// The objects a run works on, built from a [`RunConfig`].
pub struct Setup {
    pub algebra: LieAlgebra,
    pub form: InvariantForm,
    pub split: Splitting,
    pub invariants: InvariantSet,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

pub fn load_algebra(spec: &str) -> Result<LieAlgebra> {
    match Family::parse(spec) {
        Some(f) => f.build(),
        None => parse_structure_constants(&read(spec)?),
    }
}

/// Trace form for matrix algebras, Killing form otherwise.
pub fn default_form(g: &LieAlgebra) -> Result<InvariantForm> {
    let form = if g.realization().is_some() { trace_form(g)? } else { killing_form(g)? };
    if !form.is_nondegenerate() {
        return Err(Error::Unsupported("no nondegenerate invariant form available".into()));
    }
    Ok(form)
}

pub fn load_split(g: &LieAlgebra, form: &InvariantForm, spec: &str) -> Result<Splitting> {
    match spec {
        "cartan" => cartan_splitting(g),
        "lower-right-sl2" => make_splitting(g, form, lower_right_sl2_basis(g)?),
        path => make_splitting(g, form, parse_vectors(&read(path)?, g.dim())?),
    }
}

pub fn load_invariants(g: &LieAlgebra, spec: &str) -> Result<InvariantSet> {
    match spec {
        "trace-powers" => trace_power_invariants(g),
        "char-poly" => char_poly_invariants(g),
        path => InvariantSet::parse_text(g, &read(path)?),
    }
}

impl Setup {
    pub fn build(cfg: &RunConfig) -> Result<Setup> {
        let algebra = load_algebra(&cfg.algebra)?;
        let form = default_form(&algebra)?;
        let split = load_split(&algebra, &form, &cfg.split)?;
        let invariants = load_invariants(&algebra, &cfg.invariants)?;
        Ok(Setup { algebra, form, split, invariants })
    }
}
