//! Text formats for structure constants and lists of vectors.
//!
//! Structure constants: one record `i j k c` per line meaning the
//! coefficient of `e_k` in `[e_i, e_j]` is `c` (1-based, `c` rational
//! `p/q`). Records for `(j, i, k)` are filled in by antisymmetry. Optional
//! header lines `dim N` and `labels a b c ...`; `#` starts a comment.
//!
//! Vector lists: one vector per line, entries separated by whitespace.

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::rational::{fmt_q, parse_q, Q};

use super::{Family, LieAlgebra};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(n, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((n + 1, line))
    })
}

pub fn parse_structure_constants(text: &str) -> Result<LieAlgebra> {
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut records: Vec<(usize, usize, usize, Q)> = Vec::new();
    for (n, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "dim" => {
                let d = fields.get(1).and_then(|d| d.parse().ok()).filter(|d| *d > 0);
                dim = Some(d.ok_or_else(|| Error::Parse(format!("line {n}: bad dim line")))?);
            }
            "labels" => labels = Some(fields[1..].iter().map(|s| s.to_string()).collect()),
            _ => {
                if fields.len() != 4 {
                    return Err(Error::Parse(format!("line {n}: expected `i j k value`")));
                }
                let idx = |s: &str| -> Result<usize> {
                    match s.parse::<usize>() {
                        Ok(i) if i >= 1 => Ok(i - 1),
                        _ => Err(Error::Parse(format!("line {n}: bad index {s:?}"))),
                    }
                };
                records.push((idx(fields[0])?, idx(fields[1])?, idx(fields[2])?, parse_q(fields[3])?));
            }
        }
    }
    let max_index = records.iter().map(|r| r.0.max(r.1).max(r.2) + 1).max().unwrap_or(0);
    let dim = match (dim, &labels) {
        (Some(d), _) => d,
        (None, Some(l)) => l.len(),
        (None, None) => max_index,
    };
    if dim == 0 {
        return Err(Error::Parse("empty structure-constant file".into()));
    }
    if max_index > dim {
        return Err(Error::Parse(format!("index {max_index} exceeds dimension {dim}")));
    }
    let labels = labels.unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect());
    if labels.len() != dim {
        return Err(Error::Parse(format!("{} labels for dimension {dim}", labels.len())));
    }
    let mut given = vec![false; dim * dim * dim];
    let mut brackets = vec![zero_vector(dim); dim * dim];
    for (i, j, k, c) in &records {
        let at = (i * dim + j) * dim + k;
        if given[at] {
            return Err(Error::Parse(format!("duplicate record {} {} {}", i + 1, j + 1, k + 1)));
        }
        given[at] = true;
        brackets[i * dim + j][*k] = c.clone();
    }
    for (i, j, k, c) in &records {
        if !given[(j * dim + i) * dim + k] {
            brackets[j * dim + i][*k] = -c.clone();
        }
    }
    LieAlgebra::from_brackets(labels, brackets, Family::Custom)
}

pub fn write_structure_constants(g: &LieAlgebra) -> String {
    let mut out = format!("dim {}\nlabels {}\n", g.dim(), g.labels().join(" "));
    for (i, j, k, c) in g.nonzero_constants() {
        if i < j {
            out.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, k + 1, fmt_q(&c)));
        }
    }
    out
}

pub fn parse_vectors(text: &str, dim: usize) -> Result<Vec<Vector>> {
    content_lines(text)
        .map(|(n, line)| {
            let v: Vec<Q> = line.split_whitespace().map(parse_q).collect::<Result<_>>()?;
            if v.len() != dim {
                return Err(Error::Parse(format!("line {n}: {} entries, expected {dim}", v.len())));
            }
            Ok(v)
        })
        .collect()
}

pub fn write_vectors(vectors: &[Vector]) -> String {
    vectors.iter().map(|v| v.iter().map(fmt_q).collect::<Vec<_>>().join(" ") + "\n").collect()
}
