//! End-to-end replay of the `gl_4` with lower-right `sl_2` case, where the
//! algebra of bihomogeneous components fails to be Poisson commutative.
//!
//! Matrices depending on `s` are stored as matrices of polynomials in one
//! variable `x[0] = s`.

use crate::algebra::{build_classical, lower_right_sl2_basis, make_splitting, trace_form, ClassicalKind, Covector, Splitting};
use crate::error::{Error, Result};
use crate::invariants::trace_power_invariants;
use crate::linalg::QMatrix;
use crate::poly::Poly;
use crate::rational::{q, Q};
use crate::subalgebra::{criterion_polynomial, criterion_verdict, generate_z_capped, pairwise_bracket_report, CriterionReport, PairReport};

pub type PolyMatrix = Vec<Vec<Poly>>;

/// The point `gamma`, as a matrix.
pub const GAMMA: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 0, 1, 0], [1, 0, 1, 0], [0, 1, 0, -1]];

/// Expected `gamma_f + s gamma_m`.
pub const PHI_S_GAMMA: [[&str; 4]; 4] = [["s", "0", "0", "s"], ["0", "0", "s", "0"], ["s", "0", "1", "0"], ["0", "s", "0", "-1"]];

/// Expected `(gamma_f + s gamma_m)^2`.
pub const PHI_S_GAMMA_SQUARED: [[&str; 4]; 4] = [
    ["s^2", "s^2", "0", "s^2 - s"],
    ["s^2", "0", "s", "0"],
    ["s^2 + s", "0", "1", "s^2"],
    ["0", "-s", "s^2", "1"],
];

/// Expected lower-right 2x2 block of `(gamma_f + s gamma_m)^3`; the rest is not pinned down.
pub const PHI_S_GAMMA_CUBED_CORNER: [[&str; 2]; 2] = [["1", "s^3"], ["0", "-1"]];

/// Expected `f`-projections, as `(name, matrix)` with `e = E34`, `h = E33 - E44`, `f = E43`.
pub const F_PROJECTIONS: [(&str, [[&str; 2]; 2]); 3] = [
    ("gamma_f = h", [["1", "0"], ["0", "-1"]]),
    ("((phi_s gamma)^2)_f = s^2 (e + f)", [["0", "s^2"], ["s^2", "0"]]),
    ("((phi_s gamma)^3)_f = s^3 e + h", [["1", "s^3"], ["0", "-1"]]),
];

pub fn parse_in_s(text: &str) -> Result<Poly> {
    Poly::parse(&text.replace('s', "x[0]"), 1)
}

pub fn fixture_matrix<const N: usize>(rows: &[[&str; N]; N]) -> Result<PolyMatrix> {
    rows.iter().map(|r| r.iter().map(|e| parse_in_s(e)).collect()).collect()
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Poly::zero(1), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Apply `p_f` coefficientwise in `s` to a polynomial matrix in `gl_4`.
fn project_f(split: &Splitting, m: &PolyMatrix) -> Result<PolyMatrix> {
    let g = split.algebra();
    let n = m.len();
    let max_deg = m.iter().flatten().filter_map(Poly::total_degree).max().unwrap_or(0);
    let mut out = vec![vec![Poly::zero(1); n]; n];
    for d in 0..=max_deg {
        let mut coeff = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                coeff[(i, j)] = m[i][j].coefficient(&[d]);
            }
        }
        let projected = g.element_matrix(&split.project_f(&g.element_from_matrix(&coeff)?))?;
        for i in 0..n {
            for j in 0..n {
                let mut t = Poly::zero(1);
                t.add_term(crate::poly::Monomial::from_exponents(vec![d]), projected[(i, j)].clone());
                out[i][j] = &out[i][j] + &t;
            }
        }
    }
    Ok(out)
}

fn constant_matrix(m: &QMatrix) -> PolyMatrix {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| Poly::constant(1, m[(i, j)].clone())).collect()).collect()
}

fn corner(m: &PolyMatrix) -> PolyMatrix {
    vec![vec![m[2][2].clone(), m[2][3].clone()], vec![m[3][2].clone(), m[3][3].clone()]]
}

fn off_corner_is_zero(m: &PolyMatrix) -> bool {
    (0..4).all(|i| (0..4).all(|j| (i >= 2 && j >= 2) || m[i][j].is_zero()))
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub gamma: QMatrix,
    pub phi_s_gamma: PolyMatrix,
    pub squared: PolyMatrix,
    pub cubed: PolyMatrix,
    pub checks: Vec<Check>,
    /// Criterion polynomial for `(tr X^3, tr X^4)` evaluated at `gamma`, in `(s, s')`.
    pub criterion_at_gamma: Poly,
    pub criterion: CriterionReport,
    pub pairs: PairReport,
}

impl CounterexampleReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn gamma_const(&self) -> PolyMatrix {
        constant_matrix(&self.gamma)
    }
}

pub fn splitting() -> Result<Splitting> {
    let g = build_classical(ClassicalKind::Gl, 4)?;
    let form = trace_form(&g)?;
    make_splitting(&g, &form, lower_right_sl2_basis(&g)?)
}

pub fn gamma_covector(split: &Splitting) -> Result<Covector> {
    let g = split.algebra();
    let form = split.form().ok_or_else(|| Error::Internal("splitting without a form".into()))?;
    let rows: Vec<Vec<Q>> = GAMMA.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
    Ok(form.flat(&g.element_from_matrix(&QMatrix::from_rows(&rows))?))
}

pub fn run(cap: usize, seed: u64) -> Result<CounterexampleReport> {
    let split = splitting()?;
    let g = split.algebra();
    let rows: Vec<Vec<Q>> = GAMMA.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
    let gamma = QMatrix::from_rows(&rows);
    let v = g.element_from_matrix(&gamma)?;
    let gf = g.element_matrix(&split.project_f(&v))?;
    let gm = g.element_matrix(&split.project_m(&v))?;
    let s = Poly::var(1, 0);
    let phi: PolyMatrix = (0..4)
        .map(|i| (0..4).map(|j| &Poly::constant(1, gf[(i, j)].clone()) + &s.scale(&gm[(i, j)])).collect())
        .collect();
    let squared = mat_mul(&phi, &phi);
    let cubed = mat_mul(&squared, &phi);

    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool| checks.push(Check { name: name.to_string(), passed });
    check("phi_s(gamma) matches", phi == fixture_matrix(&PHI_S_GAMMA)?);
    check("phi_s(gamma)^2 matches", squared == fixture_matrix(&PHI_S_GAMMA_SQUARED)?);
    check("phi_s(gamma)^3 corner matches", corner(&cubed) == fixture_matrix(&PHI_S_GAMMA_CUBED_CORNER)?);
    let gamma_const = constant_matrix(&gamma);
    for ((name, expected), m) in F_PROJECTIONS.iter().zip([&gamma_const, &squared, &cubed]) {
        let p = project_f(&split, m)?;
        check(name, off_corner_is_zero(&p) && corner(&p) == fixture_matrix(expected)?);
    }

    let inv = trace_power_invariants(g)?;
    let gamma_cov = gamma_covector(&split)?;
    let (i3, i4) = (2, 3);
    let c = criterion_polynomial(&inv, &split, i3, i4, cap)?;
    let n = g.dim();
    // keep s, s' as the variables x[0], x[1]
    let images: Vec<Poly> = (0..n + 2)
        .map(|k| if k < n { Poly::constant(2, gamma_cov.coords[k].clone()) } else { Poly::var(2, k - n) })
        .collect();
    let criterion_at_gamma = c.substitute(&images);
    let criterion = criterion_verdict(&inv, &split, cap, seed, &[gamma_cov]);
    let z = generate_z_capped(&inv, &split, cap)?;
    let pairs = pairwise_bracket_report(&z, cap, seed);
    Ok(CounterexampleReport { gamma, phi_s_gamma: phi, squared, cubed, checks, criterion_at_gamma, criterion, pairs })
}

pub fn format_matrix(m: &PolyMatrix) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|p| p.to_string().replace("x[0]", "s")).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join("  "))
        .collect::<Vec<_>>()
        .join("\n")
}
