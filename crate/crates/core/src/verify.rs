//! Accuracy verification: the Wronskian-combination tables computed in
//! extended precision, a Wronskian scan of the dispatcher, and the exact
//! coefficient identities.

use crate::bigfloat::{BigFloat, DEFAULT_PREC};
use crate::dispatch::{self, EvalOptions};
use crate::error::{Error, Result};
use crate::exactpoly::{appendix_fk, generate_phi, CoeffTables};
use crate::poly::{q, qi, Rational, RationalPoly, Var};
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    /// Olver's oscillatory expansions, |t| < 1.
    T51,
    /// Modified expansions beyond the turning point, t > 1.
    T52,
    /// Modified expansions for positive a, t ≥ 0.
    T53,
}

impl TableId {
    pub fn label(self) -> &'static str {
        match self {
            TableId::T51 => "5.1",
            TableId::T52 => "5.2",
            TableId::T53 => "5.3",
        }
    }

    /// Terms per constituent series used for the printed table.
    pub fn default_terms(self) -> usize {
        match self {
            TableId::T51 => 3,
            _ => 5,
        }
    }

    /// The printed grid: (μ values, t values, entries[t][μ]).
    pub fn published(
        self,
    ) -> (
        &'static [&'static str],
        &'static [&'static str],
        &'static [[f64; 5]],
    ) {
        match self {
            TableId::T51 => (&PUBLISHED_MU, &PUBLISHED_T51, &PUBLISHED_51),
            TableId::T52 => (&PUBLISHED_MU, &PUBLISHED_T52, &PUBLISHED_52),
            TableId::T53 => (&PUBLISHED_MU, &PUBLISHED_T53, &PUBLISHED_53),
        }
    }
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "5.1" => Ok(TableId::T51),
            "5.2" => Ok(TableId::T52),
            "5.3" => Ok(TableId::T53),
            _ => Err(Error::Domain(format!(
                "unknown table {s:?}; expected 5.1, 5.2 or 5.3"
            ))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub const PUBLISHED_MU: [&str; 5] = ["5", "10", "25", "50", "100"];

pub const PUBLISHED_T51: [&str; 10] = [
    "0.00", "0.10", "0.20", "0.30", "0.40", "0.50", "0.60", "0.70", "0.80", "0.90",
];

#[rustfmt::skip]
pub const PUBLISHED_51: [[f64; 5]; 10] = [
    [0.32e-09, 0.78e-13, 0.13e-17, 0.32e-21, 0.78e-25],
    [0.26e-09, 0.63e-13, 0.11e-17, 0.26e-21, 0.63e-25],
    [0.81e-10, 0.20e-13, 0.33e-18, 0.82e-22, 0.20e-25],
    [0.16e-08, 0.39e-12, 0.65e-17, 0.16e-20, 0.39e-24],
    [0.88e-08, 0.22e-11, 0.36e-16, 0.89e-20, 0.22e-23],
    [0.51e-07, 0.13e-10, 0.21e-15, 0.52e-19, 0.13e-22],
    [0.40e-06, 0.99e-10, 0.17e-14, 0.40e-18, 0.99e-22],
    [0.53e-05, 0.13e-08, 0.22e-13, 0.54e-17, 0.13e-20],
    [0.20e-03, 0.50e-07, 0.84e-12, 0.20e-15, 0.50e-19],
    [0.35e-00, 0.24e-04, 0.41e-09, 0.10e-12, 0.25e-16],
];

pub const PUBLISHED_T52: [&str; 10] = [
    "1.1", "1.2", "1.3", "1.4", "1.5", "2.0", "2.5", "5.0", "10.0", "25.0",
];

#[rustfmt::skip]
pub const PUBLISHED_52: [[f64; 5]; 10] = [
    [0.51e-01, 0.48e-05, 0.72e-10, 0.18e-13, 0.43e-17],
    [0.39e-04, 0.79e-08, 0.13e-12, 0.32e-16, 0.78e-20],
    [0.83e-06, 0.19e-09, 0.32e-14, 0.78e-18, 0.19e-21],
    [0.56e-07, 0.13e-10, 0.23e-15, 0.55e-19, 0.13e-22],
    [0.71e-08, 0.17e-11, 0.29e-16, 0.70e-20, 0.17e-23],
    [0.10e-10, 0.25e-14, 0.43e-19, 0.10e-22, 0.25e-26],
    [0.21e-12, 0.52e-16, 0.87e-21, 0.21e-24, 0.52e-28],
    [0.12e-16, 0.28e-20, 0.48e-25, 0.12e-28, 0.28e-32],
    [0.20e-20, 0.48e-24, 0.81e-29, 0.20e-32, 0.48e-36],
    [0.30e-25, 0.73e-29, 0.12e-33, 0.30e-37, 0.73e-41],
];

pub const PUBLISHED_T53: [&str; 10] = [
    "0.00", "0.25", "0.50", "0.75", "1.0", "1.5", "2.0", "2.5", "5.0", "10.0",
];

#[rustfmt::skip]
pub const PUBLISHED_53: [[f64; 5]; 10] = [
    [0.32e-09, 0.78e-13, 0.13e-17, 0.32e-21, 0.78e-25],
    [0.12e-09, 0.28e-13, 0.47e-18, 0.12e-21, 0.28e-25],
    [0.45e-11, 0.11e-14, 0.19e-19, 0.46e-23, 0.11e-26],
    [0.57e-11, 0.14e-14, 0.24e-19, 0.58e-23, 0.14e-26],
    [0.27e-11, 0.65e-15, 0.11e-19, 0.27e-23, 0.65e-27],
    [0.29e-13, 0.70e-17, 0.12e-21, 0.29e-25, 0.70e-29],
    [0.20e-13, 0.48e-17, 0.81e-22, 0.20e-25, 0.48e-29],
    [0.43e-14, 0.11e-17, 0.18e-22, 0.43e-26, 0.11e-29],
    [0.45e-17, 0.11e-20, 0.18e-25, 0.45e-29, 0.11e-32],
    [0.16e-20, 0.38e-24, 0.64e-29, 0.16e-32, 0.38e-36],
];

/// Allowed multiplicative deviation from a two-digit printed entry.
pub const PUBLISHED_FACTOR: f64 = 3.0;

/// Exact value of a decimal literal such as `-12.5`, `0.90` or `1e-3`.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        Rational::from_integer(digits * ten.pow(scale as u32))
    } else {
        Rational::new(digits, ten.pow((-scale) as u32))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

fn tables_for(order: usize) -> Result<Arc<CoeffTables>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CoeffTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&order) {
        return Ok(t.clone());
    }
    let t = Arc::new(CoeffTables::build(order)?);
    cache.lock().unwrap().insert(order, t.clone());
    Ok(t)
}

fn poly_at(p: &RationalPoly, x: &BigFloat) -> BigFloat {
    let prec = x.prec();
    p.coeffs()
        .iter()
        .rev()
        .fold(BigFloat::zero(prec), |acc, c| {
            &(&acc * x) + &BigFloat::from_rational(c, prec)
        })
}

fn bf(r: &Rational, prec: u32) -> BigFloat {
    BigFloat::from_rational(r, prec)
}

fn check_terms(terms: usize) -> Result<()> {
    if (1..=12).contains(&terms) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "terms must lie in 1..=12, got {terms}"
        )))
    }
}

fn check_mu(mu: &Rational) -> Result<()> {
    if mu.is_positive() {
        Ok(())
    } else {
        Err(Error::Domain(format!("mu must be positive, got {mu}")))
    }
}

/// Δ for Olver's oscillatory expansions: the Wronskian combination
/// Σu_even·Σv_even + Σu_odd·Σv_odd divided by 1 - 1/(576μ⁴) + 2021/(2488320μ⁸).
pub fn delta_51(mu: &Rational, t: &Rational, terms: usize, prec: u32) -> Result<BigFloat> {
    check_terms(terms)?;
    check_mu(mu)?;
    if t.abs() >= qi(1) {
        return Err(Error::Domain(format!("|t| < 1 required, got t = {t}")));
    }
    let tab = tables_for(2 * terms - 1)?;
    let w = bf(&(qi(1) - t * t), prec);
    let tb = bf(t, prec);
    let mu2 = bf(&(mu * mu), prec);
    // x_k = u_k(t) / ((1-t²)^{3k/2} μ^{2k}), signs (-1)^{⌊k/2⌋}
    let step = &(&(&w * &w) * &w).sqrt() * &mu2;
    let mut scale = BigFloat::from_i64(1, prec);
    let mut sums = [
        BigFloat::zero(prec),
        BigFloat::zero(prec),
        BigFloat::zero(prec),
        BigFloat::zero(prec),
    ];
    for k in 0..2 * terms {
        let mut eu = &poly_at(&tab.u[k], &tb) / &scale;
        let mut ev = &poly_at(&tab.v[k], &tb) / &scale;
        if (k / 2) % 2 == 1 {
            eu = -eu;
            ev = -ev;
        }
        let j = 2 * (k % 2);
        sums[j] = &sums[j] + &eu;
        sums[j + 1] = &sums[j + 1] + &ev;
        scale = &scale * &step;
    }
    let wr = &(&sums[0] * &sums[1]) + &(&sums[2] * &sums[3]);
    let m4 = &mu2 * &mu2;
    let norm = &(&BigFloat::from_i64(1, prec)
        - &(&BigFloat::from_i64(1, prec) / &(&BigFloat::from_i64(576, prec) * &m4)))
        + &(&BigFloat::from_i64(2021, prec)
            / &(&BigFloat::from_i64(2_488_320, prec) * &(&m4 * &m4)));
    Ok((&(&wr / &norm) - &BigFloat::from_i64(1, prec)).abs())
}

/// Σ_s sign_s c_s / μ^{2s} over the first `terms` polynomials at x.
fn modified_sum(
    polys: &[RationalPoly],
    x: &BigFloat,
    mu2: &BigFloat,
    terms: usize,
    alternate: bool,
) -> BigFloat {
    let prec = x.prec();
    let mut acc = BigFloat::zero(prec);
    let mut scale = BigFloat::from_i64(1, prec);
    for (s, p) in polys.iter().take(terms).enumerate() {
        let mut term = &poly_at(p, x) / &scale;
        if alternate && s % 2 == 1 {
            term = -term;
        }
        acc = &acc + &term;
        scale = &scale * mu2;
    }
    acc
}

/// ½(FQ + GP) with F, G the direct and P, Q the alternating sums of φ_s, ψ_s.
/// The positive-a variant swaps which pair alternates, leaving the
/// combination unchanged.
fn half_wronskian(tau: &BigFloat, mu: &Rational, terms: usize) -> Result<BigFloat> {
    let prec = tau.prec();
    let tab = tables_for(terms.max(1))?;
    let mu2 = bf(&(mu * mu), prec);
    let f = modified_sum(&tab.phi, tau, &mu2, terms, false);
    let p = modified_sum(&tab.phi, tau, &mu2, terms, true);
    let g = modified_sum(&tab.psi, tau, &mu2, terms, false);
    let qq = modified_sum(&tab.psi, tau, &mu2, terms, true);
    let w = &(&f * &qq) + &(&g * &p);
    Ok((&w.ldexp(-1) - &BigFloat::from_i64(1, prec)).abs())
}

/// Δ = |½W - 1| for the modified expansions with τ = ½(t/√(t²-1) - 1), t > 1.
pub fn delta_52(mu: &Rational, t: &Rational, terms: usize, prec: u32) -> Result<BigFloat> {
    check_terms(terms)?;
    check_mu(mu)?;
    if t <= &qi(1) {
        return Err(Error::Domain(format!("t > 1 required, got t = {t}")));
    }
    let tb = bf(t, prec);
    let r = bf(&(t * t - qi(1)), prec).sqrt();
    let tau = (&(&tb / &r) - &BigFloat::from_i64(1, prec)).ldexp(-1);
    half_wronskian(&tau, mu, terms)
}

/// Δ = |½W - 1| for positive a with τ̃ = ½(t/√(1+t²) - 1), t ≥ 0.
pub fn delta_53(mu: &Rational, t: &Rational, terms: usize, prec: u32) -> Result<BigFloat> {
    check_terms(terms)?;
    check_mu(mu)?;
    if t.is_negative() {
        return Err(Error::Domain(format!("t >= 0 required, got t = {t}")));
    }
    let tb = bf(t, prec);
    let r = bf(&(t * t + qi(1)), prec).sqrt();
    let tau = (&(&tb / &r) - &BigFloat::from_i64(1, prec)).ldexp(-1);
    half_wronskian(&tau, mu, terms)
}

pub fn delta(
    which: TableId,
    mu: &Rational,
    t: &Rational,
    terms: usize,
    prec: u32,
) -> Result<BigFloat> {
    match which {
        TableId::T51 => delta_51(mu, t, terms, prec),
        TableId::T52 => delta_52(mu, t, terms, prec),
        TableId::T53 => delta_53(mu, t, terms, prec),
    }
}

#[derive(Debug, Clone)]
pub struct DeltaGrid {
    pub which: TableId,
    /// Decimal literals as given.
    pub mu_values: Vec<String>,
    pub t_values: Vec<String>,
    pub terms: usize,
    pub prec: u32,
    /// `delta[i][j]` at t_values[i], mu_values[j].
    pub delta: Vec<Vec<BigFloat>>,
}

fn parse_all(v: &[&str]) -> Result<Vec<Rational>> {
    v.iter()
        .map(|s| parse_decimal(s).ok_or_else(|| Error::Domain(format!("not a decimal: {s:?}"))))
        .collect()
}

/// Δ over a grid; rows are computed on separate threads.
pub fn delta_grid(
    which: TableId,
    mu_values: &[&str],
    t_values: &[&str],
    terms: usize,
    prec: u32,
) -> Result<DeltaGrid> {
    let mus = parse_all(mu_values)?;
    let ts = parse_all(t_values)?;
    // warm the coefficient cache once rather than racing on it
    tables_for(if which == TableId::T51 {
        2 * terms.max(1) - 1
    } else {
        terms.max(1)
    })?;
    let rows: Vec<Result<Vec<BigFloat>>> = std::thread::scope(|sc| {
        let handles: Vec<_> = ts
            .iter()
            .map(|t| {
                let mus = &mus;
                sc.spawn(move || {
                    mus.iter()
                        .map(|m| delta(which, m, t, terms, prec))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("delta worker panicked"))
            .collect()
    });
    Ok(DeltaGrid {
        which,
        mu_values: mu_values.iter().map(|s| s.to_string()).collect(),
        t_values: t_values.iter().map(|s| s.to_string()).collect(),
        terms,
        prec,
        delta: rows.into_iter().collect::<Result<_>>()?,
    })
}

/// The printed grid of a table with its printed number of terms.
pub fn published_grid(which: TableId, prec: u32) -> Result<DeltaGrid> {
    let (mu, t, _) = which.published();
    delta_grid(which, mu, t, which.default_terms(), prec)
}

pub fn delta_table_51(mu_values: &[&str], t_values: &[&str]) -> Result<DeltaGrid> {
    delta_grid(TableId::T51, mu_values, t_values, 3, DEFAULT_PREC)
}

pub fn delta_table_52_53(
    mu_values: &[&str],
    t_values: &[&str],
    which: TableId,
) -> Result<DeltaGrid> {
    if which == TableId::T51 {
        return Err(Error::Domain("use delta_table_51 for table 5.1".into()));
    }
    delta_grid(which, mu_values, t_values, 5, DEFAULT_PREC)
}

impl DeltaGrid {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("mu,t,delta\n");
        for (i, t) in self.t_values.iter().enumerate() {
            for (j, m) in self.mu_values.iter().enumerate() {
                s.push_str(&format!("{m},{t},{}\n", self.delta[i][j].to_sci_string(6)));
            }
        }
        s
    }

    /// Printed-style grid: one row per t, one column per μ.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "Table {} (terms = {}, precision = {} bits)\n",
            self.which, self.terms, self.prec
        );
        s.push_str(&format!("{:>8}", "t \\ mu"));
        for m in &self.mu_values {
            s.push_str(&format!("{m:>12}"));
        }
        s.push('\n');
        for (i, t) in self.t_values.iter().enumerate() {
            s.push_str(&format!("{t:>8}"));
            for d in &self.delta[i] {
                s.push_str(&format!("{:>12}", d.to_sci_string(2)));
            }
            s.push('\n');
        }
        s
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.delta
            .iter()
            .map(|r| r.iter().map(BigFloat::to_f64).collect())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CellComparison {
    pub mu: String,
    pub t: String,
    pub computed: f64,
    pub published: f64,
    pub ratio: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub which: TableId,
    pub cells: Vec<CellComparison>,
}

impl Comparison {
    pub fn pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn worst_ratio(&self) -> f64 {
        self.cells
            .iter()
            .map(|c| {
                if c.ratio >= 1.0 {
                    c.ratio
                } else {
                    1.0 / c.ratio
                }
            })
            .fold(1.0, f64::max)
    }

    pub fn report(&self) -> String {
        let mut s = format!(
            "{:>8} {:>6} {:>12} {:>12} {:>8}  verdict\n",
            "t", "mu", "computed", "published", "ratio"
        );
        for c in &self.cells {
            s.push_str(&format!(
                "{:>8} {:>6} {:>12.2e} {:>12.2e} {:>8.3}  {}\n",
                c.t,
                c.mu,
                c.computed,
                c.published,
                c.ratio,
                if c.pass { "PASS" } else { "FAIL" }
            ));
        }
        let n_pass = self.cells.iter().filter(|c| c.pass).count();
        s.push_str(&format!(
            "Table {}: {}/{} cells within a factor {} of the printed values (worst ratio {:.3}); verdict {}\n",
            self.which,
            n_pass,
            self.cells.len(),
            PUBLISHED_FACTOR,
            self.worst_ratio(),
            if self.pass() { "PASS" } else { "FAIL" }
        ));
        s
    }
}

/// Compares a grid computed on the printed axes with the printed entries.
pub fn compare_with_published(grid: &DeltaGrid) -> Result<Comparison> {
    let (mu, t, vals) = grid.which.published();
    let mut cells = Vec::new();
    for (i, ts) in grid.t_values.iter().enumerate() {
        for (j, ms) in grid.mu_values.iter().enumerate() {
            let pi = t.iter().position(|x| parse_decimal(x) == parse_decimal(ts));
            let pj = mu
                .iter()
                .position(|x| parse_decimal(x) == parse_decimal(ms));
            let (Some(pi), Some(pj)) = (pi, pj) else {
                return Err(Error::Domain(format!(
                    "cell (mu={ms}, t={ts}) is not in the printed table"
                )));
            };
            let published = vals[pi][pj];
            let computed = grid.delta[i][j].to_f64();
            let ratio = computed / published;
            let pass =
                ratio.is_finite() && ratio <= PUBLISHED_FACTOR && ratio >= 1.0 / PUBLISHED_FACTOR;
            cells.push(CellComparison {
                mu: ms.clone(),
                t: ts.clone(),
                computed,
                published,
                ratio,
                pass,
            });
        }
    }
    Ok(Comparison {
        which: grid.which,
        cells,
    })
}

/// Along every row Δ decreases with μ.
pub fn rows_decrease_with_mu(grid: &DeltaGrid) -> bool {
    grid.delta
        .iter()
        .all(|r| r.windows(2).all(|w| w[1].lt(&w[0])))
}

/// Along every column Δ decreases with t, for t ≥ `t_min`.
pub fn columns_decrease_with_t(grid: &DeltaGrid, t_min: &Rational) -> bool {
    let keep: Vec<usize> = (0..grid.t_values.len())
        .filter(|&i| parse_decimal(&grid.t_values[i]).is_some_and(|t| &t >= t_min))
        .collect();
    (0..grid.mu_values.len()).all(|j| {
        keep.windows(2)
            .all(|w| grid.delta[w[1]][j].lt(&grid.delta[w[0]][j]))
    })
}

// ---------------------------------------------------------------------------
// Wronskian scan of the dispatcher.

#[derive(Debug, Clone)]
pub struct ScanGrid {
    pub a_values: Vec<f64>,
    pub z_values: Vec<f64>,
}

impl Default for ScanGrid {
    /// 20 × 20 log-spaced points: a = ±0.5·10⁴^{k/9}, z = ±0.2·10³^{k/9}.
    fn default() -> Self {
        let sym = |c: f64, r: f64| {
            let pos: Vec<f64> = (0..10).map(|k| c * r.powf(k as f64 / 9.0)).collect();
            pos.iter()
                .rev()
                .map(|x| -x)
                .chain(pos.iter().copied())
                .collect()
        };
        ScanGrid {
            a_values: sym(0.5, 1e4),
            z_values: sym(0.2, 1e3),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanCell {
    pub a: f64,
    pub z: f64,
    pub region: Option<&'static str>,
    pub residual: Option<f64>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    pub cells: Vec<ScanCell>,
    pub max: f64,
    pub mean: f64,
    pub worst: Option<(f64, f64)>,
}

impl ScanReport {
    pub fn unsupported(&self) -> Vec<&ScanCell> {
        self.cells.iter().filter(|c| c.residual.is_none()).collect()
    }

    pub fn summary(&self) -> String {
        let worst = match self.worst {
            Some((a, z)) => format!("a={a}, z={z}"),
            None => "none".into(),
        };
        format!(
            "wronskian scan: {} cells, max residual {:.3e}, mean {:.3e}, worst at {}, unsupported {}",
            self.cells.len(),
            self.max,
            self.mean,
            worst,
            self.unsupported().len()
        )
    }
}

/// Relative residual of U V' - U' V = √(2/π) at every grid cell.
pub fn wronskian_scan(grid: &ScanGrid, opts: &EvalOptions) -> ScanReport {
    let mut rep = ScanReport::default();
    let mut sum = 0.0;
    let mut n = 0usize;
    for &a in &grid.a_values {
        for &z in &grid.z_values {
            let cell = match dispatch::evaluate(a, z, opts) {
                Ok(f) => {
                    let r = f.wronskian_residual();
                    sum += r;
                    n += 1;
                    if r > rep.max || rep.worst.is_none() {
                        rep.max = rep.max.max(r);
                        rep.worst = Some((a, z));
                    }
                    ScanCell {
                        a,
                        z,
                        region: Some(f.region.name()),
                        residual: Some(r),
                        failure: None,
                    }
                }
                Err(e) => ScanCell {
                    a,
                    z,
                    region: None,
                    residual: None,
                    failure: Some(e.to_string()),
                },
            };
            rep.cells.push(cell);
        }
    }
    rep.mean = if n > 0 { sum / n as f64 } else { 0.0 };
    rep
}

// ---------------------------------------------------------------------------
// Coefficient identities.

/// Printed φ_1..φ_3, ψ_1..ψ_3 (in τ) and u_1, u_2 (in t).
pub fn printed_coefficients() -> Vec<(&'static str, usize, RationalPoly)> {
    let p = |var, c: &[i64], num, den| RationalPoly::from_ints(var, c).scale(&q(num, den));
    vec![
        ("phi", 1, p(Var::Tau, &[0, 9, 30, 20], -1, 12)),
        (
            "phi",
            2,
            p(Var::Tau, &[0, 0, 945, 8028, 19404, 18480, 6160], 1, 288),
        ),
        (
            "phi",
            3,
            p(
                Var::Tau,
                &[
                    0, 0, 0, 1403325, 20545650, 94064328, 200166120, 220540320, 122522400, 27227200,
                ],
                -1,
                51840,
            ),
        ),
        ("psi", 1, p(Var::Tau, &[0, 15, 42, 28], 1, 12)),
        (
            "psi",
            2,
            p(Var::Tau, &[0, 0, 1215, 9684, 23028, 21840, 7280], -1, 288),
        ),
        (
            "psi",
            3,
            p(
                Var::Tau,
                &[
                    0, 0, 0, 1658475, 23489190, 106122312, 224494200, 246708000, 136936800,
                    30430400,
                ],
                1,
                51840,
            ),
        ),
        ("u", 1, p(Var::T, &[0, -6, 0, 1], 1, 24)),
        ("u", 2, p(Var::T, &[145, 0, 249, 0, -9], 1, 1152)),
    ]
}

/// Names of printed polynomials that differ from the generated ones.
pub fn coefficient_mismatches() -> Result<Vec<String>> {
    let tab = tables_for(3)?;
    let mut bad = Vec::new();
    for (family, k, printed) in printed_coefficients() {
        let gen = match family {
            "phi" => &tab.phi[k],
            "psi" => &tab.psi[k],
            _ => &tab.u[k],
        };
        if gen.coeffs() != printed.coeffs() {
            bad.push(format!("{family}_{k}"));
        }
    }
    Ok(bad)
}

/// |u_s(t) - (t²-1)^{3s/2} Σ_j g_{s-j} φ_j(τ)| relative to the larger side, t > 1.
///
/// Evaluated with 128-bit floats: in plain f64 the high-degree φ_j lose
/// about 12 digits to cancellation near t = 1.
pub fn u_phi_identity_residual(s: usize, t: f64) -> Result<f64> {
    if !(t > 1.0) {
        return Err(Error::Domain(format!("t > 1 required, got {t}")));
    }
    const P: u32 = 128;
    let tab = tables_for(s.max(1))?;
    let tb = BigFloat::from_f64(t, P);
    let w = &(&tb * &tb) - &BigFloat::from_i64(1, P);
    let r = w.sqrt();
    let tau = (&(&tb / &r) - &BigFloat::from_i64(1, P)).ldexp(-1);
    let mut rhs = BigFloat::zero(P);
    for j in 0..=s {
        rhs = &rhs + &(&bf(&tab.g[s - j], P) * &poly_at(&tab.phi[j], &tau));
    }
    // (t²-1)^{3s/2} = (w·r)^s
    rhs = &rhs * &(&w * &r).powi(s as i64);
    let lhs = poly_at(&tab.u[s], &tb);
    let big = if lhs.cmp_abs(&rhs).is_ge() {
        lhs.abs()
    } else {
        rhs.abs()
    };
    if big.is_zero() {
        return Ok(0.0);
    }
    Ok((&(&lhs - &rhs) / &big).abs().to_f64())
}

/// Orders k ≤ `k_max` at which φ̃_k(σ) ≠ φ_k(σ - 1) exactly, over a few σ in (½, 1).
pub fn phi_tilde_mismatches(k_max: usize) -> Result<Vec<(usize, Rational)>> {
    let phi = generate_phi(k_max);
    let mut bad = Vec::new();
    for sigma in [q(3, 5), q(2, 3), q(3, 4), q(7, 8), q(19, 20)] {
        let pipe = appendix_fk(k_max, &sigma)?;
        for (k, p) in phi.iter().enumerate() {
            if pipe.phi_tilde(k) != p.eval(&(&sigma - qi(1))) {
                bad.push((k, sigma.clone()));
            }
        }
    }
    Ok(bad)
}

/// Relative difference of two BigFloats as an `f64`.
pub fn rel_diff(a: &BigFloat, b: &BigFloat) -> f64 {
    if b.is_zero() {
        return if a.is_zero() { 0.0 } else { f64::INFINITY };
    }
    (&(a - b) / b).abs().to_f64()
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.into(),
        pass,
        detail,
    }
}

/// The full self-check: coefficient identities, table reproduction and the
/// Wronskian scan.
pub fn run_checks(prec: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    match coefficient_mismatches() {
        Ok(b) => out.push(check(
            "printed coefficients",
            b.is_empty(),
            format!("mismatches: {b:?}"),
        )),
        Err(e) => out.push(check("printed coefficients", false, e.to_string())),
    }
    let mut worst: f64 = 0.0;
    let mut err = None;
    for s in 0..=4 {
        for i in 0..4 {
            let t = 1.05 + 1.3 * i as f64 + 0.1 * s as f64;
            match u_phi_identity_residual(s, t) {
                Ok(r) => worst = worst.max(r),
                Err(e) => err = Some(e.to_string()),
            }
        }
    }
    out.push(check(
        "u_s from g and phi",
        err.is_none() && worst <= 1e-12,
        err.unwrap_or_else(|| format!("max residual {worst:.2e} over 20 points")),
    ));
    match phi_tilde_mismatches(4) {
        Ok(b) => out.push(check(
            "phi~_k(sigma) = phi_k(sigma-1)",
            b.is_empty(),
            format!("mismatches: {}", b.len()),
        )),
        Err(e) => out.push(check(
            "phi~_k(sigma) = phi_k(sigma-1)",
            false,
            e.to_string(),
        )),
    }
    for which in [TableId::T51, TableId::T52, TableId::T53] {
        let name = format!("table {which}");
        match published_grid(which, prec).and_then(|g| compare_with_published(&g)) {
            Ok(c) => out.push(check(
                &name,
                c.pass(),
                format!("worst ratio {:.3}", c.worst_ratio()),
            )),
            Err(e) => out.push(check(&name, false, e.to_string())),
        }
    }
    let rep = wronskian_scan(&ScanGrid::default(), &EvalOptions::default());
    out.push(check(
        "wronskian scan",
        rep.max <= 1e-9 && rep.unsupported().is_empty(),
        rep.summary(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(which: TableId, mu: &str, t: &str) -> f64 {
        let mu = parse_decimal(mu).unwrap();
        let t = parse_decimal(t).unwrap();
        delta(which, &mu, &t, which.default_terms(), DEFAULT_PREC)
            .unwrap()
            .to_f64()
    }

    fn within_factor(x: f64, published: f64) -> bool {
        x <= PUBLISHED_FACTOR * published && x >= published / PUBLISHED_FACTOR
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_decimal("1.1"), Some(q(11, 10)));
        assert_eq!(parse_decimal("-12.5"), Some(q(-25, 2)));
        assert_eq!(parse_decimal("0.90"), Some(q(9, 10)));
        assert_eq!(parse_decimal("25"), Some(qi(25)));
        assert_eq!(parse_decimal("2.5e-1"), Some(q(1, 4)));
        assert_eq!(parse_decimal(".5"), Some(q(1, 2)));
        assert_eq!(parse_decimal("1.x"), None);
        assert_eq!(parse_decimal("-"), None);
        assert_eq!(parse_decimal("0"), Some(qi(0)));
    }

    #[test]
    fn oscillatory_anchors() {
        assert!(within_factor(d(TableId::T51, "5", "0"), 3.2e-10));
        assert!(within_factor(d(TableId::T51, "100", "0.9"), 2.5e-17));
        assert!(within_factor(d(TableId::T51, "5", "0.9"), 0.35));
        assert!(within_factor(d(TableId::T51, "100", "0"), 7.8e-26));
    }

    #[test]
    fn oscillatory_symmetric_in_t() {
        for t in ["0.3", "0.75"] {
            let a = d(TableId::T51, "10", t);
            let b = d(TableId::T51, "10", &format!("-{t}"));
            assert!((a - b).abs() <= 1e-12 * a, "{t}: {a} vs {b}");
        }
    }

    #[test]
    fn modified_anchors() {
        assert!(within_factor(d(TableId::T52, "5", "1.1"), 5.1e-2));
        assert!(within_factor(d(TableId::T52, "25", "25.0"), 1.2e-34));
        assert!(within_factor(d(TableId::T52, "5", "2.0"), 1.0e-11));
        assert!(within_factor(d(TableId::T52, "100", "25.0"), 7.3e-42));
        assert!(within_factor(d(TableId::T53, "10", "0.25"), 2.8e-14));
        assert!(within_factor(d(TableId::T53, "5", "0"), 3.2e-10));
        assert!(within_factor(d(TableId::T53, "10", "10.0"), 3.8e-25));
    }

    #[test]
    fn domains() {
        let mu = qi(5);
        assert!(delta_51(&mu, &qi(1), 3, 128).is_err());
        assert!(delta_52(&mu, &qi(1), 5, 128).is_err());
        assert!(delta_53(&mu, &qi(-1), 5, 128).is_err());
        assert!(delta_52(&qi(0), &qi(2), 5, 128).is_err());
        assert!(delta_52(&mu, &qi(2), 0, 128).is_err());
        assert!(delta_table_52_53(&["5"], &["2"], TableId::T51).is_err());
    }

    #[test]
    fn precision_is_sufficient() {
        for (which, mu, t) in [
            (TableId::T52, "100", "25.0"),
            (TableId::T51, "100", "0.2"),
            (TableId::T53, "100", "10.0"),
        ] {
            let m = parse_decimal(mu).unwrap();
            let tt = parse_decimal(t).unwrap();
            let lo = delta(which, &m, &tt, which.default_terms(), 256).unwrap();
            let hi = delta(which, &m, &tt, which.default_terms(), 320).unwrap();
            assert!(rel_diff(&lo, &hi) < 1e-10, "{which} ({mu},{t})");
        }
    }

    #[test]
    fn grid_shape_and_csv() {
        let g = delta_table_51(&["5", "10"], &["0.00", "0.50", "0.90"]).unwrap();
        assert_eq!(g.delta.len(), 3);
        assert!(g
            .delta
            .iter()
            .all(|r| r.len() == 2 && r.iter().all(|x| !x.is_negative())));
        let csv = g.to_csv();
        assert!(csv.starts_with("mu,t,delta\n5,0.00,"));
        assert_eq!(csv.lines().count(), 7);
        let c = compare_with_published(&g).unwrap();
        assert_eq!(c.cells.len(), 6);
        let off = delta_table_51(&["7"], &["0.00"]).unwrap();
        assert!(compare_with_published(&off).is_err());
    }

    #[test]
    fn printed_polynomials_reproduced() {
        assert!(coefficient_mismatches().unwrap().is_empty());
    }

    #[test]
    fn u_from_phi_identity() {
        for s in 0..=4 {
            for t in [1.1, 1.7, 3.0, 12.0] {
                assert!(
                    u_phi_identity_residual(s, t).unwrap() <= 1e-12,
                    "s={s} t={t}"
                );
            }
        }
    }

    #[test]
    fn phi_tilde_is_shifted_phi() {
        assert!(phi_tilde_mismatches(4).unwrap().is_empty());
    }

    #[test]
    fn scan_single_and_empty() {
        let one = ScanGrid {
            a_values: vec![-12.5],
            z_values: vec![0.0],
        };
        let r = wronskian_scan(&one, &EvalOptions::default());
        assert_eq!(r.cells.len(), 1);
        assert!(r.max <= 1e-10);
        assert_eq!(r.worst, Some((-12.5, 0.0)));
        let empty = ScanGrid {
            a_values: vec![],
            z_values: vec![1.0],
        };
        let r = wronskian_scan(&empty, &EvalOptions::default());
        assert!(r.cells.is_empty());
        assert_eq!(r.max, 0.0);
        assert_eq!(r.worst, None);
    }

    #[test]
    fn default_scan_grid() {
        let g = ScanGrid::default();
        assert_eq!(g.a_values.len(), 20);
        assert_eq!(g.z_values.len(), 20);
        assert!((g.a_values[19] - 5000.0).abs() < 1e-9);
        assert!((g.z_values[0] + 200.0).abs() < 1e-9);
        assert!((g.a_values[10] - 0.5).abs() < 1e-15);
    }
}
