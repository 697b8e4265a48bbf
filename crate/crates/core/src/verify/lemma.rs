//! Grid checks of the orderings between the boundary conditional entropies
//! s, t, q, r that decide which canalizing pair is optimal.

use alloc::vec::Vec;
use core::fmt;

use crate::infomeasure::qrst;
use crate::math;

/// Strict inequalities must hold by more than this.
pub const STRICT_MARGIN: f64 = 1e-12;

/// Crossing identities must hold within this.
pub const CROSSING_TOLERANCE: f64 = 1e-12;

/// Interior points per `mu` used when no count is given.
pub const DEFAULT_POINTS: usize = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// `q` vs `r` on `(-1, -|mu|)`.
    LowerBranch,
    /// `s` vs `t` on `(|mu|, 1)`.
    UpperBranch,
    /// `t` vs `r` (`mu > 0`) or `s` vs `q` (`mu < 0`) on `(-|mu|, |mu|)`.
    MiddleBranch,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::LowerBranch => "lemma 1 (q vs r)",
            Lemma::UpperBranch => "lemma 2 (s vs t)",
            Lemma::MiddleBranch => "lemma 3 (t vs r, s vs q)",
        })
    }
}

/// Expected relation between two values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    Greater,
    Equal,
}

impl Relation {
    fn holds(self, left: f64, right: f64) -> bool {
        match self {
            Relation::Less => right - left > STRICT_MARGIN,
            Relation::Greater => left - right > STRICT_MARGIN,
            Relation::Equal => math::abs(left - right) <= CROSSING_TOLERANCE,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Greater => ">",
            Relation::Equal => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub mu: f64,
    pub f0: f64,
    /// e.g. `"q"`, `"r"`.
    pub names: (&'static str, &'static str),
    pub expected: Relation,
    /// NaN where the function is undefined at `f0`.
    pub values: (f64, f64),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mu={} f0={}: expected {}={} {} {}={}",
            self.mu,
            self.f0,
            self.names.0,
            self.values.0,
            self.expected.symbol(),
            self.names.1,
            self.values.1
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub mu_grid: Vec<f64>,
    pub points: usize,
    /// Number of comparisons made.
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// `{+-0.1, ..., +-0.9}`, negative first.
pub fn default_mu_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (1..=9).rev().map(|j| -(j as f64) / 10.0).collect();
    grid.extend((1..=9).map(|j| j as f64 / 10.0));
    grid
}

/// `count` equally spaced points strictly inside `(lo, hi)`.
pub fn interior_points(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let steps = (count + 1) as f64;
    (1..=count).map(move |j| lo + (hi - lo) * j as f64 / steps)
}

struct Checker {
    report: LemmaReport,
}

impl Checker {
    fn new(lemma: Lemma, mu_grid: &[f64], points: usize) -> Self {
        Checker {
            report: LemmaReport {
                lemma,
                mu_grid: mu_grid.to_vec(),
                points,
                checked: 0,
                counterexamples: Vec::new(),
            },
        }
    }

    fn compare(
        &mut self,
        mu: f64,
        f0: f64,
        names: (&'static str, &'static str),
        values: (Option<f64>, Option<f64>),
        expected: Relation,
    ) {
        self.report.checked += 1;
        let (l, r) = (values.0.unwrap_or(f64::NAN), values.1.unwrap_or(f64::NAN));
        if !expected.holds(l, r) {
            self.report.counterexamples.push(Counterexample {
                mu,
                f0,
                names,
                expected,
                values: (l, r),
            });
        }
    }
}

/// On `-1 < f0 < -|mu|`: `q < r` for `mu > 0`, `q > r` for `mu < 0`; and
/// `q(-1) = r(-1) = 0`.
pub fn verify_lemma1(mu_grid: &[f64], f0_points: usize) -> LemmaReport {
    let mut c = Checker::new(Lemma::LowerBranch, mu_grid, f0_points);
    for &mu in mu_grid.iter().filter(|m| **m != 0.0) {
        let expected = if mu > 0.0 {
            Relation::Less
        } else {
            Relation::Greater
        };
        for f0 in interior_points(-1.0, -math::abs(mu), f0_points) {
            let v = qrst(f0, mu);
            c.compare(mu, f0, ("q", "r"), (v.q, v.r), expected);
        }
        let end = qrst(-1.0, mu);
        c.compare(mu, -1.0, ("q", "0"), (end.q, Some(0.0)), Relation::Equal);
        c.compare(mu, -1.0, ("r", "0"), (end.r, Some(0.0)), Relation::Equal);
    }
    c.report
}

/// On `|mu| < f0 < 1`: `s < t` for `mu > 0`, `s > t` for `mu < 0`; and
/// `s(1) = t(1) = 0`.
pub fn verify_lemma2(mu_grid: &[f64], f0_points: usize) -> LemmaReport {
    let mut c = Checker::new(Lemma::UpperBranch, mu_grid, f0_points);
    for &mu in mu_grid.iter().filter(|m| **m != 0.0) {
        let expected = if mu > 0.0 {
            Relation::Less
        } else {
            Relation::Greater
        };
        for f0 in interior_points(math::abs(mu), 1.0, f0_points) {
            let v = qrst(f0, mu);
            c.compare(mu, f0, ("s", "t"), (v.s, v.t), expected);
        }
        let end = qrst(1.0, mu);
        c.compare(mu, 1.0, ("s", "0"), (end.s, Some(0.0)), Relation::Equal);
        c.compare(mu, 1.0, ("t", "0"), (end.t, Some(0.0)), Relation::Equal);
    }
    c.report
}

/// On `-|mu| < f0 < |mu|`, `f0 != 0`: for `mu > 0`, `t < r` below zero and
/// `t > r` above; for `mu < 0`, `s < q` below and `s > q` above. The pairs
/// cross at `f0 = 0`.
pub fn verify_lemma3(mu_grid: &[f64], f0_points: usize) -> LemmaReport {
    let mut c = Checker::new(Lemma::MiddleBranch, mu_grid, f0_points);
    for &mu in mu_grid.iter().filter(|m| **m != 0.0) {
        let m = math::abs(mu);
        let pick = |f0: f64| {
            let v = qrst(f0, mu);
            if mu > 0.0 {
                (("t", "r"), (v.t, v.r))
            } else {
                (("s", "q"), (v.s, v.q))
            }
        };
        for f0 in interior_points(-m, m, f0_points) {
            if math::abs(f0) < STRICT_MARGIN {
                continue;
            }
            let expected = if f0 < 0.0 {
                Relation::Less
            } else {
                Relation::Greater
            };
            let (names, values) = pick(f0);
            c.compare(mu, f0, names, values, expected);
        }
        let (names, values) = pick(0.0);
        c.compare(mu, 0.0, names, values, Relation::Equal);
    }
    c.report
}
