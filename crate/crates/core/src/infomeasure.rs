//! Entropy and input-output mutual information in bits.
//!
//! Two independent routes to `MI(f(X); X_i)`: [`mi_brute`] sums the joint
//! distribution over every assignment, [`mi_spectral`] uses only
//! `f^(emptyset)` and `f^({i})`. Throughout, `0 log 0 = 0`.

use crate::canalize::{feasible_pairs, Witness};
use crate::distribution::{marginal, standardized, ProductDistribution};
use crate::error::{Error, Result};
use crate::math;
use crate::table::{Sign, TruthTable};

/// Slack on probabilities and `h`-arguments before they count as out of range.
pub const PROBABILITY_SLACK: f64 = 1e-12;

/// Binary entropy `h(p) = -p log2 p - (1-p) log2 (1-p)`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(h(p))
}

/// Unchecked binary entropy; clamps `p` into `[0, 1]`.
#[inline]
pub(crate) fn h(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -p * math::log2(p) - (1.0 - p) * math::log2(1.0 - p)
}

#[inline]
fn in_unit(p: f64) -> bool {
    (-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MiMethod {
    /// Direct summation of the joint distribution.
    Brute,
    /// Two-coefficient formula.
    Spectral,
}

/// A mutual information value with the coefficient pair behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiResult {
    /// Bits, in `[0, 1]`.
    pub mi: f64,
    /// `f^(emptyset)`.
    pub f0: f64,
    /// `f^({i})`.
    pub f1: f64,
    pub variable: Option<usize>,
    pub method: MiMethod,
}

/// `H(f(X)) - H(f(X) | X_var)` by summing over all `2^n` assignments.
///
/// Does not use any spectral identity; `f0` and `f1` in the result are the
/// plain expectations `E[f]` and `E[f phi_var]` accumulated in the same pass.
pub fn mi_brute(tt: &TruthTable, d: &ProductDistribution, var: usize) -> Result<MiResult> {
    d.check_arity(tt.arity())?;
    if var >= tt.arity() {
        return Err(Error::VariableOutOfRange {
            variable: var,
            arity: tt.arity(),
        });
    }
    let probs = d.point_probabilities();
    let phi = [
        standardized(d.mu(var), Sign::Minus),
        standardized(d.mu(var), Sign::Plus),
    ];
    Ok(brute_with(tt, &probs, phi, var))
}

/// [`mi_brute`] with the point probabilities and `phi_var` values supplied.
pub(crate) fn brute_with(tt: &TruthTable, probs: &[f64], phi: [f64; 2], var: usize) -> MiResult {
    // [x_var = -1, x_var = +1] marginals and joint with f = +1
    let mut p_x = [0.0f64; 2];
    let mut p_x_plus = [0.0f64; 2];
    let (mut f0, mut f1) = (0.0, 0.0);
    for (k, &p) in probs.iter().enumerate() {
        let side = k >> var & 1;
        let y = tt.get(k);
        p_x[side] += p;
        if y.is_plus() {
            p_x_plus[side] += p;
        }
        f0 += p * y.as_f64();
        f1 += p * y.as_f64() * phi[side];
    }
    let h_y = h(p_x_plus[0] + p_x_plus[1]);
    let h_y_given_x: f64 = (0..2)
        .filter(|&s| p_x[s] > 0.0)
        .map(|s| p_x[s] * h(p_x_plus[s] / p_x[s]))
        .sum();
    MiResult {
        mi: (h_y - h_y_given_x).clamp(0.0, 1.0),
        f0,
        f1,
        variable: Some(var),
        method: MiMethod::Brute,
    }
}

/// `h((1+f0)/2) - sum_a P(X_i=a) h((1 + f0 + f1 phi_i(a)) / 2)`.
pub fn mi_spectral(f0: f64, f1: f64, mu: f64) -> Result<MiResult> {
    let infeasible = Error::InfeasibleSpectrum { f0, f1, mu };
    if !math::is_open_unit(mu) || !in_unit((1.0 + f0) / 2.0) {
        return Err(infeasible);
    }
    let h_y = h((1.0 + f0) / 2.0);
    // sum_a P(a) (h(Y) - h(Y | a)) so that f1 = 0 cancels term by term
    let mut mi = 0.0;
    for a in Sign::ALL {
        let p = (1.0 + f0 + f1 * standardized(mu, a)) / 2.0;
        if !in_unit(p) {
            return Err(infeasible);
        }
        mi += marginal(mu, a) * (h_y - h(p));
    }
    Ok(MiResult {
        mi: mi.clamp(0.0, 1.0),
        f0,
        f1,
        variable: None,
        method: MiMethod::Spectral,
    })
}

/// MI of a function canalizing in the variable, uniform inputs:
/// `h((1+f0)/2) - h(|f0|)/2`. Independent of the witness.
pub fn mi_canalizing_uniform(f0: f64) -> f64 {
    h((1.0 + f0) / 2.0) - h(math::abs(f0)) / 2.0
}

/// MI on the canalizing boundary for witness `w`, i.e. `mi_spectral` with
/// `f1 = (b - f0) / phi_i(a)`.
pub fn boundary_mi_product(f0: f64, mu: f64, w: Witness) -> Result<f64> {
    if !feasible_pairs(f0, mu)?.contains(&w) {
        return Err(Error::InfeasiblePair { f0, mu });
    }
    let a = w.restrictive;
    let ratio = standardized(mu, -a) / standardized(mu, a);
    let p = (1.0 + f0 + (w.canalized.as_f64() - f0) * ratio) / 2.0;
    Ok((h((1.0 + f0) / 2.0) - marginal(mu, -a) * h(p)).clamp(0.0, 1.0))
}

/// The four boundary conditional entropies `H(f(X) | X_i)` as functions of
/// `f0`, one per `(a, b)`:
///
/// | fn | a  | b  |
/// |----|----|----|
/// | s  | +1 | +1 |
/// | t  | -1 | +1 |
/// | q  | +1 | -1 |
/// | r  | -1 | -1 |
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qrst<T> {
    pub s: T,
    pub t: T,
    pub q: T,
    pub r: T,
}

impl<T: Copy> Qrst<T> {
    pub fn get(&self, w: Witness) -> T {
        match (w.restrictive, w.canalized) {
            (Sign::Plus, Sign::Plus) => self.s,
            (Sign::Minus, Sign::Plus) => self.t,
            (Sign::Plus, Sign::Minus) => self.q,
            (Sign::Minus, Sign::Minus) => self.r,
        }
    }
}

/// `h`-arguments of s, t, q, r at `f0`.
fn qrst_arguments(f0: f64, mu: f64) -> Qrst<f64> {
    Qrst {
        s: (f0 - mu) / (1.0 - mu),
        t: (f0 + mu) / (1.0 + mu),
        q: (f0 + 1.0) / (1.0 - mu),
        r: (f0 + 1.0) / (1.0 + mu),
    }
}

/// Values of s, t, q, r at `f0`; `None` where the `h`-argument leaves `[0, 1]`.
pub fn qrst(f0: f64, mu: f64) -> Qrst<Option<f64>> {
    if !math::is_open_unit(mu) {
        return Qrst {
            s: None,
            t: None,
            q: None,
            r: None,
        };
    }
    let args = qrst_arguments(f0, mu);
    let (pm, pp) = (marginal(mu, Sign::Minus), marginal(mu, Sign::Plus));
    let eval = |weight: f64, g: f64| in_unit(g).then(|| weight * h(g));
    Qrst {
        s: eval(pm, args.s),
        t: eval(pp, args.t),
        q: eval(pm, args.q),
        r: eval(pp, args.r),
    }
}

/// `d/df0` of s, t, q, r; `None` outside the open domain.
///
/// Each branch is `P(X_i = c) h(g(f0))` with `g` affine of slope
/// `1 / (2 P(X_i = c))`, so the derivative is `log2((1 - g) / g) / 2`:
///
/// - `q' = log2((-mu - f0) / (f0 + 1)) / 2`
/// - `r' = log2(( mu - f0) / (f0 + 1)) / 2`
/// - `s' = log2((1 - f0) / (f0 - mu)) / 2`
/// - `t' = log2((1 - f0) / (f0 + mu)) / 2`
pub fn qrst_derivatives(f0: f64, mu: f64) -> Qrst<Option<f64>> {
    if !math::is_open_unit(mu) {
        return Qrst {
            s: None,
            t: None,
            q: None,
            r: None,
        };
    }
    let slope = |num: f64, den: f64| (num > 0.0 && den > 0.0).then(|| math::log2(num / den) / 2.0);
    Qrst {
        s: slope(1.0 - f0, f0 - mu),
        t: slope(1.0 - f0, f0 + mu),
        q: slope(-mu - f0, f0 + 1.0),
        r: slope(mu - f0, f0 + 1.0),
    }
}
