//! Canalizing structure: detection on the truth table, the two-coefficient
//! spectral test, and the restrictive/canalized pairs that maximize
//! input-output mutual information.

use alloc::vec::Vec;

use crate::distribution::{standardized, ProductDistribution};
use crate::error::{Error, Result};
use crate::math;
use crate::spectrum::{FourierSpectrum, SpectrumKind};
use crate::table::{valid_mask, Sign, SubsetMask, TruthTable};

/// Tolerance for the spectral condition on float spectra.
pub const SPECTRAL_TOLERANCE: f64 = 1e-9;

/// Slack on interval endpoints in the `(f0, mu)` case analysis.
pub const FEASIBILITY_SLACK: f64 = 1e-12;

/// Fixing the variable to `restrictive` forces the output to `canalized`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub restrictive: Sign,
    pub canalized: Sign,
}

impl Witness {
    pub const fn new(restrictive: Sign, canalized: Sign) -> Self {
        Witness {
            restrictive,
            canalized,
        }
    }

    /// All four pairs, in `(a, b)` lexicographic order with `-1 < +1`.
    pub const ALL: [Witness; 4] = [
        Witness::new(Sign::Minus, Sign::Minus),
        Witness::new(Sign::Minus, Sign::Plus),
        Witness::new(Sign::Plus, Sign::Minus),
        Witness::new(Sign::Plus, Sign::Plus),
    ];

    /// Position in [`Witness::ALL`], handy as a bit index.
    #[inline]
    pub fn ordinal(self) -> usize {
        (self.restrictive.is_plus() as usize) << 1 | self.canalized.is_plus() as usize
    }
}

/// Canalization of one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableCanalization {
    /// 0-based variable index.
    pub variable: usize,
    pub witnesses: Vec<Witness>,
}

impl VariableCanalization {
    #[inline]
    pub fn is_canalizing(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanalizingReport {
    pub arity: usize,
    pub variables: Vec<VariableCanalization>,
}

impl CanalizingReport {
    pub fn variable(&self, var: usize) -> &VariableCanalization {
        &self.variables[var]
    }

    pub fn canalizing_variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.variables
            .iter()
            .filter(|v| v.is_canalizing())
            .map(|v| v.variable)
    }
}

/// Bits of a word whose in-word position has bit `var` equal to `a`.
fn side_pattern(var: usize, a: Sign) -> u64 {
    let mut m = 0u64;
    for j in 0..64u64 {
        if (j >> var & 1 == 1) == a.is_plus() {
            m |= 1 << j;
        }
    }
    m
}

/// Witnesses of one variable, as a bitset over [`Witness::ordinal`].
pub(crate) fn witness_bits(tt: &TruthTable, var: usize) -> u8 {
    let n = tt.arity();
    let valid = valid_mask(n);
    let mut found = 0u8;
    for a in Sign::ALL {
        let (mut any_plus, mut any_minus) = (false, false);
        for (w, &bits) in tt.words().iter().enumerate() {
            let select = if var < 6 {
                side_pattern(var, a) & valid
            } else if (w >> (var - 6) & 1 == 1) == a.is_plus() {
                valid
            } else {
                0
            };
            any_plus |= bits & select != 0;
            any_minus |= !bits & select != 0;
            if any_plus && any_minus {
                break;
            }
        }
        if !any_minus {
            found |= 1 << Witness::new(a, Sign::Plus).ordinal();
        }
        if !any_plus {
            found |= 1 << Witness::new(a, Sign::Minus).ordinal();
        }
    }
    found
}

pub(crate) fn witnesses_from_bits(bits: u8) -> Vec<Witness> {
    Witness::ALL
        .into_iter()
        .filter(|w| bits >> w.ordinal() & 1 == 1)
        .collect()
}

/// All canalizing witnesses of every variable, read off the truth table.
pub fn detect(tt: &TruthTable) -> CanalizingReport {
    let variables = (0..tt.arity())
        .map(|variable| VariableCanalization {
            variable,
            witnesses: witnesses_from_bits(witness_bits(tt, variable)),
        })
        .collect();
    CanalizingReport {
        arity: tt.arity(),
        variables,
    }
}

/// Whether `f^(emptyset) + f^({i}) phi_i(a) = b`.
///
/// Exact spectra under the uniform measure are compared exactly; everything
/// else within [`SPECTRAL_TOLERANCE`].
pub fn check_spectral_condition(
    s: &FourierSpectrum,
    var: usize,
    w: Witness,
    d: &ProductDistribution,
) -> Result<bool> {
    d.check_arity(s.arity())?;
    if var >= s.arity() {
        return Err(Error::VariableOutOfRange {
            variable: var,
            arity: s.arity(),
        });
    }
    let single = SubsetMask::singleton(var);
    if let (SpectrumKind::Exact, true) = (s.kind(), d.is_uniform()) {
        let n0 = s.numerator(SubsetMask::EMPTY).unwrap_or_default();
        let n1 = s.numerator(single).unwrap_or_default();
        let lhs = n0 + n1 * w.restrictive.value() as i64;
        return Ok(lhs == w.canalized.value() as i64 * s.denominator());
    }
    let lhs = s.mean() + s.coefficient(single) * standardized(d.mu(var), w.restrictive);
    Ok(math::abs(lhs - w.canalized.as_f64()) <= SPECTRAL_TOLERANCE)
}

/// Canalized value in the uniform case, `sgn(f^(emptyset))`.
pub fn uniform_b(s: &FourierSpectrum) -> Result<Sign> {
    let sign = match s.numerator(SubsetMask::EMPTY) {
        Some(n) => Sign::of(n as f64),
        None if math::abs(s.mean()) < FEASIBILITY_SLACK => None,
        None => Sign::of(s.mean()),
    };
    sign.ok_or(Error::AmbiguousSign)
}

fn check_domain(f0: f64, mu: f64) -> Result<()> {
    if !math::within(f0, 1.0 + FEASIBILITY_SLACK) || !math::is_open_unit(mu) {
        return Err(Error::InfeasiblePair { f0, mu });
    }
    Ok(())
}

/// `sgn` with `sgn(0) = +1`.
fn sign_or_plus(x: f64) -> Sign {
    Sign::of(x).unwrap_or(Sign::Plus)
}

/// The restrictive/canalized pair that maximizes MI for output mean `f0`
/// when the variable has mean `mu`.
///
/// `(sgn mu, sgn f0)` when `|f0| >= |mu|`, otherwise `(-sgn mu, -sgn f0)`.
/// A zero in exactly one argument is read as `+1`: at `mu = 0` every `a` is
/// optimal and at `f0 = 0` both `b` tie. Both zero is reported as ambiguous.
pub fn optimal_params(f0: f64, mu: f64) -> Result<Witness> {
    check_domain(f0, mu)?;
    if f0 == 0.0 && mu == 0.0 {
        return Err(Error::AmbiguousSign);
    }
    let (a, b) = (sign_or_plus(mu), sign_or_plus(f0));
    Ok(if math::abs(f0) >= math::abs(mu) {
        Witness::new(a, b)
    } else {
        Witness::new(-a, -b)
    })
}

/// Pairs `(a, b)` compatible with output mean `f0` and variable mean `mu`.
///
/// Endpoints of the three intervals `[-1, -|mu|]`, `[-|mu|, |mu|]`,
/// `[|mu|, 1]` belong to both neighbours.
pub fn feasible_pairs(f0: f64, mu: f64) -> Result<Vec<Witness>> {
    check_domain(f0, mu)?;
    let m = math::abs(mu);
    let mut bits = 0u8;
    let mut add = |w: Witness| bits |= 1 << w.ordinal();
    if f0 <= -m + FEASIBILITY_SLACK {
        add(Witness::new(Sign::Plus, Sign::Minus));
        add(Witness::new(Sign::Minus, Sign::Minus));
    }
    if math::abs(f0) <= m + FEASIBILITY_SLACK {
        let restrictive: &[Sign] = match Sign::of(mu) {
            Some(s) => &[-s],
            None => &Sign::ALL,
        };
        for &a in restrictive {
            add(Witness::new(a, Sign::Plus));
            add(Witness::new(a, Sign::Minus));
        }
    }
    if f0 >= m - FEASIBILITY_SLACK {
        add(Witness::new(Sign::Plus, Sign::Plus));
        add(Witness::new(Sign::Minus, Sign::Plus));
    }
    Ok(witnesses_from_bits(bits))
}

/// Function that outputs `w.canalized` whenever `x_var = w.restrictive` and
/// `rest` (over the other `n - 1` variables, order kept) elsewhere.
pub fn construct_canalizing(
    arity: usize,
    var: usize,
    w: Witness,
    rest: &TruthTable,
) -> Result<TruthTable> {
    if var >= arity {
        return Err(Error::VariableOutOfRange {
            variable: var,
            arity,
        });
    }
    if rest.arity() + 1 != arity {
        return Err(Error::ArityMismatch {
            expected: arity.saturating_sub(1),
            found: rest.arity(),
        });
    }
    let low = (1u32 << var) - 1;
    TruthTable::from_fn(arity, |k| {
        if k.value(var) == w.restrictive {
            w.canalized
        } else {
            let packed = (k.0 & low) | (k.0 >> 1 & !low);
            rest.get(packed as usize)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::transform;
    use alloc::vec;

    const P: Sign = Sign::Plus;
    const M: Sign = Sign::Minus;

    fn w(a: Sign, b: Sign) -> Witness {
        Witness::new(a, b)
    }

    fn and2() -> TruthTable {
        TruthTable::from_bits(2, 0b1000).unwrap()
    }

    // Definition applied literally, one completion at a time.
    fn brute_witnesses(tt: &TruthTable, var: usize) -> Vec<Witness> {
        Witness::ALL
            .into_iter()
            .filter(|w| {
                (0..tt.len())
                    .filter(|&k| (k >> var & 1 == 1) == w.restrictive.is_plus())
                    .all(|k| tt.get(k) == w.canalized)
            })
            .collect()
    }

    #[test]
    fn detect_examples() {
        let r = detect(&and2());
        assert_eq!(r.variable(0).witnesses, [w(M, M)]);
        assert_eq!(r.variable(1).witnesses, [w(M, M)]);

        let xor = TruthTable::from_bits(2, 0b0110).unwrap();
        assert_eq!(detect(&xor).canalizing_variables().count(), 0);

        let one = detect(&TruthTable::constant(3, P).unwrap());
        for v in &one.variables {
            assert_eq!(v.witnesses, [w(M, P), w(P, P)]);
        }
    }

    #[test]
    fn detect_matches_definition() {
        for n in 1..=3 {
            for bits in 0..1u64 << (1 << n) {
                let tt = TruthTable::from_bits(n, bits).unwrap();
                let r = detect(&tt);
                for i in 0..n {
                    assert_eq!(r.variable(i).witnesses, brute_witnesses(&tt, i));
                }
            }
        }
        // word-level path for variables >= 6
        let tt = construct_canalizing(
            8,
            7,
            w(P, M),
            &TruthTable::from_fn(7, |k| Sign::from_bit(k.0 % 5 == 1)).unwrap(),
        )
        .unwrap();
        for i in 0..8 {
            assert_eq!(detect(&tt).variable(i).witnesses, brute_witnesses(&tt, i));
        }
    }

    #[test]
    fn spectral_condition_examples() {
        let u = ProductDistribution::uniform(2);
        let s = transform(&and2(), &u).unwrap();
        assert!(check_spectral_condition(&s, 0, w(M, M), &u).unwrap());
        assert!(!check_spectral_condition(&s, 0, w(P, P), &u).unwrap());
        let one = transform(&TruthTable::constant(2, P).unwrap(), &u).unwrap();
        for a in Sign::ALL {
            assert!(check_spectral_condition(&one, 1, w(a, P), &u).unwrap());
        }
        assert!(check_spectral_condition(&s, 2, w(M, M), &u).is_err());
    }

    #[test]
    fn uniform_b_examples() {
        let u = ProductDistribution::uniform(2);
        assert_eq!(uniform_b(&transform(&and2(), &u).unwrap()).unwrap(), M);
        let or = TruthTable::from_bits(2, 0b1110).unwrap();
        assert_eq!(uniform_b(&transform(&or, &u).unwrap()).unwrap(), P);
        let x1 = TruthTable::dictator(2, 0).unwrap();
        assert_eq!(
            uniform_b(&transform(&x1, &u).unwrap()),
            Err(Error::AmbiguousSign)
        );
    }

    #[test]
    fn optimal_params_examples() {
        assert_eq!(optimal_params(0.5, -0.4).unwrap(), w(M, P));
        assert_eq!(optimal_params(0.2, -0.4).unwrap(), w(P, M));
        assert_eq!(optimal_params(0.5, 0.0).unwrap().canalized, P);
        assert_eq!(optimal_params(-0.5, 0.0).unwrap().canalized, M);
        // tie |f0| = |mu| takes the first branch
        assert_eq!(optimal_params(0.4, 0.4).unwrap(), w(P, P));
        assert_eq!(optimal_params(0.0, 0.0), Err(Error::AmbiguousSign));
        assert!(optimal_params(1.5, 0.0).is_err());
        assert!(optimal_params(0.5, 1.0).is_err());
    }

    #[test]
    fn feasible_pairs_examples() {
        assert_eq!(feasible_pairs(-0.8, -0.4).unwrap(), [w(M, M), w(P, M)]);
        assert_eq!(feasible_pairs(0.2, -0.4).unwrap(), [w(P, M), w(P, P)]);
        for f0 in [-1.0, 1.0] {
            for mu in [-0.6, 0.0, 0.3] {
                let pairs = feasible_pairs(f0, mu).unwrap();
                assert!(!pairs.is_empty());
                assert!(pairs.iter().all(|p| p.canalized.as_f64() == f0));
            }
        }
        // boundary f0 = |mu| belongs to both adjacent cases
        assert_eq!(
            feasible_pairs(0.4, 0.4).unwrap(),
            [w(M, M), w(M, P), w(P, P)]
        );
    }

    // Feasible exactly when the implied first-order coefficient respects
    // Parseval: f0^2 + ((b - f0) / phi(a))^2 <= 1.
    fn parseval_feasible(f0: f64, mu: f64, p: Witness) -> bool {
        let f1 = (p.canalized.as_f64() - f0) / standardized(mu, p.restrictive);
        f0 * f0 + f1 * f1 <= 1.0 + 1e-9
    }

    #[test]
    fn feasible_pairs_agree_with_parseval_bound() {
        for i in 0..=40 {
            let f0 = -1.0 + i as f64 / 20.0;
            for j in 0..=18 {
                let mu = -0.9 + j as f64 / 10.0;
                let listed = feasible_pairs(f0, mu).unwrap();
                for p in Witness::ALL {
                    assert_eq!(
                        listed.contains(&p),
                        parseval_feasible(f0, mu, p),
                        "f0={f0} mu={mu} {p:?}"
                    );
                }
                if f0 != 0.0 || mu != 0.0 {
                    assert!(listed.contains(&optimal_params(f0, mu).unwrap()));
                }
            }
        }
    }

    #[test]
    fn construct_examples() {
        let x2 = TruthTable::dictator(1, 0).unwrap();
        assert_eq!(construct_canalizing(2, 0, w(M, M), &x2).unwrap(), and2());
        let one = TruthTable::constant(1, P).unwrap();
        assert_eq!(
            construct_canalizing(2, 0, w(P, P), &one).unwrap(),
            TruthTable::constant(2, P).unwrap()
        );
        let rest = TruthTable::constant(0, M).unwrap();
        let t = construct_canalizing(1, 0, w(P, P), &rest).unwrap();
        assert_eq!(t, TruthTable::dictator(1, 0).unwrap());
        assert!(construct_canalizing(3, 0, w(P, P), &one).is_err());
    }

    #[test]
    fn constructed_functions_carry_their_witness() {
        let d = ProductDistribution::new(vec![-0.4, 0.2, 0.6]).unwrap();
        for bits in 0..16u64 {
            let rest = TruthTable::from_bits(2, bits).unwrap();
            for var in 0..3 {
                for p in Witness::ALL {
                    let tt = construct_canalizing(3, var, p, &rest).unwrap();
                    assert!(detect(&tt).variable(var).witnesses.contains(&p));
                    let s = transform(&tt, &d).unwrap();
                    assert!((s.parseval_sum() - 1.0).abs() < 1e-9);
                    assert!(check_spectral_condition(&s, var, p, &d).unwrap());
                }
            }
        }
    }
}
