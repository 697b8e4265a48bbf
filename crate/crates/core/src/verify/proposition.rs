//! Exhaustive check that canalizing functions maximize `MI(f(X); X_i)` within
//! each class of functions sharing `f^(emptyset)`.
//!
//! Every Boolean function of `n <= 4` inputs is enumerated by its packed truth
//! table (function index = output bits). [`Enumeration::scan`] tallies any
//! index range on its own, so callers may split the index space across
//! workers and fold the tallies with [`ClassTally::merge`]; the finished report
//! does not depend on how the space was split.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Range;

use crate::canalize::{
    check_spectral_condition, feasible_pairs, optimal_params, witness_bits, witnesses_from_bits,
    Witness,
};
use crate::distribution::{standardized, ProductDistribution};
use crate::error::{Error, Result};
use crate::fourier::transform;
use crate::infomeasure::{boundary_mi_product, brute_with, mi_canalizing_uniform};
use crate::math;
use crate::table::{Sign, TruthTable};

/// Largest arity enumerated exhaustively (2^16 functions).
pub const MAX_ENUMERATION_ARITY: usize = 4;

/// Tolerance on MI comparisons (max vs. boundary value, argmax ties).
pub const MI_TOLERANCE: f64 = 1e-9;

/// Output means closer than this fall into one class.
pub const CLASS_MERGE_TOLERANCE: f64 = 1e-9;

/// Distinct classes must be at least this far apart.
pub const CLASS_SEPARATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Proposition {
    /// Uniform inputs; boundary value `h((1+f0)/2) - h(|f0|)/2`.
    Uniform,
    /// Product inputs; optimum at the pair chosen by [`optimal_params`].
    Product,
}

#[derive(Debug, Clone, Copy)]
struct ClassKey(f64);

impl PartialEq for ClassKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ClassKey {}

impl PartialOrd for ClassKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ClassKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
struct ClassAcc {
    size: u64,
    max_mi: f64,
    /// `(function index, mi)` within [`MI_TOLERANCE`] of `max_mi`.
    candidates: Vec<(u64, f64)>,
    /// Union of the witnesses (bitset over `Witness::ordinal`) of members.
    witnesses: u8,
}

impl ClassAcc {
    fn new() -> Self {
        ClassAcc {
            size: 0,
            max_mi: f64::NEG_INFINITY,
            candidates: Vec::new(),
            witnesses: 0,
        }
    }

    fn push(&mut self, index: u64, mi: f64, witnesses: u8) {
        self.size += 1;
        self.witnesses |= witnesses;
        if mi >= self.max_mi - MI_TOLERANCE {
            self.candidates.push((index, mi));
        }
        if mi > self.max_mi {
            self.max_mi = mi;
            self.prune();
        }
    }

    fn absorb(&mut self, other: ClassAcc) {
        self.size += other.size;
        self.witnesses |= other.witnesses;
        self.max_mi = self.max_mi.max(other.max_mi);
        self.candidates.extend(other.candidates);
        self.prune();
    }

    fn prune(&mut self) {
        let floor = self.max_mi - MI_TOLERANCE;
        self.candidates.retain(|&(_, mi)| mi >= floor);
    }
}

/// Per-class tallies for a range of function indices.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ClassTally {
    classes: BTreeMap<ClassKey, ClassAcc>,
    scanned: u64,
}

impl ClassTally {
    pub fn merge(&mut self, other: ClassTally) {
        self.scanned += other.scanned;
        for (key, acc) in other.classes {
            match self.classes.get_mut(&key) {
                Some(mine) => mine.absorb(acc),
                None => {
                    self.classes.insert(key, acc);
                }
            }
        }
    }

    /// Number of functions tallied.
    pub fn scanned(&self) -> u64 {
        self.scanned
    }
}

/// Outcome for one class of functions with a common `f^(emptyset)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassRecord {
    pub f0: f64,
    pub size: u64,
    pub max_mi: f64,
    /// Function indices attaining `max_mi` (within [`MI_TOLERANCE`]), ascending.
    pub argmax: Vec<u64>,
    /// Per argmax: canalizing in the variable (any witness).
    pub argmax_canalizing: Vec<bool>,
    /// Per argmax: carries an MI-optimal witness that also passes the
    /// spectral condition.
    pub argmax_optimal: Vec<bool>,
    /// The analytic maximum for this `f0`.
    pub boundary_mi: f64,
    /// [`optimal_params`] at this class, when unambiguous.
    pub optimal: Option<Witness>,
    /// Witnesses whose boundary MI ties the optimum.
    pub optimal_witnesses: Vec<Witness>,
    /// The class contains a function canalizing in the variable with an
    /// optimal witness, so the maximum must be attained.
    pub attained: bool,
    pub pass: bool,
}

impl ClassRecord {
    pub fn all_argmax_canalizing(&self) -> bool {
        self.argmax_canalizing.iter().all(|&c| c)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionReport {
    pub proposition: Proposition,
    pub arity: usize,
    /// 0-based variable index.
    pub variable: usize,
    pub means: Vec<f64>,
    pub functions: u64,
    pub classes: Vec<ClassRecord>,
}

impl PropositionReport {
    pub fn pass(&self) -> bool {
        self.functions == 1 << (1u64 << self.arity) && self.classes.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClassRecord> {
        self.classes.iter().filter(|c| !c.pass)
    }
}

/// One exhaustive verification run.
#[derive(Debug, Clone)]
pub struct Enumeration {
    proposition: Proposition,
    arity: usize,
    var: usize,
    dist: ProductDistribution,
    probs: Vec<f64>,
    phi: [f64; 2],
}

impl Enumeration {
    pub fn uniform(arity: usize, var: usize) -> Result<Self> {
        Self::build(
            Proposition::Uniform,
            arity,
            var,
            ProductDistribution::uniform(arity),
        )
    }

    pub fn product(arity: usize, var: usize, dist: ProductDistribution) -> Result<Self> {
        Self::build(Proposition::Product, arity, var, dist)
    }

    fn build(
        proposition: Proposition,
        arity: usize,
        var: usize,
        dist: ProductDistribution,
    ) -> Result<Self> {
        if arity > MAX_ENUMERATION_ARITY {
            return Err(Error::EnumerationTooLarge {
                arity,
                max: MAX_ENUMERATION_ARITY,
            });
        }
        dist.check_arity(arity)?;
        if var >= arity {
            return Err(Error::VariableOutOfRange {
                variable: var,
                arity,
            });
        }
        let probs = dist.point_probabilities();
        let phi = [
            standardized(dist.mu(var), Sign::Minus),
            standardized(dist.mu(var), Sign::Plus),
        ];
        Ok(Enumeration {
            proposition,
            arity,
            var,
            dist,
            probs,
            phi,
        })
    }

    /// `2^(2^n)`.
    pub fn function_count(&self) -> u64 {
        1 << (1u64 << self.arity)
    }

    fn table(&self, index: u64) -> TruthTable {
        TruthTable::from_bits(self.arity, index).expect("index below function_count")
    }

    /// Tallies the functions with indices in `range`.
    pub fn scan(&self, range: Range<u64>) -> ClassTally {
        let mut tally = ClassTally::default();
        let end = range.end.min(self.function_count());
        let size = 1i64 << self.arity;
        for index in range.start..end {
            let tt = self.table(index);
            let r = brute_with(&tt, &self.probs, self.phi, self.var);
            let f0 = match self.proposition {
                // exact: (#plus - #minus) / 2^n
                Proposition::Uniform => (2 * tt.count_plus() as i64 - size) as f64 / size as f64,
                Proposition::Product => r.f0,
            };
            tally
                .classes
                .entry(ClassKey(f0))
                .or_insert_with(ClassAcc::new)
                .push(index, r.mi, witness_bits(&tt, self.var));
            tally.scanned += 1;
        }
        tally
    }

    /// Merges near-equal classes and evaluates every class.
    pub fn finish(&self, tally: ClassTally) -> Result<PropositionReport> {
        let mut grouped: Vec<(f64, ClassAcc)> = Vec::new();
        for (ClassKey(f0), acc) in tally.classes {
            match grouped.last_mut() {
                Some((first, group)) if f0 - *first <= CLASS_MERGE_TOLERANCE => group.absorb(acc),
                _ => grouped.push((f0, acc)),
            }
        }
        for pair in grouped.windows(2) {
            if pair[1].0 - pair[0].0 < CLASS_SEPARATION {
                return Err(Error::ClassCollision {
                    left: pair[0].0,
                    right: pair[1].0,
                });
            }
        }
        let classes = grouped
            .into_iter()
            .map(|(f0, acc)| self.evaluate(f0, acc))
            .collect::<Result<Vec<_>>>()?;
        Ok(PropositionReport {
            proposition: self.proposition,
            arity: self.arity,
            variable: self.var,
            means: self.dist.means().to_vec(),
            functions: tally.scanned,
            classes,
        })
    }

    pub fn run(&self) -> Result<PropositionReport> {
        self.finish(self.scan(0..self.function_count()))
    }

    fn evaluate(&self, f0: f64, mut acc: ClassAcc) -> Result<ClassRecord> {
        let mu = self.dist.mu(self.var);
        let f0_clamped = f0.clamp(-1.0, 1.0);
        let feasible = feasible_pairs(f0_clamped, mu)?;
        let optimal = optimal_params(f0_clamped, mu).ok();
        let feasible_mi = feasible
            .iter()
            .map(|&w| Ok((w, boundary_mi_product(f0_clamped, mu, w)?)))
            .collect::<Result<Vec<_>>>()?;
        let best = match optimal {
            Some(w) => boundary_mi_product(f0_clamped, mu, w)?,
            None => feasible_mi
                .iter()
                .map(|&(_, v)| v)
                .fold(f64::NEG_INFINITY, f64::max),
        };
        let optimal_witnesses: Vec<Witness> = feasible_mi
            .iter()
            .filter(|&&(_, v)| v >= best - MI_TOLERANCE)
            .map(|&(w, _)| w)
            .collect();
        let boundary_mi = match self.proposition {
            Proposition::Uniform => mi_canalizing_uniform(f0_clamped),
            Proposition::Product => best,
        };

        let optimal_bits = optimal_witnesses
            .iter()
            .fold(0u8, |bits, w| bits | 1 << w.ordinal());
        let attained = acc.witnesses & optimal_bits != 0;

        acc.candidates.sort_unstable_by_key(|&(index, _)| index);
        let mut argmax = Vec::with_capacity(acc.candidates.len());
        let mut argmax_canalizing = Vec::with_capacity(acc.candidates.len());
        let mut argmax_optimal = Vec::with_capacity(acc.candidates.len());
        for &(index, _) in &acc.candidates {
            let tt = self.table(index);
            let bits = witness_bits(&tt, self.var);
            let spectrum = transform(&tt, &self.dist)?;
            let mut optimal_ok = false;
            for w in witnesses_from_bits(bits & optimal_bits) {
                optimal_ok |= check_spectral_condition(&spectrum, self.var, w, &self.dist)?;
            }
            argmax.push(index);
            argmax_canalizing.push(bits != 0);
            argmax_optimal.push(optimal_ok);
        }

        let bounded = acc.max_mi <= best + MI_TOLERANCE;
        let pass = if attained {
            let closed_form = math::abs(boundary_mi - best) <= MI_TOLERANCE;
            bounded
                && closed_form
                && math::abs(acc.max_mi - best) <= MI_TOLERANCE
                && argmax_optimal.iter().all(|&ok| ok)
        } else {
            bounded
        };
        Ok(ClassRecord {
            f0,
            size: acc.size,
            max_mi: acc.max_mi,
            argmax,
            argmax_canalizing,
            argmax_optimal,
            boundary_mi,
            optimal,
            optimal_witnesses,
            attained,
            pass,
        })
    }
}

/// Uniform-input proposition over all functions of `arity <= 4` inputs.
pub fn verify_prop1(arity: usize, var: usize) -> Result<PropositionReport> {
    Enumeration::uniform(arity, var)?.run()
}

/// Product-input proposition over all functions of `arity <= 4` inputs.
pub fn verify_prop2(
    arity: usize,
    var: usize,
    d: &ProductDistribution,
) -> Result<PropositionReport> {
    Enumeration::product(arity, var, d.clone())?.run()
}
