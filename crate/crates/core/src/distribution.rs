use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::table::{AssignmentIndex, Sign, MAX_ARITY};

/// Independent inputs with `E[X_i] = mu_i`, `|mu_i| < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductDistribution {
    mu: Vec<f64>,
    sigma: Vec<f64>,
}

impl ProductDistribution {
    pub fn new(mu: Vec<f64>) -> Result<Self> {
        if mu.len() > MAX_ARITY {
            return Err(Error::ArityTooLarge {
                arity: mu.len(),
                max: MAX_ARITY,
            });
        }
        if let Some((variable, &m)) = mu
            .iter()
            .enumerate()
            .find(|(_, m)| !m.is_finite() || math::abs(**m) >= 1.0)
        {
            return Err(Error::InvalidMean { variable, mu: m });
        }
        let sigma = mu.iter().map(|m| math::sqrt(1.0 - m * m)).collect();
        Ok(ProductDistribution { mu, sigma })
    }

    pub fn uniform(arity: usize) -> Self {
        ProductDistribution {
            mu: vec![0.0; arity],
            sigma: vec![1.0; arity],
        }
    }

    /// Builds the distribution from `p_i = P(X_i = +1)`, i.e. `mu_i = 2 p_i - 1`.
    pub fn from_plus_probabilities(p: &[f64]) -> Result<Self> {
        Self::new(p.iter().map(|p| 2.0 * p - 1.0).collect())
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.mu.len()
    }

    #[inline]
    pub fn mu(&self, var: usize) -> f64 {
        self.mu[var]
    }

    #[inline]
    pub fn sigma(&self, var: usize) -> f64 {
        self.sigma[var]
    }

    pub fn means(&self) -> &[f64] {
        &self.mu
    }

    pub fn is_uniform(&self) -> bool {
        self.mu.iter().all(|&m| m == 0.0)
    }

    /// `P(X_var = a) = (1 + a mu) / 2`.
    #[inline]
    pub fn prob(&self, var: usize, a: Sign) -> f64 {
        marginal(self.mu[var], a)
    }

    /// `P_X(x) = prod_i P(X_i = x_i)`.
    pub fn point_probability(&self, k: AssignmentIndex) -> Result<f64> {
        if k.0 as u64 >= 1u64 << self.arity() {
            return Err(Error::IndexOutOfRange {
                index: k.0 as u64,
                len: 1 << self.arity(),
            });
        }
        Ok((0..self.arity())
            .map(|i| self.prob(i, k.value(i)))
            .product())
    }

    /// All `2^n` point probabilities, indexed by assignment.
    pub fn point_probabilities(&self) -> Vec<f64> {
        let mut p = vec![1.0f64];
        for i in 0..self.arity() {
            let (lo, hi) = (self.prob(i, Sign::Minus), self.prob(i, Sign::Plus));
            let mut next = Vec::with_capacity(p.len() * 2);
            next.extend(p.iter().map(|v| v * lo));
            next.extend(p.iter().map(|v| v * hi));
            // variable i is bit i: the upper half has it set
            p = next;
        }
        p
    }

    pub(crate) fn check_arity(&self, arity: usize) -> Result<()> {
        if self.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: self.arity(),
            });
        }
        Ok(())
    }
}

/// `P(X = a)` for a single `+-1` variable of mean `mu`.
#[inline]
pub fn marginal(mu: f64, a: Sign) -> f64 {
    (1.0 + a.as_f64() * mu) / 2.0
}

/// Standardized single-variable basis value `(a - mu) / sqrt(1 - mu^2)`.
#[inline]
pub fn standardized(mu: f64, a: Sign) -> f64 {
    (a.as_f64() - mu) / math::sqrt(1.0 - mu * mu)
}
