use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::table::SubsetMask;

/// How coefficients are represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    /// Integer numerators over `2^n` (uniform measure only).
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
enum Coefficients {
    Exact(Vec<i64>),
    Float(Vec<f64>),
}

/// All `2^n` Fourier coefficients `f^(U)`, indexed by [`SubsetMask`].
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSpectrum {
    arity: usize,
    coeffs: Coefficients,
}

fn check_len(arity: usize, len: usize) -> Result<()> {
    if len != 1 << arity {
        return Err(Error::TableLength {
            expected: 1 << arity,
            found: len,
        });
    }
    Ok(())
}

impl FourierSpectrum {
    /// Exact spectrum from numerators `N(U)`, `f^(U) = N(U) / 2^n`.
    pub fn exact(arity: usize, numerators: Vec<i64>) -> Result<Self> {
        check_len(arity, numerators.len())?;
        Ok(FourierSpectrum {
            arity,
            coeffs: Coefficients::Exact(numerators),
        })
    }

    pub fn float(arity: usize, values: Vec<f64>) -> Result<Self> {
        check_len(arity, values.len())?;
        Ok(FourierSpectrum {
            arity,
            coeffs: Coefficients::Float(values),
        })
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn kind(&self) -> SpectrumKind {
        match self.coeffs {
            Coefficients::Exact(_) => SpectrumKind::Exact,
            Coefficients::Float(_) => SpectrumKind::Float,
        }
    }

    /// `2^n`, the common denominator of exact coefficients.
    #[inline]
    pub fn denominator(&self) -> i64 {
        1 << self.arity
    }

    /// Numerator of `f^(U)` for exact spectra.
    pub fn numerator(&self, u: SubsetMask) -> Option<i64> {
        match &self.coeffs {
            Coefficients::Exact(n) => Some(n[u.0 as usize]),
            Coefficients::Float(_) => None,
        }
    }

    pub fn numerators(&self) -> Option<&[i64]> {
        match &self.coeffs {
            Coefficients::Exact(n) => Some(n),
            Coefficients::Float(_) => None,
        }
    }

    #[inline]
    pub fn coefficient(&self, u: SubsetMask) -> f64 {
        match &self.coeffs {
            Coefficients::Exact(n) => n[u.0 as usize] as f64 / self.denominator() as f64,
            Coefficients::Float(v) => v[u.0 as usize],
        }
    }

    /// `f^(emptyset)`, the output mean.
    #[inline]
    pub fn mean(&self) -> f64 {
        self.coefficient(SubsetMask::EMPTY)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len() as u32).map(|u| self.coefficient(SubsetMask(u)))
    }

    /// `sum_U f^(U)^2`.
    pub fn parseval_sum(&self) -> f64 {
        match &self.coeffs {
            Coefficients::Exact(_) => {
                self.exact_square_sum() as f64 / (1u128 << (2 * self.arity)) as f64
            }
            Coefficients::Float(v) => v.iter().map(|c| c * c).sum(),
        }
    }

    /// For exact spectra, whether `sum_U N(U)^2 == 4^n` holds exactly.
    pub fn parseval_exact(&self) -> Option<bool> {
        match self.coeffs {
            Coefficients::Exact(_) => Some(self.exact_square_sum() == 1u128 << (2 * self.arity)),
            Coefficients::Float(_) => None,
        }
    }

    fn exact_square_sum(&self) -> u128 {
        match &self.coeffs {
            Coefficients::Exact(n) => n.iter().map(|&c| (c as i128 * c as i128) as u128).sum(),
            Coefficients::Float(_) => 0,
        }
    }

    /// Converts to a float spectrum (no-op for float spectra).
    pub fn to_float(&self) -> FourierSpectrum {
        FourierSpectrum {
            arity: self.arity,
            coeffs: Coefficients::Float(self.values().collect()),
        }
    }
}
