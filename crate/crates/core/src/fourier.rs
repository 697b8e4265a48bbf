//! Forward and inverse Fourier transforms under product measures.
//!
//! The biased basis is `phi_U(x) = prod_{i in U} (x_i - mu_i) / sigma_i`; under
//! the uniform measure it is the parity `chi_U(x) = prod_{i in U} x_i`. Both
//! the forward and inverse transform factor over variables, so every fast path
//! here is `n` butterfly passes over a `2^n` buffer.

use alloc::vec;
use alloc::vec::Vec;

use crate::distribution::{standardized, ProductDistribution};
use crate::error::{Error, Result};
use crate::spectrum::FourierSpectrum;
use crate::table::{valid_mask, AssignmentIndex, Sign, SubsetMask, TruthTable};

/// Reconstructed values farther than this from `+-1` are rejected.
pub const BOOLEAN_TOLERANCE: f64 = 1e-6;

/// `phi_U(x)` for assignment `k` under `d`. The empty product is 1.
pub fn basis_eval(u: SubsetMask, k: AssignmentIndex, d: &ProductDistribution) -> Result<f64> {
    let n = d.arity();
    if (u.0 as u64) >> n != 0 {
        return Err(Error::ArityMismatch {
            expected: n,
            found: 32 - u.0.leading_zeros() as usize,
        });
    }
    if (k.0 as u64) >> n != 0 {
        return Err(Error::IndexOutOfRange {
            index: k.0 as u64,
            len: 1 << n,
        });
    }
    Ok(u.iter()
        .map(|i| standardized(d.mu(i), k.value(i)))
        .product())
}

/// Spectrum of `tt` under `d`: exact when `d` is uniform, float otherwise.
///
/// Runs in `O(n 2^n)` either way.
pub fn transform(tt: &TruthTable, d: &ProductDistribution) -> Result<FourierSpectrum> {
    d.check_arity(tt.arity())?;
    if d.is_uniform() {
        return Ok(fast_uniform_transform(tt));
    }
    let n = tt.arity();
    let mut g: Vec<f64> = tt.iter().map(Sign::as_f64).collect();
    for i in 0..n {
        let (pm, pp) = (d.prob(i, Sign::Minus), d.prob(i, Sign::Plus));
        let (wm, wp) = (
            pm * standardized(d.mu(i), Sign::Minus),
            pp * standardized(d.mu(i), Sign::Plus),
        );
        butterfly(&mut g, i, |lo, hi| (pm * lo + pp * hi, wm * lo + wp * hi));
    }
    FourierSpectrum::float(n, g)
}

/// Uniform-measure spectrum via the Walsh-Hadamard butterfly, exact.
pub fn fast_uniform_transform(tt: &TruthTable) -> FourierSpectrum {
    let n = tt.arity();
    let mut g: Vec<i64> = tt.iter().map(|s| s.value() as i64).collect();
    for i in 0..n {
        butterfly(&mut g, i, |lo, hi| (lo + hi, hi - lo));
    }
    FourierSpectrum::exact(n, g).expect("length is 2^n")
}

/// Coefficients straight from the defining sum `sum_x P(x) f(x) phi_U(x)`.
///
/// `O(4^n)`; this is the reference path the butterflies are checked
/// against. Uniform inputs are summed exactly with bit-sliced parities, 64
/// assignments per word.
pub fn direct_transform(tt: &TruthTable, d: &ProductDistribution) -> Result<FourierSpectrum> {
    d.check_arity(tt.arity())?;
    let n = tt.arity();
    if d.is_uniform() {
        return FourierSpectrum::exact(n, direct_uniform_numerators(tt));
    }
    let probs = d.point_probabilities();
    let phi: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            [
                standardized(d.mu(i), Sign::Minus),
                standardized(d.mu(i), Sign::Plus),
            ]
        })
        .collect();
    let coeffs = (0..1u32 << n)
        .map(|u| {
            let u = SubsetMask(u);
            (0..1u32 << n)
                .map(|k| {
                    let basis: f64 = u.iter().map(|i| phi[i][(k >> i & 1) as usize]).product();
                    probs[k as usize] * tt.get(k as usize).as_f64() * basis
                })
                .sum()
        })
        .collect();
    FourierSpectrum::float(n, coeffs)
}

fn direct_uniform_numerators(tt: &TruthTable) -> Vec<i64> {
    let n = tt.arity();
    let low_bits = n.min(6);
    let valid = valid_mask(n);
    // parity_low[u] has bit j set iff chi restricted to the low variables is -1
    // at in-word position j, i.e. |u & !j| is odd
    let parity_low: Vec<u64> = (0..1u64 << low_bits)
        .map(|u| {
            (0..64u64).fold(0u64, |acc, j| {
                acc | (((u & !j).count_ones() & 1) as u64) << j
            }) & valid
        })
        .collect();
    let words = tt.words();
    let size = 1i64 << n;
    (0..1u64 << n)
        .map(|u| {
            let (lo, hi) = (u & 63, u >> 6);
            let agree: i64 = words
                .iter()
                .enumerate()
                .map(|(w, &bits)| {
                    let high_flip = if (hi & !(w as u64)).count_ones() & 1 == 1 {
                        valid
                    } else {
                        0
                    };
                    // f * chi = +1 exactly where the output bit and the parity bit differ
                    ((bits ^ parity_low[lo as usize] ^ high_flip) & valid).count_ones() as i64
                })
                .sum();
            2 * agree - size
        })
        .collect()
}

/// Rebuilds the truth table `f(x) = sum_U f^(U) phi_U(x)`.
pub fn inverse_transform(s: &FourierSpectrum, d: &ProductDistribution) -> Result<TruthTable> {
    d.check_arity(s.arity())?;
    let n = s.arity();
    if let (Some(nums), true) = (s.numerators(), d.is_uniform()) {
        let mut g = nums.to_vec();
        for i in 0..n {
            butterfly(&mut g, i, |c0, c1| (c0 - c1, c0 + c1));
        }
        let size = 1i64 << n;
        if let Some((k, &v)) = g.iter().enumerate().find(|(_, v)| v.abs() != size) {
            return Err(Error::NotBoolean {
                index: k as u64,
                value: v as f64 / size as f64,
            });
        }
        return TruthTable::from_fn(n, |k| Sign::from_bit(g[k.0 as usize] > 0));
    }
    let mut g: Vec<f64> = s.values().collect();
    for i in 0..n {
        let (fm, fp) = (
            standardized(d.mu(i), Sign::Minus),
            standardized(d.mu(i), Sign::Plus),
        );
        butterfly(&mut g, i, |c0, c1| (c0 + c1 * fm, c0 + c1 * fp));
    }
    let mut out = vec![Sign::Minus; g.len()];
    for (k, &v) in g.iter().enumerate() {
        out[k] = if (v - 1.0).abs() <= BOOLEAN_TOLERANCE {
            Sign::Plus
        } else if (v + 1.0).abs() <= BOOLEAN_TOLERANCE {
            Sign::Minus
        } else {
            return Err(Error::NotBoolean {
                index: k as u64,
                value: v,
            });
        };
    }
    TruthTable::from_signs(n, &out)
}

/// One pass over variable `var`: pairs `(lo, hi)` differing only in bit
/// `var` are replaced by `op(lo, hi)`.
#[inline]
fn butterfly<T: Copy>(g: &mut [T], var: usize, op: impl Fn(T, T) -> (T, T)) {
    let half = 1 << var;
    for block in g.chunks_exact_mut(half << 1) {
        let (lo, hi) = block.split_at_mut(half);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            (*a, *b) = op(*a, *b);
        }
    }
}
