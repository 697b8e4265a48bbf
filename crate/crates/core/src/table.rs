//! Truth tables over `{-1,+1}` and the index types used to address them.
//!
//! Assignment `k` encodes the input tuple with variable `j` (0-based) in bit
//! `j` of `k`: a clear bit is `x = -1`, a set bit is `x = +1`. Outputs are
//! packed the same way, bit `k` set meaning `f(x) = +1`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Neg;

use crate::error::{Error, Result};

/// Largest supported arity (2^24 outputs).
pub const MAX_ARITY: usize = 24;

/// A value in `{-1,+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// Both signs, `-1` first.
    pub const ALL: [Sign; 2] = [Sign::Minus, Sign::Plus];

    #[inline]
    pub fn value(self) -> i32 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    #[inline]
    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    /// `true` maps to `+1`.
    #[inline]
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// Sign of a real number; `None` for zero and NaN.
    pub fn of(x: f64) -> Option<Self> {
        if x > 0.0 {
            Some(Sign::Plus)
        } else if x < 0.0 {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// Index of one input assignment, `0 <= k < 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssignmentIndex(pub u32);

impl AssignmentIndex {
    /// Value of variable `var` (0-based) in this assignment.
    #[inline]
    pub fn value(self, var: usize) -> Sign {
        Sign::from_bit(self.0 >> var & 1 == 1)
    }

    pub fn from_values(values: &[Sign]) -> Self {
        let k = values
            .iter()
            .enumerate()
            .fold(0u32, |k, (j, s)| k | (s.is_plus() as u32) << j);
        AssignmentIndex(k)
    }
}

/// A subset `U` of the variables, bit `j` set iff variable `j` is in `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub fn singleton(var: usize) -> Self {
        SubsetMask(1 << var)
    }

    #[inline]
    pub fn contains(self, var: usize) -> bool {
        self.0 >> var & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Variables in the subset, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&j| self.contains(j))
    }
}

/// A Boolean function on `n` inputs stored as a packed `2^n`-bit table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(arity: usize) -> usize {
    if arity <= 6 {
        1
    } else {
        1 << (arity - 6)
    }
}

/// Mask of the valid bits in each word for this arity.
#[inline]
pub(crate) fn valid_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity > MAX_ARITY {
        return Err(Error::ArityTooLarge {
            arity,
            max: MAX_ARITY,
        });
    }
    Ok(())
}

impl TruthTable {
    /// Builds a table by evaluating `f` at every assignment.
    pub fn from_fn(arity: usize, mut f: impl FnMut(AssignmentIndex) -> Sign) -> Result<Self> {
        check_arity(arity)?;
        let mut words = vec![0u64; word_count(arity)];
        for k in 0..1u32 << arity {
            if f(AssignmentIndex(k)).is_plus() {
                words[(k >> 6) as usize] |= 1 << (k & 63);
            }
        }
        Ok(TruthTable { arity, words })
    }

    pub fn from_signs(arity: usize, outputs: &[Sign]) -> Result<Self> {
        check_arity(arity)?;
        let expected = 1usize << arity;
        if outputs.len() != expected {
            return Err(Error::TableLength {
                expected,
                found: outputs.len(),
            });
        }
        Self::from_fn(arity, |k| outputs[k.0 as usize])
    }

    /// Table for `arity <= 6` given directly as its packed output bits.
    /// Bits above `2^arity` must be clear.
    pub fn from_bits(arity: usize, bits: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::ArityTooLarge { arity, max: 6 });
        }
        if bits & !valid_mask(arity) != 0 {
            return Err(Error::TableLength {
                expected: 1 << arity,
                found: 64 - bits.leading_zeros() as usize,
            });
        }
        Ok(TruthTable {
            arity,
            words: vec![bits],
        })
    }

    /// Table from packed words; bit `k % 64` of word `k / 64` is output `k`.
    pub fn from_words(arity: usize, words: Vec<u64>) -> Result<Self> {
        check_arity(arity)?;
        if words.len() != word_count(arity) || words[0] & !valid_mask(arity) != 0 {
            return Err(Error::TableLength {
                expected: 1 << arity,
                found: words.len() * 64,
            });
        }
        Ok(TruthTable { arity, words })
    }

    pub fn constant(arity: usize, value: Sign) -> Result<Self> {
        check_arity(arity)?;
        let fill = if value.is_plus() {
            valid_mask(arity)
        } else {
            0
        };
        Ok(TruthTable {
            arity,
            words: vec![fill; word_count(arity)],
        })
    }

    /// `f(x) = x_var`.
    pub fn dictator(arity: usize, var: usize) -> Result<Self> {
        if var >= arity {
            return Err(Error::VariableOutOfRange {
                variable: var,
                arity,
            });
        }
        Self::from_fn(arity, |k| k.value(var))
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of assignments, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn evaluate(&self, k: AssignmentIndex) -> Result<Sign> {
        if k.0 as usize >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: k.0 as u64,
                len: self.len() as u64,
            });
        }
        Ok(self.get(k.0 as usize))
    }

    /// Unchecked lookup; panics if `k >= 2^n`.
    #[inline]
    pub fn get(&self, k: usize) -> Sign {
        debug_assert!(k < self.len());
        Sign::from_bit(self.words[k >> 6] >> (k & 63) & 1 == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len()).map(|k| self.get(k))
    }

    /// Number of assignments with output `+1`.
    pub fn count_plus(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// The output-negated function `-f`.
    pub fn negated(&self) -> Self {
        let mask = valid_mask(self.arity);
        TruthTable {
            arity: self.arity,
            words: self.words.iter().map(|w| !w & mask).collect(),
        }
    }
}
