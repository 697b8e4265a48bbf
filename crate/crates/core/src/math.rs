// Thin wrappers so the rest of the crate reads like std float code.

#[inline]
pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// `|x| <= bound`, false for NaN.
#[inline]
pub(crate) fn within(x: f64, bound: f64) -> bool {
    abs(x) <= bound
}

/// `|x| < 1`, false for NaN.
#[inline]
pub(crate) fn is_open_unit(x: f64) -> bool {
    abs(x) < 1.0
}
