//! Small float helpers used across the solvers.
//!
//! Transcendentals go through `libm` so the crate stays `no_std` and the
//! solvers produce bit-identical results on every platform.

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// `log2(1 + x)` with the convention that a non-positive argument
/// contributes zero rate.
pub(crate) fn rate_log2(x: f64) -> f64 {
    if x > 0.0 {
        log2(1.0 + x)
    } else {
        0.0
    }
}

/// Relative-tolerance comparison used by indicator gates: `value >= target`
/// up to a small relative and absolute slack, so equality constraints built
/// by the solvers (harvest exactly `p_c`, SNR exactly `theta`) pass their own
/// indicator.
pub(crate) fn meets_threshold(value: f64, target: f64) -> bool {
    value >= target - 1e-9 * target.abs().max(1.0)
}
