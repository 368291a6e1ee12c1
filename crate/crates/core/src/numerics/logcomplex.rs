//! Complex numbers in log-magnitude + phase form.
//!
//! The ensemble decoherence matrix holds entries whose magnitudes range over
//! hundreds of decades for `N ~ 10^4`; they are representable only as
//! `(ln |z|, arg z)` pairs.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogComplex {
    /// Natural log of the magnitude; `-inf` encodes zero.
    pub ln_mag: f64,
    /// Phase in radians (not reduced; only ever used through sin/cos).
    pub phase: f64,
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex { ln_mag: f64::NEG_INFINITY, phase: 0.0 };

    pub fn new(ln_mag: f64, phase: f64) -> Self {
        Self { ln_mag, phase }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.norm_sqr() == 0.0 {
            return Self::ZERO;
        }
        Self { ln_mag: z.norm().ln(), phase: z.arg() }
    }

    /// From a positive real given by its log.
    pub fn from_ln(ln_mag: f64) -> Self {
        Self { ln_mag, phase: 0.0 }
    }

    pub fn is_zero(&self) -> bool {
        self.ln_mag == f64::NEG_INFINITY
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let m = self.ln_mag.exp();
        Complex64::new(m * self.phase.cos(), m * self.phase.sin())
    }

    pub fn conj(&self) -> Self {
        Self { ln_mag: self.ln_mag, phase: -self.phase }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::ZERO;
        }
        Self { ln_mag: self.ln_mag + other.ln_mag, phase: self.phase + other.phase }
    }

    /// Stable sum of a slice: scale by the largest magnitude, accumulate in
    /// the complex plane, restore the scale.
    pub fn sum(terms: &[LogComplex]) -> LogComplex {
        let max = terms
            .iter()
            .map(|t| t.ln_mag)
            .fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return LogComplex::ZERO;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        let mut comp = Complex64::new(0.0, 0.0);
        for t in terms {
            if t.is_zero() {
                continue;
            }
            let m = (t.ln_mag - max).exp();
            let v = Complex64::new(m * t.phase.cos(), m * t.phase.sin());
            // Kahan step in each component.
            let y = v - comp;
            let s = acc + y;
            comp = (s - acc) - y;
            acc = s;
        }
        if acc.norm_sqr() == 0.0 {
            return LogComplex::ZERO;
        }
        LogComplex { ln_mag: max + acc.norm().ln(), phase: acc.arg() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn round_trip() {
        let z = Complex64::new(-3.25, 1.5);
        let l = LogComplex::from_complex(z);
        let back = l.to_complex();
        assert_abs_diff_eq!(back.re, z.re, epsilon = 1e-14);
        assert_abs_diff_eq!(back.im, z.im, epsilon = 1e-14);
    }

    #[test]
    fn zero_is_absorbing() {
        let z = LogComplex::from_complex(Complex64::new(2.0, 0.0));
        assert!(LogComplex::ZERO.mul(&z).is_zero());
        assert_eq!(LogComplex::ZERO.to_complex(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sum_over_wide_dynamic_range() {
        // 10^200-scaled values: e^500 * (1 + i) + e^500 * (1 - i) = 2 e^500.
        let a = LogComplex::new(500.0 + 0.5 * (2.0f64).ln(), std::f64::consts::FRAC_PI_4);
        let b = a.conj();
        let s = LogComplex::sum(&[a, b]);
        assert_abs_diff_eq!(s.ln_mag, 500.0 + (2.0f64).ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(s.phase, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn cancellation_to_zero() {
        let a = LogComplex::new(10.0, 0.0);
        let b = LogComplex::new(10.0, std::f64::consts::PI);
        let s = LogComplex::sum(&[a, b]);
        // exp(10) - exp(10) cancels exactly.
        assert!(s.is_zero() || s.ln_mag < -20.0);
    }
}
