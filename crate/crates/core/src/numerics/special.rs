//! The incomplete Gaussian integral and log-space combinatorics.

use crate::error::{CoreError, Result};

/// Square root of pi.
pub const SQRT_PI: f64 = 1.7724538509055160272981674833411;

/// Incomplete Gaussian integral `∫_{-inf}^{a} exp(-λ²) dλ = (√π/2)(1 + erf a)`.
///
/// `erf` comes from `libm`'s rational-approximation implementation
/// (sub-ulp accuracy, well under the 1e-14 budget); the function is needed
/// inside propagators evaluated millions of times, so no quadrature here.
pub fn gauss_tail_integral(a: f64) -> f64 {
    // erfc for the negative branch avoids the 1 + erf cancellation there.
    if a >= 0.0 {
        0.5 * SQRT_PI * (1.0 + libm::erf(a))
    } else {
        0.5 * SQRT_PI * libm::erfc(-a)
    }
}

/// `ln (N choose n)` via log-gamma, valid for `N` far beyond factorial overflow.
pub fn log_binomial(n_total: u64, n: u64) -> Result<f64> {
    if n > n_total {
        return Err(CoreError::Domain(format!(
            "log_binomial needs n <= N, got n = {n}, N = {n_total}"
        )));
    }
    let ln_fact = |k: u64| libm::lgamma(k as f64 + 1.0);
    Ok(ln_fact(n_total) - ln_fact(n) - ln_fact(n_total - n))
}

/// Numerically stable `ln(Σ exp(terms))` for real terms.
pub fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    // Kahan-compensated accumulation: the sums in the ensemble module run
    // to 10^4 terms and their ratios are asserted to 1e-12.
    let mut sum = 0.0;
    let mut c = 0.0;
    for &t in terms {
        let y = (t - max).exp() - c;
        let s = sum + y;
        c = (s - sum) - y;
        sum = s;
    }
    max + sum.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Adaptive Simpson oracle for `∫ exp(-λ²)` on a finite interval.
    fn simpson_gauss(lo: f64, hi: f64) -> f64 {
        fn f(x: f64) -> f64 {
            (-x * x).exp()
        }
        fn recurse(a: f64, b: f64, fa: f64, fb: f64, fm: f64, whole: f64, eps: f64) -> f64 {
            let m = 0.5 * (a + b);
            let lm = 0.5 * (a + m);
            let rm = 0.5 * (m + b);
            let flm = f(lm);
            let frm = f(rm);
            let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (left + right - whole).abs() <= 15.0 * eps {
                left + right + (left + right - whole) / 15.0
            } else {
                recurse(a, m, fa, fm, flm, left, eps / 2.0)
                    + recurse(m, b, fm, fb, frm, right, eps / 2.0)
            }
        }
        let fa = f(lo);
        let fb = f(hi);
        let fm = f(0.5 * (lo + hi));
        let whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        recurse(lo, hi, fa, fb, fm, whole, 1e-14)
    }

    #[test]
    fn full_gaussian() {
        assert_abs_diff_eq!(gauss_tail_integral(8.0), SQRT_PI, epsilon = 1e-12);
    }

    #[test]
    fn half_gaussian_by_symmetry() {
        assert_abs_diff_eq!(gauss_tail_integral(0.0), SQRT_PI / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn unit_upper_limit_vs_simpson_oracle() {
        let oracle = simpson_gauss(-10.0, 1.0);
        assert_abs_diff_eq!(gauss_tail_integral(1.0), oracle, epsilon = 1e-12);
    }

    #[test]
    fn reflection_identity() {
        for &a in &[-3.7, -1.0, -0.2, 0.0, 0.4, 1.9, 6.0] {
            assert_abs_diff_eq!(
                gauss_tail_integral(a) + gauss_tail_integral(-a),
                SQRT_PI,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn strictly_increasing() {
        let mut prev = gauss_tail_integral(-6.0);
        let mut a = -6.0 + 0.05;
        while a < 6.0 {
            let v = gauss_tail_integral(a);
            assert!(v > prev, "not increasing at a = {a}");
            prev = v;
            a += 0.05;
        }
    }

    #[test]
    fn small_binomials_exact() {
        assert_abs_diff_eq!(log_binomial(5, 2).unwrap(), 10.0_f64.ln(), epsilon = 1e-13);
        assert_abs_diff_eq!(log_binomial(7, 0).unwrap(), 0.0, epsilon = 0.0);
        assert_abs_diff_eq!(log_binomial(9, 9).unwrap(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn card_hands_vs_integer_oracle() {
        // 52 choose 5 by exact integer arithmetic.
        let exact: u64 = (48..=52).product::<u64>() / (1..=5u64).product::<u64>();
        assert_eq!(exact, 2_598_960);
        let lb = log_binomial(52, 5).unwrap();
        assert!(((lb - (exact as f64).ln()) / lb.abs()) < 1e-12);
    }

    #[test]
    fn binomial_symmetry_is_bitwise() {
        for &(n_total, n) in &[(100u64, 17u64), (10_000, 137), (52, 5)] {
            let a = log_binomial(n_total, n).unwrap();
            let b = log_binomial(n_total, n_total - n).unwrap();
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn binomial_rejects_bad_args() {
        assert!(log_binomial(3, 4).is_err());
    }

    #[test]
    fn log_sum_exp_scales() {
        let terms = [1000.0, 1000.0 + (2.0f64).ln()];
        assert_abs_diff_eq!(log_sum_exp(&terms), 1000.0 + (3.0f64).ln(), epsilon = 1e-12);
        assert_eq!(log_sum_exp(&[f64::NEG_INFINITY]), f64::NEG_INFINITY);
    }
}
