//! Brute-force evaluation of the decoherence matrix by direct polynomial
//! expansion: each of the `N` factors contributes one of
//! `{pbar, d z, d* z̄, p z z̄}`, and `D(n, n')` is the coefficient of
//! `z^n z̄^n'` in the product. Exponential in bookkeeping but exact, so it
//! serves as the oracle for the closed-form routes at small `N`.

use ndarray::Array2;
use num_complex::Complex64;

use super::matrix::EnsembleDecoherenceMatrix;
use super::one_particle::OneParticleHistoryData;
use crate::error::{CoreError, Result};
use crate::numerics::logcomplex::LogComplex;

pub const BRUTE_FORCE_MAX_N: usize = 12;

pub fn brute_force_dnn(
    n_total: usize,
    one: &OneParticleHistoryData,
) -> Result<EnsembleDecoherenceMatrix> {
    if n_total == 0 || n_total > BRUTE_FORCE_MAX_N {
        return Err(CoreError::Domain(format!(
            "brute force expansion supports 1 <= N <= {BRUTE_FORCE_MAX_N}, got {n_total}"
        )));
    }
    let dim = n_total + 1;
    let mut coeff = Array2::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    coeff[[0, 0]] = Complex64::new(1.0, 0.0);
    let pbar = Complex64::new(one.pbar, 0.0);
    let p = Complex64::new(one.p, 0.0);
    for step in 0..n_total {
        let mut next = Array2::from_elem((dim, dim), Complex64::new(0.0, 0.0));
        for n in 0..=step + 1 {
            for np in 0..=step + 1 {
                let mut acc = Complex64::new(0.0, 0.0);
                if n <= step && np <= step {
                    acc += pbar * coeff[[n, np]];
                }
                if n >= 1 {
                    acc += one.d * coeff[[n - 1, np]];
                }
                if np >= 1 {
                    acc += one.d.conj() * coeff[[n, np - 1]];
                }
                if n >= 1 && np >= 1 {
                    acc += p * coeff[[n - 1, np - 1]];
                }
                next[[n, np]] = acc;
            }
        }
        coeff = next;
    }
    let entries = coeff.mapv(LogComplex::from_complex);
    EnsembleDecoherenceMatrix::from_entries(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::exact::exact_dnn;
    use approx::assert_abs_diff_eq;

    fn sample_one() -> OneParticleHistoryData {
        OneParticleHistoryData::synthetic(0.22, 0.71, -0.09).unwrap()
    }

    #[test]
    fn two_particle_hand_expansion() {
        let one = sample_one();
        let m = brute_force_dnn(2, &one).unwrap();
        // Zero crossings: pbar²; one: 2 pbar Re-structure; two: p².
        assert_abs_diff_eq!(
            m.entry(0, 0).to_complex().re,
            one.pbar * one.pbar,
            epsilon = 1e-15
        );
        let d11 = m.entry(1, 1).to_complex();
        let expect11 = 2.0 * (one.p * one.pbar + one.d.norm_sqr());
        assert_abs_diff_eq!(d11.re, expect11, epsilon = 1e-15);
        assert_abs_diff_eq!(d11.im, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            m.entry(2, 2).to_complex().re,
            one.p * one.p,
            epsilon = 1e-15
        );
        let d21 = m.entry(2, 1).to_complex();
        let expect21 = 2.0 * one.p * one.d;
        assert_abs_diff_eq!((d21 - expect21).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn matches_exact_at_n8() {
        let one = sample_one();
        let brute = brute_force_dnn(8, &one).unwrap();
        for n in 0..=8 {
            for np in 0..=8 {
                let b = brute.entry(n, np).to_complex();
                let e = exact_dnn(8, n, np, &one).unwrap().to_complex();
                let scale = b.norm().max(e.norm()).max(1e-30);
                assert!(
                    (b - e).norm() / scale < 1e-12,
                    "mismatch at ({n},{np}): {b} vs {e}"
                );
            }
        }
    }

    #[test]
    fn row_sums_close_to_unity() {
        let one = sample_one();
        let m = brute_force_dnn(10, &one).unwrap();
        let total = m.total_sum().to_complex();
        assert_abs_diff_eq!(total.re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(total.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn refuses_large_n() {
        assert!(brute_force_dnn(13, &sample_one()).is_err());
    }
}
