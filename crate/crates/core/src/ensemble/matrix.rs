use ndarray::Array2;

use crate::error::{CoreError, Result};
use crate::numerics::logcomplex::LogComplex;

/// Decoherence matrix `D(n, n')` for `n, n'` in `[0, N]`, stored in
/// log-magnitude + phase form: magnitudes span hundreds of decades for
/// large `N`.
#[derive(Debug, Clone)]
pub struct EnsembleDecoherenceMatrix {
    entries: Array2<LogComplex>,
}

impl EnsembleDecoherenceMatrix {
    pub fn from_entries(entries: Array2<LogComplex>) -> Result<Self> {
        let (r, c) = entries.dim();
        if r != c || r == 0 {
            return Err(CoreError::Domain(format!("matrix must be square, got {r}x{c}")));
        }
        Ok(Self { entries })
    }

    /// Number of rows; `N + 1` for an unbinned matrix over `n ∈ [0, N]`.
    pub fn dim(&self) -> usize {
        self.entries.dim().0
    }

    /// Largest particle count, for an unbinned matrix.
    pub fn n_total(&self) -> usize {
        self.dim() - 1
    }

    pub fn entry(&self, n: usize, nprime: usize) -> LogComplex {
        self.entries[[n, nprime]]
    }

    pub fn entries(&self) -> &Array2<LogComplex> {
        &self.entries
    }

    /// Largest relative deviation from `D(n, n') = D*(n', n)` over all pairs,
    /// measured on the complex values scaled by the larger magnitude.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in a..n {
                let lhs = self.entries[[a, b]];
                let rhs = self.entries[[b, a]].conj();
                if lhs.is_zero() && rhs.is_zero() {
                    continue;
                }
                let scale = lhs.ln_mag.max(rhs.ln_mag);
                let zl = LogComplex::new(lhs.ln_mag - scale, lhs.phase).to_complex();
                let zr = LogComplex::new(rhs.ln_mag - scale, rhs.phase).to_complex();
                worst = worst.max((zl - zr).norm());
            }
        }
        worst
    }

    /// `Σ_{n,n'} D(n, n')` as a log-complex value; equals
    /// `(p + pbar + 2 Re d)^N = 1` for valid one-particle data.
    pub fn total_sum(&self) -> LogComplex {
        let terms: Vec<LogComplex> = self.entries.iter().cloned().collect();
        LogComplex::sum(&terms)
    }

    /// Coarse-grain by summing blocks of `bins`.
    pub fn binned(&self, bins: &BinSpec) -> Result<EnsembleDecoherenceMatrix> {
        let ranges = bins.ranges(self.n_total())?;
        let nb = ranges.len();
        let mut coarse = Array2::from_elem((nb, nb), LogComplex::ZERO);
        for (bi, ri) in ranges.iter().enumerate() {
            for (bj, rj) in ranges.iter().enumerate() {
                let mut terms = Vec::with_capacity(ri.len() * rj.len());
                for n in ri.clone() {
                    for np in rj.clone() {
                        terms.push(self.entries[[n, np]]);
                    }
                }
                coarse[[bi, bj]] = LogComplex::sum(&terms);
            }
        }
        EnsembleDecoherenceMatrix::from_entries(coarse)
    }
}

/// Binning of the count axis into consecutive ranges of a fixed width (the
/// last bin takes any remainder), partitioning `[0, N]`. Coarse graining by
/// `Δn` in the usual sense is a width of `2 Δn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinSpec {
    pub width: usize,
}

impl BinSpec {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(CoreError::Domain("bin width must be at least 1".into()));
        }
        Ok(Self { width })
    }

    /// Bins of width `2 Δn`.
    pub fn of_half_width(half_width: usize) -> Result<Self> {
        if half_width == 0 {
            return Err(CoreError::Domain("bin half-width must be at least 1".into()));
        }
        Self::new(2 * half_width)
    }

    /// Index ranges of the bins partitioning `0..=n_total`.
    pub fn ranges(&self, n_total: usize) -> Result<Vec<std::ops::Range<usize>>> {
        let mut out = Vec::new();
        let mut start = 0usize;
        while start <= n_total {
            let end = (start + self.width).min(n_total + 1);
            out.push(start..end);
            start = end;
        }
        Ok(out)
    }

    /// Bin index holding count `n`.
    pub fn bin_of(&self, n: usize) -> usize {
        n / self.width
    }
}
