//! Dense complex operators on the torus TQFT space.
//!
//! Matrices are stored row-major over the canonical folded basis of a
//! [`BasisSpec`].  Entries are complex doubles; diagonal operators whose
//! entries are pure powers of a common root of unity additionally carry the
//! exact exponents, so power laws such as `ρ(B_k) = ρ(B_1)^k` can be checked
//! exactly rather than numerically (spec design decision).

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::numth::RootOfUnity;
use crate::{Error, Result};

use super::fold::BasisSpec;

/// Exact description of a diagonal operator: entry `j` equals
/// `base^{exponents[j]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactDiagonal {
    /// Common root of unity the entries are powers of.
    pub base: RootOfUnity,
    /// Exponent of `base` for each diagonal entry.
    pub exponents: Vec<i128>,
}

/// Dense complex matrix acting on the folded TQFT basis.
#[derive(Clone, Debug)]
pub struct TQFTOperator {
    r: u64,
    dim: usize,
    data: Vec<Complex64>,
    exact_diagonal: Option<ExactDiagonal>,
}

impl TQFTOperator {
    /// The zero operator for the given basis.
    pub fn zeros(spec: &BasisSpec) -> Self {
        let dim = spec.dim();
        TQFTOperator {
            r: spec.r(),
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
            exact_diagonal: None,
        }
    }

    /// The identity operator (an exact diagonal with all exponents 0).
    pub fn identity(spec: &BasisSpec) -> Self {
        let dim = spec.dim();
        let mut op = TQFTOperator::zeros(spec);
        for j in 0..dim {
            op.data[j * dim + j] = Complex64::new(1.0, 0.0);
        }
        op.exact_diagonal = Some(ExactDiagonal {
            base: crate::numth::negate_root(spec.xi()),
            exponents: vec![0; dim],
        });
        op
    }

    /// Builds an exact diagonal operator `diag(base^{e_j})`.
    pub fn exact_diagonal_op(spec: &BasisSpec, base: RootOfUnity, exponents: Vec<i128>) -> Result<Self> {
        let dim = spec.dim();
        if exponents.len() != dim {
            return Err(Error::Domain("diagonal exponent count must match the basis dimension"));
        }
        let mut op = TQFTOperator::zeros(spec);
        for (j, &e) in exponents.iter().enumerate() {
            op.data[j * dim + j] = base.value_pow(e);
        }
        op.exact_diagonal = Some(ExactDiagonal { base, exponents });
        Ok(op)
    }

    /// Level parameter `r` of the underlying basis.
    pub fn r(&self) -> u64 {
        self.r
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at `(row, col)`, 0-based.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// Adds `value` to the entry at `(row, col)`; clears exactness data.
    pub fn add_to(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] += value;
        self.exact_diagonal = None;
    }

    /// Exact diagonal data, when this operator is a pure diagonal of powers
    /// of one root of unity.
    pub fn exact_diagonal(&self) -> Option<&ExactDiagonal> {
        self.exact_diagonal.as_ref()
    }

    fn check_compatible(&self, other: &TQFTOperator) -> Result<()> {
        if self.dim != other.dim || self.r != other.r {
            return Err(Error::Domain("operators live on different TQFT bases"));
        }
        Ok(())
    }

    /// Matrix product `self · rhs`.  Exact diagonal data is propagated when
    /// both factors are exact diagonals over the same base.
    pub fn mul(&self, rhs: &TQFTOperator) -> Result<TQFTOperator> {
        self.check_compatible(rhs)?;
        let n = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..n {
                    data[i * n + k] += a * rhs.data[j * n + k];
                }
            }
        }
        let exact_diagonal = match (&self.exact_diagonal, &rhs.exact_diagonal) {
            (Some(a), Some(b)) if a.base == b.base => Some(ExactDiagonal {
                base: a.base.clone(),
                exponents: a
                    .exponents
                    .iter()
                    .zip(b.exponents.iter())
                    .map(|(x, y)| x + y)
                    .collect(),
            }),
            _ => None,
        };
        Ok(TQFTOperator { r: self.r, dim: n, data, exact_diagonal })
    }

    /// Applies the operator to a coefficient vector.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::Domain("vector length must match the basis dimension"));
        }
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += self.data[i * n + j] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Trace of the matrix.
    pub fn trace(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..self.dim {
            acc += self.data[j * self.dim + j];
        }
        acc
    }

    /// Scales every entry by `c`.
    pub fn scale(&self, c: Complex64) -> TQFTOperator {
        TQFTOperator {
            r: self.r,
            dim: self.dim,
            data: self.data.iter().map(|z| z * c).collect(),
            exact_diagonal: None,
        }
    }

    /// Sum `self + rhs`.
    pub fn add(&self, rhs: &TQFTOperator) -> Result<TQFTOperator> {
        self.check_compatible(rhs)?;
        Ok(TQFTOperator {
            r: self.r,
            dim: self.dim,
            data: self.data.iter().zip(rhs.data.iter()).map(|(a, b)| a + b).collect(),
            exact_diagonal: None,
        })
    }

    /// Largest entrywise absolute difference to `rhs`.
    pub fn max_abs_diff(&self, rhs: &TQFTOperator) -> Result<f64> {
        self.check_compatible(rhs)?;
        let mut worst = 0.0f64;
        for (a, b) in self.data.iter().zip(rhs.data.iter()) {
            let d = (a - b).norm();
            if d > worst {
                worst = d;
            }
        }
        Ok(worst)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Tests whether `self = λ · rhs` for a single complex constant λ, using
    /// only entries whose moduli both exceed `floor`.  Returns the constant
    /// and the worst entrywise deviation `|self_ij − λ·rhs_ij|`.
    ///
    /// This is the comparison mode for phase-class operators (Appendix A):
    /// equality is only meaningful up to a global unit-modulus factor.
    pub fn ratio_constant(&self, rhs: &TQFTOperator, floor: f64) -> Result<Option<(Complex64, f64)>> {
        self.check_compatible(rhs)?;
        // Anchor on the entry where rhs is largest (and self is non-negligible).
        let mut anchor: Option<usize> = None;
        let mut best = floor;
        for (idx, (a, b)) in self.data.iter().zip(rhs.data.iter()).enumerate() {
            let m = f64::min(a.norm(), b.norm());
            if m > best {
                best = m;
                anchor = Some(idx);
            }
        }
        let Some(idx) = anchor else {
            return Ok(None);
        };
        let lambda = self.data[idx] / rhs.data[idx];
        let mut worst = 0.0f64;
        for (a, b) in self.data.iter().zip(rhs.data.iter()) {
            if a.norm() <= floor && b.norm() <= floor {
                continue;
            }
            let d = (a - lambda * b).norm();
            if d > worst {
                worst = d;
            }
        }
        Ok(Some((lambda, worst)))
    }
}
