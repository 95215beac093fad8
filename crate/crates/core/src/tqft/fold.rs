//! Folding of extended torus basis indices onto the canonical RT basis.
//!
//! At a primitive `2r`-th root of unity the torus TQFT space is spanned by
//! `e_j := S_j(z)` subject to the relations (paper §3, Remark "Periodicity")
//!
//! * `e_{j+2r} = e_j` (periodicity),
//! * `e_{-j} = -e_j` (from `S_{-n} = -S_n`), hence `e_0 = 0`,
//! * `e_r = 0`,
//! * `e_{r+j} = -e_{r-j}`,
//! * and, when `r` is odd, the reflection `e_{r-m} = -e_m`.
//!
//! The canonical basis is `e_1, …, e_{(r-1)/2}` for odd `r` and
//! `e_1, …, e_{r-1}` for even `r`.
//!
//! The odd-`r` reflection printed in the paper reads
//! `e_{(r-1)/2 + j} = e_{(r-1)/2 - 1 - j}`, i.e. `e_m = e_{r-1-m}`; that form
//! would identify `e_{(r+1)/2}` with `e_{(r-3)/2}` and send `e_{r-1}` to
//! `e_0 = 0`, collapsing the basis.  The consistent relation is
//! `e_{r-m} = -e_m`: together with the other rules it gives the clean
//! description `e_x = +e_{x mod r}` when `x mod r` is in the basis range and
//! `e_x = -e_{(-x) mod r}` otherwise, it is the unique sign under which the
//! Appendix A formula for ρ(S) is well defined on the quotient (the sum
//! `Σ_t (-ξ)^{2tj} e_t` is then compatible with `e_{-j} = -e_j`, and
//! ρ(S)² = ρ(-I) holds exactly rather than failing by a rank-one defect),
//! and the diagonal `Z((p,q))`-action is compatible with either sign, so the
//! §3 closed forms for `(l,0)` are unaffected.  The build spec's glossary
//! states the folding relations as `e_r = 0, e_{r+j} = -e_{r-j}`, which pins
//! the same sign.  See the decisions ledger.

use crate::numth::RootOfUnity;
use crate::{Error, Result};

/// Basis bookkeeping for the torus TQFT space at a primitive `2r`-th root ξ.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisSpec {
    xi: RootOfUnity,
    r: u64,
}

impl BasisSpec {
    /// Builds the basis data for a root ξ of even order `2r` with `r ≥ 2`.
    ///
    /// Odd orders are rejected with [`Error::OddOrder`]; order 2 (`r = 1`,
    /// an empty basis) is rejected as a domain error.
    pub fn new(xi: &RootOfUnity) -> Result<Self> {
        let order = xi.order();
        if order % 2 != 0 {
            return Err(Error::OddOrder(order));
        }
        let r = order / 2;
        if r < 2 {
            return Err(Error::Domain("TQFT basis needs a root of order at least 4"));
        }
        Ok(BasisSpec { xi: xi.clone(), r })
    }

    /// The root of unity ξ the theory is evaluated at.
    pub fn xi(&self) -> &RootOfUnity {
        &self.xi
    }

    /// The level parameter `r` (half the order of ξ).
    pub fn r(&self) -> u64 {
        self.r
    }

    /// Whether `r` is odd (the regime of the Appendix A formulas).
    pub fn r_odd(&self) -> bool {
        self.r % 2 == 1
    }

    /// Number of basis vectors: `(r-1)/2` for odd `r`, `r-1` for even `r`.
    pub fn dim(&self) -> usize {
        if self.r % 2 == 1 {
            ((self.r - 1) / 2) as usize
        } else {
            (self.r - 1) as usize
        }
    }

    /// The constant ν of Theorem "CalculRT": 1 for odd `r`, 2 for even `r`.
    pub fn nu(&self) -> u64 {
        if self.r % 2 == 1 {
            1
        } else {
            2
        }
    }
}

/// Result of folding an extended index `j` onto the canonical basis.
///
/// `index` is the paper's 1-based basis index; `sign` is `±1`, or `0` when
/// the vector is annihilated (`index` is then absent).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldResult {
    /// 1-based basis index `m` with `e_j = sign · e_m`, absent when `e_j = 0`.
    pub index: Option<u64>,
    /// `+1`, `-1`, or `0` exactly when `index` is absent.
    pub sign: i8,
}

impl FoldResult {
    /// The annihilated result `e_j = 0`.
    pub const ZERO: FoldResult = FoldResult { index: None, sign: 0 };

    /// True when the folded vector is zero.
    pub fn is_zero(&self) -> bool {
        self.index.is_none()
    }

    /// 0-based matrix row for a non-zero result.
    pub fn row(&self) -> Option<usize> {
        self.index.map(|m| (m - 1) as usize)
    }
}

/// Folds `e_j` for any integer `j` onto the canonical basis.
///
/// Applies `e_{j+2r} = e_j`, `e_{-j} = -e_j`, `e_0 = e_r = 0`, and for odd
/// `r` the reflection `e_{r-m} = -e_m`, until the index is in range or the
/// vector is annihilated.  The result is independent of the order in which
/// the rules are applied (confluence is exercised in the tests).
pub fn fold_index(j: i64, spec: &BasisSpec) -> FoldResult {
    let r = spec.r() as i64;
    let two_r = 2 * r;
    let mut m = j.rem_euclid(two_r);
    let mut sign = 1i8;
    if m == 0 || m == r {
        return FoldResult::ZERO;
    }
    if m > r {
        m = two_r - m;
        sign = -sign;
    }
    if r % 2 == 1 && m > (r - 1) / 2 {
        m = r - m;
        sign = -sign;
    }
    debug_assert!(m >= 1 && (m as usize) <= spec.dim());
    FoldResult { index: Some(m as u64), sign }
}
