//! Curve labels `(p, q)_T` on the torus and their `H_1(M_k; Z/2)`
//! grading classes.

use crate::{Error, Result};

/// A (multi)curve label `(p, q)_T` in the Frohman–Gelca basis of the
/// torus skein algebra: the Chebyshev-`T` lift of the `(p, q)` curve.
///
/// Labels are stored in the canonical normalization `(p, q) ∼ (−p, −q)`
/// with `q > 0`, or `q = 0 ∧ p ≥ 0`.  Negative `p` is allowed (and
/// common) when `q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveLabel {
    p: i64,
    q: i64,
}

impl CurveLabel {
    /// Construct a normalized label.
    pub fn new(p: i64, q: i64) -> Self {
        if q < 0 || (q == 0 && p < 0) {
            CurveLabel { p: -p, q: -q }
        } else {
            CurveLabel { p, q }
        }
    }

    /// First coordinate (meridian multiplicity).
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Second coordinate (longitude multiplicity).
    pub fn q(&self) -> i64 {
        self.q
    }

    /// The pair as a tuple.
    pub fn pair(&self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// `gcd(p, q)` (0 for the empty label `(0,0)`).
    pub fn content(&self) -> i64 {
        crate::numth::gcd_i64(self.p, self.q)
    }

    /// Whether this is `(0, 0)` (twice the empty link).
    pub fn is_trivial(&self) -> bool {
        self.p == 0 && self.q == 0
    }
}

impl core::fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A class in `H_1(M_k; Z/2) ≅ (Z/2)^{ε_x} × Z/2`: the `x`-component
/// is only present for even `k` (for odd `k` the meridian class dies),
/// and the `y`-component tracks `q mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hom2Class {
    /// Meridian parity (always 0 when `k` is odd).
    pub ex: u8,
    /// Longitude parity.
    pub ey: u8,
}

impl core::fmt::Display for Hom2Class {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "K({}{})", self.ex, self.ey)
    }
}

/// The grading class of a curve label in `H_1(M_k; Z/2)`.
///
/// For the monodromy `B_k`, `H_1(M_k) = Z ⊕ Z/k ⊕ Z` and the mod-2
/// horizontal classes are `(p mod 2, q mod 2)` for even `k`, and
/// `(0, q mod 2)` for odd `k` (where `x` has odd order, so its mod-2
/// class is trivial).  Requires `k ≥ 1`.
pub fn grading(label: &CurveLabel, k: u64) -> Result<Hom2Class> {
    if k == 0 {
        return Err(Error::Domain("grading requires k >= 1"));
    }
    let ex = if k % 2 == 0 { (label.p().rem_euclid(2)) as u8 } else { 0 };
    let ey = (label.q().rem_euclid(2)) as u8;
    Ok(Hom2Class { ex, ey })
}

/// The grading class of a curve label in `H_1(M_S; Z/2)` for the
/// monodromy `S`: the identification `x ∼ y` leaves only the total
/// parity `(p + q) mod 2`, reported in the `ey` slot.
pub fn grading_s(label: &CurveLabel) -> Hom2Class {
    Hom2Class { ex: 0, ey: ((label.p() + label.q()).rem_euclid(2)) as u8 }
}
