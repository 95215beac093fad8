//! Canonical labels for roots of unity.
//!
//! A root `e^{2iπ s/n}` is stored in lowest terms with `0 ≤ s < n` and
//! `gcd(s, n) = 1` (so `n` is the exact multiplicative order).  All
//! root manipulations below are label arithmetic — no floating point —
//! except [`RootOfUnity::value`].

use num_complex::Complex64;

use super::modular::{gcd_u64, mod_reduce};
use crate::{Error, Result};

/// A primitive `n`-th root of unity `ζ_n^s = e^{2iπ s/n}` in canonical
/// lowest-terms form (`0 ≤ s < n`, `gcd(s, n) = 1`; `n ≥ 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    /// The root `e^{2iπ s/n}`, requiring `gcd(s, n) = 1` (primitive of
    /// the stated order).  Use [`RootOfUnity::from_power`] to
    /// canonicalize a non-primitive label.
    pub fn new(s: i64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("root order must be positive"));
        }
        let s_red = mod_reduce(s as i128, n);
        if gcd_u64(s_red, n) != 1 && n > 1 {
            return Err(Error::NotCoprime(s, n as i64));
        }
        Ok(RootOfUnity { order: n, exponent: s_red % n })
    }

    /// Canonicalize `e^{2iπ s/n}` for arbitrary `s`: reduces the
    /// fraction `s/n` so the stored order is the exact order.
    pub fn from_power(s: i128, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("root order must be positive"));
        }
        let s_red = mod_reduce(s, n);
        let g = gcd_u64(s_red, n);
        if g == 0 {
            // s ≡ 0: the root is 1, order 1.
            return Ok(RootOfUnity { order: 1, exponent: 0 });
        }
        Ok(RootOfUnity { order: n / g, exponent: s_red / g })
    }

    /// The multiplicative order `n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The canonical exponent `s` with `0 ≤ s < n`, `gcd(s, n) = 1`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Complex embedding `e^{2iπ s/n}`.
    pub fn value(&self) -> Complex64 {
        let theta = 2.0 * core::f64::consts::PI * (self.exponent as f64) / (self.order as f64);
        Complex64::new(libm::cos(theta), libm::sin(theta))
    }

    /// `ξ^e` as a canonical root label (exact; `e` may be any integer).
    pub fn pow(&self, e: i128) -> RootOfUnity {
        let s = (self.exponent as i128) * (e % self.order as i128);
        RootOfUnity::from_power(s, self.order).expect("order positive")
    }

    /// Complex embedding of `ξ^e` without re-canonicalizing.
    pub fn value_pow(&self, e: i128) -> Complex64 {
        self.pow(e).value()
    }

    /// The complex conjugate `ξ^{-1}` (also the inverse).
    pub fn conj(&self) -> RootOfUnity {
        self.pow(-1)
    }

    /// Whether this root lies in the evaluation domain `𝕌`:
    /// order `> 2` and order `≢ 2 (mod 4)`.
    pub fn is_in_u(&self) -> bool {
        self.order > 2 && self.order % 4 != 2
    }

    /// Whether this root lies in `𝕌₀ ⊂ 𝕌`: even order (necessarily
    /// divisible by 4 given the `𝕌` constraint).
    pub fn is_in_u0(&self) -> bool {
        self.is_in_u() && self.order % 2 == 0
    }

    /// The canonical label of `−ξ`.
    ///
    /// Writing `ξ = ζ_{2r}^{s}` (with `s` odd when the order is even),
    /// `−ξ = ζ_{2r}^{s + r}`; the result is reduced to lowest terms, so
    /// e.g. order 10 ↦ order 5 and order 8 ↦ order 8.
    pub fn negate(&self) -> RootOfUnity {
        // −1 = e^{iπ} = e^{2iπ·(n)/(2n)}: −ξ = e^{2iπ(2s+n)/(2n)}.
        RootOfUnity::from_power(2 * self.exponent as i128 + self.order as i128, 2 * self.order)
            .expect("order positive")
    }
}

impl core::fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "e^(2iπ·{}/{})", self.exponent, self.order)
    }
}

/// Free-function form of [`RootOfUnity::negate`] matching the spec's
/// operation name.
pub fn negate_root(xi: &RootOfUnity) -> RootOfUnity {
    xi.negate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization() {
        let r = RootOfUnity::from_power(4, 10).unwrap();
        assert_eq!((r.order(), r.exponent()), (5, 2));
        let one = RootOfUnity::from_power(0, 7).unwrap();
        assert_eq!((one.order(), one.exponent()), (1, 0));
        assert!(RootOfUnity::new(2, 4).is_err());
        assert!(RootOfUnity::new(3, 4).is_ok());
    }

    #[test]
    fn negate_root_spec_examples() {
        // Order 10 (s = 1): −ξ has order 5.
        let xi = RootOfUnity::new(1, 10).unwrap();
        let m = negate_root(&xi);
        assert_eq!(m.order(), 5);
        // ζ_10 = e^{iπ/5}; −ζ_10 = e^{iπ(1/5 + 1)} = e^{2iπ·3/5}? check via value.
        let diff = (xi.value() * -1.0) - m.value();
        assert!(diff.norm() < 1e-12);

        // Order 8 stays order 8.
        let xi8 = RootOfUnity::new(1, 8).unwrap();
        let m8 = negate_root(&xi8);
        assert_eq!(m8.order(), 8);
        assert!(((xi8.value() * -1.0) - m8.value()).norm() < 1e-12);

        // Order 2 (−1) negates to 1.
        let minus1 = RootOfUnity::new(1, 2).unwrap();
        assert_eq!(negate_root(&minus1).order(), 1);
    }

    #[test]
    fn pow_and_conj() {
        let xi = RootOfUnity::new(3, 7).unwrap();
        let sq = xi.pow(2);
        assert_eq!((sq.order(), sq.exponent()), (7, 6));
        let inv = xi.conj();
        assert_eq!(inv.exponent(), 4); // 3·4 = 12 ≡ 5... check: 3+4=7 ≡ 0 so conj exponent = 7−3 = 4.
        assert!((xi.value() * inv.value() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // Huge exponents reduce mod order first.
        let big = xi.pow(7 * 1_000_000_000_000i128 + 2);
        assert_eq!((big.order(), big.exponent()), (sq.order(), sq.exponent()));
    }

    #[test]
    fn u_membership() {
        assert!(RootOfUnity::new(1, 5).unwrap().is_in_u());
        assert!(RootOfUnity::new(1, 4).unwrap().is_in_u());
        assert!(!RootOfUnity::new(1, 6).unwrap().is_in_u()); // 6 ≡ 2 mod 4
        assert!(!RootOfUnity::new(1, 2).unwrap().is_in_u());
        assert!(RootOfUnity::new(1, 8).unwrap().is_in_u0());
        assert!(!RootOfUnity::new(1, 5).unwrap().is_in_u0());
    }
}
