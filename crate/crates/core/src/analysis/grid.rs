//! Deterministic low-discrepancy grids of sample roots of unity.
//!
//! Rank estimation needs families of evaluation points that (a) lie in the
//! Gauss-sum domain `𝕌 = {ζ : ord(ζ) > 2, ord(ζ) ≢ 2 (mod 4)}`, (b) spread
//! exponents well inside each order (clustered exponents make the stacked
//! Vandermonde blocks ill-conditioned), and (c) are reproducible without an
//! RNG.  Exponent spreading uses the golden-ratio Kronecker sequence; orders
//! walk upward from a caller-chosen floor, so fit, holdout and validation
//! grids draw from disjoint order ranges.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::numth::{gcd_u64, negate_root, RootOfUnity};
use crate::{Error, Result};

/// Which formal variable a grid samples; determines the monomial
/// multiplier `z` used when stacking rank matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    /// The stored roots are the evaluation variable itself (`z = point`).
    U,
    /// The stored roots are `u = -ξ ∈ 𝕌` (odd order `r`) for an even-order
    /// TQFT root `ξ`; the stacking variable is `z = ξ = -u`.
    Xi,
}

/// Fractional part of the golden ratio, the Kronecker-sequence step.
const PHI: f64 = 0.618_033_988_749_894_9;

/// Deterministic well-spread exponents modulo `c`: up to `want` distinct
/// residues coprime to `c`, drawn from the golden-ratio sequence seeded by
/// `salt`.  May return fewer when `c` has too few units.
pub fn spread_exps(c: u64, want: usize, salt: u64) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    let frac = |x: f64| x - libm::floor(x);
    let mut t = frac(0.37 + PHI * salt as f64);
    let mut tries = 0usize;
    while out.len() < want && tries < 8 * want {
        t = frac(t + PHI);
        let s0 = (libm::round(c as f64 * t) as u64).max(1);
        for cand in s0..s0 + c {
            let cc = cand % c;
            if cc > 0 && gcd_u64(cc, c) == 1 && !out.contains(&cc) {
                out.push(cc);
                break;
            }
        }
        tries += 1;
    }
    out
}

fn next_odd(lo: u64) -> u64 {
    let lo = lo.max(3);
    if lo % 2 == 1 {
        lo
    } else {
        lo + 1
    }
}

fn next_mult4(lo: u64) -> u64 {
    let lo = lo.max(4);
    lo.next_multiple_of(4)
}

/// A deterministic grid of sample roots, every one a member of `𝕌`.
#[derive(Clone, Debug)]
pub struct SampleGrid {
    variable: Variable,
    points: Vec<RootOfUnity>,
}

impl SampleGrid {
    /// Wrap explicit points, verifying each lies in `𝕌`.
    pub fn from_points(variable: Variable, points: Vec<RootOfUnity>) -> Result<Self> {
        if points.iter().any(|p| !p.is_in_u()) {
            return Err(Error::Domain("grid points must lie in the Gauss domain U"));
        }
        Ok(SampleGrid { variable, points })
    }

    /// Grid of odd-order roots: orders `lo, lo+2, …` (odd-adjusted), up to 3
    /// exponents per order.
    pub fn odd(npts: usize, lo: u64) -> Self {
        let mut points = Vec::new();
        let mut c = next_odd(lo);
        let mut salt = 0u64;
        while points.len() < npts {
            for s in spread_exps(c, 3, salt) {
                points.push(RootOfUnity::new(s as i64, c).expect("unit exponent"));
            }
            c += 2;
            salt += 1;
        }
        points.truncate(npts);
        SampleGrid { variable: Variable::U, points }
    }

    /// Grid for TQFT evaluation maps: even-order roots `ξ = e^{2iπs/(2r)}`
    /// with **odd** `r ≥ lo_r`, up to 4 exponents per order, stored as
    /// `u = -ξ` of odd order `r` (so every stored point is in `𝕌`).
    pub fn xi(npts: usize, lo_r: u64) -> Self {
        let mut points = Vec::new();
        let mut r = next_odd(lo_r);
        let mut salt = 0u64;
        while points.len() < npts {
            for s in spread_exps(2 * r, 4, salt) {
                // s odd and coprime to 2r; u = -ξ = ζ_r^{(s+r)/2}.
                let e = ((s + r) / 2) % r;
                points.push(RootOfUnity::new(e as i64, r).expect("coprime to r"));
            }
            r += 2;
            salt += 1;
        }
        points.truncate(npts);
        SampleGrid { variable: Variable::Xi, points }
    }

    /// Grid of `𝕌₀` points (orders divisible by 4), up to 3 exponents per
    /// order.
    pub fn u_zero(npts: usize, lo: u64) -> Self {
        let mut points = Vec::new();
        let mut c = next_mult4(lo);
        let mut salt = 0u64;
        while points.len() < npts {
            for s in spread_exps(c, 3, salt) {
                points.push(RootOfUnity::new(s as i64, c).expect("unit exponent"));
            }
            c += 4;
            salt += 1;
        }
        points.truncate(npts);
        SampleGrid { variable: Variable::U, points }
    }

    /// Mixed grid interleaving odd orders and orders divisible by 4 —
    /// the natural domain for distinguishing the `ν` function (which is 1
    /// at odd orders and 2 on `𝕌₀`) from Gauss-sum generators.
    pub fn mixed(npts: usize, lo: u64) -> Self {
        let mut points = Vec::new();
        let mut c_odd = next_odd(lo);
        let mut c4 = next_mult4(lo);
        let mut salt = 0u64;
        while points.len() < npts {
            for s in spread_exps(c_odd, 2, salt) {
                points.push(RootOfUnity::new(s as i64, c_odd).expect("unit exponent"));
            }
            for s in spread_exps(c4, 2, salt + 1) {
                points.push(RootOfUnity::new(s as i64, c4).expect("unit exponent"));
            }
            c_odd += 2;
            c4 += 4;
            salt += 2;
        }
        points.truncate(npts);
        SampleGrid { variable: Variable::U, points }
    }

    /// Grid over orders `n` with `gcd(n, k) = d` (and `n` admissible for
    /// `𝕌`: odd or divisible by 4) — the adapted grids of the direct-sum
    /// Lemma "dimdiviseur".
    pub fn d_adapted(k: u64, d: u64, npts: usize, lo: u64) -> Result<Self> {
        if k == 0 || d == 0 || k % d != 0 {
            return Err(Error::Divisibility("d_adapted requires d | k, both positive"));
        }
        let mut points = Vec::new();
        let mut n = lo.max(3);
        let mut salt = 0u64;
        let limit = lo.max(3) + 1_000_000;
        while points.len() < npts && n < limit {
            if n > 2 && (n % 2 == 1 || n % 4 == 0) && gcd_u64(n, k) == d {
                for s in spread_exps(n, 3, salt) {
                    points.push(RootOfUnity::new(s as i64, n).expect("unit exponent"));
                }
                salt += 1;
            }
            n += 1;
        }
        if points.len() < npts {
            return Err(Error::Domain("could not find enough adapted orders"));
        }
        points.truncate(npts);
        Ok(SampleGrid { variable: Variable::U, points })
    }

    /// Which variable the grid samples.
    pub fn variable(&self) -> Variable {
        self.variable
    }

    /// The stored points (all in `𝕌`).
    pub fn points(&self) -> &[RootOfUnity] {
        &self.points
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Whether the grid is empty.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The stacking-variable value at point `i`: the point itself for
    /// [`Variable::U`], and `ξ = -u` for [`Variable::Xi`].
    pub fn z(&self, i: usize) -> Complex64 {
        match self.variable {
            Variable::U => self.points[i].value(),
            Variable::Xi => -self.points[i].value(),
        }
    }

    /// All stacking-variable values.
    pub fn z_values(&self) -> Vec<Complex64> {
        (0..self.len()).map(|i| self.z(i)).collect()
    }

    /// For [`Variable::Xi`] grids: the even-order TQFT root `ξ = -u` at
    /// point `i` (order `2r`).  Panics on a [`Variable::U`] grid.
    pub fn xi_at(&self, i: usize) -> RootOfUnity {
        assert!(
            self.variable == Variable::Xi,
            "xi_at is only meaningful on Variable::Xi grids"
        );
        negate_root(&self.points[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spread_exps_is_deterministic_coprime_distinct() {
        for &(c, want, salt) in &[(41u64, 3usize, 0u64), (82, 4, 7), (12, 3, 2), (210, 6, 5)] {
            let a = spread_exps(c, want, salt);
            let b = spread_exps(c, want, salt);
            assert_eq!(a, b);
            for (i, &x) in a.iter().enumerate() {
                assert!(x > 0 && x < c && gcd_u64(x, c) == 1);
                assert!(!a[..i].contains(&x));
            }
            assert!(a.len() == want || a.len() >= 1);
        }
        // Different salts give different draws (with overwhelming odds).
        assert_ne!(spread_exps(101, 3, 0), spread_exps(101, 3, 1));
    }

    #[test]
    fn odd_grid_shape() {
        let g = SampleGrid::odd(10, 41);
        assert_eq!(g.len(), 10);
        assert_eq!(g.variable(), Variable::U);
        for p in g.points() {
            assert!(p.order() % 2 == 1 && p.order() >= 41);
            assert!(p.is_in_u());
        }
        // First order contributes up to 3 points.
        assert_eq!(g.points()[0].order(), 41);
        assert_eq!(g.points()[2].order(), 41);
        assert_eq!(g.points()[3].order(), 43);
        // z is the point itself.
        assert!((g.z(0) - g.points()[0].value()).norm() < 1e-15);
    }

    #[test]
    fn xi_grid_stores_negated_points() {
        let g = SampleGrid::xi(8, 41);
        assert_eq!(g.len(), 8);
        assert_eq!(g.variable(), Variable::Xi);
        for i in 0..g.len() {
            let u = &g.points()[i];
            assert!(u.order() % 2 == 1, "stored point must have odd order");
            let xi = g.xi_at(i);
            assert_eq!(xi.order(), 2 * u.order());
            // ξ = -u and z = ξ.
            assert!((xi.value() + u.value()).norm() < 1e-12);
            assert!((g.z(i) - xi.value()).norm() < 1e-12);
        }
    }

    #[test]
    fn u_zero_and_mixed_grids() {
        let g0 = SampleGrid::u_zero(7, 8);
        for p in g0.points() {
            assert_eq!(p.order() % 4, 0);
        }
        let gm = SampleGrid::mixed(12, 9);
        assert!(gm.points().iter().any(|p| p.order() % 2 == 1));
        assert!(gm.points().iter().any(|p| p.order() % 4 == 0));
        for p in gm.points() {
            assert!(p.is_in_u());
        }
    }

    #[test]
    fn d_adapted_orders() {
        let g = SampleGrid::d_adapted(6, 2, 6, 4).unwrap();
        for p in g.points() {
            assert_eq!(gcd_u64(p.order(), 6), 2);
            assert!(p.order() % 4 == 0); // gcd 2 with even order forces 4 | n
        }
        let g3 = SampleGrid::d_adapted(15, 3, 6, 5).unwrap();
        for p in g3.points() {
            assert_eq!(gcd_u64(p.order(), 15), 3);
        }
        assert!(SampleGrid::d_adapted(6, 4, 3, 4).is_err());
    }

    #[test]
    fn from_points_validates_membership() {
        let ok = SampleGrid::from_points(
            Variable::U,
            alloc::vec![RootOfUnity::new(1, 5).unwrap(), RootOfUnity::new(1, 8).unwrap()],
        );
        assert!(ok.is_ok());
        let bad = SampleGrid::from_points(Variable::U, alloc::vec![RootOfUnity::new(1, 6).unwrap()]);
        assert!(bad.is_err()); // 6 ≡ 2 (mod 4) is outside 𝕌
    }
}
