//! Exact arithmetic in the group rings `Z[Z/n] ≅ Z[x]/(x^n − 1)`.
//!
//! Elements are stored as unreduced coefficient vectors on the group
//! basis `1, ζ, ..., ζ^{n−1}`.  Because `Z[Z/n] → Z[ζ_n]` has kernel
//! generated by the cyclotomic polynomial `Φ_n`, equality *as
//! cyclotomic integers* is tested exactly by reducing the difference
//! modulo `Φ_n` (computed by exact integer polynomial division of
//! `x^n − 1` by `∏_{d|n, d<n} Φ_d`).

use alloc::vec::Vec;

use num_complex::Complex64;

use super::modular::{divisors, mod_reduce};
use crate::{Error, Result};

/// An element of `Z[Z/n]`, i.e. an integer combination of the powers
/// `ζ_n^0, ..., ζ_n^{n−1}` of a fixed abstract `n`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    order: u64,
    coeffs: Vec<i64>,
}

/// The `n`-th cyclotomic polynomial `Φ_n` as a dense coefficient
/// vector (index = degree).  Computed by the exact integer division
/// `Φ_n = (x^n − 1) / ∏_{d|n, d<n} Φ_d`, iterating over divisors.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic order must be positive");
    // Iteratively build Φ_d for every divisor d of n (ascending), each
    // time dividing x^d − 1 by the product of the previously computed
    // Φ_e for proper divisors e of d.
    let divs = divisors(n);
    let mut table: Vec<(u64, Vec<i64>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut num = alloc::vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        let mut quotient = num;
        for (e, phi_e) in &table {
            if d % e == 0 {
                quotient = poly_div_exact(&quotient, phi_e);
            }
        }
        table.push((d, quotient));
    }
    table.pop().expect("n divides n").1
}

/// Exact division of integer polynomials (panics if not exact — the
/// cyclotomic recursion guarantees exactness; divisors are monic).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd] == 1, "divisor must be monic");
    assert!(dn >= dd);
    let mut rem: Vec<i64> = num.to_vec();
    let mut quo = alloc::vec![0i64; dn - dd + 1];
    for i in (dd..=dn).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quo[i - dd] = c;
        for j in 0..=dd {
            rem[i - dd + j] -= c * den[j];
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "polynomial division not exact");
    quo
}

/// Remainder of an integer polynomial modulo a monic integer
/// polynomial.
fn poly_rem(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert!(den[dd] == 1);
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    if rem.len() <= dd {
        return num.to_vec();
    }
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for j in 0..dd {
            rem[i - dd + j] -= c * den[j] as i128;
        }
    }
    rem.truncate(dd);
    rem.iter()
        .map(|&c| i64::try_from(c).expect("coefficient overflow in cyclotomic reduction"))
        .collect()
}

impl GroupRingElement {
    /// The zero element of `Z[Z/n]`.
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1);
        GroupRingElement { order, coeffs: alloc::vec![0; order as usize] }
    }

    /// The integer constant `c` (multiple of the identity `ζ^0`).
    pub fn from_integer(order: u64, c: i64) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = c;
        e
    }

    /// The single group element `ζ_n^j` (with `j` reduced mod `n`).
    pub fn root_power(order: u64, j: i128) -> Self {
        let mut e = Self::zero(order);
        let idx = mod_reduce(j, order) as usize;
        e.coeffs[idx] = 1;
        e
    }

    /// Build from an explicit coefficient vector of length `order`.
    pub fn from_coeffs(order: u64, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != order as usize || order == 0 {
            return Err(Error::Domain("coefficient vector length must equal the order"));
        }
        Ok(GroupRingElement { order, coeffs })
    }

    /// The group order `n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The raw (unreduced) coefficients on `ζ^0, ..., ζ^{n−1}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Add a single integer multiple of `ζ^j` in place.
    pub fn add_power(&mut self, j: i128, c: i64) {
        let idx = mod_reduce(j, self.order) as usize;
        self.coeffs[idx] += c;
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    /// Exact sum (orders must match; use [`GroupRingElement::promote`]
    /// first otherwise).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).expect("coefficient overflow"))
            .collect();
        Ok(GroupRingElement { order: self.order, coeffs })
    }

    /// Exact difference (orders must match).
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        GroupRingElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, c: i64) -> Self {
        GroupRingElement {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|x| x.checked_mul(c).expect("coefficient overflow"))
                .collect(),
        }
    }

    /// Exact product via cyclic convolution (orders must match).
    /// Intermediate sums use `i128` to avoid overflow.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order as usize;
        let mut acc = alloc::vec![0i128; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = (i + j) % n;
                acc[k] += (a as i128) * (b as i128);
            }
        }
        let coeffs = acc
            .iter()
            .map(|&c| i64::try_from(c).expect("coefficient overflow in group-ring product"))
            .collect();
        Ok(GroupRingElement { order: self.order, coeffs })
    }

    /// Multiply by the group element `ζ^j`: a rotation of the
    /// coefficient vector (exact, O(n)).
    pub fn scale_by_power(&self, j: i128) -> Self {
        let n = self.order as usize;
        let shift = mod_reduce(j, self.order) as usize;
        let mut coeffs = alloc::vec![0i64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(i + shift) % n] = c;
        }
        GroupRingElement { order: self.order, coeffs }
    }

    /// Reinterpret in a larger group ring `Z[Z/m]` with `n | m`, via
    /// `ζ_n = ζ_m^{m/n}` (e.g. `ζ_2 ↦ ζ_6^3`).
    pub fn promote(&self, m: u64) -> Result<Self> {
        if m == 0 || m % self.order != 0 {
            return Err(Error::Divisibility("promotion target must be a multiple of the order"));
        }
        let stride = (m / self.order) as usize;
        let mut coeffs = alloc::vec![0i64; m as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * stride] = c;
        }
        Ok(GroupRingElement { order: m, coeffs })
    }

    /// Canonical representative modulo `Φ_n`: the exact remainder of
    /// the coefficient polynomial by the cyclotomic polynomial.  Two
    /// elements map to the same cyclotomic integer iff their reduced
    /// forms agree.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.order);
        poly_rem(&self.coeffs, &phi)
    }

    /// Exact equality as elements of `Z[ζ_n]` (requires equal orders;
    /// see [`GroupRingElement::equals_promoted`] for mixed orders).
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_order(other)?;
        Ok(self.sub(other)?.is_zero())
    }

    /// Exact equality after promoting both sides to the lcm order.
    pub fn equals_promoted(&self, other: &Self) -> Result<bool> {
        if self.order == other.order {
            return self.equals(other);
        }
        let l = num_integer::lcm(self.order, other.order);
        self.promote(l)?.equals(&other.promote(l)?)
    }

    /// Exact zero test as a cyclotomic integer.
    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    /// Numerical embedding `Σ c_j e^{2iπ j/n}` (sends the abstract
    /// `ζ_n` to the principal root).
    pub fn embed(&self) -> Complex64 {
        self.embed_at(1)
    }

    /// Numerical embedding sending `ζ_n ↦ e^{2iπ s/n}` (the Galois
    /// twist by `s`; `s` need not be coprime to `n`).
    pub fn embed_at(&self, s: i64) -> Complex64 {
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let theta = 2.0 * core::f64::consts::PI
                * (mod_reduce(s as i128 * j as i128, self.order) as f64)
                / n;
            acc += Complex64::new(libm::cos(theta), libm::sin(theta)) * (c as f64);
        }
        acc
    }
}

impl core::fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*z^{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
