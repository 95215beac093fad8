//! Rational functions `num/den` over the Laurent ring `Q[A, A^{-1}]`.
//!
//! These appear as coefficients during horizontal-class reduction in
//! `K_A(M_k)`: the odd-`k` descent divides by binomials
//! `A^x − A^y`, so coefficients live in `Q(A)` rather than the
//! Laurent ring.  Denominators never vanish identically (guarded by
//! [`crate::Error::DegenerateDivisor`] at rule-application time), and
//! equality/zero tests are exact via cross-multiplication.
//!
//! The representation is normalized so the denominator has minimum
//! exponent 0 and leading coefficient 1; common *monomial* factors
//! are cancelled, and sums attempt exact polynomial division to reuse
//! a shared denominator.  Full gcd reduction is deliberately not
//! performed: the denominators arising here are short products of
//! binomials and stay small, while a rational Euclid would risk
//! coefficient blow-up for no accuracy gain (all correctness-critical
//! comparisons cross-multiply).

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::laurent::{Coeff, LaurentPolynomial};
use crate::numth::RootOfUnity;
use crate::{Error, Result};

/// A rational function in `A` with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

/// Dense polynomial division over `Q`: returns `(quotient, remainder)`
/// with `num = quotient·den + remainder`, `deg(remainder) < deg(den)`.
fn poly_divmod(num: &[Coeff], den: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let dd = den.len() - 1;
    debug_assert!(!den[dd].is_zero());
    if num.len() <= dd {
        return (Vec::new(), num.to_vec());
    }
    let mut rem: Vec<Coeff> = num.to_vec();
    let mut quo = alloc::vec![Coeff::zero(); num.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i] / den[dd];
        if c.is_zero() {
            rem[i] = Coeff::zero();
            continue;
        }
        quo[i - dd] = c;
        for j in 0..=dd {
            let sub = c * den[j];
            rem[i - dd + j] -= sub;
        }
    }
    while rem.len() > 1 && rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    (quo, rem)
}

fn to_dense(p: &LaurentPolynomial) -> (Vec<Coeff>, i64) {
    let shift = p.min_exp().unwrap_or(0);
    let top = p.max_exp().unwrap_or(0);
    let mut v = alloc::vec![Coeff::zero(); (top - shift) as usize + 1];
    for (&e, &c) in p.iter() {
        v[(e - shift) as usize] = c;
    }
    (v, shift)
}

fn from_dense(v: &[Coeff], shift: i64) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (i, &c) in v.iter().enumerate() {
        p.add_term(shift + i as i64, c);
    }
    p
}

/// Exact division attempt: `Some(num/den)` if the remainder is zero.
fn try_exact_div(num: &LaurentPolynomial, den: &LaurentPolynomial) -> Option<LaurentPolynomial> {
    if den.is_zero() {
        return None;
    }
    if num.is_zero() {
        return Some(LaurentPolynomial::zero());
    }
    let (nv, ns) = to_dense(num);
    let (dv, ds) = to_dense(den);
    if nv.len() < dv.len() {
        return None;
    }
    let (q, r) = poly_divmod(&nv, &dv);
    if r.iter().all(|c| c.is_zero()) {
        Some(from_dense(&q, ns - ds))
    } else {
        None
    }
}

impl RatFunc {
    /// Construct `num/den`, normalizing.  Errors with
    /// [`Error::DegenerateDivisor`]-free [`Error::Domain`] if the
    /// denominator is identically zero.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator"));
        }
        let mut rf = RatFunc { num, den };
        rf.normalize();
        Ok(rf)
    }

    /// A Laurent polynomial viewed as a rational function.
    pub fn from_laurent(num: LaurentPolynomial) -> Self {
        RatFunc { num, den: LaurentPolynomial::one() }
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPolynomial::zero())
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::from_laurent(LaurentPolynomial::one())
    }

    /// The monomial `A^e`.
    pub fn power(e: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::power(e))
    }

    /// Numerator (read-only).
    pub fn num(&self) -> &LaurentPolynomial {
        &self.num
    }

    /// Denominator (read-only; min exponent 0, leading coefficient 1).
    pub fn den(&self) -> &LaurentPolynomial {
        &self.den
    }

    /// Whether the function is identically zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the denominator is trivial (a Laurent polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPolynomial::one();
            return;
        }
        // Try full cancellation first (cheap for our short factors).
        if let Some(q) = try_exact_div(&self.num, &self.den) {
            self.num = q;
            self.den = LaurentPolynomial::one();
            return;
        }
        // Normalize the denominator: min exponent 0, monic leading
        // coefficient; fold the adjustment into the numerator.
        let (dnorm, lead, shift) = self.den.normalized();
        self.den = dnorm;
        self.num = self.num.shift(-shift).scale(lead.recip());
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let mut rf = RatFunc { num: self.num.add(&other.num), den: self.den.clone() };
            rf.normalize();
            return rf;
        }
        // If one denominator exactly divides the other, reuse the
        // larger one instead of multiplying them.
        if let Some(f) = try_exact_div(&other.den, &self.den) {
            let mut rf =
                RatFunc { num: self.num.mul(&f).add(&other.num), den: other.den.clone() };
            rf.normalize();
            return rf;
        }
        if let Some(f) = try_exact_div(&self.den, &other.den) {
            let mut rf =
                RatFunc { num: other.num.mul(&f).add(&self.num), den: self.den.clone() };
            rf.normalize();
            return rf;
        }
        let mut rf = RatFunc {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        };
        rf.normalize();
        rf
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        // Cross-cancel before multiplying to keep factors short.
        let (mut n1, mut d2) = (self.num.clone(), other.den.clone());
        if let Some(q) = try_exact_div(&n1, &d2) {
            n1 = q;
            d2 = LaurentPolynomial::one();
        }
        let (mut n2, mut d1) = (other.num.clone(), self.den.clone());
        if let Some(q) = try_exact_div(&n2, &d1) {
            n2 = q;
            d1 = LaurentPolynomial::one();
        }
        let mut rf = RatFunc { num: n1.mul(&n2), den: d1.mul(&d2) };
        rf.normalize();
        rf
    }

    /// Multiply by a Laurent polynomial.
    pub fn mul_laurent(&self, p: &LaurentPolynomial) -> Self {
        self.mul(&RatFunc::from_laurent(p.clone()))
    }

    /// Exact equality via cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den)).is_zero()
    }

    /// Evaluate at a root of unity.  Returns `None` when the
    /// denominator vanishes there (a pole of the normalized form).
    pub fn eval_root(&self, xi: &RootOfUnity) -> Option<Complex64> {
        let d = self.den.eval_root(xi);
        if d.norm() < 1e-10 {
            return None;
        }
        Some(self.num.eval_root(xi) / d)
    }

    /// Render as `num` or `(num) / (den)`.
    pub fn render(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        if self.is_polynomial() {
            let _ = write!(s, "{}", self.num.render());
        } else {
            let _ = write!(s, "({}) / ({})", self.num.render(), self.den.render());
        }
        s
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl core::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.render())
    }
}
