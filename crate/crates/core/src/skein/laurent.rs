//! Sparse exact Laurent polynomials over `Q` in one variable.
//!
//! The variable is contextual: `A` for skein coefficients, `X` for
//! Chebyshev polynomials.  Coefficients are exact rationals; the only
//! lossy operation is evaluation at a complex point.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::numth::RootOfUnity;
use crate::{Error, Result};

/// Exact coefficient type.
pub type Coeff = Ratio<i64>;

/// A sparse Laurent polynomial `Σ c_e · A^e` with rational `c_e`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Coeff>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, Coeff::one())
    }

    /// The constant polynomial `c` (integer shorthand).
    pub fn constant(c: i64) -> Self {
        Self::monomial(0, Coeff::from_integer(c))
    }

    /// The monomial `c · A^e`.
    pub fn monomial(e: i64, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPolynomial { terms }
    }

    /// The monomial `A^e`.
    pub fn power(e: i64) -> Self {
        Self::monomial(e, Coeff::one())
    }

    /// Iterate `(exponent, coefficient)` pairs, ascending exponent.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Coeff)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is the constant `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Lowest exponent (None if zero).
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent (None if zero).
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of `A^e`.
    pub fn coeff(&self, e: i64) -> Coeff {
        self.terms.get(&e).copied().unwrap_or_else(Coeff::zero)
    }

    /// Add `c · A^e` in place.
    pub fn add_term(&mut self, e: i64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in other.iter() {
            out.add_term(e, -c);
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, &c1) in self.iter() {
            for (&e2, &c2) in other.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Scale by a rational constant.
    pub fn scale(&self, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &k)| (e, k * c)).collect() }
    }

    /// Multiply by `A^e` (exponent shift).
    pub fn shift(&self, e: i64) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&k, &c)| (k + e, c)).collect() }
    }

    /// Evaluate at a root of unity (exponents reduce mod the order).
    pub fn eval_root(&self, xi: &RootOfUnity) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, &c) in self.iter() {
            let cf = (*c.numer() as f64) / (*c.denom() as f64);
            acc += xi.value_pow(e as i128) * cf;
        }
        acc
    }

    /// Evaluate at an arbitrary nonzero complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, &c) in self.iter() {
            let cf = (*c.numer() as f64) / (*c.denom() as f64);
            acc += z.powi(e as i32) * cf;
        }
        acc
    }

    /// Substitute `A ↦ A^{-1}` (the bar involution on exponents).
    pub fn bar(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Render in the textual format `c_e*A^e + ...` (ascending
    /// exponents; integer coefficients printed without denominator).
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (&e, &c) in self.iter() {
            if !first {
                out.push_str(" + ");
            }
            first = false;
            if c.denom().is_one() {
                let _ = write!(out, "{}", c.numer());
            } else {
                let _ = write!(out, "{}/{}", c.numer(), c.denom());
            }
            let _ = write!(out, "*A^{e}");
        }
        out
    }

    /// Parse the textual format produced by [`LaurentPolynomial::render`]:
    /// terms `c*A^e` or `c/d*A^e` (also bare `c` for constants and
    /// `A^e` for unit coefficients), joined by `+`.  Whitespace is
    /// ignored; each term may carry a leading `-`.
    pub fn parse(input: &str) -> Result<Self> {
        let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        // Split on '+' but keep '-' attached to the following term.
        for raw in cleaned.split('+') {
            if raw.is_empty() {
                return Err(Error::Domain("empty term in Laurent polynomial"));
            }
            // A term may itself contain embedded '-' separators
            // (e.g. "3*A^2-A^0"); split those manually.
            let mut pieces: Vec<String> = Vec::new();
            let mut cur = String::new();
            for (i, ch) in raw.char_indices() {
                if ch == '-' && i != 0 && !raw[..i].ends_with('^') && !raw[..i].ends_with('/') {
                    pieces.push(core::mem::take(&mut cur));
                    cur.push(ch);
                } else {
                    cur.push(ch);
                }
            }
            pieces.push(cur);
            for term in pieces {
                let (e, c) = Self::parse_term(&term)?;
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    fn parse_term(term: &str) -> Result<(i64, Coeff)> {
        let parse_ratio = |s: &str| -> Result<Coeff> {
            if let Some((n, d)) = s.split_once('/') {
                let n: i64 =
                    n.parse().map_err(|_| Error::Domain("bad numerator in coefficient"))?;
                let d: i64 =
                    d.parse().map_err(|_| Error::Domain("bad denominator in coefficient"))?;
                if d == 0 {
                    return Err(Error::Domain("zero denominator in coefficient"));
                }
                Ok(Coeff::new(n, d))
            } else if s.is_empty() || s == "-" {
                Ok(if s == "-" { -Coeff::one() } else { Coeff::one() })
            } else {
                s.parse::<i64>()
                    .map(Coeff::from_integer)
                    .map_err(|_| Error::Domain("bad integer coefficient"))
            }
        };
        if let Some((coeff_str, pow_str)) = term.split_once("*A^") {
            let e: i64 = pow_str.parse().map_err(|_| Error::Domain("bad exponent"))?;
            Ok((e, parse_ratio(coeff_str)?))
        } else if let Some(pow_str) = term.strip_prefix("A^") {
            let e: i64 = pow_str.parse().map_err(|_| Error::Domain("bad exponent"))?;
            Ok((e, Coeff::one()))
        } else if let Some(pow_str) = term.strip_prefix("-A^") {
            let e: i64 = pow_str.parse().map_err(|_| Error::Domain("bad exponent"))?;
            Ok((e, -Coeff::one()))
        } else {
            Ok((0, parse_ratio(term)?))
        }
    }

    /// Integer content and sign normalization helper: divides all
    /// coefficients by the leading (highest-exponent) coefficient and
    /// shifts so the minimum exponent is zero.  Returns
    /// `(normalized, leading, shift)` with
    /// `self = normalized.scale(leading).shift(shift)`.
    pub fn normalized(&self) -> (Self, Coeff, i64) {
        if self.is_zero() {
            return (Self::zero(), Coeff::one(), 0);
        }
        let shift = self.min_exp().unwrap();
        let lead = self.coeff(self.max_exp().unwrap());
        (self.shift(-shift).scale(lead.recip()), lead, shift)
    }

    /// Signed max-abs of the numerators/denominators, used by tests to
    /// keep growth in check.
    pub fn coeff_magnitude(&self) -> i64 {
        self.terms
            .values()
            .map(|c| c.numer().abs().max(c.denom().abs()))
            .max()
            .unwrap_or(0)
    }
}

impl core::fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_pow(e: i64) -> LaurentPolynomial {
        LaurentPolynomial::power(e)
    }

    #[test]
    fn arithmetic() {
        // (A − A^{-1})(A + A^{-1}) = A² − A^{-2}.
        let d = a_pow(1).sub(&a_pow(-1));
        let s = a_pow(1).add(&a_pow(-1));
        let p = d.mul(&s);
        assert_eq!(p, a_pow(2).sub(&a_pow(-2)));
        // Cancellation drops terms.
        assert!(d.sub(&d).is_zero());
        assert_eq!(p.term_count(), 2);
    }

    #[test]
    fn render_and_parse_roundtrip() {
        let mut p = LaurentPolynomial::zero();
        p.add_term(-2, Coeff::new(3, 2));
        p.add_term(0, Coeff::from_integer(-1));
        p.add_term(5, Coeff::one());
        let text = p.render();
        assert_eq!(text, "3/2*A^-2 + -1*A^0 + 1*A^5");
        let q = LaurentPolynomial::parse(&text).unwrap();
        assert_eq!(p, q);
        // Friendlier inputs parse as well.
        assert_eq!(LaurentPolynomial::parse("A^3").unwrap(), a_pow(3));
        assert_eq!(LaurentPolynomial::parse("2").unwrap(), LaurentPolynomial::constant(2));
        assert_eq!(
            LaurentPolynomial::parse("A^2-A^-2").unwrap(),
            a_pow(2).sub(&a_pow(-2))
        );
        assert_eq!(LaurentPolynomial::parse("0").unwrap(), LaurentPolynomial::zero());
    }

    #[test]
    fn eval_at_roots() {
        // (A^4 + A^{-4}) at A = e^{2iπ/8}: A^4 = −1 → −2.
        let p = a_pow(4).add(&a_pow(-4));
        let xi = RootOfUnity::new(1, 8).unwrap();
        assert!((p.eval_root(&xi) - Complex64::new(-2.0, 0.0)).norm() < 1e-12);
        let z = Complex64::new(0.3, 0.7);
        let direct = z.powi(4) + z.powi(-4);
        assert!((p.eval_complex(z) - direct).norm() < 1e-12);
    }

    #[test]
    fn normalization() {
        let p = a_pow(3).scale(Coeff::from_integer(4)).add(&a_pow(1).scale(Coeff::from_integer(2)));
        let (n, lead, shift) = p.normalized();
        assert_eq!(lead, Coeff::from_integer(4));
        assert_eq!(shift, 1);
        assert_eq!(n.scale(lead).shift(shift), p);
        assert!(n.coeff(n.max_exp().unwrap()).is_one());
        assert_eq!(n.min_exp(), Some(0));
    }
}
