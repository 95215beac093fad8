//! Vectors in the Frohman–Gelca basis of the torus skein algebra,
//! the product-to-sum formula, and Chebyshev polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use super::label::CurveLabel;
use super::laurent::{Coeff, LaurentPolynomial};
use crate::{Error, Result};

/// A finite `Z[A^{±1}]`-combination of torus basis labels `(p, q)_T`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SkeinVector {
    terms: BTreeMap<CurveLabel, LaurentPolynomial>,
}

impl SkeinVector {
    /// The zero vector.
    pub fn zero() -> Self {
        SkeinVector { terms: BTreeMap::new() }
    }

    /// A single basis label with coefficient 1.
    pub fn from_label(label: CurveLabel) -> Self {
        let mut v = Self::zero();
        v.add_term(label, LaurentPolynomial::one());
        v
    }

    /// Iterate `(label, coefficient)` pairs in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&CurveLabel, &LaurentPolynomial)> {
        self.terms.iter()
    }

    /// Number of labels with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Whether the vector is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a label (zero if absent).
    pub fn coeff(&self, label: &CurveLabel) -> LaurentPolynomial {
        self.terms.get(label).cloned().unwrap_or_else(LaurentPolynomial::zero)
    }

    /// Add `c · label` in place.
    pub fn add_term(&mut self, label: CurveLabel, c: LaurentPolynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(label).or_insert_with(LaurentPolynomial::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(*l, c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(*l, c.neg());
        }
        out
    }

    /// Scale by a Laurent polynomial.
    pub fn scale(&self, c: &LaurentPolynomial) -> Self {
        let mut out = Self::zero();
        for (l, k) in self.iter() {
            out.add_term(*l, k.mul(c));
        }
        out
    }

    /// The Frohman–Gelca product of two vectors (bilinear extension
    /// of [`product_to_sum`]).
    pub fn star(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (l1, c1) in self.iter() {
            for (l2, c2) in other.iter() {
                let prod = product_to_sum(l1, l2);
                out = out.add(&prod.scale(&c1.mul(c2)));
            }
        }
        out
    }

    /// Render in the textual interchange format:
    /// `coeff * (p,q)` terms joined by ` + `, labels in map order,
    /// e.g. `1*A^1 * (1,1) + 1*A^-1 * (1,-1)`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (l, c) in self.iter() {
            if !first {
                out.push_str(" + ");
            }
            first = false;
            let _ = write!(out, "{} * {}", c.render(), l);
        }
        out
    }

    /// Parse the textual format produced by [`SkeinVector::render`]:
    /// `laurent * (p,q)` terms joined by `+` at the top level
    /// (a `+` only separates terms when followed by a `(`-terminated
    /// coefficient block; coefficients themselves may contain `+` so
    /// terms are split on the `* (p,q)` anchors).
    pub fn parse(input: &str) -> Result<Self> {
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() || text == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            // Find the label anchor "*(" ... ")".
            let star = rest.find("*(").ok_or(Error::Domain("missing label in skein vector"))?;
            let close =
                rest[star..].find(')').ok_or(Error::Domain("unclosed label in skein vector"))?
                    + star;
            let coeff_str = &rest[..star];
            let label_str = &rest[star + 2..close];
            let (p_str, q_str) =
                label_str.split_once(',').ok_or(Error::Domain("label must be (p,q)"))?;
            let p: i64 = p_str.parse().map_err(|_| Error::Domain("bad label coordinate"))?;
            let q: i64 = q_str.parse().map_err(|_| Error::Domain("bad label coordinate"))?;
            let coeff = LaurentPolynomial::parse(coeff_str)?;
            out.add_term(CurveLabel::new(p, q), coeff);
            rest = &rest[close + 1..];
            if let Some(stripped) = rest.strip_prefix('+') {
                rest = stripped;
            } else if !rest.is_empty() {
                return Err(Error::Domain("expected '+' between skein terms"));
            }
        }
        Ok(out)
    }

    /// All labels present.
    pub fn labels(&self) -> Vec<CurveLabel> {
        self.terms.keys().copied().collect()
    }
}

impl core::fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The Frohman–Gelca product-to-sum formula on basis labels:
///
/// `(p,q)_T ⋆ (r,s)_T = A^{ps−qr} (p+r, q+s)_T + A^{qr−ps} (p−r, q−s)_T`.
///
/// Both outputs are renormalized ((p,q)_T = (−p,−q)_T), so coincident
/// labels merge; `(0,0)_T = 2·∅` behaves as the unit times 2.
pub fn product_to_sum(x: &CurveLabel, y: &CurveLabel) -> SkeinVector {
    let (p, q) = x.pair();
    let (r, s) = y.pair();
    let det = p * s - q * r;
    let mut out = SkeinVector::zero();
    out.add_term(CurveLabel::new(p + r, q + s), LaurentPolynomial::power(det));
    out.add_term(CurveLabel::new(p - r, q - s), LaurentPolynomial::power(-det));
    out
}

/// Chebyshev polynomial `T_n` (trace normalization): `T_0 = 2`,
/// `T_1 = X`, `T_n = X·T_{n−1} − T_{n−2}`; `T_{−n} = T_n`.
pub fn chebyshev_t(n: i64) -> LaurentPolynomial {
    let n = n.unsigned_abs();
    let mut prev = LaurentPolynomial::constant(2);
    if n == 0 {
        return prev;
    }
    let x = LaurentPolynomial::power(1);
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial `S_n` (quantum integer normalization):
/// `S_0 = 0`, `S_1 = 1`, `S_n = X·S_{n−1} − S_{n−2}`; `S_{−n} = −S_n`.
pub fn chebyshev_s(n: i64) -> LaurentPolynomial {
    let sign = if n < 0 { -Coeff::one() } else { Coeff::one() };
    let n = n.unsigned_abs();
    let mut prev = LaurentPolynomial::zero();
    if n == 0 {
        return prev;
    }
    let x = LaurentPolynomial::power(1);
    let mut cur = LaurentPolynomial::one();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur.scale(sign)
}
