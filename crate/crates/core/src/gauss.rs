//! Generalized quadratic Gauss sums `G(a, b, ξ) = Σ_{j=0}^{c−1}
//! ξ^{a j² + b j}` (with `c` the order of `ξ`), their exact
//! group-ring evaluation, and the closed-form case analysis of the
//! paper's CalculGauss lemma.
//!
//! Conventions.  The paper always evaluates sums with an *even*
//! linear coefficient, written `G(a, 2b, ξ)`; the closed-form entry
//! point [`gauss_closed`] therefore takes `two_b` and rejects odd
//! values.  Writing `q = gcd(a, c)` and `r = c/q`, the lemma's cases
//! are:
//!
//! 1. `q | b`:  `G(a, 2b, ξ) = ξ^{−q (b/q)² (a/q)*_r} · G(a, 0, ξ)`;
//! 2. `q ∤ 2b`:  `G(a, 2b, ξ) = 0`;
//! 3. `q | 2b, q ∤ b` and `r ≡ 2 (mod 4)`:  a nonzero multiple of
//!    `G(4a, 0, ξ)` (the "quadrupled base"), with phase
//!    `(ξ^{2q})^{−(2b/q)² (2a/q)*_{r'} 4*_{r'}}`, `r' = r/2`;
//! 4. `q | 2b, q ∤ b` and `r` odd:
//!    `G(a, 2b, ξ) = ξ^{−q (a/q)*_r 4*_r (2b/q)²} · G(a, 0, ξ)`;
//! 5. `q | 2b, q ∤ b` and `r ≡ 0 (mod 4)`:  `G(a, 2b, ξ) = 0`.
//!
//! Here `x*_m` denotes the inverse of `x` modulo `m`.  The paper
//! states case 3 under the hypothesis "`a/q` odd"; that hypothesis is
//! automatic (`r` even forces `a/q` odd, since `gcd(a/q, r) = 1`), so
//! the [`ClosedFormKind::Uncovered`] escape hatch is kept only as a
//! defensive marker and is proven unreachable by the acceptance
//! sweep.

use num_complex::Complex64;

use crate::numth::{
    gcd_i64, invertible_squares, mod_inverse, mod_reduce, GroupRingElement, RootOfUnity,
};
use crate::{Error, Result};

/// Inputs of a generalized Gauss sum `G(a, b, ξ)`.
///
/// `b` here is the *literal* linear coefficient (the paper's `2b`
/// when even).  `a` is non-negative in all paper uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussParams {
    /// Quadratic coefficient.
    pub a: i64,
    /// Linear coefficient (literal, not halved).
    pub b: i64,
    /// The root of unity `ξ`; the summation length is its order.
    pub xi: RootOfUnity,
}

/// Exact brute-force Gauss sum as a group-ring element of `Z[Z/c]`.
///
/// The element stores `Σ_j ζ_c^{s(a j² + b j)}` where `ξ = ζ_c^s`, so
/// its [`GroupRingElement::embed`] is the complex value of the sum
/// and multiplication by `ξ^e` is `scale_by_power(s·e)`.
pub fn gauss_brute(params: &GaussParams) -> GroupRingElement {
    let c = params.xi.order();
    let s = params.xi.exponent() as i128;
    let mut acc = GroupRingElement::zero(c);
    for j in 0..c as i128 {
        let e = (params.a as i128) * j * j + (params.b as i128) * j;
        acc.add_power(s * (e % c as i128), 1);
    }
    acc
}

/// Convenience wrapper for [`gauss_brute`].
pub fn gauss_sum(a: i64, b: i64, xi: &RootOfUnity) -> GroupRingElement {
    gauss_brute(&GaussParams { a, b, xi: *xi })
}

/// Classification of `G(a, 2b, ξ)` by the CalculGauss lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormKind {
    /// The sum vanishes.
    Zero,
    /// `ξ^e · G(a, 0, ξ)` for the stored phase exponent `e`.
    MultipleOfBase,
    /// `ξ^e · G(4a, 0, ξ)` (case `r ≡ 2 (mod 4)`).
    MultipleOfQuadrupledBase,
    /// Defensive marker for inputs outside the lemma's case analysis.
    /// Proven unreachable (the hypotheses are automatic); kept so the
    /// artifact fails loudly instead of silently if the analysis were
    /// ever wrong.
    Uncovered,
}

/// Result of the closed-form evaluation: a phase times a base sum.
#[derive(Clone, Copy, Debug)]
pub struct ClosedFormResult {
    /// Which case of the lemma applied.
    pub kind: ClosedFormKind,
    /// Echo of the quadratic coefficient.
    pub a: i64,
    /// Echo of the (even) linear coefficient.
    pub two_b: i64,
    /// Echo of the root.
    pub xi: RootOfUnity,
    /// `q = gcd(a, c)`.
    pub q: u64,
    /// `r = c / q`.
    pub r: u64,
    /// Exponent `e` (mod `c`) of the phase `ξ^e`, when the sum is a
    /// multiple of a base sum.
    pub phase_exponent: Option<u64>,
    /// Quadratic coefficient of the base sum (`a`, or `4a` in the
    /// quadrupled case).
    pub base_a: Option<i64>,
}

impl ClosedFormResult {
    /// The base sum `G(base_a, 0, ξ)` as an exact group-ring element
    /// (`None` for the `Zero` and `Uncovered` kinds).
    pub fn base_sum(&self) -> Option<GroupRingElement> {
        self.base_a.map(|ba| gauss_sum(ba, 0, &self.xi))
    }

    /// The full closed-form prediction as an exact group-ring element
    /// (`None` only for `Uncovered`).
    pub fn exact(&self) -> Option<GroupRingElement> {
        match self.kind {
            ClosedFormKind::Zero => Some(GroupRingElement::zero(self.xi.order())),
            ClosedFormKind::Uncovered => None,
            _ => {
                let e = self.phase_exponent.expect("phase present") as i128;
                let s = self.xi.exponent() as i128;
                Some(self.base_sum().expect("base present").scale_by_power(s * e))
            }
        }
    }

    /// Complex value of the closed-form prediction (`None` for
    /// `Uncovered`).
    pub fn value(&self) -> Option<Complex64> {
        self.exact().map(|e| e.embed())
    }
}

/// Closed-form evaluation of `G(a, two_b, ξ)` per CalculGauss.
///
/// `two_b` must be even ([`Error::OddLinearCoefficient`] otherwise);
/// `a` must be non-negative ([`Error::Domain`]).  `a = 0` is handled
/// by the same case tree (`q = c`, `r = 1`).
pub fn gauss_closed(a: i64, two_b: i64, xi: &RootOfUnity) -> Result<ClosedFormResult> {
    if two_b % 2 != 0 {
        return Err(Error::OddLinearCoefficient(two_b));
    }
    if a < 0 {
        return Err(Error::Domain("CalculGauss requires a non-negative quadratic coefficient"));
    }
    let c = xi.order();
    let b = two_b / 2;
    let q = gcd_i64(a, c as i64) as u64; // gcd(0, c) = c covers a = 0.
    let r = c / q;
    let qi = q as i128;

    let mut result = ClosedFormResult {
        kind: ClosedFormKind::Zero,
        a,
        two_b,
        xi: *xi,
        q,
        r,
        phase_exponent: None,
        base_a: None,
    };

    if mod_reduce(b as i128, q) == 0 {
        // Case 1: q | b.
        let bq = b / q as i64;
        let aq_mod_r = mod_reduce(a as i128 / qi, r);
        let inv = mod_inverse(aq_mod_r as i64, r)?;
        let e = mod_reduce(-(qi) * (bq as i128) * (bq as i128) * (inv as i128), c);
        result.kind = ClosedFormKind::MultipleOfBase;
        result.phase_exponent = Some(e);
        result.base_a = Some(a);
    } else if mod_reduce(2 * b as i128, q) == 0 {
        // q | 2b but q ∤ b, so q is even and β = 2b/q is odd.
        let beta = (2 * b) / q as i64;
        debug_assert!(beta % 2 != 0);
        let aq = a / q as i64;
        match r % 4 {
            0 => {
                // Case 5: vanishes.
                result.kind = ClosedFormKind::Zero;
            }
            2 => {
                // Case 3: nonzero multiple of G(4a, 0, ξ).
                if aq % 2 == 0 {
                    // Unreachable: gcd(a/q, r) = 1 with r even forces
                    // a/q odd.  Kept as a loud escape hatch.
                    result.kind = ClosedFormKind::Uncovered;
                } else {
                    let rp = r / 2;
                    let inv2a = mod_inverse(mod_reduce(2 * aq as i128, rp) as i64, rp)?;
                    let inv4 = mod_inverse(4, rp)?;
                    let f = mod_reduce(
                        -(beta as i128) * (beta as i128) * (inv2a as i128) * (inv4 as i128),
                        rp,
                    );
                    let e = mod_reduce(2 * qi * f as i128, c);
                    result.kind = ClosedFormKind::MultipleOfQuadrupledBase;
                    result.phase_exponent = Some(e);
                    result.base_a = Some(4 * a);
                }
            }
            _ => {
                // Case 4: r odd.
                let inva = mod_inverse(mod_reduce(aq as i128, r) as i64, r)?;
                let inv4 = mod_inverse(4, r)?;
                let e = mod_reduce(
                    -(qi) * (inva as i128) * (inv4 as i128) * (beta as i128) * (beta as i128),
                    c,
                );
                result.kind = ClosedFormKind::MultipleOfBase;
                result.phase_exponent = Some(e);
                result.base_a = Some(a);
            }
        }
    } else {
        // Case 2: q ∤ 2b.
        result.kind = ClosedFormKind::Zero;
    }
    Ok(result)
}

/// The normalized Gauss-sum unit `ε`: `G(a, 0, ξ)` divided by `√c`
/// (odd `c` and `c ≡ 2 (mod 4)`) or `√(2c)` (`4 | c`).
///
/// Requires `gcd(a, c) = 1`.  The modulus of the result is `1`, or
/// `0` exactly when `c ≡ 2 (mod 4)` (where the sum vanishes).  The
/// value is always *measured* from the exact sum, never read from a
/// table, so sign/eighth-root-of-unity subtleties in the classical
/// formulas cannot leak in.
pub fn epsilon_ratio(a: i64, xi: &RootOfUnity) -> Result<Complex64> {
    let c = xi.order();
    if gcd_i64(a, c as i64) != 1 {
        return Err(Error::NotCoprime(a, c as i64));
    }
    let g = gauss_sum(a, 0, xi).embed();
    let norm = if c % 4 == 0 { libm::sqrt(2.0 * c as f64) } else { libm::sqrt(c as f64) };
    Ok(g / norm)
}

/// Exact check of the CRT multiplicativity
/// `G(a, b, e^{2isπ/(r₁r₂)}) = G(a r₁, b, e^{2isπ/r₂}) · G(a r₂, b, e^{2isπ/r₁})`
/// for coprime `r₁, r₂`, as an identity in `Z[ζ_{r₁r₂}]`.
pub fn verify_multiplicativity(a: i64, b: i64, r1: u64, r2: u64, s: i64) -> Result<bool> {
    if r1 == 0 || r2 == 0 {
        return Err(Error::Domain("orders must be positive"));
    }
    if gcd_i64(r1 as i64, r2 as i64) != 1 {
        return Err(Error::NotCoprime(r1 as i64, r2 as i64));
    }
    let c = r1 * r2;
    let xi = RootOfUnity::new(s, c)?;
    let xi_r1 = RootOfUnity::new(s, r1)?; // e^{2isπ/r1} = ξ^{r2}
    let xi_r2 = RootOfUnity::new(s, r2)?;
    let full = gauss_sum(a, b, &xi);
    let g1 = gauss_sum(
        a.checked_mul(r1 as i64).expect("coefficient overflow"),
        b,
        &xi_r2,
    );
    let g2 = gauss_sum(
        a.checked_mul(r2 as i64).expect("coefficient overflow"),
        b,
        &xi_r1,
    );
    let prod = g1.promote(c)?.mul(&g2.promote(c)?)?;
    full.equals(&prod)
}

/// Exact check of Lemma "depcarre": if `l² = l'² + m·(k/d)` then
/// `G(k, 2dl, ξ) = ξ^{−md} · G(k, 2dl', ξ)` for every `ξ ∈ 𝕌`.
///
/// Requires `d ≥ 1`, `d | k`, and `(l² − l'²) ≡ 0 (mod k/d)`
/// ([`Error::Divisibility`] otherwise); the witness `m` is computed.
/// Returns whether the identity holds exactly in `Z[ζ_c]`.
pub fn square_class_relation(
    k: i64,
    d: i64,
    l: i64,
    l_prime: i64,
    xi: &RootOfUnity,
) -> Result<bool> {
    if k <= 0 || d <= 0 || k % d != 0 {
        return Err(Error::Divisibility("square_class_relation requires d | k, both positive"));
    }
    if !xi.is_in_u() {
        return Err(Error::Domain("square_class_relation requires a root in the domain U"));
    }
    let kd = k / d;
    let diff = (l as i128) * (l as i128) - (l_prime as i128) * (l_prime as i128);
    if diff % kd as i128 != 0 {
        return Err(Error::Divisibility("l² − l'² must be divisible by k/d"));
    }
    let m = diff / kd as i128;
    let c = xi.order();
    let s = xi.exponent() as i128;
    let lhs = gauss_sum(k, 2 * d * l, xi);
    let rhs = gauss_sum(k, 2 * d * l_prime, xi).scale_by_power(s * mod_reduce(-m * d as i128, c) as i128);
    lhs.equals(&rhs)
}

/// Measured and predicted values of the asymptotic phase ratio of
/// Lemma "indeplin"/"LemmaInterm".
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticRatio {
    /// `G(k, 2dl, ξ_m) / G(k, 0, ξ_m)` at the finite index `m`, where
    /// `ξ_m = e^{2isπ/(d(r + m·k/d))}`.
    pub measured: Complex64,
    /// The limit `e^{−2iπ s I(r) l² / (k/d)}`, with `I(r)` the
    /// inverse witness of `a = k/d` modulo `r`.
    pub predicted: Complex64,
}

/// Evaluate the asymptotic ratio of Lemma "indeplin" at index `m`.
///
/// Requires `d | k`, `a = k/d ≥ 1`, `gcd(a, r) = 1`, and that
/// `s` be coprime to the order `d(r + ma)` (so `ξ_m` is primitive).
/// The measured ratio converges to the prediction at rate `O(1/m)`.
pub fn asymptotic_ratio(
    k: u64,
    d: u64,
    l: i64,
    r: u64,
    s: i64,
    m: u64,
) -> Result<AsymptoticRatio> {
    if k == 0 || d == 0 || k % d != 0 {
        return Err(Error::Divisibility("asymptotic_ratio requires d | k, both positive"));
    }
    let a = k / d;
    if a == 0 || crate::numth::gcd_u64(a, r) != 1 {
        return Err(Error::NotCoprime(a as i64, r as i64));
    }
    let order = d
        .checked_mul(r.checked_add(m.checked_mul(a).ok_or(Error::Domain("order overflow"))?)
            .ok_or(Error::Domain("order overflow"))?)
        .ok_or(Error::Domain("order overflow"))?;
    let xi_m = RootOfUnity::new(s, order)?;
    let num = gauss_sum(k as i64, 2 * (d as i64) * l, &xi_m).embed();
    let den = gauss_sum(k as i64, 0, &xi_m).embed();
    if den.norm() < 1e-9 {
        return Err(Error::Domain("base Gauss sum vanishes at this order"));
    }
    let witness = crate::numth::inverse_witness(a, r)? as f64;
    let theta = -2.0 * core::f64::consts::PI * (s as f64) * witness * (l as f64) * (l as f64)
        / (a as f64);
    let predicted = Complex64::new(libm::cos(theta), libm::sin(theta));
    Ok(AsymptoticRatio { measured: num / den, predicted })
}

/// Whether `G(k, 2dl, ξ)` vanishes, verified two ways: the exact
/// brute-force sum is reduced in `Z[ζ_c]`, and the CalculGauss
/// classification is consulted.  If the two disagree the function
/// fails loudly with [`Error::Domain`] instead of guessing.
pub fn vanishing_pattern(k: i64, d: i64, l: i64, xi: &RootOfUnity) -> Result<bool> {
    if k <= 0 || d <= 0 || k % d != 0 {
        return Err(Error::Divisibility("vanishing_pattern requires d | k, both positive"));
    }
    let brute_zero = gauss_sum(k, 2 * d * l, xi).is_zero();
    let closed = gauss_closed(k, 2 * d * l, xi)?;
    let closed_zero = match closed.kind {
        ClosedFormKind::Zero => true,
        ClosedFormKind::Uncovered => {
            return Err(Error::Domain("closed form did not classify this sum"))
        }
        // Nonzero kinds: base sums G(a,0,ξ) with q' = gcd(base_a, c)
        // dividing 0 trivially are nonzero iff their inner order is
        // not ≡ 2 (mod 4); rather than re-derive, reduce the exact
        // prediction.
        _ => closed.exact().expect("classified").is_zero(),
    };
    if brute_zero != closed_zero {
        return Err(Error::Domain("closed-form vanishing disagrees with the exact sum"));
    }
    Ok(brute_zero)
}

/// The set of residues `2dλ mod k` with `λ` an invertible square mod
/// `k/d` — the support pattern used when partitioning generators in
/// the dimension analysis.  Exposed for the CLI's relations report.
pub fn square_class_residues(k: u64, d: u64) -> Result<alloc::vec::Vec<u64>> {
    if d == 0 || k == 0 || k % d != 0 {
        return Err(Error::Divisibility("square_class_residues requires d | k"));
    }
    let table = invertible_squares(k / d)?;
    let mut out: alloc::vec::Vec<u64> =
        table.squares().iter().map(|&x| (2 * d * x) % (2 * k)).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::gcd_u64;

    fn all_u_roots(max_order: u64) -> alloc::vec::Vec<RootOfUnity> {
        let mut v = alloc::vec::Vec::new();
        for c in 3..=max_order {
            if c % 4 == 2 {
                continue;
            }
            for s in 1..c {
                if gcd_u64(s, c) == 1 {
                    v.push(RootOfUnity::new(s as i64, c).unwrap());
                }
            }
        }
        v
    }

    #[test]
    fn brute_spec_examples() {
        // G(1, 0, i) = 2 + 2i.
        let i = RootOfUnity::new(1, 4).unwrap();
        let g = gauss_sum(1, 0, &i).embed();
        assert!((g - Complex64::new(2.0, 2.0)).norm() < 1e-12);
        // G(1, 0, −1) = 1 + (−1) = 0.
        let m1 = RootOfUnity::new(1, 2).unwrap();
        assert!(gauss_sum(1, 0, &m1).is_zero());
        // G(0, 0, ξ) = c.
        let xi = RootOfUnity::new(2, 7).unwrap();
        let g0 = gauss_sum(0, 0, &xi);
        assert!(g0.equals(&GroupRingElement::from_integer(7, 7)).unwrap());
    }

    #[test]
    fn closed_matches_brute_small_sweep() {
        // A quick version of acceptance criterion 1 (full sweep lives
        // in tests/acceptance.rs).
        for xi in all_u_roots(20) {
            let c = xi.order() as i64;
            for a in 0..=c {
                for b in 0..=c {
                    let closed = gauss_closed(a, 2 * b, &xi).unwrap();
                    assert_ne!(closed.kind, ClosedFormKind::Uncovered, "a={a} 2b={} {xi}", 2 * b);
                    let exact = closed.exact().unwrap();
                    let brute = gauss_sum(a, 2 * b, &xi);
                    assert!(
                        brute.equals(&exact).unwrap(),
                        "mismatch a={a} 2b={} xi={xi} kind={:?}",
                        2 * b,
                        closed.kind
                    );
                }
            }
        }
    }

    #[test]
    fn odd_linear_coefficient_rejected() {
        let xi = RootOfUnity::new(1, 5).unwrap();
        assert!(matches!(gauss_closed(1, 3, &xi), Err(Error::OddLinearCoefficient(3))));
    }

    #[test]
    fn epsilon_ratio_examples() {
        // (a=1, ξ=i): G = 2+2i, normalized by √8 → (1+i)/√2.
        let i = RootOfUnity::new(1, 4).unwrap();
        let e = epsilon_ratio(1, &i).unwrap();
        let expect = Complex64::new(1.0, 1.0) / libm::sqrt(2.0);
        assert!((e - expect).norm() < 1e-12);
        // Modulus is 0 or 1 over the sweep; 0 exactly at c ≡ 2 mod 4.
        for c in 3..=30u64 {
            for s in 1..c {
                if gcd_u64(s, c) != 1 {
                    continue;
                }
                let xi = RootOfUnity::new(s as i64, c).unwrap();
                for a in 1..=c as i64 {
                    if gcd_i64(a, c as i64) != 1 {
                        continue;
                    }
                    let v = epsilon_ratio(a, &xi).unwrap().norm();
                    if c % 4 == 2 {
                        assert!(v < 1e-9, "c={c} s={s} a={a}");
                    } else {
                        assert!((v - 1.0).abs() < 1e-9, "c={c} s={s} a={a} |ε|={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicativity_examples() {
        assert!(verify_multiplicativity(1, 0, 3, 5, 1).unwrap());
        assert!(verify_multiplicativity(2, 4, 5, 8, 3).unwrap());
        assert!(verify_multiplicativity(6, 2, 7, 9, 2).unwrap());
        assert!(matches!(verify_multiplicativity(1, 0, 6, 9, 1), Err(Error::NotCoprime(6, 9))));
    }

    #[test]
    fn square_class_relation_examples() {
        // Spec example: k=4, d=2, l=l'=1 (m=0) at any admissible root.
        let xi = RootOfUnity::new(1, 5).unwrap();
        assert!(square_class_relation(4, 2, 1, 1, &xi).unwrap());
        // k=2, d=1, l=1, l'=3: l²−l'² = −8 = −4·(k/d) → m=−4.
        for c in [5u64, 7, 9, 11, 12, 13] {
            let xi = RootOfUnity::new(1, c).unwrap();
            assert!(square_class_relation(2, 1, 1, 3, &xi).unwrap(), "c={c}");
        }
        // Non-divisible difference errors.
        assert!(matches!(
            square_class_relation(5, 1, 1, 2, &RootOfUnity::new(1, 7).unwrap()),
            Err(Error::Divisibility(_))
        ));
    }

    #[test]
    fn vanishing_pattern_consistency() {
        for xi in all_u_roots(24) {
            for k in 1..=6i64 {
                for d in crate::numth::divisors(k as u64) {
                    for l in 0..=6i64 {
                        let v = vanishing_pattern(k, d as i64, l, &xi).unwrap();
                        let brute = gauss_sum(k, 2 * d as i64 * l, &xi);
                        assert_eq!(v, brute.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn asymptotic_ratio_converges() {
        let at = |m: u64| asymptotic_ratio(3, 1, 1, 5, 1, m).unwrap();
        let r1 = at(400);
        let r2 = at(800);
        let e1 = (r1.measured - r1.predicted).norm();
        let e2 = (r2.measured - r2.predicted).norm();
        assert!(e1 < 1e-2, "e1={e1}");
        assert!(e2 < 0.6 * e1, "e1={e1} e2={e2}");
    }
}
