//! Reshetikhin–Turaev torus operators, trace invariants, and closed forms.
//!
//! Implements the §3 machinery of the paper: the multicurve action
//! `Z((p,q)_T)`, the Dehn-twist diagonal `ρ(B_k)`, the mapping-torus trace
//! invariant `RT_ξ(M_k, ·) = Tr(ρ(B_k) ∘ Z(·))`, the closed forms of Theorem
//! "CalculRT" and Lemma "EvCasParticuliers", and the Appendix A general
//! monodromy matrices (odd `r` only), including `ρ(S)` for the mapping torus
//! `M_S`.
//!
//! Two deliberate deviations from the paper's displayed formulas, both
//! validated against the honest trace oracle (see the decisions ledger):
//!
//! * the odd-`q` closed form: the paper displays
//!   `(-1)^{kq} (-ξ)^{-2p + k((r+q)/2)² - kq}`; the value that actually
//!   matches `Tr(ρ(B_k)Z((p,q)_T))` is the `p`-independent
//!   `-u^{k(((r+q)/2)² - 1)}` with `u = -ξ` (odd `r`; the value is 0 for
//!   even `r` as displayed);
//! * Appendix B's displayed values for `ev((1,0)_T)` and `ev((1,2)_T)` do
//!   **not** coincide with the honest folded trace `Tr(ρ(S)Z(·))` (the
//!   paper's computation proceeds over the unfolded index set).  Both are
//!   exposed: [`rt_invariant_s`] is the honest trace, and
//!   [`ev_s_paper_formula`] reproduces the paper's displays.  The App. B
//!   colinearity statement is checked at the Gauss-sum level in `analysis`.

use num_complex::Complex64;
use num_integer::Integer;

use super::fold::{fold_index, BasisSpec};
use super::operator::TQFTOperator;
use crate::gauss::gauss_sum;
use crate::numth::{mod_inverse, negate_root};
use crate::skein::{CurveLabel, FracSkein, SkeinVector};
use crate::{Error, Result};

use alloc::vec::Vec;

fn parity_sign(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// The multicurve operator `Z((p,q)_T)` of the §3 action lemma:
/// `Z((p,q)_T) e_j = (-1)^p (ξ^{2pj+pq} e_{j+q} + ξ^{-2pj+pq} e_{j-q})`.
///
/// Works for every integer pair, including non-primitive ones (the Chebyshev
/// weighting of the `(p,q)_T` basis is built into the formula).
pub fn z_curve(p: i64, q: i64, spec: &BasisSpec) -> TQFTOperator {
    let xi = spec.xi();
    let sgn = parity_sign(p);
    let mut op = TQFTOperator::zeros(spec);
    for col in 0..spec.dim() {
        let j = (col + 1) as i64;
        let pj2 = 2 * (p as i128) * (j as i128);
        let pq = (p as i128) * (q as i128);
        for (target, exponent) in [(j + q, pj2 + pq), (j - q, -pj2 + pq)] {
            let fold = fold_index(target, spec);
            if let Some(row) = fold.row() {
                let coeff = xi.value_pow(exponent) * (sgn * fold.sign as f64);
                op.add_to(row, col, coeff);
            }
        }
    }
    op
}

/// Extends [`z_curve`] to a [`SkeinVector`] by evaluating each Laurent
/// coefficient at `A = ξ` and summing.
pub fn z_vector(v: &SkeinVector, spec: &BasisSpec) -> TQFTOperator {
    let mut acc = TQFTOperator::zeros(spec);
    for (label, coeff) in v.iter() {
        let weight = coeff.eval_root(spec.xi());
        let term = z_curve(label.p(), label.q(), spec).scale(weight);
        acc = acc.add(&term).expect("operators share a basis");
    }
    acc
}

/// Extends [`z_curve`] to a [`FracSkein`]; a pole of any coefficient at
/// `A = ξ` is a domain error (the almost-everywhere convention).
pub fn z_frac(v: &FracSkein, spec: &BasisSpec) -> Result<TQFTOperator> {
    let mut acc = TQFTOperator::zeros(spec);
    for (label, coeff) in v.iter() {
        let weight = coeff
            .eval_root(spec.xi())
            .ok_or(Error::Domain("rational coefficient has a pole at the sample root"))?;
        let term = z_curve(label.p(), label.q(), spec).scale(weight);
        acc = acc.add(&term).expect("operators share a basis");
    }
    Ok(acc)
}

/// The Dehn-twist action `ρ(B_k) e_j = (-ξ)^{k(j²-1)} e_j` (§3 lemma),
/// stored as an exact diagonal in the base `-ξ`.
pub fn rho_bk(k: i64, spec: &BasisSpec) -> TQFTOperator {
    let base = negate_root(spec.xi());
    let exps: Vec<i128> = (1..=spec.dim() as i128).map(|j| (k as i128) * (j * j - 1)).collect();
    TQFTOperator::exact_diagonal_op(spec, base, exps).expect("dimension matches by construction")
}

/// Trace invariant `RT_ξ(M_k, v) = Tr(ρ(B_k) ∘ Z(v))` for a skein vector
/// with Laurent coefficients (proof of Theorem "CalculRT").
pub fn rt_invariant_trace(k: i64, v: &SkeinVector, xi: &crate::numth::RootOfUnity) -> Result<Complex64> {
    let spec = BasisSpec::new(xi)?;
    Ok(rho_bk(k, &spec).mul(&z_vector(v, &spec))?.trace())
}

/// [`rt_invariant_trace`] for reduction outputs with rational coefficients.
pub fn rt_invariant_trace_frac(
    k: i64,
    v: &FracSkein,
    xi: &crate::numth::RootOfUnity,
) -> Result<Complex64> {
    let spec = BasisSpec::new(xi)?;
    Ok(rho_bk(k, &spec).mul(&z_frac(v, &spec)?)?.trace())
}

/// Closed form of Theorem "CalculRT":
/// `RT_ξ(M_k, T_l(m)) = (-1)^l u^{-k} (G(k, 2l, u) - ν)` with `u = -ξ`.
pub fn rt_closed_tl(k: i64, l: i64, xi: &crate::numth::RootOfUnity) -> Result<Complex64> {
    let spec = BasisSpec::new(xi)?;
    let u = negate_root(xi);
    let g = gauss_sum(k, 2 * l, &u).embed();
    let nu = spec.nu() as f64;
    Ok(u.value_pow(-(k as i128)) * (g - nu) * parity_sign(l))
}

/// Closed form of Lemma "EvCasParticuliers" for `(p,q)_T` with `q ≠ 0`,
/// under the proof's "r big enough" precondition `r > 2|q|`.
///
/// Cases (with `u = -ξ`):
/// * `q` even: `(-1)^{p+1} u^{k((q/2)²-1)}`, doubled when `r` is even;
/// * `q` odd, `r` even: `0`;
/// * `q` odd, `r` odd: `-u^{k(((r+q)/2)²-1)}` (see the module notes on the
///   corrected `p`-independent exponent; the leading sign is the odd-`r`
///   reflection sign `e_{r-m} = -e_m` surfacing at the single diagonal
///   fold `e_{j₀+q} = -e_{j₀}`, `j₀ = (r-q)/2`).
pub fn ev_closed_pq(k: i64, p: i64, q: i64, xi: &crate::numth::RootOfUnity) -> Result<Complex64> {
    if q == 0 {
        return Err(Error::Domain(
            "(p,0)_T labels are covered by the T_l closed form; use rt_closed_tl",
        ));
    }
    let spec = BasisSpec::new(xi)?;
    let r = spec.r();
    let needed = 2 * q.unsigned_abs() + 1;
    if r < needed {
        return Err(Error::RTooSmall { r, needed });
    }
    let u = negate_root(xi);
    if q % 2 == 0 {
        let half = (q / 2) as i128;
        let value = u.value_pow((k as i128) * (half * half - 1)) * parity_sign(p + 1);
        let mult = if r % 2 == 0 { 2.0 } else { 1.0 };
        Ok(value * mult)
    } else if r % 2 == 0 {
        Ok(Complex64::new(0.0, 0.0))
    } else {
        let h = ((r as i128) + (q as i128)) / 2;
        Ok(-u.value_pow((k as i128) * (h * h - 1)))
    }
}

/// Appendix A general-monodromy matrix for `[[a,b],[c,d]] ∈ SL₂(ℤ)` at odd
/// `r`:
///
/// `ρ(M) e_j = (1/√r') Σ_{t=0}^{r'-1} (-ξ)^{a(c/g)*_r g t² + bd j² + 2bg jt} e_{dj+gt}`
///
/// with `g = gcd(r, c)` (`g = r` when `c = 0`) and `r' = r/g`.  The result is
/// well-defined only up to a global unit-modulus phase; compare with
/// [`TQFTOperator::ratio_constant`].
pub fn rho_general(a: i64, b: i64, c: i64, d: i64, spec: &BasisSpec) -> Result<TQFTOperator> {
    if !spec.r_odd() {
        return Err(Error::EvenR(spec.r()));
    }
    if a.checked_mul(d).and_then(|x| b.checked_mul(c).map(|y| x - y)) != Some(1) {
        return Err(Error::Domain("Appendix A requires determinant 1"));
    }
    let r = spec.r();
    let g = if c == 0 { r } else { c.unsigned_abs().gcd(&r) };
    let rp = r / g;
    // The t² term only appears when the t-sum is non-trivial; there the paper
    // inverts c/g modulo r, which can fail for composite r (never for prime
    // r): surface that as the number-theoretic error it is.
    let cstar: i128 = if rp > 1 { mod_inverse(c / (g as i64), r)? as i128 } else { 0 };
    let w = negate_root(spec.xi());
    let scale = 1.0 / libm::sqrt(rp as f64);
    let (ai, bi, di, gi) = (a as i128, b as i128, d as i128, g as i128);
    let mut op = TQFTOperator::zeros(spec);
    for col in 0..spec.dim() {
        let j = (col + 1) as i128;
        for t in 0..rp as i128 {
            let exponent = ai * cstar * gi * t * t + bi * di * j * j + 2 * bi * gi * j * t;
            let target = di * j + gi * t;
            let fold = fold_index(target as i64, spec);
            if let Some(row) = fold.row() {
                let coeff = w.value_pow(exponent) * (scale * fold.sign as f64);
                op.add_to(row, col, coeff);
            }
        }
    }
    Ok(op)
}

/// Honest `M_S` trace invariant `Tr(ρ(S) ∘ Z(v))` with
/// `S = [[0,-1],[1,0]]`, defined up to a global unit-modulus phase (odd `r`
/// only).
pub fn rt_invariant_s(v: &SkeinVector, xi: &crate::numth::RootOfUnity) -> Result<Complex64> {
    let spec = BasisSpec::new(xi)?;
    let s = rho_general(0, -1, 1, 0, &spec)?;
    Ok(s.mul(&z_vector(v, &spec))?.trace())
}

/// [`rt_invariant_s`] for reduction outputs with rational coefficients.
pub fn rt_invariant_s_frac(v: &FracSkein, xi: &crate::numth::RootOfUnity) -> Result<Complex64> {
    let spec = BasisSpec::new(xi)?;
    let s = rho_general(0, -1, 1, 0, &spec)?;
    Ok(s.mul(&z_frac(v, &spec)?)?.trace())
}

/// The two displayed Appendix B evaluation formulas:
///
/// * `ev((1,0)_T)(ξ) = (-1/√r)  (G(2,2,-ξ) + ν)`
/// * `ev((1,2)_T)(ξ) = (-ξ²/√r) (G(2,6,-ξ) + ν)`
///
/// Only these two labels are covered by the paper.  See the module notes:
/// these displays do not equal the honest folded trace [`rt_invariant_s`].
pub fn ev_s_paper_formula(label: &CurveLabel, xi: &crate::numth::RootOfUnity) -> Result<Complex64> {
    let spec = BasisSpec::new(xi)?;
    if !spec.r_odd() {
        return Err(Error::EvenR(spec.r()));
    }
    let u = negate_root(xi);
    let nu = spec.nu() as f64;
    let sqrt_r = libm::sqrt(spec.r() as f64);
    match label.pair() {
        (1, 0) => Ok(-(gauss_sum(2, 2, &u).embed() + nu) / sqrt_r),
        (1, 2) => Ok(-xi.value_pow(2) * (gauss_sum(2, 6, &u).embed() + nu) / sqrt_r),
        _ => Err(Error::Domain("Appendix B displays cover only (1,0)_T and (1,2)_T")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::RootOfUnity;
    use crate::skein::{product_to_sum, reduce_horizontal_k, reduce_horizontal_s};

    fn root(s: i64, n: u64) -> RootOfUnity {
        RootOfUnity::new(s, n).unwrap()
    }

    fn spec_of(s: i64, n: u64) -> BasisSpec {
        BasisSpec::new(&root(s, n)).unwrap()
    }

    #[test]
    fn z_curve_examples() {
        for (s, n) in [(1i64, 10u64), (1, 12), (3, 16)] {
            let sp = spec_of(s, n);
            let xi = sp.xi().clone();
            // (1,0): diagonal entries −(ξ^{2j} + ξ^{−2j}).
            let z10 = z_curve(1, 0, &sp);
            for col in 0..sp.dim() {
                let j = (col + 1) as i128;
                let expect = -(xi.value_pow(2 * j) + xi.value_pow(-2 * j));
                assert!((z10.get(col, col) - expect).norm() < 1e-12);
                for row in 0..sp.dim() {
                    if row != col {
                        assert!(z10.get(row, col).norm() < 1e-12);
                    }
                }
            }
            // (0,0) = 2·id.
            let z00 = z_curve(0, 0, &sp);
            let two_id = TQFTOperator::identity(&sp).scale(Complex64::new(2.0, 0.0));
            assert!(z00.max_abs_diff(&two_id).unwrap() < 1e-12);
            // (0,1): e_j ↦ e_{j+1} + e_{j−1} with folding at the edges.
            let z01 = z_curve(0, 1, &sp);
            if sp.dim() >= 3 {
                assert!((z01.get(1, 0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
                assert!((z01.get(2, 1) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
                assert!((z01.get(0, 1) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn rho_bk_examples() {
        let sp = spec_of(1, 10);
        let r1 = rho_bk(1, &sp);
        // j = 1 eigenvalue 1; j = 2 eigenvalue (−ξ)³.
        assert!((r1.get(0, 0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let w = negate_root(sp.xi());
        assert!((r1.get(1, 1) - w.value_pow(3)).norm() < 1e-12);
        // rho_Bk(2) = rho_Bk(1)² with exact exponents.
        let r2 = rho_bk(2, &sp);
        let r1sq = r1.mul(&r1).unwrap();
        assert_eq!(
            r1sq.exact_diagonal().unwrap().exponents,
            r2.exact_diagonal().unwrap().exponents
        );
        assert!(r1sq.max_abs_diff(&r2).unwrap() < 1e-12);
    }

    #[test]
    fn star_compatibility_samples() {
        // Z(a ⋆ b) = Z(a) ∘ Z(b) — the composition computation of the
        // multicurve-action lemma.
        let pairs = [
            ((1i64, 0i64), (0i64, 1i64)),
            ((1, 1), (1, -1)),
            ((2, 1), (0, 1)),
            ((3, -2), (1, 2)),
            ((0, 2), (2, 0)),
        ];
        for (s, n) in [(1i64, 10u64), (1, 14), (1, 16), (5, 18)] {
            let sp = spec_of(s, n);
            for ((p1, q1), (p2, q2)) in pairs {
                let a = CurveLabel::new(p1, q1);
                let b = CurveLabel::new(p2, q2);
                let lhs = z_vector(&product_to_sum(&a, &b), &sp);
                let rhs = z_curve(p1, q1, &sp).mul(&z_curve(p2, q2, &sp)).unwrap();
                assert!(
                    lhs.max_abs_diff(&rhs).unwrap() < 1e-8,
                    "star compatibility failed at ({p1},{q1})⋆({p2},{q2}), order {n}"
                );
            }
        }
    }

    #[test]
    fn trace_matches_closed_tl() {
        for k in [2i64, 3, 5] {
            for l in 0..=(k / 2) {
                for (s, n) in [(1i64, 10u64), (1, 16), (3, 22)] {
                    let xi = root(s, n);
                    let v = SkeinVector::from_label(CurveLabel::new(l, 0));
                    let via_trace = rt_invariant_trace(k, &v, &xi).unwrap();
                    let closed = rt_closed_tl(k, l, &xi).unwrap();
                    assert!(
                        (via_trace - closed).norm() < 1e-8,
                        "k={k} l={l} order={n}: {via_trace} vs {closed}"
                    );
                }
            }
        }
    }

    #[test]
    fn trace_matches_ev_closed_pq() {
        let labels = [(0i64, 2i64), (1, 1), (0, 1), (1, 2), (2, -1), (-1, 2), (2, 2)];
        for k in [2i64, 3, 4] {
            for (s, n) in [(1i64, 14u64), (1, 16), (5, 26)] {
                let xi = root(s, n);
                let r = n / 2;
                for (p, q) in labels {
                    if r <= 2 * q.unsigned_abs() {
                        continue;
                    }
                    let v = SkeinVector::from_label(CurveLabel::new(p, q));
                    let via_trace = rt_invariant_trace(k, &v, &xi).unwrap();
                    let closed = ev_closed_pq(k, p, q, &xi).unwrap();
                    assert!(
                        (via_trace - closed).norm() < 1e-8,
                        "k={k} (p,q)=({p},{q}) order={n}: {via_trace} vs {closed}"
                    );
                }
            }
        }
    }

    #[test]
    fn ev_closed_pq_spec_examples() {
        // (p=0, q=2, r odd) → −1 ; (r even) → −2.
        let odd = ev_closed_pq(5, 0, 2, &root(1, 14)).unwrap();
        assert!((odd - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let even = ev_closed_pq(5, 0, 2, &root(1, 16)).unwrap();
        assert!((even - Complex64::new(-2.0, 0.0)).norm() < 1e-12);
        // (k=2, p=1, q=1, r even) → 0.
        let zero = ev_closed_pq(2, 1, 1, &root(1, 16)).unwrap();
        assert!(zero.norm() < 1e-12);
        // Guards.
        assert!(matches!(
            ev_closed_pq(2, 0, 3, &root(1, 10)),
            Err(Error::RTooSmall { r: 5, needed: 7 })
        ));
        assert!(ev_closed_pq(2, 1, 0, &root(1, 10)).is_err());
    }

    #[test]
    fn rho_general_generator_cases() {
        let sp = spec_of(1, 10); // r = 5
        let w = negate_root(sp.xi());
        // (1,1,0,1) → diagonal (−ξ)^{j²} exactly (up to nothing: r' = 1).
        let t = rho_general(1, 1, 0, 1, &sp).unwrap();
        let expected = TQFTOperator::exact_diagonal_op(
            &sp,
            w.clone(),
            (1..=sp.dim() as i128).map(|j| j * j).collect(),
        )
        .unwrap();
        assert!(t.max_abs_diff(&expected).unwrap() < 1e-12);
        // Identity input → global unit-modulus phase times the identity.
        let id = rho_general(1, 0, 0, 1, &sp).unwrap();
        let (lambda, dev) = id
            .ratio_constant(&TQFTOperator::identity(&sp), 1e-10)
            .unwrap()
            .expect("comparable");
        assert!((lambda.norm() - 1.0).abs() < 1e-9 && dev < 1e-9);
        // (0,−1,1,0) → the §App. A display (1/√r)(−ξ)^{2tj} e_t up to phase.
        let s_op = rho_general(0, -1, 1, 0, &sp).unwrap();
        let mut display = TQFTOperator::zeros(&sp);
        let scale = 1.0 / libm::sqrt(5.0);
        for col in 0..sp.dim() {
            let j = (col + 1) as i128;
            for t in 0..5i128 {
                if let Some(row) = fold_index(t as i64, &sp).row() {
                    let sign = fold_index(t as i64, &sp).sign as f64;
                    display.add_to(row, col, w.value_pow(2 * t * j) * (scale * sign));
                }
            }
        }
        let (lambda, dev) = s_op.ratio_constant(&display, 1e-10).unwrap().expect("comparable");
        assert!((lambda.norm() - 1.0).abs() < 1e-8, "phase modulus {}", lambda.norm());
        assert!(dev < 1e-8, "deviation {dev}");
    }

    #[test]
    fn rho_general_is_projective_homomorphism_sample() {
        // B_1 · S = [[1,-1],[1,0]].
        for (s, n) in [(1i64, 10u64), (1, 14), (3, 22)] {
            let sp = spec_of(s, n);
            let lhs = rho_general(1, -1, 1, 0, &sp).unwrap();
            let rhs = rho_general(1, 1, 0, 1, &sp)
                .unwrap()
                .mul(&rho_general(0, -1, 1, 0, &sp).unwrap())
                .unwrap();
            let (lambda, dev) = lhs.ratio_constant(&rhs, 1e-10).unwrap().expect("comparable");
            assert!(
                (lambda.norm() - 1.0).abs() < 1e-8 && dev < 1e-8,
                "order {n}: modulus {} dev {dev}",
                lambda.norm()
            );
        }
    }

    #[test]
    fn rho_general_matches_rho_bk_up_to_phase() {
        for k in [1i64, 2, 3, 5] {
            let sp = spec_of(1, 14);
            let via_general = rho_general(1, k, 0, 1, &sp).unwrap();
            let direct = rho_bk(k, &sp);
            let (lambda, dev) = via_general.ratio_constant(&direct, 1e-10).unwrap().unwrap();
            assert!((lambda.norm() - 1.0).abs() < 1e-9 && dev < 1e-9, "k={k}");
        }
    }

    #[test]
    fn rho_general_guards() {
        let even = spec_of(1, 16); // r = 8
        assert!(matches!(rho_general(0, -1, 1, 0, &even), Err(Error::EvenR(8))));
        let sp = spec_of(1, 10);
        assert!(rho_general(1, 1, 1, 1, &sp).is_err()); // det 0
    }

    #[test]
    fn appendix_b_displays_differ_from_honest_trace() {
        // The paper's displayed ev((1,0)_T) does not match Tr(ρ(S)Z((1,0)));
        // the artifact keeps both (see module docs + decisions ledger).
        let xi = root(1, 10);
        let label = CurveLabel::new(1, 0);
        let honest = rt_invariant_s(&SkeinVector::from_label(label.clone()), &xi).unwrap();
        let display = ev_s_paper_formula(&label, &xi).unwrap();
        assert!(
            (honest.norm() - display.norm()).abs() > 1e-3,
            "expected a genuine modulus gap, got {} vs {}",
            honest.norm(),
            display.norm()
        );
        // Both are finite and non-zero.
        assert!(honest.norm() > 1e-12 && display.norm() > 1e-12);
        // Unsupported label is a domain error.
        assert!(ev_s_paper_formula(&CurveLabel::new(1, 1), &xi).is_err());
    }

    /// Independent validation of the M_k rewrite system: reducing to the
    /// Theorem §2 basis must preserve the RT trace at every admissible
    /// sample root.
    ///
    /// Admissibility: the reduction is an identity of `K_{Q(A)}(M_k)`;
    /// relation (a) arises by dividing by `A^{2q} − 1`, so the class
    /// `(p+1,q)_T − (p−1,q)_T` is only `(A^{2q}−1)`-torsion over
    /// `Z[A^{±1}]` and evaluation at a root with `r | q` can (and does)
    /// miss it.  Sample roots therefore have `r` larger than every
    /// intermediate `q`-level of the reduction (here `|q| ≤ 7`).
    #[test]
    fn reduction_preserves_rt_trace() {
        let labels = [(5i64, -3i64), (7, 2), (4, 4), (6, 0), (0, 7), (3, 5), (-5, 1)];
        for k in [2u64, 3, 4, 5, 8] {
            for (p, q) in labels {
                let v = SkeinVector::from_label(CurveLabel::new(p, q));
                let red = reduce_horizontal_k(&v, k).unwrap();
                for (s, n) in [(1i64, 18u64), (1, 16), (5, 26)] {
                    let xi = root(s, n);
                    let before = rt_invariant_trace(k as i64, &v, &xi).unwrap();
                    let after = rt_invariant_trace_frac(k as i64, &red.result, &xi).unwrap();
                    assert!(
                        (before - after).norm() < 1e-8,
                        "k={k} label=({p},{q}) order={n}: {before} vs {after}"
                    );
                }
            }
        }
    }

    /// The resonance excluded above is real: at `r | q` the evaluation
    /// of relation (a) genuinely fails (the paper's division by
    /// `A^{2q} − 1` is not available there), so reduction does not
    /// preserve the trace at such roots.  Pin the phenomenon so the
    /// admissibility restriction stays honest.
    #[test]
    fn reduction_resonance_at_r_dividing_q() {
        let xi = root(3, 14); // r = 7
        let v = SkeinVector::from_label(CurveLabel::new(0, 7));
        let red = reduce_horizontal_k(&v, 2).unwrap();
        let before = rt_invariant_trace(2, &v, &xi).unwrap();
        let after = rt_invariant_trace_frac(2, &red.result, &xi).unwrap();
        assert!(
            (before - after).norm() > 1e-3,
            "expected a resonance gap at r=7, q=7: {before} vs {after}"
        );
    }

    /// Same oracle for the M_S rewrite system at odd r.
    #[test]
    fn s_reduction_preserves_rt_trace() {
        let labels = [(5i64, -3i64), (4, 4), (0, 6), (3, 1), (-2, 5), (7, 0)];
        for (p, q) in labels {
            let v = SkeinVector::from_label(CurveLabel::new(p, q));
            let red = reduce_horizontal_s(&v).unwrap();
            for (s, n) in [(1i64, 10u64), (1, 14), (3, 22)] {
                let xi = root(s, n);
                let before = rt_invariant_s(&v, &xi).unwrap();
                let after = rt_invariant_s_frac(&red.result, &xi).unwrap();
                assert!(
                    (before - after).norm() < 1e-8,
                    "label=({p},{q}) order={n}: {before} vs {after}"
                );
            }
        }
    }
}
