//! Horizontal-class reduction of skein vectors onto the finite bases
//! of `K_A(M_k)` and `K_A(M_S)`.
//!
//! Every rewrite applies an *exact identity* of the skein module
//! (relations (a)/(b) and the slide for `M_k`; relations (c)/(d) and
//! the slide for `M_S`).  Reductions record a rewrite trace that can
//! be replayed step by step (see [`verify_reduction_k`] /
//! [`verify_reduction_s`]), and every rule application is checked to
//! stay within a single `H_1(·; Z/2)` grading class.
//!
//! Coefficients live in `Q(A)` ([`RatFunc`]): the reduction rules are
//! obtained by *dividing* rearranged relations, so the natural
//! coefficient field is `Q(A)` and each division site carries a
//! [`Error::DegenerateDivisor`] runtime guard (the divisor exponents
//! are checked, never assumed, to differ).  It is a theorem of the
//! implementation — asserted by tests, and visible in the traces —
//! that every divisor exactly divides its numerator, so all reduced
//! coefficients come out as Laurent *polynomials*: pairing the two
//! parity instances of relation (b) cancels the non-monomial terms
//! that a single-instance elimination would leave.
//!
//! The `M_k` relation (b) is used in its *trace-consistent orientation*
//! (`k ↦ −k` relative to the paper's display; see the decisions ledger):
//!
//! ```text
//! (b′)  A^p (p,q+1) + A^{−p} (p,q−1)
//!         = A^{−kq−p} (p−k, q+1) + A^{p+kq} (p+k, q−1).
//! ```
//!
//! This is `(p,q) ⋆ (0,1) = (−k,1) ⋆ (p,q)`.  The paper derives its
//! version from `(p,q) ⋆ (0,1) = (k,1) ⋆ (p,q)`, but the functional
//! `Tr(ρ(B_k) Z(·))` — the one whose closed forms the paper states and
//! which this crate validates against — kills `a ⋆ x − (B_k^{−1} x) ⋆ a`
//! (conjugation gives `ρ(B_k)^{−1} Z(x) ρ(B_k) = Z(B_k^{−1} x)`, then
//! trace cyclicity), and `B_k^{−1}(0,1) = (−k,1)`.  The two orientations
//! generate the same basis; only the monomial coefficients differ, and
//! the (b′) ones are the ones that pass the RT-trace oracle.
//!
//! `M_k` algorithm (deterministic, fuel-guarded):
//! 1. `q = 0`, `p > ⌊k/2⌋`:  climb down with
//!    `(p,0) = A^{k−2p}(p−k,0) + A^{−k}(−p−k,2) − A^{−2p}(−p,2)`
//!    (relation (b′) at `q = −1`, rearranged — monomial coefficients);
//! 2. `q ≠ 0`, `p ∉ {0,1}`:  translate `(p,q) = (p mod 2, q)`
//!    (iterated relation (a));
//! 3. `q ≥ 3`, `p ∈ {0,1}`:  descend `q` by 2 with `q0 = q − 1`.
//!    For even `k`, relation (b′) at `(p, q0)` plus (a)-translations
//!    give `(A^p − A^{−p−kq0})(p,q) = (A^{p+kq0} − A^{−p})(p,q−2)`,
//!    whose quotient is the exact monomial `(p,q) = A^{kq0}(p,q−2)`
//!    (guard: `2p ≠ −kq0`).  For odd `k`, relation (b′) flips the
//!    horizontal parity; eliminating between the instances at
//!    `(p, q0)` and `(p−k, q0)` cancels the `(p, q−2)` term and gives
//!    `(A^p − A^{2k−2kq0−3p})(p,q) = A^{kq0}(A^p − A^{2k−2kq0−3p})(1−p,q−2)`,
//!    whose quotient is the exact monomial
//!    `(p,q) = A^{kq0}(1−p,q−2)` (guard: `2p ≠ k(1−q0)`);
//! 4. odd `k`, `(1,1)`:  slide to `(k+1,1)` and translate with (a):
//!    the exact composite `(1,1) = (0,1)` (this slide holds for both
//!    orientations: `B_k^{±1}(1,1) = (1±k, 1)` both translate to `(0,1)`).
//!
//! `M_S` algorithm: normalize into the closed first quadrant with the
//! slide, then descend `Φ = p + q` with monomial instances of
//! relations (c′) and (d).  All `M_S` coefficients are monomials — no
//! division is ever needed.  Here too a trace-consistent orientation
//! is used (decisions ledger): the Appendix A operator `ρ(S)`
//! satisfies `ρ(S) Z((p,q)) ρ(S)^{−1} = (−1)^{p+q} Z(S(p,q))` — the
//! sign is forced to be a `(Z/2)²`-character by ⋆-multiplicativity and
//! is measured on generators — so the functional `Tr(ρ(S) Z(·))` kills
//! `a ⋆ x − λ(x) (S^{−1}x) ⋆ a` with `λ(x) = (−1)^{x_p + x_q}`.
//! Relation (d) (from `x = (1,1)`, `λ = +1`) survives as displayed;
//! relation (c) (from `x = (0,1)`, `λ = −1`) acquires a global minus
//! sign, and the monodromy slide becomes `(p,q) = (−1)^{p+q} (−q,p)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::label::{grading, grading_s, CurveLabel};
use super::laurent::LaurentPolynomial;
use super::ratfunc::RatFunc;
use super::vector::SkeinVector;
use crate::{Error, Result};

/// A skein vector with `Q(A)` coefficients (the natural home of
/// reduction outputs).
#[derive(Clone, Debug, Default)]
pub struct FracSkein {
    terms: BTreeMap<CurveLabel, RatFunc>,
}

impl FracSkein {
    /// Zero vector.
    pub fn zero() -> Self {
        FracSkein { terms: BTreeMap::new() }
    }

    /// Lift a Laurent-coefficient vector.
    pub fn from_vector(v: &SkeinVector) -> Self {
        let mut out = Self::zero();
        for (l, c) in v.iter() {
            out.add_term(*l, RatFunc::from_laurent(c.clone()));
        }
        out
    }

    /// Iterate `(label, coefficient)` in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&CurveLabel, &RatFunc)> {
        self.terms.iter()
    }

    /// Labels present.
    pub fn labels(&self) -> Vec<CurveLabel> {
        self.terms.keys().copied().collect()
    }

    /// Coefficient of a label (zero if absent).
    pub fn coeff(&self, label: &CurveLabel) -> RatFunc {
        self.terms.get(label).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Number of stored labels.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Whether all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }

    /// Add `c · label` in place, dropping exact zeros.
    pub fn add_term(&mut self, label: CurveLabel, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&label) {
            None => {
                self.terms.insert(label, c);
            }
            Some(old) => {
                let merged = old.add(&c);
                if !merged.is_zero() {
                    self.terms.insert(label, merged);
                }
            }
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(*l, c.neg());
        }
        out
    }

    /// Exact equality (coefficient-wise cross-multiplication).
    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Render in the textual format `coeff * (p,q) + ...`.
    pub fn render(&self) -> alloc::string::String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return alloc::string::String::from("0");
        }
        let mut out = alloc::string::String::new();
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
}

impl core::fmt::Display for FracSkein {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// One recorded rewrite: `target` (with the coefficient it carried at
/// the time) was replaced by `Σ coeff_i · label_i` where the
/// `expansion` lists the unit identity `target = Σ coeff_i·label_i`.
#[derive(Clone, Debug)]
pub struct RewriteStep {
    /// Human-readable rule identifier.
    pub rule: &'static str,
    /// The label that was rewritten.
    pub target: CurveLabel,
    /// The coefficient the label carried when selected.
    pub carried: RatFunc,
    /// The unit expansion of `target` (labels are normalized).
    pub expansion: Vec<(CurveLabel, RatFunc)>,
}

/// Result of a reduction: the reduced vector on basis labels plus the
/// full rewrite trace.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// The reduced vector (supported on basis labels only).
    pub result: FracSkein,
    /// The rewrite steps, in application order.
    pub steps: Vec<RewriteStep>,
}

/// The fixed basis of `K_A(M_k)`:
/// `{(p,0) : 0 ≤ p ≤ ⌊k/2⌋} ∪ {(0,1), (0,2), (1,2)} ∪ {(1,1) iff k even}`.
pub fn basis_k(k: u64) -> Vec<CurveLabel> {
    let mut v: Vec<CurveLabel> = (0..=(k / 2) as i64).map(|p| CurveLabel::new(p, 0)).collect();
    v.push(CurveLabel::new(0, 1));
    if k % 2 == 0 {
        v.push(CurveLabel::new(1, 1));
    }
    v.push(CurveLabel::new(0, 2));
    v.push(CurveLabel::new(1, 2));
    v
}

/// Whether a (normalized) label is in the `K_A(M_k)` basis.
pub fn is_basis_label_k(label: &CurveLabel, k: u64) -> bool {
    let (p, q) = label.pair();
    match q {
        0 => (0..=(k / 2) as i64).contains(&p),
        1 => p == 0 || (p == 1 && k % 2 == 0),
        2 => p == 0 || p == 1,
        _ => false,
    }
}

/// The fixed basis of `K_A(M_S)`: `{(0,0), (1,0), (1,1), (1,2)}`.
pub fn basis_s() -> Vec<CurveLabel> {
    alloc::vec![
        CurveLabel::new(0, 0),
        CurveLabel::new(1, 0),
        CurveLabel::new(1, 1),
        CurveLabel::new(1, 2),
    ]
}

/// Whether a (normalized) label is in the `K_A(M_S)` basis.
pub fn is_basis_label_s(label: &CurveLabel) -> bool {
    matches!(label.pair(), (0, 0) | (1, 0) | (1, 1) | (1, 2))
}

fn mono(e: i64) -> RatFunc {
    RatFunc::power(e)
}

fn mono_neg(e: i64) -> RatFunc {
    RatFunc::from_laurent(LaurentPolynomial::power(e).neg())
}

/// The unit expansion of a single non-basis label for `M_k`.
fn rewrite_once_k(label: &CurveLabel, k: u64) -> Result<(&'static str, Vec<(CurveLabel, RatFunc)>)> {
    let (p, q) = label.pair();
    let ki = k as i64;
    debug_assert!(!is_basis_label_k(label, k));
    if q == 0 {
        // Step 1: (p,0) = A^{k−2p}(p−k,0) + A^{−k}(−p−k,2) − A^{−2p}(−p,2)
        // (relation (b′) at q = −1).
        debug_assert!(p > ki / 2);
        return Ok((
            "relB-axis-climb",
            alloc::vec![
                (CurveLabel::new(p - ki, 0), mono(ki - 2 * p)),
                (CurveLabel::new(-p - ki, 2), mono(-ki)),
                (CurveLabel::new(-p, 2), mono_neg(-2 * p)),
            ],
        ));
    }
    if !(0..=1).contains(&p) {
        // Step 2: iterated relation (a) — horizontal translation to
        // the residue p mod 2 ∈ {0,1}.
        return Ok((
            "relA-translate",
            alloc::vec![(CurveLabel::new(p.rem_euclid(2), q), RatFunc::one())],
        ));
    }
    if q == 1 {
        // Step 4 (odd k only; (1,1) is basis for even k): slide to
        // (k+1, 1), then translate with (a): exact unit coefficient.
        debug_assert!(p == 1 && k % 2 == 1);
        return Ok(("slide-translate", alloc::vec![(CurveLabel::new(0, 1), RatFunc::one())]));
    }
    // Step 3: q ≥ 3, p ∈ {0,1}: vertical descent from relation (b′) at
    // q0 = q − 1.
    debug_assert!(q >= 3);
    let q0 = q - 1;
    if k % 2 == 0 {
        // Divisor A^p − A^{−p−kq0}; the numerator A^{p+kq0} − A^{−p}
        // is exactly A^{kq0} times it: monomial descent.
        if 2 * p == -ki * q0 {
            return Err(Error::DegenerateDivisor { p, q });
        }
        return Ok((
            "relB-descent-even",
            alloc::vec![(CurveLabel::new(p, q - 2), mono(ki * q0))],
        ));
    }
    // Odd k: divisor A^p − A^{2k−2kq0−3p}; the numerator is exactly
    // A^{kq0} times it.  The horizontal parity flips (p ↦ 1−p), which
    // stays inside the grading class because x is 2-divisible in
    // H_1(M_k) for odd k.
    if 2 * p == ki * (1 - q0) {
        return Err(Error::DegenerateDivisor { p, q });
    }
    Ok((
        "relB-descent-odd",
        alloc::vec![(CurveLabel::new(1 - p, q - 2), mono(ki * q0))],
    ))
}

/// The unit expansion of a single non-basis label for `M_S`.
///
/// Relation (c) and the slide are used in their *trace-consistent*
/// orientation (see the module docs): `ρ(S)` intertwines the `Z`-action
/// only up to the character `λ(p,q) = (−1)^{p+q}`, so the trace
/// functional kills `a ⋆ x − λ(x) (S^{−1}x) ⋆ a`.  For `x = (1,1)`
/// (`λ = +1`) this is relation (d) exactly as displayed; for
/// `x = (0,1)` (`λ = −1`) it is relation (c) with a global minus sign
/// on the right-hand side, written (c′) below; and the monodromy slide
/// becomes `(p,q) = (−1)^{p+q} (q,−p)`.
fn rewrite_once_s(label: &CurveLabel) -> (&'static str, Vec<(CurveLabel, RatFunc)>) {
    let (p, q) = label.pair();
    debug_assert!(!is_basis_label_s(label));
    if p <= 0 && q >= 1 {
        // Slide (p,q) = (−1)^{p+q} (−q,p), normalized to (q,−p) in the
        // closed first quadrant.
        let c = if (p + q).rem_euclid(2) == 0 { RatFunc::one() } else { mono_neg(0) };
        return ("slide-s", alloc::vec![(CurveLabel::new(q, -p), c)]);
    }
    debug_assert!(p >= 1 && q >= 0);
    if q == 0 {
        // (p,0), p ≥ 2: relation (c′) at (p−1, 0):
        // (p,0) = −A^{p−1}(p−1,1) − A^{1−p}(p−1,−1) − (p−2,0).
        debug_assert!(p >= 2);
        return (
            "relC-axis",
            alloc::vec![
                (CurveLabel::new(p - 1, 1), mono_neg(p - 1)),
                (CurveLabel::new(p - 1, -1), mono_neg(1 - p)),
                (CurveLabel::new(p - 2, 0), mono_neg(0)),
            ],
        );
    }
    if q == 1 {
        // (p,1), p ≥ 2: relation (c′) at (p−1, 1):
        // (p,1) = −A^{p−2}(p−1,2) − A^{−p}(p−1,0) − A^{−2}(p−2,1).
        debug_assert!(p >= 2);
        return (
            "relC-right",
            alloc::vec![
                (CurveLabel::new(p - 1, 2), mono_neg(p - 2)),
                (CurveLabel::new(p - 1, 0), mono_neg(-p)),
                (CurveLabel::new(p - 2, 1), mono_neg(-2)),
            ],
        );
    }
    if p == 1 {
        // (1,q), q ≥ 3: relation (c′) at (1, q−1):
        // (1,q) = −A^{−q}(0,q−1) − A^{q−2}(2,q−1) − A^{−2}(1,q−2).
        debug_assert!(q >= 3);
        return (
            "relC-descent",
            alloc::vec![
                (CurveLabel::new(0, q - 1), mono_neg(-q)),
                (CurveLabel::new(2, q - 1), mono_neg(q - 2)),
                (CurveLabel::new(1, q - 2), mono_neg(-2)),
            ],
        );
    }
    // (p,q), p ≥ 2, q ≥ 2: relation (d) at (p−1, q−1):
    // (p,q) = A^{2−2p}(p−2,q) + A^{2q−2}(p,q−2) − A^{2(q−p)}(p−2,q−2).
    (
        "relD-descent",
        alloc::vec![
            (CurveLabel::new(p - 2, q), mono(2 - 2 * p)),
            (CurveLabel::new(p, q - 2), mono(2 * q - 2)),
            (CurveLabel::new(p - 2, q - 2), mono_neg(2 * (q - p))),
        ],
    )
}

/// Check that every label of an expansion lies in the same grading
/// class as the target (a structural invariant of all relations).
fn check_grading_k(
    target: &CurveLabel,
    expansion: &[(CurveLabel, RatFunc)],
    k: u64,
) -> Result<()> {
    let g = grading(target, k)?;
    for (l, _) in expansion {
        if grading(l, k)? != g {
            return Err(Error::Domain("rewrite left the H1(M_k; Z/2) grading class"));
        }
    }
    Ok(())
}

fn check_grading_s(target: &CurveLabel, expansion: &[(CurveLabel, RatFunc)]) -> Result<()> {
    let g = grading_s(target);
    for (l, _) in expansion {
        if grading_s(l) != g {
            return Err(Error::Domain("rewrite left the H1(M_S; Z/2) grading class"));
        }
    }
    Ok(())
}

const FUEL: u64 = 1_000_000;

fn reduce_with<F>(input: FracSkein, is_basis: impl Fn(&CurveLabel) -> bool, mut rewrite: F) -> Result<Reduction>
where
    F: FnMut(&CurveLabel) -> Result<(&'static str, Vec<(CurveLabel, RatFunc)>)>,
{
    let mut work = input;
    let mut steps = Vec::new();
    let mut fuel = FUEL;
    loop {
        // Deterministic target selection: the non-basis label maximal
        // in (q, |p|, p).
        let target = work
            .terms
            .keys()
            .filter(|l| !is_basis(l))
            .max_by_key(|l| (l.q(), l.p().abs(), l.p()))
            .copied();
        let Some(target) = target else { break };
        let carried = work.terms.remove(&target).expect("target present");
        if carried.is_zero() {
            continue;
        }
        if fuel == 0 {
            return Err(Error::Domain("reduction fuel exhausted (non-terminating rewrite?)"));
        }
        fuel -= 1;
        let (rule, expansion) = rewrite(&target)?;
        for (l, c) in &expansion {
            work.add_term(*l, carried.mul(c));
        }
        steps.push(RewriteStep { rule, target, carried, expansion });
    }
    Ok(Reduction { result: work, steps })
}

/// Reduce a skein vector onto the `K_A(M_k)` basis (`k ≥ 1`).
pub fn reduce_horizontal_k(v: &SkeinVector, k: u64) -> Result<Reduction> {
    if k == 0 {
        return Err(Error::Domain("reduction requires k >= 1"));
    }
    reduce_with(FracSkein::from_vector(v), |l| is_basis_label_k(l, k), |l| {
        let (rule, exp) = rewrite_once_k(l, k)?;
        check_grading_k(l, &exp, k)?;
        Ok((rule, exp))
    })
}

/// Reduce a skein vector onto the `K_A(M_S)` basis.
pub fn reduce_horizontal_s(v: &SkeinVector) -> Result<Reduction> {
    reduce_with(FracSkein::from_vector(v), is_basis_label_s, |l| {
        let (rule, exp) = rewrite_once_s(l);
        check_grading_s(l, &exp)?;
        Ok((rule, exp))
    })
}

fn verify_reduction_with<F>(
    v: &SkeinVector,
    reduction: &Reduction,
    is_basis: impl Fn(&CurveLabel) -> bool,
    mut rewrite: F,
) -> Result<()>
where
    F: FnMut(&CurveLabel) -> Result<(&'static str, Vec<(CurveLabel, RatFunc)>)>,
{
    let mut work = FracSkein::from_vector(v);
    for step in &reduction.steps {
        let carried = work
            .terms
            .remove(&step.target)
            .ok_or(Error::Domain("trace replay: target label absent"))?;
        if !carried.equals(&step.carried) {
            return Err(Error::Domain("trace replay: carried coefficient mismatch"));
        }
        // Recompute the expansion independently and compare.
        let (rule, expansion) = rewrite(&step.target)?;
        if rule != step.rule || expansion.len() != step.expansion.len() {
            return Err(Error::Domain("trace replay: rule mismatch"));
        }
        for ((l1, c1), (l2, c2)) in expansion.iter().zip(&step.expansion) {
            if l1 != l2 || !c1.equals(c2) {
                return Err(Error::Domain("trace replay: expansion mismatch"));
            }
        }
        for (l, c) in &expansion {
            work.add_term(*l, carried.mul(c));
        }
    }
    for l in work.labels() {
        if !is_basis(&l) && !work.coeff(&l).is_zero() {
            return Err(Error::Domain("trace replay: non-basis label survives"));
        }
    }
    if !work.equals(&reduction.result) {
        return Err(Error::Domain("trace replay: final vector mismatch"));
    }
    Ok(())
}

/// Replay a recorded `M_k` reduction trace against the original
/// vector, recomputing each rule application and checking the final
/// result exactly.
pub fn verify_reduction_k(v: &SkeinVector, reduction: &Reduction, k: u64) -> Result<()> {
    verify_reduction_with(v, reduction, |l| is_basis_label_k(l, k), |l| rewrite_once_k(l, k))
}

/// Replay a recorded `M_S` reduction trace (see [`verify_reduction_k`]).
pub fn verify_reduction_s(v: &SkeinVector, reduction: &Reduction) -> Result<()> {
    verify_reduction_with(v, reduction, is_basis_label_s, |l| Ok(rewrite_once_s(l)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::laurent::Coeff;

    fn reduce_label_k(p: i64, q: i64, k: u64) -> Reduction {
        reduce_horizontal_k(&SkeinVector::from_label(CurveLabel::new(p, q)), k).unwrap()
    }

    #[test]
    fn basis_counts_match_kinnear_dimension() {
        // dim K_A(M_k) = (k−1)/2 + 4 for odd k, k/2 + 5 for even k.
        for k in 1..=12u64 {
            let expect = if k % 2 == 1 { (k - 1) / 2 + 4 } else { k / 2 + 5 };
            assert_eq!(basis_k(k).len() as u64, expect, "k={k}");
        }
        assert_eq!(basis_s().len(), 4);
    }

    #[test]
    fn spec_reduction_examples() {
        // (3,1) for k = 3 reduces to (0,1) (translate then nothing).
        let red = reduce_label_k(3, 1, 3);
        assert_eq!(red.result.labels(), alloc::vec![CurveLabel::new(0, 1)]);
        assert!(red.result.coeff(&CurveLabel::new(0, 1)).equals(&RatFunc::one()));

        // Basis labels are fixed points.
        for k in [2u64, 3, 4, 5, 8] {
            for b in basis_k(k) {
                let red = reduce_horizontal_k(&SkeinVector::from_label(b), k).unwrap();
                assert!(red.steps.is_empty(), "basis label {b} moved for k={k}");
                assert!(red.result.coeff(&b).equals(&RatFunc::one()));
            }
        }

        // (0,4) for k = 4 is an exact monomial multiple of (0,2):
        // a single even descent q=4→2 with q0 = 3 gives A^{4·3}(0,2)
        // (spec §skein example, with the coefficient produced by the
        // trace-consistent orientation (b′); validated against the RT
        // oracle in tqft::rt::tests::reduction_preserves_rt_trace).
        let red = reduce_label_k(0, 4, 4);
        assert_eq!(red.result.labels(), alloc::vec![CurveLabel::new(0, 2)]);
        assert!(red.result.coeff(&CurveLabel::new(0, 2)).equals(&RatFunc::power(12)));
    }

    #[test]
    fn odd_k_11_rule() {
        let red = reduce_label_k(1, 1, 3);
        assert_eq!(red.result.labels(), alloc::vec![CurveLabel::new(0, 1)]);
        assert!(red.result.coeff(&CurveLabel::new(0, 1)).equals(&RatFunc::one()));
        // For even k, (1,1) is basis.
        let red = reduce_label_k(1, 1, 4);
        assert!(red.steps.is_empty());
    }

    #[test]
    fn traces_replay() {
        for k in [2u64, 3, 4, 5, 8] {
            for (p, q) in [(5, 0), (3, 3), (-2, 5), (1, 6), (4, 1), (0, 7), (7, 2)] {
                let mut v = SkeinVector::from_label(CurveLabel::new(p, q));
                v.add_term(
                    CurveLabel::new(1, 2),
                    LaurentPolynomial::monomial(3, Coeff::new(1, 2)),
                );
                let red = reduce_horizontal_k(&v, k).unwrap();
                verify_reduction_k(&v, &red, k).unwrap();
                for l in red.result.labels() {
                    assert!(is_basis_label_k(&l, k), "k={k} ({p},{q}): {l} not basis");
                }
            }
        }
    }

    #[test]
    fn s_reduction_terminates_and_replays() {
        for p in -9..=9i64 {
            for q in -9..=9i64 {
                let v = SkeinVector::from_label(CurveLabel::new(p, q));
                let red = reduce_horizontal_s(&v).unwrap();
                verify_reduction_s(&v, &red).unwrap();
                for l in red.result.labels() {
                    assert!(is_basis_label_s(&l), "({p},{q}) → {l}");
                    // All S-coefficients stay monomial-ish Laurent.
                    assert!(red.result.coeff(&l).is_polynomial(), "({p},{q}) → {l}");
                }
            }
        }
    }

    #[test]
    fn s_reduction_corollary_sym() {
        // Trace-true forms of the Corollary "Sym" computations:
        // (0,1) = −(1,0) (slide, p+q odd) and (−1,1) = +(1,1) (slide,
        // p+q even).  The paper displays both with coefficient +1; the
        // signs here are the ones validated by the RT-trace oracle in
        // tqft::rt::tests::s_reduction_preserves_rt_trace.
        let minus_one = RatFunc::from_laurent(LaurentPolynomial::constant(-1));
        let red = reduce_horizontal_s(&SkeinVector::from_label(CurveLabel::new(0, 1))).unwrap();
        assert!(red.result.coeff(&CurveLabel::new(1, 0)).equals(&minus_one));
        assert_eq!(red.result.term_count(), 1);
        let red = reduce_horizontal_s(&SkeinVector::from_label(CurveLabel::new(-1, 1))).unwrap();
        assert!(red.result.coeff(&CurveLabel::new(1, 1)).equals(&RatFunc::one()));
        assert_eq!(red.result.term_count(), 1);
        // (2,1) = −(1,2) − A^{−2}(1,0) − A^{−2}(0,1), and (0,1)=−(1,0):
        // net −(1,2) + (A^{−2}−A^{−2})(1,0) = −(1,2).
        let red = reduce_horizontal_s(&SkeinVector::from_label(CurveLabel::new(2, 1))).unwrap();
        assert!(red.result.coeff(&CurveLabel::new(1, 2)).equals(&minus_one));
        assert_eq!(red.result.term_count(), 1, "{}", red.result);
    }

    #[test]
    fn all_descents_are_polynomial() {
        // The divided relations all divide exactly: no reduced
        // coefficient is a proper fraction, for any parity of k.
        for k in [2u64, 3, 4, 5, 7, 8] {
            for (p, q) in [(0, 6), (1, 5), (3, 4), (-2, 7), (0, 9), (1, 8)] {
                let v = SkeinVector::from_label(CurveLabel::new(p, q));
                let red = reduce_horizontal_k(&v, k).unwrap();
                for l in red.result.labels() {
                    assert!(
                        red.result.coeff(&l).is_polynomial(),
                        "k={k} ({p},{q}) coeff at {l} not polynomial"
                    );
                }
            }
        }
    }

    #[test]
    fn odd_k_descent_flips_parity() {
        // (0,3) for k = 3: step 3 gives A^{6}(1,1), then (1,1)=(0,1):
        // net A^{6}(0,1).
        let red = reduce_label_k(0, 3, 3);
        assert_eq!(red.result.labels(), alloc::vec![CurveLabel::new(0, 1)]);
        assert!(red.result.coeff(&CurveLabel::new(0, 1)).equals(&RatFunc::power(6)));
    }

    #[test]
    fn degenerate_divisor_unreachable_in_range() {
        // The guard exists but no admissible (k, p, q) triggers it:
        // sweep a wide range and expect no DegenerateDivisor errors.
        for k in 1..=12u64 {
            for p in -8..=8i64 {
                for q in -8..=8i64 {
                    let v = SkeinVector::from_label(CurveLabel::new(p, q));
                    match reduce_horizontal_k(&v, k) {
                        Ok(_) => {}
                        Err(Error::DegenerateDivisor { .. }) => {
                            panic!("degenerate divisor fired at k={k} ({p},{q})")
                        }
                        Err(e) => panic!("unexpected error {e} at k={k} ({p},{q})"),
                    }
                }
            }
        }
    }
}
