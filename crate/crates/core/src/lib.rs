//! Exact computational companion to the skein-algebra / Reshetikhin–Turaev
//! analysis of torus mapping tori.
//!
//! The crate mirrors the paper's pipeline module by module:
//!
//! * [`numth`] — modular arithmetic, canonical roots of unity, exact
//!   cyclotomic group-ring arithmetic (`Z[ζ_n]`), and the square-class
//!   combinatorics behind the dimension formulas.
//! * [`gauss`] — generalized quadratic Gauss sums `G(a,b,ξ)`: brute-force
//!   evaluation into the group ring, the five-case closed form of Lemma
//!   "CalculGauss", and the identities among them.
//! * [`skein`] — the Kauffman bracket skein algebra of the torus over
//!   `Q[A,A⁻¹]` in the Frohman–Gelca `(p,q)_T` basis, and the rewriting
//!   systems reducing horizontal skeins to the paper's bases for the
//!   mapping tori `M_k` and `M_S`.
//! * [`tqft`] — the torus TQFT representation at primitive even-order
//!   roots of unity: folded basis, multicurve operators, trace invariants,
//!   and the general-monodromy matrices of Appendix A.
//! * [`analysis`] — the sampled evaluation map, Q(A)-rank estimation, and
//!   the dimension / injectivity reports of Theorems 1.1, 1.7 and 1.8.
//!
//! All core arithmetic is exact (integers, rationals, cyclotomic integers);
//! floating point only enters through the complex embedding used for
//! cross-checks and rank estimation, and every floating-point relation that
//! feeds a verdict is re-verified exactly.
//!
//! The crate is `no_std` + `alloc`: it performs no I/O and allocates only
//! through `alloc`, so it can be embedded anywhere a heap exists.

#![cfg_attr(not(test), no_std)]
#![deny(missing_docs)]

extern crate alloc;

use core::fmt;

pub mod analysis;
pub mod gauss;
pub mod numth;
pub mod skein;
pub mod tqft;

/// Errors shared across the crate.
///
/// Every operation with a documented precondition reports its violation
/// through one of these variants instead of panicking, so callers (in
/// particular the CLI) can map them to diagnostics and exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `mod_inverse`/`inverse_witness` style preconditions: the two stated
    /// integers are required to be coprime but are not.
    NotCoprime(i64, i64),
    /// A root of unity of even order was required (e.g. by `negate_root`
    /// or a TQFT basis), but the given order is odd.
    OddOrder(u64),
    /// A TQFT operation restricted to odd `r` (Appendix A) received an
    /// even `r`.
    EvenR(u64),
    /// Group-ring binary operation on mismatched orders without promotion.
    OrderMismatch(u64, u64),
    /// The closed-form Gauss lemma is stated for an even linear coefficient.
    OddLinearCoefficient(i64),
    /// `ev_closed_pq` requires `r > 2|q|` ("r big enough" in the paper).
    RTooSmall {
        /// The half-order `r` of the root.
        r: u64,
        /// The minimal admissible half-order for the requested curve.
        needed: u64,
    },
    /// A divisor that the reduction proof guarantees nonzero vanished.
    /// Carries the offending `(p, q)` label for diagnostics.
    DegenerateDivisor {
        /// Meridian coordinate of the label being rewritten.
        p: i64,
        /// Longitude coordinate of the label being rewritten.
        q: i64,
    },
    /// A precondition expressed as a divisibility constraint failed
    /// (e.g. `d | k` in the square-class lemmas, or `k ≡ 0 mod 4`).
    Divisibility(&'static str),
    /// An input parameter was outside its documented domain.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotCoprime(a, r) => write!(f, "{a} and {r} are not coprime"),
            Error::OddOrder(n) => write!(f, "root order {n} must be even"),
            Error::EvenR(r) => write!(f, "half-order r = {r} must be odd here"),
            Error::OrderMismatch(a, b) => {
                write!(f, "group-ring orders {a} and {b} differ (promote first)")
            }
            Error::OddLinearCoefficient(b) => {
                write!(f, "closed form needs an even linear coefficient, got {b}")
            }
            Error::RTooSmall { r, needed } => {
                write!(f, "half-order r = {r} too small, need r >= {needed}")
            }
            Error::DegenerateDivisor { p, q } => {
                write!(f, "degenerate divisor while rewriting ({p},{q})_T")
            }
            Error::Divisibility(msg) => write!(f, "divisibility precondition failed: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Default absolute tolerance for complex comparisons (see spec: all
/// complex comparisons use 1e-8 unless a module overrides it).
pub const TOL: f64 = 1e-8;
