//! Modular arithmetic, canonical roots of unity, exact cyclotomic
//! group-ring arithmetic, and square-class combinatorics.
//!
//! Everything downstream (Gauss sums, TQFT phases, dimension formulas)
//! reduces to the primitives in this module, so all of them are exact:
//! integers, `Z[ζ_n]` elements, and canonical `(s, n)` root labels.
//! Floating point appears only in the complex embeddings.

mod groupring;
mod modular;
mod roots;
mod squares;

pub use groupring::{cyclotomic_polynomial, GroupRingElement};
pub use modular::{divisors, factorize, gcd_i64, gcd_u64, inverse_witness, mod_inverse, mod_reduce};
pub use roots::{negate_root, RootOfUnity};
pub use squares::{
    invertible_squares, sum_squares_over_divisors, theorem_1_8_value, SquareClassTable,
};
