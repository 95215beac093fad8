//! The Kauffman bracket skein algebra of the torus (Frohman–Gelca
//! basis) and the horizontal reduction onto the finite bases of the
//! mapping-torus skein modules `K_A(M_k)` and `K_A(M_S)`.

mod label;
mod laurent;
mod ratfunc;
mod reduce;
mod vector;

pub use label::{grading, grading_s, CurveLabel, Hom2Class};
pub use laurent::{Coeff, LaurentPolynomial};
pub use ratfunc::RatFunc;
pub use reduce::{
    basis_k, basis_s, is_basis_label_k, is_basis_label_s, reduce_horizontal_k,
    reduce_horizontal_s, verify_reduction_k, verify_reduction_s, FracSkein, Reduction,
    RewriteStep,
};
pub use vector::{chebyshev_s, chebyshev_t, product_to_sum, SkeinVector};
