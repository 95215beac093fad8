//! Reshetikhin–Turaev TQFT at even roots of unity (§3 and the appendices).
//!
//! * [`fold`] — the folded torus basis `{e_1, …, e_dim}` at `ξ` of even
//!   order `2r`, with the index-folding relations;
//! * [`operator`] — dense complex operators on that basis, with an exact
//!   diagonal fast path for twist powers;
//! * [`rt`] — the curve action `Z((p,q)_T)`, monodromy matrices `ρ(B_k)`,
//!   `ρ(S)`, the Appendix A general formula, trace invariants of the mapping
//!   tori `M_k` and `M_S`, and the paper's closed evaluation forms.

pub mod fold;
pub mod operator;
pub mod rt;

pub use fold::{fold_index, BasisSpec, FoldResult};
pub use operator::{ExactDiagonal, TQFTOperator};
pub use rt::{
    ev_closed_pq, ev_s_paper_formula, rho_bk, rho_general, rt_closed_tl, rt_invariant_s,
    rt_invariant_s_frac, rt_invariant_trace, rt_invariant_trace_frac, z_curve, z_frac, z_vector,
};
