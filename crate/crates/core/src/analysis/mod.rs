//! `Q(A)`-dimension estimation and the injectivity analysis
//! (Theorems 1.1, 1.7 and 1.8).
//!
//! The pipeline: [`grid`] supplies deterministic families of roots of
//! unity; [`svd`] provides a dependency-free one-sided Jacobi SVD over
//! `C`; [`rank`] turns sampled generators into Laurent-window rank
//! estimates with an exact/numeric relation ledger; [`dims`] assembles
//! the paper-level reports (`dim 𝒢_k`, evaluation-image dimension, `ν`
//! independence, injectivity verdicts); [`checks`] holds the standalone
//! identities (mod-4 colinearity, `M_S` colinearity, the Theorem 1.1
//! counting inequality).

pub mod checks;
pub mod dims;
pub mod grid;
pub mod rank;
pub mod svd;

pub use checks::{
    colinearity_mod4, inequality_check, inequality_describe, inequality_sides, s_colinearity,
    SColinearityReport,
};
pub use dims::{
    classes_of, dim_gk, direct_sum_check, image_dimension, injectivity_verdict,
    kinnear_dimension, nu_independence, ClassKey, DimReport, DimVerdict, GroupReport,
    ImageReport, InjectivityReport, InjectivityVerdict, NuReport,
};
pub use grid::{SampleGrid, Variable};
pub use rank::{
    qa_rank, sample_ev, GeneratorId, NumericEvidence, RankInput, RankReport, RelationRecord,
    RelationVerdict, SampledGenerator, DELTA_FIT, DELTA_RES,
};
pub use svd::{svd_columns, Svd};
