//! Greedy estimation of `Q(A)`-dimension from sampled generators.
//!
//! A family of functions `f_1, …, f_g` on roots of unity is modelled as
//! spanning a `Q(A)`-vector space: a linear relation is
//! `Σ_j p_j(z) f_j(z) = 0` with Laurent-polynomial coefficients `p_j` of
//! degree window `[-D, D]`.  On a finite grid this becomes an ordinary
//! complex linear dependence among the `(2D+1)·g` stacked columns
//! `z^e f_j(z)`, detected by SVD.
//!
//! Numerics alone cannot certify a relation, so every candidate is tiered:
//!
//! * [`RelationVerdict::Exact`] — verified symbolically upstream (group-ring
//!   identity); these arrive as `prior_relations` together with the removal
//!   of one generator each.
//! * [`RelationVerdict::ExtendedNumeric`] — the fit-grid null vector also
//!   annihilates the holdout grid **and** an independent validation grid
//!   three times the fit size; counted.
//! * [`RelationVerdict::Unverified`] — failed re-validation; recorded for
//!   diagnostics but **not** counted, and the generator is kept.
//!
//! Per-generator column blocks are scaled to unit max magnitude on the fit
//! grid, and those same scales are reused on the holdout and validation
//! grids — recomputing scales per grid silently breaks residual tests when
//! generator magnitudes grow with the order (e.g. `√c` Gauss blocks against
//! the constant `ν` block).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use super::grid::{SampleGrid, Variable};
use super::svd::{apply_columns, svd_columns, vec_norm};
use crate::skein::{CurveLabel, SkeinVector};
use crate::tqft::rt_invariant_trace;
use crate::{Error, Result};

/// Fit-grid dependence threshold: `σ_min < 1e-6 · σ_max`.
pub const DELTA_FIT: f64 = 1e-6;
/// Holdout/validation residual threshold: `‖Mv‖/σ_max(M) < 1e-9`.
pub const DELTA_RES: f64 = 1e-9;

/// Identifies a generator function in rank reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorId {
    /// Gauss-sum generator `G(k, 2l, ·)` of the span `𝒢_k`.
    Gauss {
        /// Quadratic coefficient (the monodromy parameter).
        k: i64,
        /// Generator index `l` (linear coefficient `2l`).
        l: i64,
    },
    /// Evaluation generator `ev((p,q)_T)` of the `M_k` image analysis.
    Ev {
        /// Monodromy parameter.
        k: i64,
        /// Meridian coordinate of the curve label.
        p: i64,
        /// Longitude coordinate of the curve label.
        q: i64,
    },
    /// The `ν` function: 1 at odd orders, 2 on `𝕌₀`.
    Nu,
    /// Ad-hoc named generator (tests, CLI experiments).
    Named(&'static str),
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::Gauss { k, l } => write!(f, "G({k},{},·)", 2 * l),
            GeneratorId::Ev { k, p, q } => write!(f, "ev_{k}(({p},{q})_T)"),
            GeneratorId::Nu => write!(f, "nu"),
            GeneratorId::Named(n) => write!(f, "{n}"),
        }
    }
}

/// One generator sampled on the fit, holdout, and validation grids.
#[derive(Clone, Debug)]
pub struct SampledGenerator {
    /// Who this is.
    pub id: GeneratorId,
    /// Values on the fit grid.
    pub fit: Vec<Complex64>,
    /// Values on the holdout grid.
    pub hold: Vec<Complex64>,
    /// Values on the validation grid (≈ 3× the fit size).
    pub validate: Vec<Complex64>,
}

/// Confirmation tier of a recorded relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationVerdict {
    /// Verified exactly (group-ring identity); counted.
    Exact,
    /// Confirmed on holdout and the 3× validation grid; counted.
    ExtendedNumeric,
    /// Failed re-validation; diagnostics only, not counted.
    Unverified,
}

/// Numeric residuals backing a numerically discovered relation.
#[derive(Clone, Copy, Debug)]
pub struct NumericEvidence {
    /// `σ_min/σ_max` of the fit stack.
    pub fit_sigma_ratio: f64,
    /// `‖H v_min‖ / σ_max(H)` on the holdout stack.
    pub holdout_residual: f64,
    /// `‖V v_min‖ / σ_max(V)` on the validation stack.
    pub validation_residual: f64,
}

/// One linear relation among generators over Laurent windows.
#[derive(Clone, Debug)]
pub struct RelationRecord {
    /// The generators participating in the relation.
    pub members: Vec<GeneratorId>,
    /// Confirmation tier.
    pub verdict: RelationVerdict,
    /// Human-readable provenance (identity used, or numeric note).
    pub description: String,
    /// Residuals when the relation was found numerically.
    pub numeric: Option<NumericEvidence>,
}

impl RelationRecord {
    /// An exactly verified relation established upstream.
    pub fn exact(members: Vec<GeneratorId>, description: String) -> Self {
        RelationRecord { members, verdict: RelationVerdict::Exact, description, numeric: None }
    }

    /// Whether this relation reduces the rank estimate.
    pub fn counted(&self) -> bool {
        matches!(self.verdict, RelationVerdict::Exact | RelationVerdict::ExtendedNumeric)
    }
}

/// Result of a rank-estimation run.
#[derive(Clone, Debug)]
pub struct RankReport {
    /// Total generators before upstream exact reduction.
    pub raw_generators: usize,
    /// Generators actually presented to the numeric greedy.
    pub presented: Vec<GeneratorId>,
    /// Presented generators that survived the greedy.
    pub kept: Vec<GeneratorId>,
    /// All relations: upstream exact ones plus numeric discoveries.
    pub relations: Vec<RelationRecord>,
    /// `raw_generators − #counted relations` — the dimension estimate.
    pub estimated: usize,
    /// Laurent window degree used.
    pub degree: i64,
    /// Non-fatal numeric observations (ill-conditioning etc.).
    pub diagnostics: Vec<String>,
}

/// Input bundle for [`qa_rank`].
pub struct RankInput<'a> {
    /// Sampled generators, after any upstream exact reduction.
    pub generators: &'a [SampledGenerator],
    /// Stacking-variable values of the fit grid.
    pub fit_z: &'a [Complex64],
    /// Stacking-variable values of the holdout grid.
    pub hold_z: &'a [Complex64],
    /// Stacking-variable values of the validation grid.
    pub validate_z: &'a [Complex64],
    /// Laurent window degree `D`.
    pub degree: i64,
    /// Exact relations applied upstream; each must have removed exactly one
    /// generator from `generators`.
    pub prior_relations: Vec<RelationRecord>,
    /// Generator count before the upstream reduction.
    pub raw_count: usize,
}

/// Per-point powers `z^{-D} … z^{D}` (unit-circle points, so the inverse is
/// the conjugate).
struct PowerTable {
    pows: Vec<Vec<Complex64>>,
    width: usize,
}

impl PowerTable {
    fn new(z: &[Complex64], d: i64) -> Self {
        let dd = d as usize;
        let width = 2 * dd + 1;
        let pows = z
            .iter()
            .map(|&zi| {
                let mut row = vec![Complex64::new(1.0, 0.0); width];
                for e in 1..=dd {
                    row[dd + e] = row[dd + e - 1] * zi;
                    row[dd - e] = row[dd - e + 1] * zi.conj();
                }
                row
            })
            .collect();
        PowerTable { pows, width }
    }
}

#[derive(Clone, Copy)]
enum Select {
    Fit,
    Hold,
    Validate,
}

/// Build the stacked, block-normalized column matrix for the chosen grid.
/// Returns the columns and the per-generator scales used (computed from
/// this stack when `shared_scales` is `None`, else the given ones).
fn stack(
    gens: &[SampledGenerator],
    members: &[usize],
    select: Select,
    powers: &PowerTable,
    shared_scales: Option<&[f64]>,
) -> (Vec<Vec<Complex64>>, Vec<f64>) {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(members.len() * powers.width);
    let mut scales: Vec<f64> = Vec::with_capacity(members.len());
    for (mi, &gi) in members.iter().enumerate() {
        let vals = match select {
            Select::Fit => &gens[gi].fit,
            Select::Hold => &gens[gi].hold,
            Select::Validate => &gens[gi].validate,
        };
        let mut block: Vec<Vec<Complex64>> = (0..powers.width)
            .map(|e| vals.iter().enumerate().map(|(i, &v)| v * powers.pows[i][e]).collect())
            .collect();
        let scale = match shared_scales {
            Some(sc) => sc[mi],
            None => {
                let m = block
                    .iter()
                    .flat_map(|c| c.iter())
                    .map(|x: &Complex64| x.norm())
                    .fold(0.0f64, f64::max);
                if m > 0.0 {
                    m
                } else {
                    1.0
                }
            }
        };
        for col in &mut block {
            for x in col.iter_mut() {
                *x /= scale;
            }
        }
        scales.push(scale);
        cols.extend(block);
    }
    (cols, scales)
}

/// Greedy `Q(A)`-rank estimation with tiered relation verification.
///
/// Walks the generators in order; each new generator is tested for linear
/// dependence (over the `[-D, D]` Laurent window) on the already-kept ones
/// via the fit grid, re-tested on the holdout grid with the *fit* block
/// scales, and — when both confirm — re-validated on the 3× validation
/// grid to earn [`RelationVerdict::ExtendedNumeric`].  The estimate
/// satisfies `estimated = raw_count − #counted relations`, which equals the
/// number of kept generators when every prior relation removed one
/// generator (enforced).
pub fn qa_rank(input: RankInput<'_>) -> Result<RankReport> {
    let gens = input.generators;
    if input.degree < 0 {
        return Err(Error::Domain("Laurent window degree must be non-negative"));
    }
    let prior_counted = input.prior_relations.iter().filter(|r| r.counted()).count();
    if input.raw_count < gens.len() || input.raw_count - gens.len() != prior_counted {
        return Err(Error::Domain(
            "each counted prior relation must correspond to one removed generator",
        ));
    }
    for g in gens {
        if g.fit.len() != input.fit_z.len()
            || g.hold.len() != input.hold_z.len()
            || g.validate.len() != input.validate_z.len()
        {
            return Err(Error::Domain("generator sample length does not match its grid"));
        }
    }
    let p_fit = PowerTable::new(input.fit_z, input.degree);
    let p_hold = PowerTable::new(input.hold_z, input.degree);
    let p_val = PowerTable::new(input.validate_z, input.degree);

    let mut kept_idx: Vec<usize> = Vec::new();
    let mut relations = input.prior_relations;
    let mut diagnostics: Vec<String> = Vec::new();

    for (gi, g) in gens.iter().enumerate() {
        let mut cand = kept_idx.clone();
        cand.push(gi);
        let (fit_cols, scales) = stack(gens, &cand, Select::Fit, &p_fit, None);
        let dec = svd_columns(&fit_cols);
        let s0 = dec.sigma_max();
        if s0 == 0.0 {
            diagnostics.push(format!("{}: fit stack identically zero; generator kept", g.id));
            kept_idx.push(gi);
            continue;
        }
        let ratio = dec.sigma_min() / s0;
        if ratio >= DELTA_FIT {
            kept_idx.push(gi);
            continue;
        }
        let vmin = dec.v.last().expect("non-empty decomposition");
        let (h_cols, _) = stack(gens, &cand, Select::Hold, &p_hold, Some(&scales));
        let h0 = svd_columns(&h_cols).sigma_max();
        let hres = if h0 > 0.0 { vec_norm(&apply_columns(&h_cols, vmin)) / h0 } else { 0.0 };
        if hres >= DELTA_RES {
            diagnostics.push(format!(
                "{}: fit near-dependence (σ ratio {ratio:.3e}) rejected by holdout (residual {hres:.3e})",
                g.id
            ));
            kept_idx.push(gi);
            continue;
        }
        let (v_cols, _) = stack(gens, &cand, Select::Validate, &p_val, Some(&scales));
        let v0 = svd_columns(&v_cols).sigma_max();
        let vres = if v0 > 0.0 { vec_norm(&apply_columns(&v_cols, vmin)) / v0 } else { 0.0 };
        let verdict = if vres < DELTA_RES {
            RelationVerdict::ExtendedNumeric
        } else {
            RelationVerdict::Unverified
        };
        relations.push(RelationRecord {
            members: cand.iter().map(|&i| gens[i].id.clone()).collect(),
            verdict,
            description: format!("numeric dependence of {} on the kept generators", g.id),
            numeric: Some(NumericEvidence {
                fit_sigma_ratio: ratio,
                holdout_residual: hres,
                validation_residual: vres,
            }),
        });
        if verdict == RelationVerdict::Unverified {
            diagnostics.push(format!(
                "{}: dependence failed 3x validation (residual {vres:.3e}); generator kept",
                g.id
            ));
            kept_idx.push(gi);
        }
    }

    let counted = relations.iter().filter(|r| r.counted()).count();
    let estimated = input.raw_count - counted;
    debug_assert_eq!(estimated, kept_idx.len());
    Ok(RankReport {
        raw_generators: input.raw_count,
        presented: gens.iter().map(|g| g.id.clone()).collect(),
        kept: kept_idx.iter().map(|&i| gens[i].id.clone()).collect(),
        relations,
        estimated,
        degree: input.degree,
        diagnostics,
    })
}

/// Sample the honest trace evaluation `ev((p,q)_T)(ξ) = RT_ξ(M_k, (p,q)_T)`
/// on a [`Variable::Xi`] grid — the oracle rows against which the closed
/// forms used by the dimension analysis are cross-checked.
pub fn sample_ev(k: i64, p: i64, q: i64, grid: &SampleGrid) -> Result<Vec<Complex64>> {
    if grid.variable() != Variable::Xi {
        return Err(Error::Domain("sample_ev needs a Variable::Xi grid"));
    }
    let v = SkeinVector::from_label(CurveLabel::new(p, q));
    (0..grid.len()).map(|i| rt_invariant_trace(k, &v, &grid.xi_at(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::grid::SampleGrid;

    fn synth(id: &'static str, f: impl Fn(Complex64, u64) -> Complex64, grids: &[&SampleGrid; 3]) -> SampledGenerator {
        let sample = |g: &SampleGrid| -> Vec<Complex64> {
            (0..g.len()).map(|i| f(g.z(i), g.points()[i].order())).collect()
        };
        SampledGenerator {
            id: GeneratorId::Named(id),
            fit: sample(grids[0]),
            hold: sample(grids[1]),
            validate: sample(grids[2]),
        }
    }

    fn grids(n: usize) -> (SampleGrid, SampleGrid, SampleGrid) {
        (SampleGrid::odd(n, 41), SampleGrid::odd(n / 2 + 8, 211), SampleGrid::odd(3 * n, 401))
    }

    #[test]
    fn detects_monomial_multiple() {
        let (fit, hold, val) = grids(40);
        let gs = [&fit, &hold, &val];
        let sq = |_: Complex64, c: u64| Complex64::new(libm::sqrt(c as f64), 0.0);
        let f = synth("f", |z, c| sq(z, c) + z, &gs);
        // g = (2 − 3z²)·f — a window-2 Laurent multiple.
        let g = synth("g", |z, c| (Complex64::new(2.0, 0.0) - z * z * 3.0) * (sq(z, c) + z), &gs);
        let report = qa_rank(RankInput {
            generators: &[f, g],
            fit_z: &fit.z_values(),
            hold_z: &hold.z_values(),
            validate_z: &val.z_values(),
            degree: 3,
            prior_relations: Vec::new(),
            raw_count: 2,
        })
        .unwrap();
        assert_eq!(report.estimated, 1, "diagnostics: {:?}", report.diagnostics);
        assert_eq!(report.relations.len(), 1);
        assert_eq!(report.relations[0].verdict, RelationVerdict::ExtendedNumeric);
        let ev = report.relations[0].numeric.unwrap();
        assert!(ev.fit_sigma_ratio < DELTA_FIT && ev.validation_residual < DELTA_RES);
    }

    #[test]
    fn keeps_independent_generators() {
        let (fit, hold, val) = grids(40);
        let gs = [&fit, &hold, &val];
        // √c and log-like order-dependent values are not Laurent-related.
        let f = synth("sqrt", |_, c| Complex64::new(libm::sqrt(c as f64), 0.0), &gs);
        let g = synth("cbrt", |_, c| Complex64::new(libm::cbrt(c as f64), 1.0), &gs);
        let report = qa_rank(RankInput {
            generators: &[f, g],
            fit_z: &fit.z_values(),
            hold_z: &hold.z_values(),
            validate_z: &val.z_values(),
            degree: 2,
            prior_relations: Vec::new(),
            raw_count: 2,
        })
        .unwrap();
        assert_eq!(report.estimated, 2, "diagnostics: {:?}", report.diagnostics);
        assert!(report.relations.is_empty());
        assert_eq!(report.kept.len(), 2);
    }

    #[test]
    fn prior_relation_accounting() {
        let (fit, hold, val) = grids(30);
        let gs = [&fit, &hold, &val];
        let f = synth("kept", |_, c| Complex64::new(libm::sqrt(c as f64), 0.0), &gs);
        let prior = RelationRecord::exact(
            alloc::vec![GeneratorId::Named("kept"), GeneratorId::Named("dropped")],
            String::from("synthetic exact relation"),
        );
        let report = qa_rank(RankInput {
            generators: &[f],
            fit_z: &fit.z_values(),
            hold_z: &hold.z_values(),
            validate_z: &val.z_values(),
            degree: 2,
            prior_relations: alloc::vec![prior],
            raw_count: 2,
        })
        .unwrap();
        assert_eq!(report.estimated, 1);
        assert_eq!(report.raw_generators, 2);
        // Mis-declared accounting is rejected.
        let f2 = synth("kept", |_, c| Complex64::new(libm::sqrt(c as f64), 0.0), &gs);
        assert!(qa_rank(RankInput {
            generators: &[f2],
            fit_z: &fit.z_values(),
            hold_z: &hold.z_values(),
            validate_z: &val.z_values(),
            degree: 2,
            prior_relations: Vec::new(),
            raw_count: 2,
        })
        .is_err());
    }
}
