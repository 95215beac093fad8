//! Complex singular value decomposition by one-sided Jacobi rotations.
//!
//! Rank estimation only needs singular values and **right** singular
//! vectors of modest dense matrices (at most a few hundred rows and
//! columns), so a dependency-free one-sided Jacobi is both adequate and
//! simple to audit.  The method maintains `B = A·V` with `V` unitary and
//! rotates column pairs of `B` (and `V` identically) until all columns are
//! numerically orthogonal; then `σ_i = ‖b_i‖` and `A v_i = σ_i u_i`.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Relative off-diagonal tolerance for convergence.
const JACOBI_TOL: f64 = 1e-13;
/// Hard sweep cap (typical matrices converge in < 15 sweeps).
const MAX_SWEEPS: usize = 60;
/// Columns whose norm falls below this multiple of the largest column norm
/// are deflated to exact zero at the start of each sweep.  Such columns are
/// rotation residue (roundoff left over after a dependent column was
/// annihilated); their direction is correlated noise, so their Gram angles
/// against other residue columns stay O(1) and the sweep would never
/// converge — magnitudes just decay until `0/0` turns the iteration to NaN.
const FLUSH_TOL: f64 = 1e-14;

/// Singular values (descending) with matching right singular vectors.
#[derive(Clone, Debug)]
pub struct Svd {
    /// Singular values, sorted descending.
    pub sigma: Vec<f64>,
    /// `v[i]` is the right singular vector for `sigma[i]` (length = number
    /// of columns of the input).
    pub v: Vec<Vec<Complex64>>,
}

impl Svd {
    /// Largest singular value (0 for an empty decomposition).
    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    /// Smallest singular value (0 for an empty decomposition).
    pub fn sigma_min(&self) -> f64 {
        self.sigma.last().copied().unwrap_or(0.0)
    }
}

/// Matrix–vector product for a matrix given by its columns.
pub fn apply_columns(cols: &[Vec<Complex64>], x: &[Complex64]) -> Vec<Complex64> {
    let rows = cols.first().map_or(0, Vec::len);
    let mut out = vec![Complex64::new(0.0, 0.0); rows];
    for (col, &c) in cols.iter().zip(x) {
        for (o, &b) in out.iter_mut().zip(col) {
            *o += c * b;
        }
    }
    out
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(x: &[Complex64]) -> f64 {
    libm::sqrt(x.iter().map(|c| c.norm_sqr()).sum())
}

/// SVD of the matrix whose columns are `a` (all of equal length).
///
/// Singular values smaller than [`FLUSH_TOL`] times the largest are
/// deflated to exactly `0.0` (their right singular vectors still span the
/// numerical null space); callers only distinguish ratios down to
/// `DELTA_FIT`/`DELTA_RES`, far above the flush level.
pub fn svd_columns(a: &[Vec<Complex64>]) -> Svd {
    let n = a.len();
    if n == 0 {
        return Svd { sigma: Vec::new(), v: Vec::new() };
    }
    let rows = a[0].len();
    debug_assert!(a.iter().all(|c| c.len() == rows));
    let mut b: Vec<Vec<Complex64>> = a.to_vec();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            let mut col = vec![Complex64::new(0.0, 0.0); n];
            col[i] = Complex64::new(1.0, 0.0);
            col
        })
        .collect();

    for _sweep in 0..MAX_SWEEPS {
        let flush = b.iter().map(|c| vec_norm(c)).fold(0.0f64, f64::max) * FLUSH_TOL;
        for col in b.iter_mut() {
            if vec_norm(col) < flush {
                col.fill(Complex64::new(0.0, 0.0));
            }
        }
        let mut max_off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                let mut alpha = 0.0f64;
                let mut beta = 0.0f64;
                let mut gamma = Complex64::new(0.0, 0.0);
                for k in 0..rows {
                    alpha += b[i][k].norm_sqr();
                    beta += b[j][k].norm_sqr();
                    gamma += b[i][k].conj() * b[j][k];
                }
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let gn = gamma.norm();
                if gn == 0.0 {
                    continue;
                }
                let rel = gn / (libm::sqrt(alpha) * libm::sqrt(beta));
                if rel > max_off {
                    max_off = rel;
                }
                if rel <= JACOBI_TOL {
                    continue;
                }
                // Unitary 2x2 rotation zeroing the (i,j) Gram entry:
                //   new b_i = c·b_i − s·e^{−iφ}·b_j
                //   new b_j = s·e^{+iφ}·b_i + c·b_j
                // with e^{iφ} = γ/|γ| and the classical tangent formula.
                let phase = gamma / gn;
                let zeta = (beta - alpha) / (2.0 * gn);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + libm::sqrt(1.0 + zeta * zeta))
                } else {
                    -1.0 / (-zeta + libm::sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                let pc = phase.conj();
                for k in 0..rows {
                    let bi = b[i][k];
                    let bj = b[j][k];
                    b[i][k] = bi * c - bj * pc * s;
                    b[j][k] = bi * phase * s + bj * c;
                }
                for k in 0..n {
                    let vi = v[i][k];
                    let vj = v[j][k];
                    v[i][k] = vi * c - vj * pc * s;
                    v[j][k] = vi * phase * s + vj * c;
                }
            }
        }
        if max_off <= JACOBI_TOL {
            break;
        }
    }

    let sig: Vec<f64> = b.iter().map(|col| vec_norm(col)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| sig[y].partial_cmp(&sig[x]).expect("norms are finite"));
    Svd {
        sigma: order.iter().map(|&i| sig[i]).collect(),
        v: order.iter().map(|&i| core::mem::take(&mut v[i])).collect(),
    }
}
