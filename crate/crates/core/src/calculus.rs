//! The fractional functional calculus
//! `θ_α(f) = ∑_{n≥0} W_+^α f(n)·Δ^{−α}𝒯(n)` on finitely supported sequences,
//! and the experiment drivers built on it: Katznelson–Tzafriri decay curves,
//! Cesàro mean differences, and growth rates of means and powers.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fracdiff::{weyl_plus_with, ZSeq};
use crate::kernels::{kernel_value, CesaroKernelTable};
use crate::operators::{
    operator_norm, peripheral_spectrum, window_trend, CMatrix, CesaroTransform,
};

/// Tolerance for classifying eigenvalues as unimodular.
pub const PERIPHERAL_TOL: f64 = 1e-6;

/// Sample points for decay curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grid {
    /// `0, 1, …, N`.
    Linear,
    /// `1, 2, 4, …` up to `N`.
    Dyadic,
}

impl Grid {
    pub fn points(self, n_max: usize) -> Vec<usize> {
        match self {
            Grid::Linear => (0..=n_max).collect(),
            Grid::Dyadic => std::iter::successors(Some(1usize), |n| n.checked_mul(2))
                .take_while(|&n| n <= n_max)
                .collect(),
        }
    }
}

/// Descriptive fields attached to a curve or report.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CurveMeta {
    pub fixture: String,
    pub alpha: f64,
    pub function: String,
    /// Unimodular eigenvalues of the matrix, as `[re, im]`.
    pub peripheral: Vec<[f64; 2]>,
    /// Whether the function vanishes on the peripheral spectrum (decay curves).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vanishes_on_peripheral: Option<bool>,
    /// Whether the peripheral spectrum lies in `{1}` (mean-difference curves).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peripheral_in_one: Option<bool>,
}

/// `(n, value)` rows with strictly increasing `n` and finite nonnegative values.
#[derive(Debug, Clone, Serialize)]
pub struct DecayCurve {
    pub rows: Vec<(usize, f64)>,
    pub meta: CurveMeta,
}

impl DecayCurve {
    pub fn new(rows: Vec<(usize, f64)>, meta: CurveMeta) -> Result<Self> {
        if rows.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::invalid(
                "curve rows must be strictly increasing in n",
            ));
        }
        if rows.iter().any(|r| !r.1.is_finite() || r.1 < 0.0) {
            return Err(Error::invalid(
                "curve values must be finite and nonnegative",
            ));
        }
        Ok(DecayCurve { rows, meta })
    }

    pub fn value_at(&self, n: usize) -> Option<f64> {
        self.rows
            .binary_search_by_key(&n, |r| r.0)
            .ok()
            .map(|i| self.rows[i].1)
    }

    pub fn values(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.1).collect()
    }

    /// `(lower_max, upper_max)` over the two halves of the grid.
    pub fn trend(&self) -> (f64, f64) {
        window_trend(&self.values())
    }
}

fn peripheral_points(t: &CMatrix) -> Result<Vec<Complex64>> {
    peripheral_spectrum(t, PERIPHERAL_TOL)
}

fn as_pairs(points: &[Complex64]) -> Vec<[f64; 2]> {
    points.iter().map(|z| [z.re, z.im]).collect()
}

fn require_prepared(ct: &CesaroTransform, n: usize) -> Result<()> {
    if n > ct.n_max() {
        return Err(Error::invalid(format!(
            "index {n} is beyond the prepared range 0..={}",
            ct.n_max()
        )));
    }
    Ok(())
}

/// `h_n^α(j) = k^α(n−j)` for `0 ≤ j ≤ n`; satisfies `W_+^α h_n^α = e_n`.
pub fn h_sequence(alpha: f64, n: usize) -> ZSeq {
    let k = CesaroKernelTable::new(alpha, n);
    ZSeq::from_real(0, &(0..=n).map(|j| k.get(n - j)).collect::<Vec<_>>())
}

/// `θ_α(f) = ∑_{n=0}^{b} W_+^α f(n)·Δ^{−α}𝒯(n)` for `f` supported in `[0, b]`.
pub fn functional_calculus(ct: &CesaroTransform, f: &ZSeq) -> Result<CMatrix> {
    let Some((lo, hi)) = f.support() else {
        return Ok(CMatrix::zeros(ct.dim()));
    };
    if lo < 0 {
        return Err(Error::invalid(format!(
            "functional calculus is defined on sequences supported in n >= 0, got support starting at {lo}"
        )));
    }
    require_prepared(ct, hi as usize)?;
    let neg_kernel = CesaroKernelTable::new(-ct.alpha(), hi as usize);
    let mut acc = CMatrix::zeros(ct.dim());
    for n in 0..=hi {
        let w = weyl_plus_with(f, &neg_kernel, n);
        if w != Complex64::new(0.0, 0.0) {
            acc.add_scaled(w, ct.sum(n as usize));
        }
    }
    Ok(acc)
}

/// `∑_j f(j) T^j` from the cached powers.
pub fn polynomial_in(ct: &CesaroTransform, f: &ZSeq) -> Result<CMatrix> {
    let mut acc = CMatrix::zeros(ct.dim());
    let Some((lo, hi)) = f.support() else {
        return Ok(acc);
    };
    if lo < 0 {
        return Err(Error::invalid(
            "polynomial needs a sequence supported in n >= 0",
        ));
    }
    require_prepared(ct, hi as usize)?;
    for (j, c) in f.iter() {
        acc.add_scaled(c, ct.power(j as usize));
    }
    Ok(acc)
}

/// `‖θ_α(f) − ∑_j f(j) T^j‖`.
pub fn calculus_consistency_residual(ct: &CesaroTransform, f: &ZSeq) -> Result<f64> {
    let theta = functional_calculus(ct, f)?;
    let poly = polynomial_in(ct, f)?;
    operator_norm(&(&theta - &poly))
}

/// `(λ − T)^{−1} ≈ ((λ−1)/λ)^α ∑_{n=0}^{N} λ^{−n−1} Δ^{−α}𝒯(n)` (principal branch).
///
/// `C = max_{n≤N} ‖Δ^{−α}𝒯(n)‖ / k^{α+1}(n)` is probed from the prepared sums
/// and the truncation is accepted only when
/// `|((λ−1)/λ)^α|·C·k^{α+1}(N)·|λ|^{−N}/(|λ|−1) ≤ tol`.
pub fn resolvent_series(
    ct: &CesaroTransform,
    lambda: Complex64,
    n_terms: usize,
    tol: f64,
) -> Result<CMatrix> {
    let r = lambda.norm();
    if !(r > 1.0) {
        return Err(Error::invalid(format!(
            "resolvent series needs |λ| > 1, got {r}"
        )));
    }
    require_prepared(ct, n_terms)?;
    let alpha = ct.alpha();
    let weights = CesaroKernelTable::new(alpha + 1.0, n_terms);
    let mut bound_const: f64 = 0.0;
    for n in 0..=n_terms {
        bound_const = bound_const.max(operator_norm(ct.sum(n))? / weights.get(n));
    }
    let prefactor = ((lambda - 1.0) / lambda).powf(alpha);
    let tail =
        |n: usize, k: f64| prefactor.norm() * bound_const * k * r.powi(-(n as i32)) / (r - 1.0);
    let bound = tail(n_terms, weights.get(n_terms));
    if bound > tol {
        // smallest N past the request whose bound meets the tolerance
        let mut k = weights.get(n_terms);
        let mut n = n_terms;
        let suggested = loop {
            k *= crate::kernels::recurrence_factor(alpha + 1.0, n);
            n += 1;
            if tail(n, k) <= tol || n > 10_000_000 {
                break n;
            }
        };
        return Err(Error::TailBound {
            terms: n_terms,
            bound,
            suggested,
        });
    }
    let mut acc = CMatrix::zeros(ct.dim());
    let inv = 1.0 / lambda;
    let mut pow = inv;
    for n in 0..=n_terms {
        acc.add_scaled(pow, ct.sum(n));
        pow *= inv;
    }
    Ok(acc.scale(prefactor))
}

/// `n ↦ ‖M_T^α(n)·θ_α(f)‖` over `grid`.
///
/// The hypothesis that `f` vanishes on the peripheral spectrum is checked and
/// recorded in the metadata, not enforced.
pub fn kt_decay_curve(ct: &CesaroTransform, f: &ZSeq, grid: &[usize]) -> Result<DecayCurve> {
    let theta = functional_calculus(ct, f)?;
    let peripheral = peripheral_points(ct.matrix())?;
    let poly = crate::algebras::PeriodicFn::new(f.clone());
    let vanishes = peripheral.iter().all(|&z| poly.eval_at(z).norm() <= 1e-8);
    let rows = grid
        .iter()
        .map(|&n| {
            require_prepared(ct, n)?;
            Ok((n, operator_norm(&ct.mean(n).matmul(&theta))?))
        })
        .collect::<Result<Vec<_>>>()?;
    DecayCurve::new(
        rows,
        CurveMeta {
            alpha: ct.alpha(),
            peripheral: as_pairs(&peripheral),
            vanishes_on_peripheral: Some(vanishes),
            ..CurveMeta::default()
        },
    )
}

fn peripheral_in_one(points: &[Complex64]) -> bool {
    points.iter().all(|z| (z - 1.0).norm() <= PERIPHERAL_TOL)
}

/// `n ↦ ‖M_T^α(n+1) − M_T^α(n)‖` over `grid`.
pub fn mean_difference_curve(ct: &CesaroTransform, grid: &[usize]) -> Result<DecayCurve> {
    let peripheral = peripheral_points(ct.matrix())?;
    let rows = grid
        .iter()
        .map(|&n| {
            require_prepared(ct, n + 1)?;
            Ok((n, operator_norm(&(&ct.mean(n + 1) - &ct.mean(n)))?))
        })
        .collect::<Result<Vec<_>>>()?;
    DecayCurve::new(
        rows,
        CurveMeta {
            alpha: ct.alpha(),
            peripheral: as_pairs(&peripheral),
            peripheral_in_one: Some(peripheral_in_one(&peripheral)),
            ..CurveMeta::default()
        },
    )
}

fn require_order_at_least_one(ct: &CesaroTransform) -> Result<()> {
    if ct.alpha() < 1.0 {
        return Err(Error::invalid(format!(
            "identity needs α >= 1 so that α − 1 is a valid order, got {}",
            ct.alpha()
        )));
    }
    Ok(())
}

/// Residual of `((n+α+1)/(n+1))·M^α(n+1) − M^α(n) = (α/(n+1))·M^{α−1}(n+1)`.
pub fn mean_step_identity_residual(ct: &CesaroTransform, n: usize) -> Result<f64> {
    require_order_at_least_one(ct)?;
    require_prepared(ct, n + 1)?;
    let alpha = ct.alpha();
    let nf = n as f64;
    let mut lhs = ct.mean(n + 1).scale_real((nf + alpha + 1.0) / (nf + 1.0));
    lhs.add_scaled_real(-1.0, &ct.mean(n));
    let rhs = ct
        .mean_at_order(alpha - 1.0, n + 1)
        .scale_real(alpha / (nf + 1.0));
    operator_norm(&(&lhs - &rhs))
}

/// Residual of `M^α(n)(T − I) = (α/(n+1))·(M^{α−1}(n+1) − I)`.
pub fn mean_shift_identity_residual(ct: &CesaroTransform, n: usize) -> Result<f64> {
    require_order_at_least_one(ct)?;
    require_prepared(ct, n + 1)?;
    let alpha = ct.alpha();
    let id = CMatrix::identity(ct.dim());
    let lhs = ct.mean(n).matmul(&(ct.matrix() - &id));
    let rhs = (&ct.mean_at_order(alpha - 1.0, n + 1) - &id).scale_real(alpha / (n as f64 + 1.0));
    operator_norm(&(&lhs - &rhs))
}

/// Growth of `‖M^{α−1}(n)‖/n` and `‖T^n‖/n^α` for `α ≥ 1`.
#[derive(Debug, Clone, Serialize)]
pub struct ErgodicReport {
    pub meta: CurveMeta,
    pub mean_ratio: Vec<(usize, f64)>,
    pub power_ratio: Vec<(usize, f64)>,
    /// Upper-half max below lower-half max.
    pub mean_ratio_decreasing: bool,
    pub power_ratio_decreasing: bool,
}

pub fn ergodic_growth_report(ct: &CesaroTransform, grid: &[usize]) -> Result<ErgodicReport> {
    require_order_at_least_one(ct)?;
    let alpha = ct.alpha();
    let peripheral = peripheral_points(ct.matrix())?;
    let mut mean_ratio = Vec::new();
    let mut power_ratio = Vec::new();
    for &n in grid.iter().filter(|&&n| n >= 1) {
        require_prepared(ct, n)?;
        let nf = n as f64;
        mean_ratio.push((n, operator_norm(&ct.mean_at_order(alpha - 1.0, n))? / nf));
        power_ratio.push((n, operator_norm(ct.power(n))? / nf.powf(alpha)));
    }
    let decreasing = |rows: &[(usize, f64)]| {
        let (lower, upper) = window_trend(&rows.iter().map(|r| r.1).collect::<Vec<_>>());
        upper < lower
    };
    Ok(ErgodicReport {
        mean_ratio_decreasing: decreasing(&mean_ratio),
        power_ratio_decreasing: decreasing(&power_ratio),
        meta: CurveMeta {
            alpha,
            peripheral: as_pairs(&peripheral),
            peripheral_in_one: Some(peripheral_in_one(&peripheral)),
            ..CurveMeta::default()
        },
        mean_ratio,
        power_ratio,
    })
}

/// `q_α^+(f) = ∑_{n≥0} k^{α+1}(n)|W_+^α f(n)|` for `f` supported in `n ≥ 0`;
/// with `sup_n ‖M_T^α(n)‖` it bounds `‖θ_α(f)‖`.
pub fn q_norm_plus(f: &ZSeq, alpha: f64) -> f64 {
    let Some(hi) = f.hi() else {
        return 0.0;
    };
    if hi < 0 {
        return 0.0;
    }
    let neg_kernel = CesaroKernelTable::new(-alpha, hi.max(0) as usize);
    (0..=hi)
        .map(|n| kernel_value(alpha + 1.0, n as usize) * weyl_plus_with(f, &neg_kernel, n).norm())
        .sum()
}
