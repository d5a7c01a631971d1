use std::sync::Arc;

use serde::Serialize;

use super::{operator_norm, CMatrix};
use crate::error::{Error, Result};
use crate::kernels::CesaroKernelTable;

/// Powers `T^0..=T^N` and Cesàro sums `Δ^{−α}𝒯(n) = ∑_{j≤n} k^α(n−j) T^j` of
/// one matrix, filled up front.
///
/// The power table is shared between transforms of different orders built
/// with [`CesaroTransform::with_order`].
#[derive(Debug, Clone)]
pub struct CesaroTransform {
    alpha: f64,
    powers: Arc<Vec<CMatrix>>,
    sums: Vec<CMatrix>,
    mean_weights: CesaroKernelTable,
}

fn check_order(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::invalid(format!(
            "Cesàro order must be finite and nonnegative, got {alpha}"
        )));
    }
    Ok(())
}

fn power_table(t: &CMatrix, n_max: usize) -> Vec<CMatrix> {
    let mut powers = Vec::with_capacity(n_max + 1);
    powers.push(CMatrix::identity(t.dim()));
    for j in 1..=n_max {
        let next = powers[j - 1].matmul(t);
        powers.push(next);
    }
    powers
}

fn kernel_sum(powers: &[CMatrix], kernel: &CesaroKernelTable, n: usize) -> CMatrix {
    let mut acc = CMatrix::zeros(powers[0].dim());
    for j in 0..=n {
        let k = kernel.get(n - j);
        if k != 0.0 {
            acc.add_scaled_real(k, &powers[j]);
        }
    }
    acc
}

impl CesaroTransform {
    pub fn new(t: &CMatrix, alpha: f64, n_max: usize) -> Result<Self> {
        check_order(alpha)?;
        Ok(Self::from_powers(
            Arc::new(power_table(t, n_max.max(1))),
            alpha,
        ))
    }

    fn from_powers(powers: Arc<Vec<CMatrix>>, alpha: f64) -> Self {
        let n_max = powers.len() - 1;
        let kernel = CesaroKernelTable::new(alpha, n_max);
        let sums = if alpha == 0.0 {
            powers.as_ref().clone()
        } else {
            (0..=n_max)
                .map(|n| kernel_sum(&powers, &kernel, n))
                .collect()
        };
        CesaroTransform {
            alpha,
            powers,
            sums,
            mean_weights: CesaroKernelTable::new(alpha + 1.0, n_max),
        }
    }

    /// A transform of another order over the same cached powers.
    pub fn with_order(&self, alpha: f64) -> Result<Self> {
        check_order(alpha)?;
        Ok(Self::from_powers(Arc::clone(&self.powers), alpha))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The underlying matrix `T`.
    pub fn matrix(&self) -> &CMatrix {
        &self.powers[1]
    }

    pub fn dim(&self) -> usize {
        self.powers[0].dim()
    }

    /// Largest prepared index.
    pub fn n_max(&self) -> usize {
        self.powers.len() - 1
    }

    /// `T^n`; panics when `n > n_max`.
    pub fn power(&self, n: usize) -> &CMatrix {
        &self.powers[n]
    }

    /// `Δ^{−α}𝒯(n)`; panics when `n > n_max`.
    pub fn sum(&self, n: usize) -> &CMatrix {
        &self.sums[n]
    }

    /// `M_T^α(n) = Δ^{−α}𝒯(n) / k^{α+1}(n)`; panics when `n > n_max`.
    pub fn mean(&self, n: usize) -> CMatrix {
        self.sums[n].scale_real(1.0 / self.mean_weights.get(n))
    }

    /// `Δ^{−β}𝒯(n)` for an arbitrary real order, computed from the cached
    /// powers without building a full table.
    pub fn sum_at_order(&self, beta: f64, n: usize) -> CMatrix {
        kernel_sum(&self.powers, &CesaroKernelTable::new(beta, n), n)
    }

    /// `M_T^β(n)` for an arbitrary order `β > −1`.
    pub fn mean_at_order(&self, beta: f64, n: usize) -> CMatrix {
        let w = CesaroKernelTable::new(beta + 1.0, n).get(n);
        self.sum_at_order(beta, n).scale_real(1.0 / w)
    }
}

/// `Δ^{−α}𝒯(n)` of a prepared transform.
pub fn cesaro_sum(ct: &CesaroTransform, n: usize) -> CMatrix {
    ct.sum(n).clone()
}

/// `M_T^α(n)` of a prepared transform.
pub fn cesaro_mean(ct: &CesaroTransform, n: usize) -> CMatrix {
    ct.mean(n)
}

/// Maxima of a sampled curve over the first and second half of its points.
///
/// Returns `(lower_max, upper_max)`; with fewer than two points both halves
/// see the same values.
pub fn window_trend(values: &[f64]) -> (f64, f64) {
    let max = |s: &[f64]| s.iter().copied().fold(0.0, f64::max);
    if values.len() < 2 {
        let m = max(values);
        return (m, m);
    }
    let mid = values.len() / 2;
    (max(&values[..mid]), max(&values[mid..]))
}

/// Growth ratio above which a sampled norm curve counts as growing.
pub const NON_GROWING_FACTOR: f64 = 1.05;

/// A finite-range surrogate for `sup_n` of a norm sequence.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthProbe {
    /// `(n, value)` for every probed index.
    pub rows: Vec<(usize, f64)>,
    /// Max over all rows.
    pub sup: f64,
    /// Max over the first half of the rows.
    pub lower_max: f64,
    /// Max over the second half of the rows.
    pub upper_max: f64,
    /// `upper_max ≤ 1.05·lower_max`.
    pub non_growing: bool,
}

impl GrowthProbe {
    fn from_rows(rows: Vec<(usize, f64)>) -> Self {
        let values: Vec<f64> = rows.iter().map(|r| r.1).collect();
        let (lower_max, upper_max) = window_trend(&values);
        GrowthProbe {
            rows,
            sup: lower_max.max(upper_max),
            lower_max,
            upper_max,
            non_growing: upper_max <= NON_GROWING_FACTOR * lower_max,
        }
    }
}

/// `‖M_T^α(n)‖` for `0 ≤ n ≤ N`.
pub fn cesaro_bounded_probe(t: &CMatrix, alpha: f64, n_max: usize) -> Result<GrowthProbe> {
    if n_max < 1 {
        return Err(Error::invalid("probe needs N >= 1"));
    }
    let ct = CesaroTransform::new(t, alpha, n_max)?;
    let rows = (0..=n_max)
        .map(|n| Ok((n, operator_norm(&ct.mean(n))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GrowthProbe::from_rows(rows))
}

/// `‖T^n‖ / k^{α+1}(n)` for `1 ≤ n ≤ N`; bounded when `T` is `(C,α)`-bounded.
pub fn power_growth_probe(t: &CMatrix, alpha: f64, n_max: usize) -> Result<GrowthProbe> {
    if n_max < 1 {
        return Err(Error::invalid("probe needs N >= 1"));
    }
    check_order(alpha)?;
    let weights = CesaroKernelTable::new(alpha + 1.0, n_max);
    let mut power = CMatrix::identity(t.dim());
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        power = power.matmul(t);
        rows.push((n, operator_norm(&power)? / weights.get(n)));
    }
    Ok(GrowthProbe::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::super::{fixtures, matrix_power};
    use super::*;
    use crate::kernels::kernel_value;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn identity_sums_are_kernel_multiples() {
        for &a in &[0.0, 0.5, 1.0, 2.3] {
            let ct = CesaroTransform::new(&CMatrix::identity(2), a, 30).unwrap();
            for n in 0..=30 {
                let want = kernel_value(a + 1.0, n);
                assert!((ct.sum(n).get(0, 0).re - want).abs() <= 1e-12 * want);
                assert!((&ct.mean(n) - &CMatrix::identity(2)).max_abs() < 1e-12);
            }
        }
    }

    #[test]
    fn assani_order_one_examples() {
        let ct = CesaroTransform::new(&fixtures::assani(), 1.0, 4).unwrap();
        let s1 = CMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(cesaro_sum(&ct, 1), s1);
        let m1 = CMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(cesaro_mean(&ct, 1), m1);
    }

    #[test]
    fn order_zero_is_powers() {
        let t = fixtures::random_matrix(3, 4);
        let ct = CesaroTransform::new(&t, 0.0, 12).unwrap();
        for n in 0..=12 {
            assert_eq!(ct.sum(n), ct.power(n));
            assert_eq!(ct.mean(n), *ct.power(n));
        }
        assert!((ct.power(7) - &matrix_power(&t, 7)).max_abs() < 1e-12);
    }

    #[test]
    fn cached_sums_match_fresh_sums() {
        let t = fixtures::random_contraction(4, 9);
        let ct = CesaroTransform::new(&t, 1.7, 40).unwrap();
        for n in [0, 1, 13, 40] {
            let fresh = ct.sum_at_order(1.7, n);
            assert!((ct.sum(n) - &fresh).max_abs() <= 1e-12 * (1.0 + fresh.max_abs()));
        }
        let other = ct.with_order(0.4).unwrap();
        assert!(Arc::ptr_eq(&ct.powers, &other.powers));
        assert!((&other.mean(9) - &ct.mean_at_order(0.4, 9)).max_abs() < 1e-13);
    }

    #[test]
    fn rejects_negative_order() {
        assert!(CesaroTransform::new(&CMatrix::identity(1), -0.5, 3).is_err());
        assert!(CesaroTransform::new(&CMatrix::identity(1), f64::NAN, 3).is_err());
    }

    #[test]
    fn trend_windows() {
        assert_eq!(window_trend(&[1.0, 3.0, 2.0, 0.5]), (3.0, 2.0));
        assert_eq!(window_trend(&[2.0]), (2.0, 2.0));
    }

    #[test]
    fn probe_examples_small() {
        let p = cesaro_bounded_probe(&fixtures::assani(), 1.0, 500).unwrap();
        assert!(p.non_growing && p.sup <= 1.0 + 1e-12);
        let p = cesaro_bounded_probe(&fixtures::assani(), 0.0, 500).unwrap();
        assert!(!p.non_growing);
        assert!((p.rows[500].1 / 500.0 - 2.0).abs() < 1e-2);
        let p = cesaro_bounded_probe(&fixtures::jordan1(), 1.0, 500).unwrap();
        assert!(!p.non_growing);

        let p = power_growth_probe(&fixtures::assani(), 1.0, 500).unwrap();
        assert!(p.non_growing && p.sup <= 2.0 + 1.0);
        let d = CMatrix::diag(&[c(0.9), c(-0.9)]);
        let p = power_growth_probe(&d, 0.5, 300).unwrap();
        assert!(p.rows.last().unwrap().1 < 1e-12);
        let p = power_growth_probe(&fixtures::jordan1(), 0.5, 500).unwrap();
        assert!(!p.non_growing);
        assert!(power_growth_probe(&d, 0.5, 0).is_err());
    }
}
