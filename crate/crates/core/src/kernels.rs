//! The Cesàro kernel `k^α(n) = α(α+1)⋯(α+n−1)/n!` for real `α`.
//!
//! Values are produced by the product recurrence
//! `k^α(n+1) = k^α(n)·(α+n)/(n+1)` starting from `k^α(0) = 1`. The recurrence
//! has no poles, so negative orders need no special handling, and at a
//! non-positive integer order `−m` the factor `(α+m)` is exactly zero, so every
//! value past `n = m` is an exact `0.0`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// `k^α(0..=N)` for a fixed real order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CesaroKernelTable {
    order: f64,
    values: Vec<f64>,
}

impl CesaroKernelTable {
    pub fn new(order: f64, n_max: usize) -> Self {
        let mut values = Vec::with_capacity(n_max + 1);
        let mut v = 1.0;
        values.push(v);
        for n in 0..n_max {
            v *= recurrence_factor(order, n);
            values.push(v);
        }
        CesaroKernelTable { order, values }
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest stored index `N`.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `k^α(n)`; panics when `n` is past the table.
    pub fn get(&self, n: usize) -> f64 {
        self.values[n]
    }

    /// Extends the table in place up to `n_max` (no-op when already long enough).
    pub fn extend_to(&mut self, n_max: usize) {
        let mut v = *self.values.last().expect("table is never empty");
        for n in self.n_max()..n_max {
            v *= recurrence_factor(self.order, n);
            self.values.push(v);
        }
    }
}

/// The ratio `k^α(n+1)/k^α(n) = (α+n)/(n+1)`.
#[inline]
pub fn recurrence_factor(order: f64, n: usize) -> f64 {
    (order + n as f64) / (n as f64 + 1.0)
}

/// `k^α(n)` by the product recurrence.
pub fn kernel_value(order: f64, n: usize) -> f64 {
    let mut v = 1.0;
    for j in 0..n {
        v *= recurrence_factor(order, j);
        if v == 0.0 {
            break;
        }
    }
    v
}

pub fn kernel_table(order: f64, n_max: usize) -> CesaroKernelTable {
    CesaroKernelTable::new(order, n_max)
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

// Γ(x), exact as (x−1)! at small positive integers, Lanczos with reflection elsewhere.
fn gamma(x: f64) -> f64 {
    if x > 0.0 && x.fract() == 0.0 && x <= 171.0 {
        (1..x as u32).map(f64::from).product()
    } else {
        statrs::function::gamma::gamma(x)
    }
}

/// `k^α(n)·Γ(α)·n^{1−α}`, which tends to 1 as `n → ∞`.
///
/// Only meaningful away from the poles of `Γ`; non-positive integer orders are
/// rejected.
pub fn kernel_asymptotic_ratio(order: f64, n: usize) -> Result<f64> {
    if is_nonpositive_integer(order) {
        return Err(Error::invalid(format!(
            "order {order} is a pole of the gamma function"
        )));
    }
    if n == 0 {
        return Err(Error::invalid("asymptotic ratio needs n >= 1"));
    }
    let nf = n as f64;
    Ok(kernel_value(order, n) * gamma(order) * nf.powf(1.0 - order))
}

/// Partial sum `∑_{n=0}^{N} k^α(n) z^n` of the generating function `(1−z)^{−α}`.
pub fn kernel_generating_partial(order: f64, z: Complex64, n_terms: usize) -> Result<Complex64> {
    if !(z.norm() < 1.0) {
        return Err(Error::invalid(format!(
            "generating function needs |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..n_terms {
        term *= z * recurrence_factor(order, n);
        sum += term;
    }
    Ok(sum)
}

/// `k^α(2n)/k^α(n)`; bounded in `n` for `α > 0`, tending to `2^{α−1}`.
pub fn kernel_doubling_ratio(order: f64, n: usize) -> f64 {
    let table = CesaroKernelTable::new(order, 2 * n);
    table.get(2 * n) / table.get(n)
}

/// Discrete convolution of two kernel tables over their common range:
/// `(k^α * k^β)(n) = ∑_{j=0}^{n} k^α(n−j)·k^β(j)`.
pub fn convolve_tables(a: &CesaroKernelTable, b: &CesaroKernelTable) -> Vec<f64> {
    let n_max = a.n_max().min(b.n_max());
    (0..=n_max)
        .map(|n| (0..=n).map(|j| a.get(n - j) * b.get(j)).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_value_examples() {
        assert_eq!(kernel_value(1.0, 5), 1.0);
        assert_eq!(kernel_value(0.5, 1), 0.5);
        assert_eq!(kernel_value(-0.5, 2), -0.125);
        assert_eq!(kernel_value(0.0, 3), 0.0);
        assert_eq!(kernel_value(0.0, 0), 1.0);
    }

    #[test]
    fn kernel_table_examples() {
        assert_eq!(kernel_table(2.0, 3).values(), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(kernel_table(1.0, 2).values(), &[1.0, 1.0, 1.0]);
        assert_eq!(kernel_table(0.0, 2).values(), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn negative_integer_orders_vanish_exactly() {
        for m in 1..6usize {
            let t = kernel_table(-(m as f64), 40);
            for n in (m + 1)..=40 {
                assert_eq!(t.get(n), 0.0, "k^-{m}({n})");
            }
            // k^{-m}(n) = (-1)^n C(m, n)
            let mut binom = 1.0;
            for n in 0..=m {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(t.get(n), sign * binom);
                binom = binom * (m - n) as f64 / (n + 1) as f64;
            }
        }
    }

    #[test]
    fn monotone_in_n_by_order_range() {
        let dec = kernel_table(0.4, 300);
        assert!(dec.values().windows(2).all(|w| w[1] <= w[0]));
        let inc = kernel_table(1.7, 300);
        assert!(inc.values().windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn extend_matches_fresh_table() {
        let mut t = kernel_table(-1.3, 10);
        t.extend_to(50);
        assert_eq!(t, kernel_table(-1.3, 50));
    }

    #[test]
    fn asymptotic_ratio_examples() {
        assert_eq!(kernel_asymptotic_ratio(1.0, 100).unwrap(), 1.0);
        assert!((kernel_asymptotic_ratio(0.5, 10_000).unwrap() - 1.0).abs() < 1e-3);
        assert!((kernel_asymptotic_ratio(3.0, 10_000).unwrap() - 1.0).abs() < 1e-3);
        assert!(kernel_asymptotic_ratio(0.0, 10).is_err());
        assert!(kernel_asymptotic_ratio(-2.0, 10).is_err());
    }

    #[test]
    fn asymptotic_ratio_negative_fractional_orders() {
        // (-2, 0) away from -1
        for &a in &[-1.8, -1.5, -0.7, -0.5, -0.2] {
            let r = kernel_asymptotic_ratio(a, 20_000).unwrap();
            assert!((r - 1.0).abs() < 1e-3, "alpha={a}: {r}");
        }
    }

    #[test]
    fn generating_partial_examples() {
        let s = kernel_generating_partial(1.0, Complex64::new(0.5, 0.0), 50).unwrap();
        assert!((s - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        let s = kernel_generating_partial(0.0, Complex64::new(0.0, 0.9), 10).unwrap();
        assert_eq!(s, Complex64::new(1.0, 0.0));
        let s = kernel_generating_partial(0.5, Complex64::new(0.3, 0.0), 60).unwrap();
        assert!((s.re - 0.7f64.powf(-0.5)).abs() < 1e-10 && s.im == 0.0);
        assert!(kernel_generating_partial(0.5, Complex64::new(0.6, 0.8), 10).is_err());
    }

    #[test]
    fn doubling_ratio_examples() {
        assert_eq!(kernel_doubling_ratio(1.0, 7), 1.0);
        assert!((kernel_doubling_ratio(2.0, 5) - 11.0 / 6.0).abs() < 1e-15);
        assert!((kernel_doubling_ratio(0.5, 4096) - 0.5f64.sqrt()).abs() < 1e-2);
    }

    #[test]
    fn inverse_orders_convolve_to_delta() {
        for &a in &[0.3, 1.0, 2.5, -0.75] {
            let c = convolve_tables(&kernel_table(a, 64), &kernel_table(-a, 64));
            assert!((c[0] - 1.0).abs() < 1e-14);
            assert!(c[1..].iter().all(|v| v.abs() < 1e-12), "alpha={a}");
        }
    }

    #[test]
    fn alternating_signs_for_small_negative_orders() {
        let t = kernel_table(-0.6, 30);
        // k^α(1) = α < 0 and every later factor (α+n)/(n+1) is positive.
        assert!(t.values()[1..].iter().all(|&v| v < 0.0));
        let t = kernel_table(-1.4, 30);
        // factor at n=1 is (α+1)/2 < 0: sign flips once more, then stays.
        assert!(t.get(1) < 0.0 && t.values()[2..].iter().all(|&v| v > 0.0));
    }
}
