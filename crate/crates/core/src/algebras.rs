//! Weighted convolution-algebra norms on finitely supported sequences and the
//! matching fractional Wiener algebra norms on periodic functions.
//!
//! `q_α(f) = ∑_n k^{α+1}(|n|)·|W^α f(n)|` is a submultiplicative norm (up to a
//! constant `C_α`) on `c₀₀(ℤ)`; `q_0` is the ℓ¹ norm. A periodic function with
//! Fourier coefficients `f̂` has Wiener norm `q_α(f̂)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fracdiff::{
    split_neg, split_pos, weyl_combined, weyl_diff_minus_at, weyl_diff_plus_at, ZSeq,
};
use crate::kernels::CesaroKernelTable;

/// A trigonometric polynomial `𝔣(t) = ∑ f̂(n) e^{int}`, held by its coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodicFn {
    pub coeffs: ZSeq,
}

impl PeriodicFn {
    pub fn new(coeffs: ZSeq) -> Self {
        PeriodicFn { coeffs }
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(n, c)| c * Complex64::from_polar(1.0, n as f64 * t))
            .sum()
    }

    /// Evaluates `∑ f̂(n) z^n` at a point of the complex plane (`z = e^{it}` on 𝕋).
    pub fn eval_at(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().map(|(n, c)| c * z.powi(n as i32)).sum()
    }

    /// Membership in the analytic subalgebra (no negative frequencies).
    pub fn is_analytic(&self) -> bool {
        self.coeffs.lo() >= 0
    }
}

/// `q_α(f) = ∑_n k^{α+1}(|n|)|W^α f(n)|`.
pub fn q_norm(f: &ZSeq, alpha: f64) -> f64 {
    let w = weyl_combined(f, alpha);
    let Some((lo, hi)) = w.support() else {
        return 0.0;
    };
    let weights = CesaroKernelTable::new(
        alpha + 1.0,
        lo.unsigned_abs().max(hi.unsigned_abs()) as usize,
    );
    w.iter()
        .map(|(n, v)| weights.get(n.unsigned_abs() as usize) * v.norm())
        .sum()
}

/// `(q_α^−(f_−), q_α^+(f_+))`, the negative- and nonnegative-index halves of
/// `q_α(f)`, each computed from the corresponding one-sided piece of `f`.
pub fn q_norm_split(f: &ZSeq, alpha: f64) -> (f64, f64) {
    let neg = split_neg(f);
    let pos = split_pos(f);
    let minus = match neg.support() {
        None => 0.0,
        Some((lo, _)) => {
            let weights = CesaroKernelTable::new(alpha + 1.0, lo.unsigned_abs() as usize);
            (lo..0)
                .map(|n| {
                    weights.get(n.unsigned_abs() as usize)
                        * weyl_diff_minus_at(&neg, alpha, n).norm()
                })
                .sum()
        }
    };
    let plus = match pos.hi() {
        None => 0.0,
        Some(hi) => {
            let weights = CesaroKernelTable::new(alpha + 1.0, hi as usize);
            (0..=hi)
                .map(|n| weights.get(n as usize) * weyl_diff_plus_at(&pos, alpha, n).norm())
                .sum()
        }
    };
    (minus, plus)
}

/// The equivalent norm
/// `q̄_α(f) = ∑_{n≥1} n^α|W_−^α f(−n)| + |f(0)| + ∑_{n≥1} n^α|W_+^α f(n)|`.
pub fn q_bar_norm(f: &ZSeq, alpha: f64) -> f64 {
    let Some((lo, hi)) = f.support() else {
        return 0.0;
    };
    let plus: f64 = (1..=hi.max(0))
        .map(|n| (n as f64).powf(alpha) * weyl_diff_plus_at(f, alpha, n).norm())
        .sum();
    let minus: f64 = (1..=(-lo).max(0))
        .map(|n| (n as f64).powf(alpha) * weyl_diff_minus_at(f, alpha, -n).norm())
        .sum();
    minus + f.get(0).norm() + plus
}

/// Fractional Wiener norm of a trigonometric polynomial: `q_α` of its coefficients.
pub fn wiener_norm(func: &PeriodicFn, alpha: f64) -> f64 {
    q_norm(&func.coeffs, alpha)
}

/// Fourier coefficients `f̂(n)`, `|n| ≤ band`, from `M` uniform samples
/// `samples[k] = 𝔣(2πk/M)` (the trapezoid rule, i.e. a DFT).
///
/// Exact up to roundoff for trigonometric polynomials of degree `≤ band` when
/// `M > 2·band`; smaller `M` aliases and is rejected.
pub fn fourier_coefficients(samples: &[Complex64], band: usize) -> Result<ZSeq> {
    let m = samples.len();
    if m < 2 * band + 1 {
        return Err(Error::invalid(format!(
            "{m} samples alias frequencies up to {band}; need at least {}",
            2 * band + 1
        )));
    }
    let band = band as i64;
    let coeffs = (-band..=band)
        .map(|n| {
            let sum: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    // reduce n·k mod M before forming the angle
                    let phase = (n * k as i64).rem_euclid(m as i64) as f64;
                    s * Complex64::from_polar(1.0, -2.0 * PI * phase / m as f64)
                })
                .sum();
            sum / m as f64
        })
        .collect();
    Ok(ZSeq::new(-band, coeffs))
}

/// `q_α(f*g) / (q_α(f)·q_α(g))`.
pub fn submultiplicativity_ratio(f: &ZSeq, g: &ZSeq, alpha: f64) -> Result<f64> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::invalid(
            "submultiplicativity ratio needs nonzero inputs",
        ));
    }
    Ok(q_norm(&(f * g), alpha) / (q_norm(f, alpha) * q_norm(g, alpha)))
}

/// The trigonometric polynomial `∏_λ (e^{it} − λ)`, vanishing exactly at the
/// given points of the unit circle.
pub fn annihilator_polynomial(points: &[Complex64]) -> Result<PeriodicFn> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &lambda in points {
        if (lambda.norm() - 1.0).abs() > 1e-8 {
            return Err(Error::invalid(format!(
                "annihilator roots must lie on the unit circle, got |{lambda}| = {}",
                lambda.norm()
            )));
        }
        // multiply by (z - λ)
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * lambda;
        }
        coeffs = next;
    }
    Ok(PeriodicFn::new(ZSeq::new(0, coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn q_norm_examples() {
        for &a in &[0.0, 0.5, 1.0, 3.2] {
            assert_eq!(q_norm(&ZSeq::delta(0), a), 1.0);
        }
        assert!((q_norm(&ZSeq::delta(1), 1.0) - 3.0).abs() < 1e-15);
        let f = ZSeq::new(
            -2,
            vec![c(1.0), Complex64::new(0.0, -2.0), c(0.5), c(0.0), c(-3.0)],
        );
        assert_eq!(q_norm(&f, 0.0), f.l1_norm());
        assert_eq!(q_norm(&ZSeq::zero(), 1.0), 0.0);
    }

    #[test]
    fn split_examples() {
        assert_eq!(q_norm_split(&ZSeq::delta(-1), 0.0), (1.0, 0.0));
        assert_eq!(q_norm_split(&ZSeq::delta(0), 2.0), (0.0, 1.0));
        let f = ZSeq::from_real(-2, &[0.3, -1.1, 2.0, 0.7, -0.4]);
        let (m, p) = q_norm_split(&f, 1.3);
        assert!((m + p - q_norm(&f, 1.3)).abs() < 1e-12);
    }

    #[test]
    fn q_bar_examples() {
        assert_eq!(q_bar_norm(&ZSeq::delta(0), 1.0), 1.0);
        // brute force: |f(0)| = 0, n=1 term 1^1·|W_+ e_1(1)| = 1, nothing on n<0.
        assert_eq!(q_bar_norm(&ZSeq::delta(1), 1.0), 1.0);
        assert_eq!(q_bar_norm(&ZSeq::delta(-1), 1.0), 1.0);
        // e_2, α=1: W_+ e_2 is (.., -1 at 1, 1 at 2) → 1·1 + 2·1
        assert_eq!(q_bar_norm(&ZSeq::delta(2), 1.0), 3.0);
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener_norm(&PeriodicFn::new(ZSeq::delta(0)), 0.5), 1.0);
        let f = PeriodicFn::new(ZSeq::from_real(0, &[-1.0, 1.0]));
        assert_eq!(wiener_norm(&f, 0.0), 2.0);
        let g = ZSeq::from_real(0, &[1.0, 1.0]);
        assert_eq!(
            wiener_norm(&PeriodicFn::new(g.clone()), 1.0),
            q_norm(&g, 1.0)
        );
        // W^1(e_0 + e_1) = e_1, weight k^2(1) = 2
        assert_eq!(q_norm(&g, 1.0), 2.0);
    }

    fn sample(f: &PeriodicFn, m: usize) -> Vec<Complex64> {
        (0..m)
            .map(|k| f.eval(2.0 * PI * k as f64 / m as f64))
            .collect()
    }

    #[test]
    fn fourier_examples() {
        let f = PeriodicFn::new(ZSeq::delta(1));
        let got = fourier_coefficients(&sample(&f, 8), 2).unwrap();
        assert!(got.max_abs_diff(&ZSeq::delta(1)) < 1e-12);

        let g = PeriodicFn::new(ZSeq::from_real(0, &[1.0, 1.0]));
        let got = fourier_coefficients(&sample(&g, 8), 2).unwrap();
        assert!(got.max_abs_diff(&g.coeffs) < 1e-12);

        let h = PeriodicFn::new(ZSeq::new(
            1,
            (1..=5).map(|n| c((n as f64).powi(-3))).collect(),
        ));
        let got = fourier_coefficients(&sample(&h, 64), 8).unwrap();
        assert!(got.max_abs_diff(&h.coeffs) < 1e-12);

        assert!(fourier_coefficients(&sample(&h, 16), 8).is_err());
    }

    #[test]
    fn submultiplicativity_examples() {
        let e0 = ZSeq::delta(0);
        assert_eq!(submultiplicativity_ratio(&e0, &e0, 1.5).unwrap(), 1.0);
        let e1 = ZSeq::delta(1);
        assert_eq!(submultiplicativity_ratio(&e1, &e1, 0.0).unwrap(), 1.0);
        assert!(submultiplicativity_ratio(&ZSeq::zero(), &e1, 1.0).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let p = annihilator_polynomial(&[c(1.0)]).unwrap();
        assert_eq!(p.coeffs, ZSeq::from_real(0, &[-1.0, 1.0]));
        assert!(p.is_analytic());
        let p = annihilator_polynomial(&[c(-1.0)]).unwrap();
        assert_eq!(p.coeffs, ZSeq::from_real(0, &[1.0, 1.0]));
        assert!(p.eval(PI).norm() < 1e-15);
        let p = annihilator_polynomial(&[c(1.0), c(-1.0)]).unwrap();
        assert_eq!(p.coeffs, ZSeq::from_real(0, &[-1.0, 0.0, 1.0]));
        let z = Complex64::from_polar(1.0, 0.7);
        let p = annihilator_polynomial(&[z, Complex64::i()]).unwrap();
        assert!(p.eval(0.7).norm() < 1e-14 && p.eval(PI / 2.0).norm() < 1e-14);
        assert!(annihilator_polynomial(&[c(0.9)]).is_err());
        assert_eq!(annihilator_polynomial(&[]).unwrap().coeffs, ZSeq::delta(0));
    }
}
