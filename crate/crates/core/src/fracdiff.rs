//! Finitely supported complex sequences on ℤ and the fractional Weyl operators.
//!
//! For a sequence `f` with finite support the one-sided operators are
//!
//! ```text
//! W_+^α f(n) = ∑_{j ≥ n} k^{−α}(j−n) f(j)
//! W_−^α f(n) = ∑_{j ≤ n} k^{−α}(n−j) f(j)
//! ```
//!
//! with negative `α` giving the Weyl sums. For non-integer `α` the one-sided
//! results have an infinite tail, so they are exposed pointwise (`*_at`); only
//! the combined operator [`weyl_combined`] returns a [`ZSeq`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::CesaroKernelTable;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A complex sequence on ℤ with finite support.
///
/// Stored as a window `[lo, lo + len)` whose first and last entries are
/// nonzero; the zero sequence has an empty window. Indices outside the window
/// read as zero.
#[derive(Clone, PartialEq)]
pub struct ZSeq {
    lo: i64,
    values: Vec<Complex64>,
}

impl ZSeq {
    pub fn zero() -> Self {
        ZSeq {
            lo: 0,
            values: Vec::new(),
        }
    }

    /// Builds a sequence with `values[i] = f(lo + i)`, trimming zeros at both ends.
    pub fn new(lo: i64, values: Vec<Complex64>) -> Self {
        let mut s = ZSeq { lo, values };
        s.trim();
        s
    }

    pub fn from_real(lo: i64, values: &[f64]) -> Self {
        ZSeq::new(lo, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// The unit mass `e_a`.
    pub fn delta(at: i64) -> Self {
        ZSeq {
            lo: at,
            values: vec![Complex64::new(1.0, 0.0)],
        }
    }

    fn trim(&mut self) {
        let first = self.values.iter().position(|v| *v != ZERO);
        match first {
            None => {
                self.values.clear();
                self.lo = 0;
            }
            Some(i) => {
                let last = self.values.iter().rposition(|v| *v != ZERO).unwrap();
                self.values.truncate(last + 1);
                self.values.drain(..i);
                self.lo += i as i64;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// First index of the stored window (0 for the zero sequence).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Last index of the support; `None` for the zero sequence.
    pub fn hi(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.values.len() as i64 - 1)
        }
    }

    /// `(min, max)` of the support.
    pub fn support(&self) -> Option<(i64, i64)> {
        self.hi().map(|hi| (self.lo, hi))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn get(&self, n: i64) -> Complex64 {
        if n < self.lo {
            return ZERO;
        }
        self.values
            .get((n - self.lo) as usize)
            .copied()
            .unwrap_or(ZERO)
    }

    /// Iterates `(n, f(n))` over the stored window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (self.lo + i as i64, *v))
    }

    pub fn l1_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).sum()
    }

    pub fn scale(&self, c: Complex64) -> ZSeq {
        ZSeq::new(self.lo, self.values.iter().map(|v| v * c).collect())
    }

    /// Samples the sequence on `[lo, hi]`, zero-padded.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Complex64> {
        (lo..=hi).map(|n| self.get(n)).collect()
    }

    fn zip_with(&self, other: &ZSeq, op: impl Fn(Complex64, Complex64) -> Complex64) -> ZSeq {
        match (self.support(), other.support()) {
            (None, None) => ZSeq::zero(),
            (a, b) => {
                let lo = a.map_or(i64::MAX, |s| s.0).min(b.map_or(i64::MAX, |s| s.0));
                let hi = a.map_or(i64::MIN, |s| s.1).max(b.map_or(i64::MIN, |s| s.1));
                ZSeq::new(
                    lo,
                    (lo..=hi).map(|n| op(self.get(n), other.get(n))).collect(),
                )
            }
        }
    }

    /// Maximum absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &ZSeq) -> f64 {
        (self - other)
            .values
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for ZSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ZSeq")
            .field("lo", &self.lo)
            .field("values", &self.values)
            .finish()
    }
}

impl Add for &ZSeq {
    type Output = ZSeq;
    fn add(self, rhs: &ZSeq) -> ZSeq {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ZSeq {
    type Output = ZSeq;
    fn sub(self, rhs: &ZSeq) -> ZSeq {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &ZSeq {
    type Output = ZSeq;
    fn neg(self) -> ZSeq {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &ZSeq {
    type Output = ZSeq;
    fn mul(self, rhs: &ZSeq) -> ZSeq {
        convolve(self, rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct ZSeqJson {
    lo: i64,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl Serialize for ZSeq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ZSeqJson {
            lo: self.lo,
            re: self.values.iter().map(|v| v.re).collect(),
            im: self.values.iter().map(|v| v.im).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZSeq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ZSeqJson::deserialize(d)?;
        if raw.re.len() != raw.im.len() {
            return Err(serde::de::Error::custom(format!(
                "re has {} entries but im has {}",
                raw.re.len(),
                raw.im.len()
            )));
        }
        let values: Vec<Complex64> = raw
            .re
            .iter()
            .zip(&raw.im)
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect();
        if values
            .iter()
            .any(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(serde::de::Error::custom("sequence entries must be finite"));
        }
        Ok(ZSeq::new(raw.lo, values))
    }
}

/// `(f*g)(n) = ∑_j f(n−j) g(j)`, exact over the finite supports.
pub fn convolve(f: &ZSeq, g: &ZSeq) -> ZSeq {
    if f.is_zero() || g.is_zero() {
        return ZSeq::zero();
    }
    let mut out = vec![ZERO; f.values.len() + g.values.len() - 1];
    for (i, a) in f.values.iter().enumerate() {
        for (j, b) in g.values.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    ZSeq::new(f.lo + g.lo, out)
}

/// `f_+`: the restriction of `f` to `n ≥ 0`.
pub fn split_pos(f: &ZSeq) -> ZSeq {
    match f.support() {
        Some((lo, hi)) if hi >= 0 => {
            let start = lo.max(0);
            ZSeq::new(start, f.window(start, hi))
        }
        _ => ZSeq::zero(),
    }
}

/// `f_−`: the restriction of `f` to `n < 0`.
pub fn split_neg(f: &ZSeq) -> ZSeq {
    match f.support() {
        Some((lo, hi)) if lo < 0 => ZSeq::new(lo, f.window(lo, hi.min(-1))),
        _ => ZSeq::zero(),
    }
}

/// `f̃(n) = f(−n)`.
pub fn reflect(f: &ZSeq) -> ZSeq {
    match f.hi() {
        None => ZSeq::zero(),
        Some(hi) => ZSeq::new(-hi, f.values.iter().rev().copied().collect()),
    }
}

// Shared kernel for the pointwise operators: ∑_{d=0}^{len-1} k^{-α}(d)·f(start ± d),
// accumulated from the far end of the support toward `n`.
fn kernel_weighted_sum(
    kernel: &CesaroKernelTable,
    len: usize,
    term: impl Fn(usize) -> Complex64,
) -> Complex64 {
    let mut acc = ZERO;
    for d in (0..len).rev() {
        let k = kernel.get(d);
        if k != 0.0 {
            acc += term(d) * k;
        }
    }
    acc
}

/// `W_+^α f(n) = ∑_{j=n}^{∞} k^{−α}(j−n) f(j)` for any real `α`.
///
/// `α = 0` returns `f(n)`; `α < 0` is the Weyl sum of order `−α`.
pub fn weyl_diff_plus_at(f: &ZSeq, alpha: f64, n: i64) -> Complex64 {
    let Some((_, hi)) = f.support() else {
        return ZERO;
    };
    if n > hi {
        return ZERO;
    }
    let len = (hi - n + 1) as usize;
    let kernel = CesaroKernelTable::new(-alpha, len - 1);
    weyl_plus_with(f, &kernel, n)
}

/// `W_−^α f(n) = ∑_{j=−∞}^{n} k^{−α}(n−j) f(j)` for any real `α`.
pub fn weyl_diff_minus_at(f: &ZSeq, alpha: f64, n: i64) -> Complex64 {
    let Some((lo, _)) = f.support() else {
        return ZERO;
    };
    if n < lo {
        return ZERO;
    }
    let len = (n - lo + 1) as usize;
    let kernel = CesaroKernelTable::new(-alpha, len - 1);
    weyl_minus_with(f, &kernel, n)
}

/// `W_+^α f(n)` against a precomputed table of `k^{−α}`, which must cover
/// `hi(f) − n`.
pub(crate) fn weyl_plus_with(f: &ZSeq, neg_kernel: &CesaroKernelTable, n: i64) -> Complex64 {
    let Some((lo, hi)) = f.support() else {
        return ZERO;
    };
    if n > hi {
        return ZERO;
    }
    // j ranges over [max(n, lo), hi]; d = j - n.
    let d_min = (lo - n).max(0) as usize;
    let len = (hi - n + 1) as usize;
    kernel_weighted_sum(neg_kernel, len, |d| {
        if d < d_min {
            ZERO
        } else {
            f.get(n + d as i64)
        }
    })
}

/// `W_−^α f(n)` against a precomputed table of `k^{−α}` covering `n − lo(f)`.
pub(crate) fn weyl_minus_with(f: &ZSeq, neg_kernel: &CesaroKernelTable, n: i64) -> Complex64 {
    let Some((lo, hi)) = f.support() else {
        return ZERO;
    };
    if n < lo {
        return ZERO;
    }
    let d_min = (n - hi).max(0) as usize;
    let len = (n - lo + 1) as usize;
    kernel_weighted_sum(neg_kernel, len, |d| {
        if d < d_min {
            ZERO
        } else {
            f.get(n - d as i64)
        }
    })
}

/// Weyl sum of order `α > 0`: `W_+^{−α} f(n) = ∑_{j ≥ n} k^α(j−n) f(j)`.
pub fn weyl_sum_plus_at(f: &ZSeq, alpha: f64, n: i64) -> Complex64 {
    weyl_diff_plus_at(f, -alpha, n)
}

/// Weyl sum of order `α > 0`: `W_−^{−α} f(n) = ∑_{j ≤ n} k^α(n−j) f(j)`.
pub fn weyl_sum_minus_at(f: &ZSeq, alpha: f64, n: i64) -> Complex64 {
    weyl_diff_minus_at(f, -alpha, n)
}

fn binomial(m: usize, i: usize) -> f64 {
    (0..i).fold(1.0, |acc, j| acc * (m - j) as f64 / (j + 1) as f64)
}

/// `W_+^α f(n)` computed as `W_+^m W_+^{−(m−α)} f(n)` with `m = ⌊α⌋ + 1`:
/// an integer forward difference applied to a Weyl sum of order `m − α`.
///
/// Independent of the series route in [`weyl_diff_plus_at`]; rejects integer
/// and negative `α`.
pub fn weyl_diff_plus_via_composition(f: &ZSeq, alpha: f64, n: i64) -> Result<Complex64> {
    if alpha <= 0.0 || alpha.fract() == 0.0 {
        return Err(Error::invalid(format!(
            "composition route needs a positive non-integer order, got {alpha}"
        )));
    }
    let m = alpha.floor() as usize + 1;
    let frac = m as f64 - alpha;
    let mut acc = ZERO;
    for i in 0..=m {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc += weyl_sum_plus_at(f, frac, n + i as i64) * (sign * binomial(m, i));
    }
    Ok(acc)
}

/// The combined operator: `W_+^α f(n)` for `n ≥ 0` and `W_−^α f(n)` for `n < 0`.
///
/// The result is supported in `[min(lo, 0), max(hi, 0)]`. Negative orders are
/// accepted and give the corresponding combined Weyl sum.
pub fn weyl_combined(f: &ZSeq, alpha: f64) -> ZSeq {
    let Some((lo, hi)) = f.support() else {
        return ZSeq::zero();
    };
    if alpha == 0.0 {
        return f.clone();
    }
    let out_lo = lo.min(0);
    let out_hi = hi.max(0);
    let kernel = CesaroKernelTable::new(-alpha, (out_hi - out_lo) as usize);
    let values = (out_lo..=out_hi)
        .map(|n| {
            if n >= 0 {
                weyl_plus_with(f, &kernel, n)
            } else {
                weyl_minus_with(f, &kernel, n)
            }
        })
        .collect();
    ZSeq::new(out_lo, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::kernel_value;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn canonical_trimming() {
        let f = ZSeq::from_real(-3, &[0.0, 0.0, 1.0, 2.0, 0.0]);
        assert_eq!(f.lo(), -1);
        assert_eq!(f.values(), &[c(1.0), c(2.0)]);
        assert!(ZSeq::from_real(4, &[0.0, 0.0]).is_zero());
        assert_eq!(ZSeq::from_real(4, &[0.0]), ZSeq::zero());
        assert_eq!(f.get(-5), c(0.0));
        assert_eq!(f.get(0), c(2.0));
    }

    #[test]
    fn convolve_deltas_translate() {
        assert_eq!(convolve(&ZSeq::delta(3), &ZSeq::delta(-7)), ZSeq::delta(-4));
        assert!(convolve(&ZSeq::zero(), &ZSeq::delta(1)).is_zero());
    }

    #[test]
    fn convolve_half_kernels() {
        let k = ZSeq::from_real(0, CesaroKernelTable::new(0.5, 3).values());
        let kk = convolve(&k, &k);
        assert!((kk.get(3) - c(1.0)).norm() < 1e-15);
        let km = ZSeq::from_real(0, CesaroKernelTable::new(-1.0, 8).values());
        let kp = ZSeq::from_real(0, CesaroKernelTable::new(1.0, 8).values());
        let d = convolve(&km, &kp);
        for n in 0..=8 {
            let want = if n == 0 { 1.0 } else { 0.0 };
            assert_eq!(d.get(n), c(want));
        }
    }

    #[test]
    fn splits_and_reflection() {
        let f = ZSeq::from_real(-1, &[1.0, 2.0, 3.0]);
        assert_eq!(split_pos(&f), ZSeq::from_real(0, &[2.0, 3.0]));
        assert_eq!(split_neg(&f), ZSeq::from_real(-1, &[1.0]));
        assert_eq!(&split_pos(&f) + &split_neg(&f), f);
        assert_eq!(reflect(&ZSeq::delta(3)), ZSeq::delta(-3));
        assert!(split_neg(&ZSeq::from_real(0, &[1.0, 1.0])).is_zero());
        assert_eq!(reflect(&reflect(&f)), f);
        assert_eq!(reflect(&f), ZSeq::from_real(-1, &[3.0, 2.0, 1.0]));
    }

    #[test]
    fn weyl_sum_examples() {
        assert_eq!(weyl_sum_plus_at(&ZSeq::delta(2), 1.0, 0), c(1.0));
        assert_eq!(weyl_sum_plus_at(&ZSeq::delta(2), 0.5, 1), c(0.5));
        let f = ZSeq::from_real(0, &[1.0, 1.0]);
        assert_eq!(weyl_sum_plus_at(&f, 2.0, 0), c(3.0));
        assert_eq!(weyl_sum_plus_at(&f, 2.0, 5), c(0.0));
        assert_eq!(weyl_sum_minus_at(&ZSeq::delta(-2), 1.0, 0), c(1.0));
    }

    #[test]
    fn weyl_diff_examples() {
        assert_eq!(weyl_diff_plus_at(&ZSeq::delta(2), 0.5, 0), c(-0.125));
        let f = ZSeq::from_real(0, &[1.0, 1.0]);
        assert_eq!(weyl_diff_plus_at(&f, 1.0, 0), c(0.0));
        assert_eq!(weyl_diff_plus_at(&f, 1.0, 1), c(1.0));
        assert_eq!(weyl_diff_plus_at(&ZSeq::delta(0), 0.7, 1), c(0.0));
        for j in 0..6i64 {
            for n in 0..=j {
                let want = kernel_value(-1.3, (j - n) as usize);
                assert_eq!(weyl_diff_plus_at(&ZSeq::delta(j), 1.3, n), c(want));
            }
        }
        assert_eq!(weyl_diff_plus_at(&f, 0.0, 1), c(1.0));
    }

    #[test]
    fn composition_route_examples() {
        let v = weyl_diff_plus_via_composition(&ZSeq::delta(3), 0.5, 1).unwrap();
        assert!((v - c(-0.125)).norm() < 1e-15);
        let v = weyl_diff_plus_via_composition(&ZSeq::delta(0), 1.5, 0).unwrap();
        assert!((v - c(1.0)).norm() < 1e-15);
        assert!(weyl_diff_plus_via_composition(&ZSeq::delta(0), 2.0, 0).is_err());
        assert!(weyl_diff_plus_via_composition(&ZSeq::delta(0), -0.5, 0).is_err());
    }

    #[test]
    fn combined_examples() {
        for &a in &[0.0, 0.3, 1.0, 2.7] {
            assert_eq!(weyl_combined(&ZSeq::delta(0), a), ZSeq::delta(0));
        }
        let f = ZSeq::from_real(-2, &[0.5, -1.0, 2.0, 0.0, 3.0]);
        assert_eq!(weyl_combined(&f, 0.0), f);
        let g = ZSeq::from_real(0, &[1.0, 1.0]);
        assert_eq!(weyl_combined(&g, 1.0), ZSeq::delta(1));
        // e_1 under W^1: -1 at 0, 1 at 1
        assert_eq!(
            weyl_combined(&ZSeq::delta(1), 1.0),
            ZSeq::from_real(0, &[-1.0, 1.0])
        );
        assert!(weyl_combined(&ZSeq::zero(), 0.5).is_zero());
    }

    #[test]
    fn json_shape() {
        let f = ZSeq::new(
            -1,
            vec![Complex64::new(1.0, 2.0), Complex64::new(0.0, -1.0)],
        );
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"lo":-1,"re":[1.0,0.0],"im":[2.0,-1.0]}"#);
        let back: ZSeq = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<ZSeq>(r#"{"lo":0,"re":[1.0],"im":[]}"#).is_err());
    }
}
