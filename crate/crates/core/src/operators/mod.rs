//! Dense complex matrices standing in for bounded operators, with the induced
//! 2-norm, spectra, and Cesàro sums and means.

mod cesaro;
pub mod fixtures;
mod spectrum;

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cesaro::{
    cesaro_bounded_probe, cesaro_mean, cesaro_sum, power_growth_probe, window_trend,
    CesaroTransform, GrowthProbe, NON_GROWING_FACTOR,
};
pub use spectrum::{eigenvalues, peripheral_spectrum, spectral_radius, EIGEN_RESIDUAL_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Iteration cap for the SVD and Schur solvers.
pub const SOLVER_MAX_ITER: usize = 10_000;

/// A square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn diag(entries: &[Complex64]) -> Self {
        let mut m = CMatrix::zeros(entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m.data[i * entries.len() + i] = v;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::invalid(format!(
                "matrix is not square: row of length {} in a {dim}-row matrix",
                r.len()
            )));
        }
        let data: Vec<Complex64> = rows.into_iter().flatten().collect();
        if data.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::invalid("matrix entries must be finite"));
        }
        Ok(CMatrix { dim, data })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        CMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: Complex64, other: &CMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    /// `self += c·other` for a real scalar.
    pub fn add_scaled_real(&mut self, c: f64, other: &CMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * c;
        }
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = CMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    /// Frobenius norm; an upper bound for the operator norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.dim, self.dim, &self.data)
    }

    pub fn from_nalgebra(m: &DMatrix<Complex64>) -> Self {
        assert_eq!(m.nrows(), m.ncols(), "matrix must be square");
        let dim = m.nrows();
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(m[(i, j)]);
            }
        }
        CMatrix { dim, data }
    }

    /// `(self)^{-1}` by LU; `None` when singular.
    pub fn inverse(&self) -> Option<CMatrix> {
        self.to_nalgebra()
            .try_inverse()
            .map(|m| CMatrix::from_nalgebra(&m))
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format!("{}", self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        out.add_scaled(ONE, rhs);
        out
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        out.add_scaled(-ONE, rhs);
        out
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct CMatrixJson {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl Serialize for CMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = |part: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| part(&self.get(i, j))).collect())
                .collect()
        };
        CMatrixJson {
            dim: self.dim,
            re: rows(|v| v.re),
            im: rows(|v| v.im),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CMatrixJson::deserialize(d)?;
        if raw.re.len() != raw.dim || raw.im.len() != raw.dim {
            return Err(D::Error::custom(format!(
                "expected {} rows in re and im",
                raw.dim
            )));
        }
        let rows = raw
            .re
            .iter()
            .zip(&raw.im)
            .map(|(re, im)| {
                if re.len() != im.len() {
                    return Err(D::Error::custom("re/im row length mismatch"));
                }
                Ok(re
                    .iter()
                    .zip(im)
                    .map(|(&a, &b)| Complex64::new(a, b))
                    .collect())
            })
            .collect::<std::result::Result<Vec<Vec<Complex64>>, D::Error>>()?;
        CMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// `T^n` by repeated squaring; `T^0 = I`.
pub fn matrix_power(t: &CMatrix, n: usize) -> CMatrix {
    let mut result = CMatrix::identity(t.dim());
    let mut base = t.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.matmul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.matmul(&base);
        }
    }
    result
}

/// Induced 2-norm (largest singular value).
pub fn operator_norm(t: &CMatrix) -> Result<f64> {
    if t.max_abs() == 0.0 {
        return Ok(0.0);
    }
    let svd = t
        .to_nalgebra()
        .try_svd(false, false, f64::EPSILON, SOLVER_MAX_ITER)
        .ok_or(Error::NoConvergence {
            what: "singular value decomposition",
            iterations: SOLVER_MAX_ITER,
        })?;
    Ok(svd.singular_values.iter().copied().fold(0.0, f64::max))
}

/// Smallest singular value; `‖A v‖` for the best unit vector `v`.
pub(crate) fn smallest_singular_value(t: &CMatrix) -> Result<f64> {
    let svd = t
        .to_nalgebra()
        .try_svd(false, false, f64::EPSILON, SOLVER_MAX_ITER)
        .ok_or(Error::NoConvergence {
            what: "singular value decomposition",
            iterations: SOLVER_MAX_ITER,
        })?;
    Ok(svd
        .singular_values
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min))
}
