use nalgebra::Schur;
use num_complex::Complex64;

use super::{smallest_singular_value, CMatrix, SOLVER_MAX_ITER};
use crate::error::{Error, Result};

/// Every returned eigenvalue `λ` satisfies `min_{|v|=1} ‖Tv − λv‖ ≤` this.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-8;

/// Eigenvalues from a complex Schur decomposition, each checked by the
/// residual `σ_min(T − λI)` (the best achievable `‖Tv − λv‖` over unit `v`).
pub fn eigenvalues(t: &CMatrix) -> Result<Vec<Complex64>> {
    let schur = Schur::try_new(t.to_nalgebra(), f64::EPSILON, SOLVER_MAX_ITER).ok_or(
        Error::NoConvergence {
            what: "complex Schur iteration",
            iterations: SOLVER_MAX_ITER,
        },
    )?;
    let (_, upper) = schur.unpack();
    let dim = t.dim();
    let mut out = Vec::with_capacity(dim);
    for i in 0..dim {
        let lambda = upper[(i, i)];
        let mut shifted = t.clone();
        for k in 0..dim {
            shifted.set(k, k, shifted.get(k, k) - lambda);
        }
        let residual = smallest_singular_value(&shifted)?;
        if residual > EIGEN_RESIDUAL_TOL {
            return Err(Error::EigenResidual {
                lambda: lambda.to_string(),
                residual,
            });
        }
        out.push(lambda);
    }
    Ok(out)
}

/// `max |λ|` over the spectrum.
pub fn spectral_radius(t: &CMatrix) -> Result<f64> {
    Ok(eigenvalues(t)?.iter().map(|l| l.norm()).fold(0.0, f64::max))
}

/// Eigenvalues with `||λ| − 1| ≤ tol`, merged when closer than `tol`, ordered
/// by argument in `(−π, π]`.
pub fn peripheral_spectrum(t: &CMatrix, tol: f64) -> Result<Vec<Complex64>> {
    if !(tol > 0.0) {
        return Err(Error::invalid("peripheral tolerance must be positive"));
    }
    let mut out: Vec<Complex64> = Vec::new();
    for lambda in eigenvalues(t)? {
        if (lambda.norm() - 1.0).abs() <= tol && out.iter().all(|m| (m - lambda).norm() > tol) {
            out.push(lambda);
        }
    }
    out.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn spectral_radius_examples() {
        assert!((spectral_radius(&fixtures::assani()).unwrap() - 1.0).abs() < 1e-12);
        let d = CMatrix::diag(&[c(1.0), c(0.5)]);
        assert!((spectral_radius(&d).unwrap() - 1.0).abs() < 1e-12);
        let r = CMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap();
        assert!((spectral_radius(&r).unwrap() - 1.0).abs() < 1e-12);
        let mut ev = eigenvalues(&r).unwrap();
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((ev[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn peripheral_examples() {
        let p = peripheral_spectrum(&fixtures::assani(), 1e-6).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p[0] - c(-1.0)).norm() < 1e-12);
        let p = peripheral_spectrum(&CMatrix::diag(&[c(1.0), c(0.5)]), 1e-6).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p[0] - c(1.0)).norm() < 1e-12);
        assert!(peripheral_spectrum(&CMatrix::diag(&[c(0.2), c(0.3)]), 1e-6)
            .unwrap()
            .is_empty());
        assert!(peripheral_spectrum(&CMatrix::identity(2), 0.0).is_err());
        // repeated eigenvalue collapses to one point
        assert_eq!(
            peripheral_spectrum(&CMatrix::identity(3), 1e-6)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn random_matrices_pass_residual_check() {
        for seed in 0..20 {
            let t = fixtures::random_matrix(6, seed);
            let ev = eigenvalues(&t).unwrap();
            assert_eq!(ev.len(), 6);
            let trace: Complex64 = (0..6).map(|i| t.get(i, i)).sum();
            let sum: Complex64 = ev.iter().sum();
            assert!((trace - sum).norm() < 1e-10);
        }
    }

    #[test]
    fn jordan_block_spectrum() {
        let j = fixtures::jordan1();
        let p = peripheral_spectrum(&j, 1e-6).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p[0] - c(1.0)).norm() < 1e-12);
    }
}
