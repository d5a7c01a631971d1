//! Named matrices used by the experiments and the CLI.
//!
//! A fixture name resolves, in order, to: an existing JSON file at that path;
//! `<name>.json` inside the directory named by `CESARO_LAB_FIXTURES`; a
//! built-in matrix.

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{operator_norm, CMatrix};
use crate::error::{Error, Result};

pub const FIXTURE_DIR_ENV: &str = "CESARO_LAB_FIXTURES";

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &[
    "assani",
    "jordan1",
    "diag_peripheral",
    "diag_half",
    "rotation",
    "identity2",
    "random3",
];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `[[−1, 2], [0, −1]]`: (C,1)-bounded, not power-bounded.
pub fn assani() -> CMatrix {
    CMatrix::from_real_rows(&[&[-1.0, 2.0], &[0.0, -1.0]]).unwrap()
}

/// Jordan block `[[1, 1], [0, 1]]`.
pub fn jordan1() -> CMatrix {
    CMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap()
}

/// `diag(1, −0.9, 0.3i)`: peripheral spectrum `{1}`.
pub fn diag_peripheral() -> CMatrix {
    CMatrix::diag(&[c(1.0, 0.0), c(-0.9, 0.0), c(0.0, 0.3)])
}

/// `diag(1, 0.5)`.
pub fn diag_half() -> CMatrix {
    CMatrix::diag(&[c(1.0, 0.0), c(0.5, 0.0)])
}

/// Quarter turn `[[0, 1], [−1, 0]]`, eigenvalues `±i`.
pub fn rotation() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap()
}

/// Entries with real and imaginary parts uniform in `[−1, 1)`, from a ChaCha8
/// stream seeded with `seed`.
pub fn random_matrix(dim: usize, seed: u64) -> CMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect()
        })
        .collect();
    CMatrix::from_rows(rows).expect("square and finite by construction")
}

/// [`random_matrix`] rescaled to operator norm 1.
pub fn random_contraction(dim: usize, seed: u64) -> CMatrix {
    let t = random_matrix(dim, seed);
    let norm = operator_norm(&t).expect("SVD of a small dense matrix");
    t.scale_real(1.0 / norm)
}

pub fn builtin(name: &str) -> Option<CMatrix> {
    Some(match name {
        "assani" => assani(),
        "jordan1" => jordan1(),
        "diag_peripheral" => diag_peripheral(),
        "diag_half" => diag_half(),
        "rotation" => rotation(),
        "identity2" => CMatrix::identity(2),
        "random3" => random_contraction(3, 3),
        _ => return None,
    })
}

pub fn load_file(path: &Path) -> Result<CMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))
}

/// Resolves a fixture name or path to a matrix.
pub fn resolve(name: &str) -> Result<CMatrix> {
    let direct = Path::new(name);
    if direct.is_file() {
        return load_file(direct);
    }
    if let Some(dir) = std::env::var_os(FIXTURE_DIR_ENV) {
        let candidate: PathBuf = Path::new(&dir).join(format!("{name}.json"));
        if candidate.is_file() {
            return load_file(&candidate);
        }
    }
    builtin(name).ok_or_else(|| {
        Error::Fixture(format!(
            "unknown fixture '{name}' (not a file, not in ${FIXTURE_DIR_ENV}, builtins: {})",
            BUILTIN_NAMES.join(", ")
        ))
    })
}
