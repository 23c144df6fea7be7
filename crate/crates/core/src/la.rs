//! Complex dense linear algebra helpers: seeded Gaussian draws, Kronecker
//! products, numerical rank, and small solver utilities shared by the
//! precoder, receiver, and analysis modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Relative singular-value cutoff for numerical rank decisions.
pub const RANK_TOL: f64 = 1e-9;

/// Deterministic RNG for all seeded draws in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Stable seed mixer so independent sub-streams (trials, channels, symbols)
/// can be derived from one master seed without sharing state.
pub fn mix_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// One unit-variance complex Gaussian sample (real and imaginary parts are
/// independent N(0, 1/2)).
pub fn complex_gaussian<R: Rng>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// rows x cols matrix of i.i.d. unit-variance complex Gaussians.
pub fn complex_gaussian_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

pub fn complex_gaussian_vector<R: Rng>(rng: &mut R, len: usize) -> CVector {
    CVector::from_fn(len, |_, _| complex_gaussian(rng))
}

/// Kronecker product A (x) B.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Singular values of `m`, descending.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Numerical rank at relative tolerance `rel_tol`: the count of singular
/// values above `rel_tol * sigma_max`.
pub fn numerical_rank(m: &CMatrix, rel_tol: f64) -> usize {
    let sv = singular_values(m);
    match sv.first() {
        None => 0,
        Some(&smax) if smax == 0.0 => 0,
        Some(&smax) => sv.iter().filter(|&&s| s > rel_tol * smax).count(),
    }
}

/// Horizontal concatenation [A B]. Errors if row counts differ.
pub fn hcat(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    if a.nrows() != b.nrows() {
        return Err(Error::Dimension(format!(
            "hcat: {} vs {} rows",
            a.nrows(),
            b.nrows()
        )));
    }
    let mut out = CMatrix::zeros(a.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    out.view_mut((0, a.ncols()), (b.nrows(), b.ncols()))
        .copy_from(b);
    Ok(out)
}

pub fn hcat_all(mats: &[CMatrix]) -> Result<CMatrix> {
    let rows = mats.first().map(|m| m.nrows()).unwrap_or(0);
    let cols: usize = mats.iter().map(|m| m.ncols()).sum();
    let mut out = CMatrix::zeros(rows, cols);
    let mut c = 0;
    for m in mats {
        if m.nrows() != rows {
            return Err(Error::Dimension("hcat_all: row mismatch".into()));
        }
        out.view_mut((0, c), (rows, m.ncols())).copy_from(m);
        c += m.ncols();
    }
    Ok(out)
}

/// Largest absolute entry.
pub fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Solves the square system `a * x = b` by LU with full pivoting and returns
/// the solution together with a cheap condition estimate (ratio of extreme
/// pivot magnitudes). Errors when the estimate exceeds `cond_threshold`.
pub struct LuSolver {
    lu: nalgebra::FullPivLU<C64, nalgebra::Dyn, nalgebra::Dyn>,
    pub cond_estimate: f64,
}

impl LuSolver {
    pub fn new(a: &CMatrix, cond_threshold: f64) -> Result<Self> {
        assert_eq!(a.nrows(), a.ncols(), "LuSolver requires a square matrix");
        let lu = a.clone().full_piv_lu();
        let u = lu.u();
        let mut pmax = 0.0f64;
        let mut pmin = f64::INFINITY;
        for i in 0..u.nrows().min(u.ncols()) {
            let p = u[(i, i)].norm();
            pmax = pmax.max(p);
            pmin = pmin.min(p);
        }
        let cond = if pmin == 0.0 || !pmin.is_finite() {
            f64::INFINITY
        } else {
            pmax / pmin
        };
        if !cond.is_finite() || cond > cond_threshold {
            return Err(Error::Singular { cond });
        }
        Ok(LuSolver {
            lu,
            cond_estimate: cond,
        })
    }

    pub fn solve(&self, b: &CVector) -> Result<CVector> {
        self.lu
            .solve(b)
            .ok_or(Error::Singular { cond: f64::INFINITY })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_draws_are_seed_deterministic() {
        let a = complex_gaussian_matrix(&mut rng(7), 3, 4);
        let b = complex_gaussian_matrix(&mut rng(7), 3, 4);
        assert_eq!(a, b);
        let c = complex_gaussian_matrix(&mut rng(8), 3, 4);
        assert_ne!(a, c);
    }

    #[test]
    fn rank_of_random_and_deficient_matrices() {
        let mut r = rng(1);
        let a = complex_gaussian_matrix(&mut r, 6, 4);
        assert_eq!(numerical_rank(&a, RANK_TOL), 4);
        // Rank-2 product.
        let b = complex_gaussian_matrix(&mut r, 6, 2) * complex_gaussian_matrix(&mut r, 2, 5);
        assert_eq!(numerical_rank(&b, RANK_TOL), 2);
        assert_eq!(numerical_rank(&CMatrix::zeros(3, 3), RANK_TOL), 0);
    }

    #[test]
    fn kron_matches_hand_example() {
        let a = CMatrix::from_row_slice(1, 2, &[C64::new(2.0, 0.0), C64::new(0.0, 1.0)]);
        let id = CMatrix::identity(2, 2);
        let k = kron(&a, &id);
        assert_eq!(k.nrows(), 2);
        assert_eq!(k.ncols(), 4);
        assert_eq!(k[(0, 0)], C64::new(2.0, 0.0));
        assert_eq!(k[(1, 3)], C64::new(0.0, 1.0));
        assert_eq!(k[(0, 1)], C64::new(0.0, 0.0));
    }

    #[test]
    fn lu_solver_flags_singular_systems() {
        let a = CMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(1.0, 0.0),
                C64::new(2.0, 0.0),
                C64::new(2.0, 0.0),
                C64::new(4.0, 0.0),
            ],
        );
        assert!(LuSolver::new(&a, 1e12).is_err());

        let mut r = rng(3);
        let b = complex_gaussian_matrix(&mut r, 4, 4);
        let solver = LuSolver::new(&b, 1e12).unwrap();
        let x = complex_gaussian_vector(&mut r, 4);
        let rhs = &b * &x;
        let got = solver.solve(&rhs).unwrap();
        assert!((got - x).iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-10);
    }
}
