//! Small dense float helpers: matrix exponential, seeded sampling and
//! residual norms.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type FMat = DMatrix<f64>;

/// Seed used when a command or test does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_1eb1;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform vector in `[-1, 1]^n` scaled to unit Euclidean norm (zero stays zero).
pub fn unit_sample(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        v
    } else {
        v.into_iter().map(|x| x / norm).collect()
    }
}

/// Vector with norm at most one.
pub fn ball_sample(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let r: f64 = rng.gen_range(0.0..=1.0);
    unit_sample(rng, n).into_iter().map(|x| x * r).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn max_abs_mat_diff(a: &FMat, b: &FMat) -> f64 {
    max_abs_diff(a.as_slice(), b.as_slice())
}

fn norm1(a: &FMat) -> f64 {
    (0..a.ncols()).map(|j| a.column(j).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// Smallest `k` with `a^k = 0` exactly in floating point, if `k <= n`.
pub fn nilpotency_index(a: &FMat) -> Option<usize> {
    let n = a.nrows();
    if a.iter().all(|&x| x == 0.0) {
        return Some(if n == 0 { 0 } else { 1 });
    }
    let mut p = a.clone();
    for k in 2..=n {
        p = &p * a;
        if p.iter().all(|&x| x == 0.0) {
            return Some(k);
        }
    }
    None
}

/// `exp(a)` by scaling and squaring with a truncated Taylor series. When
/// `a^k = 0` exactly the finite sum is returned instead.
pub fn expm(a: &FMat) -> Result<FMat> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Dimension("expm needs a square matrix".into()));
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::Model("expm input is not finite".into()));
    }
    let id = FMat::identity(n, n);
    if let Some(k) = nilpotency_index(a) {
        let mut sum = id.clone();
        let mut term = id;
        for j in 1..k {
            term = &term * a / j as f64;
            sum += &term;
        }
        return Ok(sum);
    }
    let norm = norm1(a);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scaled = a / 2f64.powi(squarings);
    let mut sum = id.clone();
    let mut term = id;
    let mut converged = false;
    for j in 1..=40 {
        term = &term * &scaled / j as f64;
        sum += &term;
        if norm1(&term) <= f64::EPSILON * norm1(&sum) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Model("matrix exponential series did not converge".into()));
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

pub fn inverse(a: &FMat) -> Result<FMat> {
    a.clone().try_inverse().ok_or(Error::Singular)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(expm(&FMat::zeros(3, 3)).unwrap(), FMat::identity(3, 3));
    }

    #[test]
    fn nilpotent_shortcut_is_exact() {
        let mut a = FMat::zeros(2, 2);
        a[(0, 1)] = 0.7;
        let e = expm(&a).unwrap();
        assert_eq!(e, FMat::from_row_slice(2, 2, &[1.0, 0.7, 0.0, 1.0]));
        assert_eq!(nilpotency_index(&a), Some(2));
    }

    #[test]
    fn rotation_generator_matches_closed_form() {
        for theta in [0.1, 1.0, std::f64::consts::PI, 7.5] {
            let a = FMat::from_row_slice(2, 2, &[0.0, -theta, theta, 0.0]);
            let e = expm(&a).unwrap();
            let (s, c) = theta.sin_cos();
            let expected = FMat::from_row_slice(2, 2, &[c, -s, s, c]);
            assert!(max_abs_mat_diff(&e, &expected) < 1e-13, "theta = {theta}");
        }
    }

    #[test]
    fn diagonal_exponential() {
        let a = FMat::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -2.0, 0.5]));
        let e = expm(&a).unwrap();
        for (i, x) in [1.0f64, -2.0, 0.5].iter().enumerate() {
            assert!((e[(i, i)] - x.exp()).abs() < 1e-13 * x.exp().max(1.0));
        }
    }

    #[test]
    fn seeded_samples_are_reproducible() {
        let a = unit_sample(&mut rng(7), 4);
        let b = unit_sample(&mut rng(7), 4);
        assert_eq!(a, b);
        let n: f64 = a.iter().map(|x| x * x).sum();
        assert!((n - 1.0).abs() < 1e-14);
    }
}
