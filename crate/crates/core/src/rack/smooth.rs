//! Racks on vector spaces and tangent bundles, evaluated in floating point.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::exactla::to_f64;
use crate::leibniz::LeibnizAlgebra;
use crate::lierack::{LinearLieGroupModel, PointedChart};
use crate::numeric::{expm, inverse, max_abs_diff, max_abs_mat_diff, rng, unit_sample, FMat};

/// Structure constants in floating point, `c[(i * n + j) * n + k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatLeibniz {
    dim: usize,
    c: Vec<f64>,
}

impl FloatLeibniz {
    pub fn zeros(dim: usize) -> Self {
        FloatLeibniz { dim, c: vec![0.0; dim * dim * dim] }
    }

    pub fn from_exact(g: &LeibnizAlgebra) -> Self {
        let n = g.dim();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for (k, v) in g.basis_bracket(i, j).iter().enumerate() {
                    out.c[(i * n + j) * n + k] = to_f64(v);
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, v: f64) {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = v;
    }

    pub fn constants(&self) -> &[f64] {
        &self.c
    }

    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let s = x[i] * y[j];
                if s == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += s * self.c[(i * n + j) * n + k];
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad_matrix(&self, x: &[f64]) -> FMat {
        let n = self.dim;
        let mut m = FMat::zeros(n, n);
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            let col = self.bracket(x, &e);
            for k in 0..n {
                m[(k, j)] = col[k];
            }
        }
        m
    }

    /// Largest residual of the left Leibniz identity over basis triples.
    pub fn leibniz_residual(&self) -> f64 {
        let n = self.dim;
        let e = |i: usize| {
            let mut v = vec![0.0; n];
            v[i] = 1.0;
            v
        };
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let lhs = self.bracket(&x, &self.bracket(&y, &z));
                    let a = self.bracket(&self.bracket(&x, &y), &z);
                    let b = self.bracket(&y, &self.bracket(&x, &z));
                    for t in 0..n {
                        worst = worst.max((lhs[t] - a[t] - b[t]).abs());
                    }
                }
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &FloatLeibniz) -> f64 {
        max_abs_diff(&self.c, &other.c)
    }
}

/// Tolerance below which a float algebra counts as Leibniz.
pub const TOL_AXIOM: f64 = 1e-9;
/// Rack identities on unit-norm inputs.
pub const TOL_RACK: f64 = 1e-9;

/// `X ∘ Y = exp(ad X) Y` on a Leibniz algebra, pointed at `0`.
#[derive(Clone, Debug)]
pub struct ExpAdRack {
    g: FloatLeibniz,
}

impl ExpAdRack {
    pub fn new(g: FloatLeibniz) -> Result<Self> {
        let r = g.leibniz_residual();
        if r >= TOL_AXIOM {
            return Err(Error::Model(format!("Leibniz residual {r:e} exceeds {TOL_AXIOM:e}")));
        }
        Ok(ExpAdRack { g })
    }

    pub fn algebra(&self) -> &FloatLeibniz {
        &self.g
    }

    pub fn exp_ad(&self, x: &[f64]) -> Result<FMat> {
        expm(&self.g.ad_matrix(x))
    }

    pub fn apply(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.g.dim || y.len() != self.g.dim {
            return Err(Error::Dimension("exp(ad) rack operands have the wrong length".into()));
        }
        Ok((self.exp_ad(x)? * DVector::from_column_slice(y)).as_slice().to_vec())
    }

    /// Max of `|X∘(Y∘Z) - (X∘Y)∘(X∘Z)|` over seeded unit-norm triples.
    pub fn distributivity_residual(&self, samples: usize, seed: u64) -> Result<f64> {
        let mut r = rng(seed);
        let n = self.g.dim;
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let (x, y, z) = (unit_sample(&mut r, n), unit_sample(&mut r, n), unit_sample(&mut r, n));
            let lhs = self.apply(&x, &self.apply(&y, &z)?)?;
            let rhs = self.apply(&self.apply(&x, &y)?, &self.apply(&x, &z)?)?;
            worst = worst.max(max_abs_diff(&lhs, &rhs));
        }
        Ok(worst)
    }

    /// Max of `‖exp(ad X) exp(ad Y) - exp(ad(exp(ad X) Y)) exp(ad X)‖` over
    /// seeded unit-norm pairs.
    pub fn conjugation_chain_residual(&self, samples: usize, seed: u64) -> Result<f64> {
        let mut r = rng(seed);
        let n = self.g.dim;
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let (x, y) = (unit_sample(&mut r, n), unit_sample(&mut r, n));
            let ex = self.exp_ad(&x)?;
            let lhs = &ex * self.exp_ad(&y)?;
            let rhs = self.exp_ad(&self.apply(&x, &y)?)? * &ex;
            worst = worst.max(max_abs_mat_diff(&lhs, &rhs));
        }
        Ok(worst)
    }
}

impl PointedChart for ExpAdRack {
    type Point = Vec<f64>;

    fn tangent_dim(&self) -> usize {
        self.g.dim
    }

    fn chart(&self, coords: &[f64]) -> Vec<f64> {
        coords.to_vec()
    }

    fn readout(&self, p: &Vec<f64>) -> Vec<f64> {
        p.clone()
    }

    fn op(&self, x: &Vec<f64>, y: &Vec<f64>) -> Result<Vec<f64>> {
        self.apply(x, y)
    }
}

/// `exp(ad x) y`.
pub fn exp_ad_rack_op(g: &FloatLeibniz, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    ExpAdRack::new(g.clone())?.apply(x, y)
}

/// Conjugation in the tangent bundle of a matrix group,
/// `(X, a) ∘ (Y, b) = (X + Ad(a)Y - Ad(a⁻¹)X, a b a⁻¹)`, with algebra
/// elements in the model's coordinates.
pub fn tangent_bundle_rack_op(
    model: &LinearLieGroupModel,
    x: &[f64],
    a: &FMat,
    y: &[f64],
    b: &FMat,
) -> Result<(Vec<f64>, FMat)> {
    let k = model.lie_dim();
    if x.len() != k || y.len() != k {
        return Err(Error::Dimension(format!("algebra coordinates must have length {k}")));
    }
    let a_inv = inverse(a)?;
    inverse(b)?;
    let xm = model.algebra_matrix(x);
    let ym = model.algebra_matrix(y);
    let ad_a_y = a * ym * &a_inv;
    let ad_ainv_x = &a_inv * xm.clone() * a;
    let first = model.algebra_coords(&(xm + ad_a_y - ad_ainv_x));
    Ok((first, a * b * a_inv))
}
