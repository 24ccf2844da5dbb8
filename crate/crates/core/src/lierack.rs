//! Linear Lie racks and digroups on `V × H` for matrix groups `H`, and the
//! finite-difference recovery of their tangent Leibniz algebras.
//!
//! A group element is stored twice: as an `m × m` matrix in the ambient
//! realization of `H` and as the `d × d` matrix by which it acts on `V`.
//! Both are built as exponentials of the same algebra element, so the pair
//! stays consistent under products.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::exactla::{to_f64, Matrix, Rational, Subspace};
use crate::leibniz::{LeibnizAlgebra, Splitting};
use crate::numeric::{ball_sample, expm, inverse, max_abs_diff, max_abs_mat_diff, rng, unit_sample, FMat};
use crate::rack::{ExpAdRack, FloatLeibniz};

pub const TOL_MODEL: f64 = 1e-9;
pub const STEP_PHI: f64 = 1e-5;
pub const STEP_BRACKET: f64 = 1e-4;
pub const TOL_PHI: f64 = 1e-6;
pub const TOL_BRACKET: f64 = 1e-3;
/// Digroup conjugation identity tolerance.
pub const TOL_CONJ: f64 = 1e-12;

/// A pointed rack given on a neighbourhood of its point by a chart `ψ`
/// (with `ψ(0) = 1`) and a readout `κ` whose derivative at `1` inverts the
/// derivative of `ψ` at `0`.
pub trait PointedChart {
    type Point;

    fn tangent_dim(&self) -> usize;
    fn chart(&self, coords: &[f64]) -> Self::Point;
    fn readout(&self, p: &Self::Point) -> Vec<f64>;
    fn op(&self, x: &Self::Point, y: &Self::Point) -> Result<Self::Point>;
}

fn axis(n: usize, j: usize, t: f64) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[j] = t;
    v
}

/// `Φ(x) = T₁φ(x)` by central differences of `t ↦ κ(x ∘ ψ(t e_j))`.
pub fn phi_fd<C: PointedChart>(c: &C, x: &C::Point, step: f64) -> Result<FMat> {
    let n = c.tangent_dim();
    let mut out = FMat::zeros(n, n);
    for j in 0..n {
        let plus = c.readout(&c.op(x, &c.chart(&axis(n, j, step)))?);
        let minus = c.readout(&c.op(x, &c.chart(&axis(n, j, -step)))?);
        for i in 0..n {
            out[(i, j)] = (plus[i] - minus[i]) / (2.0 * step);
        }
    }
    if out.iter().any(|v| !v.is_finite()) {
        return Err(Error::Model(format!("finite differences broke down at step {step:e}")));
    }
    Ok(out)
}

/// Structure constants of the tangent Leibniz algebra at the point.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentBracket {
    pub constants: FloatLeibniz,
}

impl TangentBracket {
    pub fn leibniz_residual(&self) -> f64 {
        self.constants.leibniz_residual()
    }

    pub fn deviation_from(&self, expected: &FloatLeibniz) -> f64 {
        self.constants.max_abs_diff(expected)
    }
}

/// `ad(W) = d/ds Φ(ψ(s W))` at `s = 0`, by nested central differences.
pub fn tangent_bracket_fd<C: PointedChart>(c: &C, step: f64) -> Result<TangentBracket> {
    let n = c.tangent_dim();
    let mut constants = FloatLeibniz::zeros(n);
    for i in 0..n {
        let plus = phi_fd(c, &c.chart(&axis(n, i, step)), step)?;
        let minus = phi_fd(c, &c.chart(&axis(n, i, -step)), step)?;
        let ad = (plus - minus) / (2.0 * step);
        for j in 0..n {
            for k in 0..n {
                constants.set_constant(i, j, k, ad[(k, j)]);
            }
        }
    }
    Ok(TangentBracket { constants })
}

/// Matrix group `H` through a basis of its Lie algebra in `gl(m)`, together
/// with a representation of that algebra on `V = R^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearLieGroupModel {
    ambient: usize,
    lie_basis: Vec<FMat>,
    module_dim: usize,
    rho: Vec<FMat>,
    coord_map: FMat,
    lie: FloatLeibniz,
}

/// An element `(v, A)` of `V × H`; `a_mod` is the action of `A` on `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct RackPoint {
    pub v: Vec<f64>,
    pub a: FMat,
    pub a_mod: FMat,
}

impl RackPoint {
    pub fn distance(&self, other: &RackPoint) -> f64 {
        max_abs_diff(&self.v, &other.v)
            .max(max_abs_mat_diff(&self.a, &other.a))
            .max(max_abs_mat_diff(&self.a_mod, &other.a_mod))
    }
}

impl LinearLieGroupModel {
    /// Validates closure of `lie_basis` and the representation property of
    /// `rho` to `TOL_MODEL`, relative to the size of the matrices involved.
    pub fn new(ambient: usize, lie_basis: Vec<FMat>, module_dim: usize, rho: Vec<FMat>) -> Result<Self> {
        let k = lie_basis.len();
        if rho.len() != k {
            return Err(Error::Model(format!("{} algebra matrices but {} module matrices", k, rho.len())));
        }
        if lie_basis.iter().any(|x| x.shape() != (ambient, ambient)) {
            return Err(Error::Dimension(format!("lie_basis matrices must be {ambient}×{ambient}")));
        }
        if rho.iter().any(|x| x.shape() != (module_dim, module_dim)) {
            return Err(Error::Dimension(format!("rho matrices must be {module_dim}×{module_dim}")));
        }
        if lie_basis.iter().chain(&rho).any(|x| x.iter().any(|v| !v.is_finite())) {
            return Err(Error::Model("model matrices must be finite".into()));
        }
        let coord_map = if k == 0 {
            FMat::zeros(0, ambient * ambient)
        } else {
            let cols: Vec<DVector<f64>> = lie_basis.iter().map(|x| DVector::from_column_slice(x.as_slice())).collect();
            let b = FMat::from_columns(&cols);
            if b.rank(TOL_MODEL) < k {
                return Err(Error::Model("lie_basis is linearly dependent".into()));
            }
            b.pseudo_inverse(1e-12).map_err(|e| Error::Model(e.to_string()))?
        };
        let mut model = LinearLieGroupModel {
            ambient,
            lie_basis,
            module_dim,
            rho,
            coord_map,
            lie: FloatLeibniz::zeros(k),
        };
        let scale = |m: &FMat| m.amax().max(1.0);
        for i in 0..k {
            for j in 0..k {
                let (xi, xj) = (&model.lie_basis[i], &model.lie_basis[j]);
                let comm = xi * xj - xj * xi;
                let c = model.algebra_coords(&comm);
                let back = model.algebra_matrix(&c);
                let r = max_abs_mat_diff(&back, &comm) / scale(&comm);
                if r > TOL_MODEL {
                    return Err(Error::Model(format!(
                        "lie_basis is not closed under the commutator: [X{}, X{}] misses the span by {r:e}",
                        i + 1,
                        j + 1
                    )));
                }
                for (t, v) in c.iter().enumerate() {
                    model.lie.set_constant(i, j, t, *v);
                }
                let (ri, rj) = (&model.rho[i], &model.rho[j]);
                let lhs = model.rho_matrix(&c);
                let rhs = ri * rj - rj * ri;
                let r = max_abs_mat_diff(&lhs, &rhs) / scale(&rhs);
                if r > TOL_MODEL {
                    return Err(Error::Model(format!(
                        "rho is not a representation on (X{}, X{}): residual {r:e}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(model)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn lie_basis(&self) -> &[FMat] {
        &self.lie_basis
    }

    pub fn rho(&self) -> &[FMat] {
        &self.rho
    }

    pub fn lie_dim(&self) -> usize {
        self.lie_basis.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Float structure constants of `h` read off the commutators.
    pub fn lie_constants(&self) -> &FloatLeibniz {
        &self.lie
    }

    pub fn algebra_matrix(&self, coords: &[f64]) -> FMat {
        let mut m = FMat::zeros(self.ambient, self.ambient);
        for (c, x) in coords.iter().zip(&self.lie_basis) {
            m += x * *c;
        }
        m
    }

    pub fn rho_matrix(&self, coords: &[f64]) -> FMat {
        let mut m = FMat::zeros(self.module_dim, self.module_dim);
        for (c, x) in coords.iter().zip(&self.rho) {
            m += x * *c;
        }
        m
    }

    /// Least-squares coordinates of an ambient matrix in `lie_basis`.
    pub fn algebra_coords(&self, m: &FMat) -> Vec<f64> {
        (&self.coord_map * DVector::from_column_slice(m.as_slice())).as_slice().to_vec()
    }

    pub fn exp_algebra(&self, coords: &[f64]) -> Result<FMat> {
        expm(&self.algebra_matrix(coords))
    }

    /// `(v, exp X)` with its action `exp ρ(X)` on `V`.
    pub fn point(&self, v: &[f64], x: &[f64]) -> Result<RackPoint> {
        if v.len() != self.module_dim || x.len() != self.lie_dim() {
            return Err(Error::Dimension("rack point coordinates have the wrong length".into()));
        }
        Ok(RackPoint { v: v.to_vec(), a: self.exp_algebra(x)?, a_mod: expm(&self.rho_matrix(x))? })
    }

    pub fn unit(&self) -> RackPoint {
        RackPoint {
            v: vec![0.0; self.module_dim],
            a: FMat::identity(self.ambient, self.ambient),
            a_mod: FMat::identity(self.module_dim, self.module_dim),
        }
    }

    /// `(u, A) ∘ (v, B) = (Av, ABA⁻¹)`.
    pub fn rack_op(&self, x: &RackPoint, y: &RackPoint) -> Result<RackPoint> {
        let a_inv = inverse(&x.a)?;
        let m_inv = inverse(&x.a_mod)?;
        Ok(RackPoint {
            v: (&x.a_mod * DVector::from_column_slice(&y.v)).as_slice().to_vec(),
            a: &x.a * &y.a * a_inv,
            a_mod: &x.a_mod * &y.a_mod * m_inv,
        })
    }

    /// `(x ⊢ y, x ⊣ y)` with `(u,A) ⊢ (v,B) = (Av, AB)` and
    /// `(u,A) ⊣ (v,B) = (u, AB)`.
    pub fn digroup_ops(&self, x: &RackPoint, y: &RackPoint) -> Result<(RackPoint, RackPoint)> {
        inverse(&x.a)?;
        inverse(&y.a)?;
        let a = &x.a * &y.a;
        let a_mod = &x.a_mod * &y.a_mod;
        let vdash = RackPoint {
            v: (&x.a_mod * DVector::from_column_slice(&y.v)).as_slice().to_vec(),
            a: a.clone(),
            a_mod: a_mod.clone(),
        };
        let dashv = RackPoint { v: x.v.clone(), a, a_mod };
        Ok((vdash, dashv))
    }

    /// `(u, A)⁻¹ = (0, A⁻¹)`.
    pub fn digroup_inverse(&self, x: &RackPoint) -> Result<RackPoint> {
        Ok(RackPoint { v: vec![0.0; self.module_dim], a: inverse(&x.a)?, a_mod: inverse(&x.a_mod)? })
    }

    /// `Ad(A)` in algebra coordinates.
    pub fn adjoint(&self, a: &FMat) -> Result<FMat> {
        let a_inv = inverse(a)?;
        let k = self.lie_dim();
        let mut out = FMat::zeros(k, k);
        for (j, x) in self.lie_basis.iter().enumerate() {
            let c = self.algebra_coords(&(a * x * &a_inv));
            for i in 0..k {
                out[(i, j)] = c[i];
            }
        }
        Ok(out)
    }

    /// Closed form `Φ(u, A)(v + X) = Av + Ad(A)X`.
    pub fn big_phi(&self, x: &RackPoint) -> Result<FMat> {
        let d = self.module_dim;
        let n = self.tangent_dim();
        let mut out = FMat::zeros(n, n);
        out.view_mut((0, 0), (d, d)).copy_from(&x.a_mod);
        out.view_mut((d, d), (n - d, n - d)).copy_from(&self.adjoint(&x.a)?);
        Ok(out)
    }

    /// The demisemidirect bracket `[u + X, v + Y] = ρ(X)v + [X, Y]` on
    /// `V ⊕ h`, module coordinates first.
    pub fn expected_bracket(&self) -> FloatLeibniz {
        let d = self.module_dim;
        let k = self.lie_dim();
        let mut g = FloatLeibniz::zeros(d + k);
        for a in 0..k {
            for b in 0..d {
                for t in 0..d {
                    g.set_constant(d + a, b, t, self.rho[a][(t, b)]);
                }
            }
            for b in 0..k {
                for t in 0..k {
                    g.set_constant(d + a, d + b, d + t, self.lie.constant(a, b, t));
                }
            }
        }
        g
    }

    /// A point `(v, exp X)` with `‖v‖, ‖X‖ ≤ 1`.
    pub fn random_point(&self, r: &mut rand_chacha::ChaCha8Rng) -> Result<RackPoint> {
        let v = ball_sample(r, self.module_dim);
        let x = ball_sample(r, self.lie_dim());
        self.point(&v, &x)
    }
}

impl PointedChart for LinearLieGroupModel {
    type Point = RackPoint;

    fn tangent_dim(&self) -> usize {
        self.module_dim + self.lie_dim()
    }

    fn chart(&self, coords: &[f64]) -> RackPoint {
        let d = self.module_dim;
        self.point(&coords[..d], &coords[d..]).expect("chart coordinates of the right length")
    }

    fn readout(&self, p: &RackPoint) -> Vec<f64> {
        let mut out = p.v.clone();
        out.extend(self.algebra_coords(&(&p.a - FMat::identity(self.ambient, self.ambient))));
        out
    }

    fn op(&self, x: &RackPoint, y: &RackPoint) -> Result<RackPoint> {
        self.rack_op(x, y)
    }
}

fn to_fmat(m: &Matrix) -> FMat {
    FMat::from_fn(m.rows(), m.cols(), |i, j| to_f64(&m[(i, j)]))
}

pub fn fmat_from_rows(rows: &[&[f64]]) -> FMat {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    FMat::from_fn(r, c, |i, j| rows[i][j])
}

/// Names accepted by [`builtin_model`].
pub const BUILTIN_MODELS: [&str; 3] = ["so3-standard", "ex2.2", "abelian-trivial"];

pub fn builtin_model(name: &str) -> Result<LinearLieGroupModel> {
    match name {
        "so3-standard" => {
            let basis: Vec<FMat> = crate::leibniz::builtins::so3_matrices().iter().map(to_fmat).collect();
            LinearLieGroupModel::new(3, basis.clone(), 3, basis)
        }
        "ex2.2" => {
            let n = fmat_from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
            LinearLieGroupModel::new(2, vec![n.clone()], 2, vec![n])
        }
        "abelian-trivial" => {
            let d1 = fmat_from_rows(&[&[1.0, 0.0], &[0.0, 0.0]]);
            let d2 = fmat_from_rows(&[&[0.0, 0.0], &[0.0, 1.0]]);
            LinearLieGroupModel::new(2, vec![d1, d2], 2, vec![FMat::zeros(2, 2); 2])
        }
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiffOptions {
    pub seed: u64,
    pub step_phi: f64,
    pub step_bracket: f64,
    pub samples: usize,
}

impl Default for DiffOptions {
    fn default() -> Self {
        DiffOptions { seed: crate::numeric::DEFAULT_SEED, step_phi: STEP_PHI, step_bracket: STEP_BRACKET, samples: 50 }
    }
}

/// Residuals from differentiating a linear Lie rack. All are maxima over
/// the seeded sample.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffSummary {
    pub estimated: TangentBracket,
    pub expected: FloatLeibniz,
    pub bracket_deviation: f64,
    pub leibniz_residual: f64,
    /// Finite-difference `Φ` against the closed form.
    pub phi_residual: f64,
    /// `Φ(x)[Y, Z] - [Φ(x)Y, Φ(x)Z]` for the closed-form bracket.
    pub phi_aut_residual: f64,
    /// `x ⊢ y ⊣ x⁻¹` against `x ∘ y`.
    pub conjugation_residual: f64,
    /// Left distributivity of the rack on sampled triples.
    pub distributivity_residual: f64,
    /// `Ad(exp X)Y` against the algebra block of `Φ((0, exp X))`.
    pub subrack_phi_residual: f64,
}

impl DiffSummary {
    pub fn passed(&self, tol_phi: f64, tol_bracket: f64) -> bool {
        self.bracket_deviation < tol_bracket
            && self.leibniz_residual < tol_bracket
            && self.phi_residual < tol_phi
            && self.phi_aut_residual < tol_phi
            && self.conjugation_residual < TOL_CONJ
            && self.distributivity_residual < crate::rack::TOL_RACK
            && self.subrack_phi_residual < tol_phi
    }
}

fn phi_aut_residual(g: &FloatLeibniz, phi: &FMat) -> f64 {
    let n = g.dim();
    let apply = |v: &[f64]| (phi * DVector::from_column_slice(v)).as_slice().to_vec();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let (y, z) = (axis(n, i, 1.0), axis(n, j, 1.0));
            let lhs = apply(&g.bracket(&y, &z));
            let rhs = g.bracket(&apply(&y), &apply(&z));
            worst = worst.max(max_abs_diff(&lhs, &rhs));
        }
    }
    worst
}

/// Runs every numerical check of a linear Lie rack model.
pub fn differentiate(model: &LinearLieGroupModel, opts: &DiffOptions) -> Result<DiffSummary> {
    let estimated = tangent_bracket_fd(model, opts.step_bracket)?;
    let expected = model.expected_bracket();
    let mut r = rng(opts.seed);
    let (mut phi_residual, mut phi_aut, mut conj, mut dist, mut sub) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let d = model.module_dim();
    let k = model.lie_dim();
    for _ in 0..opts.samples {
        let x = model.random_point(&mut r)?;
        let closed = model.big_phi(&x)?;
        phi_residual = phi_residual.max(max_abs_mat_diff(&phi_fd(model, &x, opts.step_phi)?, &closed));
        phi_aut = phi_aut.max(phi_aut_residual(&expected, &closed));

        let y = model.random_point(&mut r)?;
        let z = model.random_point(&mut r)?;
        let (vdash, _) = model.digroup_ops(&x, &y)?;
        let (_, composite) = model.digroup_ops(&vdash, &model.digroup_inverse(&x)?)?;
        conj = conj.max(composite.distance(&model.rack_op(&x, &y)?));
        let lhs = model.rack_op(&x, &model.rack_op(&y, &z)?)?;
        let rhs = model.rack_op(&model.rack_op(&x, &y)?, &model.rack_op(&x, &z)?)?;
        dist = dist.max(lhs.distance(&rhs));

        let (xs, ys) = (ball_sample(&mut r, k), unit_sample(&mut r, k));
        let g = model.point(&vec![0.0; d], &xs)?;
        let ad = model.adjoint(&g.a)?;
        let via_phi = model.big_phi(&g)?.view((d, d), (k, k)).clone_owned() * DVector::from_column_slice(&ys);
        let direct = model.algebra_coords(&(&g.a * model.algebra_matrix(&ys) * inverse(&g.a)?));
        sub = sub.max(max_abs_diff(via_phi.as_slice(), &direct)).max(max_abs_diff(
            (ad * DVector::from_column_slice(&ys)).as_slice(),
            &direct,
        ));
    }
    Ok(DiffSummary {
        bracket_deviation: estimated.deviation_from(&expected),
        leibniz_residual: estimated.leibniz_residual(),
        estimated,
        expected,
        phi_residual,
        phi_aut_residual: phi_aut,
        conjugation_residual: conj,
        distributivity_residual: dist,
        subrack_phi_residual: sub,
    })
}

/// Residuals from differentiating the `exp(ad)` rack of a Leibniz algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpAdSummary {
    pub estimated: TangentBracket,
    pub expected: FloatLeibniz,
    pub bracket_deviation: f64,
    pub leibniz_residual: f64,
    pub distributivity_residual: f64,
    pub chain_residual: f64,
}

pub fn differentiate_exp_ad(g: &LeibnizAlgebra, opts: &DiffOptions) -> Result<ExpAdSummary> {
    let expected = FloatLeibniz::from_exact(g);
    let rack = ExpAdRack::new(expected.clone())?;
    let estimated = tangent_bracket_fd(&rack, opts.step_bracket)?;
    Ok(ExpAdSummary {
        bracket_deviation: estimated.deviation_from(&expected),
        leibniz_residual: estimated.leibniz_residual(),
        estimated,
        expected,
        distributivity_residual: rack.distributivity_residual(100, opts.seed)?,
        chain_residual: rack.conjugation_chain_residual(opts.samples, opts.seed.wrapping_add(1))?,
    })
}

/// Outcome of rebuilding a split Leibniz algebra from a linear Lie rack.
#[derive(Clone, Debug, PartialEq)]
pub struct RoundtripReport {
    /// Size of the matrices realizing `h`.
    pub ambient: usize,
    pub lie_dim: usize,
    pub module_dim: usize,
    /// Recovered constants against `g` in the adapted basis.
    pub residual: f64,
    pub leibniz_residual: f64,
}

impl RoundtripReport {
    pub fn passed(&self, tol_bracket: f64) -> bool {
        self.residual < tol_bracket && self.leibniz_residual < tol_bracket
    }
}

/// Faithful realization `X ↦ diag(ad X, ρ(X), N(X))` of `h`. `N` realizes
/// the part of the center acting trivially on `E`, as strictly upper
/// triangular matrices through a projection that kills `[h, h]`.
pub fn faithful_realization(split: &Splitting) -> Result<Vec<Matrix>> {
    let h = &split.lie;
    let k = h.dim();
    let d = split.rep.module_dim();
    let ads: Vec<Matrix> = (0..k).map(|i| h.ad_matrix(&crate::exactla::unit_vec(k, i))).collect::<Result<_>>()?;
    // Z = ker(ad) ∩ ker(ρ) inside h.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // Row (r, c) of the stacked system reads the (r, c) entry of Σ x_i M_i.
    let stacks: Vec<(usize, &[Matrix])> = vec![(k, ads.as_slice()), (d, split.rep.matrices())];
    for (size, mats) in stacks {
        for r in 0..size {
            for c in 0..size {
                rows.push(mats.iter().map(|m| m[(r, c)].clone()).collect());
            }
        }
    }
    let z = if rows.is_empty() {
        Subspace::full(k)
    } else {
        crate::exactla::nullspace(&Matrix::from_rows(rows)?)
    };
    let derived = {
        let mut gens = Vec::new();
        for i in 0..k {
            for j in 0..k {
                gens.push(h.basis_bracket(i, j).to_vec());
            }
        }
        Subspace::span(k, &gens)
    };
    let r = z.dim();
    if r > 0 && z.intersection(&derived).dim() > 0 {
        return Err(Error::NotRealizable(
            "the center of h meets [h, h] in elements acting trivially on E; supply a matrix realization".into(),
        ));
    }
    // Projection onto Z along a complement containing [h, h].
    let mut basis: Vec<Vec<Rational>> = z.basis().to_vec();
    let complement = {
        let sum = z.sum(&derived);
        let extra: Vec<usize> = sum.free_columns();
        let mut v = derived.basis().to_vec();
        v.extend(extra.iter().map(|&c| crate::exactla::unit_vec(k, c)));
        v
    };
    basis.extend(complement);
    let change = Matrix::from_columns(k, &basis);
    let change_inv = change.inverse().ok_or(Error::Singular)?;
    let m = k + d + if r > 0 { r + 1 } else { 0 };
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut x = Matrix::zeros(m, m);
        for a in 0..k {
            for b in 0..k {
                x[(a, b)] = ads[i][(a, b)].clone();
            }
        }
        let rho = &split.rep.matrices()[i];
        for a in 0..d {
            for b in 0..d {
                x[(k + a, k + b)] = rho[(a, b)].clone();
            }
        }
        if r > 0 {
            // Z-coordinates of e_i in the adapted basis.
            let coords = change_inv.mul_vec(&crate::exactla::unit_vec(k, i))?;
            for t in 0..r {
                x[(k + d, k + d + 1 + t)] = coords[t].clone();
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// Rebuilds `g = E ⊕ h` as the tangent algebra of a linear Lie rack and
/// compares the recovered constants with `g` in the adapted basis.
pub fn verify_split_rack_roundtrip(
    g: &LeibnizAlgebra,
    e: &Subspace,
    h: &Subspace,
    opts: &DiffOptions,
) -> Result<RoundtripReport> {
    let split = Splitting::new(g, e.clone(), h.clone())?;
    let realization = faithful_realization(&split)?;
    let m = realization.first().map_or(0, Matrix::rows);
    let model = LinearLieGroupModel::new(
        m,
        realization.iter().map(to_fmat).collect(),
        split.rep.module_dim(),
        split.rep.matrices().iter().map(to_fmat).collect(),
    )?;
    let expected = FloatLeibniz::from_exact(&g.in_basis(&split.adapted_basis())?);
    let estimated = tangent_bracket_fd(&model, opts.step_bracket)?;
    Ok(RoundtripReport {
        ambient: m,
        lie_dim: model.lie_dim(),
        module_dim: model.module_dim(),
        residual: estimated.deviation_from(&expected),
        leibniz_residual: estimated.leibniz_residual(),
    })
}
