//! Finite-dimensional Leibniz algebras given by exact structure constants.
//!
//! Brackets follow the left convention: every left multiplication
//! `ad(x) = [x, ·]` is a derivation,
//!
//! ```text
//! [x, [y, z]] = [[x, y], z] + [y, [x, z]].
//! ```

use std::fmt;
use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{
    add_scaled, format_rational, is_zero_vec, nullspace, sub_vec, unit_vec, zero_vec, Matrix, Rational, Subspace,
};

pub mod builtins;
mod dialgebra;
mod split;
mod twist;

pub use dialgebra::{check_dialgebra, dialgebra_bracket, Dialgebra, DialgebraAxiom, DialgebraReport, DialgebraViolation};
pub use split::{demisemidirect, demisemidirect_ker_ad, find_splitting, Splitting};
pub use twist::d_twist;

/// Algebra on `Q^dim` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    names: Vec<String>,
    // brackets[i * dim + j] = [e_i, e_j]
    brackets: Vec<Vec<Rational>>,
}

impl fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LeibnizAlgebra(dim={}, basis={:?})", self.dim, self.names)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let b = self.basis_bracket(i, j);
                if !is_zero_vec(b) {
                    let v: Vec<String> = b.iter().map(format_rational).collect();
                    writeln!(f, "  [{}, {}] = ({})", self.names[i], self.names[j], v.join(", "))?;
                }
            }
        }
        Ok(())
    }
}

/// One basis triple where the Leibniz identity fails, with the residual
/// `[x,[y,z]] - [[x,y],z] - [y,[x,z]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rational>,
}

/// Empty iff the algebra is Leibniz. Violations are sorted by `(i, j, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeibnizReport {
    pub violations: Vec<JacobiViolation>,
}

impl LeibnizReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LeibnizAlgebra {
    /// Algebra with every bracket zero.
    pub fn abelian(dim: usize) -> Self {
        Self::zero_with_names((0..dim).map(|i| format!("e{}", i + 1)).collect())
    }

    pub fn zero_with_names(names: Vec<String>) -> Self {
        let dim = names.len();
        LeibnizAlgebra { dim, names, brackets: vec![zero_vec(dim); dim * dim] }
    }

    /// From a dense tensor `c[i][j][k]`.
    pub fn from_constants(names: Vec<String>, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let dim = names.len();
        if c.len() != dim || c.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::Dimension(format!("structure constants must have shape {dim}x{dim}x{dim}")));
        }
        Ok(LeibnizAlgebra { dim, names, brackets: c.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Dimension(format!("{} names for dimension {}", names.len(), self.dim)));
        }
        self.names = names;
        Ok(self)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.brackets[i * self.dim + j]
    }

    pub fn set_basis_bracket(&mut self, i: usize, j: usize, value: Vec<Rational>) -> Result<()> {
        if value.len() != self.dim || i >= self.dim || j >= self.dim {
            return Err(Error::Dimension("bracket entry out of range".into()));
        }
        self.brackets[i * self.dim + j] = value;
        Ok(())
    }

    /// Structure constant `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.brackets[i * self.dim + j][k]
    }

    pub fn constants_equal(&self, other: &LeibnizAlgebra) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Dimension(format!("vector of length {} in algebra of dimension {}", v.len(), self.dim)));
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// `[e_i, v]`.
    fn left_basis(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (j, vj) in v.iter().enumerate() {
            add_scaled(&mut out, vj, self.basis_bracket(i, j));
        }
        out
    }

    /// `[v, e_j]`.
    fn right_basis(&self, v: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, vi) in v.iter().enumerate() {
            add_scaled(&mut out, vi, self.basis_bracket(i, j));
        }
        out
    }

    /// Checks the left Leibniz identity on every basis triple.
    pub fn check_leibniz(&self) -> LeibnizReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let xy = self.basis_bracket(i, j);
                for k in 0..n {
                    let lhs = self.left_basis(i, self.basis_bracket(j, k));
                    let a = self.right_basis(xy, k);
                    let b = self.left_basis(j, self.basis_bracket(i, k));
                    let residual: Vec<Rational> =
                        lhs.iter().zip(&a).zip(&b).map(|((l, a), b)| l - a - b).collect();
                    if !is_zero_vec(&residual) {
                        violations.push(JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        LeibnizReport { violations }
    }

    pub fn is_leibniz(&self) -> bool {
        self.check_leibniz().passed()
    }

    fn require_leibniz(&self) -> Result<()> {
        let report = self.check_leibniz();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::NotLeibniz(report.violations.len()))
        }
    }

    /// First pair `(i, j)` where `[e_i, e_j] != -[e_j, e_i]`, if any.
    pub fn skew_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_skew(&self) -> bool {
        self.skew_witness().is_none()
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.right_basis(x, j)).collect();
        Ok(Matrix::from_columns(self.dim, &cols))
    }

    /// Basis pairs `(i, j)` where `d[e_i, e_j] != [d e_i, e_j] + [e_i, d e_j]`.
    pub fn derivation_violations(&self, d: &Matrix) -> Result<Vec<(usize, usize)>> {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return Err(Error::Dimension(format!("derivation must be {n}x{n}")));
        }
        let images: Vec<Vec<Rational>> = (0..n).map(|i| d.column(i)).collect();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = d.mul_vec(self.basis_bracket(i, j))?;
                let mut rhs = self.right_basis(&images[i], j);
                let second = self.left_basis(i, &images[j]);
                for (r, s) in rhs.iter_mut().zip(&second) {
                    *r += s;
                }
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        Ok(bad)
    }

    /// Smallest ideal containing the given vectors.
    pub fn ideal_generated_by(&self, generators: &[Vec<Rational>]) -> Subspace {
        let mut current = Subspace::span(self.dim, generators);
        loop {
            let mut vectors = current.basis().to_vec();
            for b in current.basis() {
                for k in 0..self.dim {
                    vectors.push(self.left_basis(k, b));
                    vectors.push(self.right_basis(b, k));
                }
            }
            let next = Subspace::span(self.dim, &vectors);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// The ideal generated by all squares `[x, x]`.
    ///
    /// Squares of sums span the symmetric part of the bracket, so the
    /// generators are `[e_i, e_i]` and `[e_i, e_j] + [e_j, e_i]`.
    pub fn squares_ideal(&self) -> Result<Subspace> {
        self.require_leibniz()?;
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut v = self.basis_bracket(i, j).to_vec();
                if i != j {
                    for (a, b) in v.iter_mut().zip(self.basis_bracket(j, i)) {
                        *a += b;
                    }
                }
                if !is_zero_vec(&v) {
                    gens.push(v);
                }
            }
        }
        Ok(self.ideal_generated_by(&gens))
    }

    /// `{x : [x, y] = 0 for all y}`.
    pub fn ker_ad(&self) -> Subspace {
        // Rows indexed by (j, k): coefficient of x_i in [x, e_j]_k.
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    m[(j * n + k, i)] = c.clone();
                }
            }
        }
        nullspace(&m)
    }

    /// True iff `[g, v] ⊆ v` and `[v, g] ⊆ v`.
    pub fn is_ideal(&self, v: &Subspace) -> Result<bool> {
        if v.ambient_dim() != self.dim {
            return Err(Error::Dimension("subspace lives in a different ambient space".into()));
        }
        Ok(v.basis().iter().all(|b| {
            (0..self.dim).all(|k| v.contains(&self.left_basis(k, b)) && v.contains(&self.right_basis(b, k)))
        }))
    }

    /// True iff `[v, v] ⊆ v`.
    pub fn is_subalgebra(&self, v: &Subspace) -> bool {
        v.basis().iter().all(|a| v.basis().iter().all(|b| v.contains(&self.bracket_unchecked(a, b))))
    }

    /// Quotient by an ideal, on the basis of unit vectors at the ideal's
    /// free (non-pivot) coordinates. The returned matrix is the projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let free = ideal.free_columns();
        let proj_of = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| proj_of(&unit_vec(self.dim, j))).collect();
        let projection = Matrix::from_columns(free.len(), &cols);
        let names = free.iter().map(|&c| self.names[c].clone()).collect();
        let mut out = LeibnizAlgebra::zero_with_names(names);
        for (a, &ca) in free.iter().enumerate() {
            for (b, &cb) in free.iter().enumerate() {
                out.brackets[a * free.len() + b] = proj_of(self.basis_bracket(ca, cb));
            }
        }
        Ok((out, projection))
    }

    /// Structure constants with respect to a new basis (given as vectors in
    /// the current coordinates).
    pub fn in_basis(&self, basis: &[Vec<Rational>]) -> Result<LeibnizAlgebra> {
        let n = self.dim;
        if basis.len() != n || basis.iter().any(|b| b.len() != n) {
            return Err(Error::Dimension("new basis must have dim vectors of length dim".into()));
        }
        let p = Matrix::from_columns(n, basis);
        let pinv = p.inverse().ok_or(Error::Singular)?;
        let mut out = LeibnizAlgebra::abelian(n);
        for i in 0..n {
            for j in 0..n {
                out.brackets[i * n + j] = pinv.mul_vec(&self.bracket_unchecked(&basis[i], &basis[j]))?;
            }
        }
        Ok(out)
    }

    /// Restriction to a subalgebra, in the subspace's stored basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<LeibnizAlgebra> {
        let k = sub.dim();
        let mut out = LeibnizAlgebra::abelian(k);
        for (a, x) in sub.basis().iter().enumerate() {
            for (b, y) in sub.basis().iter().enumerate() {
                let br = self.bracket_unchecked(x, y);
                out.brackets[a * k + b] = sub
                    .coordinates(&br)
                    .ok_or_else(|| Error::Dimension("subspace is not closed under the bracket".into()))?;
            }
        }
        Ok(out)
    }

    /// Entrywise difference of two algebras' structure constants, if the
    /// dimensions agree. Used for diagnostics.
    pub fn constant_difference(&self, other: &LeibnizAlgebra) -> Option<Vec<(usize, usize, Vec<Rational>)>> {
        if self.dim != other.dim {
            return None;
        }
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = sub_vec(self.basis_bracket(i, j), other.basis_bracket(i, j));
                if !is_zero_vec(&d) {
                    out.push((i, j, d));
                }
            }
        }
        Some(out)
    }

    /// Direct sum `self ⊕ other` with zero mixed brackets.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        let (n, m) = (self.dim, other.dim);
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let mut out = LeibnizAlgebra::zero_with_names(names);
        let t = n + m;
        for i in 0..n {
            for j in 0..n {
                let mut v = self.basis_bracket(i, j).to_vec();
                v.extend(zero_vec(m));
                out.brackets[i * t + j] = v;
            }
        }
        for i in 0..m {
            for j in 0..m {
                let mut v = zero_vec(n);
                v.extend(other.basis_bracket(i, j).iter().cloned());
                out.brackets[(n + i) * t + n + j] = v;
            }
        }
        out
    }
}

/// A Leibniz algebra whose bracket is skew-symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra(LeibnizAlgebra);

impl LieAlgebra {
    pub fn new(g: LeibnizAlgebra) -> Result<Self> {
        if let Some((i, j)) = g.skew_witness() {
            return Err(Error::NotLie(format!("[e{}, e{}] + [e{}, e{}] != 0", i + 1, j + 1, j + 1, i + 1)));
        }
        g.require_leibniz()?;
        Ok(LieAlgebra(g))
    }

    pub fn into_inner(self) -> LeibnizAlgebra {
        self.0
    }

    /// `{x : [x, y] = 0 for all y}`.
    pub fn center(&self) -> Subspace {
        self.0.ker_ad()
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        LieAlgebra(self.0.direct_sum(&other.0))
    }
}

impl Deref for LieAlgebra {
    type Target = LeibnizAlgebra;
    fn deref(&self) -> &LeibnizAlgebra {
        &self.0
    }
}

/// Center of a Lie algebra.
pub fn lie_center(h: &LieAlgebra) -> Subspace {
    h.center()
}

/// Matrices `rho[i]` giving the action of basis element `i` on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module_dim: usize,
    rho: Vec<Matrix>,
}

impl Representation {
    pub fn new(module_dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        if rho.iter().any(|m| m.rows() != module_dim || m.cols() != module_dim) {
            return Err(Error::Dimension(format!("representation matrices must be {module_dim}x{module_dim}")));
        }
        Ok(Representation { module_dim, rho })
    }

    /// The zero action of an algebra of dimension `algebra_dim`.
    pub fn trivial(algebra_dim: usize, module_dim: usize) -> Self {
        Representation { module_dim, rho: vec![Matrix::zeros(module_dim, module_dim); algebra_dim] }
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// Action of the algebra element with coordinates `x`.
    pub fn action(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (xi, r) in x.iter().zip(&self.rho) {
            if !xi.is_zero() {
                for a in 0..self.module_dim {
                    for b in 0..self.module_dim {
                        let v = &m[(a, b)] + xi * &r[(a, b)];
                        m[(a, b)] = v;
                    }
                }
            }
        }
        m
    }

    /// Basis pairs where `rho([e_i, e_j]) != [rho(e_i), rho(e_j)]`.
    pub fn violations(&self, h: &LeibnizAlgebra) -> Result<Vec<(usize, usize)>> {
        if self.rho.len() != h.dim() {
            return Err(Error::Representation(format!(
                "{} matrices for an algebra of dimension {}",
                self.rho.len(),
                h.dim()
            )));
        }
        let mut bad = Vec::new();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = self.action(h.basis_bracket(i, j));
                if lhs != self.rho[i].commutator(&self.rho[j])? {
                    bad.push((i, j));
                }
            }
        }
        Ok(bad)
    }

    pub fn validate(&self, h: &LeibnizAlgebra) -> Result<()> {
        match self.violations(h)?.first() {
            None => Ok(()),
            Some(&(i, j)) => Err(Error::Representation(format!(
                "rho([e{}, e{}]) != [rho(e{}), rho(e{})]",
                i + 1,
                j + 1,
                i + 1,
                j + 1
            ))),
        }
    }
}

/// `sum_k x_k e_k` helper for building vectors by basis index.
pub fn combination(dim: usize, terms: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = zero_vec(dim);
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}
