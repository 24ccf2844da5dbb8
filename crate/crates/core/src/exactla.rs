//! Exact rational linear algebra: dense matrices, reduced row-echelon form,
//! nullspaces, linear solves and canonical subspaces.
//!
//! Everything here works over [`Rational`], an arbitrary-precision fraction
//! kept in lowest terms with a positive denominator, so equality checks are
//! exact and never need a tolerance.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar. Always normalized (lowest terms, positive denominator).
pub type Rational = num_rational::BigRational;

/// Builds the integer `n` as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

/// Formats as `"p/q"`, dropping `/1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Lossy conversion for the numerical modules.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += s * b;
        }
    }
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors (all of length `n`).
    pub fn from_columns(n: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Exact inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (red, piv) = rref(&aug);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row-echelon form and the pivot columns, in increasing order.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut lead_row = 0;
    for col in 0..a.cols {
        if lead_row == a.rows {
            break;
        }
        let Some(p) = (lead_row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if p != lead_row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, lead_row * a.cols + c);
            }
        }
        let inv = a[(lead_row, col)].recip();
        for c in col..a.cols {
            let v = &a[(lead_row, c)] * &inv;
            a[(lead_row, c)] = v;
        }
        let pivot_row = a.row(lead_row).to_vec();
        for r in 0..a.rows {
            if r == lead_row {
                continue;
            }
            let f = a[(r, col)].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..a.cols {
                if !pivot_row[c].is_zero() {
                    let v = &a[(r, c)] - &f * &pivot_row[c];
                    a[(r, c)] = v;
                }
            }
        }
        pivots.push(col);
        lead_row += 1;
    }
    (a, pivots)
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (red, pivots) = rref(m);
    let n = m.cols;
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = unit_vec(n, free);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[(r, free)].clone();
        }
        basis.push(v);
    }
    Subspace::span(n, &basis)
}

/// Some `x` with `a x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if a.rows != b.len() {
        return Err(Error::Dimension(format!(
            "system has {} equations but right-hand side has length {}",
            a.rows,
            b.len()
        )));
    }
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, a.cols)] = b[r].clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = zero_vec(a.cols);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red[(r, a.cols)].clone();
    }
    Ok(Some(x))
}

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis so
/// that equal subspaces are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|v| format!("[{}]", v.iter().map(format_rational).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "Subspace(n={}, {{{}}})", self.ambient_dim, rows.join(", "))
    }
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: (0..n).map(|i| unit_vec(n, i)).collect(), pivots: (0..n).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors of length `n`.
    pub fn span(n: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(n);
        }
        debug_assert!(vectors.iter().all(|v| v.len() == n));
        let m = Matrix { rows: vectors.len(), cols: n, data: vectors.iter().flatten().cloned().collect() };
        let (red, pivots) = rref(&m);
        let basis = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Subspace { ambient_dim: n, basis, pivots }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(n: usize, axes: &[usize]) -> Self {
        Self::span(n, &axes.iter().map(|&i| unit_vec(n, i)).collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; the matching unit vectors span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let f = -r[p].clone();
            add_scaled(&mut r, &f, b);
        }
        r
    }

    /// Coefficients of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        sum_and_intersection(self, other).expect("same ambient dimension").1
    }

    /// True iff the two subspaces are complementary in the ambient space.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        self.dim() + other.dim() == self.ambient_dim && self.sum(other).dim() == self.ambient_dim
    }
}

/// `(u + v, u ∩ v)` computed with the Zassenhaus block reduction.
pub fn sum_and_intersection(u: &Subspace, v: &Subspace) -> Result<(Subspace, Subspace)> {
    let n = u.ambient_dim;
    if v.ambient_dim != n {
        return Err(Error::Dimension(format!("ambient dimensions {n} and {} differ", v.ambient_dim)));
    }
    let rows = u.dim() + v.dim();
    let mut z = Matrix::zeros(rows, 2 * n);
    for (r, b) in u.basis.iter().enumerate() {
        for c in 0..n {
            z[(r, c)] = b[c].clone();
            z[(r, n + c)] = b[c].clone();
        }
    }
    for (r, b) in v.basis.iter().enumerate() {
        for c in 0..n {
            z[(u.dim() + r, c)] = b[c].clone();
        }
    }
    let (red, pivots) = rref(&z);
    let mut sum = Vec::new();
    let mut inter = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        let row = red.row(r);
        if p < n {
            sum.push(row[..n].to_vec());
        } else {
            inter.push(row[n..].to_vec());
        }
    }
    Ok((Subspace::span(n, &sum), Subspace::span(n, &inter)))
}

/// Largest absolute numerator·denominator size, for diagnostics.
pub fn max_abs(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}
