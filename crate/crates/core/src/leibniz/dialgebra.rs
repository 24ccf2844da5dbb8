//! Dialgebras: two associative products linked by three compatibility
//! axioms, and the Leibniz bracket `x ⊢ y - y ⊣ x` they induce.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{add_scaled, is_zero_vec, sub_vec, zero_vec, Rational};

use super::LeibnizAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DialgebraAxiom {
    /// `(x ⊢ y) ⊢ z = x ⊢ (y ⊢ z)`
    AssocVdash,
    /// `(x ⊣ y) ⊣ z = x ⊣ (y ⊣ z)`
    AssocDashv,
    /// `x ⊢ (y ⊣ z) = (x ⊢ y) ⊣ z`
    D1,
    /// `x ⊣ (y ⊢ z) = x ⊣ (y ⊣ z)`
    D2,
    /// `(x ⊣ y) ⊢ z = (x ⊢ y) ⊢ z`
    D3,
}

impl DialgebraAxiom {
    pub const ALL: [DialgebraAxiom; 5] = [Self::AssocVdash, Self::AssocDashv, Self::D1, Self::D2, Self::D3];

    pub fn label(self) -> &'static str {
        match self {
            Self::AssocVdash => "assoc(⊢)",
            Self::AssocDashv => "assoc(⊣)",
            Self::D1 => "D1",
            Self::D2 => "D2",
            Self::D3 => "D3",
        }
    }
}

impl fmt::Display for DialgebraAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DialgebraViolation {
    pub axiom: DialgebraAxiom,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rational>,
}

/// Violations sorted by axiom, then basis triple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DialgebraReport {
    pub violations: Vec<DialgebraViolation>,
}

impl DialgebraReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failing_axioms(&self) -> Vec<DialgebraAxiom> {
        let mut v: Vec<_> = self.violations.iter().map(|x| x.axiom).collect();
        v.dedup();
        v
    }
}

/// Two bilinear products on `Q^dim`, each stored as structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dialgebra {
    dim: usize,
    names: Vec<String>,
    vdash: Vec<Vec<Rational>>,
    dashv: Vec<Vec<Rational>>,
}

impl Dialgebra {
    pub fn zero_with_names(names: Vec<String>) -> Self {
        let dim = names.len();
        Dialgebra { dim, names, vdash: vec![zero_vec(dim); dim * dim], dashv: vec![zero_vec(dim); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vdash_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.vdash[i * self.dim + j]
    }

    pub fn dashv_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.dashv[i * self.dim + j]
    }

    pub fn set_vdash(&mut self, i: usize, j: usize, v: Vec<Rational>) -> Result<()> {
        self.check_entry(i, j, &v)?;
        self.vdash[i * self.dim + j] = v;
        Ok(())
    }

    pub fn set_dashv(&mut self, i: usize, j: usize, v: Vec<Rational>) -> Result<()> {
        self.check_entry(i, j, &v)?;
        self.dashv[i * self.dim + j] = v;
        Ok(())
    }

    fn check_entry(&self, i: usize, j: usize, v: &[Rational]) -> Result<()> {
        if i >= self.dim || j >= self.dim || v.len() != self.dim {
            return Err(Error::Dimension("product entry out of range".into()));
        }
        Ok(())
    }

    fn product(table: &[Vec<Rational>], dim: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(dim);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if !num_traits::Zero::is_zero(yj) {
                    add_scaled(&mut out, &(xi * yj), &table[i * dim + j]);
                }
            }
        }
        out
    }

    pub fn vdash(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        Self::product(&self.vdash, self.dim, x, y)
    }

    pub fn dashv(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        Self::product(&self.dashv, self.dim, x, y)
    }
}

/// Checks associativity of both products and D1–D3 on every basis triple.
pub fn check_dialgebra(d: &Dialgebra) -> DialgebraReport {
    let n = d.dim;
    let e = |i: usize| crate::exactla::unit_vec(n, i);
    let mut violations = Vec::new();
    for axiom in DialgebraAxiom::ALL {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let (lhs, rhs) = match axiom {
                        DialgebraAxiom::AssocVdash => (d.vdash(&d.vdash(&x, &y), &z), d.vdash(&x, &d.vdash(&y, &z))),
                        DialgebraAxiom::AssocDashv => (d.dashv(&d.dashv(&x, &y), &z), d.dashv(&x, &d.dashv(&y, &z))),
                        DialgebraAxiom::D1 => (d.vdash(&x, &d.dashv(&y, &z)), d.dashv(&d.vdash(&x, &y), &z)),
                        DialgebraAxiom::D2 => (d.dashv(&x, &d.vdash(&y, &z)), d.dashv(&x, &d.dashv(&y, &z))),
                        DialgebraAxiom::D3 => (d.vdash(&d.dashv(&x, &y), &z), d.vdash(&d.vdash(&x, &y), &z)),
                    };
                    let residual = sub_vec(&lhs, &rhs);
                    if !is_zero_vec(&residual) {
                        violations.push(DialgebraViolation { axiom, i, j, k, residual });
                    }
                }
            }
        }
    }
    DialgebraReport { violations }
}

/// The Leibniz algebra with `[x, y] = x ⊢ y - y ⊣ x`.
pub fn dialgebra_bracket(d: &Dialgebra) -> Result<LeibnizAlgebra> {
    let report = check_dialgebra(d);
    if let Some(v) = report.violations.first() {
        return Err(Error::Dialgebra(format!(
            "{} fails on (e{}, e{}, e{}) ({} violation(s))",
            v.axiom,
            v.i + 1,
            v.j + 1,
            v.k + 1,
            report.violations.len()
        )));
    }
    let n = d.dim;
    let mut g = LeibnizAlgebra::zero_with_names(d.names.clone());
    for i in 0..n {
        for j in 0..n {
            g.set_basis_bracket(i, j, sub_vec(d.vdash_basis(i, j), d.dashv_basis(j, i)))?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::super::builtins::*;
    use super::*;
    use crate::exactla::q;

    #[test]
    fn associative_algebra_is_a_dialgebra_with_zero_bracket() {
        // Polynomials mod x^2: commutative and associative.
        let mut d = Dialgebra::zero_with_names(vec!["1".into(), "x".into()]);
        let one = vec![q(1), q(0)];
        let x = vec![q(0), q(1)];
        for (i, j, v) in [(0, 0, one.clone()), (0, 1, x.clone()), (1, 0, x.clone())] {
            d.set_vdash(i, j, v.clone()).unwrap();
            d.set_dashv(i, j, v).unwrap();
        }
        assert!(check_dialgebra(&d).passed());
        let g = dialgebra_bracket(&d).unwrap();
        assert!(g.constants_equal(&LeibnizAlgebra::abelian(2)));
    }

    #[test]
    fn example_2_3_passes_and_gives_demisemidirect() {
        for n in [1, 2] {
            let d = example_2_3(n);
            assert!(check_dialgebra(&d).passed(), "n = {n}");
            let g = dialgebra_bracket(&d).unwrap();
            assert!(g.is_leibniz());
            let expected = gl_standard_demisemidirect(n);
            assert!(g.constants_equal(&expected), "n = {n}");
        }
    }

    #[test]
    fn example_2_3_rank_one_constants() {
        // V = Q, End(V) = Q: basis (v, X). [X, v] = v and every other bracket is 0.
        let g = dialgebra_bracket(&example_2_3(1)).unwrap();
        assert_eq!(g.basis_bracket(1, 0), &[q(1), q(0)]);
        assert_eq!(g.basis_bracket(0, 1), &[q(0), q(0)]);
        assert_eq!(g.basis_bracket(1, 1), &[q(0), q(0)]);
        assert_eq!(g.basis_bracket(0, 0), &[q(0), q(0)]);
    }

    #[test]
    fn opposite_right_product_fails_d1() {
        let d = example_2_3_opposite_dashv(2);
        let report = check_dialgebra(&d);
        assert!(report.failing_axioms().contains(&DialgebraAxiom::D1));
        assert!(dialgebra_bracket(&d).is_err());
    }
}
