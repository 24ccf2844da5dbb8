//! Demisemidirect products and the splitting search.
//!
//! If `S ⊆ E ⊆ ker(ad)` and `σ0` is any linear section of `g → g/E`, every
//! other section is `σ0 + τ` with `τ: g/E → E`. Because `E` kills every left
//! bracket, the homomorphism condition `σ[a, b] = [σa, σb]` is linear in `τ`,
//! so a complementary subalgebra exists iff one linear system is consistent.

use crate::error::{Error, Result};
use crate::exactla::{add_scaled, nullspace, solve, unit_vec, zero_vec, Matrix, Rational, Subspace};

use super::{LeibnizAlgebra, LieAlgebra, Representation};

/// Bracket `[u + X, v + Y] = X v + [X, Y]` on `V ⊕ h`, module coordinates
/// first.
pub fn demisemidirect(h: &LieAlgebra, rep: &Representation) -> Result<LeibnizAlgebra> {
    rep.validate(h)?;
    let d = rep.module_dim();
    let k = h.dim();
    let n = d + k;
    let mut names: Vec<String> = (0..d).map(|i| format!("v{}", i + 1)).collect();
    names.extend(h.names().iter().cloned());
    let mut g = LeibnizAlgebra::zero_with_names(names);
    for a in 0..k {
        let rho = &rep.matrices()[a];
        for b in 0..d {
            let mut v = rho.column(b);
            v.extend(zero_vec(k));
            g.set_basis_bracket(d + a, b, v)?;
        }
        for b in 0..k {
            let mut v = zero_vec(d);
            v.extend(h.basis_bracket(a, b).iter().cloned());
            g.set_basis_bracket(d + a, d + b, v)?;
        }
    }
    debug_assert_eq!(g.dim(), n);
    Ok(g)
}

/// `V ⊕ (ann(V) ∩ Z(h))` inside `V ⊕ h`, computed from `(h, ρ)` alone.
/// Tests compare it with [`LeibnizAlgebra::ker_ad`] of the product.
pub fn demisemidirect_ker_ad(h: &LieAlgebra, rep: &Representation) -> Result<Subspace> {
    rep.validate(h)?;
    let d = rep.module_dim();
    let k = h.dim();
    // X = Σ c_a e_a with ρ(X) = 0 and [X, e_b] = 0 for every b.
    let mut m = Matrix::zeros(d * d + k * k, k);
    for a in 0..k {
        for (idx, val) in rep.matrices()[a].entries().iter().enumerate() {
            m[(idx, a)] = val.clone();
        }
        for b in 0..k {
            for (c, val) in h.basis_bracket(a, b).iter().enumerate() {
                m[(d * d + b * k + c, a)] = val.clone();
            }
        }
    }
    let mut gens: Vec<Vec<Rational>> = (0..d).map(|i| unit_vec(d + k, i)).collect();
    for x in nullspace(&m).basis() {
        let mut v = zero_vec(d);
        v.extend(x.iter().cloned());
        gens.push(v);
    }
    Ok(Subspace::span(d + k, &gens))
}

fn check_sandwich(g: &LeibnizAlgebra, e: &Subspace) -> Result<()> {
    if !g.is_ideal(e)? {
        return Err(Error::SplitPrecondition("E is not an ideal".into()));
    }
    let squares = g.squares_ideal()?;
    if !squares.is_subspace_of(e) {
        return Err(Error::SplitPrecondition("squares ideal S is not contained in E".into()));
    }
    if !e.is_subspace_of(&g.ker_ad()) {
        return Err(Error::SplitPrecondition("E is not contained in ker(ad) (S ⊆ E holds)".into()));
    }
    Ok(())
}

/// A Lie subalgebra `h` with `g = E ⊕ h`, or `None` if there is none.
///
/// Requires `E` to be an ideal with `S ⊆ E ⊆ ker(ad)`; the error names the
/// inclusion that fails.
pub fn find_splitting(g: &LeibnizAlgebra, e: &Subspace) -> Result<Option<Subspace>> {
    check_sandwich(g, e)?;
    let n = g.dim();
    let free = e.free_columns();
    let q = free.len();
    let r = e.dim();
    if q == 0 {
        return Ok(Some(Subspace::zero(n)));
    }
    // Quotient brackets in the basis of free unit vectors.
    let proj = |v: &[Rational]| -> Vec<Rational> {
        let red = e.reduce(v);
        free.iter().map(|&c| red[c].clone()).collect()
    };
    let sigma0: Vec<Vec<Rational>> = free.iter().map(|&c| unit_vec(n, c)).collect();
    // Unknown t[c][s] at column c * r + s: tau(ē_c) = Σ_s t[c][s] b_s.
    let unknowns = q * r;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    // [σ0 ē_a, b_s] for all a, s.
    let act: Vec<Vec<Vec<Rational>>> = sigma0
        .iter()
        .map(|x| e.basis().iter().map(|b| g.bracket_unchecked(x, b)).collect())
        .collect();
    for a in 0..q {
        for b in 0..q {
            let top = g.bracket_unchecked(&sigma0[a], &sigma0[b]);
            let k = proj(&top);
            // Σ_c k_c σ0(ē_c) + Σ_c k_c τ(ē_c) = top + [σ0 ē_a, τ(ē_b)]
            let mut target = top.clone();
            for (c, kc) in k.iter().enumerate() {
                let neg = -kc.clone();
                add_scaled(&mut target, &neg, &sigma0[c]);
            }
            let mut block = vec![zero_vec(unknowns); n];
            for (c, kc) in k.iter().enumerate() {
                for (s, bs) in e.basis().iter().enumerate() {
                    for (row, val) in block.iter_mut().zip(bs) {
                        row[c * r + s] += kc * val;
                    }
                }
            }
            for s in 0..r {
                for (row, val) in block.iter_mut().zip(&act[a][s]) {
                    row[b * r + s] -= val;
                }
            }
            rows.extend(block);
            rhs.extend(target);
        }
    }
    let system = Matrix::from_rows(rows)?;
    let Some(t) = solve(&system, &rhs)? else {
        return Ok(None);
    };
    let complement: Vec<Vec<Rational>> = (0..q)
        .map(|c| {
            let mut v = sigma0[c].clone();
            for (s, bs) in e.basis().iter().enumerate() {
                add_scaled(&mut v, &t[c * r + s], bs);
            }
            v
        })
        .collect();
    let h = Subspace::span(n, &complement);
    debug_assert!(g.is_subalgebra(&h));
    Ok(Some(h))
}

/// A verified splitting `g = E ⊕ h` together with the data needed to rebuild
/// `g` as a demisemidirect product.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub ideal: Subspace,
    pub complement: Subspace,
    /// Bracket of `h` in the complement's stored basis.
    pub lie: LieAlgebra,
    /// Action of `h` on `E` in the ideal's stored basis.
    pub rep: Representation,
}

impl Splitting {
    /// Checks every splitting condition and extracts `(h, E)` as a Lie
    /// algebra and a module.
    pub fn new(g: &LeibnizAlgebra, ideal: Subspace, complement: Subspace) -> Result<Self> {
        check_sandwich(g, &ideal)?;
        if !ideal.is_complement_of(&complement) {
            return Err(Error::SplitPrecondition("E and h are not complementary".into()));
        }
        if !g.is_subalgebra(&complement) {
            return Err(Error::SplitPrecondition("h is not closed under the bracket".into()));
        }
        let lie = LieAlgebra::new(g.restrict(&complement)?)?;
        let d = ideal.dim();
        let mut rho = Vec::with_capacity(complement.dim());
        for x in complement.basis() {
            let cols: Vec<Vec<Rational>> = ideal
                .basis()
                .iter()
                .map(|u| {
                    ideal
                        .coordinates(&g.bracket_unchecked(x, u))
                        .ok_or_else(|| Error::SplitPrecondition("[h, E] leaves E".into()))
                })
                .collect::<Result<_>>()?;
            rho.push(Matrix::from_columns(d, &cols));
        }
        let rep = Representation::new(d, rho)?;
        Ok(Splitting { ideal, complement, lie, rep })
    }

    /// Basis `E` first, then `h`.
    pub fn adapted_basis(&self) -> Vec<Vec<Rational>> {
        self.ideal.basis().iter().chain(self.complement.basis()).cloned().collect()
    }

    pub fn demisemidirect(&self) -> Result<LeibnizAlgebra> {
        demisemidirect(&self.lie, &self.rep)
    }

    /// True iff rebuilding the demisemidirect product from `(h, E)`
    /// reproduces `g` in the adapted basis exactly.
    pub fn rebuild_matches(&self, g: &LeibnizAlgebra) -> Result<bool> {
        let adapted = g.in_basis(&self.adapted_basis())?;
        Ok(self.demisemidirect()?.constants_equal(&adapted))
    }
}

#[cfg(test)]
mod tests {
    use super::super::builtins::*;
    use super::*;

    #[test]
    fn ker_ad_formula_matches_nullspace() {
        let h1 = LieAlgebra::new(example_2_1(2).restrict(&Subspace::coordinate(10, &(2..10).collect::<Vec<_>>())).unwrap()).unwrap();
        let mut rho1 = vec![Matrix::zeros(2, 2); 4];
        rho1.extend(gl_standard_rep(2).matrices().iter().cloned());
        let cases = [
            (strictly_upper_2(), strictly_upper_2_rep()),
            (so3(), Representation::new(3, so3_matrices()).unwrap()),
            (so3(), Representation::trivial(3, 2)),
            (heisenberg(), Representation::trivial(3, 1)),
            (gl(2), gl_standard_rep(2)),
            (h1, Representation::new(2, rho1).unwrap()),
        ];
        for (h, rep) in cases {
            let g = demisemidirect(&h, &rep).unwrap();
            assert_eq!(demisemidirect_ker_ad(&h, &rep).unwrap(), g.ker_ad());
        }
    }

    #[test]
    fn trivial_rep_gives_direct_sum() {
        let h = so3();
        let g = demisemidirect(&h, &Representation::trivial(3, 2)).unwrap();
        let expected = LeibnizAlgebra::abelian(2).direct_sum(&h);
        assert!(g.constants_equal(&expected));
    }

    #[test]
    fn strictly_upper_on_plane_is_example_2_2() {
        let g = demisemidirect(&strictly_upper_2(), &strictly_upper_2_rep()).unwrap();
        assert!(g.constants_equal(&example_2_2()));
        assert!(g.is_leibniz());
    }

    #[test]
    fn so3_squares_ideal_is_the_module() {
        let g = so3_standard_demisemidirect();
        assert!(g.is_leibniz());
        assert_eq!(g.squares_ideal().unwrap(), Subspace::coordinate(6, &[0, 1, 2]));
    }

    #[test]
    fn invalid_representation_rejected() {
        let mut m = so3_matrices();
        m.swap(0, 1);
        let rep = Representation::new(3, m).unwrap();
        assert!(matches!(demisemidirect(&so3(), &rep), Err(Error::Representation(_))));
    }

    #[test]
    fn example_2_2_splits_over_ker_ad_only() {
        let g = example_2_2();
        let k = g.ker_ad();
        let h = find_splitting(&g, &k).unwrap().expect("splits over ker(ad)");
        assert_eq!(h, Subspace::coordinate(3, &[2]));
        let s = g.squares_ideal().unwrap();
        assert_eq!(find_splitting(&g, &s).unwrap(), None);
    }

    #[test]
    fn example_2_1_splits_over_both() {
        let g = example_2_1(2);
        let s = g.squares_ideal().unwrap();
        let hs = find_splitting(&g, &s).unwrap().unwrap();
        assert_eq!(hs.dim(), 8);
        let k = g.ker_ad();
        let hk = find_splitting(&g, &k).unwrap().unwrap();
        assert_eq!(hk.dim(), 7);
        for (e, h) in [(s, hs), (k, hk)] {
            let sp = Splitting::new(&g, e, h).unwrap();
            assert!(sp.rebuild_matches(&g).unwrap());
            assert!(g.is_subalgebra(&sp.complement));
        }
    }

    #[test]
    fn precondition_violations_are_named() {
        let g = example_2_2();
        let err = find_splitting(&g, &Subspace::coordinate(3, &[2])).unwrap_err();
        assert!(err.to_string().contains("not an ideal"));
        let err = find_splitting(&g, &Subspace::zero(3)).unwrap_err();
        assert!(err.to_string().contains("S is not contained"));
        let err = find_splitting(&g, &Subspace::full(3)).unwrap_err();
        assert!(err.to_string().contains("ker(ad)"));
    }

    #[test]
    fn dtwist_heisenberg_does_not_split() {
        let g = heisenberg_dtwist();
        let s = g.squares_ideal().unwrap();
        let k = g.ker_ad();
        assert_eq!(s, Subspace::coordinate(3, &[2]));
        assert_eq!(k, Subspace::coordinate(3, &[0, 2]));
        // Ideals between S and ker(ad) have dimension 1 or 2, so S and ker(ad)
        // are the only candidates.
        assert_eq!(find_splitting(&g, &s).unwrap(), None);
        assert_eq!(find_splitting(&g, &k).unwrap(), None);
    }

    #[test]
    fn lie_algebra_splits_trivially_over_zero() {
        let g = so3().into_inner();
        let h = find_splitting(&g, &Subspace::zero(3)).unwrap().unwrap();
        assert_eq!(h, Subspace::full(3));
    }

    #[test]
    fn splitting_rejects_non_complement() {
        let g = example_2_2();
        let k = g.ker_ad();
        let err = Splitting::new(&g, k, Subspace::coordinate(3, &[0])).unwrap_err();
        assert!(matches!(err, Error::SplitPrecondition(_)));
    }
}
