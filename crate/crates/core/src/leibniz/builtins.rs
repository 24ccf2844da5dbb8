//! Named algebras used by tests, the acceptance suite and the CLI.

use crate::exactla::{q, unit_vec, zero_vec, Matrix, Rational};

use super::{d_twist, demisemidirect, Dialgebra, LeibnizAlgebra, LieAlgebra, Representation};

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Coordinates of a matrix in the basis `E_ab` (row-major).
fn matrix_coords(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn elementary(n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(a, b)] = q(1);
    m
}

/// Lie algebra spanned by the given matrices, which must be closed under the
/// commutator and linearly independent. Coordinates are recovered exactly.
pub fn matrix_lie_algebra(basis_names: Vec<String>, basis: &[Matrix]) -> crate::Result<LieAlgebra> {
    let k = basis.len();
    let flat: Vec<Vec<Rational>> = basis.iter().map(matrix_coords).collect();
    let span = crate::exactla::Subspace::span(flat.first().map_or(0, Vec::len), &flat);
    if span.dim() != k {
        return Err(crate::Error::Dimension("matrix basis is linearly dependent".into()));
    }
    // Express vectors of the span in terms of `basis` via the echelon basis.
    let m = Matrix::from_columns(flat.first().map_or(0, Vec::len), &flat);
    let mut g = LeibnizAlgebra::zero_with_names(basis_names);
    for i in 0..k {
        for j in 0..k {
            let c = matrix_coords(&basis[i].commutator(&basis[j])?);
            let x = crate::exactla::solve(&m, &c)?
                .ok_or_else(|| crate::Error::Dimension("matrix basis is not closed under commutator".into()))?;
            g.set_basis_bracket(i, j, x)?;
        }
    }
    LieAlgebra::new(g)
}

/// `so(3)` generators `L_x, L_y, L_z` with `(L_i)_{jk} = -ε_{ijk}`.
pub fn so3_matrices() -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
        Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
    ]
}

/// `[L_x, L_y] = L_z` and cyclic.
pub fn so3() -> LieAlgebra {
    matrix_lie_algebra(vec!["Lx".into(), "Ly".into(), "Lz".into()], &so3_matrices()).expect("so(3)")
}

/// `so(3) ⋉ Q^3` as a demisemidirect product, basis `(v1, v2, v3, Lx, Ly, Lz)`.
pub fn so3_standard_demisemidirect() -> LeibnizAlgebra {
    demisemidirect(&so3(), &Representation::new(3, so3_matrices()).unwrap()).expect("valid representation")
}

/// Heisenberg algebra `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    let mut g = LeibnizAlgebra::zero_with_names(vec!["x".into(), "y".into(), "z".into()]);
    g.set_basis_bracket(0, 1, unit_vec(3, 2)).unwrap();
    g.set_basis_bracket(1, 0, vec![q(0), q(0), q(-1)]).unwrap();
    LieAlgebra::new(g).expect("Heisenberg")
}

/// The derivation `y ↦ x` of the Heisenberg algebra (`x, z ↦ 0`).
pub fn heisenberg_y_to_x() -> Matrix {
    let mut d = Matrix::zeros(3, 3);
    d[(0, 1)] = q(1);
    d
}

/// Heisenberg algebra twisted by `y ↦ x`; the only nonzero bracket is
/// `[y, y] = -z`.
pub fn heisenberg_dtwist() -> LeibnizAlgebra {
    d_twist(&heisenberg(), &heisenberg_y_to_x()).expect("square-zero derivation")
}

/// One-dimensional Lie algebra spanned by `E12` in `gl(2)`.
pub fn strictly_upper_2() -> LieAlgebra {
    LieAlgebra::new(LeibnizAlgebra::zero_with_names(vec!["n".into()])).unwrap()
}

pub fn strictly_upper_2_rep() -> Representation {
    Representation::new(2, vec![elementary(2, 0, 1)]).unwrap()
}

/// `Q^2 ⊕ span{E12}` with the only nonzero bracket `[e3, e2] = e1`.
pub fn example_2_2() -> LeibnizAlgebra {
    demisemidirect(&strictly_upper_2(), &strictly_upper_2_rep()).unwrap()
}

/// `gl(n)` in the basis `E_ab`, row-major.
pub fn gl(n: usize) -> LieAlgebra {
    let basis: Vec<Matrix> = (0..n).flat_map(|a| (0..n).map(move |b| elementary(n, a, b))).collect();
    let labels = (0..n).flat_map(|a| (0..n).map(move |b| format!("E{}{}", a + 1, b + 1))).collect();
    matrix_lie_algebra(labels, &basis).expect("gl(n)")
}

pub fn gl_standard_rep(n: usize) -> Representation {
    Representation::new(n, (0..n).flat_map(|a| (0..n).map(move |b| elementary(n, a, b))).collect()).unwrap()
}

pub fn gl_standard_demisemidirect(n: usize) -> LeibnizAlgebra {
    demisemidirect(&gl(n), &gl_standard_rep(n)).unwrap()
}

/// `V ⊕ gl(V) ⊕ gl(V)` with `[u + X + Y, v + U + W] = Y v + [X, U] + [Y, W]`,
/// `V = Q^n`. Basis: `V`, then the first `gl` factor, then the second.
pub fn example_2_1(n: usize) -> LeibnizAlgebra {
    let g1 = gl(n);
    let names1: Vec<String> = g1.names().iter().map(|s| format!("X{}", &s[1..])).collect();
    let names2: Vec<String> = g1.names().iter().map(|s| format!("Y{}", &s[1..])).collect();
    let mut all = names1;
    all.extend(names2);
    let h = LieAlgebra::new(g1.direct_sum(&gl(n)).into_inner().with_names(all).unwrap()).unwrap();
    let mut rho = vec![Matrix::zeros(n, n); n * n];
    rho.extend(gl_standard_rep(n).matrices().iter().cloned());
    demisemidirect(&h, &Representation::new(n, rho).unwrap()).expect("valid representation")
}

fn example_2_3_names(n: usize) -> Vec<String> {
    let mut v = names("v", n);
    v.extend((0..n).flat_map(|a| (0..n).map(move |b| format!("E{}{}", a + 1, b + 1))));
    v
}

/// `V ⊕ End(V)` with `(u,X) ⊢ (v,Y) = (Xv, XY)` and `(u,X) ⊣ (v,Y) = (0, XY)`.
pub fn example_2_3(n: usize) -> Dialgebra {
    let dim = n + n * n;
    let mut d = Dialgebra::zero_with_names(example_2_3_names(n));
    let e_idx = |a: usize, b: usize| n + a * n + b;
    for a in 0..n {
        for b in 0..n {
            // E_ab ⊢ v_b = v_a
            d.set_vdash(e_idx(a, b), b, unit_vec(dim, a)).unwrap();
            for c in 0..n {
                // E_ab E_bc = E_ac
                d.set_vdash(e_idx(a, b), e_idx(b, c), unit_vec(dim, e_idx(a, c))).unwrap();
                d.set_dashv(e_idx(a, b), e_idx(b, c), unit_vec(dim, e_idx(a, c))).unwrap();
            }
        }
    }
    d
}

/// [`example_2_3`] with the right product reversed to `(0, YX)`.
pub fn example_2_3_opposite_dashv(n: usize) -> Dialgebra {
    let dim = n + n * n;
    let mut d = example_2_3(n);
    let e_idx = |a: usize, b: usize| n + a * n + b;
    for i in 0..dim {
        for j in 0..dim {
            d.set_dashv(i, j, zero_vec(dim)).unwrap();
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // E_ab ⊣ E_ca = E_ca E_ab = E_cb
                d.set_dashv(e_idx(a, b), e_idx(c, a), unit_vec(dim, e_idx(c, b))).unwrap();
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_constants() {
        let h = so3();
        assert_eq!(h.basis_bracket(0, 1), &unit_vec(3, 2)[..]);
        assert_eq!(h.basis_bracket(1, 2), &unit_vec(3, 0)[..]);
        assert_eq!(h.basis_bracket(2, 0), &unit_vec(3, 1)[..]);
    }

    #[test]
    fn gl2_is_lie_of_dimension_four() {
        let h = gl(2);
        assert_eq!(h.dim(), 4);
        assert!(h.is_leibniz());
        // Center is the scalar matrices.
        assert_eq!(h.center().dim(), 1);
    }

    #[test]
    fn example_2_1_shape() {
        let g = example_2_1(2);
        assert_eq!(g.dim(), 10);
        assert!(g.is_leibniz());
    }
}
