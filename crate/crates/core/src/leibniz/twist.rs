use crate::error::{Error, Result};
use num_traits::Zero;

use crate::exactla::Matrix;

use super::{LeibnizAlgebra, LieAlgebra};

/// `[x, y]_D := [x, D y]` for a derivation `D` with `D² = 0`.
pub fn d_twist(h: &LieAlgebra, d: &Matrix) -> Result<LeibnizAlgebra> {
    let n = h.dim();
    let bad = h.derivation_violations(d)?;
    if let Some(&(i, j)) = bad.first() {
        return Err(Error::NotDerivation(format!(
            "D[e{}, e{}] != [De{}, e{}] + [e{}, De{}] ({} pair(s))",
            i + 1,
            j + 1,
            i + 1,
            j + 1,
            i + 1,
            j + 1,
            bad.len()
        )));
    }
    let d2 = d.mul(d)?;
    if !d2.is_zero() {
        let (r, c) = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).find(|&(r, c)| !d2[(r, c)].is_zero()).unwrap();
        return Err(Error::NotSquareZero(format!("(D^2)[{r}][{c}] = {}", d2[(r, c)])));
    }
    let mut g = LeibnizAlgebra::zero_with_names(h.names().to_vec());
    for i in 0..n {
        for j in 0..n {
            let x = crate::exactla::unit_vec(n, i);
            g.set_basis_bracket(i, j, h.bracket(&x, &d.column(j))?)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::super::builtins::*;
    use super::*;
    use crate::exactla::{q, unit_vec, Subspace};

    #[test]
    fn zero_derivation_gives_abelian() {
        let g = d_twist(&heisenberg(), &Matrix::zeros(3, 3)).unwrap();
        assert!(g.constants_equal(&LeibnizAlgebra::abelian(3)));
    }

    #[test]
    fn heisenberg_twist_by_y_to_x() {
        let g = heisenberg_dtwist();
        assert!(g.is_leibniz());
        assert_eq!(g.bracket(&unit_vec(3, 1), &unit_vec(3, 1)).unwrap(), vec![q(0), q(0), q(-1)]);
        let (quot, _) = g.quotient(&g.squares_ideal().unwrap()).unwrap();
        assert!(quot.is_skew());
        // Every bracket lies in [h, D h] = span{[h, x]} = span{z}.
        let image = Subspace::coordinate(3, &[2]);
        for i in 0..3 {
            for j in 0..3 {
                assert!(image.contains(g.basis_bracket(i, j)));
            }
        }
    }

    #[test]
    fn central_image_twist_is_zero() {
        // D: x -> z. z is central, so [a, D b] = 0 for all a, b.
        let mut d = Matrix::zeros(3, 3);
        d[(2, 0)] = q(1);
        let g = d_twist(&heisenberg(), &d).unwrap();
        assert!(g.constants_equal(&LeibnizAlgebra::abelian(3)));
    }

    #[test]
    fn rejects_non_derivation_and_non_nilpotent() {
        // D: x -> x gives D[x, y] = 0 but [Dx, y] = z.
        let mut d = Matrix::zeros(3, 3);
        d[(0, 0)] = q(1);
        assert!(matches!(d_twist(&heisenberg(), &d), Err(Error::NotDerivation(_))));
        // diag(1, 0, 1) is a derivation of the Heisenberg algebra with D^2 = D != 0.
        let mut d = Matrix::zeros(3, 3);
        d[(0, 0)] = q(1);
        d[(2, 2)] = q(1);
        assert!(matches!(d_twist(&heisenberg(), &d), Err(Error::NotSquareZero(_))));
    }
}
