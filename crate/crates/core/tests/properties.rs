use leibkit::digroup::{
    bar_units, canonical_form, decompose, enumerate_digroups, induced_rack, order24_standard, right_group_suite,
    FiniteDigroup,
};
use leibkit::exactla::{frac, nullspace, rref, solve, sum_and_intersection, Matrix, Rational, Subspace};
use leibkit::fixtures;
use leibkit::leibniz::builtins::{heisenberg, heisenberg_y_to_x};
use leibkit::leibniz::{d_twist, demisemidirect, demisemidirect_ker_ad, find_splitting, LeibnizAlgebra, LieAlgebra, Representation};
use leibkit::lierack::{builtin_model, differentiate, DiffOptions, TOL_CONJ, TOL_PHI};
use leibkit::numeric::{expm, max_abs_diff, max_abs_mat_diff, FMat};
use leibkit::rack::{conjugation_rack, tangent_bundle_rack_op, ExpAdRack, FiniteGroup, FloatLeibniz, TOL_RACK};
use leibkit::report::{Check, Report};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(rational(), cols), rows).prop_map(|r| Matrix::from_rows(r).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn vectors(count: usize, n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), n), 0..=count)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec((-1i64..=1).prop_map(|v| frac(v, 1)), n), n)
        .prop_map(|r| Matrix::from_rows(r).unwrap())
}

/// A unimodular matrix: unit lower times unit upper triangular.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (small_matrix(n), small_matrix(n)).prop_map(move |(a, b)| {
        let mut l = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    l[(i, j)] = a[(i, j)].clone();
                }
                if i < j {
                    u[(i, j)] = b[(i, j)].clone();
                }
            }
        }
        l.mul(&u).unwrap()
    })
}

const BASES: [&str; 5] = ["ex2.2", "ex2.1-n2", "heisenberg-dtwist", "so3-standard", "gl2-standard"];

/// A built-in Leibniz algebra in a random basis.
fn leibniz_algebra() -> impl Strategy<Value = LeibnizAlgebra> {
    prop::sample::select(&BASES[..]).prop_flat_map(|name| {
        let g = fixtures::leibniz(name).unwrap();
        let n = g.dim();
        invertible(n).prop_map(move |p| {
            let basis: Vec<Vec<Rational>> = (0..n).map(|c| p.column(c)).collect();
            g.in_basis(&basis).unwrap()
        })
    })
}

/// Abelian `h` of dimension `k` acting on `Q^d` by powers of one matrix.
fn abelian_pair() -> impl Strategy<Value = (LieAlgebra, Representation)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(k, d)| {
        matrix(d, d).prop_map(move |a| {
            let mut rho = Vec::new();
            let mut p = a.clone();
            for _ in 0..k {
                rho.push(p.clone());
                p = p.mul(&a).unwrap();
            }
            let h = LieAlgebra::new(LeibnizAlgebra::abelian(k)).unwrap();
            (h, Representation::new(d, rho).unwrap())
        })
    })
}

/// A digroup of order at most 6 from the enumeration, randomly relabeled.
fn small_digroup() -> impl Strategy<Value = FiniteDigroup> {
    (1usize..=6).prop_flat_map(|order| {
        let classes = enumerate_digroups(order).unwrap().classes;
        (prop::sample::select(classes), permutation(order)).prop_map(|(g, p)| g.relabel(&p))
    })
}

fn unit_ball(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, n).prop_map(|v| {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1.0 {
            v.iter().map(|x| x / norm).collect()
        } else {
            v
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r, p) = rref(&m);
        let (rr, pp) = rref(&r);
        prop_assert_eq!(r, rr);
        prop_assert_eq!(p, pp);
    }

    #[test]
    fn nullspace_vectors_are_killed(m in any_matrix()) {
        let k = nullspace(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == frac(0, 1)));
        }
    }

    #[test]
    fn grassmann_identity(u in vectors(4, 5), v in vectors(4, 5)) {
        let (u, v) = (Subspace::span(5, &u), Subspace::span(5, &v));
        let (sum, meet) = sum_and_intersection(&u, &v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
    }

    #[test]
    fn solve_is_exact((a, x) in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| (matrix(r, c), prop::collection::vec(rational(), c)))) {
        let b = a.mul_vec(&x).unwrap();
        let y = solve(&a, &b).unwrap();
        prop_assert!(y.is_some());
        prop_assert_eq!(a.mul_vec(&y.unwrap()).unwrap(), b);
    }

    #[test]
    fn ker_ad_formula((h, rep) in abelian_pair()) {
        let g = demisemidirect(&h, &rep).unwrap();
        prop_assert!(g.is_leibniz());
        prop_assert_eq!(demisemidirect_ker_ad(&h, &rep).unwrap(), g.ker_ad());
        // S sits in the module and E = ker(ad) always splits off h.
        let k = g.ker_ad();
        prop_assert!(find_splitting(&g, &k).unwrap().is_some());
    }

    #[test]
    fn twisted_quotient_is_lie(c in rational()) {
        let d = heisenberg_y_to_x().scale(&c);
        let g = d_twist(&heisenberg(), &d).unwrap();
        prop_assert!(g.is_leibniz());
        let (q, _) = g.quotient(&g.squares_ideal().unwrap()).unwrap();
        prop_assert!(q.is_skew());
    }

    #[test]
    fn conjugation_racks_pass_and_relabel(order in 1usize..=8, pick in 0usize..5, p in permutation(8)) {
        let groups = FiniteGroup::all_of_order(order).unwrap();
        let g = &groups[pick % groups.len()];
        let perm: Vec<usize> = p.into_iter().filter(|&i| i < order).collect();
        let q = conjugation_rack(g).unwrap();
        prop_assert!(q.check().passed());
        prop_assert_eq!(conjugation_rack(&g.relabel(&perm)).unwrap(), q.relabel(&perm));
    }

    #[test]
    fn rack_check_matches_phi_description(x in 0usize..6, y in 0usize..6, v in 0usize..6) {
        let mut q = fixtures::rack("s3-conjugation").unwrap();
        q.set(x, y, v);
        let n = q.size();
        let pointed = (0..n).all(|z| q.op(q.point(), z) == z && q.op(z, q.point()) == q.point());
        let phis_ok = (0..n).all(|z| {
            let phi = q.phi(z);
            let mut sorted = phi.clone();
            sorted.sort_unstable();
            sorted == (0..n).collect::<Vec<_>>() && q.is_automorphism(&phi)
        });
        prop_assert_eq!(q.check().passed(), pointed && phis_ok);
    }

    #[test]
    fn digroup_inverse_identities(g in small_digroup()) {
        prop_assert!(g.check().passed());
        let n = g.size();
        let one = g.unit();
        for x in 0..n {
            prop_assert_eq!(g.vd(x, one), g.dv(one, x));
            prop_assert_eq!(g.inv(g.inv(g.inv(x))), g.inv(x));
            prop_assert_eq!(g.vd(x, one), g.inv(g.inv(x)));
            for y in 0..n {
                let a = g.inv(g.vd(x, y));
                prop_assert_eq!(a, g.vd(g.inv(y), g.inv(x)));
                prop_assert_eq!(a, g.dv(g.inv(y), g.inv(x)));
                prop_assert_eq!(a, g.inv(g.dv(x, y)));
            }
        }
    }

    #[test]
    fn digroups_decompose(g in small_digroup()) {
        let d = decompose(&g).unwrap();
        prop_assert_eq!(d.bar_units.len() * d.inverse_group.elements.len(), g.size());
        prop_assert!(right_group_suite(&g).unwrap().passed());
        // L⊢(e) is the identity exactly on bar-units.
        let e = bar_units(&g);
        for x in 0..g.size() {
            let ident = g.left_vdash(x) == (0..g.size()).collect::<Vec<_>>();
            prop_assert_eq!(ident, e.contains(&x));
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in small_digroup(), p in permutation(6)) {
        let perm: Vec<usize> = p.into_iter().filter(|&i| i < g.size()).collect();
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn group_digroup_rack_is_conjugation(order in 1usize..=8, pick in 0usize..5) {
        let groups = FiniteGroup::all_of_order(order).unwrap();
        let g = &groups[pick % groups.len()];
        let d = FiniteDigroup::from_group(g);
        prop_assert_eq!(induced_rack(&d).unwrap(), conjugation_rack(g).unwrap());
    }

    #[test]
    fn report_json_round_trip(
        subject in "[a-z0-9 .-]{0,12}",
        checks in prop::collection::vec(("[a-zA-Z ]{1,10}", any::<bool>(), prop::option::of(-1e6f64..1e6), prop::collection::vec("[0-9,() ]{1,8}", 0..3)), 0..5),
        info in prop::collection::vec(("[a-z]{1,5}", "[a-z0-9]{0,5}"), 0..3),
    ) {
        let mut r = Report::new(subject);
        for (k, v) in info {
            r.info(k, v);
        }
        for (name, passed, residual, witnesses) in checks {
            let mut c = Check::new(name, passed);
            c.residual = residual;
            c.witnesses = witnesses;
            r.push(c);
        }
        prop_assert_eq!(r.passed(), r.checks.iter().all(|c| c.passed));
        prop_assert_eq!(Report::from_json(&r.to_json().unwrap()).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ad_is_a_derivation(g in leibniz_algebra(), x in prop::collection::vec(rational(), 10)) {
        prop_assert!(g.is_leibniz());
        let x = &x[..g.dim()];
        let d = g.ad_matrix(x).unwrap();
        prop_assert!(g.derivation_violations(&d).unwrap().is_empty());
    }

    #[test]
    fn squares_ideal_quotient_is_lie(g in leibniz_algebra()) {
        let s = g.squares_ideal().unwrap();
        prop_assert!(g.is_ideal(&s).unwrap());
        let (q, _) = g.quotient(&s).unwrap();
        prop_assert!(q.is_skew());
    }

    #[test]
    fn splittings_rebuild_the_algebra(g in leibniz_algebra()) {
        let n = g.dim();
        for e in [g.squares_ideal().unwrap(), g.ker_ad()] {
            if let Ok(Some(h)) = find_splitting(&g, &e) {
                prop_assert_eq!(e.dim() + h.dim(), n);
                prop_assert_eq!(e.intersection(&h).dim(), 0);
                prop_assert!(g.is_subalgebra(&h));
                prop_assert!(g.restrict(&h).unwrap().is_skew());
                let split = leibkit::leibniz::Splitting::new(&g, e.clone(), h).unwrap();
                prop_assert!(split.rebuild_matches(&g).unwrap());
            }
        }
    }

    #[test]
    fn exp_ad_chain_identity(seed in any::<u64>(), which in 0usize..3) {
        let name = ["heisenberg-dtwist", "so3-standard", "ex2.2"][which];
        let rack = ExpAdRack::new(FloatLeibniz::from_exact(&fixtures::leibniz(name).unwrap())).unwrap();
        prop_assert!(rack.conjugation_chain_residual(10, seed).unwrap() < TOL_RACK);
        prop_assert!(rack.distributivity_residual(10, seed).unwrap() < TOL_RACK);
    }

    #[test]
    fn tangent_bundle_subrack(x in unit_ball(3), y in unit_ball(3)) {
        let m = builtin_model("so3-standard").unwrap();
        let (a, b) = (m.exp_algebra(&x).unwrap(), m.exp_algebra(&y).unwrap());
        let (first, second) = tangent_bundle_rack_op(&m, &x, &a, &y, &b).unwrap();
        let ad: FMat = &a * m.algebra_matrix(&y) * a.transpose();
        let expected = m.algebra_coords(&ad);
        prop_assert!(max_abs_diff(&first, &expected) < TOL_RACK);
        prop_assert!(max_abs_mat_diff(&second, &expm(&ad).unwrap()) < TOL_RACK);
    }

    #[test]
    fn linear_rack_residuals(seed in any::<u64>(), which in 0usize..3) {
        let m = builtin_model(["so3-standard", "ex2.2", "abelian-trivial"][which]).unwrap();
        let s = differentiate(&m, &DiffOptions { seed, samples: 10, ..DiffOptions::default() }).unwrap();
        prop_assert!(s.phi_residual < TOL_PHI);
        prop_assert!(s.phi_aut_residual < TOL_PHI);
        prop_assert!(s.conjugation_residual < TOL_CONJ);
        prop_assert!(s.subrack_phi_residual < TOL_PHI);
    }
}

#[test]
fn order24_digroup_decomposes() {
    let d = decompose(&order24_standard()).unwrap();
    assert_eq!(d.pairs_checked, 24 * 24);
}
