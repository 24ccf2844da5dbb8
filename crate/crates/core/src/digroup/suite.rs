//! Exhaustive identity suites: right/left group facts, inverse facts and
//! the conjugation rack of a digroup.

use crate::error::Result;
use crate::rack::{FiniteRack, RackReport};

use super::{bar_units, inverse_group, one_sided_units, FiniteDigroup};

const MAX_WITNESSES: usize = 5;

/// One named identity with the first few failing instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub failures: usize,
    pub witnesses: Vec<Vec<usize>>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn run(&mut self, name: impl Into<String>, cases: impl IntoIterator<Item = (Vec<usize>, bool)>) {
        let mut check = IdentityCheck { name: name.into(), failures: 0, witnesses: Vec::new() };
        for (w, ok) in cases {
            if !ok {
                check.failures += 1;
                if check.witnesses.len() < MAX_WITNESSES {
                    check.witnesses.push(w);
                }
            }
        }
        self.checks.push(check);
    }

    fn single(&mut self, name: impl Into<String>, ok: bool) {
        self.run(name, [(vec![], ok)]);
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// Right-group facts for `(G, ⊢)`, their left-group duals for `(G, ⊣)`, the
/// inverse facts, the units fact and the kernel of `L⊢`.
pub fn right_group_suite(g: &FiniteDigroup) -> Result<IdentityReport> {
    g.require_digroup()?;
    let n = g.size();
    let one = g.unit();
    let (vd, dv, inv) = (|a, b| g.vd(a, b), |a, b| g.dv(a, b), |a| g.inv(a));
    let e = bar_units(g);
    let in_e = |x: usize| e.binary_search(&x).is_ok();
    let jg = inverse_group(g);
    let mut j: Vec<usize> = g.inverses().to_vec();
    j.sort_unstable();
    j.dedup();
    let in_j = |x: usize| j.binary_search(&x).is_ok();
    let f = |x: usize| inv(inv(x));
    let mut r = IdentityReport::default();

    // (G, ⊢) as a right group.
    r.run(
        "right group 1: x⁻¹⊢x⊢y = x⊢x⁻¹⊢y = y",
        pairs(n).map(|(x, y)| (vec![x, y], vd(inv(x), vd(x, y)) == y && vd(x, vd(inv(x), y)) == y)),
    );
    r.run("right group 2: x⊢1 = (x⁻¹)⁻¹", (0..n).map(|x| (vec![x], vd(x, one) == f(x))));
    r.run("right group 3: ((x⁻¹)⁻¹)⁻¹ = x⁻¹", (0..n).map(|x| (vec![x], inv(f(x)) == inv(x))));
    r.run(
        "right group 4: (x⊢y)⁻¹ = y⁻¹⊢x⁻¹",
        pairs(n).map(|(x, y)| (vec![x, y], inv(vd(x, y)) == vd(inv(y), inv(x)))),
    );
    r.run(
        "right group 5: J is a group under ⊢",
        pairs(j.len()).map(|(a, b)| (vec![j[a], j[b]], in_j(vd(j[a], j[b])))).chain([(vec![one], in_j(one))]),
    );
    r.run(
        "right group 5: E is a right zero semigroup (e⊢f = f)",
        pairs(e.len()).map(|(a, b)| (vec![e[a], e[b]], vd(e[a], e[b]) == e[b])),
    );
    r.run(
        "right group 6: x ↦ (x⁻¹)⁻¹ is a ⊢-epimorphism onto J with kernel E",
        pairs(n)
            .map(|(x, y)| (vec![x, y], f(vd(x, y)) == vd(f(x), f(y))))
            .chain(j.iter().map(|&h| (vec![h], f(h) == h)))
            .chain((0..n).map(|x| (vec![x], in_j(f(x)) && ((f(x) == one) == in_e(x))))),
    );
    let p = |x: usize| vd(inv(x), x);
    r.run(
        "right group 7: x ↦ x⁻¹⊢x is a ⊢-epimorphism onto E with kernel J",
        pairs(n)
            .map(|(x, y)| (vec![x, y], p(vd(x, y)) == vd(p(x), p(y))))
            .chain(e.iter().map(|&u| (vec![u], p(u) == u)))
            .chain((0..n).map(|x| (vec![x], in_e(p(x)) && ((p(x) == one) == in_j(x))))),
    );
    r.run("right group 8: G = J⊢E with x = (x⁻¹)⁻¹ ⊢ (x⁻¹⊢x)", (0..n).map(|x| (vec![x], vd(f(x), p(x)) == x)));
    r.single("right group 8: |J|·|E| = |G|", j.len() * e.len() == n);

    // (G, ⊣) as a left group.
    r.run(
        "left group 1: y⊣x⊣x⁻¹ = y⊣x⁻¹⊣x = y",
        pairs(n).map(|(x, y)| (vec![x, y], dv(dv(y, x), inv(x)) == y && dv(dv(y, inv(x)), x) == y)),
    );
    r.run("left group 2: 1⊣x = (x⁻¹)⁻¹", (0..n).map(|x| (vec![x], dv(one, x) == f(x))));
    r.run(
        "left group 4: (x⊣y)⁻¹ = y⁻¹⊣x⁻¹",
        pairs(n).map(|(x, y)| (vec![x, y], inv(dv(x, y)) == dv(inv(y), inv(x)))),
    );
    r.run(
        "left group 5: J is a group under ⊣",
        pairs(j.len()).map(|(a, b)| (vec![j[a], j[b]], in_j(dv(j[a], j[b])))),
    );
    r.run(
        "left group 5: E is a left zero semigroup (e⊣f = e)",
        pairs(e.len()).map(|(a, b)| (vec![e[a], e[b]], dv(e[a], e[b]) == e[a])),
    );
    r.run(
        "left group 6: x ↦ (x⁻¹)⁻¹ is a ⊣-epimorphism onto J with kernel E",
        pairs(n).map(|(x, y)| (vec![x, y], f(dv(x, y)) == dv(f(x), f(y)))),
    );
    let q = |x: usize| dv(x, inv(x));
    r.run(
        "left group 7: x ↦ x⊣x⁻¹ is a ⊣-epimorphism onto E with kernel J",
        pairs(n)
            .map(|(x, y)| (vec![x, y], q(dv(x, y)) == dv(q(x), q(y))))
            .chain(e.iter().map(|&u| (vec![u], q(u) == u)))
            .chain((0..n).map(|x| (vec![x], in_e(q(x)) && ((q(x) == one) == in_j(x))))),
    );
    r.run("left group 8: G = E⊣J with x = (x⊣x⁻¹) ⊣ (x⁻¹)⁻¹", (0..n).map(|x| (vec![x], dv(q(x), f(x)) == x)));

    // Inverse facts.
    r.run("inverses 1: x⊢1 = 1⊣x", (0..n).map(|x| (vec![x], vd(x, one) == dv(one, x))));
    r.run(
        "inverses 2: (x⊢y)⁻¹ = y⁻¹⊢x⁻¹ = y⁻¹⊣x⁻¹ = (x⊣y)⁻¹",
        pairs(n).map(|(x, y)| {
            let a = inv(vd(x, y));
            (vec![x, y], a == vd(inv(y), inv(x)) && a == dv(inv(y), inv(x)) && a == inv(dv(x, y)))
        }),
    );
    r.single("inverses 3: J is a group in which ⊢ = ⊣", jg.is_ok());
    r.run(
        "inverses 4: x ↦ (x⁻¹)⁻¹ is a digroup epimorphism onto J with kernel E",
        pairs(n)
            .map(|(x, y)| (vec![x, y], f(vd(x, y)) == vd(f(x), f(y)) && f(dv(x, y)) == dv(f(x), f(y))))
            .chain((0..n).map(|x| (vec![x], in_j(f(x)) && ((f(x) == one) == in_e(x))))),
    );

    let (left, right) = one_sided_units(g);
    r.single("units: left neutral for ⊢ ⟺ right neutral for ⊣", left == right);
    let id: Vec<usize> = (0..n).collect();
    r.run("kernel of L⊢ is E", (0..n).map(|x| (vec![x], (g.left_vdash(x) == id) == in_e(x))));
    Ok(r)
}

/// `(G, ∘, 1)` with `x ∘ y = x ⊢ y ⊣ x⁻¹`.
pub fn induced_rack(g: &FiniteDigroup) -> Result<FiniteRack> {
    g.require_digroup()?;
    FiniteRack::new(g.size(), g.unit(), super::conjugation_table(g))
}

/// The induced rack, its rack-axiom report, and the conjugation identities
/// of a digroup.
pub fn induced_rack_suite(g: &FiniteDigroup) -> Result<(FiniteRack, RackReport, IdentityReport)> {
    let q = induced_rack(g)?;
    let rack_report = q.check();
    let n = g.size();
    let one = g.unit();
    let (vd, dv, c) = (|a, b| g.vd(a, b), |a, b| g.dv(a, b), |a, b| g.conj(a, b));
    let e = bar_units(g);
    let e = e.as_slice();
    let in_e = |x: usize| e.binary_search(&x).is_ok();
    let mut j: Vec<usize> = g.inverses().to_vec();
    j.sort_unstable();
    j.dedup();
    let j = j.as_slice();
    let mut r = IdentityReport::default();

    r.run(
        "conjugation 1: x∘(y∘z) = (x⊢y)∘z = (x⊣y)∘z",
        triples(n).map(|(x, y, z)| {
            let a = c(x, c(y, z));
            (vec![x, y, z], a == c(vd(x, y), z) && a == c(dv(x, y), z))
        }),
    );
    r.run("conjugation 2: 1∘x = x and x∘1 = 1", (0..n).map(|x| (vec![x], c(one, x) == x && c(x, one) == one)));
    r.run(
        "conjugation 3: x∘u ∈ E for u ∈ E",
        (0..n).flat_map(|x| e.iter().map(move |&u| (x, u))).map(|(x, u)| (vec![x, u], in_e(c(x, u)))),
    );
    r.run(
        "conjugation 4: J acts on E via ∘",
        j.iter()
            .flat_map(|&h| j.iter().flat_map(move |&k| e.iter().map(move |&u| (h, k, u))))
            .map(|(h, k, u)| (vec![h, k, u], c(vd(h, k), u) == c(h, c(k, u)) && in_e(c(h, u))))
            .chain(e.iter().map(|&u| (vec![one, u], c(one, u) == u))),
    );
    r.run("rack identity 1: x⊢y = (x∘y)⊣x", pairs(n).map(|(x, y)| (vec![x, y], vd(x, y) == dv(c(x, y), x))));
    r.run(
        "rack identity 2: x∘(y⊢z) = (x∘y)⊢(x∘z)",
        triples(n).map(|(x, y, z)| (vec![x, y, z], c(x, vd(y, z)) == vd(c(x, y), c(x, z)))),
    );
    r.run(
        "rack identity 3: x∘(y⊣z) = (x∘y)⊣(x∘z)",
        triples(n).map(|(x, y, z)| (vec![x, y, z], c(x, dv(y, z)) == dv(c(x, y), c(x, z)))),
    );
    r.run(
        "rack identity 4: x∘(y∘z) = (x∘y)∘(x∘z)",
        triples(n).map(|(x, y, z)| (vec![x, y, z], c(x, c(y, z)) == c(c(x, y), c(x, z)))),
    );
    Ok((q, rack_report, r))
}

/// `x⊢y = (x∘y)⊢x`, the form with `⊢` on the right. It fails whenever
/// there is more than one bar-unit; `(x∘y)⊣x` is the identity that holds.
pub fn vdash_variant_of_rack_identity_1(g: &FiniteDigroup) -> IdentityCheck {
    let n = g.size();
    let mut r = IdentityReport::default();
    r.run(
        "rack identity 1 with ⊢: x⊢y = (x∘y)⊢x",
        pairs(n).map(|(x, y)| (vec![x, y], g.vd(x, y) == g.vd(g.conj(x, y), x))),
    );
    r.checks.pop().expect("one check")
}

#[cfg(test)]
mod tests {
    use super::super::{order24_standard, order6_standard};
    use super::*;
    use crate::rack::{conjugation_rack, FiniteGroup};

    #[test]
    fn suites_pass_on_examples() {
        for g in [order6_standard(), order24_standard(), FiniteDigroup::from_group(&FiniteGroup::quaternion())] {
            let r = right_group_suite(&g).unwrap();
            assert!(r.passed(), "{:?}", r.checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
            let (_, rack, ids) = induced_rack_suite(&g).unwrap();
            assert!(rack.passed());
            assert!(ids.passed(), "{:?}", ids.checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn order6_induced_rack_closed_form() {
        // (u,h) ∘ (v,k) = (hv, k)
        let g = order6_standard();
        let q = induced_rack(&g).unwrap();
        let swap = [0, 2, 1];
        for x in 0..6 {
            for y in 0..6 {
                let (h, v, k) = (x % 2, y / 2, y % 2);
                let hv = if h == 1 { swap[v] } else { v };
                assert_eq!(q.op(x, y), hv * 2 + k);
            }
        }
    }

    #[test]
    fn group_induced_rack_is_conjugation() {
        let g = FiniteGroup::dihedral(4);
        assert_eq!(induced_rack(&FiniteDigroup::from_group(&g)).unwrap(), conjugation_rack(&g).unwrap());
    }

    #[test]
    fn right_zero_check_on_order6() {
        let g = order6_standard();
        let e = bar_units(&g);
        for &a in &e {
            for &b in &e {
                assert_eq!(g.vd(a, b), b);
            }
        }
        let r = right_group_suite(&g).unwrap();
        assert!(r.get("right group 5: E is a right zero semigroup (e⊢f = f)").unwrap().passed());
    }

    #[test]
    fn vdash_variant_fails_exactly_off_groups() {
        let c = vdash_variant_of_rack_identity_1(&order6_standard());
        assert!(!c.passed());
        // x = 1, y = (a, 1): 1⊢y = y but y⊢1 = (e, 1).
        assert_eq!(c.witnesses[0], vec![0, 2]);
        assert!(vdash_variant_of_rack_identity_1(&FiniteDigroup::from_group(&FiniteGroup::symmetric(3))).passed());
    }

    #[test]
    fn suite_refuses_non_digroup() {
        let mut g = order6_standard();
        g.set_inv(1, 0);
        assert!(right_group_suite(&g).is_err());
    }
}
