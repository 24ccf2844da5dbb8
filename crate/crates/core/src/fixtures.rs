//! Built-in structures, including single-entry mutations aimed at one
//! axiom each. Mutations were picked by exhaustive search over single-entry
//! changes to keep collateral failures few. Changing one entry of a rack
//! table breaks a row permutation, so rack axioms 1 and 3 never fail alone.

use crate::digroup::{order24_standard, order6_standard, DigroupAxiom, FiniteDigroup};
use crate::exactla::{q, unit_vec, Rational};
use crate::leibniz::{builtins, check_dialgebra, Dialgebra, DialgebraAxiom, LeibnizAlgebra};
use crate::rack::{conjugation_rack, FiniteGroup, FiniteRack, RackAxiom};

pub const LEIBNIZ: [&str; 6] = ["ex2.2", "ex2.1-n2", "heisenberg-dtwist", "so3-standard", "gl2-standard", "ex2.2-mutated"];
pub const DIALGEBRA: [&str; 7] =
    ["ex2.3", "ex2.3-opposite", "ex2.3-mut-assoc-vdash", "ex2.3-mut-assoc-dashv", "ex2.3-mut-d1", "ex2.3-n1-mut-d2", "ex2.3-n1-mut-d3"];
pub const RACK: [&str; 4] = ["s3-conjugation", "s3-mut-axiom1", "z2-mut-axiom2", "s3-mut-axiom3"];
pub const DIGROUP: [&str; 12] = [
    "order6-standard",
    "order24-standard",
    "s3-group",
    "two-bar-units",
    "mut-g1-vdash",
    "mut-g1-dashv",
    "mut-g2",
    "mut-g3",
    "mut-g4",
    "mut-g5",
    "mut-g6",
    "order6-mutated",
];

pub fn leibniz(name: &str) -> Option<LeibnizAlgebra> {
    Some(match name {
        "ex2.2" => builtins::example_2_2(),
        "ex2.1-n2" => builtins::example_2_1(2),
        "heisenberg-dtwist" => builtins::heisenberg_dtwist(),
        "so3-standard" => builtins::so3_standard_demisemidirect(),
        "gl2-standard" => builtins::gl_standard_demisemidirect(2),
        "ex2.2-mutated" => {
            // [e3, e3] = e3
            let mut g = builtins::example_2_2();
            g.set_basis_bracket(2, 2, unit_vec(3, 2)).expect("in range");
            g
        }
        _ => return None,
    })
}

fn bump(d: &Dialgebra, vdash: bool, i: usize, j: usize, k: usize, by: i64) -> Dialgebra {
    let mut d = d.clone();
    let mut v: Vec<Rational> = if vdash { d.vdash_basis(i, j).to_vec() } else { d.dashv_basis(i, j).to_vec() };
    v[k] += q(by);
    if vdash {
        d.set_vdash(i, j, v).expect("in range");
    } else {
        d.set_dashv(i, j, v).expect("in range");
    }
    d
}

/// Basis `v1, v2, E11, E12, E21, E22`, or `v1, E11` for the `n1` fixtures.
pub fn dialgebra(name: &str) -> Option<Dialgebra> {
    let base = builtins::example_2_3(2);
    Some(match name {
        "ex2.3" => base,
        "ex2.3-opposite" => builtins::example_2_3_opposite_dashv(2),
        "ex2.3-mut-assoc-vdash" => bump(&base, true, 2, 0, 0, 1),
        "ex2.3-mut-assoc-dashv" => bump(&base, false, 0, 2, 0, 1),
        "ex2.3-mut-d1" => bump(&base, true, 2, 2, 0, 1),
        // v1 ⊣ v1 = v1, on the basis v1, E11
        "ex2.3-n1-mut-d2" => bump(&builtins::example_2_3(1), false, 0, 0, 0, 1),
        // E11 ⊣ E11 = 0
        "ex2.3-n1-mut-d3" => bump(&builtins::example_2_3(1), false, 1, 1, 1, -1),
        _ => return None,
    })
}

pub fn rack(name: &str) -> Option<FiniteRack> {
    let base = conjugation_rack(&FiniteGroup::symmetric(3)).expect("group");
    let mutate = |x, y, v| {
        let mut q = base.clone();
        q.set(x, y, v);
        q
    };
    Some(match name {
        "s3-conjugation" => base.clone(),
        "s3-mut-axiom1" => mutate(1, 1, 0),
        // trivial rack on Z2 with 1∘1 = 0
        "z2-mut-axiom2" => {
            let mut q = conjugation_rack(&FiniteGroup::cyclic(2)).expect("group");
            q.set(1, 1, 0);
            q
        }
        "s3-mut-axiom3" => mutate(0, 0, 1),
        _ => return None,
    })
}

/// `x ⊢ y = y`, `x ⊣ y = x` on two bar-units.
pub fn two_bar_units() -> FiniteDigroup {
    FiniteDigroup::new(2, 0, vec![0, 1, 0, 1], vec![0, 0, 1, 1], vec![0, 0]).expect("shape")
}

pub fn digroup(name: &str) -> Option<FiniteDigroup> {
    let two = two_bar_units();
    let six = order6_standard();
    let with = |g: &FiniteDigroup, f: &dyn Fn(&mut FiniteDigroup)| {
        let mut h = g.clone();
        f(&mut h);
        h
    };
    Some(match name {
        "order6-standard" => six,
        "order24-standard" => order24_standard(),
        "s3-group" => FiniteDigroup::from_group(&FiniteGroup::symmetric(3)),
        "two-bar-units" => two,
        "mut-g1-vdash" => with(&two, &|h| h.set_vdash(1, 1, 0)),
        "mut-g1-dashv" => with(&two, &|h| h.set_dashv(1, 1, 0)),
        "mut-g2" => with(&six, &|h| h.set_vdash(1, 0, 3)),
        "mut-g3" => with(&two, &|h| h.set_dashv(0, 1, 1)),
        "mut-g4" => with(&two, &|h| h.set_vdash(0, 1, 0)),
        "mut-g5" => with(&two, &|h| h.set_vdash(0, 1, 0)),
        "mut-g6" => with(&six, &|h| h.set_inv(0, 1)),
        "order6-mutated" => with(&six, &|h| h.set_vdash(1, 0, 3)),
        _ => return None,
    })
}

/// Outcome of running one mutation fixture through its checker.
#[derive(Clone, Debug)]
pub struct MutationOutcome {
    pub fixture: &'static str,
    pub target: String,
    /// Every failing check, by label.
    pub failing: Vec<String>,
    /// First witness for the target, if it failed.
    pub witness: Option<String>,
}

impl MutationOutcome {
    pub fn target_failed(&self) -> bool {
        self.witness.is_some()
    }
}

/// One fixture per axiom family: Leibniz, rack axioms 1–3, G1–G6, D1–D3.
pub fn mutation_suite() -> Vec<MutationOutcome> {
    let mut out = Vec::new();

    let g = leibniz("ex2.2-mutated").expect("fixture");
    let report = g.check_leibniz();
    out.push(MutationOutcome {
        fixture: "ex2.2-mutated",
        target: "Leibniz identity".into(),
        failing: if report.passed() { vec![] } else { vec!["Leibniz identity".into()] },
        witness: report.violations.first().map(|v| format!("{:?}", (v.i, v.j, v.k))),
    });

    for (fixture, axiom) in [
        ("s3-mut-axiom1", RackAxiom::LeftDistributive),
        ("z2-mut-axiom2", RackAxiom::UniqueSolution),
        ("s3-mut-axiom3", RackAxiom::Pointed),
    ] {
        let report = rack(fixture).expect("fixture").check();
        out.push(MutationOutcome {
            fixture,
            target: axiom.label().into(),
            failing: report.failing_axioms().iter().map(|a| a.label().to_string()).collect(),
            witness: report.of(axiom).next().map(|v| format!("{:?}", v.witness)),
        });
    }

    for (fixture, axiom) in [
        ("mut-g1-vdash", DigroupAxiom::G1Vdash),
        ("mut-g1-dashv", DigroupAxiom::G1Dashv),
        ("mut-g2", DigroupAxiom::G2),
        ("mut-g3", DigroupAxiom::G3),
        ("mut-g4", DigroupAxiom::G4),
        ("mut-g5", DigroupAxiom::G5),
        ("mut-g6", DigroupAxiom::G6),
    ] {
        let report = digroup(fixture).expect("fixture").check();
        out.push(MutationOutcome {
            fixture,
            target: axiom.label().into(),
            failing: report.failing_axioms().iter().map(|a| a.label().to_string()).collect(),
            witness: report.of(axiom).next().map(|v| format!("{:?}", v.witness)),
        });
    }

    for (fixture, axiom) in
        [("ex2.3-mut-d1", DialgebraAxiom::D1), ("ex2.3-n1-mut-d2", DialgebraAxiom::D2), ("ex2.3-n1-mut-d3", DialgebraAxiom::D3)]
    {
        let report = check_dialgebra(&dialgebra(fixture).expect("fixture"));
        out.push(MutationOutcome {
            fixture,
            target: axiom.label().into(),
            failing: report.failing_axioms().iter().map(|a| a.label().to_string()).collect(),
            witness: report.violations.iter().find(|v| v.axiom == axiom).map(|v| format!("{:?}", (v.i, v.j, v.k))),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert!(LEIBNIZ.iter().all(|n| leibniz(n).is_some()));
        assert!(DIALGEBRA.iter().all(|n| dialgebra(n).is_some()));
        assert!(RACK.iter().all(|n| rack(n).is_some()));
        assert!(DIGROUP.iter().all(|n| digroup(n).is_some()));
        assert!(leibniz("nope").is_none());
    }

    #[test]
    fn unmutated_bases_pass() {
        for n in ["ex2.2", "ex2.1-n2", "heisenberg-dtwist", "so3-standard", "gl2-standard"] {
            assert!(leibniz(n).unwrap().is_leibniz(), "{n}");
        }
        assert!(check_dialgebra(&dialgebra("ex2.3").unwrap()).passed());
        assert!(rack("s3-conjugation").unwrap().check().passed());
        for n in ["order6-standard", "order24-standard", "s3-group", "two-bar-units"] {
            assert!(digroup(n).unwrap().check().passed(), "{n}");
        }
    }

    #[test]
    fn every_mutation_hits_its_target() {
        let suite = mutation_suite();
        assert_eq!(suite.len(), 14);
        for m in &suite {
            assert!(m.target_failed(), "{} did not fail {}", m.fixture, m.target);
            assert!(m.failing.contains(&m.target));
        }
    }

    #[test]
    fn frozen_collateral() {
        // Failing sets found by the mutation search.
        let got: Vec<(&str, usize)> = mutation_suite().iter().map(|m| (m.fixture, m.failing.len())).collect();
        let expected = [
            ("ex2.2-mutated", 1),
            ("s3-mut-axiom1", 2),
            ("z2-mut-axiom2", 1),
            ("s3-mut-axiom3", 3),
            ("mut-g1-vdash", 2),
            ("mut-g1-dashv", 2),
            ("mut-g2", 3),
            ("mut-g3", 2),
            ("mut-g4", 2),
            ("mut-g5", 2),
            ("mut-g6", 1),
            ("ex2.3-mut-d1", 2),
            ("ex2.3-n1-mut-d2", 1),
            ("ex2.3-n1-mut-d3", 1),
        ];
        assert_eq!(got, expected);
    }
}
