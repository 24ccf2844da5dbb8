//! Pointed racks: finite tables, conjugation racks of groups, and the
//! smooth racks on vector spaces and tangent bundles used by the numerical
//! modules.

use std::fmt;

use crate::error::{Error, Result};

mod group;
mod smooth;

pub use group::{permutations, FiniteGroup};
pub use smooth::{exp_ad_rack_op, tangent_bundle_rack_op, ExpAdRack, FloatLeibniz, TOL_AXIOM, TOL_RACK};

/// A pointed magma `(Q, ∘, 1)` stored as a table, `table[x][y] = x ∘ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRack {
    size: usize,
    point: usize,
    table: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RackAxiom {
    /// `x ∘ (y ∘ z) = (x ∘ y) ∘ (x ∘ z)`
    LeftDistributive,
    /// `a ∘ x = b` has exactly one solution.
    UniqueSolution,
    /// `1 ∘ x = x` and `x ∘ 1 = 1`.
    Pointed,
}

impl RackAxiom {
    pub const ALL: [RackAxiom; 3] = [Self::LeftDistributive, Self::UniqueSolution, Self::Pointed];

    pub fn label(self) -> &'static str {
        match self {
            Self::LeftDistributive => "rack axiom 1 (left distributivity)",
            Self::UniqueSolution => "rack axiom 2 (unique solvability)",
            Self::Pointed => "rack axiom 3 (pointed)",
        }
    }
}

impl fmt::Display for RackAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One failing instance. The witness is `(x, y, z)` for distributivity,
/// `(a, b, number of solutions)` for solvability and `(x,)` for the point
/// axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RackViolation {
    pub axiom: RackAxiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RackReport {
    pub violations: Vec<RackViolation>,
}

impl RackReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failing_axioms(&self) -> Vec<RackAxiom> {
        let mut v: Vec<_> = self.violations.iter().map(|x| x.axiom).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn of(&self, axiom: RackAxiom) -> impl Iterator<Item = &RackViolation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }
}

/// Default ceiling on exhaustive table checks.
pub const DEFAULT_SIZE_CAP: usize = 64;

impl FiniteRack {
    pub fn new(size: usize, point: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 || point >= size || table.len() != size * size {
            return Err(Error::Dimension(format!("rack of size {size} has a malformed table")));
        }
        if table.iter().any(|&x| x >= size) {
            return Err(Error::Dimension("rack table entry out of range".into()));
        }
        Ok(FiniteRack { size, point, table })
    }

    pub fn from_rows(point: usize, rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(rows.len(), point, rows.iter().flatten().copied().collect())
    }

    /// The one-element rack.
    pub fn singleton() -> Self {
        FiniteRack { size: 1, point: 0, table: vec![0] }
    }

    /// `x ∘ y = y` except `x ∘ 1 = 1`, which is the same thing.
    pub fn trivial(size: usize, point: usize) -> Result<Self> {
        Self::new(size, point, (0..size * size).map(|i| i % size).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn set(&mut self, x: usize, y: usize, value: usize) {
        self.table[x * self.size + y] = value;
    }

    /// Checks the three axioms exhaustively. Refuses tables larger than
    /// `cap`.
    pub fn check_with_cap(&self, cap: usize) -> Result<RackReport> {
        if self.size > cap {
            return Err(Error::Cap(format!("rack of size {} exceeds the cap {cap}", self.size)));
        }
        Ok(self.check())
    }

    pub fn check(&self) -> RackReport {
        let n = self.size;
        let mut violations = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.op(x, self.op(y, z)) != self.op(self.op(x, y), self.op(x, z)) {
                        violations.push(RackViolation { axiom: RackAxiom::LeftDistributive, witness: vec![x, y, z] });
                    }
                }
            }
        }
        for a in 0..n {
            let mut count = vec![0usize; n];
            for x in 0..n {
                count[self.op(a, x)] += 1;
            }
            for (b, &c) in count.iter().enumerate() {
                if c != 1 {
                    violations.push(RackViolation { axiom: RackAxiom::UniqueSolution, witness: vec![a, b, c] });
                }
            }
        }
        for x in 0..n {
            if self.op(self.point, x) != x || self.op(x, self.point) != self.point {
                violations.push(RackViolation { axiom: RackAxiom::Pointed, witness: vec![x] });
            }
        }
        RackReport { violations }
    }

    /// Left translation `φ(x) = x ∘ ·` as a permutation (image list).
    pub fn phi(&self, x: usize) -> Vec<usize> {
        self.table[x * self.size..(x + 1) * self.size].to_vec()
    }

    /// True iff `perm` is a bijection preserving `∘`.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.size;
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        (0..n).all(|x| (0..n).all(|y| perm[self.op(x, y)] == self.op(perm[x], perm[y])))
    }

    /// The rack with elements renamed by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteRack {
        let n = self.size;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        FiniteRack { size: n, point: perm[self.point], table }
    }
}

/// `x ∘ y = x y x⁻¹`, pointed at the unit.
pub fn conjugation_rack(g: &FiniteGroup) -> Result<FiniteRack> {
    if let Some(v) = g.violations().first() {
        return Err(Error::Group(v.clone()));
    }
    let n = g.size();
    let table = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            g.mul(g.mul(x, y), g.inv(x))
        })
        .collect();
    FiniteRack::new(n, g.unit(), table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
        q.iter().map(|&i| p[i]).collect()
    }

    #[test]
    fn singleton_and_trivial_racks_pass() {
        assert!(FiniteRack::singleton().check().passed());
        assert!(FiniteRack::trivial(4, 2).unwrap().check().passed());
    }

    #[test]
    fn s3_conjugation_rack_passes() {
        let q = conjugation_rack(&FiniteGroup::symmetric(3)).unwrap();
        assert_eq!(q.size(), 6);
        assert_eq!(q.point(), 0);
        assert!(q.check().passed());
    }

    #[test]
    fn abelian_conjugation_is_trivial() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(5), FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))] {
            let q = conjugation_rack(&g).unwrap();
            assert_eq!(q, FiniteRack::trivial(g.size(), g.unit()).unwrap());
        }
    }

    #[test]
    fn s3_transposed_entry_is_located() {
        let g = FiniteGroup::symmetric(3);
        let mut q = conjugation_rack(&g).unwrap();
        // Swap two entries of row 1: the row stays a permutation.
        let (a, b) = (q.op(1, 2), q.op(1, 3));
        q.set(1, 2, b);
        q.set(1, 3, a);
        let report = q.check();
        assert_eq!(report.failing_axioms(), vec![RackAxiom::LeftDistributive]);
        let w = &report.violations[0].witness;
        let (x, y, z) = (w[0], w[1], w[2]);
        assert_ne!(q.op(x, q.op(y, z)), q.op(q.op(x, y), q.op(x, z)));
    }

    #[test]
    fn phi_properties() {
        let g = FiniteGroup::symmetric(3);
        let q = conjugation_rack(&g).unwrap();
        let id: Vec<usize> = (0..6).collect();
        assert_eq!(q.phi(q.point()), id);
        for x in 0..6 {
            let p = q.phi(x);
            assert_eq!(p[q.point()], q.point());
            assert!(q.is_automorphism(&p));
            // φ(x)φ(y) = φ(φ(x)y)φ(x)
            for y in 0..6 {
                assert_eq!(compose(&p, &q.phi(y)), compose(&q.phi(q.op(x, y)), &p));
            }
        }
        // Transpositions are the elements of order 2; their φ is an involution.
        for x in 0..6 {
            if g.mul(x, x) == g.unit() && x != g.unit() {
                let p = q.phi(x);
                assert_eq!(compose(&p, &p), id);
                assert_ne!(p, id);
            }
        }
    }

    #[test]
    fn conjugation_commutes_with_relabeling() {
        let g = FiniteGroup::symmetric(3);
        let perm = vec![3, 0, 5, 1, 4, 2];
        let lhs = conjugation_rack(&g.relabel(&perm)).unwrap();
        let rhs = conjugation_rack(&g).unwrap().relabel(&perm);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn size_cap_enforced() {
        let q = FiniteRack::trivial(5, 0).unwrap();
        assert!(q.check_with_cap(4).is_err());
        assert!(q.check_with_cap(5).unwrap().passed());
    }
}
