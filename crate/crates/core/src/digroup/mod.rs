//! Finite digroups: axioms G1–G6, bar-units, the inverse group, the
//! decomposition `G ≅ E × J`, the induced conjugation rack and small-order
//! enumeration.

use std::fmt;

use crate::error::{Error, Result};
use crate::rack::{FiniteGroup, FiniteRack};

mod enumerate;
mod suite;

pub use enumerate::{
    backtrack_digroups, canonical_form, enumerate_digroups, factorization_counts, isomorphic, BacktrackOutcome,
    Enumeration, BACKTRACK_CAP, ENUMERATION_CAP,
};
pub use suite::{
    induced_rack, induced_rack_suite, right_group_suite, vdash_variant_of_rack_identity_1, IdentityCheck, IdentityReport,
};

/// `(G, ⊢, ⊣, 1, ⁻¹)` as tables; `vdash[x * n + y] = x ⊢ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteDigroup {
    size: usize,
    unit: usize,
    vdash: Vec<usize>,
    dashv: Vec<usize>,
    inv: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DigroupAxiom {
    /// `(G, ⊢)` is a semigroup.
    G1Vdash,
    /// `(G, ⊣)` is a semigroup.
    G1Dashv,
    /// `x ⊢ (y ⊣ z) = (x ⊢ y) ⊣ z`
    G2,
    /// `x ⊣ (y ⊢ z) = x ⊣ (y ⊣ z)`
    G3,
    /// `(x ⊣ y) ⊢ z = (x ⊢ y) ⊢ z`
    G4,
    /// `1 ⊢ x = x ⊣ 1 = x`
    G5,
    /// `x ⊢ x⁻¹ = x⁻¹ ⊣ x = 1`
    G6,
}

impl DigroupAxiom {
    pub const ALL: [DigroupAxiom; 7] =
        [Self::G1Vdash, Self::G1Dashv, Self::G2, Self::G3, Self::G4, Self::G5, Self::G6];

    pub fn label(self) -> &'static str {
        match self {
            Self::G1Vdash => "G1 (⊢ associative)",
            Self::G1Dashv => "G1 (⊣ associative)",
            Self::G2 => "G2 (x⊢(y⊣z) = (x⊢y)⊣z)",
            Self::G3 => "G3 (x⊣(y⊢z) = x⊣(y⊣z))",
            Self::G4 => "G4 ((x⊣y)⊢z = (x⊢y)⊢z)",
            Self::G5 => "G5 (1⊢x = x⊣1 = x)",
            Self::G6 => "G6 (x⊢x⁻¹ = x⁻¹⊣x = 1)",
        }
    }

    /// Short name, `G1` for both halves of associativity.
    pub fn name(self) -> &'static str {
        match self {
            Self::G1Vdash | Self::G1Dashv => "G1",
            Self::G2 => "G2",
            Self::G3 => "G3",
            Self::G4 => "G4",
            Self::G5 => "G5",
            Self::G6 => "G6",
        }
    }
}

impl fmt::Display for DigroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Witness `(x, y, z)` for G1–G4 and `(x,)` for G5, G6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigroupViolation {
    pub axiom: DigroupAxiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DigroupReport {
    pub violations: Vec<DigroupViolation>,
    /// `⊢ = ⊣`.
    pub is_group: bool,
    /// Elements admitting more than one inverse satisfying G6.
    pub ambiguous_inverses: Vec<usize>,
}

impl DigroupReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failing_axioms(&self) -> Vec<DigroupAxiom> {
        let mut v: Vec<_> = self.violations.iter().map(|x| x.axiom).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn of(&self, axiom: DigroupAxiom) -> impl Iterator<Item = &DigroupViolation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }
}

impl FiniteDigroup {
    /// Validates shape only; axioms are checked by [`FiniteDigroup::check`].
    pub fn new(size: usize, unit: usize, vdash: Vec<usize>, dashv: Vec<usize>, inv: Vec<usize>) -> Result<Self> {
        if size == 0 || unit >= size || vdash.len() != size * size || dashv.len() != size * size || inv.len() != size
        {
            return Err(Error::Dimension(format!("digroup of size {size} has malformed tables")));
        }
        if vdash.iter().chain(&dashv).chain(&inv).any(|&x| x >= size) {
            return Err(Error::Dimension("digroup table entry out of range".into()));
        }
        Ok(FiniteDigroup { size, unit, vdash, dashv, inv })
    }

    pub fn from_rows(unit: usize, vdash: &[Vec<usize>], dashv: &[Vec<usize>], inv: Vec<usize>) -> Result<Self> {
        Self::new(vdash.len(), unit, vdash.concat(), dashv.concat(), inv)
    }

    /// A group as a digroup with `⊢ = ⊣`.
    pub fn from_group(g: &FiniteGroup) -> Self {
        FiniteDigroup {
            size: g.size(),
            unit: g.unit(),
            vdash: g.table().to_vec(),
            dashv: g.table().to_vec(),
            inv: g.inverses().to_vec(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn vd(&self, x: usize, y: usize) -> usize {
        self.vdash[x * self.size + y]
    }

    pub fn dv(&self, x: usize, y: usize) -> usize {
        self.dashv[x * self.size + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn vdash_table(&self) -> &[usize] {
        &self.vdash
    }

    pub fn dashv_table(&self) -> &[usize] {
        &self.dashv
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn rows(table: &[usize], n: usize) -> Vec<Vec<usize>> {
        table.chunks(n).map(<[usize]>::to_vec).collect()
    }

    pub fn set_vdash(&mut self, x: usize, y: usize, v: usize) {
        self.vdash[x * self.size + y] = v;
    }

    pub fn set_dashv(&mut self, x: usize, y: usize, v: usize) {
        self.dashv[x * self.size + y] = v;
    }

    pub fn set_inv(&mut self, x: usize, v: usize) {
        self.inv[x] = v;
    }

    pub fn set_unit(&mut self, u: usize) {
        self.unit = u;
    }

    /// `x ∘ y = x ⊢ y ⊣ x⁻¹`.
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.dv(self.vd(x, y), self.inv(x))
    }

    pub fn is_group(&self) -> bool {
        self.vdash == self.dashv
    }

    /// Exhaustive check of G1–G6.
    pub fn check(&self) -> DigroupReport {
        let n = self.size;
        let mut violations = Vec::new();
        let mut push = |axiom, witness: Vec<usize>| violations.push(DigroupViolation { axiom, witness });
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (vd, dv) = (|a, b| self.vd(a, b), |a, b| self.dv(a, b));
                    if vd(x, vd(y, z)) != vd(vd(x, y), z) {
                        push(DigroupAxiom::G1Vdash, vec![x, y, z]);
                    }
                    if dv(x, dv(y, z)) != dv(dv(x, y), z) {
                        push(DigroupAxiom::G1Dashv, vec![x, y, z]);
                    }
                    if vd(x, dv(y, z)) != dv(vd(x, y), z) {
                        push(DigroupAxiom::G2, vec![x, y, z]);
                    }
                    if dv(x, vd(y, z)) != dv(x, dv(y, z)) {
                        push(DigroupAxiom::G3, vec![x, y, z]);
                    }
                    if vd(dv(x, y), z) != vd(vd(x, y), z) {
                        push(DigroupAxiom::G4, vec![x, y, z]);
                    }
                }
            }
        }
        let one = self.unit;
        for x in 0..n {
            if self.vd(one, x) != x || self.dv(x, one) != x {
                push(DigroupAxiom::G5, vec![x]);
            }
        }
        for x in 0..n {
            let xi = self.inv(x);
            if self.vd(x, xi) != one || self.dv(xi, x) != one {
                push(DigroupAxiom::G6, vec![x]);
            }
        }
        let ambiguous_inverses = (0..n)
            .filter(|&x| (0..n).filter(|&y| self.vd(x, y) == one && self.dv(y, x) == one).count() > 1)
            .collect();
        DigroupReport { violations, is_group: self.is_group(), ambiguous_inverses }
    }

    /// Errors with the first violation unless every axiom holds.
    pub fn require_digroup(&self) -> Result<()> {
        match self.check().violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotDigroup(format!("{} fails at {:?}", v.axiom, v.witness))),
        }
    }

    /// The digroup with elements renamed by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteDigroup {
        let n = self.size;
        let mut vdash = vec![0; n * n];
        let mut dashv = vec![0; n * n];
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[perm[x]] = perm[self.inv(x)];
            for y in 0..n {
                vdash[perm[x] * n + perm[y]] = perm[self.vd(x, y)];
                dashv[perm[x] * n + perm[y]] = perm[self.dv(x, y)];
            }
        }
        FiniteDigroup { size: n, unit: perm[self.unit], vdash, dashv, inv }
    }

    /// `L⊢(x)` as an image list.
    pub fn left_vdash(&self, x: usize) -> Vec<usize> {
        self.vdash[x * self.size..(x + 1) * self.size].to_vec()
    }

    /// `R⊣(y)` as an image list.
    pub fn right_dashv(&self, y: usize) -> Vec<usize> {
        (0..self.size).map(|x| self.dv(x, y)).collect()
    }
}

/// `E = {e : e ⊢ x = x ⊣ e = x for all x}`, ascending.
pub fn bar_units(g: &FiniteDigroup) -> Vec<usize> {
    let n = g.size();
    (0..n).filter(|&e| (0..n).all(|x| g.vd(e, x) == x && g.dv(x, e) == x)).collect()
}

/// Left neutral elements of `(G, ⊢)` and right neutral elements of `(G, ⊣)`.
pub fn one_sided_units(g: &FiniteDigroup) -> (Vec<usize>, Vec<usize>) {
    let n = g.size();
    let left = (0..n).filter(|&e| (0..n).all(|x| g.vd(e, x) == x)).collect();
    let right = (0..n).filter(|&e| (0..n).all(|x| g.dv(x, e) == x)).collect();
    (left, right)
}

/// `J = {x⁻¹}` with its group table in the order of `elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseGroup {
    pub elements: Vec<usize>,
    pub group: FiniteGroup,
}

impl InverseGroup {
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }
}

pub fn inverse_group(g: &FiniteDigroup) -> Result<InverseGroup> {
    let mut elements: Vec<usize> = g.inverses().to_vec();
    elements.sort_unstable();
    elements.dedup();
    let pos = |x: usize| {
        elements
            .binary_search(&x)
            .map_err(|_| Error::Invariant(format!("J is not closed: {x} is not an inverse")))
    };
    let k = elements.len();
    let mut table = Vec::with_capacity(k * k);
    for &h in &elements {
        for &l in &elements {
            if g.vd(h, l) != g.dv(h, l) {
                return Err(Error::Invariant(format!("⊢ and ⊣ differ on J at ({h}, {l})")));
            }
            table.push(pos(g.vd(h, l))?);
        }
    }
    let unit = pos(g.unit())?;
    let inv = elements.iter().map(|&h| pos(g.inv(h))).collect::<Result<Vec<_>>>()?;
    let group = FiniteGroup::new(k, unit, table, inv).map_err(|e| Error::Invariant(format!("J: {e}")))?;
    Ok(InverseGroup { elements, group })
}

/// `θ: E × J → G, (u, h) ↦ u ⊣ h`, checked against
/// `(u,h) ⊢ (v,k) = (h∘v, h⊢k)` and `(u,h) ⊣ (v,k) = (u, h⊣k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigroupDecomposition {
    pub bar_units: Vec<usize>,
    pub inverse_group: InverseGroup,
    /// `theta[i * |J| + j] = E[i] ⊣ J[j]`.
    pub theta: Vec<usize>,
    /// Pairs of `E × J` checked for each operation.
    pub pairs_checked: usize,
    /// Projection of each `x` onto `E` along `J ⊢ E`: `x⁻¹ ⊢ x`.
    pub projection_vdash: Vec<usize>,
    /// Projection of each `x` onto `E` along `E ⊣ J`: `x ⊣ x⁻¹`.
    pub projection_dashv: Vec<usize>,
}

impl DigroupDecomposition {
    pub fn projections_differ(&self) -> bool {
        self.projection_vdash != self.projection_dashv
    }

    /// `θ⁻¹(x)` as indices into `(bar_units, inverse_group.elements)`.
    pub fn coordinates(&self, x: usize) -> Option<(usize, usize)> {
        let k = self.inverse_group.elements.len();
        self.theta.iter().position(|&t| t == x).map(|i| (i / k, i % k))
    }
}

/// Builds and verifies the decomposition. A failure means the input is not
/// a digroup or the structure theorem is broken; it is reported as
/// [`Error::Invariant`].
pub fn decompose(g: &FiniteDigroup) -> Result<DigroupDecomposition> {
    g.require_digroup()?;
    let n = g.size();
    let e = bar_units(g);
    let j = inverse_group(g)?;
    let k = j.elements.len();
    if e.len() * k != n {
        return Err(Error::Invariant(format!("|E|·|J| = {}·{} ≠ {n}", e.len(), k)));
    }
    let mut theta = Vec::with_capacity(n);
    for &u in &e {
        for &h in &j.elements {
            theta.push(g.dv(u, h));
        }
    }
    let mut seen = vec![false; n];
    for &t in &theta {
        if std::mem::replace(&mut seen[t], true) {
            return Err(Error::Invariant(format!("θ is not injective: {t} is hit twice")));
        }
    }
    let e_pos = |x: usize| e.binary_search(&x).map_err(|_| Error::Invariant(format!("{x} is not a bar-unit")));
    for (a, &u) in e.iter().enumerate() {
        for (b, &h) in j.elements.iter().enumerate() {
            for (c, &v) in e.iter().enumerate() {
                for (d, &kk) in j.elements.iter().enumerate() {
                    let (x, y) = (theta[a * k + b], theta[c * k + d]);
                    // (u,h) ⊢ (v,k) = (h∘v, h⊢k)
                    let hv = e_pos(g.conj(h, v))?;
                    debug_assert_eq!(e[c], v);
                    let hk = j.group.mul(b, d);
                    if g.vd(x, y) != theta[hv * k + hk] {
                        return Err(Error::Invariant(format!("θ fails to intertwine ⊢ at ({u},{h}),({v},{kk})")));
                    }
                    // (u,h) ⊣ (v,k) = (u, h⊣k)
                    if g.dv(x, y) != theta[a * k + hk] {
                        return Err(Error::Invariant(format!("θ fails to intertwine ⊣ at ({u},{h}),({v},{kk})")));
                    }
                }
            }
        }
    }
    let projection_vdash = (0..n).map(|x| g.vd(g.inv(x), x)).collect();
    let projection_dashv = (0..n).map(|x| g.dv(x, g.inv(x))).collect();
    Ok(DigroupDecomposition {
        bar_units: e,
        inverse_group: j,
        theta,
        pairs_checked: n * n,
        projection_vdash,
        projection_dashv,
    })
}

/// `G = M × H` with `(u,h) ⊢ (v,k) = (hv, hk)`, `(u,h) ⊣ (v,k) = (u, hk)`
/// and `(u,h)⁻¹ = (e, h⁻¹)`, where `action[h]` is the permutation of `M`
/// by `h` and `e` is a fixed point. Element `(u, h)` has index
/// `u * |H| + h`. Any action fixing `e` gives a digroup; this constructor
/// also demands transitivity on `M ∖ {e}`.
pub fn standard_digroup(m_size: usize, fixed: usize, h: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteDigroup> {
    validate_action(m_size, fixed, h, action)?;
    if m_size > 1 {
        let start = (0..m_size).find(|&u| u != fixed).unwrap();
        let mut orbit: Vec<usize> = action.iter().map(|p| p[start]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit.len() != m_size - 1 {
            return Err(Error::Action(format!("H is not transitive on M ∖ {{{fixed}}}")));
        }
    }
    Ok(product_digroup(m_size, fixed, h, action))
}

/// Checks that `action` is a homomorphism `H → Sym(M)` fixing `fixed`.
pub fn validate_action(m_size: usize, fixed: usize, h: &FiniteGroup, action: &[Vec<usize>]) -> Result<()> {
    if fixed >= m_size || action.len() != h.size() {
        return Err(Error::Action("action has the wrong shape".into()));
    }
    for (x, p) in action.iter().enumerate() {
        let mut seen = vec![false; m_size];
        if p.len() != m_size || p.iter().any(|&i| i >= m_size || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Action(format!("action of element {x} is not a permutation of M")));
        }
        if p[fixed] != fixed {
            return Err(Error::Action(format!("element {x} moves the fixed point {fixed}")));
        }
    }
    for x in 0..h.size() {
        for y in 0..h.size() {
            let composed: Vec<usize> = action[y].iter().map(|&i| action[x][i]).collect();
            if composed != action[h.mul(x, y)] {
                return Err(Error::Action(format!("action is not a homomorphism at ({x}, {y})")));
            }
        }
    }
    Ok(())
}

/// [`standard_digroup`] without the transitivity requirement or any
/// validation.
pub fn product_digroup(m_size: usize, fixed: usize, h: &FiniteGroup, action: &[Vec<usize>]) -> FiniteDigroup {
    let k = h.size();
    let n = m_size * k;
    let idx = |u: usize, a: usize| u * k + a;
    let mut vdash = vec![0; n * n];
    let mut dashv = vec![0; n * n];
    for x in 0..n {
        let (u, a) = (x / k, x % k);
        for y in 0..n {
            let (v, b) = (y / k, y % k);
            vdash[x * n + y] = idx(action[a][v], h.mul(a, b));
            dashv[x * n + y] = idx(u, h.mul(a, b));
        }
    }
    let inv = (0..n).map(|x| idx(fixed, h.inv(x % k))).collect();
    FiniteDigroup { size: n, unit: idx(fixed, h.unit()), vdash, dashv, inv }
}

/// `M = {e, a, b}`, `H = Z₂` swapping `a` and `b`.
pub fn order6_standard() -> FiniteDigroup {
    standard_digroup(3, 0, &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).expect("order-6 digroup")
}

/// `M = {e, a, b, c}`, `H = S₃` permuting `a, b, c`.
pub fn order24_standard() -> FiniteDigroup {
    let action: Vec<Vec<usize>> = crate::rack::permutations(3)
        .into_iter()
        .map(|p| std::iter::once(0).chain(p.into_iter().map(|i| i + 1)).collect())
        .collect();
    standard_digroup(4, 0, &FiniteGroup::symmetric(3), &action).expect("order-24 digroup")
}

/// Induced rack sanity: `x ∘ y` for the conjugation of the digroup.
pub fn conjugation_table(g: &FiniteDigroup) -> Vec<usize> {
    let n = g.size();
    (0..n * n).map(|i| g.conj(i / n, i % n)).collect()
}

/// Orbits of `J` acting on `E` by `∘`, each sorted, in order of least element.
pub fn j_orbits_on_e(g: &FiniteDigroup) -> Result<Vec<Vec<usize>>> {
    let e = bar_units(g);
    let j = inverse_group(g)?;
    let mut done = vec![false; g.size()];
    let mut out = Vec::new();
    for &u in &e {
        if done[u] {
            continue;
        }
        let mut orbit: Vec<usize> = j.elements.iter().map(|&h| g.conj(h, u)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &v in &orbit {
            done[v] = true;
        }
        out.push(orbit);
    }
    Ok(out)
}

/// True iff the rack is the one induced by `g`.
pub fn induces(g: &FiniteDigroup, q: &FiniteRack) -> bool {
    q.size() == g.size() && q.point() == g.unit() && q.table() == conjugation_table(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::conjugation_rack;

    #[test]
    fn groups_are_digroups() {
        for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)] {
            let d = FiniteDigroup::from_group(&g);
            let r = d.check();
            assert!(r.passed());
            assert!(r.is_group);
            assert_eq!(bar_units(&d), vec![g.unit()]);
            assert_eq!(inverse_group(&d).unwrap().group, g);
            let dec = decompose(&d).unwrap();
            assert_eq!(dec.bar_units.len(), 1);
            assert!(!dec.projections_differ());
        }
    }

    #[test]
    fn order6_standard_shape() {
        let g = order6_standard();
        let r = g.check();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(!r.is_group);
        assert!(r.ambiguous_inverses.is_empty());
        assert_eq!(g.unit(), 0);
        // E = M × {1}, J = {e} × H
        assert_eq!(bar_units(&g), vec![0, 2, 4]);
        let j = inverse_group(&g).unwrap();
        assert_eq!(j.elements, vec![0, 1]);
        assert_eq!(j.group, FiniteGroup::cyclic(2));
    }

    #[test]
    fn order6_projections_match_hand_computation() {
        let g = order6_standard();
        let d = decompose(&g).unwrap();
        assert_eq!(d.pairs_checked, 36);
        // (u,h) ↦ (h⁻¹u, 1) along ⊢ and (u, 1) along ⊣.
        let swap = [0, 2, 1];
        for x in 0..6 {
            let (u, h) = (x / 2, x % 2);
            let hu = if h == 1 { swap[u] } else { u };
            assert_eq!(d.projection_vdash[x], hu * 2);
            assert_eq!(d.projection_dashv[x], u * 2);
        }
        assert!(d.projections_differ());
    }

    #[test]
    fn order24_standard_shape() {
        let g = order24_standard();
        assert!(g.check().passed());
        assert_eq!(bar_units(&g).len(), 4);
        let j = inverse_group(&g).unwrap();
        assert_eq!(j.group.size(), 6);
        assert!(!j.group.is_abelian());
        let d = decompose(&g).unwrap();
        assert_eq!(d.theta.len(), 24);
    }

    #[test]
    fn trivial_m_gives_the_group() {
        let h = FiniteGroup::symmetric(3);
        let action = vec![vec![0]; 6];
        let g = standard_digroup(1, 0, &h, &action).unwrap();
        assert_eq!(g, FiniteDigroup::from_group(&h));
    }

    #[test]
    fn action_preconditions() {
        let z2 = FiniteGroup::cyclic(2);
        let err = standard_digroup(3, 0, &z2, &[vec![0, 1, 2], vec![1, 0, 2]]).unwrap_err();
        assert!(err.to_string().contains("fixed point"));
        let err = standard_digroup(4, 0, &z2, &[vec![0, 1, 2, 3], vec![0, 2, 1, 3]]).unwrap_err();
        assert!(err.to_string().contains("transitive"));
        let err = standard_digroup(3, 0, &z2, &[vec![0, 2, 1], vec![0, 2, 1]]).unwrap_err();
        assert!(err.to_string().contains("homomorphism"));
    }

    #[test]
    fn single_entry_mutation_is_caught() {
        let mut g = order6_standard();
        // (a,1) ⊣ (b,s): the correct value is (a, s).
        let (a1, bs) = (2, 5);
        assert_eq!(g.dv(a1, bs), 3);
        g.set_dashv(a1, bs, 5);
        let r = g.check();
        assert!(!r.passed());
        let fails = r.failing_axioms();
        assert!(fails.contains(&DigroupAxiom::G1Dashv) || fails.contains(&DigroupAxiom::G2));
    }

    #[test]
    fn j_orbits_of_order6() {
        assert_eq!(j_orbits_on_e(&order6_standard()).unwrap(), vec![vec![0], vec![2, 4]]);
    }

    #[test]
    fn group_digroup_induces_conjugation_rack() {
        let g = FiniteGroup::symmetric(3);
        let d = FiniteDigroup::from_group(&g);
        assert!(induces(&d, &conjugation_rack(&g).unwrap()));
    }

    #[test]
    fn units_lemma_on_examples() {
        for g in [order6_standard(), order24_standard()] {
            let (l, r) = one_sided_units(&g);
            assert_eq!(l, r);
            assert_eq!(l, bar_units(&g));
        }
    }
}
