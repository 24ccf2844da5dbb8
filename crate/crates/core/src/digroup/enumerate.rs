//! Digroups of small order up to isomorphism, two ways: assembled from the
//! decomposition `E × J`, and by a raw table search over G1, G2, G5, G6.
//!
//! Isomorphisms are bijections preserving `⊢`, `⊣` and the distinguished
//! unit. The canonical form puts the unit at 0 and takes the
//! lexicographically least pair of tables over all such relabelings.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rack::{permutations, FiniteGroup};

use super::{bar_units, product_digroup, validate_action, FiniteDigroup};

/// Largest order handled by [`enumerate_digroups`].
pub const ENUMERATION_CAP: usize = 8;
/// Largest order handled by [`backtrack_digroups`].
pub const BACKTRACK_CAP: usize = 6;

/// Least relabeling of `g` with its unit at 0.
pub fn canonical_form(g: &FiniteDigroup) -> FiniteDigroup {
    let n = g.size();
    let others: Vec<usize> = (0..n).filter(|&x| x != g.unit()).collect();
    let mut best: Option<FiniteDigroup> = None;
    let mut perm = vec![0; n];
    for p in permutations(n - 1) {
        perm[g.unit()] = 0;
        for (i, &x) in others.iter().enumerate() {
            perm[x] = p[i] + 1;
        }
        let cand = g.relabel(&perm);
        let better = match &best {
            None => true,
            Some(b) => (cand.vdash_table(), cand.dashv_table()) < (b.vdash_table(), b.dashv_table()),
        };
        if better {
            best = Some(cand);
        }
    }
    best.expect("at least one relabeling")
}

pub fn isomorphic(a: &FiniteDigroup, b: &FiniteDigroup) -> bool {
    a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Number of classes per `(|E|, |J|)`.
pub fn factorization_counts(classes: &[FiniteDigroup]) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for g in classes {
        let e = bar_units(g).len();
        *out.entry((e, g.size() / e)).or_insert(0) += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub order: usize,
    /// Canonical forms, ascending.
    pub classes: Vec<FiniteDigroup>,
    pub by_factorization: BTreeMap<(usize, usize), usize>,
}

/// Every digroup of the given order up to isomorphism, as `E × J` for each
/// group `J` and each action of `J` on `E` fixing the unit.
pub fn enumerate_digroups(order: usize) -> Result<Enumeration> {
    if order == 0 || order > ENUMERATION_CAP {
        return Err(Error::Cap(format!("enumeration covers orders 1..={ENUMERATION_CAP}, not {order}")));
    }
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut classes = Vec::new();
    for e in (1..=order).filter(|e| order % e == 0) {
        let j_order = order / e;
        // Permutations of 0..e fixing 0.
        let fixing: Vec<Vec<usize>> =
            permutations(e - 1).into_iter().map(|p| std::iter::once(0).chain(p.into_iter().map(|i| i + 1)).collect()).collect();
        for j in FiniteGroup::all_of_order(j_order)? {
            let mut choice = vec![0usize; j_order];
            loop {
                let action: Vec<Vec<usize>> = choice.iter().map(|&c| fixing[c].clone()).collect();
                if validate_action(e, 0, &j, &action).is_ok() {
                    let g = canonical_form(&product_digroup(e, 0, &j, &action));
                    debug_assert!(g.check().passed());
                    if seen.insert((g.vdash_table().to_vec(), g.dashv_table().to_vec())) {
                        classes.push(g);
                    }
                }
                // Next choice in mixed radix; the unit must act trivially.
                let mut i = 0;
                loop {
                    if i == j_order {
                        break;
                    }
                    if i == j.unit() {
                        i += 1;
                        continue;
                    }
                    choice[i] += 1;
                    if choice[i] < fixing.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == j_order {
                    break;
                }
            }
        }
    }
    classes.sort_by(|a, b| (a.vdash_table(), a.dashv_table()).cmp(&(b.vdash_table(), b.dashv_table())));
    let by_factorization = factorization_counts(&classes);
    Ok(Enumeration { order, classes, by_factorization })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BacktrackOutcome {
    pub order: usize,
    /// Associative `⊢` tables with unit 0 and injective rows.
    pub vdash_tables: usize,
    /// Table pairs satisfying G1, G2, G5 and G6 with unit 0.
    pub labeled: usize,
    /// Table pairs among those that fail G3 or G4.
    pub g3_g4_failures: usize,
    pub classes: Vec<FiniteDigroup>,
    pub by_factorization: BTreeMap<(usize, usize), usize>,
}

const UNSET: usize = usize::MAX;

struct Search {
    n: usize,
    t: Vec<usize>,
}

impl Search {
    fn get(&self, a: usize, b: usize) -> usize {
        self.t[a * self.n + b]
    }

    /// `a(bc) = (ab)c` unless some needed entry is unset.
    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let (ab, bc) = (self.get(a, b), self.get(b, c));
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let (l, r) = (self.get(a, bc), self.get(ab, c));
        l == UNSET || r == UNSET || l == r
    }

    /// Associativity on every triple that reads cell `(x, y)`.
    fn assoc_ok(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        for k in 0..n {
            if !self.triple_ok(x, y, k) || !self.triple_ok(k, x, y) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.get(a, b) == y && !self.triple_ok(x, a, b) {
                    return false;
                }
                if self.get(a, b) == x && !self.triple_ok(a, b, y) {
                    return false;
                }
            }
        }
        true
    }
}

fn search_vdash(s: &mut Search, cell: usize, out: &mut Vec<Vec<usize>>) {
    let n = s.n;
    if cell == n * n {
        out.push(s.t.clone());
        return;
    }
    let (x, y) = (cell / n, cell % n);
    for v in 0..n {
        // Rows are injective: with x ⊢ x' = 1, u = x' ⊢ x has u ⊢ 1 = 1,
        // so u ⊢ y = (u ⊢ 1) ⊢ y = y and x' ⊢ _ undoes x ⊢ _.
        if (0..y).any(|c| s.get(x, c) == v) {
            continue;
        }
        s.t[cell] = v;
        if s.assoc_ok(x, y) {
            search_vdash(s, cell + 1, out);
        }
    }
    s.t[cell] = UNSET;
}

struct DashvSearch<'a> {
    vd: &'a [usize],
    d: Search,
    trail: Vec<usize>,
}

impl DashvSearch<'_> {
    /// Sets `y ⊣ z = v` together with everything G2 forces from it, namely
    /// `(x ⊢ y) ⊣ z = x ⊢ v` for every `x`. Returns false on a clash with a
    /// set cell, with column injectivity, or with associativity.
    fn assign(&mut self, y: usize, z: usize, v: usize) -> bool {
        let n = self.d.n;
        let start = self.trail.len();
        let mut queue = vec![(y, z, v)];
        while let Some((y, z, v)) = queue.pop() {
            let cur = self.d.get(y, z);
            if cur == v {
                continue;
            }
            if cur != UNSET || (0..n).any(|r| self.d.get(r, z) == v) {
                return false;
            }
            self.d.t[y * n + z] = v;
            self.trail.push(y * n + z);
            for x in 0..n {
                queue.push((self.vd[x * n + y], z, self.vd[x * n + v]));
            }
        }
        self.trail[start..].iter().all(|&c| self.d.assoc_ok(c / n, c % n))
    }

    fn undo(&mut self, mark: usize) {
        for c in self.trail.drain(mark..) {
            self.d.t[c] = UNSET;
        }
    }
}

fn search_dashv(s: &mut DashvSearch<'_>, out: &mut Vec<Vec<usize>>) {
    let n = s.d.n;
    let Some(cell) = s.d.t.iter().position(|&v| v == UNSET) else {
        out.push(s.d.t.clone());
        return;
    };
    for v in 0..n {
        let mark = s.trail.len();
        if s.assign(cell / n, cell % n, v) {
            search_dashv(s, out);
        }
        s.undo(mark);
    }
}

/// Raw search for table pairs with unit 0 satisfying G1, G2, G5 and G6,
/// followed by a check of G3 and G4 on every solution.
pub fn backtrack_digroups(order: usize) -> Result<BacktrackOutcome> {
    if order == 0 || order > BACKTRACK_CAP {
        return Err(Error::Cap(format!("backtracking covers orders 1..={BACKTRACK_CAP}, not {order}")));
    }
    let n = order;
    let mut s = Search { n, t: vec![UNSET; n * n] };
    for y in 0..n {
        s.t[y] = y;
    }
    let mut vdash_tables = Vec::new();
    search_vdash(&mut s, n, &mut vdash_tables);

    let mut labeled = 0;
    let mut g3_g4_failures = 0;
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut classes = Vec::new();
    for vd in &vdash_tables {
        let mut ds = DashvSearch { vd, d: Search { n, t: vec![UNSET; n * n] }, trail: Vec::new() };
        // G5 fixes x ⊣ 1 = x. Rows of ⊢ are injective, so G6 names the
        // unique y with x ⊢ y = 1 and requires y ⊣ x = 1.
        let forced = (0..n).all(|x| ds.assign(x, 0, x))
            && (0..n).all(|x| (0..n).find(|&y| vd[x * n + y] == 0).is_some_and(|y| ds.assign(y, x, 0)));
        let mut dashv_tables = Vec::new();
        if forced {
            search_dashv(&mut ds, &mut dashv_tables);
        }
        for dv in dashv_tables {
            // G6 again, now as a check that also yields the inverses.
            let inv: Option<Vec<usize>> =
                (0..n).map(|x| (0..n).find(|&y| vd[x * n + y] == 0 && dv[y * n + x] == 0)).collect();
            let Some(inv) = inv else { continue };
            labeled += 1;
            let g = FiniteDigroup::new(n, 0, vd.clone(), dv, inv)?;
            if !g.check().passed() {
                g3_g4_failures += 1;
                continue;
            }
            let c = canonical_form(&g);
            if seen.insert((c.vdash_table().to_vec(), c.dashv_table().to_vec())) {
                classes.push(c);
            }
        }
    }
    classes.sort_by(|a, b| (a.vdash_table(), a.dashv_table()).cmp(&(b.vdash_table(), b.dashv_table())));
    let by_factorization = factorization_counts(&classes);
    Ok(BacktrackOutcome { order, vdash_tables: vdash_tables.len(), labeled, g3_g4_failures, classes, by_factorization })
}

#[cfg(test)]
mod tests {
    use super::super::{decompose, order6_standard};
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_digroups(1).unwrap().classes.len(), 1);
        assert_eq!(enumerate_digroups(2).unwrap().classes.len(), 2);
        assert_eq!(enumerate_digroups(3).unwrap().classes.len(), 2);
        assert!(enumerate_digroups(9).is_err());
        assert!(backtrack_digroups(7).is_err());
    }

    #[test]
    fn order6_by_factorization() {
        let e = enumerate_digroups(6).unwrap();
        let expected: BTreeMap<(usize, usize), usize> =
            [((1, 6), 2), ((2, 3), 1), ((3, 2), 2), ((6, 1), 1)].into_iter().collect();
        assert_eq!(e.by_factorization, expected);
        assert!(e.classes.iter().any(|g| isomorphic(g, &order6_standard())));
    }

    #[test]
    fn enumerators_agree_through_six() {
        for order in 1..=BACKTRACK_CAP {
            let a = enumerate_digroups(order).unwrap();
            let b = backtrack_digroups(order).unwrap();
            assert_eq!(b.g3_g4_failures, 0);
            assert_eq!(a.classes, b.classes, "order {order}");
        }
    }

    #[test]
    fn enumerated_digroups_decompose() {
        for order in 1..=6 {
            for g in enumerate_digroups(order).unwrap().classes {
                let d = decompose(&g).unwrap();
                assert_eq!(d.bar_units.len() * d.inverse_group.elements.len(), order);
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = order6_standard();
        let h = g.relabel(&[0, 3, 5, 1, 2, 4]);
        assert_ne!(g, h);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_eq!(canonical_form(&g).unit(), 0);
    }
}
