//! Finite groups as multiplication tables.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    size: usize,
    unit: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates shape and the group axioms.
    pub fn new(size: usize, unit: usize, table: Vec<usize>, inv: Vec<usize>) -> Result<Self> {
        let g = Self::new_unchecked(size, unit, table, inv)?;
        if let Some(v) = g.violations().first() {
            return Err(Error::Group(v.clone()));
        }
        Ok(g)
    }

    /// Validates only the shape; axioms are left to [`FiniteGroup::violations`].
    pub fn new_unchecked(size: usize, unit: usize, table: Vec<usize>, inv: Vec<usize>) -> Result<Self> {
        if size == 0 || unit >= size || table.len() != size * size || inv.len() != size {
            return Err(Error::Dimension(format!("group of size {size} has malformed tables")));
        }
        if table.iter().chain(&inv).any(|&x| x >= size) {
            return Err(Error::Dimension("group table entry out of range".into()));
        }
        Ok(FiniteGroup { size, unit, table, inv })
    }

    /// Builds the inverse map from the table.
    pub fn from_table(size: usize, unit: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::Dimension("group table has wrong length".into()));
        }
        let inv = (0..size)
            .map(|x| {
                (0..size)
                    .find(|&y| table[x * size + y] == unit && table[y * size + x] == unit)
                    .ok_or_else(|| Error::Group(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(size, unit, table, inv)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Human-readable description of every failing axiom instance.
    pub fn violations(&self) -> Vec<String> {
        let n = self.size;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        out.push(format!("associativity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        for x in 0..n {
            if self.mul(self.unit, x) != x || self.mul(x, self.unit) != x {
                out.push(format!("unit fails at {x}"));
            }
            if self.mul(x, self.inv[x]) != self.unit || self.mul(self.inv[x], x) != self.unit {
                out.push(format!("inverse fails at {x}"));
            }
        }
        out
    }

    /// The group with elements renamed by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroup {
        let n = self.size;
        let mut table = vec![0; n * n];
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[perm[x]] = perm[self.inv[x]];
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        FiniteGroup { size: n, unit: perm[self.unit], table, inv }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with unit 0.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_table(n, 0, table).expect("cyclic group")
    }

    /// `S_n` on all permutations of `0..n` in lexicographic order; the
    /// product is composition `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        Self::from_permutations(&perms).expect("symmetric group")
    }

    /// Group generated as a table from a closed list of permutations.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let size = perms.len();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(size * size);
        for s in perms {
            for t in perms {
                let c: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                table.push(index(&c).ok_or_else(|| Error::Group("permutation list is not closed".into()))?);
            }
        }
        let id: Vec<usize> = (0..perms.first().map_or(0, Vec::len)).collect();
        let unit = index(&id).ok_or_else(|| Error::Group("identity missing".into()))?;
        Self::from_table(size, unit, table)
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (a, b) = (self.size, other.size);
        let n = a * b;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (x1, x2) = (x / b, x % b);
                let (y1, y2) = (y / b, y % b);
                table[x * n + y] = self.mul(x1, y1) * b + other.mul(x2, y2);
            }
        }
        Self::from_table(n, self.unit * b + other.unit, table).expect("direct product")
    }

    /// Dihedral group of order `2n`: rotations `r^i` at `i`, reflections `s r^i` at `n + i`.
    pub fn dihedral(n: usize) -> Self {
        let size = 2 * n;
        let mut table = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let (xs, xi) = (x / n, x % n);
                let (ys, yi) = (y / n, y % n);
                // (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
                let i = if ys == 1 { (n - xi) % n } else { xi };
                table[x * size + y] = ((xs + ys) % 2) * n + (i + yi) % n;
            }
        }
        Self::from_table(size, 0, table).expect("dihedral group")
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // Index = 2 * unit + sign, units 1, i, j, k.
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let mut table = vec![0; 64];
        for x in 0..8 {
            for y in 0..8 {
                let (u, neg) = unit_mul(x / 2, y / 2);
                let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
                table[x * 8 + y] = 2 * u + sign;
            }
        }
        Self::from_table(8, 0, table).expect("quaternion group")
    }

    /// One representative of every isomorphism class of groups of the given
    /// order, for orders up to 8.
    pub fn all_of_order(order: usize) -> Result<Vec<FiniteGroup>> {
        let z = Self::cyclic;
        Ok(match order {
            1 | 2 | 3 | 5 | 7 => vec![z(order)],
            4 => vec![z(4), z(2).direct_product(&z(2))],
            6 => vec![z(6), Self::symmetric(3)],
            8 => vec![
                z(8),
                z(4).direct_product(&z(2)),
                z(2).direct_product(&z(2)).direct_product(&z(2)),
                Self::dihedral(4),
                Self::quaternion(),
            ],
            _ => return Err(Error::Cap(format!("group catalogue covers orders 1..=8, not {order}"))),
        })
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_valid_and_nonisomorphic_by_invariants() {
        for order in 1..=8 {
            let groups = FiniteGroup::all_of_order(order).unwrap();
            for g in &groups {
                assert_eq!(g.size(), order);
                assert!(g.violations().is_empty());
            }
            // Element-order profiles separate every catalogue entry.
            let profile = |g: &FiniteGroup| {
                let mut orders: Vec<usize> = (0..order)
                    .map(|x| {
                        let mut k = 1;
                        let mut y = x;
                        while y != g.unit() {
                            y = g.mul(y, x);
                            k += 1;
                        }
                        k
                    })
                    .collect();
                orders.sort();
                (g.is_abelian(), orders)
            };
            let mut seen: Vec<_> = groups.iter().map(profile).collect();
            seen.dedup();
            assert_eq!(seen.len(), groups.len(), "order {order}");
        }
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.size(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.unit(), 0);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::new(2, 0, vec![0, 1, 1, 1], vec![0, 1]).is_err());
        assert!(FiniteGroup::new(2, 0, vec![0, 1, 1], vec![0, 1]).is_err());
    }
}
