//! Finite free factors given by multiplication tables.
//!
//! Elements are indices into the table; index 0 is always the identity. Every search
//! (conjugacy, commutators, roots) is exhaustive and returns the first match in index
//! order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the free product: a nontrivial element of one factor.
///
/// The identity of a factor is representable (`elem == 0`) so that factor-level
/// arithmetic is closed, but it never appears inside a normal-form [`Word`](crate::Word).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactorElement {
    pub factor: usize,
    pub elem: usize,
}

impl FactorElement {
    pub const fn new(factor: usize, elem: usize) -> Self {
        Self { factor, elem }
    }

    pub const fn identity(factor: usize) -> Self {
        Self { factor, elem: 0 }
    }

    pub const fn is_identity(&self) -> bool {
        self.elem == 0
    }
}

/// A finite group given by element names and a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorGroup {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
}

impl FactorGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// `table[g][h]` is the index of `g·h`. The table must have identity row and
    /// column 0, be a Latin square and be associative.
    pub fn from_table(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let name = name.into();
        let bad = |reason: String| Error::InvalidFactor {
            group: name.clone(),
            reason,
        };
        let n = elements.len();
        if n == 0 {
            return Err(bad("no elements".into()));
        }
        for (i, e) in elements.iter().enumerate() {
            if e.is_empty() {
                return Err(bad(format!("element {i} has an empty name")));
            }
            if e.chars().any(char::is_whitespace) {
                return Err(bad(format!("element name `{e}` contains whitespace")));
            }
            if elements[..i].contains(e) {
                return Err(bad(format!("duplicate element name `{e}`")));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(bad(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&k| k >= n) {
            return Err(bad("table entry out of range".into()));
        }
        if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
            return Err(bad("row and column 0 must be the identity".into()));
        }
        let mut seen = vec![false; n];
        for g in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                if std::mem::replace(&mut seen[table[g][h]], true) {
                    return Err(bad(format!("row {g} is not a permutation")));
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                if std::mem::replace(&mut seen[table[h][g]], true) {
                    return Err(bad(format!("column {g} is not a permutation")));
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = table[g][h];
                for k in 0..n {
                    if table[gh][k] != table[g][table[h][k]] {
                        return Err(bad(format!("not associative at ({g}, {h}, {k})")));
                    }
                }
            }
        }

        // Latin square with identity row: every row contains 0 exactly once.
        let inverses: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == 0).unwrap())
            .collect();
        let orders = (0..n)
            .map(|g| {
                let mut k = 1;
                let mut acc = g;
                while acc != 0 {
                    acc = table[acc][g];
                    k += 1;
                }
                k
            })
            .collect();

        Ok(Self {
            name,
            elements,
            table,
            inverses,
            orders,
        })
    }

    /// The cyclic group of order `n`; element `k` is named `"k"` and stands for the
    /// `k`-th power of the generator.
    pub fn cyclic(n: usize) -> Result<Self> {
        let elements = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n)
            .map(|g| (0..n).map(|h| (g + h) % n).collect())
            .collect();
        Self::from_table(format!("C{n}"), elements, table)
    }

    /// The Klein four-group with elements `1, x, y, xy`.
    pub fn klein4() -> Self {
        let elements = ["1", "x", "y", "xy"].map(String::from).to_vec();
        // bit-vector addition: x = 01, y = 10, xy = 11
        let table = (0..4).map(|g| (0..4).map(|h| g ^ h).collect()).collect();
        Self::from_table("Klein4", elements, table).expect("klein four table is valid")
    }

    /// The symmetric group on three points, elements named in cycle notation.
    pub fn symmetric3() -> Self {
        // images of (0, 1, 2)
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let elements = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .map(String::from)
            .to_vec();
        // g·h = "apply g, then h"
        let table = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| {
                        let composed = [h[g[0]], h[g[1]], h[g[2]]];
                        perms.iter().position(|p| *p == composed).unwrap()
                    })
                    .collect()
            })
            .collect();
        Self::from_table("S3", elements, table).expect("S3 table is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.elements[g]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// Least `k ≥ 1` with `g^k = 1`.
    #[inline]
    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let k = (k.unsigned_abs() % self.orders[g] as u64) as usize;
        (0..k).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `c⁻¹·g·c`.
    pub fn conjugate(&self, g: usize, c: usize) -> usize {
        self.mul(self.mul(self.inv(c), g), c)
    }

    /// `g⁻¹·h⁻¹·g·h`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let left = self.mul(self.inv(g), self.inv(h));
        self.mul(left, self.mul(g, h))
    }

    /// First `c` (index order) with `c⁻¹·g·c = h`.
    pub fn conjugate_test(&self, g: usize, h: usize) -> Option<usize> {
        (0..self.order()).find(|&c| self.conjugate(g, c) == h)
    }

    /// First pair `(x, y)` (lexicographic index order) with `[x, y] = g`.
    pub fn commutator_test(&self, g: usize) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.commutator(x, y) == g)
    }

    /// First `x` with `x^m = g`.
    pub fn root(&self, g: usize, m: usize) -> Option<usize> {
        (0..self.order()).find(|&x| self.pow(x, m as i64) == g)
    }

    /// A pair `(s, t)` with `s² = t² = 1` and `s·t = g`, preferring both nontrivial.
    pub fn involution_pair(&self, g: usize) -> Option<(usize, usize)> {
        let pairs = || {
            (0..self.order())
                .filter(|&s| self.mul(s, s) == 0)
                .map(|s| (s, self.mul(self.inv(s), g)))
                .filter(|&(_, t)| self.mul(t, t) == 0)
        };
        pairs()
            .find(|&(s, t)| s != 0 && t != 0)
            .or_else(|| pairs().next())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_arithmetic() {
        let c3 = FactorGroup::cyclic(3).unwrap();
        assert_eq!(c3.mul(1, 2), 0);
        assert_eq!(c3.element_order(1), 3);
        assert_eq!(c3.element_order(0), 1);
        assert_eq!(c3.conjugate_test(1, 2), None);
        assert_eq!(c3.root(2, 2), Some(1));
        assert_eq!(c3.root(0, 5), Some(0));
        let c2 = FactorGroup::cyclic(2).unwrap();
        assert_eq!(c2.mul(1, 1), 0);
    }

    #[test]
    fn klein_four() {
        let k = FactorGroup::klein4();
        let (x, y, xy) = (1, 2, 3);
        assert_eq!(k.mul(x, y), xy);
        assert_eq!(k.element_order(xy), 2);
        for g in 1..4 {
            assert_eq!(k.commutator_test(g), None);
        }
        assert_eq!(k.commutator_test(0), Some((0, 0)));
        assert_eq!(k.root(x, 2), None);
    }

    #[test]
    fn symmetric_three() {
        let s3 = FactorGroup::symmetric3();
        let t12 = s3.element_index("(12)").unwrap();
        let t13 = s3.element_index("(13)").unwrap();
        let c = s3.conjugate_test(t12, t13).unwrap();
        assert_eq!(s3.conjugate(t12, c), t13);
        // the commutator subgroup is A3
        let r = s3.element_index("(123)").unwrap();
        let (x, y) = s3.commutator_test(r).unwrap();
        assert_eq!(s3.commutator(x, y), r);
        assert_eq!(s3.commutator_test(t12), None);
        for g in 0..6 {
            assert_eq!(6 % s3.element_order(g), 0);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        let names = |n: usize| (0..n).map(|k| format!("g{k}")).collect::<Vec<_>>();
        // not a Latin square
        assert!(FactorGroup::from_table("bad", names(2), vec![vec![0, 1], vec![1, 1]]).is_err());
        // wrong identity
        assert!(FactorGroup::from_table("bad", names(2), vec![vec![1, 0], vec![0, 1]]).is_err());
        // Latin square with identity that is not associative (order-5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FactorGroup::from_table("loop", names(5), loop5).unwrap_err();
        assert!(err.to_string().contains("not associative"), "{err}");
        // duplicate names
        let dup = vec!["a".to_string(), "a".to_string()];
        assert!(FactorGroup::from_table("bad", dup, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(FactorGroup::from_table("bad", vec![], vec![]).is_err());
    }
}
