//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..order`. Every algorithm works on indices; labels
//! are only for display. Constructors document their element ordering so
//! graph exports are reproducible.

mod construct;
mod spec;
mod subgroup;

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numtheory;

pub use construct::{
    alternating_group, cyclic_group, dihedral_group, direct_product, elementary_abelian, symmetric_group, units_group,
    DEFAULT_MAX_ORDER,
};
pub use spec::GroupSpec;
pub use subgroup::Subgroup;

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    orders: Vec<u64>,
    labels: Vec<String>,
    spec: String,
}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking every group axiom.
    ///
    /// Associativity is decided exactly with Light's test: it is enough to
    /// check `(x s) y = x (s y)` for `s` ranging over a generating set.
    pub fn from_table(order: usize, table: Vec<u32>, labels: Vec<String>, spec: impl Into<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("a group needs at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!("expected {} entries, found {}", order * order, table.len())));
        }
        if labels.len() != order {
            return Err(Error::InvalidTable(format!("expected {order} labels, found {}", labels.len())));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        check_latin(order, &table)?;

        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;

        check_associative(order, &table)?;

        let mut inverses = vec![0u32; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            // latin rows guarantee exactly one solution
            *inv = (0..order).find(|&j| at(i, j) == identity).unwrap() as u32;
        }

        let orders = (0..order)
            .map(|x| {
                let mut y = x;
                let mut m = 1u64;
                while y != identity {
                    y = at(y, x);
                    m += 1;
                }
                m
            })
            .collect();

        Ok(Self { order, table, identity, inverses, orders, labels, spec: spec.into() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Construction descriptor, e.g. `D:3` or `Z:3xZ:5`.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a];
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let left = self.mul(self.inverse(a), self.inverse(b));
        self.mul(self.mul(left, a), b)
    }

    /// `g x g^-1`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, x: usize) -> Result<u64> {
        self.orders.get(x).copied().ok_or(Error::BadElement { index: x, order: self.order })
    }

    /// Element orders indexed by element.
    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order_partition(&self) -> OrderPartition {
        let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (x, &o) in self.orders.iter().enumerate() {
            classes.entry(o).or_default().push(x);
        }
        OrderPartition { classes }
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic_algebraic(&self) -> bool {
        self.orders.contains(&(self.order as u64))
    }

    pub fn is_elementary_abelian(&self) -> bool {
        self.order == 1 || (self.is_abelian() && numtheory::is_prime(self.exponent()))
    }

    pub fn all_nonidentity_prime_order(&self) -> bool {
        self.orders.iter().all(|&o| o == 1 || numtheory::is_prime(o))
    }

    /// The prime `p` when `|G| = p^k` with `k >= 1`.
    pub fn is_p_group(&self) -> Option<u64> {
        numtheory::prime_power_base(self.order as u64)
    }
}

fn check_latin(order: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; order];
    for i in 0..order {
        for j in 0..order {
            let v = table[i * order + j] as usize;
            if seen[v] == i {
                return Err(Error::InvalidTable(format!("row {i} repeats {v}")));
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..order {
        for i in 0..order {
            let v = table[i * order + j] as usize;
            if seen[v] == j {
                return Err(Error::InvalidTable(format!("column {j} repeats {v}")));
            }
            seen[v] = j;
        }
    }
    Ok(())
}

fn check_associative(order: usize, table: &[u32]) -> Result<()> {
    let at = |i: usize, j: usize| table[i * order + j] as usize;

    // Greedy generating set: words built by right multiplication must
    // cover every element.
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; order];
    while let Some(next) = reached.iter().position(|&r| !r) {
        gens.push(next);
        reached.fill(false);
        let mut stack: Vec<usize> = gens.clone();
        for &g in &gens {
            reached[g] = true;
        }
        while let Some(w) = stack.pop() {
            for &s in &gens {
                let ws = at(w, s);
                if !reached[ws] {
                    reached[ws] = true;
                    stack.push(ws);
                }
            }
        }
    }

    for &s in &gens {
        for x in 0..order {
            let xs = at(x, s);
            for y in 0..order {
                if at(xs, y) != at(x, at(s, y)) {
                    return Err(Error::InvalidTable(format!("not associative at ({x}, {s}, {y})")));
                }
            }
        }
    }
    Ok(())
}

/// Elements grouped by their order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPartition {
    classes: BTreeMap<u64, Vec<usize>>,
}

impl OrderPartition {
    pub fn classes(&self) -> &BTreeMap<u64, Vec<usize>> {
        &self.classes
    }

    pub fn class(&self, d: u64) -> &[usize] {
        self.classes.get(&d).map_or(&[], |v| v.as_slice())
    }

    /// Realized orders, ascending.
    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.classes.keys().copied()
    }

    /// `(order, class size)` pairs, ascending by order.
    pub fn sizes(&self) -> Vec<(u64, usize)> {
        self.classes.iter().map(|(&d, v)| (d, v.len())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(g: &FiniteGroup) -> Vec<(u64, usize)> {
        g.order_partition().sizes()
    }

    #[test]
    fn rejects_bad_tables() {
        let labels = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
        assert!(FiniteGroup::from_table(0, vec![], vec![], "x").is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1], labels(2), "x").is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1], labels(2), "x").is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 2, 1, 0], labels(2), "x").is_err());
        // latin square without identity
        assert!(FiniteGroup::from_table(3, vec![0, 2, 1, 2, 1, 0, 1, 0, 2], labels(3), "x").is_err());
        // latin square with identity 0 that is not associative (a loop of order 5)
        let loop5: Vec<u32> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = FiniteGroup::from_table(5, loop5, labels(5), "loop").unwrap_err();
        assert!(matches!(err, Error::InvalidTable(m) if m.contains("associative")));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for v in 0..n {
                if !prefix.contains(&v) {
                    prefix.push(v);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), n, &mut out);
        out
    }

    #[test]
    fn light_test_agrees_with_brute_force_on_order_five() {
        // every reduced latin square of order 5 (row 0 and column 0 are the identity)
        let n = 5;
        let rows = permutations(n);
        let starting = |r: usize| rows.iter().filter(move |p| p[0] == r).collect::<Vec<_>>();
        let (r1, r2, r3, r4) = (starting(1), starting(2), starting(3), starting(4));
        let (mut latin, mut groups) = (0, 0);
        for a in &r1 {
            for b in &r2 {
                for c in &r3 {
                    for d in &r4 {
                        let mut t: Vec<u32> = (0..n as u32).collect();
                        for r in [a, b, c, d] {
                            t.extend(r.iter().map(|&v| v as u32));
                        }
                        if check_latin(n, &t).is_err() {
                            continue;
                        }
                        latin += 1;
                        let at = |i: usize, j: usize| t[i * n + j] as usize;
                        let brute = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| at(at(x, y), z) == at(x, at(y, z)))));
                        let labels = (0..n).map(|i| i.to_string()).collect();
                        let built = FiniteGroup::from_table(n, t.clone(), labels, "t").is_ok();
                        assert_eq!(built, brute, "{t:?}");
                        groups += built as usize;
                    }
                }
            }
        }
        // 56 reduced latin squares of order 5; 4!/|Aut(Z_5)| = 6 are Cayley tables
        assert_eq!(latin, 56);
        assert_eq!(groups, 6);
    }

    #[test]
    fn element_order_examples() {
        let z8 = cyclic_group(8).unwrap();
        assert_eq!(z8.element_order(z8.identity()).unwrap(), 1);
        assert_eq!(z8.element_order(2).unwrap(), 4);
        assert!(z8.element_order(8).is_err());
        let d7 = dihedral_group(7).unwrap();
        assert_eq!(d7.element_order(3).unwrap(), 7);
    }

    #[test]
    fn order_partition_examples() {
        let z8 = cyclic_group(8).unwrap();
        let part = z8.order_partition();
        assert_eq!(part.class(1), &[0]);
        assert_eq!(part.class(2), &[4]);
        assert_eq!(part.class(4), &[2, 6]);
        assert_eq!(part.class(8), &[1, 3, 5, 7]);
        assert_eq!(sizes(&dihedral_group(4).unwrap()), vec![(1, 1), (2, 5), (4, 2)]);
        assert_eq!(
            sizes(&cyclic_group(30).unwrap()),
            vec![(1, 1), (2, 1), (3, 2), (5, 4), (6, 2), (10, 4), (15, 8), (30, 8)]
        );
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(elementary_abelian(3, 2).unwrap().exponent(), 3);
        assert_eq!(cyclic_group(12).unwrap().exponent(), 12);
        assert_eq!(dihedral_group(4).unwrap().exponent(), 4);
    }

    #[test]
    fn predicate_examples() {
        let d3 = dihedral_group(3).unwrap();
        assert!(d3.all_nonidentity_prime_order());
        assert!(!d3.is_elementary_abelian());
        assert!(!d3.is_abelian());
        assert!(units_group(24).unwrap().is_elementary_abelian());
        assert!(!cyclic_group(4).unwrap().all_nonidentity_prime_order());
        assert!(cyclic_group(1).unwrap().is_elementary_abelian());
        assert_eq!(cyclic_group(1).unwrap().is_p_group(), None);
        assert_eq!(dihedral_group(4).unwrap().is_p_group(), Some(2));
        assert_eq!(cyclic_group(12).unwrap().is_p_group(), None);
        assert!(cyclic_group(12).unwrap().is_cyclic_algebraic());
        assert!(!elementary_abelian(2, 2).unwrap().is_cyclic_algebraic());
    }

    #[test]
    fn pow_and_inverse() {
        let d5 = dihedral_group(5).unwrap();
        for x in d5.elements() {
            assert_eq!(d5.mul(x, d5.inverse(x)), d5.identity());
            assert_eq!(d5.pow(x, d5.element_order(x).unwrap()), d5.identity());
        }
        assert_eq!(d5.pow(1, 3), 3);
    }
}
