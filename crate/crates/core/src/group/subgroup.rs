//! Subgroups of a [`FiniteGroup`] and the derived series pieces needed for
//! the star classification: commutator subgroup, Sylow subgroups, p-cores
//! and the Fitting subgroup.

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numtheory;

/// A subgroup held as a sorted set of element indices of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    /// The subgroup generated by `generators`.
    pub fn generated(group: &'g FiniteGroup, generators: impl IntoIterator<Item = usize>) -> Self {
        let mut inside = vec![false; group.order()];
        inside[group.identity()] = true;
        let mut gens: Vec<usize> = Vec::new();
        for g in generators {
            if !inside[g] {
                inside[g] = true;
                gens.push(g);
            }
        }
        // right multiplication by generators closes a subset of a finite group
        let mut stack = gens.clone();
        stack.push(group.identity());
        while let Some(w) = stack.pop() {
            for &s in &gens {
                let ws = group.mul(w, s);
                if !inside[ws] {
                    inside[ws] = true;
                    stack.push(ws);
                }
            }
        }
        Self::from_mask(group, &inside)
    }

    pub fn trivial(group: &'g FiniteGroup) -> Self {
        Self { group, members: vec![group.identity()] }
    }

    pub fn whole(group: &'g FiniteGroup) -> Self {
        Self { group, members: group.elements().collect() }
    }

    fn from_mask(group: &'g FiniteGroup, mask: &[bool]) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Self { group, members }
    }

    fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.group.order()];
        for &m in &self.members {
            mask[m] = true;
        }
        mask
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// `|G : H|`
    pub fn index(&self) -> usize {
        self.group.order() / self.len()
    }

    /// `g H g^-1`
    pub fn conjugate_by(&self, g: usize) -> Self {
        let mut members: Vec<usize> = self.members.iter().map(|&x| self.group.conjugate(x, g)).collect();
        members.sort_unstable();
        Self { group: self.group, members }
    }

    pub fn intersection(&self, other: &Subgroup<'_>) -> Self {
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Self { group: self.group, members }
    }

    pub fn is_normal(&self) -> bool {
        self.group.elements().all(|g| self.members.iter().all(|&x| self.contains(self.group.conjugate(x, g))))
    }

    /// `{ g : g H g^-1 = H }`
    pub fn normalizer(&self) -> Self {
        let mask: Vec<bool> = self
            .group
            .elements()
            .map(|g| self.members.iter().all(|&x| self.contains(self.group.conjugate(x, g))))
            .collect();
        Self::from_mask(self.group, &mask)
    }

    /// The subgroup as a standalone group, elements in parent index order.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.len();
        let mut position = vec![u32::MAX; self.group.order()];
        for (i, &m) in self.members.iter().enumerate() {
            position[m] = i as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(position[self.group.mul(a, b)]);
            }
        }
        let labels = self.members.iter().map(|&m| self.group.label(m).to_string()).collect();
        FiniteGroup::from_table(n, table, labels, format!("sub({})", self.group.spec()))
            .expect("a subgroup's induced table is a group table")
    }

    pub fn is_nilpotent(&self) -> bool {
        self.to_group().is_nilpotent()
    }
}

fn largest_prime_power_dividing(p: u64, n: u64) -> u64 {
    let mut q = 1;
    while n.is_multiple_of(q * p) {
        q *= p;
    }
    q
}

fn is_p_power(p: u64, mut n: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

impl FiniteGroup {
    /// `G'`, generated by all commutators.
    pub fn commutator_subgroup(&self) -> Subgroup<'_> {
        let commutators =
            self.elements().flat_map(|a| self.elements().map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b));
        Subgroup::generated(self, commutators)
    }

    fn check_prime_divides(&self, p: u64) -> Result<()> {
        if !numtheory::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(self.order() as u64).is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide { p, order: self.order() });
        }
        Ok(())
    }

    /// One Sylow `p`-subgroup, grown greedily: adjoin the first `p`-element
    /// of the normalizer that lies outside the current `p`-subgroup until the
    /// full `p`-part of `|G|` is reached.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup<'_>> {
        self.check_prime_divides(p)?;
        let target = largest_prime_power_dividing(p, self.order() as u64) as usize;
        let mut current = Subgroup::trivial(self);
        while current.len() < target {
            let normalizer = current.normalizer();
            let next = normalizer
                .members()
                .iter()
                .copied()
                .find(|&y| !current.contains(y) && is_p_power(p, self.orders[y]))
                .expect("a non-Sylow p-subgroup has a p-element in its normalizer outside it");
            let gens: Vec<usize> = current.members().iter().copied().chain([next]).collect();
            current = Subgroup::generated(self, gens);
        }
        Ok(current)
    }

    /// `O_p(G)`: the intersection of all Sylow `p`-subgroups.
    pub fn p_core(&self, p: u64) -> Result<Subgroup<'_>> {
        let sylow = self.sylow_subgroup(p)?;
        let mut mask = sylow.mask();
        for g in self.elements() {
            let conj = sylow.conjugate_by(g);
            for (x, m) in mask.iter_mut().enumerate() {
                *m = *m && conj.contains(x);
            }
        }
        Ok(Subgroup::from_mask(self, &mask))
    }

    /// `F(G)`, the product of the p-cores over primes dividing `|G|`.
    pub fn fitting_subgroup(&self) -> Subgroup<'_> {
        let primes: Vec<u64> =
            numtheory::factorize(self.order() as u64).expect("group order is positive").primes().collect();
        let gens: Vec<usize> =
            primes.into_iter().flat_map(|p| self.p_core(p).expect("p divides |G|").members().to_vec()).collect();
        Subgroup::generated(self, gens)
    }

    /// True when every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        numtheory::factorize(self.order() as u64)
            .expect("group order is positive")
            .primes()
            .all(|p| self.sylow_subgroup(p).expect("p divides |G|").is_normal())
    }
}
