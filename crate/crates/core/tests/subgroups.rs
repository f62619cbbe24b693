//! Fitting and derived subgroups checked against full subgroup lattices of
//! small corpus groups.

use std::collections::BTreeSet;

use ordergraph::theorems::{build_corpus, Bounds};
use ordergraph::{FiniteGroup, Subgroup};

/// Every subgroup, as a join of cyclic subgroups.
fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let cyclic: BTreeSet<Vec<usize>> = g.elements().map(|x| Subgroup::generated(g, [x]).members().to_vec()).collect();
    let mut found: BTreeSet<Vec<usize>> = cyclic.clone();
    let mut frontier: Vec<Vec<usize>> = found.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            let join = Subgroup::generated(g, h.iter().chain(c).copied()).members().to_vec();
            if found.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    found.into_iter().collect()
}

fn is_normal(g: &FiniteGroup, h: &[usize]) -> bool {
    g.elements().all(|x| h.iter().all(|&y| h.binary_search(&g.conjugate(y, x)).is_ok()))
}

/// Nilpotent iff the lower central series reaches the trivial group.
fn is_nilpotent(g: &FiniteGroup, h: &[usize]) -> bool {
    let mut term = h.to_vec();
    loop {
        let commutators: Vec<usize> = term.iter().flat_map(|&a| h.iter().map(move |&b| g.commutator(a, b))).collect();
        let next = Subgroup::generated(g, commutators).members().to_vec();
        if next.len() == 1 {
            return true;
        }
        if next == term {
            return false;
        }
        term = next;
    }
}

fn small_groups() -> Vec<FiniteGroup> {
    build_corpus(&Bounds::default()).unwrap().into_iter().filter(|g| g.order() <= 24).collect()
}

#[test]
fn fitting_subgroup_is_the_largest_normal_nilpotent_subgroup() {
    for g in small_groups() {
        let fitting = g.fitting_subgroup();
        let f = fitting.members();
        assert!(is_normal(&g, f) && is_nilpotent(&g, f), "{}", g.spec());
        for h in all_subgroups(&g) {
            if is_normal(&g, &h) && is_nilpotent(&g, &h) {
                assert!(h.iter().all(|x| fitting.contains(*x)), "{}: {h:?} outside F", g.spec());
            }
        }
    }
}

#[test]
fn nilpotency_matches_lower_central_series() {
    for g in small_groups() {
        let whole: Vec<usize> = g.elements().collect();
        assert_eq!(g.is_nilpotent(), is_nilpotent(&g, &whole), "{}", g.spec());
    }
}

#[test]
fn derived_subgroup_is_smallest_normal_subgroup_with_abelian_quotient() {
    for g in small_groups() {
        let derived = g.commutator_subgroup();
        let abelian_quotient =
            |h: &[usize]| g.elements().all(|a| g.elements().all(|b| h.binary_search(&g.commutator(a, b)).is_ok()));
        let smallest = all_subgroups(&g)
            .into_iter()
            .filter(|h| is_normal(&g, h) && abelian_quotient(h))
            .min_by_key(Vec::len)
            .unwrap();
        assert_eq!(derived.members(), smallest.as_slice(), "{}", g.spec());
    }
}

#[test]
fn subgroup_counts_of_known_groups() {
    let count = |spec: &str| {
        let g = spec.parse::<ordergraph::GroupSpec>().unwrap().build(512).unwrap();
        all_subgroups(&g).len()
    };
    // standard counts: S_3 has 6, A_4 has 10, D_4 has 10, S_4 has 30, Z_12 has 6
    assert_eq!(count("S:3"), 6);
    assert_eq!(count("A:4"), 10);
    assert_eq!(count("D:4"), 10);
    assert_eq!(count("S:4"), 30);
    assert_eq!(count("Z:12"), 6);
}
