use std::time::Instant;

use serde::Serialize;

use super::{error_outcome, expect, Outcome, TheoremId, VerificationReport, Verifier};
use crate::group::{FiniteGroup, GroupSpec};
use crate::numtheory;

/// The cases of the star classification, with the primes that witness them.
/// For `|G| = p^a q` the fields are named as in the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "case")]
pub enum StarCase {
    /// Case 1: a p-group of exponent p. `p` is `None` for the trivial group.
    ExponentP { p: Option<u64> },
    /// Case 2(a): `|G| = p^a q`, `3 <= p < q`, `a >= 3`, `|F| = p^(a-1)`, `|G:G'| = p`.
    A { p: u64, q: u64, a: u32 },
    /// Case 2(b): `|G| = p^a q`, `3 <= p < q`, `|F| = |G'| = p^a`.
    B { p: u64, q: u64, a: u32 },
    /// Case 2(c): `|G| = 2^a p`, `p >= 3`, `a >= 2`, `|F| = |G'| = 2^a`.
    C { p: u64, a: u32 },
    /// Case 2(d): `|G| = 2 p^a`, `p >= 3`, `|F| = |G'| = p^a`, `F` elementary abelian.
    D { p: u64, a: u32 },
    /// Case 3: `G` is isomorphic to `A_5`.
    A5,
}

/// Structural invariants the classification is stated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Invariants {
    fitting: u64,
    derived: u64,
    fitting_elementary_abelian: bool,
}

fn invariants(g: &FiniteGroup) -> Invariants {
    let f = g.fitting_subgroup();
    Invariants {
        fitting: f.len() as u64,
        derived: g.commutator_subgroup().len() as u64,
        fitting_elementary_abelian: f.to_group().is_elementary_abelian(),
    }
}

/// Which listed case `g` falls in, read literally from the group's order,
/// Fitting subgroup and derived subgroup. `None` if it fits none of them.
pub fn star_case(g: &FiniteGroup) -> Option<StarCase> {
    let n = g.order() as u64;
    if n == 1 {
        return Some(StarCase::ExponentP { p: None });
    }
    if let Some(p) = g.is_p_group() {
        return (g.exponent() == p).then_some(StarCase::ExponentP { p: Some(p) });
    }
    let inv = invariants(g);
    // only A_5 is perfect of order 60
    if n == 60 && inv.derived == n {
        return Some(StarCase::A5);
    }
    let factors = numtheory::factorize(n).ok()?;
    let &[(p1, e1), (p2, e2)] = factors.factors() else {
        return None;
    };
    // every way of reading n as p^a q
    let readings = [(p1, e1, p2, e2), (p2, e2, p1, e1)];
    for (p, a, q, b) in readings {
        if b != 1 {
            continue;
        }
        let pa = p.pow(a);
        if 3 <= p && p < q {
            if a >= 3 && inv.fitting == pa / p && n / inv.derived == p {
                return Some(StarCase::A { p, q, a });
            }
            if inv.fitting == pa && inv.derived == pa {
                return Some(StarCase::B { p, q, a });
            }
        }
        if p == 2 && q >= 3 && a >= 2 && inv.fitting == pa && inv.derived == pa {
            return Some(StarCase::C { p: q, a });
        }
        if q == 2 && p >= 3 && inv.fitting == pa && inv.derived == pa && inv.fitting_elementary_abelian {
            return Some(StarCase::D { p, a });
        }
    }
    None
}

fn build(v: &Verifier, spec: &str) -> crate::Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build(v.bounds().max_order)
}

/// A named witness: the expected case and, where the classification states
/// them, the expected `(|F|, |G'|, F elementary abelian)`.
fn witness(v: &Verifier, spec: &str, case: StarCase, stated: Option<(u64, u64, bool)>) -> Outcome {
    let g = match build(v, spec) {
        Ok(g) => g,
        Err(e) => return error_outcome(spec, e),
    };
    let od = v.od(&g);
    let star = od.is_star().is_some();
    let inv = invariants(&g);
    let got_stated = stated.map(|_| (inv.fitting, inv.derived, inv.fitting_elementary_abelian));
    expect(spec, (true, g.order(), Some(case), stated), (star, od.vertex_count(), star_case(&g), got_stated))
}

/// Fixed witnesses for each case, plus groups that must not be stars.
pub(crate) fn verify_witnesses(v: &Verifier) -> VerificationReport {
    let start = Instant::now();
    let mut outcomes: Vec<Outcome> = v
        .corpus()
        .iter()
        .filter(|g| g.spec().starts_with("EA:"))
        .map(|g| {
            let p = g.is_p_group();
            expect(g.spec(), (true, Some(StarCase::ExponentP { p })), (v.od(g).is_star().is_some(), star_case(g)))
        })
        .collect();
    outcomes.push(witness(v, "A:4", StarCase::C { p: 3, a: 2 }, Some((4, 4, true))));
    outcomes.push(witness(v, "D:3", StarCase::D { p: 3, a: 1 }, Some((3, 3, true))));
    outcomes.push(witness(v, "D:5", StarCase::D { p: 5, a: 1 }, Some((5, 5, true))));
    outcomes.push(witness(v, "A:5", StarCase::A5, None));
    for spec in ["Z:4", "D:4", "Z:6"] {
        outcomes.push(match build(v, spec) {
            Ok(g) => expect(spec, (false, None), (v.od(&g).is_star().is_some(), star_case(&g))),
            Err(e) => error_outcome(spec, e),
        });
    }
    VerificationReport::from_outcomes(TheoremId::C10, outcomes, start.elapsed())
}

/// Witnesses, then star iff some case applies across the corpus.
pub(crate) fn verify_c10(v: &Verifier) -> VerificationReport {
    let witnesses = verify_witnesses(v);
    let corpus =
        v.run(TheoremId::C10, v.corpus(), |g| expect(g.spec(), v.od(g).is_star().is_some(), star_case(g).is_some()));
    witnesses.merge(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating_group, cyclic_group, dihedral_group, symmetric_group};

    #[test]
    fn witness_cases() {
        assert_eq!(star_case(&alternating_group(4).unwrap()), Some(StarCase::C { p: 3, a: 2 }));
        assert_eq!(star_case(&dihedral_group(7).unwrap()), Some(StarCase::D { p: 7, a: 1 }));
        assert_eq!(star_case(&alternating_group(5).unwrap()), Some(StarCase::A5));
        assert_eq!(star_case(&cyclic_group(1).unwrap()), Some(StarCase::ExponentP { p: None }));
        assert_eq!(star_case(&cyclic_group(5).unwrap()), Some(StarCase::ExponentP { p: Some(5) }));
    }

    #[test]
    fn non_stars_fit_no_case() {
        for g in [
            cyclic_group(4).unwrap(),
            cyclic_group(6).unwrap(),
            dihedral_group(4).unwrap(),
            dihedral_group(6).unwrap(),
            symmetric_group(4).unwrap(),
        ] {
            assert_eq!(star_case(&g), None, "{}", g.spec());
        }
    }

    /// `Z_7 x| Z_3` with `t x t^-1 = x^2`.
    fn frobenius_21() -> FiniteGroup {
        let idx = |a: u32, b: u32| a * 3 + b;
        let mut table = vec![0u32; 21 * 21];
        for (a, b, c, d) in
            (0..7).flat_map(|a| (0..3).flat_map(move |b| (0..7).flat_map(move |c| (0..3).map(move |d| (a, b, c, d)))))
        {
            let twist = 2u32.pow(b) % 7;
            let x = idx(a, b) as usize;
            let y = idx(c, d) as usize;
            table[x * 21 + y] = idx((a + twist * c) % 7, (b + d) % 3);
        }
        let labels = (0..21).map(|i| format!("({},{})", i / 3, i % 3)).collect();
        FiniteGroup::from_table(21, table, labels, "F:21").unwrap()
    }

    #[test]
    fn frobenius_group_of_order_21_is_a_star_outside_the_listed_cases() {
        // Every non-identity element has order 3 or 7, yet F = G' = Z_7 has
        // order q, not p^a, under the stated ordering 3 <= p < q.
        let g = frobenius_21();
        assert!(g.all_nonidentity_prime_order());
        assert!(crate::odgraph::od_graph(&g).graph.is_star().is_some());
        assert_eq!(g.fitting_subgroup().len(), 7);
        assert_eq!(g.commutator_subgroup().len(), 7);
        assert_eq!(star_case(&g), None);
    }
}
