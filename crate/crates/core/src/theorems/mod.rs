//! Exhaustive, bounded verification of the structural claims about order
//! divisor graphs.
//!
//! Each [`TheoremId`] maps to one check. "If and only if" claims are tested
//! in both directions over the whole range, and every failing case is
//! reported. Cases fan out over a rayon pool; results keep the input order
//! of the cases, so reports are deterministic.

mod corpus;
mod report;
mod witnesses;

use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph};
use crate::group::{cyclic_group, dihedral_group, units_group, FiniteGroup};
use crate::numtheory;
use crate::odgraph;

pub use corpus::{build_corpus, Bounds};
pub use report::{CaseRecord, Failure, VerificationReport};
pub use witnesses::{star_case, StarCase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum TheoremId {
    R2i,
    R2ii,
    R2iii,
    R2iv,
    T9,
    C13,
    C11,
    C12,
    C10,
    T4,
    T2,
    C3,
    C6,
    T5,
    T7,
    T8,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::R2i,
        TheoremId::R2ii,
        TheoremId::R2iii,
        TheoremId::R2iv,
        TheoremId::T9,
        TheoremId::C13,
        TheoremId::C11,
        TheoremId::C12,
        TheoremId::C10,
        TheoremId::T4,
        TheoremId::T2,
        TheoremId::C3,
        TheoremId::C6,
        TheoremId::T5,
        TheoremId::T7,
        TheoremId::T8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::R2i => "R2i",
            TheoremId::R2ii => "R2ii",
            TheoremId::R2iii => "R2iii",
            TheoremId::R2iv => "R2iv",
            TheoremId::T9 => "T9",
            TheoremId::C13 => "C13",
            TheoremId::C11 => "C11",
            TheoremId::C12 => "C12",
            TheoremId::C10 => "C10",
            TheoremId::T4 => "T4",
            TheoremId::T2 => "T2",
            TheoremId::C3 => "C3",
            TheoremId::C6 => "C6",
            TheoremId::T5 => "T5",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
        }
    }

    /// One-line statement of what the check asserts.
    pub fn claim(self) -> &'static str {
        match self {
            TheoremId::R2i => "OD(G) is a simple graph",
            TheoremId::R2ii => "OD(G) is connected, with diameter 2 once |G| > 2",
            TheoremId::R2iii => "OD(G) is never a cycle for |G| >= 3",
            TheoremId::R2iv => "order classes have size divisible by phi(d); OD(G) is not complete for |G| > 2",
            TheoremId::T9 => "OD(G) is a star iff every non-identity element has prime order",
            TheoremId::C13 => "for abelian G, OD(G) is a star iff G is elementary abelian",
            TheoremId::C11 => "OD(U(Z_n)) is the star on phi(n) vertices iff n | 24",
            TheoremId::C12 => "OD(Z_n) is a star iff n is prime",
            TheoremId::C10 => "OD(G) is a star iff G falls in one of the listed p^a q / A_5 cases",
            TheoremId::T4 => "OD(D_n) is the star on 2n vertices iff n is prime",
            TheoremId::T2 => "OD(G) is complete multipartite for every p-group G",
            TheoremId::C3 => "OD(Z_{p^n}) is K_{1, p-1, p(p-1), ..., p^{n-1}(p-1)}",
            TheoremId::C6 => "chi(OD(Z_{p^n})) = n + 1",
            TheoremId::T5 => "OD(Z_{p1 p2}) is the sequential join shape",
            TheoremId::T7 => "OD(Z_{p1 p2 p3}) is the ring-of-joins shape",
            TheoremId::T8 => "G cyclic iff E(G_n) = OD(G) iff G_n = R(OD(G))",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse { input: s.to_string(), reason: "unknown theorem id".into() })
    }
}

/// Rewrites the order divisor graph of a group before it is checked.
pub type OdHook = Arc<dyn Fn(&FiniteGroup, Graph) -> Graph + Send + Sync>;

/// Result of one case: its descriptor and, on failure, expected vs got.
type Outcome = (String, Option<(String, String)>);

fn expect<T: PartialEq + std::fmt::Debug>(case: &str, expected: T, got: T) -> Outcome {
    let failure = (expected != got).then(|| (format!("{expected:?}"), format!("{got:?}")));
    (case.to_string(), failure)
}

fn error_outcome(case: &str, err: Error) -> Outcome {
    (case.to_string(), Some(("no error".into(), err.to_string())))
}

/// Runs theorem checks against a fixed corpus.
pub struct Verifier {
    bounds: Bounds,
    corpus: Vec<FiniteGroup>,
    hook: Option<OdHook>,
}

impl Verifier {
    pub fn new(bounds: Bounds) -> Result<Self> {
        bounds.validate()?;
        let corpus = build_corpus(&bounds)?;
        Ok(Self { bounds, corpus, hook: None })
    }

    /// Installs a rewrite applied to every order divisor graph; used to
    /// confirm the checks notice corrupted graphs.
    pub fn with_od_hook(mut self, hook: OdHook) -> Self {
        self.hook = Some(hook);
        self
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn corpus(&self) -> &[FiniteGroup] {
        &self.corpus
    }

    pub(crate) fn od(&self, group: &FiniteGroup) -> Graph {
        let graph = odgraph::od_graph(group).graph;
        match &self.hook {
            Some(hook) => hook(group, graph),
            None => graph,
        }
    }

    pub(crate) fn run<T: Sync>(
        &self,
        id: TheoremId,
        items: &[T],
        check: impl Fn(&T) -> Outcome + Sync,
    ) -> VerificationReport {
        let start = Instant::now();
        let outcomes: Vec<Outcome> = items.par_iter().map(&check).collect();
        VerificationReport::from_outcomes(id, outcomes, start.elapsed())
    }

    fn over_corpus(&self, id: TheoremId, check: impl Fn(&FiniteGroup, &Graph) -> Outcome + Sync) -> VerificationReport {
        self.run(id, &self.corpus, |g| check(g, &self.od(g)))
    }

    pub fn verify(&self, id: TheoremId) -> Result<VerificationReport> {
        let b = &self.bounds;
        Ok(match id {
            TheoremId::R2i => self.over_corpus(id, |g, od| expect(g.spec(), true, od.is_simple())),
            TheoremId::R2ii => self.over_corpus(id, |g, od| {
                let e = g.identity();
                let universal = (0..od.vertex_count()).all(|v| v == e || od.has_edge(e, v));
                let diameter = match g.order() {
                    1 => 0,
                    2 => 1,
                    _ => 2,
                };
                expect(
                    g.spec(),
                    (true, true, Ok(Diameter::Finite(diameter))),
                    (universal, od.is_connected(), od.diameter()),
                )
            }),
            TheoremId::R2iii => self.over_corpus(id, |g, od| expect(g.spec(), false, g.order() >= 3 && od.is_cycle())),
            TheoremId::R2iv => self.over_corpus(id, |g, od| {
                let bad_classes: Vec<(u64, usize)> = g
                    .order_partition()
                    .sizes()
                    .into_iter()
                    .filter(|&(d, size)| !(size as u64).is_multiple_of(numtheory::euler_phi(d).unwrap()))
                    .collect();
                let complete = g.order() > 2 && od.is_complete();
                expect(g.spec(), (vec![], false), (bad_classes, complete))
            }),
            TheoremId::T9 => {
                self.over_corpus(id, |g, od| expect(g.spec(), g.all_nonidentity_prime_order(), od.is_star().is_some()))
            }
            TheoremId::C13 => {
                let abelian: Vec<&FiniteGroup> = self.corpus.iter().filter(|g| g.is_abelian()).collect();
                self.run(id, &abelian, |g| expect(g.spec(), g.is_elementary_abelian(), self.od(g).is_star().is_some()))
            }
            TheoremId::C11 => {
                let ns: Vec<usize> = (1..=b.sweep_max).collect();
                self.run(id, &ns, |&n| {
                    let case = format!("U:{n}");
                    match units_group(n) {
                        Ok(g) => {
                            let od = self.od(&g);
                            let star = od.is_star().is_some();
                            let phi = numtheory::euler_phi(n).unwrap();
                            let expected = (24 % n == 0, (24 % n == 0).then_some(phi));
                            expect(&case, expected, (star, star.then_some(od.vertex_count())))
                        }
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::C12 => {
                let ns: Vec<usize> = (1..=b.sweep_max).collect();
                self.run(id, &ns, |&n| {
                    let case = format!("Z:{n}");
                    match cyclic_group(n) {
                        // Z_1 gives K_1, the degenerate star
                        Ok(g) => expect(&case, n == 1 || numtheory::is_prime(n), self.od(&g).is_star().is_some()),
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::C10 => witnesses::verify_c10(self),
            TheoremId::T4 => {
                let ns: Vec<usize> = (3..=b.dihedral_sweep_max).collect();
                self.run(id, &ns, |&n| {
                    let case = format!("D:{n}");
                    match dihedral_group(n) {
                        Ok(g) => {
                            let od = self.od(&g);
                            let star = od.is_star().is_some();
                            let prime = numtheory::is_prime(n);
                            expect(&case, (prime, prime.then_some(2 * n)), (star, star.then_some(od.vertex_count())))
                        }
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::T2 => {
                let groups = self.p_groups()?;
                self.run(id, &groups, |g| {
                    let od = self.od(g);
                    // the parts must be exactly the order classes
                    let parts = od.complete_multipartite_parts().map(|r| {
                        let mut p = r.parts;
                        p.sort();
                        p
                    });
                    let mut classes: Vec<Vec<usize>> = g.order_partition().classes().values().cloned().collect();
                    classes.sort();
                    expect(g.spec(), Some(classes), parts)
                })
            }
            TheoremId::C3 => {
                let cases = self.cyclic_prime_powers();
                self.run(id, &cases, |&(p, k)| {
                    let n = p.pow(k);
                    let case = format!("Z:{n}");
                    match cyclic_group(n as usize) {
                        Ok(g) => {
                            let mut expected: Vec<usize> =
                                std::iter::once(1).chain((0..k).map(|i| (p.pow(i) * (p - 1)) as usize)).collect();
                            expected.sort_unstable();
                            let got = self.od(&g).complete_multipartite_parts().map(|r| r.part_sizes);
                            expect(&case, Some(expected), got)
                        }
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::C6 => {
                let cases = self.cyclic_prime_powers();
                self.run(id, &cases, |&(p, k)| {
                    let n = p.pow(k);
                    let case = format!("Z:{n}");
                    let got = cyclic_group(n as usize).and_then(|g| self.od(&g).chromatic_number(b.coloring_cap));
                    match got {
                        Ok(chi) => expect(&case, k as usize + 1, chi),
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::T5 => {
                let pairs = self.prime_tuples(2, b.shape_max_product);
                self.run(id, &pairs, |ps| {
                    let n = ps[0] * ps[1];
                    let case = format!("Z:{n}");
                    let result = odgraph::theorem5_shape(ps[0], ps[1]).and_then(|shape| {
                        let od = self.od(&cyclic_group(n as usize)?);
                        shape.is_isomorphic(&od)
                    });
                    match result {
                        Ok(iso) => expect(&case, true, iso),
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::T7 => {
                let triples = self.prime_tuples(3, b.triple_max_product);
                self.run(id, &triples, |ps| {
                    let n = ps[0] * ps[1] * ps[2];
                    let case = format!("Z:{n}");
                    let result = odgraph::theorem7_shape(ps[0], ps[1], ps[2]).and_then(|shape| {
                        let g = cyclic_group(n as usize)?;
                        let od = self.od(&g);
                        let mut block_sizes: Vec<usize> =
                            shape.tag_class_sizes().unwrap_or_default().into_iter().map(|x| x.1).collect();
                        block_sizes.sort_unstable();
                        let mut class_sizes: Vec<usize> =
                            g.order_partition().sizes().into_iter().map(|x| x.1).collect();
                        class_sizes.sort_unstable();
                        Ok((shape.is_isomorphic(&od)?, block_sizes == class_sizes))
                    });
                    match result {
                        Ok(got) => expect(&case, (true, true), got),
                        Err(e) => error_outcome(&case, e),
                    }
                })
            }
            TheoremId::T8 => self.over_corpus(id, |g, od| {
                let cyclic = g.is_cyclic_algebraic();
                match odgraph::cyclicity_of_graph(g.order() as u64, od) {
                    Ok(c) => expect(g.spec(), (cyclic, cyclic), (c.extended_matches, c.reduced_matches)),
                    Err(e) => error_outcome(g.spec(), e),
                }
            }),
        })
    }

    pub fn verify_all(&self) -> Result<Vec<VerificationReport>> {
        TheoremId::ALL.iter().map(|&id| self.verify(id)).collect()
    }

    /// Corpus p-groups plus every cyclic prime power in range.
    fn p_groups(&self) -> Result<Vec<FiniteGroup>> {
        let mut groups: Vec<FiniteGroup> = self.corpus.iter().filter(|g| g.is_p_group().is_some()).cloned().collect();
        for (p, k) in self.cyclic_prime_powers() {
            let spec = format!("Z:{}", p.pow(k));
            if !groups.iter().any(|g| g.spec() == spec) {
                groups.push(cyclic_group(p.pow(k) as usize)?);
            }
        }
        Ok(groups)
    }

    /// `(p, k)` with `p^k <= prime_power_max`, `k >= 1`.
    fn cyclic_prime_powers(&self) -> Vec<(u64, u32)> {
        let max = self.bounds.prime_power_max;
        numtheory::primes_up_to(max)
            .into_iter()
            .flat_map(|p| (1..).map(move |k| (p, k)).take_while(move |&(p, k)| p.pow(k) <= max))
            .collect()
    }

    /// Increasing tuples of distinct primes with product at most `max_product`.
    fn prime_tuples(&self, len: usize, max_product: u64) -> Vec<Vec<u64>> {
        let cap = self.bounds.max_prime.unwrap_or(max_product);
        let primes = numtheory::primes_up_to(cap.min(max_product));
        fn rec(primes: &[u64], len: usize, prefix: &mut Vec<u64>, product: u64, max: u64, out: &mut Vec<Vec<u64>>) {
            if prefix.len() == len {
                out.push(prefix.clone());
                return;
            }
            for (i, &p) in primes.iter().enumerate() {
                if product * p > max {
                    break;
                }
                prefix.push(p);
                rec(&primes[i + 1..], len, prefix, product * p, max, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&primes, len, &mut Vec::new(), 1, max_product, &mut out);
        out
    }
}

/// Runs one check with the given bounds.
pub fn verify(id: TheoremId, bounds: &Bounds) -> Result<VerificationReport> {
    Verifier::new(bounds.clone())?.verify(id)
}

pub fn verify_c10_witnesses(bounds: &Bounds) -> Result<VerificationReport> {
    Ok(witnesses::verify_witnesses(&Verifier::new(bounds.clone())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes_on_minimal_bounds() {
        let v = Verifier::new(Bounds::minimal()).unwrap();
        for report in v.verify_all().unwrap() {
            assert!(report.passed(), "{}", report.to_text());
            assert!(report.cases_run > 0, "{}", report.theorem);
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().to_lowercase().parse::<TheoremId>().unwrap(), id);
        }
        assert!("T99".parse::<TheoremId>().is_err());
    }

    #[test]
    fn corrupted_graphs_are_caught() {
        // drop one edge of OD(D_3)
        let hook: OdHook = Arc::new(|g, od| if g.spec() == "D:3" { od.toggle_edge(0, 1).unwrap() } else { od });
        let v = Verifier::new(Bounds::minimal()).unwrap().with_od_hook(hook);
        let report = v.verify(TheoremId::T9).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].case, "D:3");
        assert!(!v.verify(TheoremId::T4).unwrap().passed());
        assert!(!v.verify(TheoremId::C10).unwrap().passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let v = Verifier::new(Bounds::minimal()).unwrap();
        let strip = |r: VerificationReport| (r.theorem, r.cases_run, r.failures, r.cases);
        for id in [TheoremId::T9, TheoremId::T5, TheoremId::C11] {
            assert_eq!(strip(v.verify(id).unwrap()), strip(v.verify(id).unwrap()));
        }
    }

    #[test]
    fn prime_tuples_respect_bounds() {
        let v = Verifier::new(Bounds { max_prime: Some(5), ..Bounds::minimal() }).unwrap();
        assert_eq!(v.prime_tuples(2, 15), vec![vec![2, 3], vec![2, 5], vec![3, 5]]);
        assert_eq!(v.prime_tuples(3, 30), vec![vec![2, 3, 5]]);
        assert_eq!(v.cyclic_prime_powers(), vec![(2, 1), (2, 2), (2, 3), (3, 1), (5, 1), (7, 1)]);
    }
}
