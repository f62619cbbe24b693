//! Order divisor graphs and divisor-lattice graphs.
//!
//! `OD(G)` has one vertex per group element; distinct elements are adjacent
//! when their orders differ and one divides the other. `G_n` is the
//! comparability graph of the divisors of `n` under divisibility, and
//! `E(G_n)` replaces each divisor `d` by `phi(d)` independent copies.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{Annotation, Graph};
use crate::group::{FiniteGroup, OrderPartition};
use crate::numtheory;

/// `OD(G)` together with the order classes it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdGraph {
    pub graph: Graph,
    pub partition: OrderPartition,
    pub group_spec: String,
}

fn adjacent_orders(a: u64, b: u64) -> bool {
    a != b && (b.is_multiple_of(a) || a.is_multiple_of(b))
}

pub fn od_graph(group: &FiniteGroup) -> OdGraph {
    let orders = group.element_orders();
    let annotations = group.elements().map(|x| Annotation::new(group.label(x), orders[x])).collect();
    let graph = Graph::from_fn(group.order(), |u, v| adjacent_orders(orders[u], orders[v]))
        .with_annotations(annotations)
        .expect("one annotation per element");
    OdGraph { graph, partition: group.order_partition(), group_spec: group.spec().to_string() }
}

/// Divisors of `n` ordered by divisibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorLattice {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorLattice {
    pub fn new(n: u64) -> Result<Self> {
        Ok(Self { n, divisors: numtheory::divisors(n)? })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// `a ⪯ b` iff `a | b`.
    pub fn leq(&self, a: u64, b: u64) -> bool {
        b.is_multiple_of(a)
    }

    pub fn comparable(&self, a: u64, b: u64) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn bottom(&self) -> u64 {
        1
    }

    pub fn top(&self) -> u64 {
        self.n
    }

    pub fn meet(&self, a: u64, b: u64) -> u64 {
        a.gcd(&b)
    }

    pub fn join(&self, a: u64, b: u64) -> u64 {
        a.lcm(&b)
    }
}

fn divisor_annotations(divs: &[u64]) -> Vec<Annotation> {
    divs.iter().map(|&d| Annotation::new(d.to_string(), d)).collect()
}

/// `G_n`, one vertex per divisor in ascending order, tagged with the divisor.
pub fn comparability_graph(n: u64) -> Result<Graph> {
    let lattice = DivisorLattice::new(n)?;
    let divs = lattice.divisors();
    let graph = Graph::from_fn(divs.len(), |u, v| lattice.comparable(divs[u], divs[v]));
    graph.with_annotations(divisor_annotations(divs))
}

/// `E(G_n)`: divisor `d` becomes `phi(d)` mutually non-adjacent copies,
/// copies of comparable distinct divisors are fully joined. Vertices are
/// grouped by ascending divisor; there are exactly `n` of them.
pub fn extended_graph(n: u64) -> Result<Graph> {
    let lattice = DivisorLattice::new(n)?;
    let mut tags = Vec::new();
    let mut annotations = Vec::new();
    for &d in lattice.divisors() {
        for copy in 0..numtheory::euler_phi(d)? {
            tags.push(d);
            annotations.push(Annotation::new(format!("{d}#{copy}"), d));
        }
    }
    Graph::from_fn(tags.len(), |u, v| adjacent_orders(tags[u], tags[v])).with_annotations(annotations)
}

fn independent_block(size: u64, tag: u64) -> Graph {
    let ann = (0..size).map(|i| Annotation::new(format!("{tag}#{i}"), tag)).collect();
    Graph::empty(size as usize).with_annotations(ann).expect("sized to match")
}

fn check_distinct_primes(primes: &[u64]) -> Result<()> {
    if let Some(&p) = primes.iter().find(|&&p| !numtheory::is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() {
        return Err(Error::RepeatedPrime(primes.to_vec()));
    }
    Ok(())
}

/// `((p1-1)K_1 ⋄ (p1-1)(p2-1)K_1 ⋄ (p2-1)K_1) ⋄ K_1`, each block tagged with
/// the element order it stands for.
pub fn theorem5_shape(p1: u64, p2: u64) -> Result<Graph> {
    check_distinct_primes(&[p1, p2])?;
    let chain = Graph::sequential_join(&[
        independent_block(p1 - 1, p1),
        independent_block((p1 - 1) * (p2 - 1), p1 * p2),
        independent_block(p2 - 1, p2),
    ]);
    Ok(chain.join(&independent_block(1, 1)))
}

/// The six outer blocks `G_1, G_12, G_2, G_23, G_3, G_13` joined around a
/// cycle on shared vertex sets, then joined to `G_123`, then to `K_1`.
pub fn theorem7_shape(p1: u64, p2: u64, p3: u64) -> Result<Graph> {
    check_distinct_primes(&[p1, p2, p3])?;
    let phi = |d: u64| numtheory::euler_phi(d).expect("positive");
    let ring_tags = [p1, p1 * p2, p2, p2 * p3, p3, p1 * p3];
    let blocks: Vec<Graph> = ring_tags.iter().map(|&d| independent_block(phi(d), d)).collect();

    let mut start = vec![0usize];
    for b in &blocks {
        start.push(start.last().unwrap() + b.vertex_count());
    }
    let total = *start.last().unwrap();
    let block_of = |v: usize| start.partition_point(|&s| s <= v) - 1;

    let base = blocks.iter().skip(1).fold(blocks[0].clone(), |acc, b| acc.disjoint_union(b));
    // G_i ⋄ G_j for each consecutive pair of the ring, on the shared vertex set
    let mut layers = vec![base];
    for i in 0..6 {
        let j = (i + 1) % 6;
        layers.push(Graph::from_fn(total, |u, v| {
            let (bu, bv) = (block_of(u), block_of(v));
            (bu == i && bv == j) || (bu == j && bv == i)
        }));
    }
    let ring = Graph::overlay(&layers)?;
    let inner = independent_block(phi(p1 * p2 * p3), p1 * p2 * p3);
    Ok(ring.join(&inner).join(&independent_block(1, 1)))
}

/// The two graph-side characterizations of cyclicity for a group of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicityCheck {
    /// `E(G_n) ≅ OD(G)`
    pub extended_matches: bool,
    /// `G_n ≅ R(OD(G))`
    pub reduced_matches: bool,
}

pub fn is_cyclic_via_od(group: &FiniteGroup) -> Result<CyclicityCheck> {
    cyclicity_of_graph(group.order() as u64, &od_graph(group).graph)
}

/// Compares an order divisor graph of a group of order `n` against
/// `E(G_n)` and its reduction against `G_n`.
pub fn cyclicity_of_graph(n: u64, od: &Graph) -> Result<CyclicityCheck> {
    Ok(CyclicityCheck {
        extended_matches: extended_graph(n)?.is_isomorphic(od)?,
        reduced_matches: comparability_graph(n)?.is_isomorphic(&od.reduced_graph())?,
    })
}
