//! Graph joins and unions. The vertices of the second operand follow those
//! of the first.

use super::{Annotation, Graph};
use crate::error::{Error, Result};

fn concat_annotations(a: &Graph, b: &Graph) -> Option<Vec<Annotation>> {
    let (x, y) = (a.annotations.as_ref()?, b.annotations.as_ref()?);
    Some(x.iter().chain(y).cloned().collect())
}

impl Graph {
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// `G_1 ∨ G_2`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let (a, b) = (self.n, other.n);
        let n = a + b;
        let mut g = Graph::from_fn(n, |u, v| match (u < a, v < a) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - a, v - a),
            _ => cross,
        });
        g.annotations = concat_annotations(self, other);
        g
    }

    /// `G_1 ⋄ G_2 ⋄ … ⋄ G_k`: disjoint union with every vertex of `G_i`
    /// joined to every vertex of `G_{i+1}`.
    pub fn sequential_join(parts: &[Graph]) -> Graph {
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        offsets.push(0);
        for p in parts {
            offsets.push(offsets.last().unwrap() + p.n);
        }
        let n = *offsets.last().unwrap();
        let block = |v: usize| offsets.partition_point(|&o| o <= v) - 1;
        let mut g = Graph::from_fn(n, |u, v| {
            let (bu, bv) = (block(u), block(v));
            if bu == bv {
                parts[bu].has_edge(u - offsets[bu], v - offsets[bu])
            } else {
                bu.abs_diff(bv) == 1
            }
        });
        if parts.iter().all(|p| p.annotations.is_some()) {
            g.annotations = Some(parts.iter().flat_map(|p| p.annotations.clone().unwrap()).collect());
        }
        g
    }

    /// Edge union of graphs on the same vertex set. Annotations come from
    /// the first graph.
    pub fn overlay(graphs: &[Graph]) -> Result<Graph> {
        let first = graphs.first().ok_or(Error::EmptyGraph)?;
        let n = first.n;
        if let Some(bad) = graphs.iter().find(|g| g.n != n) {
            return Err(Error::BadVertex { vertex: bad.n, count: n });
        }
        let mut g = Graph::from_fn(n, |u, v| graphs.iter().any(|h| h.has_edge(u, v)));
        g.annotations = first.annotations.clone();
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn join_examples() {
        let star = Graph::empty(1).join(&Graph::empty(5));
        assert_eq!(star.vertex_count(), 6);
        assert_eq!(star.is_star(), Some(0));
        assert_eq!(Graph::empty(1).disjoint_union(&Graph::empty(1)), Graph::empty(2));
    }

    #[test]
    fn sequential_join_of_three_independent_sets() {
        let g = Graph::sequential_join(&[Graph::empty(2), Graph::empty(8), Graph::empty(4)]).join(&Graph::empty(1));
        assert_eq!(g.vertex_count(), 15);
        // 2*8 + 8*4 + 14 (apex)
        assert_eq!(g.edge_count(), 62);
        assert!(!g.has_edge(0, 10));
        assert!(g.has_edge(0, 2) && g.has_edge(2, 10) && g.has_edge(14, 0));
    }

    #[test]
    fn sequential_join_keeps_inner_edges() {
        let g = Graph::sequential_join(&[Graph::complete(2), Graph::empty(1), Graph::path(3)]);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(3, 4) && g.has_edge(4, 5) && !g.has_edge(3, 5));
        assert!(g.has_edge(1, 2) && g.has_edge(2, 5) && !g.has_edge(0, 3));
    }

    #[test]
    fn overlay_requires_matching_vertex_sets() {
        assert!(Graph::overlay(&[]).is_err());
        assert!(Graph::overlay(&[Graph::empty(2), Graph::empty(3)]).is_err());
        let g = Graph::overlay(&[Graph::path(3), Graph::from_edges(3, &[(0, 2)]).unwrap()]).unwrap();
        assert!(g.is_complete());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..7).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn join_counts(g1 in arb_graph(), g2 in arb_graph()) {
            let j = g1.join(&g2);
            prop_assert_eq!(j.vertex_count(), g1.vertex_count() + g2.vertex_count());
            prop_assert_eq!(
                j.edge_count(),
                g1.edge_count() + g2.edge_count() + g1.vertex_count() * g2.vertex_count()
            );
            let u = g1.disjoint_union(&g2);
            prop_assert_eq!(u.edge_count(), g1.edge_count() + g2.edge_count());
        }
    }
}
