//! Twin classes and the reduced (twin-quotient) graph.
//!
//! Closed twins share `N[v]`, open twins share `N(v)`. Same-order vertices of
//! an order divisor graph are open twins, never closed ones, so the
//! reduction merges both kinds. On annotated graphs only twins with equal
//! order tags merge; without that, distinct orders such as 3 and 5 in
//! `Z_15` (open twins) or 1 and 2 in `Z_8` (closed twins) would collapse
//! and the quotient would no longer be the divisor comparability graph.

use std::collections::HashMap;

use super::{Annotation, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    /// Merged classes, ordered by smallest member; vertex `i` of `graph`
    /// stands for `classes[i]`.
    pub classes: Vec<Vec<usize>>,
}

fn group_by_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Vec<Vec<usize>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let id = *index.entry(key(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
    }
    classes
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

impl Graph {
    fn row(&self, v: usize, closed: bool) -> Vec<bool> {
        let n = self.vertex_count();
        (0..n).map(|w| self.has_edge(v, w) || (closed && w == v)).collect()
    }

    /// Vertices grouped by closed neighborhood `N[v]`, ordered by smallest member.
    pub fn closed_twin_classes(&self) -> Vec<Vec<usize>> {
        group_by_key(self.vertex_count(), |v| self.row(v, true))
    }

    /// Vertices grouped by open neighborhood `N(v)`, ordered by smallest member.
    pub fn open_twin_classes(&self) -> Vec<Vec<usize>> {
        group_by_key(self.vertex_count(), |v| self.row(v, false))
    }

    /// Merges open or closed twins (with equal order tags when annotated).
    pub fn reduce(&self) -> Reduction {
        let n = self.vertex_count();
        let tag = |v: usize| self.order_tag(v).unwrap_or(0);
        let mut parent: Vec<usize> = (0..n).collect();
        for closed in [false, true] {
            for class in group_by_key(n, |v| (self.row(v, closed), tag(v))) {
                for &v in &class[1..] {
                    let (a, b) = (find(&mut parent, class[0]), find(&mut parent, v));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let classes = group_by_key(n, |v| roots[v]);
        // twin classes are homogeneous, so representatives decide adjacency
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let graph = Graph::from_fn(reps.len(), |a, b| self.has_edge(reps[a], reps[b]));
        let graph = match self.annotations() {
            Some(ann) => {
                let merged: Vec<Annotation> = reps.iter().map(|&r| ann[r].clone()).collect();
                graph.with_annotations(merged).expect("one annotation per class")
            }
            None => graph,
        };
        Reduction { graph, classes }
    }

    pub fn reduced_graph(&self) -> Graph {
        self.reduce().graph
    }
}
