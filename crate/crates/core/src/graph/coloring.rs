//! Exact chromatic number by DSatur branch and bound.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph::chromatic_number`] by default.
pub const DEFAULT_COLORING_CAP: usize = 128;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    color: Vec<Option<usize>>,
    // neighbor_colors[v * n + c]: colored neighbors of v holding color c
    neighbor_colors: Vec<u32>,
    saturation: Vec<usize>,
    best: usize,
    lower: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, best: usize, lower: usize) -> Self {
        let n = g.vertex_count();
        Self { g, n, color: vec![None; n], neighbor_colors: vec![0; n * n], saturation: vec![0; n], best, lower }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_colors[w * self.n + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().unwrap();
        for &w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_colors[w * self.n + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.n)
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn run(&mut self, used: usize) {
        if self.best == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            return;
        };
        // a new color is only worth trying while it stays below the incumbent
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.neighbor_colors[v * self.n + c] == 0 {
                self.assign(v, c);
                self.run(used.max(c + 1));
                self.unassign(v);
                if self.best == self.lower {
                    return;
                }
            }
        }
    }
}

fn greedy_dsatur(g: &Graph) -> usize {
    let mut s = Search::new(g, usize::MAX, 0);
    let mut used = 0;
    while let Some(v) = s.pick() {
        let c = (0..).find(|&c| s.neighbor_colors[v * s.n + c] == 0).unwrap();
        s.assign(v, c);
        used = used.max(c + 1);
    }
    used
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// One vertex per tag along a longest divisibility chain of order tags.
fn tag_chain(g: &Graph) -> Option<Vec<usize>> {
    let ann = g.annotations()?;
    let mut tags: Vec<u64> = ann.iter().map(|a| a.order_tag).filter(|&t| t > 0).collect();
    tags.sort_unstable();
    tags.dedup();
    if tags.is_empty() {
        return None;
    }
    let mut len = vec![1usize; tags.len()];
    let mut prev = vec![usize::MAX; tags.len()];
    for j in 0..tags.len() {
        for i in 0..j {
            if tags[j].is_multiple_of(tags[i]) && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let mut at = (0..tags.len()).max_by_key(|&j| len[j])?;
    let mut chain = Vec::new();
    loop {
        let rep = ann.iter().position(|a| a.order_tag == tags[at])?;
        chain.push(rep);
        if prev[at] == usize::MAX {
            break;
        }
        at = prev[at];
    }
    Some(chain)
}

fn greedy_clique(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = usize::from(n > 0);
    for start in 0..n {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = g.neighbors(start).to_vec();
        while let Some(&next) = candidates.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))) {
            clique.push(next);
            candidates.retain(|&v| v != next && g.has_edge(next, v));
        }
        best = best.max(clique.len());
    }
    best
}

impl Graph {
    /// Exact chromatic number; refuses graphs with more than `cap` vertices.
    ///
    /// The lower bound is the larger of a greedy clique and, for annotated
    /// graphs, a longest chain of pairwise dividing order tags (used only if
    /// it really is a clique here). DSatur supplies the upper bound.
    pub fn chromatic_number(&self, cap: usize) -> Result<usize> {
        let n = self.vertex_count();
        if n > cap {
            return Err(Error::CapExceeded { what: "chromatic number input", size: n as u64, cap: cap as u64 });
        }
        if n == 0 {
            return Ok(0);
        }
        let chain = tag_chain(self).filter(|c| is_clique(self, c)).map_or(0, |c| c.len());
        let lower = greedy_clique(self).max(chain);
        let upper = greedy_dsatur(self);
        if lower == upper {
            return Ok(upper);
        }
        let mut search = Search::new(self, upper, lower);
        search.run(0);
        Ok(search.best)
    }
}
