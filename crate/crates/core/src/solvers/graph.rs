//! The same two searches specialised to simple graphs, used on links.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hypercore::{SimpleGraph, Vertex};
use crate::solvers::{Coloring, Solver};

struct ColorSearch {
    k: usize,
    adj: Vec<Vec<Vertex>>,
    color: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl ColorSearch {
    fn run(&mut self, v: usize, max_used: usize) -> Result<bool> {
        if v == self.color.len() {
            return Ok(true);
        }
        for c in 1..=self.k.min(max_used + 1) {
            if self.adj[v].iter().any(|&u| self.color[u] == c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.color[v] = c;
            if self.run(v + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.color[v] = 0;
        }
        Ok(false)
    }
}

pub fn graph_k_colorable(g: &SimpleGraph, k: usize, solver: &Solver) -> Result<Option<Coloring>> {
    if g.order() == 0 {
        return Ok(Some(Coloring::new(k, Vec::new())?));
    }
    let mut search = ColorSearch {
        k,
        adj: g.adjacency(),
        color: vec![0; g.order() + 1],
        nodes: 0,
        budget: solver.budget,
    };
    if search.run(1, 0)? {
        Ok(Some(Coloring::new(k, search.color[1..].to_vec())?))
    } else {
        Ok(None)
    }
}

/// Chromatic number of a simple graph; 0 for the empty graph.
pub fn graph_chi(g: &SimpleGraph, solver: &Solver) -> Result<(usize, Coloring)> {
    if g.order() == 0 {
        return Ok((0, Coloring::default()));
    }
    for k in 1.. {
        if let Some(c) = graph_k_colorable(g, k, solver)? {
            return Ok((k, c));
        }
    }
    unreachable!()
}

struct CliqueSearch {
    adj: Vec<FixedBitSet>,
    current: Vec<Vertex>,
    best: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch {
    fn expand(&mut self, candidates: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let mut remaining = candidates.count_ones(..);
        for v in candidates.ones() {
            if self.current.len() + remaining <= self.best.len() {
                break;
            }
            remaining -= 1;
            let mut next = candidates.clone();
            next.set_range(..v + 1, false);
            next.intersect_with(&self.adj[v]);
            self.current.push(v);
            self.expand(next)?;
            self.current.pop();
        }
        Ok(())
    }
}

/// Clique number of a simple graph with a lexicographically first witness.
pub fn graph_omega(g: &SimpleGraph, solver: &Solver) -> Result<(usize, Vec<Vertex>)> {
    let n = g.order();
    let mut adj = vec![FixedBitSet::with_capacity(n + 1); n + 1];
    for (u, w) in g.edges() {
        adj[u].insert(w);
        adj[w].insert(u);
    }
    let mut search = CliqueSearch {
        adj,
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget: solver.budget,
    };
    let mut all = FixedBitSet::with_capacity(n + 1);
    all.insert_range(1..n + 1);
    search.expand(all)?;
    Ok((search.best.len(), search.best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    #[test]
    fn odd_cycle() {
        let s = Solver::default();
        assert_eq!(graph_chi(&cycle(5), &s).unwrap().0, 3);
        assert_eq!(graph_omega(&cycle(5), &s).unwrap().0, 2);
        assert_eq!(graph_chi(&cycle(6), &s).unwrap().0, 2);
    }

    #[test]
    fn complete_graph() {
        let s = Solver::default();
        let k5 = SimpleGraph::from_edges(5, (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j)))).unwrap();
        assert_eq!(graph_chi(&k5, &s).unwrap().0, 5);
        assert_eq!(graph_omega(&k5, &s).unwrap(), (5, vec![1, 2, 3, 4, 5]));
    }

    #[test]
    fn degenerate_graphs() {
        let s = Solver::default();
        assert_eq!(graph_chi(&SimpleGraph::new(0), &s).unwrap().0, 0);
        assert_eq!(graph_chi(&SimpleGraph::new(3), &s).unwrap().0, 1);
        assert_eq!(graph_omega(&SimpleGraph::new(3), &s).unwrap().0, 1);
        assert_eq!(graph_omega(&SimpleGraph::new(0), &s).unwrap().0, 0);
    }
}
