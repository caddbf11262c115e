use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph3;
use crate::solvers::CliqueWitness;

struct Search {
    /// `thirds[(u, v)]` for `u < v`: vertices completing an edge with both.
    thirds: HashMap<(usize, usize), FixedBitSet>,
    empty: FixedBitSet,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn thirds(&self, u: usize, v: usize) -> &FixedBitSet {
        self.thirds.get(&(u.min(v), u.max(v))).unwrap_or(&self.empty)
    }

    /// `candidates` holds every vertex that extends `current` to a clique
    /// and exceeds its last element.
    fn expand(&mut self, candidates: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let mut remaining = candidates.count_ones(..);
        if self.current.len() + remaining <= self.best.len() {
            return Ok(());
        }
        for v in candidates.ones() {
            if self.current.len() + remaining <= self.best.len() {
                break;
            }
            remaining -= 1;
            let mut next = candidates.clone();
            next.set_range(..v + 1, false);
            for &u in &self.current {
                next.intersect_with(self.thirds(u, v));
            }
            self.current.push(v);
            self.expand(next)?;
            self.current.pop();
        }
        Ok(())
    }
}

pub(super) fn max_clique(h: &Hypergraph3, budget: u64) -> Result<(usize, CliqueWitness)> {
    let n = h.order();
    let mut thirds: HashMap<(usize, usize), FixedBitSet> = HashMap::new();
    for t in h.edges() {
        let [a, b, c] = t.vertices();
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            thirds
                .entry((x, y))
                .or_insert_with(|| FixedBitSet::with_capacity(n + 1))
                .insert(z);
        }
    }
    let mut search = Search {
        thirds,
        empty: FixedBitSet::with_capacity(n + 1),
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    let mut all = FixedBitSet::with_capacity(n + 1);
    all.insert_range(1..n + 1);
    search.expand(all)?;
    let best = search.best;
    Ok((best.len(), CliqueWitness { vertices: best }))
}
