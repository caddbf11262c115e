use crate::error::{Error, Result};
use crate::hypercore::Hypergraph3;
use crate::solvers::Coloring;

struct Search {
    k: usize,
    budget: u64,
    nodes: u64,
    /// For each vertex, the pairs completing an edge with it.
    pairs: Vec<Vec<(usize, usize)>>,
    color: Vec<usize>,
    /// `blocked[v][c]`: edges through `v` whose other two vertices have
    /// color `c`. Color `c` is available to `v` iff this is zero.
    blocked: Vec<Vec<u32>>,
}

impl Search {
    fn new(h: &Hypergraph3, k: usize, budget: u64) -> Self {
        let n = h.order();
        let mut pairs = vec![Vec::new(); n + 1];
        for t in h.edges() {
            let [a, b, c] = t.vertices();
            pairs[a].push((b, c));
            pairs[b].push((a, c));
            pairs[c].push((a, b));
        }
        Search {
            k,
            budget,
            nodes: 0,
            pairs,
            color: vec![0; n + 1],
            blocked: vec![vec![0; k + 1]; n + 1],
        }
    }

    /// Colors `v` with `c`; returns false if some uncolored vertex is left
    /// with no color. The caller must `unassign` either way.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut alive = true;
        for i in 0..self.pairs[v].len() {
            let (x, y) = self.pairs[v][i];
            let target = match (self.color[x], self.color[y]) {
                (cx, 0) if cx == c => y,
                (0, cy) if cy == c => x,
                _ => continue,
            };
            self.blocked[target][c] += 1;
            if self.blocked[target][c] == 1 && self.blocked[target][1..].iter().all(|&b| b > 0) {
                alive = false;
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        for i in 0..self.pairs[v].len() {
            let (x, y) = self.pairs[v][i];
            match (self.color[x], self.color[y]) {
                (cx, 0) if cx == c => self.blocked[y][c] -= 1,
                (0, cy) if cy == c => self.blocked[x][c] -= 1,
                _ => {}
            }
        }
        self.color[v] = 0;
    }

    fn run(&mut self, v: usize, max_used: usize) -> Result<bool> {
        if v == self.color.len() {
            return Ok(true);
        }
        let top = self.k.min(max_used + 1);
        for c in 1..=top {
            if self.blocked[v][c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let alive = self.assign(v, c);
            let found = alive && self.run(v + 1, max_used.max(c))?;
            if found {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

pub(super) fn k_colorable(h: &Hypergraph3, k: usize, budget: u64) -> Result<Option<Coloring>> {
    let n = h.order();
    if n == 0 {
        return Ok(Some(Coloring::new(k, Vec::new())?));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Search::new(h, k, budget);
    if search.run(1, 0)? {
        let colors = search.color[1..].to_vec();
        Ok(Some(Coloring::new(k, colors)?))
    } else {
        Ok(None)
    }
}
