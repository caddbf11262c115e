use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::hypercore::Vertex;

/// A simple graph on `1..=n`. Edges are stored as `(u, w)` with `u < w`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, w) in edges {
            for v in [u, w] {
                if v == 0 || v > n {
                    return Err(Error::InvalidVertex { vertex: v, order: n });
                }
            }
            if u == w {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.edges.insert((u.min(w), u.max(w)));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: Vertex, w: Vertex) -> bool {
        self.edges.contains(&(u.min(w), u.max(w)))
    }

    /// Adjacency lists indexed by vertex (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, w) in &self.edges {
            adj[u].push(w);
            adj[w].push(u);
        }
        adj
    }
}

/// A loopless digraph on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(Vertex, Vertex)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Digraph::new(n);
        for (u, w) in arcs {
            for v in [u, w] {
                if v == 0 || v > n {
                    return Err(Error::InvalidVertex { vertex: v, order: n });
                }
            }
            if u == w {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            d.arcs.insert((u, w));
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: Vertex, w: Vertex) -> bool {
        self.arcs.contains(&(u, w))
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            edges: self.arcs.iter().map(|&(u, w)| (u.min(w), u.max(w))).collect(),
        }
    }

    /// Kahn's algorithm, smallest ready vertex first. `None` if there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut indegree = vec![0usize; self.n + 1];
        let mut out = vec![Vec::new(); self.n + 1];
        for &(u, w) in &self.arcs {
            indegree[w] += 1;
            out[u].push(w);
        }
        let mut ready: BTreeSet<Vertex> = (1..=self.n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Every two-step path `u -> v -> w` is shortcut by an arc `u -> w`.
    pub fn is_transitive(&self) -> bool {
        let mut out = vec![Vec::new(); self.n + 1];
        for &(u, w) in &self.arcs {
            out[u].push(w);
        }
        self.arcs
            .iter()
            .all(|&(u, v)| out[v].iter().all(|&w| w == u || self.arcs.contains(&(u, w))))
    }

    /// Vertices reachable from `v` along arcs, excluding `v` unless on a cycle.
    pub fn reachable(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut out = vec![Vec::new(); self.n + 1];
        for &(u, w) in &self.arcs {
            out[u].push(w);
        }
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<Vertex> = out[v].iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            if seen.insert(u) {
                queue.extend(out[u].iter().copied());
            }
        }
        seen
    }
}

/// The link of a vertex: a simple graph on relabelled vertices plus the map
/// back to the host hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub center: Vertex,
    pub graph: SimpleGraph,
    /// `names[i - 1]` is the host vertex behind link vertex `i`.
    pub names: Vec<Vertex>,
}

impl Link {
    pub fn host(&self, local: Vertex) -> Vertex {
        self.names[local - 1]
    }

    pub fn local(&self, host: Vertex) -> Option<Vertex> {
        self.names.binary_search(&host).ok().map(|i| i + 1)
    }

    /// The link's edges written with host vertex names.
    pub fn host_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.graph.edges().map(|(u, w)| (self.host(u), self.host(w))).collect()
    }
}
