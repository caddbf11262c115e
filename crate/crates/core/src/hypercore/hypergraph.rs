use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypercore::{Link, SimpleGraph, Triple, Vertex};

/// A 3-uniform hypergraph on the vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Hypergraph3 {
    n: usize,
    edges: BTreeSet<Triple>,
}

impl Hypergraph3 {
    /// The null hypergraph of order `n`.
    pub fn new(n: usize) -> Self {
        Hypergraph3 {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a hypergraph, rejecting out-of-range vertices and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut h = Hypergraph3::new(n);
        for t in edges {
            check_range(&t, n)?;
            if !h.edges.insert(t) {
                let [a, b, c] = t.vertices();
                return Err(Error::DuplicateEdge(a, b, c));
            }
        }
        Ok(h)
    }

    /// Convenience constructor from raw vertex lists in any order.
    pub fn from_triples(n: usize, triples: &[[Vertex; 3]]) -> Result<Self> {
        let edges = triples
            .iter()
            .map(|&[x, y, z]| Triple::new(x, y, z))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(n, edges)
    }

    pub(crate) fn from_set_unchecked(n: usize, edges: BTreeSet<Triple>) -> Self {
        Hypergraph3 { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Triple> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.edges.contains(t)
    }

    /// True iff `{x, y, z}` is an edge. Repeated vertices are never an edge.
    pub fn has_edge(&self, x: Vertex, y: Vertex, z: Vertex) -> bool {
        Triple::new(x, y, z).is_ok_and(|t| self.edges.contains(&t))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|t| t.contains(v)).count()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// All triples of `1..=n` that are not edges.
    pub fn complement(&self) -> Hypergraph3 {
        let edges = all_triples(self.n).filter(|t| !self.edges.contains(t)).collect();
        Hypergraph3 { n: self.n, edges }
    }

    /// The subhypergraph induced by `subset`, relabelled `1..=|subset|` in
    /// ascending vertex order.
    pub fn induced(&self, subset: &[Vertex]) -> Result<Hypergraph3> {
        let mut keep: Vec<Vertex> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut label = vec![0; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            label[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|t| {
                let [a, b, c] = t.vertices();
                (label[a] > 0 && label[b] > 0 && label[c] > 0)
                    .then(|| Triple::new(label[a], label[b], label[c]).expect("distinct labels"))
            })
            .collect();
        Ok(Hypergraph3 { n: keep.len(), edges })
    }

    /// The first 4-set (lexicographically) inducing an odd number of edges.
    pub fn even_violation(&self) -> Option<[Vertex; 4]> {
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        let count = [[a, b, c], [a, b, d], [a, c, d], [b, c, d]]
                            .iter()
                            .filter(|&&[x, y, z]| self.has_edge(x, y, z))
                            .count();
                        if count % 2 == 1 {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Every four vertices induce 0, 2 or 4 edges.
    pub fn is_even(&self) -> bool {
        self.even_violation().is_none()
    }

    /// The link of `v`: vertices sharing an edge with `v`, joined when they
    /// complete an edge with it.
    pub fn link(&self, v: Vertex) -> Result<Link> {
        self.check_vertex(v)?;
        let pairs: Vec<(Vertex, Vertex)> = self.edges.iter().filter_map(|t| t.others(v)).collect();
        let names: Vec<Vertex> = pairs
            .iter()
            .flat_map(|&(x, y)| [x, y])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let local = |x: Vertex| names.binary_search(&x).expect("link vertex") + 1;
        let graph = SimpleGraph::from_edges(names.len(), pairs.iter().map(|&(x, y)| (local(x), local(y))))?;
        Ok(Link {
            center: v,
            graph,
            names,
        })
    }
}

impl fmt::Display for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}; ", self.n)?;
        for (i, t) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn check_range(t: &Triple, n: usize) -> Result<()> {
    if t.min() == 0 {
        return Err(Error::InvalidVertex { vertex: 0, order: n });
    }
    if t.max() > n {
        return Err(Error::InvalidVertex {
            vertex: t.max(),
            order: n,
        });
    }
    Ok(())
}

/// All `C(n, 3)` triples of `1..=n` in lexicographic order.
pub fn all_triples(n: usize) -> impl Iterator<Item = Triple> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| Triple::new(a, b, c).expect("ascending")))
    })
}
