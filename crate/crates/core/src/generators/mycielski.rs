use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::hypercore::{CyclicTriple, Hypergraph3, OrientedHypergraph3, Triple, Vertex};

/// What a vertex of `μ(H)` stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MuVertex {
    /// `(v, layer)` with `layer` 1 or 2.
    Copy {
        vertex: Vertex,
        layer: u8,
    },
    Apex,
}

/// Output of the construction with the name of every new vertex.
///
/// Numbering is fixed: `(v, 1) -> v`, `(v, 2) -> n + v`, apex `-> 2n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mycielski<H> {
    pub hypergraph: H,
    /// `names[i - 1]` describes vertex `i`.
    pub names: Vec<MuVertex>,
}

fn names(n: usize) -> Vec<MuVertex> {
    let mut names = Vec::with_capacity(2 * n + 1);
    for layer in [1, 2] {
        names.extend((1..=n).map(|vertex| MuVertex::Copy { vertex, layer }));
    }
    names.push(MuVertex::Apex);
    names
}

fn id(n: usize, v: Vertex, layer: u8) -> Vertex {
    if layer == 1 {
        v
    } else {
        n + v
    }
}

/// Lifts every edge to its 8 layer combinations and adds `{(u,1), (u,2), w}`
/// for each vertex `u`.
pub fn mycielski(h: &Hypergraph3) -> Mycielski<Hypergraph3> {
    let n = h.order();
    let apex = 2 * n + 1;
    let mut edges = BTreeSet::new();
    for t in h.edges() {
        let [a, b, c] = t.vertices();
        for mask in 0..8u8 {
            let layer = |bit: u8| if mask & bit == 0 { 1 } else { 2 };
            let lifted =
                Triple::new(id(n, a, layer(1)), id(n, b, layer(2)), id(n, c, layer(4))).expect("distinct projections");
            edges.insert(lifted);
        }
    }
    for u in 1..=n {
        edges.insert(Triple::new(u, n + u, apex).expect("distinct"));
    }
    Mycielski {
        hypergraph: Hypergraph3::from_set_unchecked(apex, edges),
        names: names(n),
    }
}

/// `μ` with the orientation that makes it transitive again: apex edges are
/// read `((u,1) (u,2) w)` and lifted edges copy the orientation of their
/// projection.
///
/// The input must be transitive under [`TransitivityMode::Strict`](crate::TransitivityMode).
pub fn mycielski_oriented(oh: &OrientedHypergraph3) -> Result<Mycielski<OrientedHypergraph3>> {
    oh.require_transitive()?;
    let n = oh.order();
    let apex = 2 * n + 1;
    let mut edges = BTreeMap::new();
    for e in oh.oriented_edges() {
        let [x, y, z] = e.reading();
        for mask in 0..8u8 {
            let layer = |bit: u8| if mask & bit == 0 { 1 } else { 2 };
            let lifted = CyclicTriple::new(id(n, x, layer(1)), id(n, y, layer(2)), id(n, z, layer(4)))
                .expect("distinct projections");
            edges.insert(lifted.triple(), lifted.sense());
        }
    }
    for u in 1..=n {
        let e = CyclicTriple::new(u, n + u, apex).expect("distinct");
        edges.insert(e.triple(), e.sense());
    }
    Ok(Mycielski {
        hypergraph: OrientedHypergraph3::from_map_unchecked(apex, edges),
        names: names(n),
    })
}

/// Default cap on the order of a tower.
pub const DEFAULT_TOWER_LIMIT: usize = 1 << 10;

/// `μ^k(H)`, refusing to build anything of order above `limit`.
pub fn mycielski_tower_with_limit(h: &Hypergraph3, k: usize, limit: usize) -> Result<Hypergraph3> {
    tower_order(h.order(), k, limit)?;
    let mut cur = h.clone();
    for _ in 0..k {
        cur = mycielski(&cur).hypergraph;
    }
    Ok(cur)
}

/// Order of `μ^k` applied to order `n`, which is `2^k (n + 1) - 1`.
fn tower_order(n: usize, k: usize, limit: usize) -> Result<usize> {
    let mut order = n;
    for _ in 0..k {
        order = order.saturating_mul(2).saturating_add(1);
        if order > limit {
            return Err(Error::SizeLimit { order, limit });
        }
    }
    Ok(order)
}

pub fn mycielski_tower(h: &Hypergraph3, k: usize) -> Result<Hypergraph3> {
    mycielski_tower_with_limit(h, k, DEFAULT_TOWER_LIMIT)
}

/// Oriented tower; every level stays transitive.
pub fn mycielski_tower_oriented(oh: &OrientedHypergraph3, k: usize, limit: usize) -> Result<OrientedHypergraph3> {
    tower_order(oh.order(), k, limit)?;
    let mut cur = oh.clone();
    for _ in 0..k {
        cur = mycielski_oriented(&cur)?.hypergraph;
    }
    Ok(cur)
}
