//! Constructors for every hypergraph family used in the crate, with their
//! natural orientations.

mod arcs;
mod mycielski;
mod permutation;

use std::collections::BTreeMap;

pub use arcs::{clockwise_distance, from_arcs, random_arcs, Arc, ArcFamily, RANDOM_GRID};
pub use mycielski::{
    mycielski, mycielski_oriented, mycielski_tower, mycielski_tower_oriented, mycielski_tower_with_limit, MuVertex,
    Mycielski, DEFAULT_TOWER_LIMIT,
};
pub use permutation::{from_cyclic_permutation, winding_hypergraph, winding_permutation, CyclicPermutation};

use crate::hypercore::{all_triples, Hypergraph3, OrientedHypergraph3, Sense};

/// `K³_n`: every triple is an edge.
pub fn complete(n: usize) -> Hypergraph3 {
    Hypergraph3::from_set_unchecked(n, all_triples(n).collect())
}

/// `TT³_n`: all triples, `{i < j < k}` oriented `(i j k)`. Edgeless below 3.
pub fn transitive_tournament(n: usize) -> OrientedHypergraph3 {
    let edges: BTreeMap<_, _> = all_triples(n).map(|t| (t, Sense::Clockwise)).collect();
    OrientedHypergraph3::from_map_unchecked(n, edges)
}
