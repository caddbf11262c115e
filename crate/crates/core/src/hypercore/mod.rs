//! Plain and oriented 3-uniform hypergraphs and their structural predicates.

mod graph;
mod hypergraph;
mod oriented;
mod triple;

pub use graph::{Digraph, Link, SimpleGraph};
pub use hypergraph::{all_triples, Hypergraph3};
pub use oriented::{OrientedHypergraph3, TransitivityMode, TransitivityViolation};
pub use triple::{canonical_cyclic, CyclicTriple, Sense, Triple, Vertex};
