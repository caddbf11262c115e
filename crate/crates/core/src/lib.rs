//! Construction, orientation, recognition and exact coloring of 3-uniform
//! hypergraphs.
//!
//! The central objects are [`Hypergraph3`] and its oriented counterpart
//! [`OrientedHypergraph3`]. An orientation picks one of the two cyclic
//! orderings of every edge; it is *transitive* when oriented edges `(u v z)`
//! and `(z v w)` always imply `(u v w)`. Hypergraphs admitting a transitive
//! orientation are *comparability* 3-hypergraphs.
//!
//! ```
//! use hyper3::generators::winding_hypergraph;
//! use hyper3::solvers::{chi, omega};
//!
//! let w = winding_hypergraph(5, 3).unwrap().underlying();
//! assert_eq!(omega(&w).unwrap().0, 5);
//! assert_eq!(chi(&w).unwrap().0, 4);
//! ```

pub mod comparability;
pub mod constructive;
mod error;
pub mod generators;
pub mod hypercore;
pub mod io;
pub mod solvers;

pub use error::{Error, Result};
pub use hypercore::{
    canonical_cyclic, CyclicTriple, Digraph, Hypergraph3, Link, OrientedHypergraph3, Sense, SimpleGraph,
    TransitivityMode, Triple, Vertex,
};
