//! Recognition of comparability and cyclic-permutation 3-hypergraphs, and
//! the link-based bounds for even hypergraphs.

mod link;
mod recognize;

pub use link::{
    color_comparability_graph, extend_coloring_via_link, link_bounds, link_orientation, LinkBoundReport, OrientedLink,
};
pub use recognize::{
    find_transitive_orientation, is_comparability, is_cyclic_permutation_hypergraph, OrientationCertificate,
    Recognizer, SearchStats,
};
