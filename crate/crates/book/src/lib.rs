//! The chapters of the guide in `book/src`, included as module docs so that
//! `cargo test` compiles and runs every listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/hypergraphs.md")]
pub mod hypergraphs {}

#[doc = include_str!("../../../book/src/recognition.md")]
pub mod recognition {}

#[doc = include_str!("../../../book/src/coloring.md")]
pub mod coloring {}

#[doc = include_str!("../../../book/src/mycielski.md")]
pub mod mycielski {}

#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("../../../book/src/links.md")]
pub mod links {}

#[doc = include_str!("../../../book/src/arcs.md")]
pub mod arcs {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
