//! Explicit constructions: increasing and decreasing sub-permutations of a
//! cyclic permutation, the block structure of winding permutations, and
//! colorings of circle-interval hypergraphs.

mod intervals;
mod permutation;

pub use intervals::{interval_coloring, is_stab_class, max_disjoint_arcs, ColoringRoute, IntervalColoring};
pub use permutation::{
    circular_lis, is_clockwise_decreasing, is_clockwise_increasing, min_decreasing_cover, winding_blocks,
    winding_cover, DecreasingCover, SubPermutation, WindingBlocks,
};
