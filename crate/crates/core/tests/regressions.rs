//! Pinned values found while exploring the small cases.

use hyper3::comparability::{is_comparability, is_cyclic_permutation_hypergraph};
use hyper3::constructive::{interval_coloring, max_disjoint_arcs, ColoringRoute};
use hyper3::generators::{complete, from_arcs, mycielski, Arc, ArcFamily};
use hyper3::solvers::{chi, Solver};

#[test]
fn mycielski_of_small_complete_is_not_cyclic_permutation() {
    for n in [3, 4] {
        let h = mycielski(&complete(n)).hypergraph;
        assert!(is_comparability(&h).unwrap());
        assert!(!is_cyclic_permutation_hypergraph(&h).unwrap(), "mu(K_{n})");
    }
}

/// 25 arcs `[j/25, (j+5)/25]`: four pairwise disjoint arcs fit, yet no two
/// stab classes cover the family, and the hypergraph needs three colors.
#[test]
fn rotated_fifths_need_three_colors() {
    let f = ArcFamily::new((0..25).map(|j| Arc::from_ratio(j, (j + 5) % 25, 25).unwrap()).collect());
    assert_eq!(max_disjoint_arcs(&f).len(), 4);
    let h = from_arcs(&f).0;
    assert_eq!(chi(&h).unwrap().0, 3);
    let ic = interval_coloring(&f, &Solver::default());
    assert_eq!(
        (ic.target(), ic.coloring.used(), ic.route),
        (2, 3, ColoringRoute::Surplus)
    );
}

/// Same family, without the solver: every 2-coloring (arc 1 fixed to the
/// first class) leaves some edge inside one class.
#[test]
fn rotated_fifths_have_no_two_coloring_by_enumeration() {
    let f = ArcFamily::new((0..25).map(|j| Arc::from_ratio(j, (j + 5) % 25, 25).unwrap()).collect());
    let masks: Vec<u32> = from_arcs(&f)
        .0
        .edges()
        .map(|t| t.vertices().iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
        .collect();
    assert!(!masks.is_empty());
    let all = (1u32 << 25) - 1;
    let two_colorable = (0u32..1 << 24).map(|c| c << 1).any(|second| {
        let first = all & !second;
        masks.iter().all(|&e| e & first != e && e & second != e)
    });
    assert!(!two_colorable);
}
