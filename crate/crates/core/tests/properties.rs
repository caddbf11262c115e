mod common;

use hyper3::comparability::{color_comparability_graph, link_orientation};
use hyper3::constructive::{interval_coloring, is_stab_class, max_disjoint_arcs};
use hyper3::generators::{
    from_arcs, from_cyclic_permutation, mycielski, random_arcs, transitive_tournament, winding_permutation,
    CyclicPermutation,
};
use hyper3::solvers::{chi, omega, Solver};
use hyper3::{io, Hypergraph3, TransitivityMode, Triple};
use proptest::prelude::*;

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph3> {
    (0..=max_n).prop_flat_map(|n| {
        let triples: Vec<Triple> = hyper3::hypercore::all_triples(n).collect();
        let m = triples.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = triples.iter().zip(&keep).filter(|(_, &k)| k).map(|(&t, _)| t);
            Hypergraph3::from_edges(n, edges).unwrap()
        })
    })
}

fn permutation(max_n: usize) -> impl Strategy<Value = CyclicPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| CyclicPermutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h3_round_trip(h in hypergraph(8)) {
        let text = io::emit_h3(&h);
        prop_assert_eq!(io::parse_h3(&text).unwrap(), h);
    }

    #[test]
    fn oh3_round_trip(p in permutation(9)) {
        let oh = from_cyclic_permutation(&p);
        let text = io::emit_oh3(&oh);
        prop_assert_eq!(io::parse_oh3(&text).unwrap(), oh);
    }

    #[test]
    fn iv_round_trip(n in 0usize..30, seed in any::<u64>()) {
        let f = random_arcs(n, seed, 0.0, 0.5).unwrap();
        let text = io::emit_iv(&f);
        prop_assert_eq!(io::emit_iv(&io::parse_iv(&text).unwrap()), text.clone());
        prop_assert_eq!(io::parse_iv(&text).unwrap(), f);
    }

    #[test]
    fn complement_is_an_involution(h in hypergraph(7)) {
        prop_assert_eq!(h.complement().complement(), h.clone());
        prop_assert_eq!(h.complement().edge_count() + h.edge_count(), hyper3::hypercore::all_triples(h.order()).count());
    }

    #[test]
    fn eq1_holds(h in hypergraph(7)) {
        let (w, _) = omega(&h).unwrap();
        let (c, coloring) = chi(&h).unwrap();
        prop_assert!(w.div_ceil(2) <= c);
        prop_assert!(coloring.is_proper_for(&h));
        if c > 1 {
            prop_assert!(Solver::default().k_colorable(&h, c - 1).unwrap().is_none());
        }
    }

    #[test]
    fn permutation_orientations_are_transitive_and_even(p in permutation(9)) {
        let oh = from_cyclic_permutation(&p);
        prop_assert!(oh.is_transitive(TransitivityMode::Strict));
        prop_assert!(oh.is_transitive(TransitivityMode::Literal));
        prop_assert!(oh.underlying().is_even());
        prop_assert!(from_cyclic_permutation(&p.reversed()).underlying() == oh.underlying().complement());
    }

    #[test]
    fn links_of_transitive_orientations_are_orders(p in permutation(8), v in 1usize..=8) {
        let oh = from_cyclic_permutation(&p);
        let v = (v - 1) % p.order() + 1;
        let d = link_orientation(&oh, v).unwrap().digraph;
        prop_assert!(d.is_acyclic() && d.is_transitive());
        let c = color_comparability_graph(&d).unwrap();
        let g = d.underlying();
        prop_assert!(g.edges().all(|(a, b)| c.color(a) != c.color(b)));
    }

    #[test]
    fn mycielski_keeps_omega_and_raises_chi(h in hypergraph(5)) {
        let m = mycielski(&h).hypergraph;
        prop_assert_eq!(m.order(), 2 * h.order() + 1);
        prop_assert_eq!(m.edge_count(), 8 * h.edge_count() + h.order());
        if h.edge_count() > 0 {
            prop_assert_eq!(omega(&m).unwrap().0, omega(&h).unwrap().0);
            prop_assert_eq!(chi(&m).unwrap().0, chi(&h).unwrap().0 + 1);
        }
    }

    #[test]
    fn winding_has_one_last(q in 2usize..8, r in 1usize..6) {
        let p = winding_permutation(q, r).unwrap();
        prop_assert_eq!(p.order(), r * (q - 1) + 1);
        prop_assert_eq!(*p.values().last().unwrap(), 1);
    }

    #[test]
    fn interval_colorings_are_proper(n in 0usize..16, seed in any::<u64>(), max_len in 0.05f64..0.6) {
        let f = random_arcs(n, seed, 0.0, max_len).unwrap();
        let h = from_arcs(&f).0;
        let ic = interval_coloring(&f, &Solver::default());
        prop_assert!(ic.coloring.is_proper_for(&h));
        prop_assert_eq!(ic.packing, max_disjoint_arcs(&f).len());
        prop_assert!(ic.coloring.used() <= ic.target() + 1);
        for class in ic.coloring.classes() {
            prop_assert!(is_stab_class(&f, &class));
        }
        let w = omega(&h).unwrap().0;
        if ic.packing >= 3 {
            prop_assert_eq!(w, ic.packing);
        }
    }
}

#[test]
fn tournament_is_the_unique_clockwise_orientation() {
    for n in 0..7 {
        let tt = transitive_tournament(n);
        assert_eq!(tt, from_cyclic_permutation(&CyclicPermutation::identity(n)));
    }
}
