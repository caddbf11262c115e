//! Brute-force oracles. Deliberately naive: they enumerate, they do not
//! search, and they share no code with the library beyond its data types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use hyper3::generators::{from_cyclic_permutation, Arc, ArcFamily, CyclicPermutation};
use hyper3::{Hypergraph3, Triple, Vertex};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn edge_set(h: &Hypergraph3) -> HashSet<[Vertex; 3]> {
    h.edges().map(|t| t.vertices()).collect()
}

fn has(edges: &HashSet<[Vertex; 3]>, a: Vertex, b: Vertex, c: Vertex) -> bool {
    let mut t = [a, b, c];
    t.sort_unstable();
    edges.contains(&t)
}

/// Every coloring of `1..=n` with colors `0..k`, counted in base `k`.
fn some_proper_coloring(h: &Hypergraph3, k: usize) -> bool {
    let n = h.order();
    let edges: Vec<[Vertex; 3]> = h.edges().map(|t| t.vertices()).collect();
    let total = (k as u64).pow(n as u32);
    (0..total).any(|mut code| {
        let mut color = vec![0; n + 1];
        for c in color.iter_mut().skip(1) {
            *c = code % k as u64;
            code /= k as u64;
        }
        edges
            .iter()
            .all(|&[a, b, c]| !(color[a] == color[b] && color[b] == color[c]))
    })
}

/// Least `k` admitting a proper coloring; 0 for the empty vertex set.
pub fn brute_chi(h: &Hypergraph3) -> usize {
    if h.order() == 0 {
        return 0;
    }
    (1..=h.order()).find(|&k| some_proper_coloring(h, k)).unwrap()
}

/// Largest vertex set all of whose triples are edges (sets of size at most
/// two qualify vacuously).
pub fn brute_omega(h: &Hypergraph3) -> usize {
    let edges = edge_set(h);
    let n = h.order();
    (0..=n)
        .rev()
        .find(|&size| {
            (1..=n)
                .combinations(size)
                .any(|s| s.iter().tuple_combinations().all(|(&a, &b, &c)| has(&edges, a, b, c)))
        })
        .unwrap_or(0)
}

/// Orientation as the set of all three rotations of each chosen reading.
fn readings(choice: &[[Vertex; 3]]) -> HashSet<[Vertex; 3]> {
    choice
        .iter()
        .flat_map(|&[a, b, c]| [[a, b, c], [b, c, a], [c, a, b]])
        .collect()
}

/// Checks the closure rule on every pair of readings literally.
pub fn brute_is_transitive(choice: &[[Vertex; 3]], strict: bool) -> bool {
    let o = readings(choice);
    for &[u, v, z] in &o {
        for &[z2, v2, w] in &o {
            if z2 != z || v2 != v || w == u {
                continue;
            }
            if !o.contains(&[u, v, w]) || (strict && !o.contains(&[u, w, z])) {
                return false;
            }
        }
    }
    true
}

/// Tries all `2^m` orientations.
pub fn brute_is_comparability(h: &Hypergraph3, strict: bool) -> bool {
    let edges: Vec<[Vertex; 3]> = h.edges().map(|t| t.vertices()).collect();
    let m = edges.len();
    assert!(m <= 20, "too many edges for the oracle");
    (0u32..1 << m).any(|mask| {
        let choice: Vec<[Vertex; 3]> = edges
            .iter()
            .enumerate()
            .map(|(i, &[a, b, c])| if mask >> i & 1 == 0 { [a, b, c] } else { [a, c, b] })
            .collect();
        brute_is_transitive(&choice, strict)
    })
}

/// Edge sets of every relabelling of every `H_[φ]` of order `n`.
pub fn cyclic_permutation_class(n: usize) -> HashSet<BTreeSet<[Vertex; 3]>> {
    let mut out = HashSet::new();
    for p in CyclicPermutation::all(n) {
        let h = from_cyclic_permutation(&p).underlying();
        for relabel in (1..=n).permutations(n) {
            let edges: BTreeSet<[Vertex; 3]> = h
                .edges()
                .map(|t| {
                    let [a, b, c] = t.vertices();
                    let mut m = [relabel[a - 1], relabel[b - 1], relabel[c - 1]];
                    m.sort_unstable();
                    m
                })
                .collect();
            out.insert(edges);
        }
    }
    out
}

/// All `2^C(n,3)` hypergraphs on `n` vertices.
pub fn all_hypergraphs(n: usize) -> Vec<Hypergraph3> {
    let triples: Vec<Triple> = hyper3::hypercore::all_triples(n).collect();
    (0u64..1 << triples.len())
        .map(|mask| {
            let edges = triples
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &t)| t);
            Hypergraph3::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Each triple present with probability `density`.
pub fn random_hypergraph(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Hypergraph3 {
    let edges: Vec<Triple> = hyper3::hypercore::all_triples(n)
        .filter(|_| rng.gen_bool(density))
        .collect();
    Hypergraph3::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size of a largest pairwise disjoint subfamily, by subsets.
pub fn brute_packing(f: &ArcFamily) -> usize {
    let arcs: &[Arc] = f.arcs();
    (0..=arcs.len())
        .rev()
        .find(|&size| {
            (0..arcs.len()).combinations(size).any(|s| {
                s.iter()
                    .tuple_combinations()
                    .all(|(&i, &j)| !arcs[i].intersects(&arcs[j]))
            })
        })
        .unwrap_or(0)
}

/// Longest clockwise increasing set, by subsets: a set is increasing iff
/// its reading has at most one cyclic descent.
pub fn brute_circular_lis(p: &CyclicPermutation) -> usize {
    let n = p.order();
    (0..=n)
        .rev()
        .find(|&size| {
            (1..=n).combinations(size).any(|mut s| {
                s.sort_by_key(|&v| p.position(v));
                (0..s.len()).filter(|&i| s[i] > s[(i + 1) % s.len()]).count() <= 1
            })
        })
        .unwrap_or(0)
}
