//! Exact chromatic number, clique number and k-colorability.
//!
//! Every search counts nodes against a budget and fails with
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) rather than return
//! a guess. The default budget is [`DEFAULT_BUDGET`]; the
//! `HYPER3_BUDGET` environment variable overrides it for [`Solver::default`].

mod clique;
mod coloring;
mod graph;

use std::collections::BTreeSet;

pub use graph::{graph_chi, graph_k_colorable, graph_omega};

use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph3, Triple, Vertex};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable consulted by [`Solver::default`].
pub const BUDGET_ENV: &str = "HYPER3_BUDGET";

/// A color for every vertex, colors in `1..=k`. Classes may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    /// `colors[i]` is the color of vertex `i + 1`.
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidParameter(format!("color {bad} outside 1..={k}")));
        }
        Ok(Coloring { k, colors })
    }

    pub fn uniform(n: usize) -> Self {
        Coloring {
            k: usize::from(n > 0),
            colors: vec![1; n],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v - 1]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colors actually used.
    pub fn used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Vertex sets of the color classes `1..=k`, some possibly empty.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.k];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(i + 1);
        }
        classes
    }

    pub fn monochromatic_edge(&self, h: &Hypergraph3) -> Option<Triple> {
        if self.colors.len() != h.order() {
            return h.edges().next();
        }
        h.edges().find(|t| {
            let [a, b, c] = t.vertices();
            self.color(a) == self.color(b) && self.color(b) == self.color(c)
        })
    }

    /// No edge of `h` is monochromatic.
    pub fn is_proper_for(&self, h: &Hypergraph3) -> bool {
        self.colors.len() == h.order() && self.monochromatic_edge(h).is_none()
    }
}

/// A vertex set all of whose triples are edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CliqueWitness {
    pub vertices: Vec<Vertex>,
}

impl CliqueWitness {
    pub fn is_clique_in(&self, h: &Hypergraph3) -> bool {
        let s = &self.vertices;
        if s.iter().any(|&v| v == 0 || v > h.order()) {
            return false;
        }
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| (j + 1..s.len()).all(|k| h.has_edge(s[i], s[j], s[k]))))
    }
}

/// Solver settings shared by all searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Solver { budget }
    }
}

impl Solver {
    pub fn with_budget(budget: u64) -> Self {
        Solver { budget }
    }

    /// A proper coloring with colors `1..=k`, or `None` if there is none.
    ///
    /// Vertices are colored in order `1..=n`, colors tried ascending, vertex
    /// `i` never opens more than one new color; the first coloring found is
    /// therefore the lexicographically smallest.
    pub fn k_colorable(&self, h: &Hypergraph3, k: usize) -> Result<Option<Coloring>> {
        coloring::k_colorable(h, k, self.budget)
    }

    /// Smallest `k` admitting a proper coloring, searching upward from 1.
    pub fn chi(&self, h: &Hypergraph3) -> Result<(usize, Coloring)> {
        if h.order() == 0 {
            return Ok((0, Coloring::default()));
        }
        for k in 1.. {
            if let Some(c) = self.k_colorable(h, k)? {
                return Ok((k, c));
            }
        }
        unreachable!("n colors always suffice")
    }

    /// Largest vertex set whose triples are all edges. Sets of at most two
    /// vertices qualify vacuously, so the answer is at least `min(n, 2)`.
    pub fn omega(&self, h: &Hypergraph3) -> Result<(usize, CliqueWitness)> {
        clique::max_clique(h, self.budget)
    }

    pub fn check_eq1(&self, h: &Hypergraph3) -> Result<Eq1Check> {
        let (omega, _) = self.omega(h)?;
        let (chi, _) = self.chi(h)?;
        Ok(Eq1Check { omega, chi })
    }
}

/// Values of the bound `⌈ω/2⌉ ≤ χ` on one hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq1Check {
    pub omega: usize,
    pub chi: usize,
}

impl Eq1Check {
    pub fn holds(&self) -> bool {
        self.omega.div_ceil(2) <= self.chi
    }
}

pub fn is_k_colorable(h: &Hypergraph3, k: usize) -> Result<Option<Coloring>> {
    Solver::default().k_colorable(h, k)
}

pub fn chi(h: &Hypergraph3) -> Result<(usize, Coloring)> {
    Solver::default().chi(h)
}

pub fn omega(h: &Hypergraph3) -> Result<(usize, CliqueWitness)> {
    Solver::default().omega(h)
}

pub fn check_eq1(h: &Hypergraph3) -> Result<Eq1Check> {
    Solver::default().check_eq1(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, mycielski, winding_hypergraph};

    fn example_one() -> Hypergraph3 {
        Hypergraph3::from_triples(5, &[[1, 2, 3], [1, 3, 4], [1, 3, 5]]).unwrap()
    }

    #[test]
    fn complete_chi_is_half() {
        for n in 3..=9 {
            assert_eq!(chi(&complete(n)).unwrap().0, n.div_ceil(2), "n={n}");
        }
        assert!(is_k_colorable(&complete(5), 2).unwrap().is_none());
        assert!(is_k_colorable(&complete(5), 3).unwrap().is_some());
    }

    #[test]
    fn edgeless_is_one_colorable() {
        let c = is_k_colorable(&Hypergraph3::new(4), 1).unwrap().unwrap();
        assert_eq!(c.colors(), &[1, 1, 1, 1]);
        assert_eq!(chi(&Hypergraph3::new(0)).unwrap().0, 0);
    }

    #[test]
    fn winding_colorability() {
        let w = winding_hypergraph(4, 2).unwrap().underlying();
        assert!(is_k_colorable(&w, 2).unwrap().is_none());
        assert!(is_k_colorable(&w, 3).unwrap().is_some());
        assert_eq!(chi(&winding_hypergraph(5, 3).unwrap().underlying()).unwrap().0, 4);
    }

    #[test]
    fn example_one_values() {
        let (c, col) = chi(&example_one()).unwrap();
        assert_eq!(c, 2);
        assert!(col.is_proper_for(&example_one()));
        let (w, s) = omega(&example_one()).unwrap();
        assert_eq!(w, 3);
        assert!(s.is_clique_in(&example_one()));
    }

    #[test]
    fn omega_conventions() {
        assert_eq!(omega(&Hypergraph3::new(0)).unwrap().0, 0);
        assert_eq!(omega(&Hypergraph3::new(1)).unwrap().0, 1);
        assert_eq!(omega(&Hypergraph3::new(5)).unwrap().0, 2);
        assert_eq!(omega(&complete(7)).unwrap().0, 7);
    }

    #[test]
    fn winding_clique_witness() {
        let w = winding_hypergraph(4, 2).unwrap().underlying();
        let (size, witness) = omega(&w).unwrap();
        assert_eq!(size, 4);
        assert!(witness.is_clique_in(&w));
        assert!(CliqueWitness {
            vertices: vec![1, 5, 6, 7]
        }
        .is_clique_in(&w));
    }

    #[test]
    fn eq1_examples() {
        let c6 = check_eq1(&complete(6)).unwrap();
        assert_eq!((c6.omega, c6.chi), (6, 3));
        let null = check_eq1(&Hypergraph3::new(5)).unwrap();
        assert_eq!((null.omega, null.chi), (2, 1));
        let mu = check_eq1(&mycielski(&complete(4)).hypergraph).unwrap();
        assert_eq!((mu.omega, mu.chi), (4, 3));
        assert!(c6.holds() && null.holds() && mu.holds());
    }

    #[test]
    fn budget_is_reported() {
        let solver = Solver::with_budget(5);
        assert_eq!(solver.chi(&complete(9)), Err(Error::BudgetExceeded(5)));
    }

    #[test]
    fn witnesses_are_deterministic() {
        let w = winding_hypergraph(5, 3).unwrap().underlying();
        assert_eq!(chi(&w).unwrap(), chi(&w).unwrap());
        assert_eq!(omega(&w).unwrap(), omega(&w).unwrap());
    }
}
