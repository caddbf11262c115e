//! Search for a transitive orientation.
//!
//! Each edge is a boolean variable (its sense). Two edges sharing a pair
//! `{v, z}` and traversing it in opposite directions form a pattern
//! `(u v z), (z v w)`; for that combination of senses the consequent
//! triples must exist and carry the forced sense. These implications are
//! clauses over edge literals, propagated to fixpoint after every decision.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hypercore::{CyclicTriple, Hypergraph3, OrientedHypergraph3, Sense, TransitivityMode, Triple, Vertex};

/// A transitive orientation of the query hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationCertificate {
    pub orientation: OrientedHypergraph3,
    pub mode: TransitivityMode,
}

impl OrientationCertificate {
    /// Re-checks the certificate against `h` from scratch.
    pub fn verify(&self, h: &Hypergraph3) -> bool {
        self.orientation.underlying() == *h && self.orientation.is_transitive(self.mode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lit {
    var: usize,
    sense: Sense,
}

/// Search statistics, exposed for the CLI and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub clauses: usize,
    pub decisions: u64,
    pub conflicts: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recognizer {
    pub mode: TransitivityMode,
    pub budget: u64,
}

impl Default for Recognizer {
    fn default() -> Self {
        Recognizer {
            mode: TransitivityMode::Strict,
            budget: crate::solvers::Solver::default().budget,
        }
    }
}

struct Search {
    clauses: Vec<Vec<Lit>>,
    occurs: Vec<Vec<usize>>,
    value: Vec<Option<Sense>>,
    trail: Vec<usize>,
    stats: SearchStats,
    budget: u64,
}

impl Recognizer {
    pub fn new(mode: TransitivityMode) -> Self {
        Recognizer {
            mode,
            ..Recognizer::default()
        }
    }

    pub fn with_budget(mode: TransitivityMode, budget: u64) -> Self {
        Recognizer { mode, budget }
    }

    /// A transitive orientation of `h`, or `None` when the exhaustive search
    /// proves there is none.
    pub fn find(&self, h: &Hypergraph3) -> Result<Option<OrientationCertificate>> {
        self.find_with_stats(h).map(|(c, _)| c)
    }

    pub fn find_with_stats(&self, h: &Hypergraph3) -> Result<(Option<OrientationCertificate>, SearchStats)> {
        let edges: Vec<Triple> = h.edges().collect();
        let index: HashMap<Triple, usize> = edges.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let clauses = build_clauses(&edges, &index, self.mode);
        let mut occurs = vec![Vec::new(); edges.len()];
        for (ci, clause) in clauses.iter().enumerate() {
            for lit in clause {
                occurs[lit.var].push(ci);
            }
        }
        let mut search = Search {
            stats: SearchStats {
                clauses: clauses.len(),
                ..SearchStats::default()
            },
            clauses,
            occurs,
            value: vec![None; edges.len()],
            trail: Vec::new(),
            budget: self.budget,
        };
        let found = search.solve(0)?;
        let stats = search.stats;
        if !found {
            return Ok((None, stats));
        }
        let map: BTreeMap<Triple, Sense> = edges
            .iter()
            .zip(&search.value)
            .map(|(&t, s)| (t, s.expect("complete assignment")))
            .collect();
        let cert = OrientationCertificate {
            orientation: OrientedHypergraph3::from_map_unchecked(h.order(), map),
            mode: self.mode,
        };
        debug_assert!(cert.verify(h));
        Ok((Some(cert), stats))
    }
}

/// Clauses forbidding every sense combination that breaks transitivity.
fn build_clauses(edges: &[Triple], index: &HashMap<Triple, usize>, mode: TransitivityMode) -> Vec<Vec<Lit>> {
    let mut by_pair: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, t) in edges.iter().enumerate() {
        let [a, b, c] = t.vertices();
        for pair in [(a, b), (a, c), (b, c)] {
            by_pair.entry(pair).or_default().push(i);
        }
    }
    let mut pairs: Vec<_> = by_pair.into_iter().collect();
    pairs.sort_unstable();

    let mut clauses = Vec::new();
    for ((x, y), sharing) in pairs {
        for &ei in &sharing {
            for &fi in &sharing {
                if ei == fi {
                    continue;
                }
                let u = edges[ei].third(x, y).expect("shares pair");
                let w = edges[fi].third(x, y).expect("shares pair");
                // e traverses v -> z, f traverses z -> v
                for (v, z) in [(x, y), (y, x)] {
                    let e = CyclicTriple::new(u, v, z).expect("distinct");
                    let f = CyclicTriple::new(z, v, w).expect("distinct");
                    let premise = [
                        Lit {
                            var: ei,
                            sense: e.sense().flip(),
                        },
                        Lit {
                            var: fi,
                            sense: f.sense().flip(),
                        },
                    ];
                    let mut consequents = vec![[u, v, w]];
                    if mode == TransitivityMode::Strict {
                        consequents.push([u, w, z]);
                    }
                    for [p, q, r] in consequents {
                        let g = CyclicTriple::new(p, q, r).expect("distinct");
                        let mut clause = premise.to_vec();
                        if let Some(&gi) = index.get(&g.triple()) {
                            clause.push(Lit {
                                var: gi,
                                sense: g.sense(),
                            });
                        }
                        clauses.push(clause);
                    }
                }
            }
        }
    }
    clauses
}

enum ClauseState {
    Satisfied,
    Conflict,
    Unit(Lit),
    Open,
}

impl Search {
    fn state(&self, ci: usize) -> ClauseState {
        let mut open = None;
        let mut open_count = 0;
        for &lit in &self.clauses[ci] {
            match self.value[lit.var] {
                Some(s) if s == lit.sense => return ClauseState::Satisfied,
                Some(_) => {}
                None => {
                    open_count += 1;
                    open = Some(lit);
                }
            }
        }
        match open_count {
            0 => ClauseState::Conflict,
            1 => ClauseState::Unit(open.expect("one open literal")),
            _ => ClauseState::Open,
        }
    }

    fn set(&mut self, lit: Lit) {
        self.value[lit.var] = Some(lit.sense);
        self.trail.push(lit.var);
    }

    /// Unit propagation from the trail suffix starting at `from`.
    fn propagate(&mut self, mut from: usize) -> bool {
        while from < self.trail.len() {
            let var = self.trail[from];
            from += 1;
            for i in 0..self.occurs[var].len() {
                let ci = self.occurs[var][i];
                match self.state(ci) {
                    ClauseState::Conflict => return false,
                    ClauseState::Unit(lit) => self.set(lit),
                    ClauseState::Satisfied | ClauseState::Open => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, to: usize) {
        for var in self.trail.drain(to..) {
            self.value[var] = None;
        }
    }

    fn solve(&mut self, start: usize) -> Result<bool> {
        let Some(var) = (start..self.value.len()).find(|&v| self.value[v].is_none()) else {
            return Ok(true);
        };
        for sense in [Sense::Clockwise, Sense::Counter] {
            self.stats.decisions += 1;
            if self.stats.decisions > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mark = self.trail.len();
            self.set(Lit { var, sense });
            if self.propagate(mark) && self.solve(var + 1)? {
                return Ok(true);
            }
            self.stats.conflicts += 1;
            self.undo(mark);
        }
        Ok(false)
    }
}

pub fn find_transitive_orientation(h: &Hypergraph3, mode: TransitivityMode) -> Result<Option<OrientationCertificate>> {
    Recognizer::new(mode).find(h)
}

/// Admits a transitive orientation (strict mode).
pub fn is_comparability(h: &Hypergraph3) -> Result<bool> {
    Ok(find_transitive_orientation(h, TransitivityMode::Strict)?.is_some())
}

/// Both the hypergraph and its complement are comparability hypergraphs,
/// which characterises cyclic-permutation hypergraphs.
pub fn is_cyclic_permutation_hypergraph(h: &Hypergraph3) -> Result<bool> {
    Ok(is_comparability(h)? && is_comparability(&h.complement())?)
}
