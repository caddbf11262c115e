use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::hypercore::hypergraph::check_range;
use crate::hypercore::{CyclicTriple, Hypergraph3, Sense, Triple, Vertex};

/// How much of the transitivity rule is enforced.
///
/// For oriented edges `(u v z)` and `(z v w)`, `Literal` demands `(u v w)`;
/// `Strict` also demands `(u w z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TransitivityMode {
    Literal,
    #[default]
    Strict,
}

/// A pair of oriented edges matching `(u v z), (z v w)` whose consequent
/// `missing` is not in the orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitivityViolation {
    /// Written as the rotation `(u v z)`.
    pub first: [Vertex; 3],
    /// Written as the rotation `(z v w)`.
    pub second: [Vertex; 3],
    /// The required reading that is absent or oriented the other way.
    pub missing: [Vertex; 3],
}

impl fmt::Display for TransitivityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v, z] = self.first;
        let [_, _, w] = self.second;
        let [x, y, t] = self.missing;
        write!(f, "({u} {v} {z}) and ({z} {v} {w}) require ({x} {y} {t})")
    }
}

/// A 3-hypergraph with one cyclic ordering chosen for every edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrientedHypergraph3 {
    n: usize,
    edges: BTreeMap<Triple, Sense>,
}

impl OrientedHypergraph3 {
    pub fn new(n: usize) -> Self {
        OrientedHypergraph3 {
            n,
            edges: BTreeMap::new(),
        }
    }

    /// Rejects a triple given twice, whatever the senses.
    pub fn from_cyclic<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = CyclicTriple>,
    {
        let mut oh = OrientedHypergraph3::new(n);
        for e in edges {
            let t = e.triple();
            check_range(&t, n)?;
            if oh.edges.insert(t, e.sense()).is_some() {
                let [a, b, c] = t.vertices();
                return Err(Error::DuplicateEdge(a, b, c));
            }
        }
        Ok(oh)
    }

    /// Convenience constructor from cyclic readings.
    pub fn from_readings(n: usize, readings: &[[Vertex; 3]]) -> Result<Self> {
        let edges = readings
            .iter()
            .map(|&[x, y, z]| CyclicTriple::new(x, y, z))
            .collect::<Result<Vec<_>>>()?;
        Self::from_cyclic(n, edges)
    }

    pub(crate) fn from_map_unchecked(n: usize, edges: BTreeMap<Triple, Sense>) -> Self {
        OrientedHypergraph3 { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn oriented_edges(&self) -> impl Iterator<Item = CyclicTriple> + '_ {
        self.edges.iter().map(|(&t, &s)| CyclicTriple::from_parts(t, s))
    }

    pub fn sense_of(&self, t: &Triple) -> Option<Sense> {
        self.edges.get(t).copied()
    }

    /// True iff `(x y z)` (up to rotation) is one of the oriented edges.
    pub fn contains_reading(&self, x: Vertex, y: Vertex, z: Vertex) -> bool {
        CyclicTriple::new(x, y, z).is_ok_and(|c| self.edges.get(&c.triple()) == Some(&c.sense()))
    }

    pub fn underlying(&self) -> Hypergraph3 {
        Hypergraph3::from_set_unchecked(self.n, self.edges.keys().copied().collect())
    }

    /// The orientation with every edge reversed.
    pub fn reversed(&self) -> Self {
        OrientedHypergraph3 {
            n: self.n,
            edges: self.edges.iter().map(|(&t, &s)| (t, s.flip())).collect(),
        }
    }

    /// The first pair of oriented edges breaking the transitivity rule.
    ///
    /// Pairs are visited in edge order, then by the arc `v -> z` of the first
    /// edge in reading order, then by the third vertex `w` of the second edge.
    pub fn transitivity_violation(&self, mode: TransitivityMode) -> Option<TransitivityViolation> {
        let mut thirds: HashMap<(Vertex, Vertex), Vec<Vertex>> = HashMap::new();
        for t in self.edges.keys() {
            let [a, b, c] = t.vertices();
            thirds.entry((a, b)).or_default().push(c);
            thirds.entry((a, c)).or_default().push(b);
            thirds.entry((b, c)).or_default().push(a);
        }
        for e in self.oriented_edges() {
            for [u, v, z] in e.rotations() {
                let Some(ws) = thirds.get(&(v.min(z), v.max(z))) else {
                    continue;
                };
                for &w in ws {
                    if w == u || !self.contains_reading(z, v, w) {
                        continue;
                    }
                    let first = [u, v, z];
                    let second = [z, v, w];
                    if !self.contains_reading(u, v, w) {
                        return Some(TransitivityViolation {
                            first,
                            second,
                            missing: [u, v, w],
                        });
                    }
                    if mode == TransitivityMode::Strict && !self.contains_reading(u, w, z) {
                        return Some(TransitivityViolation {
                            first,
                            second,
                            missing: [u, w, z],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self, mode: TransitivityMode) -> bool {
        self.transitivity_violation(mode).is_none()
    }

    pub(crate) fn require_transitive(&self) -> Result<()> {
        match self.transitivity_violation(TransitivityMode::Strict) {
            Some(v) => Err(Error::NotTransitive(v)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for OrientedHypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O(n={}; ", self.n)?;
        for (i, e) in self.oriented_edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TransitivityMode::*;

    #[test]
    fn example_one_orientation_is_not_transitive() {
        let o = OrientedHypergraph3::from_readings(5, &[[1, 2, 3], [1, 4, 3], [1, 3, 5]]).unwrap();
        for mode in [Literal, Strict] {
            let v = o.transitivity_violation(mode).expect("violation");
            assert!(!o.contains_reading(v.missing[0], v.missing[1], v.missing[2]));
        }
        // (2 3 1) and (1 3 5) demand (2 3 5), which is absent.
        let v = o.transitivity_violation(Literal).unwrap();
        assert_eq!(v.first, [2, 3, 1]);
        assert_eq!(v.second, [1, 3, 5]);
        assert_eq!(v.missing, [2, 3, 5]);
    }

    #[test]
    fn alternative_orientation_is_transitive() {
        let o = OrientedHypergraph3::from_readings(5, &[[1, 3, 2], [1, 3, 4], [1, 3, 5]]).unwrap();
        assert!(o.is_transitive(Literal));
        assert!(o.is_transitive(Strict));
    }

    #[test]
    fn duplicate_triple_with_other_sense_rejected() {
        let r = OrientedHypergraph3::from_readings(3, &[[1, 2, 3], [1, 3, 2]]);
        assert_eq!(r, Err(Error::DuplicateEdge(1, 2, 3)));
    }

    #[test]
    fn contains_reading_up_to_rotation() {
        let o = OrientedHypergraph3::from_readings(4, &[[2, 4, 1]]).unwrap();
        assert!(o.contains_reading(1, 2, 4));
        assert!(o.contains_reading(4, 1, 2));
        assert!(!o.contains_reading(1, 4, 2));
        assert!(!o.contains_reading(1, 1, 2));
        assert_eq!(o.underlying().edge_count(), 1);
    }
}
