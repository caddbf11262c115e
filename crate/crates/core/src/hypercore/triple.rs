use std::fmt;

use crate::error::{Error, Result};

/// Vertices are dense 1-based indices into the owning hypergraph.
pub type Vertex = usize;

/// An unordered set of three distinct vertices, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: Vertex,
    b: Vertex,
    c: Vertex,
}

impl Triple {
    pub fn new(x: Vertex, y: Vertex, z: Vertex) -> Result<Self> {
        if x == y || y == z || x == z {
            return Err(Error::InvalidTriple(x, y, z));
        }
        let mut v = [x, y, z];
        v.sort_unstable();
        Ok(Triple {
            a: v[0],
            b: v[1],
            c: v[2],
        })
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        [self.a, self.b, self.c]
    }

    pub fn min(&self) -> Vertex {
        self.a
    }

    pub fn max(&self) -> Vertex {
        self.c
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.a == v || self.b == v || self.c == v
    }

    /// The vertex completing `{x, y}` to this triple, if both belong to it.
    pub fn third(&self, x: Vertex, y: Vertex) -> Option<Vertex> {
        if x == y || !self.contains(x) || !self.contains(y) {
            return None;
        }
        self.vertices().into_iter().find(|&v| v != x && v != y)
    }

    /// The two vertices other than `v`, ascending.
    pub fn others(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        match v {
            _ if v == self.a => Some((self.b, self.c)),
            _ if v == self.b => Some((self.a, self.c)),
            _ if v == self.c => Some((self.a, self.b)),
            _ => None,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.a, self.b, self.c)
    }
}

/// Which of the two cyclic orderings of a triple `{a < b < c}` is meant.
///
/// `Clockwise` is the class of `(a b c)`, `Counter` the class of `(a c b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Sense {
    #[default]
    Clockwise,
    Counter,
}

impl Sense {
    pub fn flip(self) -> Self {
        match self {
            Sense::Clockwise => Sense::Counter,
            Sense::Counter => Sense::Clockwise,
        }
    }
}

/// A triple together with one of its two cyclic orderings.
///
/// Rotations of a reading compare equal, so `(2 3 1)` and `(1 2 3)` are the
/// same value while `(1 3 2)` is the other class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicTriple {
    triple: Triple,
    sense: Sense,
}

impl CyclicTriple {
    /// Canonicalizes the cyclic reading `(x y z)`.
    pub fn new(x: Vertex, y: Vertex, z: Vertex) -> Result<Self> {
        let triple = Triple::new(x, y, z)?;
        // (x y z) is a rotation of the sorted reading iff it is an even
        // permutation of it, i.e. it has an even number of inversions.
        let inversions = (x > y) as u8 + (x > z) as u8 + (y > z) as u8;
        let sense = if inversions.is_multiple_of(2) {
            Sense::Clockwise
        } else {
            Sense::Counter
        };
        Ok(CyclicTriple { triple, sense })
    }

    pub fn from_parts(triple: Triple, sense: Sense) -> Self {
        CyclicTriple { triple, sense }
    }

    pub fn triple(&self) -> Triple {
        self.triple
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn reversed(&self) -> Self {
        CyclicTriple {
            triple: self.triple,
            sense: self.sense.flip(),
        }
    }

    /// The rotation of the reading that starts at the smallest vertex.
    pub fn reading(&self) -> [Vertex; 3] {
        let [a, b, c] = self.triple.vertices();
        match self.sense {
            Sense::Clockwise => [a, b, c],
            Sense::Counter => [a, c, b],
        }
    }

    pub fn rotations(&self) -> [[Vertex; 3]; 3] {
        let [x, y, z] = self.reading();
        [[x, y, z], [y, z, x], [z, x, y]]
    }

    /// The vertex that follows `v` in the cyclic reading.
    pub fn successor(&self, v: Vertex) -> Option<Vertex> {
        let r = self.reading();
        let i = r.iter().position(|&x| x == v)?;
        Some(r[(i + 1) % 3])
    }

    /// True when `y` immediately follows `x` in the cyclic reading.
    pub fn has_arc(&self, x: Vertex, y: Vertex) -> bool {
        self.successor(x) == Some(y)
    }
}

impl fmt::Display for CyclicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.reading();
        write!(f, "({x} {y} {z})")
    }
}

/// Canonical form of the cyclic reading `(x y z)`.
pub fn canonical_cyclic(x: Vertex, y: Vertex, z: Vertex) -> Result<CyclicTriple> {
    CyclicTriple::new(x, y, z)
}
