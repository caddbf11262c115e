use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercore::{CyclicTriple, Hypergraph3, OrientedHypergraph3, Triple};

/// Coordinates of randomly generated endpoints are multiples of this.
pub const RANDOM_GRID: i64 = 1_000_000;

/// A closed arc of the unit circle `[0, 1)`, running clockwise (increasing
/// coordinate, mod 1) from `start` to `end`.
///
/// `end < start` wraps through 0; `start == end` is a single point unless
/// the arc is the full circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    start: Rational64,
    end: Rational64,
    full: bool,
}

fn in_unit(x: Rational64) -> bool {
    x >= Rational64::from_integer(0) && x < Rational64::from_integer(1)
}

impl Arc {
    pub fn new(start: Rational64, end: Rational64) -> Result<Self> {
        if !in_unit(start) || !in_unit(end) {
            return Err(Error::InvalidParameter(format!(
                "arc endpoints {start} and {end} must lie in [0, 1)"
            )));
        }
        Ok(Arc {
            start,
            end,
            full: false,
        })
    }

    /// Arc from `a/d` to `b/d`.
    pub fn from_ratio(a: i64, b: i64, d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::InvalidParameter(format!("bad denominator {d}")));
        }
        Arc::new(Rational64::new(a, d), Rational64::new(b, d))
    }

    pub fn full() -> Self {
        Arc {
            start: Rational64::from_integer(0),
            end: Rational64::from_integer(0),
            full: true,
        }
    }

    pub fn point(p: Rational64) -> Result<Self> {
        Arc::new(p, p)
    }

    pub fn start(&self) -> Rational64 {
        self.start
    }

    pub fn end(&self) -> Rational64 {
        self.end
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn wraps(&self) -> bool {
        !self.full && self.end < self.start
    }

    /// Clockwise length; 1 for the full circle.
    pub fn length(&self) -> Rational64 {
        if self.full {
            Rational64::from_integer(1)
        } else {
            clockwise_distance(self.start, self.end)
        }
    }

    pub fn contains(&self, p: Rational64) -> bool {
        if self.full {
            true
        } else if self.start <= self.end {
            self.start <= p && p <= self.end
        } else {
            p >= self.start || p <= self.end
        }
    }

    /// Closed-arc intersection; touching at an endpoint counts.
    pub fn intersects(&self, other: &Arc) -> bool {
        if self.full || other.full {
            return true;
        }
        self.contains(other.start) || self.contains(other.end) || other.contains(self.start) || other.contains(self.end)
    }

    /// Is `other` a subset of `self`?
    pub fn contains_arc(&self, other: &Arc) -> bool {
        if self.full {
            return true;
        }
        if other.full {
            return false;
        }
        self.contains(other.start)
            && self.contains(other.end)
            && clockwise_distance(self.start, other.start) <= clockwise_distance(self.start, other.end)
    }
}

/// Distance travelled clockwise from `from` to `to`, in `[0, 1)`.
pub fn clockwise_distance(from: Rational64, to: Rational64) -> Rational64 {
    let d = to - from;
    if d < Rational64::from_integer(0) {
        d + 1
    } else {
        d
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.full {
            f.write_str("FULL")
        } else {
            write!(
                f,
                "{}/{} {}/{}",
                self.start.numer(),
                self.start.denom(),
                self.end.numer(),
                self.end.denom()
            )
        }
    }
}

/// A finite family of arcs; arc `i` (1-based) is vertex `i` of its hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ArcFamily {
    arcs: Vec<Arc>,
}

impl ArcFamily {
    pub fn new(arcs: Vec<Arc>) -> Self {
        ArcFamily { arcs }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Arc number `i`, 1-based.
    pub fn get(&self, i: usize) -> &Arc {
        &self.arcs[i - 1]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Arc)> {
        self.arcs.iter().enumerate().map(|(i, a)| (i + 1, a))
    }

    /// The family restricted to `indices` (1-based), in the given order.
    pub fn subfamily(&self, indices: &[usize]) -> ArcFamily {
        ArcFamily::new(indices.iter().map(|&i| *self.get(i)).collect())
    }
}

/// The circle-interval hypergraph: an edge for every three pairwise disjoint
/// arcs, oriented by the clockwise order of their start points.
pub fn from_arcs(family: &ArcFamily) -> (Hypergraph3, OrientedHypergraph3) {
    let n = family.len();
    let meets: Vec<Vec<bool>> = (1..=n)
        .map(|i| (1..=n).map(|j| family.get(i).intersects(family.get(j))).collect())
        .collect();
    let mut edges = BTreeSet::new();
    let mut oriented = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if meets[i - 1][j - 1] {
                continue;
            }
            for k in j + 1..=n {
                if meets[i - 1][k - 1] || meets[j - 1][k - 1] {
                    continue;
                }
                let t = Triple::new(i, j, k).expect("ascending");
                let mut by_start = [i, j, k];
                by_start.sort_by_key(|&v| family.get(v).start());
                let [x, y, z] = by_start;
                let c = CyclicTriple::new(x, y, z).expect("distinct");
                edges.insert(t);
                oriented.insert(t, c.sense());
            }
        }
    }
    (
        Hypergraph3::from_set_unchecked(n, edges),
        OrientedHypergraph3::from_map_unchecked(n, oriented),
    )
}

/// `n` arcs with uniform start and uniform length in `[min_len, max_len]`,
/// both snapped to multiples of [`RANDOM_GRID`]. Deterministic in `seed`.
pub fn random_arcs(n: usize, seed: u64, min_len: f64, max_len: f64) -> Result<ArcFamily> {
    if !(0.0..1.0).contains(&min_len) || !(min_len..1.0).contains(&max_len) {
        return Err(Error::InvalidParameter(format!(
            "arc lengths need 0 <= min_len <= max_len < 1, got [{min_len}, {max_len}]"
        )));
    }
    let grid = RANDOM_GRID as f64;
    let lo = (min_len * grid).ceil() as i64;
    let hi = (max_len * grid).floor() as i64;
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "no grid length in [{min_len}, {max_len}]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..n)
        .map(|_| {
            let start = rng.gen_range(0..RANDOM_GRID);
            let len = rng.gen_range(lo..=hi);
            Arc::from_ratio(start, (start + len) % RANDOM_GRID, RANDOM_GRID).expect("in range")
        })
        .collect();
    Ok(ArcFamily::new(arcs))
}
