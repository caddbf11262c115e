use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypercore::{all_triples, OrientedHypergraph3, Sense};

/// A cyclic ordering of `{1, ..., n}`, read clockwise left to right.
///
/// Stored in the rotation that puts `1` last, so `(1 2 3)` is kept as
/// `(2 3 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPermutation {
    values: Vec<usize>,
    /// `position[v]` is the 1-based position of value `v` in `values`.
    position: Vec<usize>,
}

impl CyclicPermutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut position = vec![0; n + 1];
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > n || position[v] != 0 {
                return Err(Error::InvalidPermutation(n));
            }
            position[v] = i + 1;
        }
        let mut values = values;
        if n > 0 {
            let one = position[1];
            values.rotate_left(one % n);
            for (i, &v) in values.iter().enumerate() {
                position[v] = i + 1;
            }
        }
        Ok(CyclicPermutation { values, position })
    }

    /// `(1 2 ... n)`.
    pub fn identity(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("identity")
    }

    /// `(n ... 2 1)`.
    pub fn reversed_identity(n: usize) -> Self {
        Self::new((1..=n).rev().collect()).expect("reversed identity")
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Values in the canonical rotation (ending with 1).
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The value at 1-based position `i` of the canonical rotation.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The 1-based position of `value` in the canonical rotation.
    pub fn position(&self, value: usize) -> usize {
        self.position[value]
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.values.iter().rev().copied().collect()).expect("reversal")
    }

    /// Are the distinct values `x, y, z` met in this order going clockwise?
    pub fn is_clockwise(&self, x: usize, y: usize, z: usize) -> bool {
        let (px, py, pz) = (self.position[x], self.position[y], self.position[z]);
        (px < py && py < pz) || (py < pz && pz < px) || (pz < px && px < py)
    }

    /// All `(n - 1)!` cyclic permutations of order `n`, in lexicographic
    /// order of their canonical rotation.
    pub fn all(n: usize) -> Vec<CyclicPermutation> {
        if n == 0 {
            return vec![CyclicPermutation::new(Vec::new()).expect("empty")];
        }
        let mut out = Vec::new();
        let mut rest: Vec<usize> = (2..=n).collect();
        permute(&mut rest, 0, &mut |p| {
            let mut values = p.to_vec();
            values.push(1);
            out.push(CyclicPermutation::new(values).expect("permutation"));
        });
        out.sort();
        out
    }
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for CyclicPermutation {
    type Err = Error;

    /// Accepts `"5 2 6 3 7 4 1"` or `"(5 2 6 3 7 4 1)"`, commas allowed.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CyclicPermutation::new(values)
    }
}

/// The oriented hypergraph of a cyclic permutation: `{i < j < k}` is an edge
/// oriented `(i j k)` exactly when `i, j, k` appear clockwise.
pub fn from_cyclic_permutation(p: &CyclicPermutation) -> OrientedHypergraph3 {
    let n = p.order();
    let edges: BTreeMap<_, _> = all_triples(n)
        .filter(|t| {
            let [i, j, k] = t.vertices();
            p.is_clockwise(i, j, k)
        })
        .map(|t| (t, Sense::Clockwise))
        .collect();
    OrientedHypergraph3::from_map_unchecked(n, edges)
}

/// The winding permutation on `n = r(q - 1) + 1` points.
///
/// Position `n` holds 1; a position `i ≡ j (mod r)` with `1 ≤ j ≤ r` holds
/// `2 + (q - 1)(r - j) + (i - j) / r`.
pub fn winding_permutation(q: usize, r: usize) -> Result<CyclicPermutation> {
    if q < 2 || r < 1 {
        return Err(Error::InvalidParameter(format!(
            "winding permutation needs q >= 2 and r >= 1, got q={q}, r={r}"
        )));
    }
    let n = r * (q - 1) + 1;
    let values = (1..=n)
        .map(|i| {
            if i == n {
                1
            } else {
                let j = (i - 1) % r + 1;
                2 + (q - 1) * (r - j) + (i - j) / r
            }
        })
        .collect();
    CyclicPermutation::new(values)
}

/// `W_{q,r}` with its permutation-induced orientation.
pub fn winding_hypergraph(q: usize, r: usize) -> Result<OrientedHypergraph3> {
    Ok(from_cyclic_permutation(&winding_permutation(q, r)?))
}
