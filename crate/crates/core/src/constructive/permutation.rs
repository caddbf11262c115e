use std::fmt;

use crate::error::{Error, Result};
use crate::generators::{winding_permutation, CyclicPermutation};

/// The cyclic sub-permutation induced by a set of values: the values in the
/// order they are met going clockwise around the host, starting from the
/// host's first position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubPermutation {
    reading: Vec<usize>,
}

impl SubPermutation {
    pub fn from_values(p: &CyclicPermutation, values: &[usize]) -> Result<Self> {
        let n = p.order();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "{v} is not a fresh value of a permutation of order {n}"
                )));
            }
            seen[v] = true;
        }
        let mut reading = values.to_vec();
        reading.sort_by_key(|&v| p.position(v));
        Ok(SubPermutation { reading })
    }

    /// The values at the given 1-based positions, in position order.
    pub fn from_positions(p: &CyclicPermutation, positions: &[usize]) -> Result<Self> {
        if let Some(&bad) = positions.iter().find(|&&i| i == 0 || i > p.order()) {
            return Err(Error::InvalidParameter(format!(
                "position {bad} outside 1..={}",
                p.order()
            )));
        }
        let values: Vec<usize> = positions.iter().map(|&i| p.at(i)).collect();
        Self::from_values(p, &values)
    }

    pub fn reading(&self) -> &[usize] {
        &self.reading
    }

    pub fn len(&self) -> usize {
        self.reading.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reading.is_empty()
    }

    /// The underlying value set, ascending.
    pub fn elements(&self) -> Vec<usize> {
        let mut e = self.reading.clone();
        e.sort_unstable();
        e
    }

    pub fn is_increasing(&self) -> bool {
        cyclic_changes(&self.reading, |a, b| a > b) <= 1
    }

    pub fn is_decreasing(&self) -> bool {
        cyclic_changes(&self.reading, |a, b| a < b) <= 1
    }
}

impl fmt::Display for SubPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.reading.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Number of cyclically consecutive pairs `(a, b)` with `step(a, b)`.
fn cyclic_changes(reading: &[usize], step: impl Fn(usize, usize) -> bool) -> usize {
    let m = reading.len();
    if m < 2 {
        return 0;
    }
    (0..m).filter(|&i| step(reading[i], reading[(i + 1) % m])).count()
}

/// Does some rotation of the reading induced by `values` increase?
/// The empty set counts as increasing.
pub fn is_clockwise_increasing(p: &CyclicPermutation, values: &[usize]) -> Result<bool> {
    Ok(SubPermutation::from_values(p, values)?.is_increasing())
}

/// Does some rotation of the reading induced by `values` decrease?
pub fn is_clockwise_decreasing(p: &CyclicPermutation, values: &[usize]) -> Result<bool> {
    Ok(SubPermutation::from_values(p, values)?.is_decreasing())
}

/// A longest clockwise increasing sub-permutation.
///
/// Its smallest element `s` starts the increasing rotation, so the rest is
/// an increasing subsequence of the elements above `s` read clockwise from
/// `s`. Trying every `s` gives an `O(n² log n)` algorithm.
pub fn circular_lis(p: &CyclicPermutation) -> (usize, SubPermutation) {
    let n = p.order();
    let mut best: Vec<usize> = Vec::new();
    for s in 1..=n {
        let start = p.position(s);
        let line: Vec<usize> = (1..n)
            .map(|k| p.at((start - 1 + k) % n + 1))
            .filter(|&v| v > s)
            .collect();
        let mut run = vec![s];
        run.extend(longest_increasing(&line));
        if run.len() > best.len() {
            best = run;
        }
    }
    let witness = SubPermutation::from_values(p, &best).expect("distinct values");
    (best.len(), witness)
}

/// Patience-sorting LIS with reconstruction.
fn longest_increasing(seq: &[usize]) -> Vec<usize> {
    // tails[k]: index into seq of the smallest tail of an increasing run of length k+1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for (i, &x) in seq.iter().enumerate() {
        let k = tails.partition_point(|&t| seq[t] < x);
        if k > 0 {
            prev[i] = tails[k - 1];
        }
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(seq[i]);
        cur = (prev[i] != usize::MAX).then_some(prev[i]);
    }
    out.reverse();
    out
}

/// A partition of the values of a cyclic permutation into clockwise
/// decreasing sub-permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecreasingCover {
    parts: Vec<SubPermutation>,
}

impl DecreasingCover {
    /// Checks that `parts` partition `1..=n` and each part decreases.
    pub fn new(p: &CyclicPermutation, parts: Vec<SubPermutation>) -> Result<Self> {
        let n = p.order();
        let mut seen = vec![false; n + 1];
        for part in &parts {
            if !part.is_decreasing() {
                return Err(Error::InvalidParameter(format!("{part} is not clockwise decreasing")));
            }
            for &v in part.reading() {
                if v > n || seen[v] {
                    return Err(Error::InvalidParameter(format!(
                        "value {v} covered twice or out of range"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::InvalidParameter(format!("value {v} is not covered")));
        }
        Ok(DecreasingCover { parts })
    }

    pub fn parts(&self) -> &[SubPermutation] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for DecreasingCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// A part under construction, scanned in position order. A linear run is
/// cyclically decreasing iff it has at most one ascent, and after an ascent
/// every later value stays above the first one.
#[derive(Clone, Copy)]
struct Part {
    first: usize,
    last: usize,
    ascended: bool,
}

impl Part {
    fn accepts(&self, x: usize) -> Option<Part> {
        let next = |ascended| Part {
            first: self.first,
            last: x,
            ascended,
        };
        if x < self.last {
            (!self.ascended || x > self.first).then(|| next(self.ascended))
        } else {
            (!self.ascended && x > self.first).then(|| next(true))
        }
    }
}

struct CoverSearch<'a> {
    p: &'a CyclicPermutation,
    k: usize,
    parts: Vec<Part>,
    assignment: Vec<usize>,
}

impl CoverSearch<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos > self.p.order() {
            return true;
        }
        let x = self.p.at(pos);
        for i in 0..self.parts.len() {
            let saved = self.parts[i];
            if let Some(next) = saved.accepts(x) {
                self.parts[i] = next;
                self.assignment[pos] = i;
                if self.run(pos + 1) {
                    return true;
                }
                self.parts[i] = saved;
            }
        }
        if self.parts.len() < self.k {
            self.parts.push(Part {
                first: x,
                last: x,
                ascended: false,
            });
            self.assignment[pos] = self.parts.len() - 1;
            if self.run(pos + 1) {
                return true;
            }
            self.parts.pop();
        }
        false
    }
}

/// A cover by the fewest clockwise decreasing sub-permutations, found by
/// exhaustive search over increasing part counts. Exponential; meant for
/// small orders.
pub fn min_decreasing_cover(p: &CyclicPermutation) -> DecreasingCover {
    let n = p.order();
    for k in 0..=n {
        let mut search = CoverSearch {
            p,
            k,
            parts: Vec::new(),
            assignment: vec![0; n + 1],
        };
        if search.run(1) {
            let mut positions = vec![Vec::new(); search.parts.len()];
            for pos in 1..=n {
                positions[search.assignment[pos]].push(pos);
            }
            let parts = positions
                .iter()
                .map(|ps| SubPermutation::from_positions(p, ps).expect("valid positions"))
                .collect();
            return DecreasingCover::new(p, parts).expect("search keeps parts decreasing");
        }
    }
    unreachable!("singletons always cover")
}

/// The blocks of the winding permutation: `A_i` holds positions
/// `r(i-1)+1 ..= ir` for `i < q`, `B_i` the positions congruent to `i`
/// mod `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindingBlocks {
    pub a: Vec<SubPermutation>,
    pub b: Vec<SubPermutation>,
}

pub fn winding_blocks(q: usize, r: usize) -> Result<WindingBlocks> {
    let p = winding_permutation(q, r)?;
    let n = p.order();
    let a = (1..q)
        .map(|i| {
            let positions: Vec<usize> = (r * (i - 1) + 1..=r * i).collect();
            SubPermutation::from_positions(&p, &positions)
        })
        .collect::<Result<_>>()?;
    let b = (1..=r)
        .map(|i| {
            let positions: Vec<usize> = (1..=n).filter(|a| a % r == i % r).collect();
            SubPermutation::from_positions(&p, &positions)
        })
        .collect::<Result<_>>()?;
    Ok(WindingBlocks { a, b })
}

/// Consecutive runs of `r + 1` positions of the winding permutation; the
/// last run takes the remainder.
pub fn winding_cover(q: usize, r: usize) -> Result<DecreasingCover> {
    let p = winding_permutation(q, r)?;
    let n = p.order();
    let parts = (1..=n)
        .step_by(r + 1)
        .map(|lo| {
            let positions: Vec<usize> = (lo..=(lo + r).min(n)).collect();
            SubPermutation::from_positions(&p, &positions)
        })
        .collect::<Result<_>>()?;
    DecreasingCover::new(&p, parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi() -> CyclicPermutation {
        "5 2 6 3 7 4 1".parse().unwrap()
    }

    #[test]
    fn increasing_and_decreasing() {
        let p = phi();
        assert!(is_clockwise_increasing(&p, &[5, 6, 7, 1]).unwrap());
        assert!(!is_clockwise_increasing(&p, &[7, 4, 1]).unwrap());
        assert!(is_clockwise_decreasing(&p, &[7, 4, 1]).unwrap());
        assert!(is_clockwise_increasing(&p, &[]).unwrap());
        for x in 1..=7 {
            for y in 1..=7 {
                if x != y {
                    assert!(is_clockwise_increasing(&p, &[x, y]).unwrap());
                    assert!(is_clockwise_decreasing(&p, &[x, y]).unwrap());
                }
            }
        }
        assert!(is_clockwise_increasing(&p, &[1, 1]).is_err());
        assert!(is_clockwise_increasing(&p, &[8]).is_err());
    }

    #[test]
    fn lis_of_phi() {
        let (len, w) = circular_lis(&phi());
        assert_eq!(len, 4);
        assert!(w.is_increasing());
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn lis_trivial_cases() {
        assert_eq!(circular_lis(&CyclicPermutation::identity(6)).0, 6);
        assert_eq!(circular_lis(&CyclicPermutation::reversed_identity(6)).0, 2);
        assert_eq!(circular_lis(&CyclicPermutation::identity(1)).0, 1);
        assert_eq!(circular_lis(&CyclicPermutation::identity(0)).0, 0);
    }

    #[test]
    fn cover_of_phi() {
        let c = min_decreasing_cover(&phi());
        assert_eq!(c.len(), 3);
        assert_eq!(CyclicPermutation::reversed_identity(5).to_string(), "(5 4 3 2 1)");
        assert_eq!(min_decreasing_cover(&CyclicPermutation::reversed_identity(5)).len(), 1);
        assert_eq!(min_decreasing_cover(&CyclicPermutation::identity(0)).len(), 0);
    }

    #[test]
    fn displayed_cover_is_valid() {
        let p = phi();
        let parts = [&[5, 2][..], &[6, 3], &[7, 4, 1]]
            .iter()
            .map(|s| SubPermutation::from_values(&p, s).unwrap())
            .collect();
        let c = DecreasingCover::new(&p, parts).unwrap();
        assert_eq!(c.to_string(), "(5 2) (6 3) (7 4 1)");
    }

    #[test]
    fn cover_validation() {
        let p = phi();
        let one = |s: &[usize]| SubPermutation::from_values(&p, s).unwrap();
        assert!(DecreasingCover::new(&p, vec![one(&[5, 6, 7, 1]), one(&[2, 3, 4])]).is_err());
        assert!(DecreasingCover::new(&p, vec![one(&[5, 2])]).is_err());
    }

    #[test]
    fn blocks_of_w53() {
        let wb = winding_blocks(5, 3).unwrap();
        let a: Vec<String> = wb.a.iter().map(|s| s.to_string()).collect();
        let b: Vec<String> = wb.b.iter().map(|s| s.to_string()).collect();
        assert_eq!(a, ["(10 6 2)", "(11 7 3)", "(12 8 4)", "(13 9 5)"]);
        assert_eq!(b, ["(10 11 12 13 1)", "(6 7 8 9)", "(2 3 4 5)"]);
    }

    #[test]
    fn blocks_smallest_case() {
        let wb = winding_blocks(2, 1).unwrap();
        assert_eq!(wb.a.len(), 1);
        assert_eq!(wb.a[0].elements(), vec![2]);
        assert_eq!(wb.b[0].elements(), vec![1, 2]);
    }

    #[test]
    fn cover_of_w53() {
        let c = winding_cover(5, 3).unwrap();
        assert_eq!(c.to_string(), "(10 6 2 11) (7 3 12 8) (4 13 9 5) (1)");
        assert_eq!(winding_cover(4, 2).unwrap().len(), 3);
    }
}
