use num_rational::Rational64;

use crate::generators::{clockwise_distance, from_arcs, Arc, ArcFamily};
use crate::solvers::{Coloring, Solver};

/// An arc that avoids the cut point, as a closed interval of `[0, 1)`.
#[derive(Debug, Clone, Copy)]
struct Span {
    index: usize,
    lo: Rational64,
    hi: Rational64,
}

impl Span {
    fn contains(&self, x: Rational64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Re-coordinatises arcs avoiding `cut` so that `cut` becomes 0. Panics if
/// one of them contains `cut`.
fn linearize(family: &ArcFamily, indices: &[usize], cut: Rational64) -> Vec<Span> {
    indices
        .iter()
        .map(|&i| {
            let a = family.get(i);
            assert!(!a.contains(cut), "arc {i} contains the cut point");
            Span {
                index: i,
                lo: clockwise_distance(cut, a.start()),
                hi: clockwise_distance(cut, a.end()),
            }
        })
        .collect()
}

/// Earliest-end greedy: a maximum set of pairwise disjoint spans.
fn line_packing(spans: &[Span]) -> Vec<usize> {
    let mut order: Vec<&Span> = spans.iter().collect();
    order.sort_by_key(|s| (s.hi, s.index));
    let mut chosen = Vec::new();
    let mut reach: Option<Rational64> = None;
    for s in order {
        if reach.is_none_or(|r| s.lo > r) {
            chosen.push(s.index);
            reach = Some(s.hi);
        }
    }
    chosen
}

/// Latest-start greedy: a minimum set of points meeting every span, each a
/// left endpoint, ascending. Its size equals the packing number.
fn line_piercing(spans: &[Span]) -> Vec<Rational64> {
    let mut order: Vec<&Span> = spans.iter().collect();
    order.sort_by_key(|s| std::cmp::Reverse((s.lo, s.index)));
    let mut points: Vec<Rational64> = Vec::new();
    for s in order {
        if points.last().is_none_or(|&p| s.hi < p) {
            points.push(s.lo);
        }
    }
    points.reverse();
    points
}

fn meeting(family: &ArcFamily, pred: impl Fn(&Arc) -> bool) -> (Vec<usize>, Vec<usize>) {
    (1..=family.len()).partition(|&i| pred(family.get(i)))
}

/// A maximum set of pairwise disjoint arcs, as ascending 1-based indices.
///
/// For each arc `I`, the arcs missing `I` live on the line obtained by
/// cutting the circle at `I`, where the greedy is optimal.
pub fn max_disjoint_arcs(family: &ArcFamily) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for (i, arc) in family.iter() {
        if best.is_empty() {
            best = vec![i];
        }
        if arc.is_full() {
            continue;
        }
        let (_, rest) = meeting(family, |b| b.intersects(arc));
        let spans = linearize(family, &rest, arc.start());
        let mut chosen = line_packing(&spans);
        if chosen.len() + 1 > best.len() {
            chosen.push(i);
            best = chosen;
        }
    }
    best.sort_unstable();
    best
}

/// Which construction produced an interval coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColoringRoute {
    /// No three pairwise disjoint arcs: one class.
    Trivial,
    /// Odd packing number: the arcs meeting one minimal chosen arc, then
    /// pairs of piercing points on the rest.
    OddStab,
    /// Even packing number: the arcs meeting the closest consecutive pair of
    /// chosen arcs, then pairs of piercing points on the rest.
    ClosestPair,
    /// Even packing number: a piercing of the whole circle by at most `ω`
    /// points, taken in pairs.
    PointPairs,
    /// Even packing number: the arcs meeting some minimal arc of the family,
    /// then pairs of piercing points on the rest.
    MinimalArc,
    /// Even packing number: exact search for a `ω/2`-coloring.
    Exact,
    /// Even packing number with no `ω/2`-coloring (or the search ran out of
    /// budget): the odd construction, one class more than `ω/2`.
    Surplus,
}

impl ColoringRoute {
    pub fn name(self) -> &'static str {
        match self {
            ColoringRoute::Trivial => "trivial",
            ColoringRoute::OddStab => "odd-stab",
            ColoringRoute::ClosestPair => "closest-pair",
            ColoringRoute::PointPairs => "point-pairs",
            ColoringRoute::MinimalArc => "minimal-arc",
            ColoringRoute::Exact => "exact",
            ColoringRoute::Surplus => "surplus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalColoring {
    pub coloring: Coloring,
    /// Size of a maximum disjoint subfamily.
    pub packing: usize,
    /// The normalized maximum disjoint family, clockwise from the arc with
    /// the smallest start.
    pub chosen: Vec<usize>,
    pub route: ColoringRoute,
}

impl IntervalColoring {
    /// `⌈ω/2⌉`, or 1 when there are no edges (0 for the empty family).
    pub fn target(&self) -> usize {
        target_classes(self.coloring.order(), self.packing)
    }
}

fn target_classes(n: usize, packing: usize) -> usize {
    match (n, packing) {
        (0, _) => 0,
        (_, 0..=2) => 1,
        (_, w) => w.div_ceil(2),
    }
}

/// Shrinks each chosen arc to an innermost arc of the family inside it.
fn normalize(family: &ArcFamily, chosen: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = chosen
        .iter()
        .map(|&c| {
            let mut cur = c;
            loop {
                let inner = (1..=family.len()).find(|&j| {
                    j != cur
                        && family.get(cur).contains_arc(family.get(j))
                        && !family.get(j).contains_arc(family.get(cur))
                });
                match inner {
                    Some(j) => cur = j,
                    None => break cur,
                }
            }
        })
        .collect();
    out.sort_by_key(|&i| (family.get(i).start(), i));
    out
}

fn is_minimal(family: &ArcFamily, i: usize) -> bool {
    let a = family.get(i);
    !family
        .iter()
        .any(|(j, b)| j != i && a.contains_arc(b) && !b.contains_arc(a))
}

/// Is every three-element subset of `class` intersecting somewhere?
pub fn is_stab_class(family: &ArcFamily, class: &[usize]) -> bool {
    max_disjoint_arcs(&family.subfamily(class)).len() <= 2
}

/// Classes built so far, as a color per arc (0 = unassigned).
struct Classes {
    colors: Vec<usize>,
    count: usize,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes {
            colors: vec![0; n + 1],
            count: 0,
        }
    }

    fn open(&mut self, members: &[usize]) {
        self.count += 1;
        for &i in members {
            if self.colors[i] == 0 {
                self.colors[i] = self.count;
            }
        }
    }

    /// Pairs consecutive points and opens one class per pair.
    fn pierce(&mut self, spans: &[Span], points: &[Rational64]) {
        for pair in points.chunks(2) {
            let members: Vec<usize> = spans
                .iter()
                .filter(|s| pair.iter().any(|&p| s.contains(p)))
                .map(|s| s.index)
                .collect();
            self.open(&members);
        }
    }

    fn finish(self) -> Coloring {
        debug_assert!(self.colors[1..].iter().all(|&c| c > 0));
        Coloring::new(self.count.max(1), self.colors[1..].to_vec()).expect("colors in range")
    }
}

/// `G₀` is everything meeting `stab`; the rest is pierced on the line cut
/// at `cut`, which must lie inside `stab`.
fn stab_then_pierce(family: &ArcFamily, stab: impl Fn(&Arc) -> bool, cut: Rational64) -> (Coloring, usize) {
    let (g0, rest) = meeting(family, stab);
    let spans = linearize(family, &rest, cut);
    let points = line_piercing(&spans);
    let mut classes = Classes::new(family.len());
    classes.open(&g0);
    classes.pierce(&spans, &points);
    let count = classes.count;
    (classes.finish(), count)
}

fn stab_arc(family: &ArcFamily, l: usize) -> (Coloring, usize) {
    let arc = *family.get(l);
    stab_then_pierce(family, |b| b.intersects(&arc), arc.start())
}

/// Minimum number of points meeting every arc, with one optimal point set.
fn circle_piercing(family: &ArcFamily) -> Vec<Rational64> {
    let mut best: Option<Vec<Rational64>> = None;
    let candidates = family.arcs().iter().flat_map(|a| [a.start(), a.end()]);
    for p in candidates {
        let (_, rest) = meeting(family, |b| b.contains(p));
        let spans = linearize(family, &rest, p);
        let mut points: Vec<Rational64> = line_piercing(&spans)
            .into_iter()
            .map(|x| {
                let y = x + p;
                if y >= Rational64::from_integer(1) {
                    y - 1
                } else {
                    y
                }
            })
            .collect();
        points.push(p);
        if best.as_ref().is_none_or(|b| points.len() < b.len()) {
            best = Some(points);
        }
    }
    let mut best = best.unwrap_or_default();
    best.sort();
    best
}

/// Colors the circle-interval hypergraph of `family` with few classes, each
/// a family in which any three arcs contain an intersecting pair.
///
/// With packing number `ω ≥ 3`, odd `ω` always gets `⌈ω/2⌉` classes. For
/// even `ω` a sequence of constructions is tried, each validated; when none
/// reaches `ω/2` the exact solver decides, and if no `ω/2`-coloring exists
/// the result has `ω/2 + 1` classes, which is then optimal.
pub fn interval_coloring(family: &ArcFamily, solver: &Solver) -> IntervalColoring {
    let n = family.len();
    let packing = max_disjoint_arcs(family);
    let w = packing.len();
    let target = target_classes(n, w);
    let done = |coloring, chosen, route| IntervalColoring {
        coloring,
        packing: w,
        chosen,
        route,
    };
    if w <= 2 {
        return done(
            Coloring::new(target.max(1), vec![1; n]).expect("one class"),
            packing,
            ColoringRoute::Trivial,
        );
    }
    let chosen = normalize(family, &packing);
    let h = || from_arcs(family).0;

    if w % 2 == 1 {
        let (c, _) = stab_arc(family, chosen[0]);
        debug_assert!(c.is_proper_for(&h()) && c.k() <= target);
        return done(c, chosen, ColoringRoute::OddStab);
    }

    // closest consecutive pair, gap measured end to start
    let pair = (0..w)
        .min_by_key(|&i| {
            let (a, b) = (family.get(chosen[i]), family.get(chosen[(i + 1) % w]));
            (clockwise_distance(a.end(), b.start()), i)
        })
        .expect("w >= 3");
    let (la, lb) = (*family.get(chosen[pair]), *family.get(chosen[(pair + 1) % w]));
    let (g0, _) = meeting(family, |b| b.intersects(&la) || b.intersects(&lb));
    if is_stab_class(family, &g0) {
        let (c, k) = stab_then_pierce(family, |b| b.intersects(&la) || b.intersects(&lb), la.start());
        if k <= target {
            return done(c, chosen, ColoringRoute::ClosestPair);
        }
    }

    let points = circle_piercing(family);
    if points.len() <= w {
        let mut classes = Classes::new(n);
        for pair in points.chunks(2) {
            let (members, _) = meeting(family, |b| pair.iter().any(|&p| b.contains(p)));
            classes.open(&members);
        }
        return done(classes.finish(), chosen, ColoringRoute::PointPairs);
    }

    for l in (1..=n).filter(|&l| !family.get(l).is_full() && is_minimal(family, l)) {
        let (c, k) = stab_arc(family, l);
        if k <= target {
            return done(c, chosen, ColoringRoute::MinimalArc);
        }
    }

    if let Ok(Some(c)) = solver.k_colorable(&h(), target) {
        return done(c, chosen, ColoringRoute::Exact);
    }
    let (c, _) = stab_arc(family, chosen[0]);
    done(c, chosen, ColoringRoute::Surplus)
}
