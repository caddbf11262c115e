//! The `verify` harness: each claim expands a grid into instances, every
//! instance is checked independently and yields one report row.

use std::time::Instant;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use hyper3::comparability::{extend_coloring_via_link, is_comparability, link_bounds, link_orientation};
use hyper3::constructive::{
    circular_lis, interval_coloring, is_stab_class, min_decreasing_cover, winding_blocks, winding_cover,
};
use hyper3::generators::{
    complete, from_arcs, from_cyclic_permutation, mycielski, mycielski_tower_oriented, random_arcs,
    transitive_tournament, winding_hypergraph, winding_permutation, CyclicPermutation, DEFAULT_TOWER_LIMIT,
};
use hyper3::solvers::Solver;
use hyper3::{Hypergraph3, TransitivityMode};

use crate::grid::Grid;
use crate::report::{Report, Row};
use crate::CliError;

/// Default arc lengths for random families, in thousandths of the circle.
/// Grid keys `minlen` and `maxlen` override them.
pub const ARC_LENGTHS: (usize, usize) = (20, 300);

/// Arc length bounds in thousandths of the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lengths(pub usize, pub usize);

impl Lengths {
    fn arcs(self, n: usize, seed: u64) -> Result<hyper3::generators::ArcFamily, CliError> {
        Ok(random_arcs(n, seed, self.0 as f64 / 1000.0, self.1 as f64 / 1000.0)?)
    }

    fn label(self) -> String {
        if (self.0, self.1) == ARC_LENGTHS {
            String::new()
        } else {
            format!(" len={}..{}", self.0, self.1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Claim {
    /// ⌈ω/2⌉ ≤ χ on every generator family.
    Eq1,
    /// Cyclic-permutation hypergraphs and their complements are comparability.
    Thm1,
    /// Mycielski towers keep ω and raise χ by one per level.
    Thm2,
    /// χ ≤ ω − 1 for cyclic-permutation hypergraphs, tight on winding ones.
    Thm3,
    /// χ = ⌈ω/2⌉ on random circle-interval hypergraphs, with the coloring
    /// built from stab classes. Some even ω need one more class; grid keys
    /// `minlen=150;maxlen=250` find them.
    Thm4,
    /// ω and χ of winding hypergraphs.
    Lemmas,
    /// ω and χ of cyclic-permutation hypergraphs as circular LIS and
    /// decreasing covers; links and evenness.
    Obs,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Eq1 => "eq1",
            Claim::Thm1 => "thm1",
            Claim::Thm2 => "thm2",
            Claim::Thm3 => "thm3",
            Claim::Thm4 => "thm4",
            Claim::Lemmas => "lemmas",
            Claim::Obs => "obs",
        }
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            Claim::Eq1 => &["n", "q", "r", "seeds", "minlen", "maxlen"],
            Claim::Thm1 => &["n"],
            Claim::Thm2 => &["n", "k"],
            Claim::Thm3 => &["n", "q"],
            Claim::Thm4 => &["n", "seeds", "minlen", "maxlen"],
            Claim::Lemmas => &["q", "r"],
            Claim::Obs => &["n", "q", "r"],
        }
    }
}

/// One unit of work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    Eq1Complete(usize),
    Eq1Winding(usize, usize),
    Eq1Perm(usize, u64),
    Eq1Arcs(usize, u64, Lengths),
    Eq1Mycielski(usize),
    Thm1(usize),
    Thm2(usize, usize),
    Thm3Perms(usize),
    Thm3Tight(usize),
    Thm4(usize, u64, Lengths),
    Lemmas(usize, usize),
    ObsPerms(usize),
    ObsWinding(usize, usize),
}

pub fn instances(claim: Claim, grid: &Grid) -> Result<Vec<Instance>, CliError> {
    grid.check_keys(claim.keys())?;
    use Instance::*;
    let seeds = |d| {
        grid.values("seeds", d)
            .into_iter()
            .map(|s| s as u64)
            .collect::<Vec<_>>()
    };
    let pairs = |q, r| {
        let rs = grid.values("r", r);
        grid.values("q", q)
            .into_iter()
            .flat_map(move |q| rs.clone().into_iter().map(move |r| (q, r)))
            .collect::<Vec<_>>()
    };
    let lengths = lengths(grid)?;
    let out = match claim {
        Claim::Eq1 => {
            let ns = grid.values("n", (3, 9));
            let seeds = seeds((1, 20));
            let mut v: Vec<Instance> = ns.iter().map(|&n| Eq1Complete(n)).collect();
            v.extend(pairs((2, 5), (1, 4)).into_iter().map(|(q, r)| Eq1Winding(q, r)));
            v.extend(ns.iter().flat_map(|&n| seeds.iter().map(move |&s| Eq1Perm(n, s))));
            v.extend(
                ns.iter()
                    .flat_map(|&n| seeds.iter().map(move |&s| Eq1Arcs(n, s, lengths))),
            );
            v.extend(ns.iter().filter(|&&n| n <= 4).map(|&n| Eq1Mycielski(n)));
            v
        }
        Claim::Thm1 => grid.values("n", (1, 6)).into_iter().map(Thm1).collect(),
        Claim::Thm2 => {
            let ks = grid.values("k", (0, 2));
            grid.values("n", (3, 4))
                .into_iter()
                .flat_map(|n| ks.iter().map(move |&k| Thm2(n, k)))
                .collect()
        }
        Claim::Thm3 => {
            let mut v: Vec<Instance> = grid.values("n", (2, 7)).into_iter().map(Thm3Perms).collect();
            v.extend(grid.values("q", (3, 6)).into_iter().map(Thm3Tight));
            v
        }
        Claim::Thm4 => {
            let seeds = seeds((1, 10));
            grid.values("n", (5, 20))
                .into_iter()
                .flat_map(|n| seeds.iter().map(move |&s| Thm4(n, s, lengths)))
                .collect()
        }
        Claim::Lemmas => pairs((2, 6), (1, 5)).into_iter().map(|(q, r)| Lemmas(q, r)).collect(),
        Claim::Obs => {
            let mut v: Vec<Instance> = grid.values("n", (1, 6)).into_iter().map(ObsPerms).collect();
            v.extend(pairs((2, 5), (1, 4)).into_iter().map(|(q, r)| ObsWinding(q, r)));
            v
        }
    };
    Ok(out)
}

fn lengths(grid: &Grid) -> Result<Lengths, CliError> {
    let one = |key, default| match grid.values(key, (default, default)).as_slice() {
        [v] => Ok(*v),
        _ => Err(CliError::Usage(format!("grid key '{key}' takes a single value"))),
    };
    let l = Lengths(one("minlen", ARC_LENGTHS.0)?, one("maxlen", ARC_LENGTHS.1)?);
    if l.0 == 0 || l.0 > l.1 || l.1 >= 1000 {
        return Err(CliError::Usage(format!(
            "arc lengths {}..{} not within 1..999",
            l.0, l.1
        )));
    }
    Ok(l)
}

/// A uniformly random cyclic permutation, reproducible from `seed`.
pub fn random_permutation(n: usize, seed: u64) -> CyclicPermutation {
    let mut values: Vec<usize> = (1..=n).collect();
    values.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    CyclicPermutation::new(values).expect("shuffled identity")
}

struct Check {
    params: String,
    expected: String,
    computed: String,
    pass: bool,
}

fn eq1(params: String, h: &Hypergraph3, solver: &Solver) -> Result<Check, CliError> {
    let e = solver.check_eq1(h)?;
    Ok(Check {
        params,
        expected: format!("chi >= ceil({}/2)", e.omega),
        computed: format!("omega={} chi={}", e.omega, e.chi),
        pass: e.holds(),
    })
}

/// Counts the items passing `test`, and expects all to.
fn count_all<T>(
    params: String,
    items: &[T],
    mut test: impl FnMut(&T) -> Result<bool, CliError>,
) -> Result<Check, CliError> {
    let mut ok = 0;
    for item in items {
        if test(item)? {
            ok += 1;
        }
    }
    Ok(Check {
        params,
        expected: format!("{} of {}", items.len(), items.len()),
        computed: format!("{ok} of {}", items.len()),
        pass: ok == items.len(),
    })
}

impl Instance {
    fn check(self, solver: &Solver) -> Result<Check, CliError> {
        use Instance::*;
        match self {
            Eq1Complete(n) => eq1(format!("complete n={n}"), &complete(n), solver),
            Eq1Winding(q, r) => eq1(
                format!("winding q={q} r={r}"),
                &winding_hypergraph(q, r)?.underlying(),
                solver,
            ),
            Eq1Perm(n, s) => {
                let p = random_permutation(n, s);
                eq1(
                    format!("perm n={n} seed={s}"),
                    &from_cyclic_permutation(&p).underlying(),
                    solver,
                )
            }
            Eq1Arcs(n, s, l) => {
                let f = l.arcs(n, s)?;
                eq1(format!("arcs n={n} seed={s}{}", l.label()), &from_arcs(&f).0, solver)
            }
            Eq1Mycielski(n) => eq1(format!("mycielski n={n}"), &mycielski(&complete(n)).hypergraph, solver),
            Thm1(n) => count_all(format!("n={n}"), &CyclicPermutation::all(n), |p| {
                let h = from_cyclic_permutation(p).underlying();
                Ok(is_comparability(&h)? && is_comparability(&h.complement())?)
            }),
            Thm2(n, k) => {
                let oh = mycielski_tower_oriented(&transitive_tournament(n), k, DEFAULT_TOWER_LIMIT)?;
                let h = oh.underlying();
                let (omega, _) = solver.omega(&h)?;
                let (chi, _) = solver.chi(&h)?;
                let transitive = oh.is_transitive(TransitivityMode::Strict);
                let base_chi = n.div_ceil(2);
                Ok(Check {
                    params: format!("complete n={n} k={k}"),
                    expected: format!("omega={n} chi={} transitive", base_chi + k),
                    computed: format!("omega={omega} chi={chi}{}", if transitive { " transitive" } else { "" }),
                    pass: omega == n && chi == base_chi + k && transitive,
                })
            }
            Thm3Perms(n) => count_all(format!("perms n={n}"), &CyclicPermutation::all(n), |p| {
                let h = from_cyclic_permutation(p).underlying();
                Ok(solver.chi(&h)?.0 < solver.omega(&h)?.0)
            }),
            Thm3Tight(q) => {
                let r = q - 2;
                let h = winding_hypergraph(q, r)?.underlying();
                let chi = solver.chi(&h)?.0;
                Ok(Check {
                    params: format!("winding q={q} r={r}"),
                    expected: format!("chi={}", q - 1),
                    computed: format!("chi={chi}"),
                    pass: chi == q - 1,
                })
            }
            Thm4(n, s, l) => {
                let f = l.arcs(n, s)?;
                let h = from_arcs(&f).0;
                let ic = interval_coloring(&f, solver);
                let chi = solver.chi(&h)?.0.max(1);
                let k = ic.coloring.used();
                let classes_ok = ic.coloring.classes().iter().all(|c| is_stab_class(&f, c));
                let proper = ic.coloring.is_proper_for(&h);
                Ok(Check {
                    params: format!("arcs n={n} seed={s}{}", l.label()),
                    expected: format!("colors={0} chi={0}", ic.target()),
                    computed: format!(
                        "colors={k} chi={chi} route={}{}",
                        ic.route.name(),
                        if proper && classes_ok { "" } else { " improper" }
                    ),
                    pass: proper && classes_ok && k == ic.target() && chi == ic.target(),
                })
            }
            Lemmas(q, r) => {
                let h = winding_hypergraph(q, r)?.underlying();
                let n = h.order();
                let (omega, _) = solver.omega(&h)?;
                let (chi, _) = solver.chi(&h)?;
                let want = n.div_ceil(r + 1);
                Ok(Check {
                    params: format!("q={q} r={r}"),
                    expected: format!("omega={q} chi={want}"),
                    computed: format!("omega={omega} chi={chi}"),
                    pass: omega == q && chi == want,
                })
            }
            ObsPerms(n) => count_all(format!("perms n={n}"), &CyclicPermutation::all(n), |p| {
                let oh = from_cyclic_permutation(p);
                let h = oh.underlying();
                let numbers =
                    circular_lis(p).0 == solver.omega(&h)?.0 && min_decreasing_cover(p).len() == solver.chi(&h)?.0;
                let mut links = h.is_even();
                for v in 1..=n {
                    let b = link_bounds(&h, v, solver)?;
                    let d = link_orientation(&oh, v)?.digraph;
                    let (_, lc) = hyper3::solvers::graph_chi(&h.link(v)?.graph, solver)?;
                    let ext = extend_coloring_via_link(&h, v, &lc)?;
                    links &= solver.chi(&h)?.0 <= b.chi_h_upper
                        && solver.omega(&h)?.0 >= b.omega_h_lower
                        && d.is_acyclic()
                        && d.is_transitive()
                        && ext.is_proper_for(&h);
                }
                Ok(numbers && links)
            }),
            ObsWinding(q, r) => {
                let p = winding_permutation(q, r)?;
                let h = winding_hypergraph(q, r)?.underlying();
                let blocks = winding_blocks(q, r)?;
                let blocks_ok =
                    blocks.a.iter().all(|s| s.is_decreasing()) && blocks.b.iter().all(|s| s.is_increasing());
                let lis = circular_lis(&p).0;
                let cover = winding_cover(q, r)?.len();
                let chi = solver.chi(&h)?.0;
                Ok(Check {
                    params: format!("winding q={q} r={r}"),
                    expected: format!("lis={q} cover={chi} blocks"),
                    computed: format!("lis={lis} cover={cover}{}", if blocks_ok { " blocks" } else { "" }),
                    pass: lis == q && cover == chi && blocks_ok,
                })
            }
        }
    }

    pub fn run(self, claim: Claim, solver: &Solver, timing: bool) -> Result<Row, CliError> {
        let start = Instant::now();
        let c = self.check(solver)?;
        Ok(Row {
            claim: claim.name().to_string(),
            params: c.params,
            expected: c.expected,
            computed: c.computed,
            pass: c.pass,
            millis: timing.then(|| start.elapsed().as_millis()),
        })
    }
}

/// Runs every instance of `claim` on `jobs` threads; rows come back in
/// grid order whatever the scheduling.
pub fn verify(claim: Claim, grid: &Grid, solver: &Solver, jobs: usize, timing: bool) -> Result<Report, CliError> {
    let work = instances(claim, grid)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let rows: Result<Vec<Row>, CliError> =
        pool.install(|| work.par_iter().map(|i| i.run(claim, solver, timing)).collect());
    Ok(Report { rows: rows? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names() {
        assert_eq!(Claim::Thm4.name(), "thm4");
        assert_eq!(Claim::Lemmas.name(), "lemmas");
    }

    #[test]
    fn grid_expansion() {
        let g: Grid = "n=5..6;seeds=1..3".parse().unwrap();
        assert_eq!(instances(Claim::Thm4, &g).unwrap().len(), 6);
        assert!(instances(Claim::Thm1, &g).is_err());
        assert_eq!(instances(Claim::Lemmas, &Grid::default()).unwrap().len(), 25);
    }

    #[test]
    fn arc_length_keys() {
        let g: Grid = "n=5;seeds=1;minlen=150;maxlen=250".parse().unwrap();
        assert_eq!(
            instances(Claim::Thm4, &g).unwrap(),
            vec![Instance::Thm4(5, 1, Lengths(150, 250))]
        );
        for bad in ["minlen=1..2", "minlen=400;maxlen=300", "maxlen=1000", "minlen=0"] {
            assert!(instances(Claim::Thm4, &bad.parse().unwrap()).is_err(), "{bad}");
        }
    }

    #[test]
    fn random_permutations_are_reproducible() {
        assert_eq!(random_permutation(9, 4), random_permutation(9, 4));
        assert_eq!(random_permutation(1, 4).values(), &[1]);
    }
}
