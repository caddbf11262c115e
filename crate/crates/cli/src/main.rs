use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyper3::comparability::{link_bounds, Recognizer};
use hyper3::constructive::{circular_lis, interval_coloring, min_decreasing_cover};
use hyper3::generators::{
    complete, from_cyclic_permutation, mycielski_tower_oriented, mycielski_tower_with_limit, random_arcs,
    transitive_tournament, winding_hypergraph, CyclicPermutation, DEFAULT_TOWER_LIMIT,
};
use hyper3::io;
use hyper3::solvers::Solver;
use hyper3::TransitivityMode;
use hyper3_cli::grid::Grid;
use hyper3_cli::input::Input;
use hyper3_cli::verify::{verify, Claim, ARC_LENGTHS};
use hyper3_cli::CliError;

#[derive(Parser)]
#[command(
    name = "hyper3",
    version,
    about = "3-uniform hypergraphs: generation, coloring, orientation"
)]
struct Cli {
    /// Node budget for exact searches (default 10^8, or $HYPER3_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Literal,
    Strict,
}

impl From<Mode> for TransitivityMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Literal => TransitivityMode::Literal,
            Mode::Strict => TransitivityMode::Strict,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Tt,
    CyclicPerm,
    Winding,
    Mycielski,
    ArcsRandom,
}

#[derive(Clone, Copy, ValueEnum)]
enum Recognize {
    Comparability,
    CyclicPerm,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance (.h3, .oh3 or .iv text).
    Gen {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Cyclic permutation, e.g. "5 2 6 3 7 4 1".
        #[arg(long)]
        perm: Option<String>,
        /// Base instance for `mycielski`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Tower height for `mycielski`.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Shortest random arc, in thousandths of the circle.
        #[arg(long, default_value_t = ARC_LENGTHS.0)]
        minlen: usize,
        /// Longest random arc, in thousandths of the circle.
        #[arg(long, default_value_t = ARC_LENGTHS.1)]
        maxlen: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chromatic number.
    Chi {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Clique number.
    Omega {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Does every 4-set span an even number of edges?
    Even { file: PathBuf },
    /// Is the orientation transitive?
    CheckTransitive {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
    /// Recognize comparability or cyclic-permutation hypergraphs.
    Recognize {
        kind: Recognize,
        file: PathBuf,
        #[arg(long)]
        emit_orientation: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
    /// The link graph of a vertex.
    Link {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounds on χ and ω of an even hypergraph from one link.
    LinkBounds {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Minimum cover by clockwise decreasing sub-permutations.
    CoverPerm {
        #[arg(long)]
        perm: String,
    },
    /// Longest clockwise increasing sub-permutation.
    LisPerm {
        #[arg(long)]
        perm: String,
    },
    /// Color a circle-interval hypergraph.
    ColorArcs {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a claim over a parameter grid and report per instance.
    Verify {
        claim: Claim,
        /// e.g. "n=5..20;seeds=1..10".
        #[arg(long, default_value = "")]
        grid: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Fill the millis column (makes reports non-reproducible).
        #[arg(long)]
        timing: bool,
    },
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

fn parse_perm(text: &str) -> Result<CyclicPermutation, CliError> {
    text.parse()
        .map_err(|e| CliError::Usage(format!("bad --perm '{text}': {e}")))
}

fn yes_no(yes: bool) -> bool {
    println!("{}", if yes { "YES" } else { "NO" });
    yes
}

fn spaced<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `Ok(false)` means the answer was NO or a claim was refuted.
fn run(cli: Cli) -> Result<bool, CliError> {
    let solver = cli.budget.map_or_else(Solver::default, Solver::with_budget);
    match cli.command {
        Command::Gen {
            family,
            n,
            q,
            r,
            perm,
            input,
            k,
            seed,
            minlen,
            maxlen,
            out,
        } => {
            let text = match family {
                Family::Complete => io::emit_h3(&complete(need(n, "n")?)),
                Family::Tt => io::emit_oh3(&transitive_tournament(need(n, "n")?)),
                Family::CyclicPerm => io::emit_oh3(&from_cyclic_permutation(&parse_perm(&need(perm, "perm")?)?)),
                Family::Winding => io::emit_oh3(&winding_hypergraph(need(q, "q")?, need(r, "r")?)?),
                Family::Mycielski => match Input::load(&need(input, "input")?)? {
                    Input::Oriented(oh) => io::emit_oh3(&mycielski_tower_oriented(&oh, k, DEFAULT_TOWER_LIMIT)?),
                    other => io::emit_h3(&mycielski_tower_with_limit(
                        &other.hypergraph(),
                        k,
                        DEFAULT_TOWER_LIMIT,
                    )?),
                },
                Family::ArcsRandom => {
                    let (lo, hi) = (minlen as f64 / 1000.0, maxlen as f64 / 1000.0);
                    io::emit_iv(&random_arcs(need(n, "n")?, seed, lo, hi)?)
                }
            };
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Chi { file, witness } => {
            let h = Input::load(&file)?.hypergraph();
            let (chi, coloring) = solver.chi(&h)?;
            println!("{chi}");
            if witness {
                println!("{}", spaced(coloring.colors()));
            }
            Ok(true)
        }
        Command::Omega { file, witness } => {
            let h = Input::load(&file)?.hypergraph();
            let (omega, clique) = solver.omega(&h)?;
            println!("{omega}");
            if witness {
                println!("{}", spaced(&clique.vertices));
            }
            Ok(true)
        }
        Command::Even { file } => {
            let h = Input::load(&file)?.hypergraph();
            match h.even_violation() {
                None => Ok(yes_no(true)),
                Some(four) => {
                    println!("NO {}", spaced(four));
                    Ok(false)
                }
            }
        }
        Command::CheckTransitive { file, mode } => {
            let oh = Input::load(&file)?
                .orientation()
                .ok_or_else(|| CliError::Usage("check-transitive needs an oriented (.oh3) or .iv file".into()))?;
            match oh.transitivity_violation(mode.into()) {
                None => Ok(yes_no(true)),
                Some(v) => {
                    println!("NO {v}");
                    Ok(false)
                }
            }
        }
        Command::Recognize {
            kind,
            file,
            emit_orientation,
            mode,
        } => {
            let h = Input::load(&file)?.hypergraph();
            let recognizer = Recognizer::with_budget(mode.into(), solver.budget);
            match kind {
                Recognize::Comparability => {
                    let cert = recognizer.find(&h)?;
                    if let (Some(c), Some(path)) = (&cert, &emit_orientation) {
                        write_out(Some(path), &io::emit_oh3(&c.orientation))?;
                    }
                    Ok(yes_no(cert.is_some()))
                }
                Recognize::CyclicPerm => {
                    if emit_orientation.is_some() {
                        return Err(CliError::Usage(
                            "--emit-orientation applies to comparability only".into(),
                        ));
                    }
                    let both = recognizer.find(&h)?.is_some() && recognizer.find(&h.complement())?.is_some();
                    Ok(yes_no(both))
                }
            }
        }
        Command::Link { file, vertex, out } => {
            let link = Input::load(&file)?.hypergraph().link(vertex)?;
            let mut text = format!("# link of {vertex}; local vertices stand for {}\n", spaced(&link.names));
            text.push_str(&io::emit_graph(&link.graph));
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::LinkBounds { file, vertex } => {
            let h = Input::load(&file)?.hypergraph();
            let b = link_bounds(&h, vertex, &solver)?;
            println!("chi(link)={} omega(link)={}", b.chi_link, b.omega_link);
            println!("chi(H) <= {}", b.chi_h_upper);
            println!("omega(H) >= {}", b.omega_h_lower);
            Ok(true)
        }
        Command::CoverPerm { perm } => {
            let cover = min_decreasing_cover(&parse_perm(&perm)?);
            println!("{}", cover.len());
            println!("{cover}");
            Ok(true)
        }
        Command::LisPerm { perm } => {
            let (len, witness) = circular_lis(&parse_perm(&perm)?);
            println!("{len}");
            println!("{witness}");
            Ok(true)
        }
        Command::ColorArcs { file, out } => {
            let family = match Input::load(&file)? {
                Input::Arcs(f) => f,
                _ => return Err(CliError::Usage("color-arcs needs an .iv file".into())),
            };
            let ic = interval_coloring(&family, &solver);
            let k = ic.coloring.k();
            println!("{k} (target {}, route {})", ic.target(), ic.route.name());
            let text = format!(
                "{} {k}\n{}",
                family.len(),
                ic.coloring
                    .colors()
                    .iter()
                    .map(|c| format!("{c}\n"))
                    .collect::<String>()
            );
            match out {
                Some(path) => write_out(Some(&path), &text)?,
                None => println!("{}", spaced(ic.coloring.colors())),
            }
            Ok(true)
        }
        Command::Verify {
            claim,
            grid,
            format,
            out,
            jobs,
            timing,
        } => {
            let grid: Grid = grid.parse()?;
            let report = verify(claim, &grid, &solver, jobs.max(1), timing)?;
            let text = match format {
                Format::Csv => report.to_csv(),
                Format::Md => report.to_markdown(),
            };
            write_out(out.as_deref(), &text)?;
            if !report.passed() {
                eprintln!(
                    "{}: {} of {} instances fail",
                    claim.name(),
                    report.failures(),
                    report.rows.len()
                );
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
