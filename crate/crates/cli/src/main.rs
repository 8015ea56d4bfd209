use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chemtree::bounds::{self, extremal_census, extremal_profile, max_value};
use chemtree::enumerate::{enumerate_filtered, TreeEnumerator};
use chemtree::moves::{apply_move, find_moves};
use chemtree::witness::build_witness;
use chemtree::{ClassQuery, EnumFilter, Family, Index};
use chemtree_cli::{edgelist, verify, Cache, ReportFormat, VerifyConfig};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Chemical trees and the maxima of their Zagreb indices.
#[derive(Parser)]
#[command(name = "ct", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Segments,
    Branching,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Segments => Family::Segments,
            FamilyArg::Branching => Family::Branching,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamiliesArg {
    Segments,
    Branching,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    M1,
    M2,
    Both,
}

impl IndexArg {
    fn indices(self) -> Vec<Index> {
        match self {
            IndexArg::M1 => vec![Index::M1],
            IndexArg::M2 => vec![Index::M2],
            IndexArg::Both => vec![Index::M1, Index::M2],
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the non-isomorphic chemical trees of one order.
    #[command(group(ArgGroup::new("filter").args(["segments", "branching"])))]
    #[command(group(ArgGroup::new("output").args(["count", "codes", "edgelists"])))]
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep trees with exactly K segments.
        #[arg(long, value_name = "K")]
        segments: Option<usize>,
        /// Keep trees with exactly B branching vertices.
        #[arg(long, value_name = "B")]
        branching: Option<usize>,
        /// Print the number of trees (the default).
        #[arg(long)]
        count: bool,
        /// Print one hex canonical code per line.
        #[arg(long)]
        codes: bool,
        /// Print every tree in edge-list format, separated by blank lines.
        #[arg(long)]
        edgelists: bool,
    },
    /// Closed-form maxima over a class.
    Bounds {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "both")]
        index: IndexArg,
        #[arg(long)]
        json: bool,
    },
    /// An explicit tree attaining both maxima over a class.
    Witness {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Write the edge list here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the maxima and extremal classes against brute force.
    Verify {
        #[arg(long, value_enum, default_value = "both")]
        family: FamiliesArg,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "both")]
        index: IndexArg,
        /// Allow orders 15 and 16.
        #[arg(long)]
        extended: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Worker threads (0 = one per CPU).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        no_cache: bool,
    },
    /// List (or apply) the index-increasing rewrites available in a tree.
    Moves {
        /// Edge-list file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Apply the move with this index from the listing.
        #[arg(long, value_name = "INDEX")]
        apply: Option<usize>,
    },
}

/// Default largest order for `verify`; `--extended` raises it.
const STANDARD_MAX: usize = 14;
const EXTENDED_MAX: usize = 16;

enum Failure {
    Usage(String),
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("ct: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_out(path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(io::stdout().lock().write_all(bytes)?),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate { n, segments, branching, count: _, codes, edgelists } => {
            let filter = match (segments, branching) {
                (Some(k), _) => EnumFilter::Segments(k),
                (_, Some(b)) => EnumFilter::Branching(b),
                _ => EnumFilter::None,
            };
            let trees: TreeEnumerator = enumerate_filtered(n, filter)?;
            let mut out = io::BufWriter::new(io::stdout().lock());
            if codes {
                for t in trees {
                    writeln!(out, "{}", t.canonical_code())?;
                }
            } else if edgelists {
                for (i, t) in trees.enumerate() {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    write!(out, "{}", edgelist::format(&t))?;
                }
            } else {
                writeln!(out, "{}", trees.count_remaining())?;
            }
            out.flush()?;
        }
        Command::Bounds { family, n, p, index, json } => {
            let family = Family::from(family);
            let census = extremal_census(family, n, p)?;
            let mut results = Vec::new();
            for index in index.indices() {
                let r = max_value(&ClassQuery::new(family, n, p, index))?;
                let stated = (family == Family::Segments && index == Index::M2)
                    .then(|| bounds::stated_segments_m2(n, p))
                    .flatten()
                    .filter(|&s| s != r.value);
                results.push((index, r, stated));
            }
            let profile = extremal_profile(family, n, p)?;
            if json {
                let value = json!({
                    "family": family.to_string(),
                    "n": n,
                    "p": p,
                    "results": results.iter().map(|(index, r, stated)| json!({
                        "index": index.to_string(),
                        "value": r.value,
                        "regime": r.regime.label(),
                        "equality_class": r.equality_class.label(),
                        "stated_value": stated,
                    })).collect::<Vec<_>>(),
                    "census": [census.n1, census.n2, census.n3, census.n4],
                    "profile": profile.nonzero().map(|((i, j), c)| (format!("x{i}{j}"), json!(c))).collect::<serde_json::Map<_, _>>(),
                });
                println!("{value}");
            } else {
                for (index, r, stated) in &results {
                    print!("{index} max = {} ({}; extremal class {})", r.value, r.regime, r.equality_class);
                    if let Some(s) = stated {
                        print!(" [originally stated: {s}]");
                    }
                    println!();
                }
                println!("census (n1,n2,n3,n4) = ({},{},{},{})", census.n1, census.n2, census.n3, census.n4);
                println!("M2 edge profile: {profile}");
            }
        }
        Command::Witness { family, n, p, out } => {
            let t = build_witness(family.into(), n, p)?;
            write_out(out.as_ref(), edgelist::format(&t).as_bytes())?;
        }
        Command::Verify { family, n_min, n_max, index, extended, report, format, jobs, no_cache } => {
            let cap = if extended { EXTENDED_MAX } else { STANDARD_MAX };
            if n_max > cap {
                let hint = if extended { "" } else { " (use --extended for up to 16)" };
                return Err(Failure::Usage(format!("--n-max {n_max} exceeds {cap}{hint}")));
            }
            let families = match family {
                FamiliesArg::Segments => vec![Family::Segments],
                FamiliesArg::Branching => vec![Family::Branching],
                FamiliesArg::Both => vec![Family::Segments, Family::Branching],
            };
            let mut config = VerifyConfig::new(&families, n_min, n_max, &index.indices());
            config.jobs = jobs;
            config.cache = if no_cache { None } else { Cache::from_env() };
            let r = verify(&config)?;
            let mut buf = Vec::new();
            r.emit(format, &mut buf)?;
            write_out(report.as_ref(), &buf)?;
            if report.is_some() {
                eprintln!("{} pass, {} fail, {} findings", r.summary.pass, r.summary.fail, r.findings.len());
            }
            if r.exit_code() != 0 {
                return Err(Failure::Mismatch);
            }
        }
        Command::Moves { input, family, apply } => {
            let text = fs::read_to_string(&input).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let t = edgelist::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let moves = find_moves(&t, family.into());
            match apply {
                None => {
                    if moves.is_empty() {
                        println!("no moves");
                    }
                    for (i, m) in moves.iter().enumerate() {
                        let after = apply_move(&t, m)?;
                        println!(
                            "{i}: {m}  dM1={:+} dM2={:+}",
                            delta(t.zagreb_m1(), after.zagreb_m1()),
                            delta(t.zagreb_m2(), after.zagreb_m2())
                        );
                    }
                }
                Some(i) => {
                    let m = moves
                        .get(i)
                        .ok_or_else(|| Failure::Usage(format!("no move {i}; {} available", moves.len())))?;
                    let after = apply_move(&t, m)?;
                    println!("move: {m}");
                    print!("before:\n{}", edgelist::format(&t));
                    print!("after:\n{}", edgelist::format(&after));
                    println!(
                        "M1 {} -> {} ({:+})",
                        t.zagreb_m1(),
                        after.zagreb_m1(),
                        delta(t.zagreb_m1(), after.zagreb_m1())
                    );
                    println!(
                        "M2 {} -> {} ({:+})",
                        t.zagreb_m2(),
                        after.zagreb_m2(),
                        delta(t.zagreb_m2(), after.zagreb_m2())
                    );
                }
            }
        }
    }
    Ok(())
}

fn delta(before: u64, after: u64) -> i64 {
    after as i64 - before as i64
}
