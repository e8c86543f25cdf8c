//! `bei`: binomial edge ideals of clutters from the command line.

mod report;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bei_core::{
    cm_verdict_with, dimension, export_generators, glue, is_unmixed, minimal_primes, minimal_primes_oracle,
    random_clutter, read_clutter, write_clutter, Clutter, Error, Limits, PrimeDescriptor, TieBreak, VerdictOptions,
};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bei", version, about = "Minimal primes, unmixedness and Cohen-Macaulay rules for binomial edge ideals of clutters")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for subset enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest vertex count for cut-set enumeration.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_ENUM)]
    max_enum_vertices: usize,

    /// Largest vertex count for maximal clique enumeration.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_CLIQUE)]
    max_clique_vertices: usize,

    /// Largest vertex count for the brute-force oracle.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_ORACLE)]
    max_oracle_vertices: usize,

    /// Cross-check minimal primes against the brute-force oracle.
    #[arg(long, global = true)]
    oracle: bool,

    /// Seed for `random`, and for gluing/apex tie-breaks in `cm` and `analyze`.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: graph, cliques, cut sets, dimension, unmixedness, verdict.
    Analyze {
        file: PathBuf,
        /// Cut sets listed in the report; counts always cover all of them.
        #[arg(long, default_value_t = 50)]
        show_cut_sets: usize,
    },
    /// Minimal primes, one per cut set.
    MinimalPrimes { file: PathBuf },
    /// Whether all minimal primes have the same height.
    Unmixed { file: PathBuf },
    /// Krull dimension of S/J.
    Dimension { file: PathBuf },
    /// Cohen-Macaulay verdict with its certificate.
    Cm { file: PathBuf },
    /// Cone over a clutter with a fresh apex.
    Cone {
        file: PathBuf,
        #[arg(long)]
        apex: String,
    },
    /// Gluing of two clutters at a shared free vertex.
    Glue {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Seeded random clutter on labels 1..=N.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        max_arity: usize,
    },
    /// Generators of J, one binomial per line.
    ExportGenerators { file: PathBuf },
}

enum Failure {
    Core(Error),
    Input(String),
    OracleDisagrees(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::OracleDisagrees(_) => 7,
            Failure::Core(e) => match e {
                Error::Parse(_)
                | Error::DuplicateLabel(_)
                | Error::UnknownLabelInEdge(_)
                | Error::EmptyEdge
                | Error::NotAnAntichain { .. }
                | Error::InvalidParameter(_) => 2,
                Error::ComplexityGuard { .. } => 3,
                Error::GlueVertexNotFree(_) => 4,
                Error::LabelCollision(_) => 5,
                Error::Unattainable { .. } => 6,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Input(m) => m.clone(),
            Failure::OracleDisagrees(m) => format!("oracle disagreement: {m}"),
        }
    }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<Clutter, Failure> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    read_clutter(&text).map_err(|e| match e {
        Error::Parse(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => Failure::Core(other),
    })
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn prime_key(p: &PrimeDescriptor) -> (Vec<usize>, usize) {
    (p.removed.to_vec(), p.height)
}

fn cross_check(c: &Clutter, limits: &Limits, primes: &[PrimeDescriptor]) -> Result<(), Failure> {
    let oracle = minimal_primes_oracle(c, limits)?;
    let mine: BTreeSet<_> = primes.iter().map(prime_key).collect();
    let theirs: BTreeSet<_> = oracle.iter().map(prime_key).collect();
    if mine != theirs {
        let only = |a: &BTreeSet<(Vec<usize>, usize)>, b: &BTreeSet<(Vec<usize>, usize)>| {
            a.difference(b).map(|(t, _)| c.fmt_set(&t.iter().copied().collect())).collect::<Vec<_>>().join(" ")
        };
        return Err(Failure::OracleDisagrees(format!(
            "criterion only [{}], oracle only [{}]",
            only(&mine, &theirs),
            only(&theirs, &mine)
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let limits = Limits {
        max_enum_vertices: cli.max_enum_vertices,
        max_clique_vertices: cli.max_clique_vertices,
        max_oracle_vertices: cli.max_oracle_vertices,
    };
    let opts = VerdictOptions {
        limits,
        tie_break: cli.seed.map_or(TieBreak::LowestLabel, TieBreak::Seeded),
        disabled: Vec::new(),
    };
    let oracle_check = |c: &Clutter| -> Result<(), Failure> {
        if cli.oracle {
            cross_check(c, &limits, &minimal_primes(c, &limits)?)?;
        }
        Ok(())
    };

    match &cli.command {
        Command::Analyze { file, show_cut_sets } => {
            let c = load(file)?;
            oracle_check(&c)?;
            let r = report::analyze(&c, &opts, *show_cut_sets)?;
            Ok(if cli.json {
                report::versioned(&r)
            } else {
                report::render(&r)
            })
        }
        Command::MinimalPrimes { file } => {
            let c = load(file)?;
            let primes = minimal_primes(&c, &limits)?;
            if cli.oracle {
                cross_check(&c, &limits, &primes)?;
            }
            if cli.json {
                let list: Vec<_> = primes
                    .iter()
                    .map(|p| {
                        json!({
                            "removed": c.labels_of(&p.removed),
                            "parts": p.parts.iter().map(|s| c.labels_of(s)).collect::<Vec<_>>(),
                            "height": p.height,
                        })
                    })
                    .collect();
                return Ok(json_line(json!({ "schema": report::SCHEMA, "minimal_primes": list })));
            }
            let mut out = String::new();
            for p in &primes {
                let parts: Vec<String> = p.parts.iter().map(|s| c.fmt_set(s)).collect();
                let _ = writeln!(out, "T={} height={} parts={}", c.fmt_set(&p.removed), p.height, parts.join(" "));
            }
            Ok(out)
        }
        Command::Unmixed { file } => {
            let c = load(file)?;
            oracle_check(&c)?;
            let u = is_unmixed(&c, &limits)?;
            Ok(if cli.json { json_line(json!({ "schema": report::SCHEMA, "unmixed": u })) } else { format!("{u}\n") })
        }
        Command::Dimension { file } => {
            let c = load(file)?;
            oracle_check(&c)?;
            let d = dimension(&c, &limits)?;
            Ok(if cli.json { json_line(json!({ "schema": report::SCHEMA, "dim": d })) } else { format!("{d}\n") })
        }
        Command::Cm { file } => {
            let c = load(file)?;
            oracle_check(&c)?;
            let v = cm_verdict_with(&c, &opts)?;
            if cli.json {
                return Ok(report::versioned(&v));
            }
            let mut out = String::new();
            report::render_verdict(&v, &mut out);
            Ok(out)
        }
        Command::Cone { file, apex } => Ok(write_clutter(&load(file)?.cone(apex)?)),
        Command::Glue { left, right, at } => {
            let (l, r) = (load(left)?, load(right)?);
            Ok(write_clutter(&glue(&l, &r, at, &limits)?))
        }
        Command::Random { vertices, edges, max_arity } => {
            Ok(write_clutter(&random_clutter(*vertices, *edges, *max_arity, cli.seed.unwrap_or(0))?))
        }
        Command::ExportGenerators { file } => {
            let c = load(file)?;
            let text = export_generators(&c);
            Ok(if cli.json {
                json_line(json!({ "schema": report::SCHEMA, "generators": text.lines().collect::<Vec<_>>() }))
            } else {
                text
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("bei: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("bei: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
