//! File-based front end for the digraph coloring toolkit.
//!
//! Subcommands: `stats` (degree and pattern report), `color` (run a coloring
//! algorithm and self-verify), `verify` (check a coloring file), `exact`
//! (exhaustive chromatic number on small inputs), and `gen` (write a
//! generated digraph). Digraphs travel as edge-list files, colorings as
//! "v c" files; see the formats module.
//!
//! Exit codes: 0 success, 1 verification or bound failure, 2 precondition
//! violation, 3 parse or file error. With `--json` the machine-readable
//! report goes to stdout; human-readable errors always go to stderr.
//! Fractional quantities are printed exactly (`deltabar=5/2`, and in JSON as
//! a `[numerator, 2]` pair), never as floats.

mod formats;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::json;

use dichroma::{
    avoids_f, avoids_g, bounded_coloring, directed_cycle, exact_chi_m_with_cap,
    fracdelta_coloring, greedy_bound, greedy_coloring, improved_acyclic_coloring,
    random_functional, random_oriented, random_regular_digraph, rotational_tournament,
    verify_coloring, Coloring, Digraph, Error, HalfInt, Verdict, EXACT_SIZE_CAP,
};

#[derive(Parser)]
#[command(name = "dichroma", version, about = "Digraph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print size, degree, orientation, and pattern statistics.
    Stats {
        input: PathBuf,
        /// Emit the report as a JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Color a digraph, self-verify the result, and report the bound.
    Color {
        input: PathBuf,
        /// Degeneracy threshold m of the color classes.
        #[arg(long)]
        m: usize,
        /// One of greedy, fracdelta, improved, bounded:K.
        #[arg(long)]
        algo: Algo,
        /// Write the coloring to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the summary as a JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Check a coloring file against a digraph.
    Verify {
        input: PathBuf,
        coloring: PathBuf,
        /// Degeneracy threshold m of the color classes.
        #[arg(long)]
        m: usize,
    },
    /// Exhaustively compute the exact chromatic number chi_m.
    Exact {
        input: PathBuf,
        /// Degeneracy threshold m of the color classes.
        #[arg(long)]
        m: usize,
        /// Refuse inputs with more vertices than this.
        #[arg(long, default_value_t = EXACT_SIZE_CAP)]
        max_n: usize,
        /// Write the witness coloring to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a digraph and write it as an edge-list file.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Seed for the randomized families.
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when absent).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Directed cycle on n vertices.
    Cycle { n: usize },
    /// Rotational tournament on an odd number of vertices.
    Tournament { n: usize },
    /// Random oriented digraph with max average degree capped at deltabar.
    Oriented {
        n: usize,
        /// Degree cap, an integer or an exact half like 5/2.
        #[arg(value_parser = parse_halfint)]
        deltabar: HalfInt,
    },
    /// Random digraph with every out-degree 1 and no digons.
    Functional { n: usize },
    /// Random digraph with all in- and out-degrees equal to d.
    Regular { n: usize, d: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Algo {
    Greedy,
    FracDelta,
    Improved,
    Bounded(usize),
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Algo, String> {
        match s {
            "greedy" => Ok(Algo::Greedy),
            "fracdelta" => Ok(Algo::FracDelta),
            "improved" => Ok(Algo::Improved),
            _ => match s.strip_prefix("bounded:") {
                Some(k) => k
                    .parse()
                    .map(Algo::Bounded)
                    .map_err(|_| format!("bad palette size in '{s}'")),
                None => Err(format!(
                    "unknown algorithm '{s}', expected greedy, fracdelta, improved, or bounded:K"
                )),
            },
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algo::Greedy => write!(f, "greedy"),
            Algo::FracDelta => write!(f, "fracdelta"),
            Algo::Improved => write!(f, "improved"),
            Algo::Bounded(k) => write!(f, "bounded:{k}"),
        }
    }
}

fn parse_halfint(s: &str) -> Result<HalfInt, String> {
    let parsed = match s.strip_suffix("/2") {
        Some(num) => num.parse().map(HalfInt::from_twice),
        None => s.parse().map(HalfInt::from_int),
    };
    parsed.map_err(|_| format!("expected an integer or 'k/2', got '{s}'"))
}

/// A failed run: exit code, stderr message, and the JSON payload to put on
/// stdout when the subcommand ran in JSON mode.
struct Failure {
    code: i32,
    message: String,
    json: Option<serde_json::Value>,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into(), json: None }
    }
}

/// Maps a library error to the precondition exit code, shaping pattern
/// witnesses as "contains G2 at {0,1,2,3}".
fn precondition(e: Error, json_mode: bool) -> Failure {
    let (message, payload) = match &e {
        Error::PatternFound { id, witness } => {
            let list: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            let message = format!("contains {id} at {{{}}}", list.join(","));
            let payload = json!({
                "error": message,
                "pattern": id.to_string(),
                "witness": witness.to_vec(),
            });
            (message, payload)
        }
        _ => {
            let message = e.to_string();
            let payload = json!({ "error": message });
            (message, payload)
        }
    };
    Failure { code: 2, message, json: json_mode.then_some(payload) }
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(3, format!("cannot read {}: {e}", path.display())))?;
    formats::parse_edge_list(&text)
        .map_err(|e| Failure::new(3, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::new(3, format!("cannot write {}: {e}", path.display())))
}

fn exact_pair(x: HalfInt) -> serde_json::Value {
    json!([x.twice(), 2])
}

fn cmd_stats(input: &Path, json_mode: bool) -> Result<(), Failure> {
    let d = read_digraph(input)?;
    let stats = d.degree_stats();
    let geom = (stats.max_geom_sq as f64).sqrt();
    let components = d.weak_components().len();
    if json_mode {
        let report = json!({
            "n": d.vertex_count(),
            "m": d.edge_count(),
            "deltabar": exact_pair(stats.max_avg),
            "geomsq": stats.max_geom_sq,
            "geom": geom,
            "oriented": d.is_oriented(),
            "components": components,
            "avoidsF": avoids_f(&d),
            "avoidsG": avoids_g(&d),
        });
        println!("{report}");
    } else {
        println!(
            "n={} m={} deltabar={} geomsq={} geom={:.3} oriented={} components={} avoidsF={} avoidsG={}",
            d.vertex_count(),
            d.edge_count(),
            stats.max_avg,
            stats.max_geom_sq,
            geom,
            d.is_oriented(),
            components,
            avoids_f(&d),
            avoids_g(&d),
        );
    }
    Ok(())
}

fn run_algo(d: &Digraph, m: usize, algo: &Algo, json_mode: bool) -> Result<(Coloring, usize), Failure> {
    let pre = |e| precondition(e, json_mode);
    match algo {
        Algo::Greedy => {
            let bound = greedy_bound(d.max_avg_degree(), m).map_err(pre)?;
            Ok((greedy_coloring(d, m).map_err(pre)?, bound))
        }
        Algo::FracDelta => {
            let (c, plan) = fracdelta_coloring(d, m).map_err(pre)?;
            Ok((c, plan.bound))
        }
        Algo::Improved => {
            if m != 1 {
                return Err(Failure {
                    code: 2,
                    message: format!("algorithm 'improved' requires --m 1, got {m}"),
                    json: json_mode
                        .then(|| json!({ "error": "algorithm 'improved' requires --m 1" })),
                });
            }
            let (c, plan) = improved_acyclic_coloring(d).map_err(pre)?;
            Ok((c, plan.bound))
        }
        Algo::Bounded(k) => Ok((bounded_coloring(d, m, *k).map_err(pre)?, *k)),
    }
}

fn cmd_color(
    input: &Path,
    m: usize,
    algo: &Algo,
    out: Option<&Path>,
    json_mode: bool,
) -> Result<(), Failure> {
    let d = read_digraph(input)?;
    let (coloring, bound) = run_algo(&d, m, algo, json_mode)?;
    let verified = verify_coloring(&d, &coloring, m)
        .map_err(|e| precondition(e, json_mode))?
        .is_valid();
    let colors = coloring.num_colors();
    if let Some(path) = out {
        let text = formats::emit_coloring(&coloring, m, &algo.to_string(), bound, None);
        write_file(path, &text)?;
    }
    if json_mode {
        let summary = json!({
            "colors": colors,
            "bound": bound,
            "verified": verified,
            "m": m,
            "algo": algo.to_string(),
            "deltabar": exact_pair(d.max_avg_degree()),
        });
        println!("{summary}");
    } else {
        println!("colors = {colors}, bound = {bound}, verified = {verified}");
    }
    if !verified {
        return Err(Failure::new(1, "self-verification failed"));
    }
    if colors > bound {
        return Err(Failure::new(1, format!("used {colors} colors, bound is {bound}")));
    }
    Ok(())
}

fn cmd_verify(input: &Path, coloring: &Path, m: usize) -> Result<(), Failure> {
    let d = read_digraph(input)?;
    let text = fs::read_to_string(coloring)
        .map_err(|e| Failure::new(3, format!("cannot read {}: {e}", coloring.display())))?;
    let c = formats::parse_coloring(&text, d.vertex_count())
        .map_err(|e| Failure::new(3, format!("{}: {e}", coloring.display())))?;
    match verify_coloring(&d, &c, m).map_err(|e| precondition(e, false))? {
        Verdict::Valid => {
            println!("pass");
            Ok(())
        }
        Verdict::Invalid { class, core } => {
            let list: Vec<String> = core.iter().map(|v| v.to_string()).collect();
            println!("fail, witness class {class} core {{{}}}", list.join(","));
            Err(Failure::new(1, format!("class {class} is not weakly {m}-degenerate")))
        }
    }
}

fn cmd_exact(input: &Path, m: usize, max_n: usize, out: Option<&Path>) -> Result<(), Failure> {
    let d = read_digraph(input)?;
    let result = exact_chi_m_with_cap(&d, m, max_n).map_err(|e| precondition(e, false))?;
    println!("chi_{m} = {}", result.chi);
    if let Some(path) = out {
        let text = formats::emit_coloring(&result.witness, m, "exact", result.chi, None);
        write_file(path, &text)?;
    }
    Ok(())
}

fn cmd_gen(family: &Family, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let pre = |e| precondition(e, false);
    let d = match *family {
        Family::Cycle { n } => directed_cycle(n).map_err(pre)?,
        Family::Tournament { n } => rotational_tournament(n).map_err(pre)?,
        Family::Oriented { n, deltabar } => random_oriented(n, deltabar, seed),
        Family::Functional { n } => random_functional(n, seed).map_err(pre)?,
        Family::Regular { n, d } => random_regular_digraph(n, d, seed).map_err(pre)?,
    };
    let text = formats::emit_edge_list(&d);
    match out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Stats { input, json } => cmd_stats(input, *json),
        Command::Color { input, m, algo, out, json } => {
            cmd_color(input, *m, algo, out.as_deref(), *json)
        }
        Command::Verify { input, coloring, m } => cmd_verify(input, coloring, *m),
        Command::Exact { input, m, max_n, out } => cmd_exact(input, *m, *max_n, out.as_deref()),
        Command::Gen { family, seed, out } => cmd_gen(family, *seed, out.as_deref()),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(failure) = run(&cli.command) {
        if let Some(payload) = failure.json {
            println!("{payload}");
        }
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}
