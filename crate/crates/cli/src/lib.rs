//! Command-line frontend for `polyaut`.
//!
//! Exit codes: 0 on success, 2 when `classify` has no applicable rule,
//! 64 for malformed input (arguments, polynomial text, JSON), 65 when the
//! input is well formed but violates a mathematical precondition, 66 when an
//! input file cannot be read, and 1 when `nagata --verify-invariant` fails.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use polyaut::automorphism::{keystone_invariant_holds, twisted_iterate};
use polyaut::classifier::{classify, Status};
use polyaut::json::{MultidegreeDoc, PolyMapDoc, ReductionDoc, VerdictDoc};
use polyaut::poly::{parse_with, poisson_degree};
use polyaut::reduction::{default_bound, find_elementary_reduction};
use polyaut::PolyMap;
use serde_json::json;

pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "polyaut", version, about = "Polynomial automorphisms of affine 3-space")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a multidegree is attainable by a tame automorphism.
    Classify { d1: u64, d2: u64, d3: u64 },
    /// Print an explicit tame map with the given multidegree.
    Witness { d1: u64, d2: u64, d3: u64 },
    /// Iterate the twisted Nagata map (x,y,z) -> (z,y,x) after Nagata's map.
    Nagata {
        #[arg(long)]
        power: u32,
        /// Check g^2 + h*f = y^2 + z*x on the result.
        #[arg(long)]
        verify_invariant: bool,
    },
    /// Multidegree of a map given as a JSON document (`-` for stdin).
    Mdeg {
        #[arg(long)]
        map: String,
    },
    /// Search for an elementary reduction of a map.
    Reduce {
        #[arg(long)]
        map: String,
        /// Largest degree of g(F_a, F_b) considered; defaults to twice the
        /// largest component degree.
        #[arg(long)]
        max_deg: Option<u64>,
    },
    /// Degree of the Poisson bracket of two polynomials.
    Poisson {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Variable names, comma separated.
        #[arg(long, default_value = "x,y,z", value_delimiter = ',')]
        vars: Vec<String>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<polyaut::Error> for Failure {
    fn from(e: polyaut::Error) -> Self {
        let code = match e {
            polyaut::Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure::new(code, e.to_string())
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::new(1, format!("cannot write output: {e}")))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize")
}

fn read_map(path: &str, stdin: &mut dyn Read) -> Result<PolyMap, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_NO_INPUT, format!("cannot read stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(EXIT_NO_INPUT, format!("cannot read {path}: {e}")))?
    };
    let doc: PolyMapDoc = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("invalid map document: {e}")))?;
    Ok(doc.to_map()?)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Classify { d1, d2, d3 } => {
            let v = classify(*d1, *d2, *d3)?;
            if cli.json {
                emit(out, to_json(&VerdictDoc::from(&v)))?;
            } else {
                let [a, b, c] = v.sorted_input;
                emit(out, format!("({a}, {b}, {c}): {} [{}] {}", v.status, v.rule, v.citation))?;
                if let Some(w) = &v.witness {
                    emit(out, format!("witness: {}", w.map))?;
                }
            }
            Ok(if v.status == Status::Unknown { EXIT_UNKNOWN } else { 0 })
        }
        Command::Witness { d1, d2, d3 } => {
            let v = classify(*d1, *d2, *d3)?;
            match &v.witness {
                Some(w) => {
                    emit(out, to_json(&PolyMapDoc::from_map(&w.map)))?;
                    Ok(0)
                }
                None => Err(Failure::new(
                    EXIT_DATA,
                    format!("no witness: classification is {} [{}] {}", v.status, v.rule, v.citation),
                )),
            }
        }
        Command::Nagata { power, verify_invariant } => {
            let map = twisted_iterate(*power);
            let mdeg = map.multidegree();
            let invariant = verify_invariant.then(|| keystone_invariant_holds(&map));
            if cli.json {
                let doc = json!({
                    "power": power,
                    "map": PolyMapDoc::from_map(&map),
                    "multidegree": MultidegreeDoc::from(&mdeg).multidegree,
                    "invariant": invariant,
                });
                emit(out, doc)?;
            } else {
                emit(out, to_json(&PolyMapDoc::from_map(&map)))?;
                emit(out, format!("multidegree: {mdeg}"))?;
                if let Some(ok) = invariant {
                    emit(out, format!("invariant: {}", if ok { "OK" } else { "FAILED" }))?;
                }
            }
            Ok(if invariant == Some(false) { 1 } else { 0 })
        }
        Command::Mdeg { map } => {
            let map = read_map(map, stdin)?;
            let mdeg = map.multidegree();
            if cli.json {
                emit(out, to_json(&MultidegreeDoc::from(&mdeg)))?;
            } else {
                emit(out, mdeg)?;
            }
            Ok(0)
        }
        Command::Reduce { map, max_deg } => {
            let map = read_map(map, stdin)?;
            let bound = max_deg.unwrap_or_else(|| default_bound(&map));
            let found = find_elementary_reduction(&map, bound)?;
            let doc = found.as_ref().map(|r| ReductionDoc::new(r, &map));
            match (cli.json, doc) {
                (true, doc) => emit(out, json!({ "bound": bound, "reduction": doc }))?,
                (false, Some(doc)) => emit(out, to_json(&doc))?,
                (false, None) => emit(out, format!("none found within bound {bound}"))?,
            }
            Ok(0)
        }
        Command::Poisson { f, g, vars } => {
            let f = parse_with(f, vars)?;
            let g = parse_with(g, vars)?;
            let d = poisson_degree(&f, &g)?;
            if cli.json {
                emit(out, json!({ "poisson_degree": d }))?;
            } else {
                emit(out, d)?;
            }
            Ok(0)
        }
    }
}
