//! Command-line front end.
//!
//! Exit codes: 0 success or true, 1 checked-false (or a witness below the
//! closed-form minimum), 2 usage or domain error.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::connectivity::{block_decomposition, is_k_connected};
use crate::constructions::{build_extremal, harary, search_gadget, Context, GadgetCatalog, GadgetName};
use crate::error::Error;
use crate::formulas::{self, conjecture1_bound, conjecture1_satisfied};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, serialize_graph6};
use crate::oracle::{lemma1_scan, verify_minimality, VerifyOptions};
use crate::properties::{is_forest, is_locally_foresty, is_locally_nonforesty};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nonforesty", version, about = "Minimum-size k-connected locally nonforesty graphs")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print f(k, n), or a TSV table over a range of orders.
    Formula {
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        n: Option<usize>,
        /// Inclusive range A:B.
        #[arg(long, value_parser = parse_range)]
        range: Option<(usize, usize)>,
    },
    /// Build an extremal graph (k in {1, 2, 4}) or a Harary graph (k >= 6).
    Build {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Test a property of each graph6 line read from FILE or standard input.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        /// Connectivity for `k-connected`.
        #[arg(long)]
        k: Option<usize>,
        /// Input file; `-` or absent reads standard input.
        file: Option<PathBuf>,
    },
    /// Exhaustively certify that no qualifying graph has at most BUDGET edges.
    VerifyMin {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Defaults to f(k, n) - 1.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Allow orders above the certified range.
        #[arg(long)]
        uncertified: bool,
    },
    /// Count 4-regular graphs of order N whose local subgraphs are all C3 + K1.
    Lemma1 {
        #[arg(long)]
        n: usize,
    },
    /// Print blocks, cut vertices and block-order counts of each input graph.
    Blocks { file: Option<PathBuf> },
    /// Search for a gadget and print its catalog stanza.
    Gadget {
        #[arg(long, required_unless_present = "all")]
        name: Option<String>,
        #[arg(long, required_unless_present = "all")]
        context: Option<String>,
        /// Print the full catalog instead.
        #[arg(long, conflicts_with_all = ["name", "context"])]
        all: bool,
    },
    /// Compare a constructed graph against the bound 7(n - 1)/3.
    Conjecture1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    LocallyNonforesty,
    LocallyForesty,
    Forest,
    KConnected,
    Conjecture1,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected A:B")?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(config.command, input, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_graphs(file: Option<PathBuf>, input: &mut dyn BufRead) -> Result<Vec<Graph>, Failure> {
    let mut text = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(&p)?,
        _ => {
            input.read_to_string(&mut text)?;
        }
    }
    let graphs =
        text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect::<Result<Vec<_>, _>>()?;
    Ok(graphs)
}

fn dispatch(cmd: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Formula { k, n, range } => {
            if let Some((a, b)) = range {
                writeln!(out, "n\tf\tregime")?;
                for n in a..=b {
                    let r = formulas::f(k, n)?;
                    writeln!(out, "{}\t{}\t{}", n, r.value, r.regime)?;
                }
            } else {
                let n = n.expect("clap enforces --n or --range");
                writeln!(out, "{}", formulas::f(k, n)?.value)?;
            }
            Ok(EXIT_OK)
        }
        Command::Build { k, n, format } => {
            let g = match k {
                1 | 2 | 4 => build_extremal(k, n)?,
                3 => return Err(Error::UnsupportedK3.into()),
                5 => return Err(Failure::Usage("k = 5 constructions are not provided".into())),
                0 => return Err(Error::UnsupportedK(0).into()),
                _ => harary(k, n)?,
            };
            match format {
                Format::Graph6 => writeln!(out, "{}", serialize_graph6(&g))?,
                Format::Edgelist => write!(out, "{}", g.to_edge_list())?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { property, k, file } => {
            if property == Property::KConnected && k.is_none() {
                return Err(Failure::Usage("--property k-connected requires --k".into()));
            }
            let graphs = read_graphs(file, input)?;
            let mut all = true;
            for g in &graphs {
                let holds = match property {
                    Property::LocallyNonforesty => is_locally_nonforesty(g),
                    Property::LocallyForesty => is_locally_foresty(g),
                    Property::Forest => is_forest(g),
                    Property::KConnected => is_k_connected(g, k.expect("checked above")),
                    Property::Conjecture1 => conjecture1_satisfied(g),
                };
                all &= holds;
                writeln!(out, "{holds}")?;
            }
            Ok(if all { EXIT_OK } else { EXIT_FALSE })
        }
        Command::VerifyMin { k, n, budget, jobs, uncertified } => {
            let budget = match budget {
                Some(b) => b,
                None => formulas::f(k, n)?.value - 1,
            };
            let opts = VerifyOptions { jobs, allow_uncertified_order: uncertified, cancel: None };
            let report = verify_minimality(k, n, budget, &opts)?;
            write!(out, "{}", report.to_key_values())?;
            if report.contradicts_formula() {
                writeln!(out, "CONTRADICTION: witness smaller than the closed-form minimum")?;
                return Ok(EXIT_FALSE);
            }
            Ok(EXIT_OK)
        }
        Command::Lemma1 { n } => {
            writeln!(out, "{}", lemma1_scan(n)?)?;
            Ok(EXIT_OK)
        }
        Command::Blocks { file } => {
            let graphs = read_graphs(file, input)?;
            for (i, g) in graphs.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", block_decomposition(g)?.to_tsv())?;
            }
            Ok(EXIT_OK)
        }
        Command::Gadget { name, context, all } => {
            if all {
                write!(out, "{}", GadgetCatalog::search_all()?.to_text())?;
            } else {
                let name: GadgetName = name.expect("clap enforces --name").parse()?;
                let context: Context = context.expect("clap enforces --context").parse()?;
                write!(out, "{}", search_gadget(name, context)?.to_stanza())?;
            }
            Ok(EXIT_OK)
        }
        Command::Conjecture1 { k, n } => {
            let g = match k {
                1 | 2 | 4 => build_extremal(k, n)?,
                k if k >= 6 => harary(k, n)?,
                3 => return Err(Error::UnsupportedK3.into()),
                _ => return Err(Error::UnsupportedK(k).into()),
            };
            let three = is_k_connected(&g, 3);
            let lnf = is_locally_nonforesty(&g);
            let satisfied = conjecture1_satisfied(&g);
            writeln!(out, "n: {}", g.order())?;
            writeln!(out, "m: {}", g.size())?;
            writeln!(out, "bound: {}", conjecture1_bound(g.order()))?;
            writeln!(out, "three_connected: {three}")?;
            writeln!(out, "locally_nonforesty: {lnf}")?;
            writeln!(out, "satisfied: {satisfied}")?;
            let verdict = match (three && lnf, satisfied) {
                (true, false) => "conjecture violated",
                (true, true) => "conjecture holds for this graph",
                (false, _) => "not applicable: graph is not a 3-connected locally nonforesty graph",
            };
            writeln!(out, "{verdict}")?;
            Ok(EXIT_OK)
        }
    }
}
