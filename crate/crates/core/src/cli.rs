//! Command-line front end. Reports are single-line `key=value` records;
//! graphs and colourings use the file formats of [`crate::graph`].
//!
//! Exit codes: 0 success, 1 a "no" verdict (for example a colouring that is
//! not rainbow), 2 usage, input or search errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::enumerate::{enumerate_threshold, sequence_string, EnumerateError};
use crate::graph::{diameter, EdgeColouring, Graph, GraphError};
use crate::kraft::{build_prefix_code, codeword_string, KraftError, KraftSum};
use crate::rainbow::{rc_exact_with_witness, rc_lower_bound, verify_rainbow, RainbowError, DEFAULT_BUDGET};
use crate::recognize::{is_chordal, is_threshold, split_partition};
use crate::reduction::{
    extract_colouring, lift_colouring, reduce_to_chordal, reduce_to_split, GadgetLayout, HColouring, Hypergraph3,
    ReductionError,
};
use crate::split::{colour_split, split_rc_bounds, SplitError};
use crate::threshold::{colour_threshold, threshold_rc, ThresholdError};

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow colouring of split and threshold graphs")]
struct Cli {
    /// Write the main output (colouring, graph prefix) here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Cap on k^m states for exhaustive searches.
    #[arg(long, global = true, env = "RAINBOW_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Suppress report lines.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Split,
    Chordal,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether the graph is split, threshold and chordal.
    Recognize { graph: PathBuf },
    /// Rainbow connection number by exhaustive search.
    RcExact { graph: PathBuf },
    /// Check that a colouring is rainbow.
    Verify { graph: PathBuf, colouring: PathBuf },
    /// Colour a split graph with at most rc + 1 colours.
    ColourSplit { graph: PathBuf },
    /// Optimally colour a threshold graph.
    ColourThreshold { graph: PathBuf },
    /// Build the hardness gadget of a 3-uniform hypergraph.
    Reduce {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        k: usize,
        hypergraph: PathBuf,
    },
    /// Turn a hypergraph 3-colouring into a rainbow colouring of the gadget.
    Lift { roles: PathBuf, hcolouring: PathBuf },
    /// Read a hypergraph 3-colouring off a rainbow colouring of the gadget.
    Extract { roles: PathBuf, colouring: PathBuf },
    /// Kraft sum and prefix code for non-decreasing codeword lengths.
    Kraft {
        #[arg(required = true)]
        lengths: Vec<usize>,
    },
    /// List connected threshold graphs by creation sequence.
    EnumerateThreshold { max_n: usize },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Kraft(#[from] KraftError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("k must be 3 for the split target")]
    SplitK,
    #[error("could not write output: {0}")]
    Write(#[from] io::Error),
}

enum Verdict {
    Yes,
    No,
}

struct Context<'a> {
    out: &'a mut dyn Write,
    output: Option<PathBuf>,
    budget: u64,
    quiet: bool,
}

impl Context<'_> {
    fn report(&mut self, line: impl std::fmt::Display) -> Result<(), CliError> {
        if !self.quiet {
            writeln!(self.out, "{line}")?;
        }
        Ok(())
    }

    /// Writes `text` to `--output` if given, otherwise to stdout.
    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        match &self.output {
            Some(path) => write_file(path, text),
            None => Ok(self.out.write_all(text.as_bytes())?),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    Graph::parse_edge_list(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn read_layout(path: &Path) -> Result<GadgetLayout, CliError> {
    Ok(GadgetLayout::parse_role_map(&read(path)?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn one_based(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    let mut ctx = Context {
        out,
        output: cli.output,
        budget: cli.budget,
        quiet: cli.quiet,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(Verdict::Yes) => 0,
        Ok(Verdict::No) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, ctx: &mut Context<'_>) -> Result<Verdict, CliError> {
    match command {
        Command::Recognize { graph } => recognize(&read_graph(&graph)?, ctx),
        Command::RcExact { graph } => {
            let g = read_graph(&graph)?;
            let lower = rc_lower_bound(&g)?;
            let (rc, witness) = rc_exact_with_witness(&g, ctx.budget)?;
            ctx.report(format!("rc={rc} lower_bound={lower}"))?;
            if let Some(col) = witness {
                ctx.emit(&col.to_file(&g))?;
            }
            Ok(Verdict::Yes)
        }
        Command::Verify { graph, colouring } => {
            let g = read_graph(&graph)?;
            let col = EdgeColouring::parse_for(&g, &read(&colouring)?).map_err(|source| CliError::Input {
                path: colouring.clone(),
                source,
            })?;
            let verdict = verify_rainbow(&g, &col)?;
            match verdict.witness_failure {
                None => {
                    ctx.report(format!(
                        "rainbow=yes pairs={} max_depth={}",
                        verdict.paths_checked, verdict.max_depth
                    ))?;
                    Ok(Verdict::Yes)
                }
                Some((u, v)) => {
                    ctx.report(format!("rainbow=no witness={},{}", u + 1, v + 1))?;
                    Ok(Verdict::No)
                }
            }
        }
        Command::ColourSplit { graph } => {
            let g = read_graph(&graph)?;
            let part = split_partition(&g).ok_or(SplitError::NotSplit)?;
            let report = split_rc_bounds(&g)?;
            let col = colour_split(&g, &part)?;
            ctx.report(report)?;
            ctx.emit(&col.to_file(&g))?;
            Ok(Verdict::Yes)
        }
        Command::ColourThreshold { graph } => {
            let g = read_graph(&graph)?;
            let (col, report) = colour_threshold(&g)?;
            ctx.report(report)?;
            ctx.emit(&col.to_file(&g))?;
            Ok(Verdict::Yes)
        }
        Command::Reduce { target, k, hypergraph } => {
            let h = Hypergraph3::parse(&read(&hypergraph)?)?;
            let layout = match target {
                Target::Split if k != 3 => return Err(CliError::SplitK),
                Target::Split => reduce_to_split(&h),
                Target::Chordal => reduce_to_chordal(&h, k)?,
            };
            let prefix = ctx.output.clone().unwrap_or_else(|| hypergraph.with_extension(""));
            let graph_path = prefix.with_extension("graph");
            let roles_path = prefix.with_extension("roles");
            write_file(&graph_path, &layout.graph().to_edge_list())?;
            write_file(&roles_path, &layout.to_role_map())?;
            let g = layout.graph();
            ctx.report(format!(
                "graph={} roles={} n={} m={} k={} diameter={}",
                graph_path.display(),
                roles_path.display(),
                g.n(),
                g.m(),
                layout.k(),
                diameter(g)?
            ))?;
            Ok(Verdict::Yes)
        }
        Command::Lift { roles, hcolouring } => {
            let layout = read_layout(&roles)?;
            let mut c_h = HColouring::parse(&read(&hcolouring)?)?;
            // a colouring of H' alone is completed on the trailing K_5^3
            if c_h.len() + 5 == layout.hypergraph().n() {
                c_h = c_h.extend_with_k5_3();
            }
            let col = lift_colouring(&layout, &c_h)?;
            ctx.report(format!(
                "colours={} n={} m={}",
                col.colour_count(),
                layout.graph().n(),
                layout.graph().m()
            ))?;
            ctx.emit(&col.to_file(layout.graph()))?;
            Ok(Verdict::Yes)
        }
        Command::Extract { roles, colouring } => {
            let layout = read_layout(&roles)?;
            let col =
                EdgeColouring::parse_for(layout.graph(), &read(&colouring)?).map_err(|source| CliError::Input {
                    path: colouring.clone(),
                    source,
                })?;
            match extract_colouring(&layout, &col) {
                Ok(c_h) => {
                    ctx.report(format!("proper=yes n={}", c_h.len()))?;
                    ctx.emit(&c_h.to_text())?;
                    Ok(Verdict::Yes)
                }
                Err(ReductionError::NotRainbow(u, v)) => {
                    ctx.report(format!("rainbow=no witness={},{}", u + 1, v + 1))?;
                    Ok(Verdict::No)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Kraft { lengths } => {
            let sum = KraftSum::of(&lengths)?;
            if !sum.is_satisfied() {
                ctx.report(format!("sum={sum} violated"))?;
                return Ok(Verdict::No);
            }
            let code = build_prefix_code(&lengths)?;
            let words: Vec<String> = code.codewords().iter().map(|c| codeword_string(c)).collect();
            ctx.report(format!("sum={sum} ok"))?;
            ctx.report(format!("codewords={}", words.join(",")))?;
            Ok(Verdict::Yes)
        }
        Command::EnumerateThreshold { max_n } => {
            let mut text = String::new();
            for (seq, g) in enumerate_threshold(max_n)? {
                let rc = threshold_rc(&g)?.rc;
                text.push_str(&format!(
                    "n={} sequence={} m={} rc={}\n",
                    g.n(),
                    sequence_string(&seq),
                    g.m(),
                    rc
                ));
            }
            ctx.emit(&text)?;
            Ok(Verdict::Yes)
        }
    }
}

fn recognize(g: &Graph, ctx: &mut Context<'_>) -> Result<Verdict, CliError> {
    let split = split_partition(g);
    ctx.report(format!("split: {}", yes_no(split.is_some())))?;
    if let Some(part) = &split {
        ctx.report(format!(
            "clique={} independent={}",
            one_based(part.clique()),
            one_based(part.independent())
        ))?;
    }
    let threshold = is_threshold(g);
    ctx.report(format!("threshold: {}", yes_no(threshold.is_some())))?;
    if let Some(seq) = &threshold {
        let order: Vec<usize> = seq.steps.iter().map(|&(v, _)| v).collect();
        let kinds: String = seq.steps.iter().map(|&(_, a)| a.symbol()).collect();
        ctx.report(format!("creation={kinds} order={}", one_based(&order)))?;
    }
    ctx.report(format!("chordal: {}", yes_no(is_chordal(g))))?;
    Ok(Verdict::Yes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("rainbow").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn kraft_lines() {
        let (code, out, _) = run_args(&["kraft", "1", "2", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "sum=1/1 ok\ncodewords=0,10,11\n");
        let (code, out, _) = run_args(&["kraft", "1", "1", "2"]);
        assert_eq!((code, out.as_str()), (1, "sum=5/4 violated\n"));
        let (code, _, err) = run_args(&["kraft", "2", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("non-decreasing"));
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("colour-threshold"));
        let (code, _, err) = run_args(&["recognize", "/nonexistent/g.graph"]);
        assert_eq!(code, 2);
        assert!(err.contains("/nonexistent/g.graph"));
    }

    #[test]
    fn enumerate_small() {
        let (code, out, _) = run_args(&["enumerate-threshold", "3"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "n=2 sequence=D m=1 rc=1\nn=3 sequence=ID m=2 rc=2\nn=3 sequence=DD m=3 rc=1\n"
        );
    }
}
