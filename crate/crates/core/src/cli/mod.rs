//! The `poised` command line tool.
//!
//! Every subcommand reads and writes JSON with rationals as strings. Exit
//! code 1 means bad input or a violated precondition, exit code 2 means a
//! theorem check failed on the given instance.

mod files;
mod svg;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::construct::{gen_berzolari_radon, gen_defect_config, gen_random_poised};
use crate::curves::{d_star, extend_on_curve, uniqueness_threshold, CurveSampler};
use crate::error::{Error, Result};
use crate::json::ScalarRepr;
use crate::nodes::{
    extend_to_poised, fundamental_polynomial, hilbert_function, is_n_independent, is_n_poised, vanishing_basis, Node,
};
use crate::theorems::{characterize_defect, combine_two_curves, curves_through, verify_line_usage, verify_uniqueness};
use crate::{QNode, QNodeSet, Rational};

pub use files::{CurveFile, NodeSetFile};
use files::{read_curve, read_nodes, PolyOut};

#[derive(Debug, Parser)]
#[command(name = "poised", version, about = "Exact interpolation-theoretic computations on planar node sets")]
pub struct Cli {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide n-independence and report the Hilbert n-function.
    Indep {
        #[arg(short)]
        n: Option<usize>,
        input: Option<PathBuf>,
    },
    /// Decide n-poisedness.
    Poised {
        #[arg(short)]
        n: Option<usize>,
        input: Option<PathBuf>,
    },
    /// Basis of the polynomials of degree at most n vanishing on the nodes.
    Basis {
        #[arg(short)]
        n: Option<usize>,
        input: Option<PathBuf>,
    },
    /// Fundamental polynomial of one node.
    Fund {
        #[arg(short)]
        n: Option<usize>,
        #[arg(long)]
        node: usize,
        input: Option<PathBuf>,
    },
    /// d(n, k) and the uniqueness threshold K(n, k).
    Dstar {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Generate a node set.
    Gen {
        kind: GenKind,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Extend an independent set to a poised one, or to a maximal set on a curve.
    Extend {
        #[arg(short)]
        n: Option<usize>,
        #[arg(long)]
        on_curve: Option<PathBuf>,
        input: Option<PathBuf>,
    },
    /// Check a theorem on a node set.
    Verify {
        what: VerifyKind,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        k: Option<usize>,
        /// Extra point "x,y" for the two-curve combination.
        #[arg(long)]
        at: Option<String>,
        input: Option<PathBuf>,
    },
    /// Draw the nodes and curves as SVG.
    Render {
        input: Option<PathBuf>,
        #[arg(long)]
        curve: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Br,
    Poised,
    Defect,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyKind {
    Uniqueness,
    Defect,
    Lineusage,
    Twocurves,
}

/// Outcome of a subcommand: text for the output and whether a theorem
/// check failed.
struct Output {
    text: String,
    violated: bool,
}

impl Output {
    fn json(value: &impl Serialize) -> Self {
        let mut text = serde_json::to_string_pretty(value).expect("serializable output");
        text.push('\n');
        Output { text, violated: false }
    }
}

#[derive(Serialize)]
struct Report {
    theorem: &'static str,
    params: serde_json::Value,
    dim: Option<usize>,
    outlier_index: Option<usize>,
    mu: Option<PolyOut>,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<PolyOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lines: Option<Vec<serde_json::Value>>,
}

fn degree(flag: Option<usize>, file: &NodeSetFile) -> Result<usize> {
    flag.or(file.n)
        .ok_or_else(|| Error::Parse("degree n missing: pass -n or set \"n\" in the input".into()))
}

fn meta_k(file: &NodeSetFile) -> Option<usize> {
    file.meta.as_ref()?.get("k")?.as_u64().map(|k| k as usize)
}

fn parse_point(text: &str) -> Result<QNode> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("point {text:?} is not of the form x,y")))?;
    let x: Rational = ScalarRepr::Text(x.to_string()).parse()?;
    let y: Rational = ScalarRepr::Text(y.to_string()).parse()?;
    Ok(Node::new(x, y))
}

fn nodes_out(n: usize, nodes: &QNodeSet, meta: Option<serde_json::Value>) -> Output {
    Output::json(&NodeSetFile { n: Some(n), nodes: nodes.clone(), meta })
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Indep { n, input } => {
            let file = read_nodes(input.as_deref())?;
            let n = degree(n, &file)?;
            Ok(Output::json(&json!({
                "independent": is_n_independent(&file.nodes, n),
                "hilbert": hilbert_function(&file.nodes, n),
            })))
        }
        Command::Poised { n, input } => {
            let file = read_nodes(input.as_deref())?;
            let n = degree(n, &file)?;
            Ok(Output::json(&json!({ "poised": is_n_poised(&file.nodes, n) })))
        }
        Command::Basis { n, input } => {
            let file = read_nodes(input.as_deref())?;
            let n = degree(n, &file)?;
            let space = vanishing_basis(&file.nodes, n);
            let basis: Vec<PolyOut> = space.basis.into_iter().map(PolyOut::new).collect();
            Ok(Output::json(&json!({ "n": n, "dim": basis.len(), "basis": basis })))
        }
        Command::Fund { n, node, input } => {
            let file = read_nodes(input.as_deref())?;
            let n = degree(n, &file)?;
            let a = file
                .nodes
                .nodes()
                .get(node)
                .ok_or_else(|| Error::Precondition(format!("node index {node} out of range")))?;
            let p = fundamental_polynomial(a, &file.nodes, n)?.map(PolyOut::new);
            Ok(Output::json(&json!({ "node": node, "poly": p })))
        }
        Command::Dstar { n, k } => Ok(Output::json(&json!({
            "d": d_star(n, k)?,
            "K": uniqueness_threshold(n, k)?,
        }))),
        Command::Gen { kind, n, k, seed } => match kind {
            GenKind::Br => {
                let br = gen_berzolari_radon(n, seed)?;
                let meta = json!({
                    "generator": "br", "seed": seed, "n": n,
                    "lines": br.lines, "counts": br.counts,
                });
                Ok(nodes_out(n, &br.nodes, Some(meta)))
            }
            GenKind::Poised => {
                let xs = gen_random_poised(n, seed)?;
                Ok(nodes_out(n, &xs, Some(json!({ "generator": "poised", "seed": seed, "n": n }))))
            }
            GenKind::Defect => {
                let k = k.ok_or_else(|| Error::Parse("gen defect needs -k".into()))?;
                let c = gen_defect_config(n, k, seed)?;
                let meta = json!({
                    "generator": "defect", "seed": seed, "n": n, "k": k,
                    "mu": CurveFile::from_curve(&c.mu, Some(&c.lines)),
                    "outlier_index": c.outlier_index,
                });
                Ok(nodes_out(n, &c.xs, Some(meta)))
            }
        },
        Command::Extend { n, on_curve, input } => {
            let file = read_nodes(input.as_deref())?;
            let n = degree(n, &file)?;
            let out = match on_curve {
                None => extend_to_poised(&file.nodes, n)?,
                Some(path) => {
                    let parsed = read_curve(&path)?;
                    let sampler = match parsed.lines {
                        Some(lines) => CurveSampler::line_union(lines)?,
                        None if parsed.curve.degree() == 1 => {
                            let p = parsed.curve.poly();
                            CurveSampler::Line(crate::curves::LineForm::new(
                                p.coeff(1, 0),
                                p.coeff(0, 1),
                                p.coeff(0, 0),
                            )?)
                        }
                        None => {
                            return Err(Error::Precondition(
                                "curves of degree above 1 need a \"lines\" factorization to sample".into(),
                            ))
                        }
                    };
                    extend_on_curve(&file.nodes, &sampler, &parsed.curve, n)?
                }
            };
            Ok(nodes_out(n, &out, None))
        }
        Command::Verify { what, n, k, at, input } => {
            let file = read_nodes(input.as_deref())?;
            let n = degree(n, &file)?;
            let k_or = |what: &str| {
                k.or_else(|| meta_k(&file))
                    .ok_or_else(|| Error::Parse(format!("verify {what} needs -k")))
            };
            verify(what, n, &file, k_or, at)
        }
        Command::Render { input, curve } => {
            let file = read_nodes(input.as_deref())?;
            let curves = curve
                .iter()
                .map(|p| read_curve(p).map(|c| c.curve.poly().clone()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Output { text: svg::render(&file.nodes, &curves), violated: false })
        }
    }
}

fn verify(
    what: VerifyKind,
    n: usize,
    file: &NodeSetFile,
    k_or: impl Fn(&str) -> Result<usize>,
    at: Option<String>,
) -> Result<Output> {
    let xs = &file.nodes;
    let report = match what {
        VerifyKind::Uniqueness => {
            let k = k_or("uniqueness")?;
            let ok = verify_uniqueness(xs, n, k)?;
            Report {
                theorem: "uniqueness",
                params: json!({ "n": n, "k": k }),
                dim: Some(curves_through(xs, k).dimension()),
                outlier_index: None,
                mu: None,
                ok,
                curve: None,
                lines: None,
            }
        }
        VerifyKind::Defect => {
            let k = k_or("defect")?;
            let r = characterize_defect(xs, n, k)?;
            let (outlier_index, mu) = match r.characterization {
                Some(c) => (Some(c.outlier_index), Some(PolyOut::new(c.mu.poly().clone()))),
                None => (None, None),
            };
            // A failure here is a legitimate k = n outcome, not a violation.
            return Ok(Output::json(&Report {
                theorem: "defect",
                params: json!({ "n": n, "k": k }),
                dim: Some(r.curve_space_dim),
                outlier_index,
                mu,
                ok: r.consistent,
                curve: None,
                lines: None,
            }));
        }
        VerifyKind::Lineusage => {
            let reports = verify_line_usage(xs, n)?;
            let lines = reports
                .iter()
                .map(|r| {
                    json!({
                        "line": r.line,
                        "nodes_on_line": r.nodes_on_line,
                        "users": r.users,
                        "noncollinear_users": r.noncollinear_users,
                    })
                })
                .collect();
            Report {
                theorem: "lineusage",
                params: json!({ "n": n }),
                dim: None,
                outlier_index: None,
                mu: None,
                ok: true,
                curve: None,
                lines: Some(lines),
            }
        }
        VerifyKind::Twocurves => {
            let k = k_or("twocurves")?;
            let text = at.ok_or_else(|| Error::Parse("verify twocurves needs --at x,y".into()))?;
            let a = parse_point(&text)?;
            let c = combine_two_curves(xs, k, &a)?;
            let ok = c.contains(&a) && xs.iter().all(|b| c.contains(b));
            Report {
                theorem: "twocurves",
                params: json!({ "n": n, "k": k, "at": [ScalarRepr::from_scalar(&a.x), ScalarRepr::from_scalar(&a.y)] }),
                dim: Some(curves_through(xs, k).dimension()),
                outlier_index: None,
                mu: None,
                ok,
                curve: Some(PolyOut::new(c.poly().clone())),
                lines: None,
            }
        }
    };
    let ok = report.ok;
    let mut out = Output::json(&report);
    out.violated = !ok;
    Ok(out)
}

fn write_output(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn fail(code: i32, message: &str) -> i32 {
    eprintln!("{}", json!({ "error": message }));
    code
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return 0;
        }
        Err(e) => return fail(1, e.to_string().lines().next().unwrap_or("invalid arguments")),
    };
    match execute(cli.command) {
        Ok(out) => {
            if let Err(e) = write_output(cli.output.as_deref(), &out.text) {
                return fail(1, &format!("cannot write output: {e}"));
            }
            if out.violated {
                fail(2, "theorem check failed")
            } else {
                0
            }
        }
        Err(e) if e.is_inconsistency() => fail(2, &e.to_string()),
        Err(e) => fail(1, &e.to_string()),
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
