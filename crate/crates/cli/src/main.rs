//! `sgstar`: spectra, star complements and multiplicity-bound certificates
//! for signed graphs. Reports are JSON on standard output; exit status is
//! 0 on success, 1 when a certificate or check fails, 2 on bad input.

mod json;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sgstar::bounds;
use sgstar::constructions;
use sgstar::spectra;
use sgstar::srg;
use sgstar::starcomp::{self, CliqueLimits};
use sgstar::{ExactScalar, SignedGraph, VertexSet};

#[derive(Parser)]
#[command(name = "sgstar", version, about = "Star complements and eigenvalue multiplicity bounds for signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum with exact multiplicities where certifiable
    Spectrum { file: String },
    /// Multiplicity of one eigenvalue
    Multiplicity {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
    },
    /// All multiplicity bounds for one eigenvalue
    Bounds {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
    },
    /// Greedy star set and its star complement
    StarSet {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
    },
    /// Check a proposed star set
    VerifyStarSet {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
        #[arg(long, value_parser = parse_set)]
        set: VertexList,
    },
    /// Maximal extensions of a star complement
    Extend {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
        #[arg(long, default_value_t = CliqueLimits::default().max_cliques)]
        max_cliques: usize,
        #[arg(long)]
        max_size: Option<usize>,
        /// Write each realized extension as a graph file into this directory
        #[arg(long)]
        emit_dir: Option<PathBuf>,
    },
    /// Print a known graph in the text format
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Strong-regularity parameters and related checks
    Srg { file: String },
    /// Switch at a vertex set and print the result
    Switch {
        file: String,
        #[arg(long, value_parser = parse_set)]
        set: VertexList,
    },
    /// Main or non-main classification of an eigenvalue
    Nonmain {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
    },
    /// Cubic and quadratic rank certificates
    Certify {
        file: String,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        mu: ExactScalar,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// 4-cycle with an odd number of negative edges
    Quadrangle {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        neg: u8,
    },
    /// Gram graph of the 120 positive roots of E8
    E8,
}

fn parse_exact(s: &str) -> Result<ExactScalar, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Comma-separated vertex indices, e.g. `0,3,5`.
#[derive(Clone, Debug)]
struct VertexList(Vec<usize>);

fn parse_set(s: &str) -> Result<VertexList, String> {
    if s.trim().is_empty() {
        return Ok(VertexList(Vec::new()));
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"))).collect::<Result<_, _>>().map(VertexList)
}

/// Text written to standard output and whether a check failed.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn report(command: &str, inputs: Value, results: Value, failed: bool) -> Self {
        let report = json!({
            "command": command,
            "inputs": inputs,
            "results": results,
            "version": env!("CARGO_PKG_VERSION"),
        });
        let mut text = serde_json::to_string_pretty(&report).expect("json values serialize");
        text.push('\n');
        Outcome { text, failed }
    }

    fn graph(g: &SignedGraph) -> Self {
        Outcome { text: g.to_text(), failed: false }
    }
}

fn read_graph(file: &str) -> Result<SignedGraph> {
    let text = if file == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("cannot read standard input")?;
        buf
    } else {
        fs::read_to_string(file).with_context(|| format!("cannot read {file}"))?
    };
    let name = if file == "-" { "<stdin>" } else { file };
    SignedGraph::parse(&text).with_context(|| format!("{name}: invalid graph"))
}

fn vertex_set(members: &VertexList, g: &SignedGraph) -> Result<VertexSet> {
    VertexSet::new(members.0.iter().copied(), g.order()).context("invalid --set")
}

fn run(command: Command) -> Result<Outcome> {
    Ok(match command {
        Command::Spectrum { file } => {
            let g = read_graph(&file)?;
            let report = spectra::spectrum(&g)?;
            Outcome::report("spectrum", json!({ "file": file }), json::spectrum(&report), false)
        }
        Command::Multiplicity { file, mu } => {
            let g = read_graph(&file)?;
            let k = spectra::multiplicity(&g, &mu);
            let inputs = json!({ "file": file, "mu": json::exact(&mu) });
            Outcome::report("multiplicity", inputs, json!({ "n": g.order(), "multiplicity": k }), false)
        }
        Command::Bounds { file, mu } => {
            let g = read_graph(&file)?;
            let reports = bounds::all_bounds(&g, &mu)?;
            let violated = reports.iter().any(|r| r.violated());
            let results = json!({
                "bounds": reports.iter().map(json::bound).collect::<Vec<_>>(),
                "violated": violated,
            });
            Outcome::report("bounds", json!({ "file": file, "mu": json::exact(&mu) }), results, violated)
        }
        Command::StarSet { file, mu } => {
            let g = read_graph(&file)?;
            let p = starcomp::find_star_set(&g, &mu)?;
            let mut results = json::partition(&p);
            results["verified"] = Value::Bool(true);
            Outcome::report("star-set", json!({ "file": file, "mu": json::exact(&mu) }), results, false)
        }
        Command::VerifyStarSet { file, mu, set } => {
            let g = read_graph(&file)?;
            let s = vertex_set(&set, &g)?;
            let inputs = json!({ "file": file, "mu": json::exact(&mu), "set": json::set(&s) });
            match starcomp::verify_star_set(&g, &mu, &s) {
                Ok(p) => {
                    let mut results = json::partition(&p);
                    results["valid"] = Value::Bool(true);
                    Outcome::report("verify-star-set", inputs, results, false)
                }
                Err(v) => {
                    let results = json!({ "valid": false, "violation": v.to_string() });
                    Outcome::report("verify-star-set", inputs, results, true)
                }
            }
        }
        Command::Extend { file, mu, max_cliques, max_size, emit_dir } => {
            let c = read_graph(&file)?;
            let limits = CliqueLimits { max_cliques, max_size: max_size.unwrap_or(usize::MAX) };
            let catalog = starcomp::max_extensions(&c, &mu, limits)?;
            let mut extensions = Vec::new();
            let mut failed = false;
            for i in 0..catalog.cliques.len() {
                let p = starcomp::realize_extension(&c, &mu, &catalog.clique_vectors(i))?;
                let k = spectra::multiplicity(p.graph(), &mu);
                failed |= k != p.k();
                if let Some(dir) = &emit_dir {
                    write_graph(dir, i, p.graph())?;
                }
                extensions.push(json!({ "clique": i, "order": p.graph().order(), "multiplicity": k }));
            }
            let mut results = json::catalog(&catalog);
            results["extensions"] = Value::Array(extensions);
            let inputs = json!({
                "file": file,
                "mu": json::exact(&mu),
                "max_cliques": max_cliques,
                "max_size": max_size,
                "emit_dir": emit_dir.as_ref().map(|d| d.display().to_string()),
            });
            Outcome::report("extend", inputs, results, failed)
        }
        Command::Construct { which } => match which {
            Construction::Quadrangle { neg } => Outcome::graph(&constructions::quadrangle(usize::from(neg))?),
            Construction::E8 => Outcome::graph(&constructions::e8_signed_graph()?),
        },
        Command::Srg { file } => {
            let g = read_graph(&file)?;
            Outcome::report("srg", json!({ "file": file }), srg_results(&g), false)
        }
        Command::Switch { file, set } => {
            let g = read_graph(&file)?;
            let s = vertex_set(&set, &g)?;
            Outcome::graph(&g.switch(&s)?)
        }
        Command::Nonmain { file, mu } => {
            let g = read_graph(&file)?;
            let main = spectra::is_main(&g, &mu)?;
            let inputs = json!({ "file": file, "mu": json::exact(&mu) });
            Outcome::report("nonmain", inputs, json!({ "main": main, "nonmain": !main }), false)
        }
        Command::Certify { file, mu } => {
            let g = read_graph(&file)?;
            let cubic = bounds::cubic_rank_certificate(&g, &mu)?;
            let quadratic = bounds::quadratic_rank_certificate(&g, &mu)?;
            let failed = !cubic.independent
                || !quadratic.gram_identity
                || (quadratic.hypothesis && !quadratic.independent);
            let results = json!({
                "cubic": json::cubic_certificate(&cubic),
                "quadratic": json::quadratic_certificate(&quadratic),
            });
            Outcome::report("certify", json!({ "file": file, "mu": json::exact(&mu) }), results, failed)
        }
    })
}

fn srg_results(g: &SignedGraph) -> Value {
    let witness = srg::net_regular_witness(g, srg::DEFAULT_SEARCH_LIMIT)
        .map(|(s, rho)| json!({ "set": json::set(&s), "net_degree": rho }));
    let mut results = json!({
        "net_regular_witness": witness,
        "extremal_parameter_formulas": srg::EXTREMAL_PARAMETER_FORMULAS,
    });
    match srg::srg_check(g) {
        Ok(p) => {
            results["strongly_regular"] = Value::Bool(true);
            results["parameters"] = json::srg_parameters(&p);
            results["vacuous_classes"] = p.vacuous_classes().iter().map(|c| c.to_string()).collect();
            results["mean_parameter_check"] = match srg::mean_parameter_check(&p) {
                Ok(holds) => json!({ "holds": holds }),
                Err(e) => json!({ "holds": null, "reason": e.to_string() }),
            };
            results["eigenvalue_count"] = match srg::eigenvalue_count_check(g) {
                Ok(c) => json!({ "classification": c.to_string() }),
                Err(e) => json!({ "classification": null, "reason": e.to_string() }),
            };
        }
        Err(r) => {
            results["strongly_regular"] = Value::Bool(false);
            results["rejection"] = Value::String(r.to_string());
        }
    }
    results
}

fn write_graph(dir: &Path, index: usize, g: &SignedGraph) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let path = dir.join(format!("extension-{index:04}.sg"));
    if path.exists() {
        bail!("refusing to overwrite {}", path.display());
    }
    fs::write(&path, g.to_text()).with_context(|| format!("cannot write {}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            let mut out = io::stdout().lock();
            if out.write_all(outcome.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(outcome.failed))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
