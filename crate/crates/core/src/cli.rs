//! Command-line front end; `src/main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 consistency or bound violation (or a numeric
//! failure), 2 invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::alpha_matrix::AlphaMatrix;
use crate::bounds::{self, BoundInputs, DEFAULT_EPSILON};
use crate::graph::Graph;
use crate::graph6;
use crate::harness;
use crate::report::{self, Format};
use crate::spectral::{self, Method};
use crate::{AlphaDomain, Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aalpha",
    version,
    about = "A_alpha spectral-radius bounds: evaluation, classification and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate f and g at one point and classify their ordering.
    Eval {
        #[command(flatten)]
        point: Point,
        /// Print a JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Symbolic ordering of f and g with its witnessing condition.
    Classify {
        #[command(flatten)]
        point: Point,
    },
    /// Compare classifier and numeric ordering over a (delta, Delta, alpha) grid.
    Sweep {
        #[arg(long = "delta-max")]
        delta_max: u32,
        #[arg(long = "Delta-max")]
        max_degree_max: u32,
        #[arg(long = "alpha-steps")]
        alpha_steps: u32,
        /// Report file to write.
        #[arg(long)]
        out: PathBuf,
        /// csv or json.
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Check lambda1(A_alpha) of concrete graphs against both bounds.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated alpha values in [0, 1].
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<f64>,
        /// jacobi or power; defaults to jacobi up to 200 vertices.
        #[arg(long)]
        method: Option<Method>,
        /// Report file to write.
        #[arg(long)]
        out: PathBuf,
        /// csv or json.
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Certify that stars attain g and that a fixed set of non-stars exceeds it.
    CertifyStars {
        #[arg(long = "Delta-max")]
        max_degree_max: u32,
        #[arg(long = "alpha-steps")]
        alpha_steps: u32,
    },
    /// Spectral radius of A_alpha for a graph.
    Spectral {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        alpha: f64,
        /// jacobi or power; defaults to jacobi up to 200 vertices.
        #[arg(long)]
        method: Option<Method>,
    },
}

#[derive(Debug, Args)]
struct Point {
    /// Minimum degree.
    #[arg(long = "delta")]
    min_degree: u32,
    /// Maximum degree.
    #[arg(long = "Delta")]
    max_degree: u32,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
}

#[derive(Debug, Args)]
struct GraphSource {
    #[command(flatten)]
    origin: GraphOrigin,
    /// Append K isolated vertices to every graph.
    #[arg(long = "add-isolated", default_value_t = 0)]
    add_isolated: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphOrigin {
    /// File with one graph6 string per line.
    #[arg(long)]
    graph6: Option<PathBuf>,
    /// Edge-list file ("n m" header, then "u v" lines).
    #[arg(long)]
    edgelist: Option<PathBuf>,
    /// Generator: star:N, complete:N, cycle:N or random:N,P,SEED.
    #[arg(long)]
    gen: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Vec<(String, Graph)>> {
        let origin = &self.origin;
        let mut graphs = if let Some(path) = &origin.graph6 {
            graph6::read_graph6_file(path)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("graph6:{}#{}", path.display(), i + 1), g))
                .collect()
        } else if let Some(path) = &origin.edgelist {
            vec![(
                format!("edgelist:{}", path.display()),
                Graph::read_edge_list(path)?,
            )]
        } else if let Some(spec) = &origin.gen {
            vec![(spec.clone(), parse_generator(spec)?)]
        } else {
            unreachable!("clap enforces one graph source")
        };
        if self.add_isolated > 0 {
            for (id, g) in &mut graphs {
                *g = g.add_isolated(self.add_isolated);
                id.push_str(&format!("+iso{}", self.add_isolated));
            }
        }
        Ok(graphs)
    }
}

/// Parses `star:N`, `complete:N`, `cycle:N` or `random:N,P,SEED`.
pub fn parse_generator(spec: &str) -> Result<Graph> {
    let bad = || Error::input(format!("unrecognised generator {spec:?}"));
    let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
    let args: Vec<&str> = args.split(',').map(str::trim).collect();
    let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match (kind, args.as_slice()) {
        ("star", [n]) => Graph::star(int(n)?),
        ("complete", [n]) => Graph::complete(int(n)?),
        ("cycle", [n]) => Graph::cycle(int(n)?),
        ("random", [n, p, seed]) => Graph::random(
            int(n)?,
            p.parse().map_err(|_| bad())?,
            seed.parse().map_err(|_| bad())?,
        ),
        _ => Err(bad()),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    match dispatch(cli.command, AlphaDomain::from_env(), out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_VIOLATION
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn dispatch(command: Command, domain: AlphaDomain, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eval { point, json } => eval(&point, json, domain, out),
        Command::Classify { point } => {
            let (ordering, witness) =
                bounds::classify(point.min_degree, point.max_degree, point.alpha)?;
            writeln!(out, "ordering = {ordering}\nwitness  = {witness}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            delta_max,
            max_degree_max,
            alpha_steps,
            out: path,
            format,
        } => {
            let sweep = harness::sweep_grid(delta_max, max_degree_max, alpha_steps)?;
            report::emit_report(&sweep.records, format, &path)?;
            let s = sweep.summary;
            writeln!(
                out,
                "points={} greater={} equal={} less={} inconsistent={}",
                s.total(),
                s.greater,
                s.equal,
                s.less,
                s.inconsistent
            )
            .map_err(io)?;
            Ok(if s.inconsistent == 0 {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Verify {
            source,
            alphas,
            method,
            out: path,
            format,
        } => {
            let graphs = source.load()?;
            let mut records = Vec::new();
            for (id, g) in &graphs {
                records.extend(harness::verify_graph(g, id, &alphas, method)?);
            }
            report::emit_report(&records, format, &path)?;
            let violations: Vec<String> = records.iter().filter_map(|r| r.violation()).collect();
            for v in &violations {
                writeln!(out, "VIOLATION {v}").map_err(io)?;
            }
            writeln!(
                out,
                "graphs={} records={} violations={}",
                graphs.len(),
                records.len(),
                violations.len()
            )
            .map_err(io)?;
            Ok(if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::CertifyStars {
            max_degree_max,
            alpha_steps,
        } => {
            let cert = harness::certify_star_equality(max_degree_max, alpha_steps)?;
            writeln!(
                out,
                "stars_checked={} max_star_deviation={:e} non_star_checks={} min_strict_margin={:e}",
                cert.stars_checked, cert.max_star_deviation, cert.non_star_checks, cert.min_strict_margin
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Spectral {
            source,
            alpha,
            method,
        } => {
            for (id, g) in source.load()? {
                let m = AlphaMatrix::build_in(&g, alpha, domain)?;
                let r = spectral::spectral_radius(&m, method).map_err(|e| Error::Spectral {
                    graph_id: id.clone(),
                    source: Box::new(e),
                })?;
                writeln!(
                    out,
                    "{id}: lambda1={} residual={:e} iterations={} method={}",
                    r.lambda1, r.residual, r.iterations, r.method
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn eval(point: &Point, json: bool, domain: AlphaDomain, out: &mut dyn Write) -> Result<i32> {
    let inputs = BoundInputs::new(point.min_degree, point.max_degree, point.alpha, domain)?;
    let (f, g) = (inputs.f(), inputs.g());
    // the trichotomy is only stated for α ∈ [0, 1]
    let classified = if inputs.alpha <= 1.0 {
        Some(bounds::compare_numeric(
            inputs.min_degree,
            inputs.max_degree,
            inputs.alpha,
            DEFAULT_EPSILON,
        ))
    } else {
        None
    };
    let (ordering, witness, code) = match &classified {
        Some(Ok(c)) => (c.ordering.to_string(), c.witness.to_string(), EXIT_OK),
        Some(Err(e)) => {
            let Error::Consistency {
                numeric, symbolic, ..
            } = e
            else {
                unreachable!("inputs validated above")
            };
            (
                format!("{symbolic} (numeric {numeric})"),
                "consistency violation".to_string(),
                EXIT_VIOLATION,
            )
        }
        None => ("unclassified".to_string(), "alpha > 1".to_string(), EXIT_OK),
    };
    if json {
        let value = serde_json::json!({
            "delta": inputs.min_degree,
            "Delta": inputs.max_degree,
            "alpha": inputs.alpha,
            "f": f,
            "g": g,
            "diff": f - g,
            "ordering": ordering,
            "witness": witness,
        });
        writeln!(out, "{value}").map_err(io)?;
    } else {
        writeln!(
            out,
            "f        = {f}\ng        = {g}\ndiff     = {}\nordering = {ordering}\nwitness  = {witness}",
            f - g
        )
        .map_err(io)?;
    }
    Ok(code)
}
