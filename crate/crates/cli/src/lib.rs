//! The `edgecover` command line.
//!
//! Exit codes: 0 success, 1 bad input, 2 a size cap was exceeded, 3 an
//! allocation failed verification.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgecover_core::cover::{
    canonicalize_to_odd_cycles, half_integral_cover, min_edge_cover_exact, odd_cycle_decomposition,
    CoverCertificate, ExactConfig,
};
use edgecover_core::formats::{
    self, AllocationReportJson, CheckJson, CostJson, CoverJson, GapJson, VerifyJson,
};
use edgecover_core::game::{
    allocate_alpha_core, check_core_dual, check_core_stars, integrality_gap, AllocationReport,
    CoalitionViolation, EdgeViolation, GapReport, StarViolation, Verdict,
};
use edgecover_core::graph::{parse_graph, Coalition, EdgeId, VertexId, WeightedGraph};
use edgecover_core::oracle::{brute_core_check, OracleBudget};
use edgecover_core::rational::{self, Rational};
use edgecover_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "edgecover",
    version,
    about = "Exact edge covers and approximate core allocations for edge cover games"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct ExactArgs {
    /// Largest number of candidate edges the exact cover search accepts.
    #[arg(long, default_value_t = ExactConfig::default().max_candidate_edges)]
    max_edges: usize,
}

impl ExactArgs {
    fn config(&self) -> ExactConfig {
        ExactConfig {
            max_candidate_edges: self.max_edges,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum-weight integral edge cover of all vertices.
    Cover {
        graph: PathBuf,
        #[command(flatten)]
        exact: ExactArgs,
    },
    /// Optimal half-integral fractional edge cover.
    FracCover {
        graph: PathBuf,
        /// Round until the half edges form vertex-disjoint odd cycles, and list them.
        #[arg(long)]
        canonical: bool,
    },
    /// Shortest odd cycle and integrality gap.
    Gap { graph: PathBuf },
    /// Approximate core allocation from the packing LP.
    Allocate {
        graph: PathBuf,
        #[command(flatten)]
        exact: ExactArgs,
    },
    /// Cost of a coalition.
    Cost {
        graph: PathBuf,
        /// Comma-separated vertex list, e.g. `0,2,5`.
        #[arg(long, value_delimiter = ',', required = true)]
        coalition: Vec<VertexId>,
        #[command(flatten)]
        exact: ExactArgs,
    },
    /// Check an allocation against the core property.
    Verify {
        graph: PathBuf,
        allocation: PathBuf,
        /// Also enumerate every coalition with brute-force costs.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = OracleBudget::default().max_cover_edges)]
        max_cover_edges: usize,
        #[arg(long, default_value_t = OracleBudget::default().max_coalition_vertices)]
        max_coalition_vertices: usize,
    },
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        if err.is_cap() {
            Failure::Cap(err.to_string())
        } else {
            Failure::Input(err.to_string())
        }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CAP
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<WeightedGraph, Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Input(e.to_string()))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.format == Format::Json;
    let io = |e: std::io::Error| Failure::Input(e.to_string());
    match &cli.command {
        Command::Cover { graph, exact } => {
            let g = read_graph(graph)?;
            let cover = min_edge_cover_exact(&g, &Coalition::all(&g), &exact.config())?;
            if json {
                emit_json(out, &CoverJson::new(&g, &cover))?;
            } else {
                write_cover(out, &g, &cover, None).map_err(io)?;
            }
        }
        Command::FracCover { graph, canonical } => {
            let g = read_graph(graph)?;
            let mut cover = half_integral_cover(&g)?;
            let mut cycles = None;
            if *canonical {
                cover.vector = canonicalize_to_odd_cycles(&g, &cover.vector)?;
                cycles = Some(odd_cycle_decomposition(&g, &cover.vector).ok_or_else(|| {
                    Failure::Input(
                        "internal: canonical cover has no odd-cycle decomposition".into(),
                    )
                })?);
            }
            if json {
                let mut doc = CoverJson::new(&g, &cover);
                doc.odd_cycles = cycles;
                emit_json(out, &doc)?;
            } else {
                write_cover(out, &g, &cover, cycles.as_deref()).map_err(io)?;
            }
        }
        Command::Gap { graph } => {
            let g = read_graph(graph)?;
            let gap = integrality_gap(&g);
            if json {
                emit_json(out, &GapJson::from(&gap))?;
            } else {
                write_gap(out, &gap).map_err(io)?;
            }
        }
        Command::Allocate { graph, exact } => {
            let g = read_graph(graph)?;
            let report = allocate_alpha_core(&g, &exact.config())?;
            if json {
                emit_json(out, &AllocationReportJson::from(&report))?;
            } else {
                write_allocation(out, &report).map_err(io)?;
            }
        }
        Command::Cost {
            graph,
            coalition,
            exact,
        } => {
            let g = read_graph(graph)?;
            let s = Coalition::new(&g, coalition.iter().copied()).map_err(Error::from)?;
            let cover = min_edge_cover_exact(&g, &s, &exact.config())?;
            let doc = CostJson {
                coalition: s.members().to_vec(),
                cost: cover.weight.clone(),
                cover: cover.vector.support(),
            };
            if json {
                emit_json(out, &doc)?;
            } else {
                writeln!(
                    out,
                    "c({}) = {}",
                    vertex_set(&doc.coalition),
                    rational::format(&doc.cost)
                )
                .map_err(io)?;
                writeln!(out, "cover: {}", edge_list(&g, &doc.cover)).map_err(io)?;
            }
        }
        Command::Verify {
            graph,
            allocation,
            exhaustive,
            max_cover_edges,
            max_coalition_vertices,
        } => {
            let g = read_graph(graph)?;
            let bytes = std::fs::read(allocation)
                .map_err(|e| Failure::Input(format!("{}: {e}", allocation.display())))?;
            let a = formats::parse_allocation(&g, &bytes)
                .map_err(|e| Failure::Input(format!("{}: {e}", allocation.display())))?;
            let dual = check_core_dual(&g, &a);
            let stars = check_core_stars(&g, &a);
            let brute = if *exhaustive {
                let budget = OracleBudget {
                    max_cover_edges: *max_cover_edges,
                    max_coalition_vertices: *max_coalition_vertices,
                    ..OracleBudget::default()
                };
                Some(brute_core_check(&g, &a, &budget)?)
            } else {
                None
            };
            let passed = dual.is_ok() && stars.is_ok() && brute.as_ref().is_none_or(Result::is_ok);
            if json {
                emit_json(
                    out,
                    &VerifyJson {
                        passed,
                        dual: CheckJson::from_verdict(&dual),
                        stars: CheckJson::from_verdict(&stars),
                        exhaustive: brute.as_ref().map(CheckJson::from_verdict),
                    },
                )?;
            } else {
                write_verify(out, &g, &dual, &stars, brute.as_ref(), passed).map_err(io)?;
            }
            if !passed {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn vertex_set(vs: &[VertexId]) -> String {
    let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn cycle_text(cycle: &[VertexId]) -> String {
    cycle
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("-")
}

fn edge_list(g: &WeightedGraph, edges: &[EdgeId]) -> String {
    if edges.is_empty() {
        return "(none)".into();
    }
    edges
        .iter()
        .map(|&e| format!("{}-{}", g.edge(e).u, g.edge(e).v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_list(values: &[Rational]) -> String {
    values
        .iter()
        .map(rational::format)
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_cover(
    out: &mut dyn Write,
    g: &WeightedGraph,
    cover: &CoverCertificate,
    cycles: Option<&[Vec<VertexId>]>,
) -> std::io::Result<()> {
    writeln!(out, "kind: {}", cover.kind.as_str())?;
    writeln!(out, "weight: {}", rational::format(&cover.weight))?;
    writeln!(out, "edges:")?;
    for (id, e) in g.edges().iter().enumerate() {
        let x = cover.vector.get(id);
        if *x != rational::zero() {
            writeln!(
                out,
                "  {}-{} w={} x={}",
                e.u,
                e.v,
                rational::format(&e.weight),
                rational::format(x)
            )?;
        }
    }
    if let Some(w) = &cover.witness {
        writeln!(out, "dual witness: {}", fmt_list(w.values()))?;
    }
    if let Some(cycles) = cycles {
        if cycles.is_empty() {
            writeln!(out, "odd cycles: none")?;
        } else {
            let text: Vec<String> = cycles.iter().map(|c| cycle_text(c)).collect();
            writeln!(out, "odd cycles: {}", text.join(", "))?;
        }
    }
    Ok(())
}

fn write_gap(out: &mut dyn Write, gap: &GapReport) -> std::io::Result<()> {
    match (&gap.ell, &gap.cycle) {
        (Some(ell), Some(cycle)) => {
            writeln!(out, "shortest odd cycle: {ell}")?;
            writeln!(out, "rho: {}", rational::format(&gap.rho))?;
            writeln!(out, "witness cycle: {}", cycle_text(&cycle.vertices))?;
        }
        _ => {
            writeln!(out, "shortest odd cycle: none (bipartite)")?;
            writeln!(out, "rho: {}", rational::format(&gap.rho))?;
        }
    }
    Ok(())
}

fn write_allocation(out: &mut dyn Write, r: &AllocationReport) -> std::io::Result<()> {
    writeln!(out, "allocation:")?;
    for (v, x) in r.allocation.values().iter().enumerate() {
        writeln!(out, "  {v} {}", rational::format(x))?;
    }
    match r.ell {
        Some(l) => writeln!(out, "shortest odd cycle: {l}")?,
        None => writeln!(out, "shortest odd cycle: none (bipartite)")?,
    }
    writeln!(out, "alpha: {}", rational::format(&r.alpha))?;
    writeln!(out, "total a(V): {}", rational::format(&r.total))?;
    match (&r.grand_cost, &r.ratio) {
        (Some(c), Some(ratio)) => {
            writeln!(out, "grand cost c(V): {}", rational::format(c))?;
            writeln!(out, "ratio a(V)/c(V): {}", rational::format(ratio))?;
        }
        _ => {
            writeln!(
                out,
                "grand cost c(V): unavailable (exact solver cap exceeded)"
            )?;
            writeln!(out, "ratio a(V)/c(V): unavailable")?;
        }
    }
    Ok(())
}

fn write_verify(
    out: &mut dyn Write,
    g: &WeightedGraph,
    dual: &Verdict<EdgeViolation>,
    stars: &Verdict<StarViolation>,
    brute: Option<&Verdict<CoalitionViolation>>,
    passed: bool,
) -> std::io::Result<()> {
    match dual {
        Ok(()) => writeln!(out, "dual check: pass")?,
        Err(v) => writeln!(
            out,
            "dual check: FAIL edge {}-{}: a_u + a_v = {} > w = {}",
            v.u,
            v.v,
            rational::format(&v.allocated),
            rational::format(&v.weight)
        )?,
    }
    match stars {
        Ok(()) => writeln!(out, "star check: pass")?,
        Err(v) => {
            let star = v
                .leaves
                .iter()
                .map(|&u| {
                    g.edge_between(v.center, u)
                        .expect("star leaves are neighbours")
                })
                .collect::<Vec<_>>();
            writeln!(
                out,
                "star check: FAIL center {} leaves {} (edges {}): a = {} > w = {}",
                v.center,
                vertex_set(&v.leaves),
                edge_list(g, &star),
                rational::format(&v.allocated),
                rational::format(&v.star_weight)
            )?
        }
    }
    match brute {
        None => {}
        Some(Ok(())) => writeln!(out, "exhaustive check: pass")?,
        Some(Err(v)) => writeln!(
            out,
            "exhaustive check: FAIL coalition {}: a(S) = {} > c(S) = {}",
            vertex_set(&v.members),
            rational::format(&v.allocated),
            rational::format(&v.cost)
        )?,
    }
    writeln!(out, "verdict: {}", if passed { "pass" } else { "fail" })
}
