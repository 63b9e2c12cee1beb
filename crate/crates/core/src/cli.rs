//! Command-line front end shared by the `hosoya` binary and the tests.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 arithmetic overflow.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::constructions::{generate, mycielskian, GeneratorSpec};
use crate::error::Error;
use crate::graph::{edgelist, Graph};
use crate::hosoya::hosoya;
use crate::indices::IndexReport;
use crate::polynomial::Rational;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

/// Exact Hosoya polynomials, Mycielskians and distance-based indices.
///
/// INPUT is either an edge-list file or `gen SPEC`, where SPEC is one of
/// path:N (path of LENGTH N, i.e. N+1 vertices), cycle:N, star:N (N leaves),
/// complete:N, kbip:N,M or join:SPEC+SPEC.
#[derive(Debug, Parser)]
#[command(name = "hosoya", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Hosoya polynomial H(G, x).
    Hosoya {
        #[arg(required = true, num_args = 1..=2, value_name = "INPUT")]
        input: Vec<String>,
        /// Print only the JSON form.
        #[arg(long)]
        json: bool,
    },
    /// Write the Mycielskian of a graph as an edge list.
    Mycielskian {
        #[arg(required = true, num_args = 1..=2, value_name = "INPUT")]
        input: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Report every distance-based index exactly.
    Indices {
        #[arg(required = true, num_args = 1..=2, value_name = "INPUT")]
        input: Vec<String>,
        /// Also compute the vertex residual closeness.
        #[arg(long)]
        vrc: bool,
        /// Append 6-digit decimal approximations to the table.
        #[arg(long)]
        decimal: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generate a named graph as an edge list.
    Gen {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check every closed form against brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        #[arg(long, default_value_t = 50)]
        family_max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::Overflow(_)) => EXIT_OVERFLOW,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Loads a graph from `["gen", SPEC]` or `[PATH]`.
pub fn load_input(input: &[String]) -> CliResult<Graph> {
    match input {
        [kw, spec] if kw == "gen" => Ok(generate(&spec.parse::<GeneratorSpec>()?)?),
        [path] => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.into(),
                source,
            })?;
            edgelist::parse(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))
        }
        _ => Err(CliError::Usage(format!(
            "expected `gen SPEC` or a file path, got {input:?}"
        ))),
    }
}

fn write_output(path: Option<&Path>, content: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(path) => std::fs::write(path, content).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        }),
        None => out
            .write_all(content.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn graph_json(graph: &Graph) -> String {
    json!({
        "vertices": graph.vertex_count(),
        "edges": graph.edges().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
    })
    .to_string()
}

fn emit_graph(
    graph: &Graph,
    output: Option<&Path>,
    as_json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let text = if as_json {
        graph_json(graph) + "\n"
    } else {
        edgelist::write(graph)
    };
    write_output(output, &text, out)?;
    if let Some(path) = output {
        let _ = writeln!(
            err,
            "wrote {} vertices, {} edges to {}",
            graph.vertex_count(),
            graph.edge_count(),
            path.display()
        );
    }
    Ok(())
}

fn rational_cell(value: &Rational, decimal: bool) -> String {
    if decimal && !value.is_integer() {
        format!("{value} (~{:.6})", value.to_f64())
    } else {
        value.to_string()
    }
}

fn index_table(report: &IndexReport, decimal: bool) -> String {
    let mut rows = vec![
        ("wiener", report.wiener.to_string()),
        ("hyper_wiener", rational_cell(&report.hyper_wiener, decimal)),
        ("tsz", rational_cell(&report.tsz, decimal)),
        ("harary", rational_cell(&report.harary, decimal)),
        ("closeness", rational_cell(&report.closeness, decimal)),
    ];
    rows.push((
        "betweenness_centrality",
        report
            .betweenness_centrality
            .map_or("n/a (disconnected)".into(), |b| rational_cell(&b, decimal)),
    ));
    if let Some(vrc) = &report.vrc {
        rows.push(("vrc", rational_cell(vrc, decimal)));
    }
    let orders = report
        .nth_wiener
        .iter()
        .map(i128::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    rows.push(("nth_wiener", format!("[{orders}]")));
    rows.iter().map(|(k, v)| format!("{k:<24}{v}\n")).collect()
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    match cli.command {
        Command::Hosoya { input, json } => {
            let h = hosoya(&load_input(&input)?);
            let js = json!({ "polynomial": h.to_string(), "coefficients": h.coefficients() });
            if !json {
                writeln!(out, "{h}").map_err(io)?;
            }
            writeln!(out, "{js}").map_err(io)?;
        }
        Command::Mycielskian {
            input,
            output,
            json,
        } => {
            let mu = mycielskian(&load_input(&input)?);
            emit_graph(&mu, output.as_deref(), json, out, err)?;
        }
        Command::Indices {
            input,
            vrc,
            decimal,
            json,
        } => {
            let graph = load_input(&input)?;
            let report = IndexReport::for_graph(&graph, vrc)?;
            if report.betweenness_centrality.is_none() {
                let _ = writeln!(err, "note: graph is disconnected; betweenness omitted");
            }
            if !json {
                write!(out, "{}", index_table(&report, decimal)).map_err(io)?;
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string(&report).expect("serializable")
            )
            .map_err(io)?;
        }
        Command::Gen { spec, output, json } => {
            let graph = generate(&spec.parse::<GeneratorSpec>()?)?;
            emit_graph(&graph, output.as_deref(), json, out, err)?;
        }
        Command::Verify {
            seed,
            count,
            max_n,
            family_max,
            json,
        } => {
            let config = VerifyConfig {
                seed,
                count,
                max_n,
                family_max,
            };
            let report = verify::run(&config)?;
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                write!(out, "{}", report.to_text()).map_err(io)?;
            }
            if let Some(failed) = report.first_failure() {
                let cx = failed
                    .first_counterexample
                    .as_ref()
                    .expect("failed checks record a counterexample");
                let _ = writeln!(
                    err,
                    "verification failed: {} on {} ({})\n{}",
                    failed.name, cx.instance, cx.detail, cx.edge_list
                );
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hosoya").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn hosoya_of_generated_graphs() {
        let (code, out, _) = run_args(&["hosoya", "gen", "path:2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("2*x + x^2"));
        let (_, out, _) = run_args(&["hosoya", "gen", "cycle:5"]);
        assert_eq!(out.lines().next(), Some("5*x + 5*x^2"));
        let js: serde_json::Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
        assert_eq!(js["coefficients"], json!([5, 5]));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["hosoya", "gen"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["gen", "cycle:2"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["hosoya", "/nonexistent/graph.txt"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn overflow_exits_three() {
        // Closeness of a 200-edge path needs denominators of 2^200.
        let (code, _, err) = run_args(&["indices", "gen", "path:200"]);
        assert_eq!(code, EXIT_OVERFLOW, "{err}");
        assert!(err.contains("overflow"));
    }

    #[test]
    fn indices_for_c5() {
        let (code, out, _) = run_args(&["indices", "gen", "cycle:5", "--json"]);
        assert_eq!(code, 0);
        let js: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(js["wiener"], json!(15));
        assert_eq!(js["harary"], json!("15/2"));
        assert_eq!(js["closeness"], json!("15/2"));
        assert_eq!(js["betweenness_centrality"], json!("1"));
        assert_eq!(js["vrc"], json!(null));
    }

    #[test]
    fn indices_with_vrc() {
        for spec in ["path:2", "star:3"] {
            let (code, out, _) = run_args(&["indices", "gen", spec, "--vrc", "--json"]);
            assert_eq!(code, 0);
            let js: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
            assert_eq!(js["vrc"], json!("0"), "{spec}");
        }
    }

    #[test]
    fn decimal_table() {
        let (_, out, _) = run_args(&["indices", "gen", "cycle:5", "--decimal"]);
        assert!(out.contains("15/2 (~7.500000)"), "{out}");
    }

    #[test]
    fn disconnected_indices_omit_betweenness() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        std::fs::write(&path, "4\n1 2\n3 4\n").unwrap();
        let (code, out, err) = run_args(&["indices", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("n/a (disconnected)"));
        assert!(err.contains("betweenness omitted"));
    }

    #[test]
    fn gen_and_mycielskian_outputs() {
        let (_, out, _) = run_args(&["gen", "kbip:2,2"]);
        assert_eq!(out, "4\n1 3\n1 4\n2 3\n2 4\n");
        let (_, out, _) = run_args(&["gen", "join:path:2+path:2", "--json"]);
        let js: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(js["vertices"], json!(6));
        assert_eq!(js["edges"].as_array().unwrap().len(), 13);
        let (_, out, _) = run_args(&["mycielskian", "gen", "complete:1"]);
        assert_eq!(out, "3\n2 3\n");
    }
}
