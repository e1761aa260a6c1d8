//! Command-line front end for `graph-inertia`. [`run`] is the whole program;
//! the binary only wires it to the process.

pub mod args;
pub mod trials;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, BufRead, Write};

use clap::Parser;
use graph_inertia::classifier::{classify_with, VstarMode};
use graph_inertia::enumerator::{census, census_range, format_table1, to_csv};
use graph_inertia::graph::{complete_multipartite, from_graph6, gn, k_joining, realize_bk, to_dot};
use graph_inertia::spectra::{eigenvalues_float, inertia_exact};
use graph_inertia::transforms::{
    add_type1, add_type2, add_type3, delete_congruent, TransformCertificate, TransformKind,
};
use graph_inertia::{BkSpec, Graph};
use serde_json::json;
use thiserror::Error;

use args::{Cli, Command, Construct, Export, Format, TransformOp};

/// Environment variable fixing the number of worker threads.
pub const WORKERS_ENV: &str = "GINERTIA_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] graph_inertia::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use graph_inertia::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(
                E::InvalidArgument(_) | E::Parse { .. } | E::UnsupportedOrder { .. },
            ) => EXIT_USAGE,
            CliError::Core(_) | CliError::Io(_) => EXIT_FAILED,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `argv` (including the program name), runs the command and writes
/// results to `out` and diagnostics to `err`. Returns the exit code: 0 on
/// success, 1 when a verification finds a counterexample, 2 on usage errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Applies [`WORKERS_ENV`] to the global thread pool, if set.
pub fn configure_workers() -> Result<(), String> {
    let Ok(value) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{WORKERS_ENV} must be a positive integer, got '{value}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

/// A graph argument: graph6, a `B_k` spec, or `-` for one line of stdin.
pub fn parse_graph(arg: &str) -> CliResult<Graph> {
    let text = if arg == "-" {
        let mut line = String::new();
        io::stdin().lock().read_line(&mut line)?;
        line
    } else {
        arg.to_string()
    };
    let text = text.trim();
    if text.contains('(') {
        let spec: BkSpec = text
            .parse()
            .map_err(|e| CliError::Usage(format!("malformed B_k spec '{text}': {e}")))?;
        return Ok(realize_bk(&spec)?);
    }
    from_graph6(text).map_err(|e| match e {
        graph_inertia::Error::Parse { offset, message } => CliError::Usage(format!(
            "malformed graph6 '{text}' at byte {offset}: {message}"
        )),
        other => CliError::Core(other),
    })
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Inertia {
            graph,
            float,
            json,
            tol,
        } => {
            let g = parse_graph(&graph)?;
            let inertia = inertia_exact(&g);
            let spectrum = if float {
                let mut s = eigenvalues_float(&g)?;
                s.tol = tol;
                Some(s)
            } else {
                None
            };
            if json {
                let values: Option<Vec<f64>> = spectrum
                    .as_ref()
                    .map(|s| s.values.iter().copied().map(round6).collect());
                json_line(out, &json!({ "inertia": inertia, "spectrum": values }))?;
            } else {
                writeln!(out, "{inertia}")?;
                if let Some(s) = spectrum {
                    let values: Vec<String> = s
                        .values
                        .iter()
                        .map(|v| format!("{:.6}", round6(*v)))
                        .collect();
                    writeln!(out, "spectrum {}", values.join(" "))?;
                    writeln!(out, "float {}", s.inertia())?;
                }
            }
        }
        Command::Spectrum { graph, tol } => {
            let g = parse_graph(&graph)?;
            let mut s = eigenvalues_float(&g)?;
            s.tol = tol;
            let values: Vec<f64> = s.values.iter().copied().map(round6).collect();
            json_line(
                out,
                &json!({
                    "order": g.order(),
                    "values": values,
                    "tol": tol,
                    "inertia": s.inertia(),
                    "exact_inertia": inertia_exact(&g),
                }),
            )?;
        }
        Command::Construct { what } => {
            let g = match what {
                Construct::Gn { n } => gn(n)?,
                Construct::Bk { k, parts } => {
                    if parts.len() != k {
                        return Err(CliError::Usage(format!(
                            "bk {k} needs {k} parts, got {}",
                            parts.len()
                        )));
                    }
                    realize_bk(&BkSpec::new(parts)?)?
                }
                Construct::Multipartite { parts } => complete_multipartite(&parts)?,
                Construct::Kjoin { r, graph, attach } => {
                    k_joining(r, &parse_graph(&graph)?, &attach)?
                }
            };
            writeln!(out, "{g}")?;
        }
        Command::Classify { graph, all_vstar } => {
            let g = parse_graph(&graph)?;
            let mode = if all_vstar {
                VstarMode::All
            } else {
                VstarMode::Lowest
            };
            json_line(out, &classify_with(&g, mode)?)?;
        }
        Command::Transform {
            op,
            graph,
            vertices,
        } => {
            let g = parse_graph(&graph)?;
            let (h, cert) = transform(&g, op, &vertices)?;
            writeln!(out, "{h}")?;
            json_line(out, &cert)?;
        }
        Command::Enumerate {
            k,
            max_n,
            class,
            format,
        } => {
            let mut rows = match k {
                Some(k) => census(k, max_n)?,
                None if max_n >= 4 => census_range(4..=max_n.min(13), max_n)?,
                None => Vec::new(),
            };
            if let Some(class) = class {
                rows.retain(|r| r.class == class);
            }
            match format {
                Format::Csv => write!(out, "{}", to_csv(&rows))?,
                Format::Json => json_line(out, &rows)?,
                Format::Table1 => write!(out, "{}", format_table1(&rows))?,
            }
        }
        Command::Verify { check, json } => {
            let outcome = verify::run_check(&check)?;
            if json {
                json_line(out, &outcome.to_json())?;
            } else {
                for line in &outcome.lines {
                    writeln!(out, "{line}")?;
                }
                writeln!(
                    out,
                    "{}: {}",
                    outcome.check,
                    if outcome.ok { "verified" } else { "FAILED" }
                )?;
            }
            return Ok(if outcome.ok { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Export {
            what: Export::Dot { graph, name },
        } => {
            let g = parse_graph(&graph)?;
            write!(out, "{}", to_dot(&g, &name))?;
        }
    }
    Ok(EXIT_OK)
}

fn transform(g: &Graph, op: TransformOp, v: &[usize]) -> CliResult<(Graph, TransformCertificate)> {
    let need = match op {
        TransformOp::Add1 => 1,
        TransformOp::Add2 => 2,
        TransformOp::Add3 => 3,
        TransformOp::Delete1 | TransformOp::Delete2 | TransformOp::Delete3 => 1,
    };
    if v.len() != need {
        return Err(CliError::Usage(format!(
            "{op:?} takes {need} witness vertices, got {}",
            v.len()
        )));
    }
    Ok(match op {
        TransformOp::Add1 => add_type1(g, v[0])?,
        TransformOp::Add2 => add_type2(g, v[0], v[1])?,
        TransformOp::Add3 => add_type3(g, v[0], v[1], v[2])?,
        TransformOp::Delete1 => delete_congruent(g, v[0], TransformKind::I)?,
        TransformOp::Delete2 => delete_congruent(g, v[0], TransformKind::II)?,
        TransformOp::Delete3 => delete_congruent(g, v[0], TransformKind::III)?,
    })
}
