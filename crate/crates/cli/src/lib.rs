//! `chromgf` command-line front end.
//!
//! Exit status: 0 success, 1 usage or input error, 2 computation error,
//! 3 verification failure.

pub mod render;

use chromgf_core::oracle::{verify_series, VerificationReport};
use chromgf_core::{enumerate_states, generating_function, transfer_matrix, Connector, Graph, GraphError};
use clap::{Args, Parser, Subcommand};
use render::Format;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "chromgf", version, about = "Generating functions for chromatic polynomials of layered strip graphs")]
struct Cli {
    /// Write progress to standard error.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the canonical layer colorings.
    States {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the symbolic transfer matrix.
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the generating function for a graph and connector.
    Gf {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        gf: GfArgs,
    },
    /// Print the generating function of grid graphs of the given width.
    Grid {
        /// Grid width (same as --grid-width).
        width: Option<usize>,
        #[arg(long = "grid-width", value_name = "M")]
        grid_width: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        gf: GfArgs,
    },
    /// Print series coefficients p_0..p_N.
    Series {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = 4, value_name = "N")]
        order: usize,
        #[arg(long)]
        no_empty_term: bool,
    },
    /// Compare series coefficients with brute-force chromatic polynomials.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = 4, value_name = "N")]
        order: usize,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Per-layer graph file (`m <count>` then `e <u> <v>` lines).
    #[arg(long, value_name = "PATH", conflicts_with = "grid_width")]
    graph: Option<PathBuf>,
    /// Connector file (`m <count>` then `p <alpha> <beta>` lines); defaults
    /// to the identity connector.
    #[arg(long, value_name = "PATH")]
    connector: Option<PathBuf>,
    /// Use the path graph on M vertices as the layer graph.
    #[arg(long = "grid-width", value_name = "M")]
    grid_width: Option<usize>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct GfArgs {
    /// Drop the z^0 = 1 term.
    #[arg(long)]
    no_empty_term: bool,
    /// Name printed for the series variable.
    #[arg(long, default_value = "z", value_name = "SYMBOL")]
    z_name: String,
}

/// A failure with its exit status.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn computation(message: impl Into<String>) -> Self {
        Failure { code: EXIT_COMPUTATION, message: message.into() }
    }
}

impl From<chromgf_core::Error> for Failure {
    fn from(e: chromgf_core::Error) -> Self {
        match e {
            chromgf_core::Error::Graph(_) => Failure::usage(e.to_string()),
            _ => Failure::computation(e.to_string()),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn positive(m: usize) -> Result<usize, Failure> {
    if m == 0 {
        Err(Failure::usage("--grid-width must be positive"))
    } else {
        Ok(m)
    }
}

fn load_input(input: &InputArgs) -> Result<(Graph, Connector), Failure> {
    let graph = match (&input.graph, input.grid_width) {
        (Some(path), None) => {
            Graph::parse(&read_file(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        (None, Some(m)) => Graph::path(positive(m)?),
        (None, None) => return Err(Failure::usage("one of --graph or --grid-width is required")),
        (Some(_), Some(_)) => return Err(Failure::usage("--graph and --grid-width are exclusive")),
    };
    let connector = match &input.connector {
        Some(path) => {
            Connector::parse(&read_file(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => Connector::monogamy(graph.m()),
    };
    if connector.m() != graph.m() {
        return Err(GraphError::SizeMismatch { graph: graph.m(), connector: connector.m() }.into());
    }
    Ok((graph, connector))
}

struct Progress<'a, E: Write> {
    enabled: bool,
    err: &'a mut E,
    start: Instant,
}

impl<E: Write> Progress<'_, E> {
    fn note(&mut self, what: &str) {
        if self.enabled {
            let _ = writeln!(self.err, "[{:>8.3}s] {what}", self.start.elapsed().as_secs_f64());
        }
    }
}

fn gf_output(
    g: &Graph,
    c: &Connector,
    gf: &GfArgs,
    format: Format,
    progress: &mut Progress<impl Write>,
) -> Result<String, Failure> {
    progress.note("solving linear system");
    let mut f = generating_function(g, c)?;
    if gf.no_empty_term {
        f = f.without_empty_term();
    }
    progress.note("done");
    Ok(render::genfunc(&f.value, &gf.z_name, format))
}

fn dispatch(command: Command, progress: &mut Progress<impl Write>) -> Result<(String, i32), Failure> {
    let ok = |s: String| Ok((s, EXIT_OK));
    match command {
        Command::States { input, output } => {
            let (g, _) = load_input(&input)?;
            ok(render::states(&enumerate_states(&g), output.format))
        }
        Command::Matrix { input, output } => {
            let (g, c) = load_input(&input)?;
            progress.note("building transfer matrix");
            let m = transfer_matrix(&g, &c)?;
            ok(render::matrix(&m, output.format))
        }
        Command::Gf { input, output, gf } => {
            let (g, c) = load_input(&input)?;
            ok(gf_output(&g, &c, &gf, output.format, progress)?)
        }
        Command::Grid { width, grid_width, output, gf } => {
            let m = match (width, grid_width) {
                (Some(a), Some(b)) if a != b => return Err(Failure::usage("conflicting grid widths")),
                (Some(m), _) | (None, Some(m)) => positive(m)?,
                (None, None) => return Err(Failure::usage("grid width required")),
            };
            let g = Graph::path(m);
            ok(gf_output(&g, &Connector::monogamy(m), &gf, output.format, progress)?)
        }
        Command::Series { input, output, order, no_empty_term } => {
            let (g, c) = load_input(&input)?;
            let mut f = generating_function(&g, &c)?;
            if no_empty_term {
                f = f.without_empty_term();
            }
            ok(render::series(&f.series(order)?, output.format))
        }
        Command::Verify { input, output, order } => {
            if order == 0 {
                return Err(Failure::usage("--order must be positive"));
            }
            let (g, c) = load_input(&input)?;
            progress.note("verifying against brute force");
            let report = verify_series(&g, &c, order)?;
            Ok((render::report(&report, output.format), verdict_code(&report)))
        }
    }
}

fn verdict_code(report: &VerificationReport) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

/// Run with the given argument vector (including the program name). Results
/// go to `out`, diagnostics to `err`; returns the exit status.
pub fn run<I, S>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut progress = Progress { enabled: cli.verbose, err, start: Instant::now() };
    match dispatch(cli.command, &mut progress) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_COMPUTATION;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(progress.err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chromgf_core::oracle::VerificationRow;
    use chromgf_core::PolyC;

    #[test]
    fn mismatched_row_maps_to_verify_failure() {
        let good = VerificationRow { n: 1, series: PolyC::from_ints(&[0, 1]), oracle: PolyC::from_ints(&[0, 1]) };
        let bad = VerificationRow { n: 2, series: PolyC::from_ints(&[0, 1]), oracle: PolyC::from_ints(&[0, 0, 1]) };
        assert_eq!(verdict_code(&VerificationReport { rows: vec![good.clone()] }), EXIT_OK);
        assert_eq!(verdict_code(&VerificationReport { rows: vec![good, bad] }), EXIT_VERIFY_FAILED);
    }
}
