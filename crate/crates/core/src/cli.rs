//! The `tpscaffold` command line.
//!
//! Exit codes: 0 success or TP, 1 NOT TP, 2 usage error, 3 malformed or unreadable
//! input, 4 library precondition failure (including output write failures).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bordering::{border, BorderParams, BorderSide};
use crate::cauchon::{cauchon_trace, scaffold, StepOrder};
use crate::error::Error;
use crate::insertion::{insert_column_detailed, insert_row_detailed, Candidate, InsertionSolution};
use crate::io::{parse_matrix, parse_matrix_json};
use crate::matrix::{IndexSet, Matrix};
use crate::positivity::{is_totally_positive, TpMode, TpVerdict};
use crate::rational::Rational;
use crate::scaffold::{x_of_t, Orientation, ScaffoldGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_TP: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tpscaffold",
    version,
    about = "Scaffoldings and line insertion for totally positive matrices"
)]
pub struct Cli {
    /// Read every input file in the JSON mirror format.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide total positivity; prints TP or NOT TP with a witness.
    Check {
        input: PathBuf,
        /// Use the Cauchon-based check instead of enumerating minors.
        #[arg(long)]
        fast: bool,
        /// Enumerate minors even when min(m,n) exceeds the size limit.
        #[arg(long, conflicts_with = "fast")]
        force: bool,
    },
    /// Write the scaffolding T of a TP matrix.
    Scaffold {
        input: PathBuf,
        #[command(flatten)]
        orientation: OrientationArg,
        /// Write every intermediate matrix of Cauchon's algorithm instead.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write the path matrix X(T) of a positive weight matrix.
    Reconstruct {
        input: PathBuf,
        #[command(flatten)]
        orientation: OrientationArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Print one minor as an exact rational.
    Minor {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Insert a TP row after row k.
    InsertRow(InsertArgs),
    /// Insert a TP column after column k.
    InsertCol(InsertArgs),
    /// Add a strictly positive line outside a TP matrix.
    Border {
        input: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
        /// 1 x len matrix file holding the border parameters.
        #[arg(long)]
        params: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write the scaffolding graph of a weight matrix in DOT format.
    GraphDot {
        input: PathBuf,
        #[command(flatten)]
        orientation: OrientationArg,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct OrientationArg {
    #[arg(long)]
    gamma: bool,
    #[arg(long)]
    le: bool,
}

impl OrientationArg {
    fn get(&self) -> Orientation {
        if self.le {
            Orientation::Le
        } else {
            Orientation::Gamma
        }
    }
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InsertArgs {
    input: PathBuf,
    /// Insert between lines k and k+1.
    #[arg(long)]
    after: usize,
    /// 3 x n matrix file whose rows are r, q and s.
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Also report the (r, q, s) witness on standard error.
    #[arg(short, long)]
    verbose: bool,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Above,
    Below,
    Left,
    Right,
}

impl From<SideArg> for BorderSide {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Above => BorderSide::Above,
            SideArg::Below => BorderSide::Below,
            SideArg::Left => BorderSide::Left,
            SideArg::Right => BorderSide::Right,
        }
    }
}

/// A failed command: exit code plus a one-line message.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_PRECONDITION,
            message: e.to_string(),
        }
    }
}

fn input_failure(path: &Path, message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {message}", path.display()),
    }
}

struct Context<'a> {
    json: bool,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Context<'_> {
    fn read(&self, path: &Path) -> Result<Matrix, Failure> {
        let text = fs::read_to_string(path).map_err(|e| input_failure(path, e))?;
        let parsed = if self.json {
            parse_matrix_json(&text)
        } else {
            parse_matrix(&text)
        };
        parsed.map_err(|e| input_failure(path, e))
    }

    fn emit(&mut self, out: &OutputArg, text: &str) -> Result<(), Failure> {
        let res = match &out.output {
            Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string()),
        };
        res.map_err(|message| Failure {
            code: EXIT_PRECONDITION,
            message: format!("cannot write output: {message}"),
        })
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Context {
        json: cli.json,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, ctx: &mut Context<'_>) -> Result<i32, Failure> {
    match command {
        Command::Check { input, fast, force } => {
            let x = ctx.read(&input)?;
            let mode = if fast {
                TpMode::Fast
            } else {
                TpMode::Exhaustive { force }
            };
            match is_totally_positive(&x, mode)? {
                TpVerdict::TotallyPositive => {
                    ctx.emit(&OutputArg { output: None }, "TP\n")?;
                    Ok(EXIT_OK)
                }
                TpVerdict::NotTotallyPositive(w) => {
                    ctx.emit(&OutputArg { output: None }, &format!("NOT TP: {w}\n"))?;
                    Ok(EXIT_NOT_TP)
                }
            }
        }
        Command::Scaffold {
            input,
            orientation,
            trace,
            out,
        } => {
            let x = ctx.read(&input)?;
            let o = orientation.get();
            let text = if trace {
                let t = cauchon_trace(&x, StepOrder::for_orientation(o))?;
                t.steps()
                    .iter()
                    .map(|s| format!("# ({},{})\n{}", s.position.0, s.position.1, s.matrix))
                    .collect()
            } else {
                scaffold(&x, o)?.to_string()
            };
            ctx.emit(&out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Reconstruct {
            input,
            orientation,
            out,
        } => {
            let t = ctx.read(&input)?;
            let x = x_of_t(&t, orientation.get())?;
            ctx.emit(&out, &x.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Minor { input, rows, cols } => {
            let x = ctx.read(&input)?;
            let value = x.minor(&IndexSet::new(rows)?, &IndexSet::new(cols)?)?;
            ctx.emit(&OutputArg { output: None }, &format!("{value}\n"))?;
            Ok(EXIT_OK)
        }
        Command::InsertRow(args) => insert(args, ctx, false),
        Command::InsertCol(args) => insert(args, ctx, true),
        Command::Border {
            input,
            side,
            params,
            out,
        } => {
            let x = ctx.read(&input)?;
            let p = ctx.read(&params)?;
            if p.rows() != 1 {
                return Err(input_failure(
                    &params,
                    "parameters must be a 1 x len matrix",
                ));
            }
            let bp = BorderParams::new(side.into(), p.row(1).to_vec())?;
            let y = border(&x, &bp)?;
            ctx.emit(&out, &y.to_string())?;
            Ok(EXIT_OK)
        }
        Command::GraphDot {
            input,
            orientation,
            out,
        } => {
            let t = ctx.read(&input)?;
            let g = ScaffoldGraph::new(t, orientation.get())?;
            ctx.emit(&out, &g.to_dot())?;
            Ok(EXIT_OK)
        }
    }
}

fn insert(args: InsertArgs, ctx: &mut Context<'_>, column: bool) -> Result<i32, Failure> {
    let x = ctx.read(&args.input)?;
    let candidate = match &args.witness {
        Some(path) => {
            let w = ctx.read(path)?;
            if w.rows() != 3 {
                return Err(input_failure(path, "witness must have three rows: r, q, s"));
            }
            let row = |i: usize| w.row(i).to_vec();
            Some(Candidate {
                r: row(1),
                q: row(2),
                s: row(3),
            })
        }
        None => None,
    };
    let (y, sol) = if column {
        insert_column_detailed(&x, args.after, candidate.as_ref())?
    } else {
        insert_row_detailed(&x, args.after, candidate.as_ref())?
    };
    ctx.emit(&args.out, &y.to_string())?;
    if args.verbose {
        let _ = ctx.stderr.write_all(witness_text(&sol).as_bytes());
    }
    Ok(EXIT_OK)
}

fn witness_text(sol: &InsertionSolution) -> String {
    let line = |name: &str, v: &[Rational]| {
        let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
        format!("{name} = {}\n", parts.join(" "))
    };
    [
        line("r", &sol.r),
        line("q", &sol.q),
        line("s", &sol.s),
        line("row", &sol.inserted_row),
    ]
    .concat()
}
