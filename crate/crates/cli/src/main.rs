use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

mod commands;
mod render;

use commands::{CliError, Command, Options, Request};

#[derive(Parser, Debug)]
#[command(
    name = "snakecheck",
    version,
    about = "Irreducibility of tensor products of snake modules"
)]
struct Cli {
    /// Rank parameter `k` (overridden by a `k` in the payload).
    #[arg(long, global = true)]
    k: Option<u32>,

    /// Tableau range `n` for tableau-facing conversions.
    #[arg(long, global = true)]
    n: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Cap on the number of segments for permutation enumeration.
    #[arg(long, global = true, default_value_t = snakecheck::ring_calc::DEFAULT_SEGMENT_CAP)]
    budget: usize,

    /// Newline-delimited JSON requests (`-` for stdin), answered in order.
    #[arg(long)]
    batch: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Translate between segments, monomials, columns and tableaux.
    Convert { payload: Option<String> },
    /// Decide irreducibility by the matching criterion.
    Check { payload: Option<String> },
    /// Socle of a cuspidal times a simple.
    Socle { payload: Option<String> },
    /// Composition factors of a product of two ladders.
    Decompose { payload: Option<String> },
    /// Ring computation through Kazhdan-Lusztig polynomials.
    Oracle { payload: Option<String> },
    /// q-character of a fundamental module, or the status of a pair.
    Qchar { payload: Option<String> },
    /// Weak separation of two subsets.
    Wsep { payload: Option<String> },
}

impl Cmd {
    fn split(self) -> (Command, Option<String>) {
        match self {
            Cmd::Convert { payload } => (Command::Convert, payload),
            Cmd::Check { payload } => (Command::Check, payload),
            Cmd::Socle { payload } => (Command::Socle, payload),
            Cmd::Decompose { payload } => (Command::Decompose, payload),
            Cmd::Oracle { payload } => (Command::Oracle, payload),
            Cmd::Qchar { payload } => (Command::Qchar, payload),
            Cmd::Wsep { payload } => (Command::Wsep, payload),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        k: cli.k,
        n: cli.n,
        budget: cli.budget,
    };
    let code = match (cli.batch, cli.command) {
        (Some(_), Some(_)) => {
            eprintln!("error: --batch cannot be combined with a command");
            2
        }
        (Some(path), None) => run_batch(&path, &opts, cli.format),
        (None, Some(cmd)) => run_single(cmd, &opts, cli.format),
        (None, None) => {
            eprintln!("error: a command or --batch is required (see --help)");
            2
        }
    };
    ExitCode::from(code)
}

fn read_payload(arg: Option<String>) -> Result<Value, CliError> {
    let text = match arg.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Invalid(format!("reading stdin: {e}")))?;
            s
        }
        Some(s) => s.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("payload is not JSON: {e}")))
}

fn run_single(cmd: Cmd, opts: &Options, format: Format) -> u8 {
    let (command, arg) = cmd.split();
    let result = read_payload(arg).and_then(|payload| commands::run(&Request::new(command, payload), opts));
    match result {
        Ok(value) => {
            let out = match format {
                Format::Json => value.to_string(),
                Format::Text => render::text(&value),
            };
            println!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run_batch(path: &PathBuf, opts: &Options, format: Format) -> u8 {
    let lines: Vec<String> = match read_lines(path) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: reading {}: {e}", path.display());
            return 2;
        }
    };
    let answers: Vec<(Value, u8)> = lines
        .par_iter()
        .map(|line| {
            let parsed: Result<Request, CliError> =
                serde_json::from_str(line).map_err(|e| CliError::Invalid(format!("bad request: {e}")));
            match parsed.and_then(|req| commands::run(&req, opts)) {
                Ok(v) => (json!({"ok": true, "result": v}), 0),
                Err(e) => (
                    json!({"ok": false, "error": e.to_string(), "code": e.exit_code()}),
                    e.exit_code(),
                ),
            }
        })
        .collect();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (v, _) in &answers {
        let line = match format {
            Format::Json => v.to_string(),
            Format::Text => render::text(v).replace('\n', "; "),
        };
        if writeln!(out, "{line}").is_err() {
            return 2;
        }
    }
    answers.iter().map(|(_, c)| *c).max().unwrap_or(0)
}

fn read_lines(path: &PathBuf) -> io::Result<Vec<String>> {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::BufReader::new(io::stdin()))
    } else {
        Box::new(io::BufReader::new(std::fs::File::open(path)?))
    };
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(line);
        }
    }
    Ok(out)
}
