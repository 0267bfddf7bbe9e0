mod input;

use std::fmt::Write;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tdc_core::search::{search_critical_full, search_critical_pruned};
use tdc_core::{
    domination, edge_list, existence, graph6, is_k_gamma_t_critical, Error, Family, FamilyParams,
    SearchMode, SearchOptions,
};

/// Exit codes shared by all subcommands.
mod exit {
    pub const VERDICT_FALSE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const PARAMETER: u8 = 3;
    pub const PRECONDITION: u8 = 4;
}

#[derive(Debug, Parser)]
#[command(
    name = "tdc",
    version,
    about = "Construct, verify and search for total-domination-critical graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Line,
    Human,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Pruned,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family graph (g4m2, g4m or cycle) and print it.
    Construct {
        family: Family,
        /// Family parameter for g4m2 and g4m (>= 3).
        #[arg(long)]
        m: Option<usize>,
        /// Cycle length (>= 3).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "g6")]
        format: GraphFormat,
    },
    /// Check k-gamma_t-criticality. Exits 0 iff every input graph is critical.
    Verify {
        /// graph6 string, file path, or `-` for stdin (one graph6 per line).
        input: Option<String>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "line")]
        format: ReportFormat,
        /// Read the input as an edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Exhaustively search for k-gamma_t-critical graphs of order delta + k.
    Search {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value = "pruned")]
        mode: Mode,
        /// Skip candidates whose diameter is not 2.
        #[arg(long)]
        prune_diameter: bool,
        #[arg(long, env = "TDC_WORKERS", default_value_t = 1, value_parser = positive)]
        workers: usize,
    },
    /// Does a 3-gamma_t-critical graph of order delta + 3 exist?
    Exists {
        #[arg(long)]
        delta: usize,
        #[arg(long, env = "TDC_WORKERS", default_value_t = 1, value_parser = positive)]
        workers: usize,
    },
    /// Print the total domination number and its least witness.
    GammaT {
        input: Option<String>,
        #[arg(long)]
        edges: bool,
    },
    /// Convert an edge list to graph6.
    Encode { input: Option<String> },
    /// Convert graph6 to edge lists.
    Decode { input: Option<String> },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Size(_) | Error::SelfLoop(_) | Error::Index { .. } => exit::PARSE,
        Error::Parameter(_) => exit::PARAMETER,
        Error::Disconnected
        | Error::EmptyGraph
        | Error::Precondition(_)
        | Error::UndefinedTotalDomination(_) => exit::PRECONDITION,
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn construct(
    family: Family,
    m: Option<usize>,
    n: Option<usize>,
    format: GraphFormat,
) -> Result<u8, Error> {
    let size = match (family, m, n) {
        (Family::Cycle, None, Some(n)) => n,
        (Family::G4m2 | Family::G4m, Some(m), None) => m,
        (Family::Cycle, ..) => return Err(Error::Parameter("cycle takes --n".into())),
        _ => return Err(Error::Parameter(format!("{family} takes --m"))),
    };
    let params = FamilyParams::new(family, size)?;
    let g = params.build().map_err(|e| match e {
        Error::Size(_) => Error::Parameter(e.to_string()),
        e => e,
    })?;
    match format {
        GraphFormat::G6 => emit(&format!("{}\n", graph6::encode(&g))),
        GraphFormat::Edges => emit(&edge_list::write(&g)),
    }
    Ok(0)
}

fn verify(input: Option<&str>, k: usize, format: ReportFormat, edges: bool) -> Result<u8, Error> {
    let graphs = input::read_graphs(input, edges)?;
    let reports = graphs
        .iter()
        .map(|g| is_k_gamma_t_critical(g, k))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    for r in &reports {
        match format {
            ReportFormat::Line => out.push_str(&r.to_lines()),
            ReportFormat::Human => write!(out, "{r}").unwrap(),
        }
    }
    emit(&out);
    Ok(if reports.iter().all(|r| r.verdict) {
        0
    } else {
        exit::VERDICT_FALSE
    })
}

fn search(
    delta: usize,
    k: usize,
    mode: Mode,
    prune_diameter: bool,
    workers: usize,
) -> Result<u8, Error> {
    let opts = SearchOptions {
        workers,
        prune_diameter,
    };
    let outcome = match mode {
        Mode::Pruned if k != 3 => {
            return Err(Error::Parameter(
                "pruned search is only valid for k = 3; use --mode full for other k".into(),
            ))
        }
        Mode::Pruned => search_critical_pruned(delta, &opts)?,
        Mode::Full => search_critical_full(delta + k, delta, k, &opts)?,
    };
    debug_assert_eq!(
        outcome.mode == SearchMode::Pruned,
        matches!(mode, Mode::Pruned)
    );
    let mut out = String::new();
    for c in &outcome.certificates {
        writeln!(out, "{c}").unwrap();
    }
    writeln!(out, "# {outcome}").unwrap();
    emit(&out);
    Ok(0)
}

fn gamma_t(input: Option<&str>, edges: bool) -> Result<u8, Error> {
    let mut out = String::new();
    for g in input::read_graphs(input, edges)? {
        let r = domination::gamma_t(&g);
        let witness = r
            .witness
            .map(|w| format!("{w:x}"))
            .unwrap_or_else(|| "-".into());
        writeln!(out, "gamma_t={} witness={witness}", r.value).unwrap();
    }
    emit(&out);
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Construct {
            family,
            m,
            n,
            format,
        } => construct(family, m, n, format),
        Command::Verify {
            input,
            k,
            format,
            edges,
        } => verify(input.as_deref(), k, format, edges),
        Command::Search {
            delta,
            k,
            mode,
            prune_diameter,
            workers,
        } => search(delta, k, mode, prune_diameter, workers),
        Command::Exists { delta, workers } => {
            let opts = SearchOptions {
                workers,
                prune_diameter: false,
            };
            emit(&format!("{}\n", existence(delta, &opts)?));
            Ok(0)
        }
        Command::GammaT { input, edges } => gamma_t(input.as_deref(), edges),
        Command::Encode { input } => {
            let g = input::read_graphs(input.as_deref(), true)?;
            emit(&format!("{}\n", graph6::encode(&g[0])));
            Ok(0)
        }
        Command::Decode { input } => {
            let graphs = input::read_graphs(input.as_deref(), false)?;
            emit(&graphs.iter().map(edge_list::write).collect::<String>());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::PARAMETER } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
