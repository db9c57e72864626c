use bookembed::commands::{self, CliError, EmbedArgs};
use bookembed_core::oracle::DEFAULT_LIMIT;
use clap::{Parser, Subcommand};
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Three-page book embeddings of planar graphs with maximum degree 5.
#[derive(Parser)]
#[command(name = "bookembed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a graph file; without a file, `--stats --family random` times
    /// random graphs of sizes n, 2n, 4n.
    Embed {
        graph: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Check the result and exit 1 on any violation.
        #[arg(long)]
        verify: bool,
        /// Append page counts, timing and counters as `#` lines.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seeds per size in timing mode.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Check an embedding against a graph.
    Verify { graph: PathBuf, embedding: PathBuf },
    /// Exact minimum page number of a small graph.
    Oracle {
        graph: PathBuf,
        /// Largest vertex count accepted.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Write a generated or canned graph.
    Gen {
        /// random, grid, platonic, cycle-with-chords, or a canned name.
        #[arg(long, default_value = "random")]
        family: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Render an embedding as an SVG arc diagram.
    Draw {
        graph: PathBuf,
        embedding: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Embed {
            graph: Some(graph),
            out,
            verify,
            stats,
            ..
        } => commands::embed(
            &EmbedArgs {
                graph: &graph,
                out: out.as_deref(),
                verify,
                stats,
            },
            stdout,
        ),
        Command::Embed {
            graph: None,
            stats: true,
            family,
            n,
            seed,
            limit,
            ..
        } => {
            if family.as_deref().unwrap_or("random") != "random" {
                return Err(CliError::Usage("timing mode only supports --family random".into()));
            }
            let points = commands::scaling(n, limit as u64, seed)?;
            Ok(stdout.write_all(commands::scaling_report(&points).as_bytes())?)
        }
        Command::Embed { graph: None, .. } => Err(CliError::Usage(
            "embed needs a graph file (or --stats for timing)".into(),
        )),
        Command::Verify { graph, embedding } => commands::verify(&graph, &embedding, stdout),
        Command::Oracle { graph, limit } => commands::oracle(&graph, limit, stdout),
        Command::Gen { family, n, seed, out } => commands::generate(&family, n, seed, out.as_deref(), stdout),
        Command::Draw { graph, embedding, out } => commands::draw(&graph, &embedding, out.as_deref(), stdout),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
