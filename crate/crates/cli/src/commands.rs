//! Subcommand implementations. Each returns `Ok` or a [`CliError`] whose
//! [`code`](CliError::code) is the process exit status.

use crate::svg;
use bookembed_core::embedder::{embed_book_with, EmbedOptions};
use bookembed_core::generator::{canned, gen, Family, GenSpec, CANNED_NAMES};
use bookembed_core::oracle as exact;
use bookembed_core::verifier::{check, Violation};
use bookembed_core::{parse_rotation_graph, write_rotation_graph, BookEmbedding, EmbedError, EmbeddedGraph};
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

#[derive(Debug)]
pub enum CliError {
    /// Bad input, unreadable files or a failed precondition: exit 2.
    Usage(String),
    /// The embedding is invalid or could not be built: exit 1.
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult = Result<(), CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<EmbeddedGraph, CliError> {
    parse_rotation_graph(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn read_embedding(path: &Path) -> Result<BookEmbedding, CliError> {
    BookEmbedding::parse(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> CliResult {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn violations_text(vs: &[Violation]) -> String {
    vs.iter().map(|v| format!("{v}\n")).collect()
}

pub struct EmbedArgs<'a> {
    pub graph: &'a Path,
    pub out: Option<&'a Path>,
    pub verify: bool,
    pub stats: bool,
}

pub fn embed(args: &EmbedArgs, stdout: &mut dyn Write) -> CliResult {
    let g = read_graph(args.graph)?;
    let start = Instant::now();
    let (b, st) = embed_book_with(&g, EmbedOptions::default()).map_err(|e| match e {
        EmbedError::Graph(e) => CliError::Usage(format!("{}: {e}", args.graph.display())),
        e => CliError::Failed(e.to_string()),
    })?;
    let elapsed = start.elapsed();
    let mut text = b.to_text();
    if args.stats {
        let [p1, p2, p3] = b.edges_per_page();
        text.push_str(&format!("# pages={} p1={p1} p2={p2} p3={p3}\n", b.page_count()));
        text.push_str(&format!(
            "# n={} m={} elapsed_ms={:.3}\n",
            g.n(),
            g.m(),
            elapsed.as_secs_f64() * 1e3
        ));
        text.push_str(&format!("# {st:?}\n"));
    }
    if args.verify {
        let r = check(&g, &b);
        if !r.ok() {
            emit(args.out, &text, stdout)?;
            return Err(CliError::Failed(format!(
                "verification failed:\n{}",
                violations_text(&r.violations)
            )));
        }
    }
    emit(args.out, &text, stdout)
}

pub fn verify(graph: &Path, embedding: &Path, stdout: &mut dyn Write) -> CliResult {
    let g = read_graph(graph)?;
    let b = read_embedding(embedding)?;
    let r = check(&g, &b);
    if r.ok() {
        writeln!(stdout, "ok pages={}", b.page_count())?;
        Ok(())
    } else {
        Err(CliError::Failed(violations_text(&r.violations).trim_end().to_string()))
    }
}

pub fn oracle(graph: &Path, limit: usize, stdout: &mut dyn Write) -> CliResult {
    let g = read_graph(graph)?;
    let r = exact::min_pages(&g, limit).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(stdout, "min_pages={}", r.min_pages)?;
    stdout.write_all(r.witness.to_text().as_bytes())?;
    Ok(())
}

/// `family` is a generator family or the name of a canned instance.
pub fn generate(family: &str, n: usize, seed: u64, out: Option<&Path>, stdout: &mut dyn Write) -> CliResult {
    let g = if CANNED_NAMES.contains(&family) {
        canned(family)
    } else {
        let family: Family = family.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
        gen(GenSpec { family, n, seed })
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    emit(out, &write_rotation_graph(&g), stdout)
}

pub fn draw(graph: &Path, embedding: &Path, out: Option<&Path>, stdout: &mut dyn Write) -> CliResult {
    let g = read_graph(graph)?;
    let b = read_embedding(embedding)?;
    let mismatch: Vec<Violation> = check(&g, &b)
        .violations
        .into_iter()
        .filter(|v| !matches!(v, Violation::Crossing { .. }))
        .collect();
    if !mismatch.is_empty() {
        return Err(CliError::Usage(format!(
            "embedding does not match graph:\n{}",
            violations_text(&mismatch).trim_end()
        )));
    }
    emit(out, &svg::render(&b), stdout)
}

/// Median embedding time of one size over several seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalePoint {
    pub n: usize,
    pub median_ms: f64,
}

/// Times `embed_book` on random graphs of sizes `n`, `2n`, `4n`, `8n`, with
/// seeds `seed..seed + seeds`.
pub fn scaling(n: usize, seeds: u64, seed: u64) -> Result<Vec<ScalePoint>, CliError> {
    let mut out = Vec::new();
    for size in [n, 2 * n, 4 * n, 8 * n] {
        let mut times = Vec::new();
        for s in seed..seed + seeds {
            let g = gen(GenSpec {
                family: Family::Random,
                n: size,
                seed: s,
            })
            .map_err(|e| CliError::Usage(e.to_string()))?;
            let start = Instant::now();
            let (b, _) = embed_book_with(&g, EmbedOptions::default()).map_err(|e| CliError::Failed(e.to_string()))?;
            times.push(start.elapsed().as_secs_f64() * 1e3);
            std::hint::black_box(b);
        }
        times.sort_by(f64::total_cmp);
        let mid = times.len() / 2;
        let median_ms = if times.len() % 2 == 0 {
            (times[mid - 1] + times[mid]) / 2.0
        } else {
            times[mid]
        };
        out.push(ScalePoint { n: size, median_ms });
    }
    Ok(out)
}

/// Table of medians, doubling ratios and a bar per size.
pub fn scaling_report(points: &[ScalePoint]) -> String {
    let max = points.iter().map(|p| p.median_ms).fold(0.0, f64::max).max(1e-9);
    let mut s = String::from("# n  median_ms  ratio  plot\n");
    for (i, p) in points.iter().enumerate() {
        let ratio = if i == 0 {
            String::from("-")
        } else {
            format!("{:.2}", p.median_ms / points[i - 1].median_ms.max(1e-9))
        };
        let bar = "#".repeat(((p.median_ms / max) * 40.0).round() as usize);
        s.push_str(&format!("{:>5} {:>10.3} {:>6} {bar}\n", p.n, p.median_ms, ratio));
    }
    s
}
