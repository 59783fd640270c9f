//! Command-line front end.
//!
//! `certify` streams graph6 lines through a rayon pool in fixed-size batches
//! and writes results in input order, so output bytes do not depend on
//! `--jobs`. Blank input lines are skipped and do not consume an index.
//!
//! Single-shot commands (`gen`, `hom`) print their result on stdout and, on
//! failure, a JSON object `{"error": code, "message": ...}` on stderr with exit
//! status 2. Streaming commands (`certify`, `augment`, `spectra`) keep going
//! past bad lines and exit with the number of failed lines, capped at 255.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::cert::{augmented_graph, core_certificate, spectral_data, CertReport, Reason, Verdict};
use crate::error::{Error, Result};
use crate::families::{self, SizeBudget};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6_string};
use crate::hom::{self, VertexMap};

/// First line of every CSV report.
pub const CSV_VERSION_LINE: &str = "# uvc certify csv v1";

pub const CSV_COLUMNS: [&str; 15] = [
    "id", "n", "degree", "srg", "tau", "d", "edges", "rank", "target", "verdict", "core", "reasons",
    "ms", "error", "message",
];

#[derive(Parser, Debug)]
#[command(name = "uvc", version, about = "Exact vector-coloring rank tests and core certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Copy, Debug)]
pub struct BudgetArgs {
    /// Largest vertex count accepted.
    #[arg(long, global = true, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_vertices: u64,
    /// Largest edge count accepted.
    #[arg(long, global = true, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_edges: u64,
}

impl BudgetArgs {
    pub fn budget(&self) -> SizeBudget {
        SizeBudget {
            max_vertices: usize::try_from(self.budget_vertices).unwrap_or(usize::MAX),
            max_edges: usize::try_from(self.budget_edges).unwrap_or(usize::MAX),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one family member as a graph6 line.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
    /// Rank test and core certificate for each graph6 line.
    Certify {
        /// Input file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report `ms` as null so output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Homomorphism existence, construction and checking.
    Hom {
        #[command(subcommand)]
        query: HomQuery,
    },
    /// Print the graph G'(p) of each input graph as graph6.
    Augment {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Characteristic polynomial, least eigenvalue and its multiplicity.
    Spectra {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum Family {
    Kneser { n: u32, r: u32 },
    QKneser { q: u32, n: u32, r: u32 },
    HammingH { n: u32, k: u32 },
    HammingHPrime { n: u32, k: u32 },
    CayleyZ2 {
        n: u32,
        #[arg(required = true)]
        weights: Vec<u32>,
    },
    QCube { m: u32, j: u32 },
}

#[derive(Subcommand, Debug, Clone)]
pub enum HomQuery {
    /// K(n,r) to K(n2,r2).
    Kneser {
        n: u32,
        r: u32,
        n2: u32,
        r2: u32,
        /// Also print the map when it exists.
        #[arg(long)]
        map: bool,
    },
    /// H(n,k) to H(n2,k2).
    Hamming {
        n: u32,
        k: u32,
        n2: u32,
        k2: u32,
        #[arg(long)]
        map: bool,
    },
    /// Necessary condition between q-Kneser graphs.
    QKneser {
        q: u64,
        n: u32,
        r: u32,
        q2: u64,
        n2: u32,
        r2: u32,
    },
    /// Core classification of Q_{n/k}.
    QCube { n: u32, k: u32 },
    /// Check a map given as a JSON array of target indices.
    Verify { g: String, h: String, map: String },
    /// Backtracking search for a homomorphism.
    Search {
        g: String,
        h: String,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

pub fn run(cli: Cli) -> ExitCode {
    let outcome = match cli.command {
        Command::Gen {
            family,
            budget,
            output,
        } => single_shot(output, |out| {
            let g = generate(&family, &budget.budget())?;
            writeln!(out, "{}", to_graph6_string(&g)).map_err(io_error)
        }),
        Command::Certify {
            input,
            jobs,
            format,
            budget,
            output,
            no_timing,
        } => {
            let cfg = CertifyConfig {
                jobs: jobs as usize,
                format,
                budget: budget.budget(),
                timing: !no_timing,
            };
            streaming(&input, output, |r, w| certify_stream(r, w, &cfg).map(|s| s.errors))
        }
        Command::Hom { query } => single_shot(None, |out| {
            let v = hom_query(&query)?;
            writeln!(out, "{v}").map_err(io_error)
        }),
        Command::Augment { input, output } => streaming(&input, output, augment_stream),
        Command::Spectra { input, output } => streaming(&input, output, spectra_stream),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", json!({"error": e.code(), "message": e.to_string()}));
            ExitCode::from(2)
        }
    }
}

fn io_error(e: io::Error) -> Error {
    Error::InvalidParameter(format!("i/o: {e}"))
}

fn open_output(path: Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(&p).map_err(io_error)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    Ok(if path == "-" {
        Box::new(BufReader::new(io::stdin().lock()))
    } else {
        Box::new(BufReader::new(File::open(path).map_err(io_error)?))
    })
}

fn single_shot(output: Option<PathBuf>, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<u8> {
    let mut out = open_output(output)?;
    f(&mut out)?;
    out.flush().map_err(io_error)?;
    Ok(0)
}

fn streaming(
    input: &str,
    output: Option<PathBuf>,
    f: impl FnOnce(&mut Box<dyn BufRead>, &mut Box<dyn Write>) -> io::Result<usize>,
) -> Result<u8> {
    let mut reader = open_input(input)?;
    let mut out = open_output(output)?;
    let errors = f(&mut reader, &mut out).map_err(io_error)?;
    out.flush().map_err(io_error)?;
    Ok(errors.min(255) as u8)
}

pub fn generate(family: &Family, budget: &SizeBudget) -> Result<Graph> {
    match family {
        Family::Kneser { n, r } => families::kneser_within(*n, *r, budget),
        Family::QKneser { q, n, r } => families::q_kneser_within(*q, *n, *r, budget),
        Family::HammingH { n, k } => families::hamming_h_within(*n, *k, budget),
        Family::HammingHPrime { n, k } => families::hamming_h_prime_within(*n, *k, budget),
        Family::CayleyZ2 { n, weights } => families::cayley_z2_within(*n, weights, budget),
        Family::QCube { m, j } => families::q_cube_within(*m, *j, budget),
    }
}

fn parse_str(s: &str) -> Result<Graph> {
    parse_graph6(s.as_bytes())
}

pub fn hom_query(q: &HomQuery) -> Result<serde_json::Value> {
    Ok(match q {
        HomQuery::Kneser { n, r, n2, r2, map } => {
            let exists = hom::kneser_hom_exists(*n, *r, *n2, *r2)?;
            if exists && *map {
                let m = hom::kneser_hom_map(*n, *r, n2 / n)?;
                json!({"exists": true, "map": m.image()})
            } else {
                json!({ "exists": exists })
            }
        }
        HomQuery::Hamming { n, k, n2, k2, map } => {
            let exists = hom::hamming_hom_exists(*n, *k, *n2, *k2)?;
            if exists && *map {
                let m = hom::hamming_hom_map(*n, *k, n2 / n)?;
                json!({"exists": true, "map": m.image()})
            } else {
                json!({ "exists": exists })
            }
        }
        HomQuery::QKneser { q, n, r, q2, n2, r2 } => {
            json!({ "necessary_condition": hom::q_kneser_necessary(*q, *n, *r, *q2, *n2, *r2)? })
        }
        HomQuery::QCube { n, k } => json!({ "case": hom::q_cube_core_classification(*n, *k)? }),
        HomQuery::Verify { g, h, map } => {
            let (g, h) = (parse_str(g)?, parse_str(h)?);
            let image: Vec<usize> = serde_json::from_str(map)
                .map_err(|e| Error::InvalidParameter(format!("map is not a JSON index array: {e}")))?;
            let m = VertexMap::new(h.n(), image)?;
            serde_json::to_value(hom::verify_homomorphism(&g, &h, &m)?).expect("plain struct")
        }
        HomQuery::Search { g, h, budget } => {
            let (g, h) = (parse_str(g)?, parse_str(h)?);
            match hom::brute_force_hom(&g, &h, *budget)? {
                Some(m) => json!({"found": true, "map": m.image()}),
                None => json!({ "found": false }),
            }
        }
    })
}

/// Settings for [`certify_stream`].
#[derive(Clone, Copy, Debug)]
pub struct CertifyConfig {
    pub jobs: usize,
    pub format: Format,
    pub budget: SizeBudget,
    pub timing: bool,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            jobs: 1,
            format: Format::Jsonl,
            budget: SizeBudget::default(),
            timing: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub tight: usize,
    pub loose: usize,
    pub certified_core: usize,
    pub errors: usize,
}

impl Summary {
    fn record(&mut self, r: &Result<CertReport>) {
        self.total += 1;
        match r {
            Ok(rep) => {
                match rep.verdict {
                    Some(Verdict::Tight) => self.tight += 1,
                    Some(Verdict::Loose) => self.loose += 1,
                    None => {}
                }
                if rep.is_certified() {
                    self.certified_core += 1;
                }
            }
            Err(_) => self.errors += 1,
        }
    }
}

/// Certification of a single graph6 line.
pub fn certify_line(index: usize, line: &[u8], cfg: &CertifyConfig) -> Result<CertReport> {
    let g = parse_graph6(line)?;
    cfg.budget.check_graph(&g)?;
    let mut rep = core_certificate(&g)?;
    rep.id = index;
    if !cfg.timing {
        rep.ms = None;
    }
    Ok(rep)
}

/// Non-empty lines with the trailing newline (and any carriage return) removed.
struct Lines<R> {
    inner: R,
}

impl<R: BufRead> Iterator for Lines<R> {
    type Item = io::Result<Vec<u8>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let mut buf = Vec::new();
            match self.inner.read_until(b'\n', &mut buf) {
                Ok(0) => return None,
                Ok(_) => {
                    while matches!(buf.last(), Some(b'\n' | b'\r')) {
                        buf.pop();
                    }
                    if !buf.is_empty() {
                        return Some(Ok(buf));
                    }
                }
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

fn batch_size(jobs: usize) -> usize {
    jobs.max(1) * 16
}

/// Reads graph6 lines, certifies them in parallel and writes one record per
/// line in input order, followed by the summary.
pub fn certify_stream<R: BufRead, W: Write + ?Sized>(
    input: R,
    out: &mut W,
    cfg: &CertifyConfig,
) -> io::Result<Summary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(io::Error::other)?;
    let mut summary = Summary::default();
    let mut lines = Lines { inner: input };
    let mut next_index = 0usize;
    if cfg.format == Format::Csv {
        writeln!(out, "{CSV_VERSION_LINE}")?;
        writeln!(out, "{}", CSV_COLUMNS.join(","))?;
    }
    loop {
        let mut batch = Vec::with_capacity(batch_size(cfg.jobs));
        for line in lines.by_ref().take(batch_size(cfg.jobs)) {
            batch.push((next_index, line?));
            next_index += 1;
        }
        if batch.is_empty() {
            break;
        }
        let results: Vec<Result<CertReport>> = pool.install(|| {
            batch
                .par_iter()
                .map(|(i, line)| certify_line(*i, line, cfg))
                .collect()
        });
        for ((index, _), r) in batch.iter().zip(&results) {
            summary.record(r);
            match cfg.format {
                Format::Jsonl => write_jsonl(out, *index, r)?,
                Format::Csv => write_csv(out, *index, r)?,
            }
        }
    }
    match cfg.format {
        Format::Jsonl => {
            #[derive(Serialize)]
            struct Footer {
                summary: Summary,
            }
            writeln!(out, "{}", serde_json::to_string(&Footer { summary }).expect("plain struct"))?
        }
        Format::Csv => writeln!(
            out,
            "# summary total={} tight={} loose={} certified_core={} errors={}",
            summary.total, summary.tight, summary.loose, summary.certified_core, summary.errors
        )?,
    }
    Ok(summary)
}

fn write_jsonl<W: Write + ?Sized>(out: &mut W, index: usize, r: &Result<CertReport>) -> io::Result<()> {
    let line = match r {
        Ok(rep) => serde_json::to_string(rep).expect("reports serialize"),
        Err(e) => json!({"index": index, "error": e.code(), "message": e.to_string()}).to_string(),
    };
    writeln!(out, "{line}")
}

fn reason_name(r: &Reason) -> String {
    serde_json::to_value(r)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

fn write_csv<W: Write + ?Sized>(out: &mut W, index: usize, r: &Result<CertReport>) -> io::Result<()> {
    let fields: Vec<String> = match r {
        Ok(rep) => vec![
            rep.id.to_string(),
            rep.n.to_string(),
            opt(&rep.degree),
            rep.srg
                .map(|s| s.map(|x| x.to_string()).join(";"))
                .unwrap_or_default(),
            opt(&rep.tau),
            opt(&rep.d),
            rep.edges.to_string(),
            opt(&rep.rank),
            opt(&rep.target),
            rep.verdict
                .map(|v| if v == Verdict::Tight { "tight" } else { "loose" }.to_owned())
                .unwrap_or_default(),
            if rep.is_certified() { "certified" } else { "inconclusive" }.to_owned(),
            rep.reasons.iter().map(reason_name).collect::<Vec<_>>().join(";"),
            opt(&rep.ms),
            String::new(),
            String::new(),
        ],
        Err(e) => {
            let mut f = vec![String::new(); CSV_COLUMNS.len()];
            f[0] = index.to_string();
            f[13] = e.code().to_owned();
            f[14] = e.to_string();
            f
        }
    };
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(&fields).map_err(io::Error::other)?;
    let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
    out.write_all(&bytes)
}

fn error_line(index: usize, e: &Error) -> String {
    json!({"index": index, "error": e.code(), "message": e.to_string()}).to_string()
}

/// graph6 of `G'(p)` per input line; failures go to stderr.
pub fn augment_stream<R: BufRead + ?Sized, W: Write + ?Sized>(input: &mut R, out: &mut W) -> io::Result<usize> {
    let mut errors = 0;
    for (index, line) in (Lines { inner: input }).enumerate() {
        match parse_graph6(&line?).and_then(|g| augmented_graph(&g)) {
            Ok(a) => writeln!(out, "{}", to_graph6_string(&a))?,
            Err(e) => {
                errors += 1;
                eprintln!("{}", error_line(index, &e));
            }
        }
    }
    Ok(errors)
}

/// One JSON object per input line: `phi` lists the characteristic polynomial
/// coefficients as decimal strings, constant term first.
pub fn spectra_stream<R: BufRead + ?Sized, W: Write + ?Sized>(input: &mut R, out: &mut W) -> io::Result<usize> {
    let mut errors = 0;
    for (index, line) in (Lines { inner: input }).enumerate() {
        let rec = match parse_graph6(&line?).and_then(|g| spectral_data(&g).map(|s| (g, s))) {
            Ok((g, s)) => json!({
                "index": index,
                "n": g.n(),
                "degree": s.degree,
                "phi": s.phi.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "tau": s.tau_i64(),
                "d": s.d,
            })
            .to_string(),
            Err(e) => {
                errors += 1;
                error_line(index, &e)
            }
        };
        writeln!(out, "{rec}")?;
    }
    Ok(errors)
}
