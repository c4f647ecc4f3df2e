//! `bookram`: bounds, certificates, search and extraction for book Ramsey
//! numbers from the command line.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage or domain error,
//! 3 malformed input.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bookram::bounds::best_bounds;
use bookram::extract::{aes_check, extract, ExtractionResult};
use bookram::metrics::{book_size, census, largest_book};
use bookram::search::{
    arrows, find_witness, ramsey_number, Answer, Coloring, SearchOptions, DEFAULT_BUDGET,
    DEFAULT_CAP,
};
use bookram::srg::{certify, paley, verify_srg, LowerBoundCertificate};
use bookram::srg_table::{repro, RowStatus};
use bookram::{from_graph6, to_graph6, Error, Graph};

#[derive(Parser)]
#[command(name = "bookram", version, about = "Book Ramsey numbers r(B_m, B_n)")]
struct Cli {
    /// Emit a single JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for exhaustive search.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Allow exhaustive search above the default order cap.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Best known interval for r(B_m, B_n).
    Bounds {
        m: u64,
        n: u64,
        /// graph6 witness graphs or JSON certificates.
        #[arg(long = "cert")]
        certs: Vec<PathBuf>,
    },
    /// Book size of a graph.
    Bs {
        file: PathBuf,
        #[arg(long)]
        complement: bool,
    },
    /// Induced C4, K4, diamond and C4 ∪ K1 counts.
    Counts { file: PathBuf },
    /// Strongly regular graphs: verification, Paley construction, certificates.
    #[command(subcommand)]
    Srg(SrgCommand),
    /// Exhaustive and heuristic search over two-colourings of K_N.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Look for a large monochromatic book in a colouring (red graph given).
    Extract {
        file: PathBuf,
        #[arg(short = 'm')]
        m: usize,
    },
    /// Andrásfai–Erdős–Sós property triple.
    Aes {
        file: PathBuf,
        #[arg(short = 'r', default_value_t = 3)]
        r: usize,
    },
    /// Verify the strongly regular exact-value table and the diagonal Paley values.
    Repro {
        /// Witness directory (default: $BOOKRAM_DATA, then ./data).
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SrgCommand {
    /// Strongly regular parameters of a graph, if any.
    Verify { file: PathBuf },
    /// Paley graph on GF(q) in graph6.
    Paley {
        q: u64,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Lower-bound certificate from a graph and its complement.
    Certify { file: PathBuf },
}

#[derive(Args)]
struct Question {
    order: usize,
    m: usize,
    n: usize,
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Decide whether every colouring of K_N has a red B_m or a blue B_n.
    Arrows(Question),
    /// Simulated annealing for a colouring avoiding both books.
    Witness {
        #[command(flatten)]
        question: Question,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the red graph here and a JSON sidecar next to it.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Smallest arrowing order up to the cap.
    Number {
        m: usize,
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_order: usize,
    },
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Graph6(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn format_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn graph6_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    let mut lines = graph6_lines(&text);
    let first = lines
        .next()
        .ok_or_else(|| format_error(format!("{}: no graph", path.display())))?;
    if lines.next().is_some() {
        return Err(format_error(format!(
            "{}: expected a single graph",
            path.display()
        )));
    }
    from_graph6(first).map_err(|e| format_error(format!("{}: {e}", path.display())))
}

fn read_certificates(path: &Path) -> Result<Vec<LowerBoundCertificate>, Failure> {
    let text = read_text(path)?;
    if text.trim_start().starts_with('{') {
        let c: LowerBoundCertificate = serde_json::from_str(&text)
            .map_err(|e| format_error(format!("{}: {e}", path.display())))?;
        return Ok(vec![c]);
    }
    graph6_lines(&text)
        .map(|l| {
            from_graph6(l)
                .map(|g| certify(&g))
                .map_err(|e| format_error(format!("{}: {e}", path.display())))
        })
        .collect()
}

fn opt(x: Option<impl ToString>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON value serializes")
    );
}

fn data_dir(flag: Option<PathBuf>) -> PathBuf {
    if let Some(d) = flag {
        return d;
    }
    if let Some(d) = std::env::var_os("BOOKRAM_DATA") {
        return PathBuf::from(d);
    }
    let local = PathBuf::from("data");
    if local.is_dir() {
        return local;
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn cmd_bounds(json: bool, m: u64, n: u64, certs: &[PathBuf]) -> Outcome {
    let mut all = Vec::new();
    for p in certs {
        all.extend(read_certificates(p)?);
    }
    let b = best_bounds(m, n, &all)?;
    if json {
        print_json(&serde_json::to_value(&b).expect("interval serializes"));
    } else {
        println!(
            "r(B_{m}, B_{n}) in [{}, {}]{}",
            b.lower,
            b.upper,
            if b.exact { " exact" } else { "" }
        );
        let width = b.provenance.iter().map(|p| p.rule.len()).max().unwrap_or(0);
        for p in &b.provenance {
            let mark = if p.applicable {
                ""
            } else {
                " (not applicable)"
            };
            println!("  {:width$}  {:>8}{mark}", p.rule, opt(p.value));
        }
    }
    Ok(0)
}

fn cmd_bs(json: bool, file: &Path, complement: bool) -> Outcome {
    let mut g = read_graph(file)?;
    if complement {
        g = g.complement();
    }
    let best = largest_book(&g);
    if json {
        print_json(&json!({
            "order": g.order(),
            "complement": complement,
            "book_size": book_size(&g),
            "spine": best.as_ref().map(|((u, v), _)| [u, v]),
            "pages": best.as_ref().map(|(_, p)| p.to_vec()),
        }));
    } else {
        println!("{}", opt(book_size(&g)));
    }
    Ok(0)
}

fn cmd_counts(json: bool, file: &Path) -> Outcome {
    let g = read_graph(file)?;
    let c = census(&g);
    let residual = c.c4_identity_residual();
    if json {
        let mut v = serde_json::to_value(&c).expect("census serializes");
        v["order"] = json!(g.order());
        v["identity_residual"] = json!(residual);
        print_json(&v);
    } else {
        let rows = [
            ("c4", c.c4.to_string()),
            ("k4", c.k4.to_string()),
            ("b2", c.b2.to_string()),
            ("h", c.h.to_string()),
            ("pair_sum", c.pair_sum.to_string()),
            ("edge_sum", c.edge_sum.to_string()),
            ("identity_residual", residual.to_string()),
        ];
        for (k, v) in rows {
            println!("{k:<18} {v}");
        }
    }
    if residual != 0 {
        return Err(Failure {
            code: 1,
            message: format!("C4 identity residual {residual}"),
        });
    }
    Ok(0)
}

fn cmd_srg(json: bool, cmd: SrgCommand) -> Outcome {
    match cmd {
        SrgCommand::Verify { file } => {
            let g = read_graph(&file)?;
            let p = verify_srg(&g);
            if json {
                print_json(&json!({ "order": g.order(), "srg": p }));
            } else {
                println!(
                    "{}",
                    p.map_or_else(|| "not strongly regular".to_string(), |p| p.to_string())
                );
            }
            Ok(if p.is_some() { 0 } else { 1 })
        }
        SrgCommand::Paley { q, output } => {
            let g = paley(q)?;
            let g6 = to_graph6(&g);
            if let Some(path) = &output {
                fs::write(path, format!("{g6}\n"))
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            if json {
                print_json(&json!({ "q": q, "graph6": g6, "srg": verify_srg(&g) }));
            } else if output.is_none() {
                println!("{g6}");
            }
            Ok(0)
        }
        SrgCommand::Certify { file } => {
            let c = certify(&read_graph(&file)?);
            if json {
                print_json(&serde_json::to_value(&c).expect("certificate serializes"));
            } else {
                println!("r(B_{}, B_{}) >= {}", c.m, c.n, c.bound);
                if let Some(p) = c.srg_params {
                    println!("  strongly regular {p}");
                }
                if c.is_degenerate() {
                    println!("  degenerate: one colour has no edges");
                }
            }
            Ok(0)
        }
    }
}

fn write_witness(path: &Path, c: &Coloring, m: usize, n: usize) -> Result<(), Failure> {
    let io_err = |e: io::Error| usage(format!("{}: {e}", path.display()));
    fs::write(path, format!("{}\n", to_graph6(c.red()))).map_err(io_err)?;
    let sidecar = path.with_extension("json");
    let body = serde_json::to_string_pretty(&c.witness_file(m, n)).expect("witness serializes");
    fs::write(&sidecar, body + "\n").map_err(|e| usage(format!("{}: {e}", sidecar.display())))
}

fn cmd_search(json: bool, opts: &SearchOptions, cmd: SearchCommand) -> Outcome {
    match cmd {
        SearchCommand::Arrows(q) => {
            let r = arrows(q.order, q.m, q.n, opts)?;
            if json {
                print_json(&r.to_json());
            } else {
                let answer = serde_json::to_value(r.answer).expect("answer serializes");
                println!(
                    "K_{} -> (B_{}, B_{}): {}",
                    q.order,
                    q.m,
                    q.n,
                    answer.as_str().unwrap_or("?")
                );
                if let Some(w) = &r.witness {
                    println!("witness {}", to_graph6(w.red()));
                }
                println!("nodes {}  elapsed {:?}", r.nodes_explored, r.elapsed);
            }
            Ok(if r.answer == Answer::Arrows { 0 } else { 1 })
        }
        SearchCommand::Witness {
            question: q,
            seed,
            budget,
            output,
        } => {
            let found = find_witness(q.order, q.m, q.n, budget, seed)?;
            if let (Some(c), Some(path)) = (&found, &output) {
                write_witness(path, c, q.m, q.n)?;
            }
            if json {
                let mut v = json!({
                    "question": { "N": q.order, "m": q.m, "n": q.n },
                    "seed": seed,
                    "budget": budget,
                    "found": found.is_some(),
                    "witness": found.as_ref().map(|c| to_graph6(c.red())),
                });
                if let Some(c) = &found {
                    v["red_bs"] = json!(c.red_book_size());
                    v["blue_bs"] = json!(c.blue_book_size());
                }
                print_json(&v);
            } else {
                match &found {
                    Some(c) => println!("{}", to_graph6(c.red())),
                    None => println!("not found"),
                }
            }
            Ok(if found.is_some() { 0 } else { 1 })
        }
        SearchCommand::Number { m, n, max_order } => {
            let r = ramsey_number(m, n, max_order, opts)?;
            if json {
                print_json(&json!({
                    "m": m,
                    "n": n,
                    "max_order": max_order,
                    "value": r.value,
                    "witness": r.witness().map(|c| to_graph6(c.red())),
                    "reports": r.reports.iter().map(|x| x.to_json()).collect::<Vec<_>>(),
                }));
            } else {
                match r.value {
                    Some(v) => println!("r(B_{m}, B_{n}) = {v}"),
                    None => println!("r(B_{m}, B_{n}) > {max_order}"),
                }
                if let Some(c) = r.witness() {
                    println!("witness on {} vertices: {}", c.order(), to_graph6(c.red()));
                }
            }
            Ok(if r.value.is_some() { 0 } else { 1 })
        }
    }
}

fn cmd_extract(json: bool, file: &Path, m: usize) -> Outcome {
    let c = Coloring::new(read_graph(file)?);
    let out = extract(&c, m)?;
    if json {
        print_json(&out.to_json());
    } else {
        match &out.result {
            ExtractionResult::RedBook(w) | ExtractionResult::BlueBook(w) => println!(
                "{:?} book on spine {:?} with {} pages",
                w.color,
                w.spine,
                w.page_count()
            ),
            ExtractionResult::HypothesisFailed(s) => println!("hypothesis failed at {}", s.name()),
        }
        for r in out.trace.steps() {
            let status = serde_json::to_value(r.status).expect("status serializes");
            println!(
                "  {:<20} {:<8} {}",
                r.step.name(),
                status.as_str().unwrap_or("?"),
                r.data
            );
        }
    }
    Ok(0)
}

fn cmd_aes(json: bool, file: &Path, r: usize) -> Outcome {
    let g = read_graph(file)?;
    let t = aes_check(&g, r)?;
    if json {
        print_json(&serde_json::to_value(t).expect("triple serializes"));
    } else {
        println!("no K_{r}: {}", t.no_clique);
        println!("min degree above threshold: {}", t.min_degree_above);
        println!("chromatic number >= {r}: {}", t.chromatic_at_least_r);
    }
    Ok(0)
}

fn cmd_repro(json: bool, data: Option<PathBuf>) -> Outcome {
    let dir = data_dir(data);
    let report = repro(&dir)?;
    if json {
        print_json(&serde_json::to_value(&report).expect("report serializes"));
    } else {
        println!("data: {}", report.data_dir);
        println!(
            "{:<9} {:>5} {:<18} {:>5} {:>5}  {:<40} status",
            "(m,n)", "r", "(v,k,l,mu)", "lower", "upper", "upper from"
        );
        for r in &report.rows {
            let status = match r.status {
                RowStatus::Exact => "exact",
                RowStatus::CertificateMissing => "certificate-missing",
                RowStatus::Mismatch => "MISMATCH",
            };
            println!(
                "{:<9} {:>5} {:<18} {:>5} {:>5}  {:<40} {} {}",
                format!("({},{})", r.m, r.n),
                r.value,
                r.params.to_string(),
                r.lower,
                r.upper,
                r.upper_rules.join(","),
                status,
                if r.passed() { "pass" } else { "FAIL" },
            );
        }
        let exact = report.paley.iter().filter(|p| p.exact).count();
        println!(
            "paley diagonal values r(B_n,B_n) = 4n+2: {exact}/{} exact",
            report.paley.len()
        );
        for p in report.paley.iter().filter(|p| !p.exact) {
            println!("  q = {}: [{}, {}] FAIL", p.q, p.lower, p.upper);
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    let opts = SearchOptions {
        cap: DEFAULT_CAP,
        force: cli.force,
        threads: cli.threads,
    };
    match cli.command {
        Command::Bounds { m, n, certs } => cmd_bounds(json, m, n, &certs),
        Command::Bs { file, complement } => cmd_bs(json, &file, complement),
        Command::Counts { file } => cmd_counts(json, &file),
        Command::Srg(c) => cmd_srg(json, c),
        Command::Search(c) => cmd_search(json, &opts, c),
        Command::Extract { file, m } => cmd_extract(json, &file, m),
        Command::Aes { file, r } => cmd_aes(json, &file, r),
        Command::Repro { data } => cmd_repro(json, data),
    }
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (`bookram ... | head`) like other filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("bookram: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
