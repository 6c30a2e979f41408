//! Command line surface: analyze, classify, decompose, solid, verify,
//! generate, enumerate.
//!
//! Exit status 0 = success / verification pass, 1 = verification fail
//! (counterexample found), 2 = usage or input error.

use clap::{Args, Parser, Subcommand};
use mcg::edge_class::classify_all_edges;
use mcg::families::{Family, FamilySpec};
use mcg::graph::Graph;
use mcg::harness::claims::{verify_claim, ClaimId};
use mcg::harness::report::{emit_report, ReportFormat, VerificationReport};
use mcg::harness::{CorpusOrigin, CorpusSource};
use mcg::solid::{solidity, Solidity};
use mcg::structure::{
    is_brick, is_matching_covered, is_wheel, tight_cut_decomposition, ContractedSide,
};
use mcg::{parse_graph6, to_graph6};
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

/// Structural analysis keeps to the documented scale.
const ANALYZE_MAX_ORDER: usize = 16;

#[derive(Parser)]
#[command(
    name = "mcg",
    about = "Matching covered graph toolkit: structure, edge classification, \
             and claim verification over graph6 corpora",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural summary per graph: matching covered, brick, b(G),
    /// solidity, wheel recognition.
    Analyze(InputArgs),
    /// Edge classification table: perfect matching counts, removable,
    /// b-invariant, solitary.
    Classify(InputArgs),
    /// Tight cut decomposition trace and leaves.
    Decompose(InputArgs),
    /// Solidity verdict with a witness when nonsolid.
    Solid(InputArgs),
    /// Run a claim verification over a corpus.
    Verify(VerifyArgs),
    /// Emit family graphs as graph6.
    Generate(GenerateArgs),
    /// Emit the builtin enumeration (one representative per isomorphism
    /// class) as graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file, one record per line; "-" reads standard input.
    #[arg(long)]
    input: Option<String>,
    /// Family name: wheel, cycle, complete, prism, moebius-ladder, petersen,
    /// c6-complement.
    #[arg(long)]
    family: Option<String>,
    /// Order for parametric families.
    #[arg(long)]
    order: Option<usize>,
    /// Inline graph6 record.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id: main-theorem, lemma-solid-removable-b,
    /// lemma-two-nonremovable, lemma-two-nonsolitary, lemma-wheel-solitary,
    /// clm2002-existence, lfw2020-extremal, lovasz-uniqueness.
    #[arg(long)]
    claim: String,
    /// graph6 corpus file; "-" reads standard input.
    #[arg(long)]
    input: Option<String>,
    /// Builtin enumeration up to this order (claims over generated families
    /// use it as the family order bound instead).
    #[arg(long)]
    max_order: Option<usize>,
    /// Report format: text, json, or csv.
    #[arg(long, default_value = "text")]
    format: String,
    /// Report path for json/csv (default: <claim>-<timestamp>.<ext>).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    order: Option<usize>,
    /// Output path (default: standard output).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Exact order to enumerate.
    #[arg(long)]
    order: Option<usize>,
    /// Enumerate all orders up to this bound.
    #[arg(long)]
    max_order: Option<usize>,
    /// Output path (default: standard output).
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Analyze(args) => analyze(&load_graphs(&args)?),
        Command::Classify(args) => classify(&load_graphs(&args)?),
        Command::Decompose(args) => decompose(&load_graphs(&args)?),
        Command::Solid(args) => solid(&load_graphs(&args)?),
        Command::Verify(args) => verify(&args),
        Command::Generate(args) => generate_cmd(&args),
        Command::Enumerate(args) => enumerate_cmd(&args),
    }
}

fn load_graphs(args: &InputArgs) -> Result<Vec<Graph>, String> {
    let sources = usize::from(args.input.is_some())
        + usize::from(args.family.is_some())
        + usize::from(args.graph6.is_some());
    if sources != 1 {
        return Err(
            "exactly one input source required: --input, --family, or --graph6".to_string(),
        );
    }
    if let Some(text) = &args.graph6 {
        return Ok(vec![parse_graph6(text).map_err(|e| e.to_string())?]);
    }
    if let Some(name) = &args.family {
        let family = Family::from_str(name).map_err(|e| e.to_string())?;
        let spec = match args.order {
            Some(n) => FamilySpec::of_order(family, n),
            None => FamilySpec::fixed(family),
        };
        return Ok(vec![
            mcg::families::generate(&spec).map_err(|e| e.to_string())?
        ]);
    }
    let path = args.input.as_ref().unwrap();
    read_graph_lines(path)
}

fn read_graph_lines(path: &str) -> Result<Vec<Graph>, String> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| e.to_string())?;
        buffer
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| format!("line {}: {e}", idx + 1))?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err("no graphs in input".to_string());
    }
    Ok(graphs)
}

fn check_scale(graphs: &[Graph]) -> Result<(), String> {
    for g in graphs {
        if g.n() > ANALYZE_MAX_ORDER {
            return Err(format!(
                "graph of order {} exceeds the analysis bound {ANALYZE_MAX_ORDER}",
                g.n()
            ));
        }
    }
    Ok(())
}

fn analyze(graphs: &[Graph]) -> Result<ExitCode, String> {
    check_scale(graphs)?;
    for (i, g) in graphs.iter().enumerate() {
        let mc = is_matching_covered(g);
        let brick = is_brick(g);
        let b = if mc {
            tight_cut_decomposition(g)
                .map(|d| d.brick_count.to_string())
                .unwrap_or_else(|_| "-".to_string())
        } else {
            "-".to_string()
        };
        let solid_str = if brick {
            match solidity(g) {
                Ok(Solidity::Solid) => "yes",
                Ok(Solidity::Nonsolid(_)) => "no",
                Err(_) => "-",
            }
        } else {
            "-"
        };
        println!(
            "graph {} {}: n={} edges={} matching-covered={} brick={} b(G)={} solid={} wheel={}",
            i + 1,
            to_graph6(g),
            g.n(),
            g.edge_count(),
            mc,
            brick,
            b,
            solid_str,
            is_wheel(g)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn classify(graphs: &[Graph]) -> Result<ExitCode, String> {
    check_scale(graphs)?;
    for (i, g) in graphs.iter().enumerate() {
        println!("graph {} {}:", i + 1, to_graph6(g));
        let classes = classify_all_edges(g).map_err(|e| e.to_string())?;
        println!("  edge      pm-count  removable  b-invariant  solitary");
        for c in classes {
            println!(
                "  {:<8}  {:<8}  {:<9}  {:<11}  {}",
                format!("{}-{}", c.edge.u(), c.edge.v()),
                c.pm_count,
                c.removable,
                c.b_invariant,
                c.solitary
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn decompose(graphs: &[Graph]) -> Result<ExitCode, String> {
    check_scale(graphs)?;
    for (i, g) in graphs.iter().enumerate() {
        println!("graph {} {}:", i + 1, to_graph6(g));
        let d = tight_cut_decomposition(g).map_err(|e| e.to_string())?;
        for (step, t) in d.trace.iter().enumerate() {
            let side = match t.side {
                ContractedSide::Shore => "shore",
                ContractedSide::Complement => "complement",
            };
            println!(
                "  step {}: order={} shore={:?} contracted={side}",
                step + 1,
                t.order,
                t.shore
            );
        }
        for (j, leaf) in d.leaves.iter().enumerate() {
            println!(
                "  leaf {}: {} {}",
                j + 1,
                to_graph6(&leaf.graph),
                leaf.kind.name()
            );
        }
        println!("  b(G)={}", d.brick_count);
    }
    Ok(ExitCode::SUCCESS)
}

fn solid(graphs: &[Graph]) -> Result<ExitCode, String> {
    check_scale(graphs)?;
    for (i, g) in graphs.iter().enumerate() {
        match solidity(g).map_err(|e| e.to_string())? {
            Solidity::Solid => println!("graph {} {}: SOLID", i + 1, to_graph6(g)),
            Solidity::Nonsolid(w) => {
                println!("graph {} {}: NONSOLID", i + 1, to_graph6(g));
                println!("  odd cycle 1: {:?}", w.cycle1.vertices());
                println!("  odd cycle 2: {:?}", w.cycle2.vertices());
                let edges: Vec<String> = w
                    .remainder_matching
                    .edges()
                    .iter()
                    .map(|e| format!("{}-{}", e.u(), e.v()))
                    .collect();
                println!("  remainder matching: [{}]", edges.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let claim = ClaimId::from_str(&args.claim).map_err(|e| e.to_string())?;
    let format = ReportFormat::from_str(&args.format).map_err(|e| e.to_string())?;
    let source = verification_source(claim, args)?;
    let report = verify_claim(claim, &source).map_err(|e| e.to_string())?;
    deliver_report(&report, format, args.out.as_deref())?;
    if report.verdict.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn verification_source(claim: ClaimId, args: &VerifyArgs) -> Result<CorpusSource, String> {
    if args.input.is_some() && args.max_order.is_some() {
        return Err("pass either --input or --max-order, not both".to_string());
    }
    // Claims over generated families take the order bound as the family
    // ceiling; everything else reads a corpus.
    match claim {
        ClaimId::LemmaWheelSolitary => {
            let max = args.max_order.unwrap_or(12);
            let specs: Vec<FamilySpec> = (3..=max / 2)
                .map(|k| FamilySpec::of_order(Family::Wheel, 2 * k))
                .collect();
            if specs.is_empty() {
                return Err("no even wheel orders at or below the bound".to_string());
            }
            Ok(CorpusSource::families(specs))
        }
        ClaimId::Lfw2020Extremal => {
            let max = args.max_order.unwrap_or(12);
            let mut specs = Vec::new();
            let mut n = 8;
            while n <= max {
                specs.push(FamilySpec::of_order(Family::MoebiusLadder, n));
                n += 4;
            }
            let mut n = 10;
            while n <= max {
                specs.push(FamilySpec::of_order(Family::Prism, n));
                n += 4;
            }
            if specs.is_empty() {
                return Err("no extremal family orders at or below the bound".to_string());
            }
            Ok(CorpusSource::families(specs))
        }
        _ => {
            if let Some(path) = &args.input {
                if path == "-" {
                    // Materialize stdin into a temp file so the harness can
                    // report line numbers uniformly.
                    let mut buffer = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buffer)
                        .map_err(|e| e.to_string())?;
                    let path = std::env::temp_dir().join(format!(
                        "mcg-stdin-{}.g6",
                        std::process::id()
                    ));
                    std::fs::write(&path, buffer).map_err(|e| e.to_string())?;
                    Ok(CorpusSource::file(path))
                } else {
                    Ok(CorpusSource::file(path))
                }
            } else if let Some(max) = args.max_order {
                Ok(CorpusSource {
                    origin: CorpusOrigin::Builtin {
                        min_order: 1,
                        max_order: max,
                    },
                    filters: Vec::new(),
                })
            } else {
                Err("the claim needs a corpus: pass --input or --max-order".to_string())
            }
        }
    }
}

fn deliver_report(
    report: &VerificationReport,
    format: ReportFormat,
    out: Option<&str>,
) -> Result<(), String> {
    let document = emit_report(report, format);
    match (format, out) {
        (ReportFormat::Text, None) => {
            print!("{document}");
        }
        (_, Some(path)) => {
            std::fs::write(path, &document).map_err(|e| format!("{path}: {e}"))?;
            println!(
                "{}: report written to {path}",
                if report.verdict.passed() { "PASS" } else { "FAIL" }
            );
        }
        (_, None) => {
            let ext = match format {
                ReportFormat::Json => "json",
                ReportFormat::Csv => "csv",
                ReportFormat::Text => "txt",
            };
            let stamp = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            let path = format!("{}-{stamp}.{ext}", report.claim_id);
            std::fs::write(&path, &document).map_err(|e| format!("{path}: {e}"))?;
            println!(
                "{}: report written to {path}",
                if report.verdict.passed() { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(())
}

fn generate_cmd(args: &GenerateArgs) -> Result<ExitCode, String> {
    let family = Family::from_str(&args.family).map_err(|e| e.to_string())?;
    let spec = match args.order {
        Some(n) => FamilySpec::of_order(family, n),
        None => FamilySpec::fixed(family),
    };
    let g = mcg::families::generate(&spec).map_err(|e| e.to_string())?;
    write_graphs(&[g], args.out.as_deref())
}

fn enumerate_cmd(args: &EnumerateArgs) -> Result<ExitCode, String> {
    let (min_order, max_order) = match (args.order, args.max_order) {
        (Some(n), None) => (n, n),
        (None, Some(n)) => (1, n),
        _ => return Err("pass exactly one of --order or --max-order".to_string()),
    };
    let source = CorpusSource {
        origin: CorpusOrigin::Builtin {
            min_order,
            max_order,
        },
        filters: Vec::new(),
    };
    let ingest = mcg::harness::ingest(&source).map_err(|e| e.to_string())?;
    write_graphs(&ingest.graphs, args.out.as_deref())
}

fn write_graphs(graphs: &[Graph], out: Option<&str>) -> Result<ExitCode, String> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&to_graph6(g));
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{path}: {e}"))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
