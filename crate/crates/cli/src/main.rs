use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kr_strata::admissible::{enumerate_adm, violated_criterion, AdmFilter};
use kr_strata::affine::{AffineElement, Cocharacter};
use kr_strata::bruhat::BruhatOrder;
use kr_strata::strata::{closure_computed, closure_predicted, verify, CheckKind, VerifyConfig};
use kr_strata::weyl::SignedPermutation;
use kr_strata::{AdmissibleElement, Error};

use kr_strata_cli::record::ElementRecord;

/// Combinatorics of the admissible set in the extended affine Weyl group
/// of GSp_2g: enumeration, element inspection, verification of the p-rank
/// stratification results, cover diagrams and closure queries.
#[derive(Parser)]
#[command(name = "kr-strata", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DataFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the admissible set of genus g in canonical order.
    Enumerate {
        #[arg(long = "g")]
        g: usize,
        /// Keep only elements of this p-rank.
        #[arg(long)]
        prank: Option<usize>,
        /// Keep only elements with exactly this fixed set, e.g. 1,3.
        #[arg(long, value_delimiter = ',')]
        fixed: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
        /// Genus budget override (default 5 for enumeration).
        #[arg(long, env = "STRATA_BUDGET")]
        budget: Option<usize>,
    },
    /// Inspect one element t^{x0}·w and report its admissibility.
    Element {
        #[arg(long = "g")]
        g: usize,
        /// The 2g translation coordinates, e.g. 0,1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x0: Vec<i64>,
        /// One-line images of w, e.g. 2,1.
        #[arg(long, value_delimiter = ',')]
        w: Vec<usize>,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Run verification checks and print a report; exits 1 on failure.
    Verify {
        #[arg(long = "g")]
        g: usize,
        /// Comma-separated checks (dim, counts, max-set, length-formula,
        /// closure, adm-card, bruhat-cross, reduced-word) or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        check: Vec<String>,
        /// Genus budget override for all selected checks.
        #[arg(long, env = "STRATA_BUDGET")]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Cover diagram of the admissible set (or one p-rank stratum).
    Hasse {
        #[arg(long = "g")]
        g: usize,
        #[arg(long)]
        prank: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Genus budget override (default 4 for diagrams).
        #[arg(long, env = "STRATA_BUDGET")]
        budget: Option<usize>,
    },
    /// Bruhat downward closure of a p-rank stratum.
    Closure {
        #[arg(long = "g")]
        g: usize,
        #[arg(long)]
        prank: usize,
        /// Also compute the predicted set; exit 1 with a diff if they differ.
        #[arg(long)]
        compare: bool,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
        /// Genus budget override (default 4 for closures).
        #[arg(long, env = "STRATA_BUDGET")]
        budget: Option<usize>,
    },
}

/// Writes one line to stdout, exiting quietly when the consumer closed
/// the pipe (e.g. `kr-strata enumerate ... | head`).
fn emit(line: std::fmt::Arguments) {
    let mut stdout = std::io::stdout().lock();
    let outcome = stdout
        .write_fmt(line)
        .and_then(|()| stdout.write_all(b"\n"));
    if let Err(e) = outcome {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

macro_rules! out {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
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
        Command::Enumerate {
            g,
            prank,
            fixed,
            format,
            budget,
        } => cmd_enumerate(g, prank, fixed, format, budget),
        Command::Element { g, x0, w, format } => cmd_element(g, x0, w, format),
        Command::Verify {
            g,
            check,
            budget,
            format,
        } => cmd_verify(g, check, budget, format),
        Command::Hasse {
            g,
            prank,
            format,
            budget,
        } => cmd_hasse(g, prank, format, budget),
        Command::Closure {
            g,
            prank,
            compare,
            format,
            budget,
        } => cmd_closure(g, prank, compare, format, budget),
    }
}

fn gate_budget(g: usize, default_limit: usize, budget: Option<usize>) -> Result<(), String> {
    let limit = budget.unwrap_or(default_limit);
    if g > limit {
        return Err(format!(
            "genus {g} exceeds the budget {limit}; pass --budget {g} (or set STRATA_BUDGET) to override"
        ));
    }
    Ok(())
}

fn print_records(records: &[ElementRecord], format: DataFormat) -> Result<(), String> {
    match format {
        DataFormat::Json => {
            let text = serde_json::to_string_pretty(records).map_err(|e| e.to_string())?;
            out!("{text}");
        }
        DataFormat::Csv => {
            out!("{}", ElementRecord::CSV_HEADER);
            for r in records {
                out!("{}", r.csv_row());
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(
    g: usize,
    prank: Option<usize>,
    fixed: Option<Vec<usize>>,
    format: DataFormat,
    budget: Option<usize>,
) -> Result<ExitCode, String> {
    gate_budget(g, 5, budget)?;
    let filter = AdmFilter {
        prank,
        fixed,
        v: None,
    };
    let elements = enumerate_adm(g, &filter).map_err(|e| e.to_string())?;
    let records: Vec<ElementRecord> = elements
        .iter()
        .map(ElementRecord::from_admissible)
        .collect();
    print_records(&records, format)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_element(
    g: usize,
    x0: Vec<i64>,
    w: Vec<usize>,
    format: DataFormat,
) -> Result<ExitCode, String> {
    if g == 0 {
        return Err("genus must be at least 1".into());
    }
    if x0.len() != 2 * g {
        return Err(format!(
            "--x0 needs {} coordinates, got {}",
            2 * g,
            x0.len()
        ));
    }
    if w.len() != 2 * g {
        return Err(format!("--w needs {} images, got {}", 2 * g, w.len()));
    }
    // Malformed permutations are usage errors; everything beyond that is
    // reported as an admissibility verdict naming the violated criterion.
    let signed = match SignedPermutation::new(w) {
        Ok(signed) => signed,
        Err(Error::NotAPermutation { n }) => {
            return Err(format!("--w is not a permutation of 1..={n}"))
        }
        Err(err) => return report_inadmissible(&err.to_string(), format),
    };
    let cochar = match Cocharacter::new(x0) {
        Ok(c) => c,
        Err(err) => return report_inadmissible(&err.to_string(), format),
    };
    let elem = AffineElement::new(cochar, signed);
    if let Some(criterion) = violated_criterion(&elem) {
        return report_inadmissible(&criterion, format);
    }
    let record = ElementRecord::from_admissible(
        &AdmissibleElement::new(elem).expect("criterion already checked"),
    );
    match format {
        DataFormat::Json => {
            let body = json!({ "admissible": true, "record": record });
            out!(
                "{}",
                serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?
            );
        }
        DataFormat::Csv => {
            out!("{}", ElementRecord::CSV_HEADER);
            out!("{}", record.csv_row());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_inadmissible(criterion: &str, format: DataFormat) -> Result<ExitCode, String> {
    match format {
        DataFormat::Json => {
            let body = json!({ "admissible": false, "criterion": criterion });
            out!(
                "{}",
                serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?
            );
        }
        DataFormat::Csv => {
            out!("admissible,criterion");
            out!("false,{criterion}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    g: usize,
    check: Vec<String>,
    budget: Option<usize>,
    format: ReportFormat,
) -> Result<ExitCode, String> {
    let mut checks = Vec::new();
    for name in &check {
        if name == "all" {
            checks.extend(CheckKind::ALL);
        } else {
            checks.push(name.parse::<CheckKind>().map_err(|e| e.to_string())?);
        }
    }
    let config = VerifyConfig { checks, budget };
    let report = verify(g, &config).map_err(|e| e.to_string())?;
    match format {
        ReportFormat::Json => {
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "prank": c.prank,
                        "expected": c.expected,
                        "actual": c.actual,
                        "pass": c.pass,
                        "counterexamples": c.counterexamples,
                    })
                })
                .collect();
            let body = json!({ "g": report.g, "checks": checks });
            out!(
                "{}",
                serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?
            );
        }
        ReportFormat::Table => {
            out!(
                "{:<22} {:>5}  {:<36} {:<40} result",
                "check",
                "prank",
                "expected",
                "actual"
            );
            for c in &report.checks {
                let prank = c.prank.map_or(String::from("-"), |d| d.to_string());
                out!(
                    "{:<22} {:>5}  {:<36} {:<40} {}",
                    c.name,
                    prank,
                    c.expected,
                    c.actual,
                    if c.pass { "pass" } else { "FAIL" }
                );
            }
            if let Some(failure) = report.first_failure() {
                if let Some(first) = failure.counterexamples.first() {
                    out!("counterexample ({}): {first}", failure.name);
                }
            }
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_hasse(
    g: usize,
    prank: Option<usize>,
    format: GraphFormat,
    budget: Option<usize>,
) -> Result<ExitCode, String> {
    gate_budget(g, 4, budget)?;
    let filter = AdmFilter {
        prank,
        fixed: None,
        v: None,
    };
    let elements = enumerate_adm(g, &filter).map_err(|e| e.to_string())?;
    let nodes: Vec<AffineElement> = elements.iter().map(|x| x.element().clone()).collect();
    let mut order = BruhatOrder::new();
    let diagram = order.covers(&nodes).map_err(|e| e.to_string())?;
    match format {
        GraphFormat::Dot => {
            out!("digraph hasse {{");
            out!("  rankdir=BT;");
            for node in &diagram.nodes {
                out!(
                    "  \"{}\" [label=\"x0={} w={} len={}\"];",
                    node.canonical_id(),
                    node.x0(),
                    node.weyl(),
                    node.im_length()
                );
            }
            for &(lo, hi) in &diagram.edges {
                out!(
                    "  \"{}\" -> \"{}\";",
                    diagram.nodes[lo].canonical_id(),
                    diagram.nodes[hi].canonical_id()
                );
            }
            out!("}}");
        }
        GraphFormat::Json => {
            let nodes: Vec<_> = diagram
                .nodes
                .iter()
                .map(|n| json!({ "id": n.canonical_id(), "length": n.im_length() }))
                .collect();
            let edges: Vec<_> = diagram
                .edges
                .iter()
                .map(|&(lo, hi)| {
                    json!({
                        "lower": diagram.nodes[lo].canonical_id(),
                        "upper": diagram.nodes[hi].canonical_id(),
                    })
                })
                .collect();
            let body = json!({ "g": g, "nodes": nodes, "edges": edges });
            out!(
                "{}",
                serde_json::to_string_pretty(&body).map_err(|e| e.to_string())?
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_closure(
    g: usize,
    prank: usize,
    compare: bool,
    format: DataFormat,
    budget: Option<usize>,
) -> Result<ExitCode, String> {
    gate_budget(g, 4, budget)?;
    let mut order = BruhatOrder::new();
    let computed = closure_computed(g, prank, &mut order).map_err(|e| e.to_string())?;
    let records: Vec<ElementRecord> = computed
        .iter()
        .map(ElementRecord::from_admissible)
        .collect();
    print_records(&records, format)?;
    if compare {
        let predicted = closure_predicted(g, prank).map_err(|e| e.to_string())?;
        if computed != predicted {
            eprintln!("closure mismatch at (g, prank) = ({g}, {prank}):");
            for x in computed.iter().filter(|x| !predicted.contains(x)) {
                eprintln!("  computed only: {}", x.canonical_id());
            }
            for x in predicted.iter().filter(|x| !computed.contains(x)) {
                eprintln!("  predicted only: {}", x.canonical_id());
            }
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}
