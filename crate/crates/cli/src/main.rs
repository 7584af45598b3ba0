//! Command-line front end.
//!
//! Exit status is a stable contract: 0 when the torsion structure is ruled
//! out, 2 when the certificate is inconclusive, 1 on any usage or internal
//! error. Subcommands other than `check` exit 0 on success.

use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use cubic_torsion::obstruction::{CandidateOrder, DEFAULT_DEGREE, DEFAULT_PRIME};
use cubic_torsion::{
    check_torsion, classify_traces, cross_validation_scan, curves_with_point_of_order, genus_x1,
    make_field, CertificateDocument, DecompositionTable, Evidence, FieldTable, PrimePower,
    StepKind, StepStatus, Verdict,
};

const EXIT_RULED_OUT: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cubic-torsion",
    version,
    about = "Obstruction certificates for Z/NZ torsion over number fields of degree <= 3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the obstruction certificate for Z/NZ
    Check(CheckArgs),
    /// Enumerate every elliptic curve over F_q
    Enumerate(EnumerateArgs),
    /// List the admissible traces of Frobenius over F_q
    Waterhouse {
        #[arg(long)]
        q: u64,
    },
    /// Genus of X_1(N)
    Genus {
        #[arg(long = "n")]
        n: u64,
    },
    /// Show the J_1(N) decomposition row and its genus check
    Tables {
        #[arg(long = "n")]
        n: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Torsion order N
    #[arg(long = "n")]
    n: u64,
    /// Degree of the number field
    #[arg(long, default_value_t = DEFAULT_DEGREE)]
    degree: u32,
    /// Residue characteristic to reduce at
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Write the JSON certificate here
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Confirm the good-reduction step by exhaustive enumeration
    #[arg(long)]
    cross_validate: bool,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct EnumerateModes {
    /// Print the multiset of group orders (default)
    #[arg(long)]
    orders: bool,
    /// Print the set of traces of Frobenius
    #[arg(long)]
    traces: bool,
    /// List curves with a rational point of exact order N
    #[arg(long, value_name = "N")]
    with_point_of_order: Option<u64>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    mode: EnumerateModes,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

/// A closed downstream pipe (`| head`) is not an error.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Enumerate(args) => cmd_enumerate(&args).map(|_| 0),
        Command::Waterhouse { q } => cmd_waterhouse(q).map(|_| 0),
        Command::Genus { n } => {
            println!("{}", genus_x1(n)?);
            Ok(0)
        }
        Command::Tables { n } => cmd_tables(n).map(|_| 0),
    }
}

fn kind_label(kind: StepKind) -> &'static str {
    match kind {
        StepKind::ComputedCheck => "computed",
        StepKind::TablePremise => "table",
        StepKind::TheoremPremise => "theorem",
    }
}

fn describe_candidate(c: &CandidateOrder) -> String {
    match c.condition {
        Some(cond) => format!("{} (t = {}, admissible via {cond})", c.order, c.trace),
        None => format!("{} (t = {}, inadmissible)", c.order, c.trace),
    }
}

fn cmd_check(args: &CheckArgs) -> Result<u8> {
    if args.n == 0 {
        bail!("--n must be at least 1");
    }
    let cert = check_torsion(args.n, args.degree, args.prime)?;
    println!(
        "Z/{}Z over number fields of degree {}, reducing above p = {}",
        cert.level, cert.degree, cert.prime
    );
    for (i, step) in cert.steps.iter().enumerate() {
        let status = match step.status {
            StepStatus::Pass => "PASS",
            StepStatus::Fail => "FAIL",
        };
        println!(
            "{i:>3}  {:<8}  {status}  [{}] {}",
            kind_label(step.kind),
            step.name,
            step.statement
        );
    }
    if let Some(step) = cert.step(cubic_torsion::StepName::GoodReduction) {
        if let Evidence::GoodReduction { residue_fields } = &step.evidence {
            for r in residue_fields {
                let candidates = if r.candidates.is_empty() {
                    "none".to_string()
                } else {
                    r.candidates
                        .iter()
                        .map(describe_candidate)
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                println!(
                    "     F_{:<5} Hasse [{}, {}]  multiples of {}: {}",
                    r.q, r.hasse_interval[0], r.hasse_interval[1], cert.level, candidates
                );
            }
        }
    }

    let cross = if args.cross_validate {
        let scan = cross_validation_scan(args.n, args.prime, args.degree)?;
        for f in &scan.fields {
            println!(
                "     oracle F_{:<5} {} curves scanned, {} with a point of order {}{}",
                f.q,
                f.curves_scanned,
                f.curves_with_point,
                args.n,
                f.example
                    .as_ref()
                    .map(|e| format!(" (e.g. {e})"))
                    .unwrap_or_default()
            );
        }
        if scan.confirmed() {
            println!(
                "oracle-confirmed: no curve over any residue field has a point of order {}",
                args.n
            );
        } else if cert.verdict == Verdict::RuledOut {
            bail!("enumeration found a curve with a point of order {} although the certificate rules it out", args.n);
        } else {
            println!(
                "oracle: curves with a point of order {} exist over some residue field",
                args.n
            );
        }
        Some(scan)
    } else {
        None
    };

    if let Some(path) = &args.certificate {
        let doc = CertificateDocument::new(&cert, cross);
        std::fs::write(path, doc.to_json())
            .with_context(|| format!("writing certificate to {}", path.display()))?;
    }

    match cert.first_failure() {
        Some(step) => println!(
            "verdict: {} (first failing step: {})",
            cert.verdict, step.name
        ),
        None => println!("verdict: {}", cert.verdict),
    }
    Ok(match cert.verdict {
        Verdict::RuledOut => EXIT_RULED_OUT,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<()> {
    let pp = PrimePower::from_order(args.q)?;
    let field = make_field(pp.p(), pp.n())?;
    let q = field.order() as i64;
    let mut out = BufWriter::new(io::stdout().lock());
    if let Some(order) = args.mode.with_point_of_order {
        if order == 0 {
            bail!("--with-point-of-order must be at least 1");
        }
        let hits = curves_with_point_of_order(&field, order)?;
        for c in &hits {
            let [a1, a2, a3, a4, a6] = c.coefficients();
            writeln!(out, "[{a1}, {a2}, {a3}, {a4}, {a6}]  {}", c.group_shape()?)?;
        }
        writeln!(
            out,
            "{} curves over F_{} with a point of order {order}",
            hits.len(),
            q
        )?;
    } else if args.mode.traces {
        let traces = cubic_torsion::realized_traces(&field)?;
        let list: Vec<String> = traces.iter().map(|t| t.to_string()).collect();
        writeln!(out, "{{{}}}", list.join(", "))?;
    } else {
        let mut orders = BTreeMap::new();
        for c in FieldTable::new(&field)?.curves() {
            *orders.entry(c.count_points()).or_insert(0u64) += 1;
        }
        for (order, count) in orders {
            writeln!(out, "{order}\t{count}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_waterhouse(q: u64) -> Result<()> {
    let pp = PrimePower::from_order(q)?;
    let all = classify_traces(pp);
    let (lo, hi) = pp.hasse_interval();
    println!("F_{q}: |t| <= {}, orders in [{lo}, {hi}]", pp.trace_bound());
    for tq in all.iter().filter(|t| t.admissible) {
        let cond = tq
            .matched_condition
            .expect("admissible traces carry a condition");
        println!(
            "t = {:>4}  |E| = {:>4}  condition {cond}",
            tq.t,
            q as i64 + 1 - tq.t
        );
    }
    let excluded: Vec<String> = all
        .iter()
        .filter(|t| !t.admissible)
        .map(|t| t.t.to_string())
        .collect();
    println!(
        "excluded: {}",
        if excluded.is_empty() {
            "none".to_string()
        } else {
            excluded.join(", ")
        }
    );
    Ok(())
}

fn cmd_tables(level: Option<u64>) -> Result<()> {
    let table = DecompositionTable::embedded();
    let rows: Vec<_> = match level {
        Some(n) => vec![table
            .row(n)
            .with_context(|| format!("level {n} is not in the decomposition table"))?],
        None => table.rows().collect(),
    };
    for row in rows {
        let genus = genus_x1(row.level)?;
        let total = row.total_dimension();
        println!("{row}");
        println!(
            "  sum d*m = {total}, genus(X_1({})) = {genus}: {}",
            row.level,
            if total == genus {
                "consistent"
            } else {
                "MISMATCH"
            }
        );
        println!(
            "  J_1({})(Q) finite = {}",
            row.level,
            row.finiteness().is_finite()
        );
    }
    Ok(())
}
