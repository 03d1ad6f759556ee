//! Command-line front end: construction, verification, enumeration,
//! counting and syzygy-orbit exploration for sms's over `A_n^ell`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or bad input,
//! 3 resource guard exceeded, 4 internal assertion failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nakayama_sms::sms::{self, FamilyKind, FamilyLabel};
use nakayama_sms::noncrossing::{self, NonCrossingPartition};
use nakayama_sms::verifier;
use nakayama_sms::{arcs, oracle, Algebra, Error};

use nakayama_sms_cli::{
    module_strings, AlgebraJson, BrauerTreeJson, CountReport, EnumerationReport, FamilyReport,
    LabelJson, NcpReport, OracleCheckReport, SyzygyReport,
};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_ASSERTION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "nakayama-sms",
    version,
    about = "Simple-minded systems over self-injective Nakayama algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Long,
    Short,
}

impl From<KindArg> for FamilyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Long => FamilyKind::Long,
            KindArg::Short => FamilyKind::Short,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List (or just count) the non-crossing partitions of {1..e}
    Ncp {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        e: u32,
        /// Print only the Catalan count
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the family for (type, partition, k) over A_e^ell and lift it
    /// to A_n^ell
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long = "type", value_enum)]
        kind: KindArg,
        /// Partition of {1..e} in block format, e.g. "{1,2|3}"
        #[arg(long)]
        partition: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate all sms's and classify them against the
    /// constructed families
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
        /// Override the n*ell search guard
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the syzygy functor Omega^w to a constructed family and check
    /// the predicted label
    Syzygy {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long = "type", value_enum)]
        kind: KindArg,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        k: u32,
        /// Power w (negative for the cosyzygy)
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        power: i64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form sms count for A_n^ell or a Brauer tree algebra
    Count {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
        /// Brauer tree: number of edges and exceptional multiplicity
        #[arg(long, num_args = 2, value_names = ["EDGES", "M0"], conflicts_with_all = ["n", "ell"])]
        brauer_tree: Option<Vec<u32>>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the combinatorial Hom formulas against the matrix oracle
    /// and the arc classification against stable Hom
    OracleCheck {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_ell: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchGuardExceeded { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Prints the chosen rendering and optionally writes the JSON to a file.
fn emit(text: String, json: String, use_json: bool, out: Option<PathBuf>) -> Result<(), Failure> {
    if use_json {
        println!("{json}");
    } else {
        print!("{text}");
    }
    if let Some(path) = out {
        std::fs::write(&path, json.as_bytes()).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Ncp { e, count_only, json, out } => cmd_ncp(e, count_only, json, out),
        Command::Construct { n, ell, kind, partition, k, json, out } => {
            cmd_construct(n, ell, kind.into(), &partition, k, json, out)
        }
        Command::Enumerate { n, ell, force, json, out } => cmd_enumerate(n, ell, force, json, out),
        Command::Syzygy { n, ell, kind, partition, k, power, json, out } => {
            cmd_syzygy(n, ell, kind.into(), &partition, k, power, json, out)
        }
        Command::Count { n, ell, brauer_tree, json, out } => {
            cmd_count(n, ell, brauer_tree, json, out)
        }
        Command::OracleCheck { max_n, max_ell, json, out } => {
            cmd_oracle_check(max_n, max_ell, json, out)
        }
    }
}

fn cmd_ncp(e: u32, count_only: bool, json: bool, out: Option<PathBuf>) -> Result<u8, Failure> {
    let count = noncrossing::catalan(e);
    let (text, partitions) = if count_only {
        (format!("{count}\n"), None)
    } else {
        let all = noncrossing::enumerate(e);
        let rendered: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        (rendered.join("\n") + "\n", Some(rendered))
    };
    let report = NcpReport { e, count, partitions };
    emit(text, serde_json::to_string(&report).unwrap(), json, out)?;
    Ok(0)
}

/// Parses the partition, checks its ground set is exactly {1..e}, and
/// assembles the label.
fn parse_label(
    alg: &Algebra,
    kind: FamilyKind,
    partition: &str,
    k: u32,
) -> Result<FamilyLabel, Failure> {
    let p: NonCrossingPartition = partition.parse().map_err(Failure::from)?;
    if p.ground_size() != alg.e() {
        return Err(Failure::usage(format!(
            "partition {p} is over {{1..{}}} but e = gcd({}, {}) = {}",
            p.ground_size(),
            alg.n(),
            alg.ell(),
            alg.e()
        )));
    }
    if k < 1 || k > alg.e() {
        return Err(Failure::usage(format!("k = {k} out of range 1..={}", alg.e())));
    }
    Ok(FamilyLabel::new(kind, p, k))
}

fn family_report(alg: &Algebra, label: &FamilyLabel) -> Result<(FamilyReport, bool), Failure> {
    let family = sms::build_lifted(alg, label)?;
    let verified = verifier::is_sms(&family);
    let report = FamilyReport {
        algebra: AlgebraJson::from(alg),
        label: LabelJson::from(label),
        modules: module_strings(&family),
        is_sms: verified,
    };
    Ok((report, verified))
}

fn cmd_construct(
    n: u32,
    ell: u32,
    kind: FamilyKind,
    partition: &str,
    k: u32,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let alg = Algebra::new(n, ell)?;
    let label = parse_label(&alg, kind, partition, k)?;
    let (report, verified) = family_report(&alg, &label)?;
    emit(report.render_text(), serde_json::to_string(&report).unwrap(), json, out)?;
    Ok(if verified { 0 } else { EXIT_VERIFICATION })
}

fn cmd_enumerate(
    n: u32,
    ell: u32,
    force: bool,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let alg = Algebra::new(n, ell)?;
    let report = if force {
        verifier::classify_all_guarded(&alg, u64::MAX)?
    } else {
        verifier::classify_all(&alg)?
    };
    let rendered = EnumerationReport::from(&report);
    let complete = rendered.complete;
    emit(rendered.render_text(), serde_json::to_string(&rendered).unwrap(), json, out)?;
    Ok(if complete { 0 } else { EXIT_VERIFICATION })
}

#[allow(clippy::too_many_arguments)]
fn cmd_syzygy(
    n: u32,
    ell: u32,
    kind: FamilyKind,
    partition: &str,
    k: u32,
    power: i64,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let alg = Algebra::new(n, ell)?;
    let input = parse_label(&alg, kind, partition, k)?;
    let mut family = sms::build_lifted(&alg, &input)?;
    let mut label = input.clone();
    for _ in 0..power.unsigned_abs() {
        if power >= 0 {
            family = sms::syzygy_family(&family)?;
            label = sms::syzygy_label(&label);
        } else {
            family = sms::cosyzygy_family(&family)?;
            label = sms::cosyzygy_label(&label);
        }
    }
    let predicted = sms::build_lifted(&alg, &label)?;
    let label_matches = predicted == family;
    let report = SyzygyReport {
        algebra: AlgebraJson::from(&alg),
        input: LabelJson::from(&input),
        power,
        label: LabelJson::from(&label),
        modules: module_strings(&family),
        label_matches,
    };
    emit(report.render_text(), serde_json::to_string(&report).unwrap(), json, out)?;
    if !label_matches {
        // The predicted label comes from the same theorems the member
        // action implements, so a mismatch is a bug, not bad input.
        return Err(Failure {
            code: EXIT_ASSERTION,
            message: format!(
                "computed family disagrees with predicted label {}",
                label.header()
            ),
        });
    }
    Ok(0)
}

fn cmd_count(
    n: Option<u32>,
    ell: Option<u32>,
    brauer_tree: Option<Vec<u32>>,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let report = match (n, ell, brauer_tree) {
        (Some(n), Some(ell), None) => {
            let alg = Algebra::new(n, ell)?;
            CountReport {
                algebra: Some(AlgebraJson::from(&alg)),
                brauer_tree: None,
                count: verifier::count_sms(&alg),
            }
        }
        (None, None, Some(bt)) => {
            let (edges, m0) = (bt[0], bt[1]);
            CountReport {
                algebra: None,
                brauer_tree: Some(BrauerTreeJson { edges, multiplicity: m0 }),
                count: verifier::count_sms_brauer_tree(edges, m0)?,
            }
        }
        _ => {
            return Err(Failure::usage(
                "pass either --n and --ell, or --brauer-tree EDGES M0",
            ))
        }
    };
    emit(format!("{}\n", report.count), serde_json::to_string(&report).unwrap(), json, out)?;
    Ok(0)
}

fn cmd_oracle_check(
    max_n: u32,
    max_ell: u32,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let mut report = OracleCheckReport {
        max_n,
        max_ell,
        primes: oracle::SWEEP_PRIMES.to_vec(),
        hom_pairs: 0,
        stable_pairs: 0,
        arc_pairs: 0,
        passed: false,
        counterexample: None,
    };
    match oracle::agreement_sweep(max_n, max_ell, &oracle::SWEEP_PRIMES) {
        Ok(stats) => {
            report.hom_pairs = stats.hom_pairs;
            report.stable_pairs = stats.stable_pairs;
        }
        Err(cx) => report.counterexample = Some(cx.to_string()),
    }
    if report.counterexample.is_none() {
        match arcs::agreement_sweep(max_n, max_ell) {
            Ok(stats) => report.arc_pairs = stats.pairs,
            Err(cx) => report.counterexample = Some(cx.to_string()),
        }
    }
    report.passed = report.counterexample.is_none();
    let passed = report.passed;
    emit(report.render_text(), serde_json::to_string(&report).unwrap(), json, out)?;
    Ok(if passed { 0 } else { EXIT_VERIFICATION })
}
