//! Command-line front end: classify module categories over a twisted group
//! category, count fiber functors, decide equivalence of data, and compute
//! cohomology — all from JSON specifications of the group and the cocycle.
//!
//! Exit codes: 0 success; 2 validation failure; 3 resource cap exceeded;
//! 4 oracle disagreement (with `--oracle`).

mod schema;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use modcat_core::classify::{self, Caps};
use modcat_core::cohomology::CohomologyGroup;
use modcat_core::datum::AlgebraDatum;
use modcat_core::oracle;
use modcat_core::{Cochain, FiniteGroup, Subgroup};

use schema::{
    classify_report_to_json, classify_report_to_table, cochain_to_json,
    cohomology_report_to_json, equiv_report_to_json, fiber_report_to_json,
    oracle_report_to_json, parse_arg, reports_agree, simple_table, validate_classify_json,
    validate_fields, CliError, CliResult, CocycleSpec, GroupSpec,
};

/// Environment variable overriding the class-enumeration cap.
const CAP_ENV: &str = "FUSION_CLASSIFY_CAP";

#[derive(Parser)]
#[command(name = "modcat", version, about = "Module categories over twisted group categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify indecomposable exact module categories of (G, ω).
    Classify(SessionArgs),
    /// Count fiber functors (the whole-group stratum).
    Fiber(SessionArgs),
    /// Decide equivalence of two (subgroup, beta) pairs, with witness.
    Equiv(EquivArgs),
    /// Compute H^n(H, Z/M) with enumerable class representatives.
    Cohomology(CohomologyArgs),
    /// Check a cochain: normalization and the cocycle condition.
    CocycleCheck(CocycleCheckArgs),
    /// Run the brute-force classification on its own.
    Oracle(SessionArgs),
}

#[derive(Args)]
struct SessionArgs {
    /// Group JSON (inline or a file path).
    #[arg(long)]
    group: String,
    /// 3-cocycle JSON, or the literal `zero`.
    #[arg(long)]
    omega: String,
    /// Working modulus override (defaults to |G| times the value order of ω).
    #[arg(long)]
    modulus: Option<u64>,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "table"])]
    format: String,
    /// Cross-check against the brute-force oracle; exit 4 on disagreement.
    #[arg(long)]
    oracle: bool,
    /// Class-enumeration cap (overrides FUSION_CLASSIFY_CAP).
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct EquivArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    omega: String,
    #[arg(long)]
    modulus: Option<u64>,
    /// Subgroup element lists, given twice (first and second datum).
    #[arg(long, num_args = 1, action = clap::ArgAction::Append)]
    subgroup: Vec<String>,
    /// Beta cocycle specs, given twice (first and second datum).
    #[arg(long, num_args = 1, action = clap::ArgAction::Append)]
    beta: Vec<String>,
    #[arg(long, default_value = "json", value_parser = ["json", "table"])]
    format: String,
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long)]
    group: String,
    /// Subgroup element list (defaults to the whole group).
    #[arg(long)]
    subgroup: Option<String>,
    /// Cohomology degree.
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// Working modulus.
    #[arg(long)]
    modulus: u64,
    #[arg(long, default_value = "json", value_parser = ["json", "table"])]
    format: String,
}

#[derive(Args)]
struct CocycleCheckArgs {
    #[arg(long)]
    group: String,
    /// The cochain to check (any degree 1..=3).
    #[arg(long)]
    omega: String,
    #[arg(long, default_value = "json", value_parser = ["json", "table"])]
    format: String,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify(args) => run_classify(&args),
        Command::Fiber(args) => run_fiber(&args),
        Command::Equiv(args) => run_equiv(&args),
        Command::Cohomology(args) => run_cohomology(&args),
        Command::CocycleCheck(args) => run_cocycle_check(&args),
        Command::Oracle(args) => run_oracle(&args),
    };
    match outcome {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.exit_code);
        }
    }
}

fn caps_for(args: &SessionArgs) -> CliResult<Caps> {
    let mut caps = Caps::default();
    if let Ok(raw) = std::env::var(CAP_ENV) {
        caps.classes = raw
            .parse()
            .map_err(|_| CliError::validation(format!("{CAP_ENV} must be an integer")))?;
    }
    if let Some(cap) = args.cap {
        caps.classes = cap;
    }
    Ok(caps)
}

/// Parses the session inputs shared by classify/fiber/oracle.
fn session(args: &SessionArgs) -> CliResult<(Value, Value, FiniteGroup, Cochain)> {
    let group_spec: GroupSpec = parse_arg(&args.group, "--group")?;
    let omega_spec: CocycleSpec = parse_arg(&args.omega, "--omega")?;
    let group = group_spec.build()?;
    let omega = omega_spec.build(&group, 3, None)?;
    let group_echo = serde_json::to_value(&group_spec).expect("spec serializes");
    let omega_echo = serde_json::to_value(&omega_spec).expect("spec serializes");
    Ok((group_echo, omega_echo, group, omega))
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn run_classify(args: &SessionArgs) -> CliResult<()> {
    let (group_echo, omega_echo, group, omega) = session(args)?;
    let caps = caps_for(args)?;
    let report = classify::classify(&group, &omega, args.modulus, &caps)
        .map_err(|e| CliError::from_core("classify", e))?;
    if args.oracle {
        let slow = oracle::classify_oracle(&group, &omega, args.modulus)
            .map_err(|e| CliError::from_core("oracle", e))?;
        if !reports_agree(&report, &slow) {
            let fast_json = classify_report_to_json(&group_echo, &omega_echo, &report);
            eprintln!("oracle disagreement");
            eprintln!("fast path: {}", serde_json::to_string(&fast_json).unwrap());
            eprintln!(
                "oracle:    {}",
                serde_json::to_string(&oracle_report_to_json(&slow)).unwrap()
            );
            return Err(CliError { message: "oracle mismatch".into(), exit_code: 4 });
        }
    }
    let json = classify_report_to_json(&group_echo, &omega_echo, &report);
    validate_classify_json(&json).map_err(CliError::validation)?;
    match args.format.as_str() {
        "table" => print!("{}", classify_report_to_table(&report)),
        _ => emit(&json),
    }
    Ok(())
}

fn run_fiber(args: &SessionArgs) -> CliResult<()> {
    let (group_echo, omega_echo, group, omega) = session(args)?;
    let caps = caps_for(args)?;
    let (count, reps) = classify::fiber_functors(&group, &omega, args.modulus, &caps)
        .map_err(|e| CliError::from_core("fiber", e))?;
    let modulus = classify::prepare_omega(&group, &omega, args.modulus)
        .map_err(|e| CliError::from_core("fiber", e))?
        .modulus();
    if args.oracle {
        let slow = oracle::classify_oracle(&group, &omega, args.modulus)
            .map_err(|e| CliError::from_core("oracle", e))?;
        if slow.fiber_functors != count {
            eprintln!("oracle disagreement: fast {count}, oracle {}", slow.fiber_functors);
            return Err(CliError { message: "oracle mismatch".into(), exit_code: 4 });
        }
    }
    let json = fiber_report_to_json(&group_echo, &omega_echo, modulus, count, &reps);
    validate_fields(&json, &["group", "omega", "modulus", "fiber_functors", "representatives"])
        .map_err(CliError::validation)?;
    match args.format.as_str() {
        "table" => print!(
            "{}",
            simple_table(&[
                ("modulus", modulus.to_string()),
                ("fiber_functors", count.to_string()),
            ])
        ),
        _ => emit(&json),
    }
    Ok(())
}

fn run_equiv(args: &EquivArgs) -> CliResult<()> {
    if args.subgroup.len() != 2 || args.beta.len() != 2 {
        return Err(CliError::validation(
            "equiv needs --subgroup and --beta given exactly twice",
        ));
    }
    let group_spec: GroupSpec = parse_arg(&args.group, "--group")?;
    let omega_spec: CocycleSpec = parse_arg(&args.omega, "--omega")?;
    let group = group_spec.build()?;
    let omega_raw = omega_spec.build(&group, 3, None)?;
    let omega = classify::prepare_omega(&group, &omega_raw, args.modulus)
        .map_err(|e| CliError::from_core("--omega", e))?;
    let modulus = omega.modulus();
    let mut data: Vec<AlgebraDatum> = Vec::with_capacity(2);
    for (sub_raw, beta_raw) in args.subgroup.iter().zip(&args.beta) {
        let elements: Vec<usize> = parse_arg(sub_raw, "--subgroup")?;
        let sub: Subgroup = group
            .subgroup(&elements)
            .map_err(|e| CliError::from_core("--subgroup", e))?;
        let beta_spec: CocycleSpec = parse_arg(beta_raw, "--beta")?;
        let beta = beta_spec.build(&group, 2, Some(&sub))?;
        let beta = beta
            .embed(modulus)
            .map_err(|e| CliError::from_core("--beta", e))?;
        data.push(
            AlgebraDatum::new(sub, beta).map_err(|e| CliError::from_core("--beta", e))?,
        );
    }
    let witness = classify::are_equivalent(&group, &data[0], &data[1], &omega)
        .map_err(|e| CliError::from_core("equiv", e))?;
    let json = equiv_report_to_json(modulus, &witness);
    validate_fields(&json, &["modulus", "equivalent", "witness"]).map_err(CliError::validation)?;
    match args.format.as_str() {
        "table" => print!(
            "{}",
            simple_table(&[
                ("modulus", modulus.to_string()),
                ("equivalent", witness.is_some().to_string()),
                (
                    "witness_g",
                    witness.as_ref().map_or("-".into(), |w| w.g.to_string()),
                ),
            ])
        ),
        _ => emit(&json),
    }
    Ok(())
}

fn run_cohomology(args: &CohomologyArgs) -> CliResult<()> {
    let group_spec: GroupSpec = parse_arg(&args.group, "--group")?;
    let group = group_spec.build()?;
    let sub = match &args.subgroup {
        Some(raw) => {
            let elements: Vec<usize> = parse_arg(raw, "--subgroup")?;
            group.subgroup(&elements).map_err(|e| CliError::from_core("--subgroup", e))?
        }
        None => group.whole_subgroup(),
    };
    let cg = CohomologyGroup::compute(
        &group,
        &sub,
        args.degree,
        args.modulus,
        Caps::default().matrix_cells,
    )
    .map_err(|e| CliError::from_core("cohomology", e))?;
    let json = cohomology_report_to_json(&sub, &cg);
    validate_fields(&json, &["subgroup", "degree", "modulus", "invariant_factors", "generators"])
        .map_err(CliError::validation)?;
    match args.format.as_str() {
        "table" => print!(
            "{}",
            simple_table(&[
                ("subgroup", format!("{:?}", sub.elements())),
                ("degree", args.degree.to_string()),
                ("modulus", args.modulus.to_string()),
                (
                    "invariant_factors",
                    format!("{:?}", cg.invariant_factors()),
                ),
                ("order", cg.order().to_string()),
            ])
        ),
        _ => emit(&json),
    }
    Ok(())
}

fn run_cocycle_check(args: &CocycleCheckArgs) -> CliResult<()> {
    let group_spec: GroupSpec = parse_arg(&args.group, "--group")?;
    let group = group_spec.build()?;
    let spec: CocycleSpec = parse_arg(&args.omega, "--omega")?;
    let cochain = spec.build(&group, 3, None)?;
    let normalized = cochain.is_normalized(&group);
    let is_cocycle = cochain.degree() <= 3 && cochain.is_cocycle(&group);
    let json = serde_json::json!({
        "degree": cochain.degree(),
        "modulus": cochain.modulus(),
        "domain": cochain.domain(),
        "normalized": normalized,
        "is_cocycle": is_cocycle,
        "cochain": cochain_to_json(&cochain),
    });
    validate_fields(&json, &["degree", "modulus", "domain", "normalized", "is_cocycle"])
        .map_err(CliError::validation)?;
    match args.format.as_str() {
        "table" => print!(
            "{}",
            simple_table(&[
                ("degree", cochain.degree().to_string()),
                ("modulus", cochain.modulus().to_string()),
                ("normalized", normalized.to_string()),
                ("is_cocycle", is_cocycle.to_string()),
            ])
        ),
        _ => emit(&json),
    }
    Ok(())
}

fn run_oracle(args: &SessionArgs) -> CliResult<()> {
    let (_, _, group, omega) = session(args)?;
    let report = oracle::classify_oracle(&group, &omega, args.modulus)
        .map_err(|e| CliError::from_core("oracle", e))?;
    let json = oracle_report_to_json(&report);
    validate_fields(&json, &["modulus", "total", "fiber_functors", "strata"])
        .map_err(CliError::validation)?;
    match args.format.as_str() {
        "table" => print!(
            "{}",
            simple_table(&[
                ("modulus", report.modulus.to_string()),
                ("total", report.total.to_string()),
                ("fiber_functors", report.fiber_functors.to_string()),
            ])
        ),
        _ => emit(&json),
    }
    Ok(())
}
