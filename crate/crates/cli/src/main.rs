//! `homspace`: dimensions and Picard-rank bounds of homogeneous spaces.
//!
//! Subcommands: `table` (reference tables), `flag` (invariants of one flag
//! variety), `verify` (inequality sweeps), `verdict` (flag-variety
//! exclusion). Exit codes: 0 success / all checks passed, 1 verification
//! failure, 2 usage error.

mod tables;

use std::collections::BTreeMap;
use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use homspace_core::parabolic::ParabolicSpec;
use homspace_core::report::{write_csv, write_jsonl, Rational, VerificationReport};
use homspace_core::rootsys::{build_root_system, Family, SimpleType};
use homspace_core::verify::{
    flag_variety_verdict, verify_affine_simple, verify_projective_simple,
    verify_semisimple_product, Mode, SemisimpleProduct, SweepOptions, DEFAULT_MAX_RANK,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "homspace", version, about)]
struct Cli {
    /// Output format (default: table on a terminal, json otherwise)
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormatArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a reference table (1: simple algebras, 2: maximal dimensions,
    /// 3: exceptional dimension floors)
    Table {
        /// Table id: 1, 2 or 3
        which: u32,
        /// Rank cap for parameterized rows (env HOMSPACE_MAX_RANK, default 12)
        #[arg(long)]
        max_rank: Option<u32>,
    },
    /// Invariants of the flag variety G/P_I for one simple type
    Flag {
        /// Simple type, e.g. A4, D5, E7
        type_spec: String,
        /// Comma-separated Bourbaki indices of I (empty = Borel)
        #[arg(long, default_value = "")]
        parabolic: String,
    },
    /// Run inequality verification sweeps
    Verify {
        /// Affine sweeps only
        #[arg(long)]
        affine: bool,
        /// Projective sweeps only
        #[arg(long)]
        projective: bool,
        /// Both sweeps (default when neither --affine nor --projective given)
        #[arg(long)]
        all: bool,
        /// Restrict to one family (A, B, C, D, E6, E7, E8, F4, G2)
        #[arg(long = "type")]
        family: Option<String>,
        /// Restrict to the exceptional types
        #[arg(long)]
        exceptional: bool,
        /// Verify a semisimple product, e.g. A1,A1,B2
        #[arg(long)]
        product: Option<String>,
        /// Rank cap (env HOMSPACE_MAX_RANK, default 12)
        #[arg(long)]
        max_rank: Option<u32>,
        /// Cap on factor-subset combinations in product sweeps
        #[arg(long)]
        sample_cap: Option<u64>,
    },
    /// Can a variety with these invariants be a generalized flag variety?
    Verdict {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        rho: u64,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_format(arg: Option<OutputFormatArg>) -> OutputFormat {
    match arg {
        Some(OutputFormatArg::Table) => OutputFormat::Table,
        Some(OutputFormatArg::Json) => OutputFormat::Json,
        Some(OutputFormatArg::Csv) => OutputFormat::Csv,
        None => {
            if std::io::stdout().is_terminal() {
                OutputFormat::Table
            } else {
                OutputFormat::Json
            }
        }
    }
}

fn resolve_max_rank(arg: Option<u32>) -> u32 {
    arg.or_else(|| {
        std::env::var("HOMSPACE_MAX_RANK")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_RANK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = resolve_format(cli.format);
    match cli.command {
        Command::Table { which, max_rank } => cmd_table(which, resolve_max_rank(max_rank), format),
        Command::Flag {
            type_spec,
            parabolic,
        } => cmd_flag(&type_spec, &parabolic, format),
        Command::Verify {
            affine,
            projective,
            all,
            family,
            exceptional,
            product,
            max_rank,
            sample_cap,
        } => {
            let modes = match (affine, projective, all) {
                (true, false, false) => vec![Mode::Affine],
                (false, true, false) => vec![Mode::Projective],
                _ => vec![Mode::Affine, Mode::Projective],
            };
            let mut options = SweepOptions {
                max_rank: resolve_max_rank(max_rank),
                ..Default::default()
            };
            if let Some(cap) = sample_cap {
                options.sample_cap = cap;
            }
            cmd_verify(
                &modes,
                family.as_deref(),
                exceptional,
                product.as_deref(),
                &options,
                format,
            )
        }
        Command::Verdict { dim, rho } => cmd_verdict(dim, rho, format),
    }
}

fn cmd_table(which: u32, max_rank: u32, format: OutputFormat) -> ExitCode {
    let out = match which {
        1 => tables::render_table1(max_rank, format),
        2 => tables::render_table2(max_rank, format),
        3 => tables::render_table3(format),
        other => return usage_error(&format!("unknown table id {other} (expected 1, 2 or 3)")),
    };
    print!("{out}");
    ExitCode::SUCCESS
}

fn parse_subset(s: &str) -> Result<Vec<usize>, String> {
    let mut subset = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let idx: usize = token
            .parse()
            .map_err(|_| format!("invalid parabolic index `{token}`"))?;
        subset.push(idx);
    }
    Ok(subset)
}

fn cmd_flag(type_spec: &str, parabolic: &str, format: OutputFormat) -> ExitCode {
    let stype: SimpleType = match type_spec.parse() {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    let subset = match parse_subset(parabolic) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let rs = build_root_system(stype);
    let spec = match ParabolicSpec::new(&rs, subset.iter().copied()) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let inv = spec.flag_invariants();
    let rank = stype.rank() as i64;
    let (dim_x, rho) = (inv.dim_x as i64, inv.picard_rank as i64);
    // slack of ρ ≤ 2·dim X/(rank+1), and of ρ² < 2·dim X
    let linear_slack = Rational::new(2 * dim_x, rank + 1) - Rational::from_integer(rho);
    let square_slack = Rational::from_integer(2 * dim_x - rho * rho);
    match format {
        OutputFormat::Table => {
            println!("type: {stype}");
            let ids: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
            println!("parabolic I: {{{}}}", ids.join(","));
            println!("dim X: {}", inv.dim_x);
            println!("picard rank: {}", inv.picard_rank);
            println!("dim parabolic: {}", inv.dim_parabolic);
            println!("dim levi: {}", inv.dim_levi);
            println!("dim unipotent radical: {}", inv.dim_unipotent_radical);
            println!("linear bound slack (2 dimX/(rank+1) - rho): {linear_slack}");
            println!("square bound slack (2 dimX - rho^2): {square_slack}");
        }
        OutputFormat::Json => {
            let obj = json!({
                "type": stype.to_string(),
                "parabolic": subset,
                "dim_X": inv.dim_x,
                "picard_rank": inv.picard_rank,
                "dim_parabolic": inv.dim_parabolic,
                "dim_levi": inv.dim_levi,
                "dim_unipotent_radical": inv.dim_unipotent_radical,
                "linear_bound_slack": linear_slack.to_string(),
                "square_bound_slack": square_slack.to_string(),
            });
            println!("{obj}");
        }
        OutputFormat::Csv => {
            println!(
                "type,parabolic,dim_X,picard_rank,dim_parabolic,dim_levi,dim_unipotent_radical,linear_bound_slack,square_bound_slack"
            );
            let ids: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
            println!(
                "{},{},{},{},{},{},{},{},{}",
                stype,
                ids.join(" "),
                inv.dim_x,
                inv.picard_rank,
                inv.dim_parabolic,
                inv.dim_levi,
                inv.dim_unipotent_radical,
                linear_slack,
                square_slack
            );
        }
    }
    ExitCode::SUCCESS
}

fn parse_family(token: &str) -> Result<Family, String> {
    match token.trim().to_ascii_uppercase().as_str() {
        "A" => Ok(Family::A),
        "B" => Ok(Family::B),
        "C" => Ok(Family::C),
        "D" => Ok(Family::D),
        "E6" => Ok(Family::E6),
        "E7" => Ok(Family::E7),
        "E8" => Ok(Family::E8),
        "F4" => Ok(Family::F4),
        "G2" => Ok(Family::G2),
        other => Err(format!("unknown family `{other}`")),
    }
}

/// Simple types in scope: classical families contribute every rank up to the
/// cap, exceptional ones their fixed rank.
fn scope_types(
    family: Option<&str>,
    exceptional: bool,
    max_rank: u32,
) -> Result<Vec<SimpleType>, String> {
    let families: Vec<Family> = match (family, exceptional) {
        (Some(token), _) => vec![parse_family(token)?],
        (None, true) => Family::EXCEPTIONAL.to_vec(),
        (None, false) => Family::ALL.to_vec(),
    };
    let explicit = family.is_some();
    let mut types = Vec::new();
    for f in families {
        if f.min_rank() > max_rank {
            if explicit {
                return Err(format!(
                    "family {f} needs rank >= {}, but the rank cap is {max_rank}",
                    f.min_rank()
                ));
            }
            continue;
        }
        match f.fixed_rank() {
            Some(r) => types.push(SimpleType::new(f, r).unwrap()),
            None => {
                for l in f.min_rank()..=max_rank {
                    types.push(SimpleType::new(f, l).unwrap());
                }
            }
        }
    }
    if types.is_empty() {
        return Err(format!("no types in scope at rank cap {max_rank}"));
    }
    Ok(types)
}

fn parse_product(s: &str) -> Result<SemisimpleProduct, String> {
    let mut factors = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        factors.push(token.parse::<SimpleType>().map_err(|e| e.to_string())?);
    }
    SemisimpleProduct::new(factors).map_err(|e| e.to_string())
}

fn cmd_verify(
    modes: &[Mode],
    family: Option<&str>,
    exceptional: bool,
    product: Option<&str>,
    options: &SweepOptions,
    format: OutputFormat,
) -> ExitCode {
    let mut reports: Vec<VerificationReport> = Vec::new();
    if let Some(spec) = product {
        let product = match parse_product(spec) {
            Ok(p) => p,
            Err(e) => return usage_error(&e),
        };
        for &mode in modes {
            match verify_semisimple_product(&product, mode, options) {
                Ok(mut r) => reports.append(&mut r),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    } else {
        let types = match scope_types(family, exceptional, options.max_rank) {
            Ok(t) => t,
            Err(e) => return usage_error(&e),
        };
        for &stype in &types {
            for &mode in modes {
                match mode {
                    Mode::Affine => match verify_affine_simple(stype, options) {
                        Ok(mut r) => reports.append(&mut r),
                        Err(e) => return usage_error(&e.to_string()),
                    },
                    Mode::Projective => {
                        reports.extend(verify_projective_simple(stype, options))
                    }
                }
            }
        }
    }

    let stdout = std::io::stdout();
    match format {
        OutputFormat::Json => write_jsonl(stdout.lock(), &reports).expect("stdout"),
        OutputFormat::Csv => write_csv(stdout.lock(), &reports).expect("stdout"),
        OutputFormat::Table => {
            for r in &reports {
                let cmp = if r.inequality.is_strict() { "<" } else { "<=" };
                let status = if r.passed { "pass" } else { "FAIL" };
                println!(
                    "{:<28} {:<16} {} {} {}  {}  slack={}",
                    r.instance_id, r.inequality, r.lhs, cmp, r.rhs, status, r.slack
                );
            }
        }
    }

    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut min_slack: BTreeMap<&str, Rational> = BTreeMap::new();
    for r in &reports {
        min_slack
            .entry(r.inequality.wire_name())
            .and_modify(|s| {
                if r.slack < *s {
                    *s = r.slack;
                }
            })
            .or_insert(r.slack);
    }
    let slack_summary: Vec<String> = min_slack
        .iter()
        .map(|(name, s)| format!("min_slack[{name}]={s}"))
        .collect();
    eprintln!(
        "summary: total={} passed={} failed={} {}",
        reports.len(),
        reports.len() - failed,
        failed,
        slack_summary.join(" ")
    );
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verdict(dim: u64, rho: u64, format: OutputFormat) -> ExitCode {
    if dim == 0 || rho == 0 {
        return usage_error("--dim and --rho must be positive");
    }
    let verdict = flag_variety_verdict(dim, rho);
    match format {
        OutputFormat::Table => println!("{verdict}"),
        OutputFormat::Json => println!(
            "{}",
            json!({"dim_X": dim, "rho": rho, "verdict": verdict.to_string()})
        ),
        OutputFormat::Csv => {
            println!("dim_X,rho,verdict");
            println!("{dim},{rho},{verdict}");
        }
    }
    ExitCode::SUCCESS
}
