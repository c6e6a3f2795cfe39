//! `cnorm`: build finite groups, print their series, verify the structural
//! claims about the centralizer norm, and scan families.

pub mod report;
pub mod scan;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use cnorm_core::families::{FamilySpec, FAMILY_NAMES};
use cnorm_core::format::{parse_group, write_cayley, FormatError};
use cnorm_core::group::MAX_REPRESENTABLE_ORDER;
use cnorm_core::series::{baer_norm, centralizer_norm, Analysis};
use cnorm_core::subgroup::{center, distinct_centralizer_count};
use cnorm_core::verify::Verifier;
use cnorm_core::{FiniteGroup, GroupError, VerifyOptions, DEFAULT_ORDER_CAP};
use serde::Serialize;
use thiserror::Error;

use report::{render_claims, render_header, render_profile, render_series, GroupInfo, GroupReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown family {0:?}; expected one of {families}, or corpus for scan", families = FAMILY_NAMES.join(", "))]
    BadFamily(String),
    #[error("{0}")]
    BadParameter(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Parser)]
#[command(
    name = "cnorm",
    version,
    about = "Centralizer norms and ascending series of finite groups"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest group order accepted.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: usize,
    /// Worker threads for scans (defaults to all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Check subgroup claims on every subgroup instead of a sample (order <= 24).
    #[arg(long, global = true)]
    pub exhaustive_subgroups: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named group as a Cayley table.
    Gen {
        /// cyclic, dihedral, symmetric, quaternion, elemabelian or product.
        family: String,
        /// Integers, or factors like `dihedral:4 cyclic:2` for product.
        #[arg(required = true)]
        params: Vec<String>,
        /// Output file (standard output when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the C-series, upper/lower central and derived series.
    Series { file: PathBuf },
    /// Run every claim check; exit 1 if any fails.
    Verify { file: PathBuf },
    /// Profile each group of a family up to an order bound.
    Scan {
        /// A family name or `corpus`.
        family: String,
        #[arg(value_name = "MAX_ORDER")]
        limit: usize,
    },
    /// Summary numbers for one group.
    Info { file: PathBuf },
}

/// Text or JSON output plus the process exit status.
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

pub fn load_group(path: &Path, cap: usize) -> Result<(String, FiniteGroup), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let g = parse_group(&text, cap).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map_or_else(|| "group".to_string(), |s| s.to_string_lossy().into_owned());
    Ok((name, g))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if cli.max_order == 0 || cli.max_order > MAX_REPRESENTABLE_ORDER {
        return Err(CliError::BadParameter(format!(
            "--max-order must be in 1..={MAX_REPRESENTABLE_ORDER}"
        )));
    }
    match &cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => cmd_gen(cli, family, params, out.as_deref()),
        Command::Series { file } => cmd_series(cli, file),
        Command::Verify { file } => cmd_verify(cli, file),
        Command::Scan { family, limit } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::BadParameter(e.to_string()))?;
            let report = pool.install(|| scan::scan(family, *limit, cli.max_order))?;
            let output = if cli.json {
                to_json(&report)
            } else {
                let mut s = String::new();
                scan::render_scan(&mut s, &report);
                s
            };
            Ok(Outcome::ok(output))
        }
        Command::Info { file } => cmd_info(cli, file),
    }
}

fn cmd_gen(
    cli: &Cli,
    family: &str,
    params: &[String],
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    if !FAMILY_NAMES.contains(&family) {
        return Err(CliError::BadFamily(family.to_string()));
    }
    let g = FamilySpec::parse(family, params)?.build(cli.max_order)?;
    let text = write_cayley(&g);
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn cmd_series(cli: &Cli, file: &Path) -> Result<Outcome, CliError> {
    let (name, g) = load_group(file, cli.max_order)?;
    let analysis = Analysis::new(&g)?;
    let report = GroupReport::new(&name, g.order(), &analysis, &[]);
    if cli.json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut s = String::new();
    render_header(&mut s, &report.group);
    render_series(&mut s, &analysis);
    render_profile(&mut s, &analysis.profile);
    Ok(Outcome::ok(s))
}

fn cmd_verify(cli: &Cli, file: &Path) -> Result<Outcome, CliError> {
    let (name, g) = load_group(file, cli.max_order)?;
    let verifier = Verifier::new(
        &g,
        VerifyOptions {
            exhaustive_subgroups: cli.exhaustive_subgroups,
        },
    )?;
    let claims = verifier.run_all();
    let report = GroupReport::new(&name, g.order(), verifier.analysis(), &claims);
    let status = if report.all_hold() { 0 } else { 1 };
    let output = if cli.json {
        to_json(&report)
    } else {
        let mut s = String::new();
        render_header(&mut s, &report.group);
        render_claims(&mut s, &report.claims);
        s
    };
    Ok(Outcome { output, status })
}

#[derive(Serialize)]
struct InfoReport {
    group: GroupInfo,
    abelian: bool,
    conjugacy_classes: usize,
    center_order: usize,
    centralizer_norm_order: usize,
    baer_norm_order: usize,
    distinct_centralizers: usize,
    profile: cnorm_core::GroupProfile,
}

fn cmd_info(cli: &Cli, file: &Path) -> Result<Outcome, CliError> {
    let (name, g) = load_group(file, cli.max_order)?;
    let analysis = Analysis::new(&g)?;
    let info = InfoReport {
        group: GroupInfo {
            name,
            order: g.order(),
        },
        abelian: g.is_abelian(),
        conjugacy_classes: g.conjugacy_classes().len(),
        center_order: center(&g).size(),
        centralizer_norm_order: centralizer_norm(&g).size(),
        baer_norm_order: baer_norm(&g).size(),
        distinct_centralizers: distinct_centralizer_count(&g),
        profile: analysis.profile.clone(),
    };
    if cli.json {
        return Ok(Outcome::ok(to_json(&info)));
    }
    let mut s = String::new();
    render_header(&mut s, &info.group);
    s.push_str(&format!(
        "  abelian {}, {} conjugacy classes, {} distinct centralizers\n  |Z(G)| = {}, |B_1(G)| = {}, |C(G)| = {}\n",
        info.abelian,
        info.conjugacy_classes,
        info.distinct_centralizers,
        info.center_order,
        info.baer_norm_order,
        info.centralizer_norm_order
    ));
    render_profile(&mut s, &info.profile);
    Ok(Outcome::ok(s))
}
