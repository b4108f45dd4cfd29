//! The `mnlab` command line.
//!
//! Exit codes: 0 on success or a PASS report, 1 on a FAIL report or an
//! oracle disagreement, 2 on usage, parse or input errors.

use crate::congruence::{all_congruences, congruences_oracle, ORACLE_BOUND};
use crate::constructions::{regular_action, GroupSpec};
use crate::io::{algebra_to_string, group_to_string, parse_algebra, parse_group, FORMAT_VERSION};
use crate::lattice::LatticeReport;
use crate::perm::{Perm, SubgroupSystem};
use crate::verify::{self, SLOW_DEGREE};
use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "mnlab", version, about = "Congruence lattices, subgroup intervals and M_n representation sweeps")]
pub struct Cli {
    /// Worker threads for parallel sweeps (falls back to MNLAB_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build named groups.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Congruence lattice of an algebra file.
    Con(ConArgs),
    /// The interval I[H,G] as a lattice.
    Interval(IntervalArgs),
    /// Run a verification sweep.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Write the minimal representation of M_{p+1}.
    Witness(WitnessArgs),
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    Make(MakeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Klein,
    Quaternion,
}

#[derive(Debug, Args)]
struct MakeArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Size parameter: m for dihedral (order 2m), n otherwise.
    #[arg(long, visible_alias = "n")]
    m: Option<usize>,
    /// Emit the left-regular representation instead of the natural action.
    #[arg(long)]
    regular: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConArgs {
    algebra: PathBuf,
    /// Cross-check against brute-force partition filtering.
    #[arg(long)]
    oracle: bool,
    /// Allow the oracle on carriers of 10 or more points.
    #[arg(long)]
    slow: bool,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Carriers at least this large put the oracle in the slow tier.
const SLOW_ORACLE_SIZE: usize = 10;

#[derive(Debug, Args)]
struct IntervalArgs {
    group: PathBuf,
    subgroup: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    Lemma {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Theorem1 {
        #[arg(long)]
        p: usize,
        /// Defaults to 2p+1.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Allow degrees 6 and 7.
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Theorem2 {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct OracleCheck {
    checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct ConOutput {
    format: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    size: usize,
    ops: usize,
    congruences: Vec<crate::Partition>,
    lattice: LatticeReport,
    oracle: OracleCheck,
}

#[derive(Serialize)]
struct IntervalMember {
    order: usize,
    index_over_h: usize,
    generators: Vec<Perm>,
}

#[derive(Serialize)]
struct IntervalOutput {
    format: u32,
    group_order: usize,
    subgroup_order: usize,
    index: usize,
    subgroups: Vec<IntervalMember>,
    lattice: LatticeReport,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

enum Outcome {
    Ok,
    Fail,
}

fn make_group(args: &MakeArgs) -> anyhow::Result<Outcome> {
    let need = |what: &str| args.m.with_context(|| format!("--m is required for {what}"));
    let spec = match args.kind {
        Kind::Cyclic => GroupSpec::Cyclic { n: need("cyclic")? },
        Kind::Dihedral => GroupSpec::Dihedral { m: need("dihedral")? },
        Kind::Symmetric => GroupSpec::Symmetric { n: need("symmetric")? },
        Kind::Alternating => GroupSpec::Alternating { n: need("alternating")? },
        Kind::Klein => GroupSpec::Klein,
        Kind::Quaternion => GroupSpec::Quaternion,
    };
    let mut group = spec.realize()?;
    let mut name = spec.name();
    if args.regular {
        group = regular_action(&group)?;
        name = format!("regular {name}");
    }
    emit(args.out.as_deref(), &group_to_string(&group, Some(name)))?;
    Ok(Outcome::Ok)
}

fn con(args: &ConArgs) -> anyhow::Result<Outcome> {
    let (alg, name) = parse_algebra(&read(&args.algebra)?)
        .with_context(|| format!("parsing {}", args.algebra.display()))?;
    if args.oracle && alg.size() > ORACLE_BOUND {
        bail!("--oracle supports carriers up to {ORACLE_BOUND}, {} has {}", args.algebra.display(), alg.size());
    }
    if args.oracle && alg.size() >= SLOW_ORACLE_SIZE && !args.slow {
        bail!("--oracle on {} points is in the slow tier; pass --slow", alg.size());
    }
    let con = all_congruences(&alg)?;
    let oracle = if args.oracle {
        let brute = congruences_oracle(&alg)?;
        OracleCheck {
            checked: true,
            agrees: Some(brute.partitions == con.partitions),
        }
    } else {
        OracleCheck {
            checked: false,
            agrees: None,
        }
    };
    if let Some(dot) = &args.dot {
        std::fs::write(dot, con.lattice.to_dot()).with_context(|| format!("writing {}", dot.display()))?;
    }
    let disagreement = oracle.agrees == Some(false);
    let out = ConOutput {
        format: FORMAT_VERSION,
        name,
        size: alg.size(),
        ops: alg.ops().len(),
        lattice: con.lattice.report(),
        congruences: con.partitions,
        oracle,
    };
    emit(args.out.as_deref(), &to_json(&out))?;
    if disagreement {
        eprintln!("oracle disagreement on {}", args.algebra.display());
        return Ok(Outcome::Fail);
    }
    Ok(Outcome::Ok)
}

fn interval(args: &IntervalArgs) -> anyhow::Result<Outcome> {
    let (g, _) = parse_group(&read(&args.group)?).with_context(|| format!("parsing {}", args.group.display()))?;
    let (h, _) =
        parse_group(&read(&args.subgroup)?).with_context(|| format!("parsing {}", args.subgroup.display()))?;
    if !h.is_subgroup_of(&g) {
        bail!("{} is not a subgroup of {}", args.subgroup.display(), args.group.display());
    }
    let sys = SubgroupSystem::enumerate(&g)?;
    let hpos = sys.position_of_group(&h)?;
    let lattice = sys.interval_lattice(hpos);
    if let Some(dot) = &args.dot {
        std::fs::write(dot, lattice.to_dot()).with_context(|| format!("writing {}", dot.display()))?;
    }
    let subgroups = sys
        .interval(hpos)
        .into_iter()
        .map(|k| {
            let grp = sys.group(k);
            IntervalMember {
                order: grp.order(),
                index_over_h: grp.order() / h.order(),
                generators: grp.generators().to_vec(),
            }
        })
        .collect();
    let out = IntervalOutput {
        format: FORMAT_VERSION,
        group_order: g.order(),
        subgroup_order: h.order(),
        index: g.order() / h.order(),
        subgroups,
        lattice: lattice.report(),
    };
    emit(args.out.as_deref(), &to_json(&out))?;
    Ok(Outcome::Ok)
}

fn report_outcome<F: Serialize>(
    report: &verify::VerificationReport<F>,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    emit(out, &report.to_json())?;
    eprintln!("{}: {:?}", report.sweep, report.status);
    Ok(if report.passed() { Outcome::Ok } else { Outcome::Fail })
}

fn run_verify(cmd: &VerifyCommand) -> anyhow::Result<Outcome> {
    match cmd {
        VerifyCommand::Lemma { max_order, out } => report_outcome(&verify::check_lemma(*max_order)?, out.as_deref()),
        VerifyCommand::Theorem1 {
            p,
            max_degree,
            slow,
            out,
        } => {
            let max_degree = max_degree.unwrap_or(2 * p + 1);
            if max_degree >= SLOW_DEGREE && !slow {
                bail!("degree {max_degree} is in the slow tier; pass --slow (or lower --max-degree below {SLOW_DEGREE})");
            }
            report_outcome(&verify::check_theorem1(*p, max_degree)?, out.as_deref())
        }
        VerifyCommand::Theorem2 { p, max_size, out } => {
            report_outcome(&verify::check_theorem2(*p, *max_size)?, out.as_deref())
        }
    }
}

fn witness(args: &WitnessArgs) -> anyhow::Result<Outcome> {
    let (alg, _) = verify::minimal_representation(args.p)?;
    let name = format!("regular D_{} set", 2 * args.p);
    emit(args.out.as_deref(), &algebra_to_string(&alg, Some(name)))?;
    Ok(Outcome::Ok)
}

fn configure_threads(flag: Option<usize>) -> anyhow::Result<()> {
    let threads = match flag {
        Some(n) => Some(n),
        None => match std::env::var("MNLAB_THREADS") {
            Ok(v) => Some(v.trim().parse().with_context(|| format!("MNLAB_THREADS={v:?} is not a count"))?),
            Err(_) => None,
        },
    };
    if let Some(n) = threads {
        if n == 0 {
            bail!("thread count must be positive");
        }
        // a pool configured by an earlier call in the same process stays in place
        let _ = crate::par::configure_threads(n);
    }
    Ok(())
}

/// Parses `argv` (including the program name) and runs it, returning the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let result = configure_threads(cli.threads).and_then(|()| match &cli.command {
        Command::Group(GroupCommand::Make(args)) => make_group(args),
        Command::Con(args) => con(args),
        Command::Interval(args) => interval(args),
        Command::Verify(cmd) => run_verify(cmd),
        Command::Witness(args) => witness(args),
    });
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
