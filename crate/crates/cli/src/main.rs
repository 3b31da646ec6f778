use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use orrforge::aut::{cycle_notation, stabiliser_is_trivial};
use orrforge::classify::{
    brute_force_orr, classify_with, discover_caseiii_instance, ClassifyOptions, ExceptionCatalog,
    NoOrrCertificate, Verdict,
};
use orrforge::constructions::{
    abelian_2group_orr_set, b_family_group, c_family_group, case_ii_group, construct_bi_set,
    construct_bii_set, construct_c_set, construct_iii_set, prop_reduction_dispatch, verify_orr,
    CPreset, ReductionVerdict,
};
use orrforge::digraph::io::{parse_connection_set, parse_edge_list, to_dot, to_edge_list, write_connection_set};
use orrforge::digraph::{cayley, ConnectionSet, Digraph};
use orrforge::group::io::{load_grp, write_grp};
use orrforge::presentation::DEFAULT_MAX_COSETS;
use orrforge::{Error, FiniteGroup, Presentation, Result};
use orrforge_cli::suite::{run_suite, Status};
use orrforge_cli::{classify_error, EXIT_NEGATIVE, EXIT_OK, EXIT_RESOURCE};

#[derive(Parser)]
#[command(name = "orrforge", version, about = "Oriented regular representations of finite groups")]
struct Cli {
    /// Worker threads for the exhaustive search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Timeout in seconds for searches; falls back to ORRFORGE_TIMEOUT.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    /// Print JSON instead of TSV.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or inspect groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Connection sets from the explicit constructions.
    #[command(subcommand)]
    Orr(OrrCmd),
    /// Decide whether the identity stabiliser of a digraph is trivial.
    Verify(VerifyArgs),
    /// Decide whether a group admits an ORR.
    Classify(ClassifyArgs),
    /// Write the Cayley digraph of a connection set.
    Export(ExportArgs),
    /// Run a reproduction suite.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// A `.grp` multiplication table.
    #[arg(long)]
    group: Option<PathBuf>,
    /// A `.pres` presentation, compiled by coset enumeration.
    #[arg(long)]
    pres: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Compile a presentation into a `.grp` file.
    Build {
        #[arg(long)]
        pres: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Basic invariants of a group.
    Info {
        #[command(flatten)]
        source: GroupSource,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Abelian,
    Bi,
    Bii,
    C,
    Iii,
    L1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    SwapWithSquare,
    SwapInvolutions,
    ShiftGenerator,
    TwistInvolution,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Edges,
}

#[derive(Subcommand)]
enum OrrCmd {
    /// Build a group of a family together with its connection set.
    Construct(ConstructArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// The abelian 2-group (family `abelian`).
    #[arg(long, conflicts_with = "pres")]
    group: Option<PathBuf>,
    #[arg(long)]
    pres: Option<PathBuf>,
    /// Invariant moduli, e.g. `8,2` (families `abelian` and `l1`).
    #[arg(long, value_delimiter = ',')]
    moduli: Vec<usize>,
    /// Images of the basis of A under conjugation by n (family `l1`).
    #[arg(long, value_delimiter = ',')]
    images: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    n_square: usize,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    kappa: Option<usize>,
    /// Rank of the elementary part of A (family `c`).
    #[arg(long, default_value_t = 6)]
    k: usize,
    #[arg(long, value_enum, default_value = "swap-involutions")]
    preset: Preset,
    /// Target order, 2048 or 4096 (family `iii`).
    #[arg(long, default_value_t = 2048)]
    order: usize,
    /// Where to write the connection set (default: standard output).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Also write the group as a `.grp` file.
    #[arg(long)]
    group_out: Option<PathBuf>,
    /// Also write the Cayley digraph.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edges")]
    graph_format: GraphFormat,
    /// Skip re-verifying the constructed set.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// An edge list.
    #[arg(long, conflicts_with_all = ["group", "set"])]
    graph: Option<PathBuf>,
    #[arg(long, requires = "set")]
    group: Option<PathBuf>,
    #[arg(long, requires = "group")]
    set: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    base: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Certify exceptions by exhaustive search as well.
    #[arg(long)]
    deep: bool,
    /// Where to write the witness set or certificate.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    group: PathBuf,
    #[arg(long)]
    set: PathBuf,
    #[arg(long, value_enum, default_value = "edges")]
    format: GraphFormat,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(long, default_value = "theorem1")]
    suite: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    tier: u8,
    /// Include wall-clock times (makes the report non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot set up {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            let (code, prefix) = classify_error(&e);
            eprintln!("{prefix} {e}");
            code
        }
    };
    ExitCode::from(code as u8)
}

fn timeout(cli: &Cli) -> Result<Option<Duration>> {
    if let Some(t) = cli.timeout {
        return Ok(Some(Duration::from_secs(t)));
    }
    match std::env::var("ORRFORGE_TIMEOUT") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|t| Some(Duration::from_secs(t)))
            .map_err(|_| Error::Argument(format!("ORRFORGE_TIMEOUT={v:?} is not a number of seconds"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Group(GroupCmd::Build { pres, max_cosets, out }) => {
            let g = compile(pres, *max_cosets)?;
            emit(out.as_deref(), &write_grp(&g))?;
            Ok(EXIT_OK)
        }
        Command::Group(GroupCmd::Info { source }) => group_info(cli, source),
        Command::Orr(OrrCmd::Construct(a)) => construct(cli, a),
        Command::Verify(a) => verify(cli, a),
        Command::Classify(a) => run_classify(cli, a),
        Command::Export(a) => {
            let g = load_grp(&a.group)?;
            let s = load_set(&g, &a.set)?;
            emit(a.out.as_deref(), &render(&g, &s, a.format))?;
            Ok(EXIT_OK)
        }
        Command::Reproduce(a) => reproduce(cli, a),
    }
}

fn compile(path: &Path, max_cosets: usize) -> Result<FiniteGroup> {
    Presentation::parse(&fs::read_to_string(path)?)?.compile(max_cosets)
}

fn load(source: &GroupSource) -> Result<FiniteGroup> {
    match (&source.group, &source.pres) {
        (Some(p), _) => load_grp(p),
        (_, Some(p)) => compile(p, DEFAULT_MAX_COSETS),
        _ => Err(Error::Argument("give --group or --pres".into())),
    }
}

fn load_set(g: &FiniteGroup, path: &Path) -> Result<ConnectionSet> {
    let (n, elems) = parse_connection_set(&fs::read_to_string(path)?)?;
    if n != g.order() {
        return Err(Error::Argument(format!(
            "the set is for a group of order {n}, the group has order {}",
            g.order()
        )));
    }
    Ok(ConnectionSet::from_elems(g, elems))
}

/// Writes to the file, or to standard output.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(g: &FiniteGroup, s: &ConnectionSet, format: GraphFormat) -> String {
    let cay = cayley(g, s.clone());
    match format {
        GraphFormat::Dot => to_dot(cay.graph()),
        GraphFormat::Edges => to_edge_list(cay.graph()),
    }
}

fn group_info(cli: &Cli, source: &GroupSource) -> Result<i32> {
    let g = load(source)?;
    let exception = ExceptionCatalog::new()?.identify(&g);
    if cli.json {
        println!(
            "{}",
            json!({
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "exponent": g.exponent(),
                "generalised_dihedral": g.is_generalized_dihedral(),
                "exception": exception,
            })
        );
    } else {
        println!(
            "{}\t{}\tabelian={}\texponent={}\tgeneralised_dihedral={}\texception={}",
            g.name(),
            g.order(),
            g.is_abelian(),
            g.exponent(),
            g.is_generalized_dihedral(),
            exception.unwrap_or("-")
        );
    }
    Ok(EXIT_OK)
}

fn need(v: Option<usize>, what: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Argument(format!("this family needs --{what}")))
}

fn build(a: &ConstructArgs) -> Result<(FiniteGroup, ConnectionSet)> {
    Ok(match a.family {
        Family::Abelian => {
            let g = if a.group.is_some() || a.pres.is_some() {
                load(&GroupSource { group: a.group.clone(), pres: a.pres.clone() })?
            } else if !a.moduli.is_empty() {
                FiniteGroup::abelian(&a.moduli)?
            } else {
                return Err(Error::Argument("give --group, --pres or --moduli".into()));
            };
            let s = abelian_2group_orr_set(&g)?;
            (g, s)
        }
        Family::Bi | Family::Bii => {
            let square = matches!(a.family, Family::Bii);
            let (g, w) = b_family_group(need(a.ell, "ell")?, need(a.kappa, "kappa")?, square)?;
            let s = if square { construct_bii_set(&g, &w)? } else { construct_bi_set(&g, &w)? }.set;
            (g, s)
        }
        Family::C => {
            let preset = match a.preset {
                Preset::SwapWithSquare => CPreset::SwapWithSquare,
                Preset::SwapInvolutions => CPreset::SwapInvolutions,
                Preset::ShiftGenerator => CPreset::ShiftGenerator,
                Preset::TwistInvolution => CPreset::TwistInvolution,
            };
            let (g, w) = c_family_group(a.k, preset)?;
            let s = construct_c_set(&g, &w)?.set;
            (g, s)
        }
        Family::Iii => {
            let (g, w) = discover_caseiii_instance(a.order)?;
            let s = construct_iii_set(&g, &w)?.set;
            (g, s)
        }
        Family::L1 => {
            if a.moduli.is_empty() {
                return Err(Error::Argument("family l1 needs --moduli and --images".into()));
            }
            let (g, w) = case_ii_group(&a.moduli, &a.images, a.n_square)?;
            match prop_reduction_dispatch(&g, &w)? {
                ReductionVerdict::Orr(s) => (g, s),
                other => {
                    return Err(Error::Argument(format!(
                        "A is not of the lifted shape; the reduction gives {other:?}"
                    )))
                }
            }
        }
    })
}

fn construct(cli: &Cli, a: &ConstructArgs) -> Result<i32> {
    let (g, s) = build(a)?;
    let mut code = EXIT_OK;
    let mut verdict = "unverified";
    if !a.no_verify {
        let v = verify_orr(&g, &s, timeout(cli)?)?;
        verdict = if v.is_orr() { "ORR" } else { "NOT-ORR" };
        if !v.is_orr() {
            code = EXIT_NEGATIVE;
        }
    }
    emit(a.out.as_deref(), &write_connection_set(&g, &s))?;
    if let Some(p) = &a.group_out {
        fs::write(p, write_grp(&g))?;
    }
    if let Some(p) = &a.graph_out {
        fs::write(p, render(&g, &s, a.graph_format))?;
    }
    let summary = if cli.json {
        json!({
            "group": g.name(),
            "order": g.order(),
            "size": s.len(),
            "verdict": verdict,
            "elements": s.iter().map(|x| json!({"index": x, "word": g.word(x)})).collect::<Vec<_>>(),
        })
        .to_string()
    } else {
        format!("{}\t{}\t{}\t{verdict}", g.name(), g.order(), s.len())
    };
    // Keep standard output for the set when it is not written to a file.
    if a.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(code)
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<i32> {
    let (graph, oriented): (Digraph, bool) = match (&a.graph, &a.group, &a.set) {
        (Some(p), _, _) => {
            let d = parse_edge_list(&fs::read_to_string(p)?)?;
            let oriented = !d.has_digon();
            (d, oriented)
        }
        (None, Some(gp), Some(sp)) => {
            let g = load_grp(gp)?;
            let s = load_set(&g, sp)?;
            let oriented = s.is_oriented();
            (cayley(&g, s).graph().clone(), oriented)
        }
        _ => return Err(Error::Argument("give --graph, or --group with --set".into())),
    };
    let report = stabiliser_is_trivial(&graph, a.base, timeout(cli)?)?;
    let stab = match &report.witness {
        None => "TRIVIAL".to_string(),
        Some(w) => cycle_notation(w),
    };
    let orr_check = a.set.is_some();
    if cli.json {
        println!(
            "{}",
            json!({"stabiliser": stab, "trivial": report.trivial, "oriented": oriented, "nodes": report.nodes_explored})
        );
    } else {
        println!("{stab}");
        if orr_check && !oriented {
            println!("NOT-ORIENTED");
        }
    }
    Ok(if report.trivial && (oriented || !orr_check) { EXIT_OK } else { EXIT_NEGATIVE })
}

fn certificate_json(c: &NoOrrCertificate) -> serde_json::Value {
    json!({
        "raw_candidates": c.raw_candidates.to_string(),
        "orbit_reduced": c.orbit_reduced,
        "aut_order": c.aut_order.map(|o| o.to_string()),
        "non_generating": c.non_generating,
        "certificates": c.certificates.iter().map(|x| json!({"set": x.set, "automorphism": x.automorphism})).collect::<Vec<_>>(),
    })
}

fn run_classify(cli: &Cli, a: &ClassifyArgs) -> Result<i32> {
    let g = load(&a.source)?;
    let opts = ClassifyOptions { deep: a.deep, timeout: timeout(cli)? };
    let verdict = classify_with(&g, &opts, &[])?;
    let mut path = "-".to_string();
    if let Some(out) = &a.witness_out {
        let text = match &verdict {
            Verdict::HasOrr(s) => Some(write_connection_set(&g, s)),
            Verdict::Exception(_) if a.deep => match brute_force_orr(&g, opts.timeout)? {
                Verdict::NoOrrCertified(c) => Some(certificate_json(&c).to_string()),
                _ => None,
            },
            Verdict::NoOrrCertified(c) => Some(certificate_json(c).to_string()),
            _ => None,
        };
        if let Some(t) = text {
            fs::write(out, t)?;
            path = out.display().to_string();
        }
    }
    let detail = match &verdict {
        Verdict::Exception(n) => n.clone(),
        Verdict::HasOrr(s) => format!("|S|={}", s.len()),
        Verdict::NoOrrCertified(c) => format!("{} certificates", c.certificates.len()),
        Verdict::Unresolved(r) => r.clone(),
        Verdict::GeneralisedDihedral => "-".into(),
    };
    if cli.json {
        println!(
            "{}",
            json!({"name": g.name(), "order": g.order(), "verdict": verdict.kind(), "detail": detail, "witness": path})
        );
    } else {
        println!("{}\t{}\t{}\t{detail}\t{path}", g.name(), g.order(), verdict.kind());
    }
    Ok(match verdict {
        Verdict::HasOrr(_) => EXIT_OK,
        Verdict::Unresolved(_) => EXIT_RESOURCE,
        _ => EXIT_NEGATIVE,
    })
}

fn reproduce(cli: &Cli, a: &ReproduceArgs) -> Result<i32> {
    if a.suite != "theorem1" {
        return Err(Error::Argument(format!("unknown suite {:?}; the only suite is theorem1", a.suite)));
    }
    let results = run_suite(a.tier);
    if cli.json {
        let verdicts: Vec<_> = results
            .iter()
            .map(|r| {
                let mut v = json!({"criterion": r.id, "tier": r.tier, "status": r.status.label(), "detail": r.detail});
                if a.timings {
                    v["seconds"] = json!(r.seconds);
                }
                v
            })
            .collect();
        let report = json!({
            "command": "reproduce",
            "inputs": {"suite": a.suite, "tier": a.tier},
            "verdicts": verdicts,
            "seed": 1,
            "version": env!("CARGO_PKG_VERSION"),
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("JSON values serialise"));
    } else {
        println!("criterion\ttier\tstatus\tdetail{}", if a.timings { "\tseconds" } else { "" });
        for r in &results {
            print!("{}\t{}\t{}\t{}", r.id, r.tier, r.status.label(), r.detail);
            if a.timings {
                print!("\t{:.3}", r.seconds);
            }
            println!();
        }
    }
    Ok(if results.iter().any(|r| r.status == Status::Fail) { EXIT_NEGATIVE } else { EXIT_OK })
}
