//! `workbench`: batch front end for the wbar-core constructions,
//! verifications and homology computations.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use wbar_core::bisimplicial::{verify_zigzag_map, Diagonal, LevelwiseNerve, Total, Verdict, ZigzagMap};
use wbar_core::bundle::{
    check_classifying_map, check_cocycle, random_bundle, tau_atlas_check, transition_elements, BundleJson,
    PrincipalBundle, PseudoSection,
};
use wbar_core::error::{Error, Result};
use wbar_core::group::{builtin, FiniteGroup, Tau};
use wbar_core::homology::{homology_report, ChainComplex, HomologyGroup};
use wbar_core::sgroup::{verify_epsilon, Discrete};
use wbar_core::simplicial::{SimplicialSet, TruncatedComplex};
use wbar_core::wbar::{WTotal, Wbar};

use report::{emit, render, Format, Header, Outcome, Table};

#[derive(Parser, Debug)]
#[command(name = "workbench", version, about = "Constructions, verifications and homology for W̄(τ,K)")]
struct Cli {
    /// Group source: a JSON file, or builtin:NAME (Z4, S3, D4, Q8, E32, ...).
    #[arg(long, global = true, default_value = "builtin:Z2")]
    group: String,
    /// free, gamma:q, gammap:p,q or abmodpk:p,k.
    #[arg(long, global = true, default_value = "free")]
    tau: Tau,
    /// Truncation degree N.
    #[arg(long, global = true, default_value_t = 3)]
    trunc: usize,
    /// Chain length cap L.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    chain_cap: u64,
    /// Ordinal cap M.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    ordinal_cap: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Enumeration budget; exceeding it exits with status 3.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u128,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// |W̄(τ,G)_k| for k = 0..=k_max.
    Counts {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    /// Run one verification; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Rank of the free group for `epsilon`.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Bundle JSON for the bundle checks; random bundles otherwise.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Number of random bundles, seeded from --seed onwards.
        #[arg(long, default_value_t = 10)]
        samples: u64,
        /// Maximum base dimension of random bundles.
        #[arg(long, default_value_t = 3)]
        base_dim: usize,
    },
    /// Integral homology of a construction through degree i_max.
    Homology {
        #[arg(value_enum)]
        construction: Construction,
        /// Defaults to N - 1.
        #[arg(long)]
        i_max: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Epsilon,
    Cr,
    Bk,
    Tonks,
    Zigzag,
    BundleRoundtrip,
    Cocycle,
    Atlas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Construction {
    Wbar,
    WbarTau,
    Diagonal,
    Total,
    WTotal,
}

/// A bundle file: the classifying data, optionally with a pseudo-section
/// given by its group coordinates on the cells.
#[derive(Deserialize)]
struct BundleInput {
    #[serde(flatten)]
    bundle: BundleJson<usize>,
    #[serde(default)]
    sigma: Option<Vec<Vec<usize>>>,
}

fn load_group(source: &str) -> Result<FiniteGroup> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin(name),
        None => {
            let text = std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
            FiniteGroup::from_json(&text)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSimplicial(_) | Error::FactorizationFailure(_) | Error::VerificationFailure(_) => 1,
        Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn verdict_table(verdicts: &[Verdict]) -> Table {
    let mut t = Table::new(&["map", "degrees_checked", "cap", "status", "counterexample"]);
    for v in verdicts {
        t.push(vec![
            v.map.clone(),
            v.degrees_checked.to_string(),
            v.cap.map(|c| c.to_string()).unwrap_or_default(),
            if v.passed() { "pass" } else { "fail" }.into(),
            v.counterexample.clone().unwrap_or_default(),
        ]);
    }
    t
}

fn verdicts_outcome(verdicts: Vec<Verdict>) -> Outcome {
    Outcome { passed: verdicts.iter().all(Verdict::passed), table: verdict_table(&verdicts), body: json!(verdicts) }
}

fn counts(cli: &Cli, k: &Discrete, k_max: usize) -> Result<Outcome> {
    let w = Wbar::with_tau(k, cli.tau).with_budget(cli.budget);
    let mut table = Table::new(&["k", "count"]);
    let mut body = Vec::new();
    for deg in 0..=k_max {
        let n = match (cli.tau, w.full_count(deg)) {
            (Tau::Free, Some(n)) if n <= cli.budget => n,
            (Tau::Free, Some(n)) => return Err(Error::BudgetExceeded { requested: n, budget: cli.budget }),
            _ => w.simplices(deg)?.len() as u128,
        };
        table.push(vec![deg.to_string(), n.to_string()]);
        body.push(json!({ "k": deg, "count": n.to_string() }));
    }
    Ok(Outcome { passed: true, body: json!(body), table })
}

fn homology_rows(c: &ChainComplex, i_max: usize) -> Result<(Vec<HomologyGroup>, Value, Table)> {
    let groups = c.homology_up_to(i_max)?;
    let reports = homology_report(c, i_max)?;
    let mut table = Table::new(&["degree", "betti", "torsion", "group"]);
    let mut body = Vec::new();
    for (r, h) in reports.iter().zip(&groups) {
        let torsion: Vec<String> = r.torsion.iter().map(ToString::to_string).collect();
        table.push(vec![r.degree.to_string(), r.betti.to_string(), torsion.join(" "), h.to_string()]);
        body.push(json!({ "degree": r.degree, "betti": r.betti, "torsion": r.torsion, "group": h.to_string() }));
    }
    Ok((groups, json!({ "ranks": c.ranks, "homology": body }), table))
}

fn homology(cli: &Cli, k: &Discrete, construction: Construction, i_max: Option<usize>) -> Result<Outcome> {
    let n = cli.trunc;
    let i_max = i_max.unwrap_or(n.saturating_sub(1));
    if i_max + 1 > n {
        return Err(Error::InsufficientTruncation { requested: i_max + 1, available: n });
    }
    let c = match construction {
        Construction::Wbar => ChainComplex::of(&Wbar::new(k).with_budget(cli.budget), n)?,
        Construction::WbarTau => ChainComplex::of(&Wbar::with_tau(k, cli.tau).with_budget(cli.budget), n)?,
        Construction::Diagonal => ChainComplex::of(&Diagonal(LevelwiseNerve::with_tau(k, cli.tau)), n)?,
        Construction::Total => ChainComplex::of(&Total(LevelwiseNerve::with_tau(k, cli.tau)), n)?,
        Construction::WTotal => ChainComplex::of(&WTotal::new(k), n)?,
    };
    let (_, body, table) = homology_rows(&c, i_max)?;
    Ok(Outcome { passed: true, body, table })
}

/// CR verdicts plus agreement of `H_*(dN(τ,K))` with `H_*(W̄(τ,K))`.
fn verify_cr(cli: &Cli, k: &Discrete) -> Result<Outcome> {
    let (n, cap) = (cli.trunc, cli.ordinal_cap as usize);
    let verdicts: Vec<Verdict> = [ZigzagMap::CegarraRemediosPsi, ZigzagMap::CegarraRemediosWbar]
        .par_iter()
        .map(|&m| verify_zigzag_map(k, cli.tau, m, n, cap))
        .collect();
    let i_max = n.saturating_sub(1);
    let d = ChainComplex::of(&Diagonal(LevelwiseNerve::with_tau(k, cli.tau)), n)?;
    let w = ChainComplex::of(&Wbar::with_tau(k, cli.tau).with_budget(cli.budget), n)?;
    let (hd, _, _) = homology_rows(&d, i_max)?;
    let (hw, _, _) = homology_rows(&w, i_max)?;
    let mut table = verdict_table(&verdicts);
    let mut agreement = Vec::new();
    for (i, (a, b)) in hd.iter().zip(&hw).enumerate() {
        let ok = a == b;
        agreement.push(json!({ "degree": i, "diagonal": a.to_string(), "wbar": b.to_string(), "agree": ok }));
        table.push(vec![
            format!("homology_h{i}"),
            n.to_string(),
            String::new(),
            if ok { "pass" } else { "fail" }.into(),
            if ok { String::new() } else { format!("dN gives {a}, W̄ gives {b}") },
        ]);
    }
    let passed = verdicts.iter().all(Verdict::passed) && hd == hw;
    Ok(Outcome { passed, body: json!({ "verdicts": verdicts, "homology_agreement": agreement }), table })
}

fn check_bundle(cli: &Cli, target: Target, b: &PrincipalBundle<&Discrete>, sigma: Option<Vec<Vec<usize>>>) -> Result<()> {
    let canonical = sigma.is_none();
    let sigma = sigma.map_or_else(|| PseudoSection::canonical(b), |coords| PseudoSection { coords });
    if sigma.coords.len() != b.dim() + 1
        || sigma.coords.iter().zip(b.base().cell_counts()).any(|(c, &n)| c.len() != n)
    {
        return Err(Error::InvalidComplex("pseudo-section does not match the cells of the base".into()));
    }
    sigma.check(b, b.dim())?;
    let max_n = b.dim().max(cli.ordinal_cap as usize);
    let alpha = transition_elements(b, &sigma, max_n)?;
    match target {
        Target::BundleRoundtrip => {
            let again = PrincipalBundle::from_json_value(&b.to_json_value(), b.group())?;
            if again.classifying_data() != b.classifying_data() || again.base() != b.base() {
                return Err(Error::VerificationFailure("JSON roundtrip changed the bundle".into()));
            }
            check_classifying_map(b, &alpha, b.dim(), canonical)
        }
        Target::Cocycle => check_cocycle(b, &alpha),
        Target::Atlas => {
            let report = tau_atlas_check(b, &alpha, cli.tau, cli.chain_cap as usize, cli.ordinal_cap as usize)?;
            match report.witness {
                None => Ok(()),
                Some(w) => Err(Error::FactorizationFailure(format!(
                    "chain {:?} over {} through ordinals {:?} leaves the subcomplex at position {}: {}",
                    w.maps, w.top, w.ordinals, w.position, w.image
                ))),
            }
        }
        _ => unreachable!("not a bundle target"),
    }
}

fn verify_bundles(cli: &Cli, k: &Discrete, target: Target, input: Option<&PathBuf>, samples: u64, base_dim: usize) -> Result<Outcome> {
    let map = match target {
        Target::BundleRoundtrip => "bundle_roundtrip",
        Target::Cocycle => "cocycle",
        _ => "tau_atlas",
    };
    let degrees = |b: &PrincipalBundle<&Discrete>| b.dim();
    let verdicts: Vec<Verdict> = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let parsed: BundleInput = serde_json::from_str(&text)?;
            let base = TruncatedComplex::from_json_value(&parsed.bundle.base)?;
            let label = format!("{map}[{}]", path.display());
            match PrincipalBundle::from_classifying_map(base, k, parsed.bundle.r) {
                Ok(b) => {
                    let r = check_bundle(cli, target, &b, parsed.sigma);
                    if let Err(e) = &r {
                        if exit_code(e) != 1 {
                            return Err(e.clone());
                        }
                    }
                    vec![Verdict::from_result(label, degrees(&b), None, &r)]
                }
                Err(e @ Error::NotSimplicial(_)) => vec![Verdict::from_result::<()>(label, 0, None, &Err(e))],
                Err(e) => return Err(e),
            }
        }
        None => (cli.seed..cli.seed + samples)
            .into_par_iter()
            .map(|seed| -> Result<Verdict> {
                let b = random_bundle(k, seed, base_dim)?;
                let r = check_bundle(cli, target, &b, None);
                if let Err(e) = &r {
                    if exit_code(e) != 1 {
                        return Err(e.clone());
                    }
                }
                Ok(Verdict::from_result(format!("{map}[seed={seed}]"), degrees(&b), None, &r))
            })
            .collect::<Result<_>>()?,
    };
    Ok(verdicts_outcome(verdicts))
}

fn verify(cli: &Cli, k: &Discrete, target: Target, rank: usize, input: Option<&PathBuf>, samples: u64, base_dim: usize) -> Result<Outcome> {
    let (n, cap) = (cli.trunc, cli.ordinal_cap as usize);
    let zigzag = |maps: &[ZigzagMap]| -> Outcome {
        verdicts_outcome(maps.par_iter().map(|&m| verify_zigzag_map(k, cli.tau, m, n, cap)).collect())
    };
    Ok(match target {
        Target::Epsilon => {
            let r = verify_epsilon(rank, n);
            if let Err(e) = &r {
                if exit_code(e) != 1 {
                    return Err(e.clone());
                }
            }
            let mut out = verdicts_outcome(vec![Verdict::from_result(format!("epsilon[k={rank}]"), n, None, &r)]);
            if let Ok(report) = r {
                out.body = json!({ "verdicts": out.body, "report": report });
            }
            out
        }
        Target::Cr => verify_cr(cli, k)?,
        Target::Bk => zigzag(&[ZigzagMap::BousfieldKan]),
        Target::Tonks => zigzag(&[ZigzagMap::Tonks]),
        Target::Zigzag => zigzag(&ZigzagMap::ALL),
        Target::BundleRoundtrip | Target::Cocycle | Target::Atlas => {
            verify_bundles(cli, k, target, input, samples, base_dim)?
        }
    })
}

fn run(cli: &Cli) -> Result<(Outcome, String)> {
    let group = load_group(&cli.group)?;
    let name = group.name().to_string();
    let k = Discrete::new(group);
    let outcome = match &cli.command {
        Command::Counts { k_max } => counts(cli, &k, *k_max)?,
        Command::Verify { target, k: rank, input, samples, base_dim } => {
            verify(cli, &k, *target, *rank, input.as_ref(), *samples, *base_dim)?
        }
        Command::Homology { construction, i_max } => homology(cli, &k, *construction, *i_max)?,
    };
    Ok((outcome, name))
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Counts { .. } => "counts".into(),
        Command::Verify { target, .. } => format!("verify {}", target.to_possible_value().expect("named").get_name()),
        Command::Homology { construction, .. } => {
            format!("homology {}", construction.to_possible_value().expect("named").get_name())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("WORKBENCH_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let (outcome, group) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            let payload = json!({ "status": "error", "error": e.to_string() });
            eprintln!("{payload}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let header = Header {
        command: &command_name(&cli.command),
        group: &group,
        tau: cli.tau.to_string(),
        truncation: cli.trunc,
        seed: cli.seed,
    };
    let written = render(&header, &outcome, cli.format).and_then(|bytes| emit(&bytes, cli.out.as_deref()));
    if let Err(e) = written {
        eprintln!("{}", json!({ "status": "error", "error": e.to_string() }));
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
