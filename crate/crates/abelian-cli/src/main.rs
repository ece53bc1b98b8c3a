//! Command-line frontend: orbits, ds-bounds, apparent distance, the
//! minimum-apparent-distance trace, code construction and verification,
//! brute-force minimum distance, and regeneration of the bundled reference
//! tables.

use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use abelian::apparent::{bmad, hyper_apparent, SupportHypermatrix};
use abelian::bounds::BoundSet;
use abelian::codes::{code_apparent_at, AbelianCode, CodeWire, RootSelection};
use abelian::construct::{
    bch_defining_set, construct_true_distance_code, rational_shift, verify_true_distance,
    BchSpec, Verdict,
};
use abelian::gfield::make_context;
use abelian::oracle::{min_distance_bruteforce, weight_upper_bound};
use abelian::orbits::{orbit_closure, q_orbit, Dims};
use abelian::transform::{MultiPoly, MultiPolyWire};
use abelian_cli::table_report;

#[derive(Parser)]
#[command(
    name = "abelian",
    about = "Defining-set bounds, apparent distance and true-distance constructions for abelian codes",
    version
)]
struct Cli {
    /// Bound selection: bch or bch,ht
    #[arg(long, global = true)]
    bounds: Option<String>,
    /// Worker threads (0 = library default); also read from ABELIAN_THREADS
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format: json, csv or text
    #[arg(long, global = true)]
    format: Option<String>,
    /// Seed for randomized commands
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on the number of q-orbits enumerated by verify
    #[arg(long, global = true)]
    orbit_cap: Option<usize>,
    /// Cap on enumeration size for mindist, as log2 of the word count
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// JSON file with default settings for the flags above
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
struct RunConfig {
    #[serde(default)]
    bounds: Option<String>,
    #[serde(default)]
    threads: Option<usize>,
    #[serde(default)]
    format: Option<String>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    orbit_cap: Option<usize>,
    #[serde(default)]
    cap: Option<u32>,
}

/// Fully resolved settings, echoed into every output record.
#[derive(Debug, Clone, Serialize)]
struct Resolved {
    bounds: String,
    threads: usize,
    format: String,
    seed: u64,
    orbit_cap: usize,
    cap: u32,
}

#[derive(Subcommand)]
enum Command {
    /// q-orbit of a multi-index
    Orbit {
        #[arg(long)]
        q: u64,
        /// Lengths, e.g. 7,15 (use a single value for cyclotomic cosets)
        #[arg(long)]
        dims: Option<String>,
        /// One-variable shorthand for --dims
        #[arg(long)]
        n: Option<u32>,
        /// The index, e.g. 1,3 (or a single residue with --n)
        #[arg(long)]
        rep: String,
    },
    /// Optimal ds-bound value of a subset of Z_n
    Bound {
        #[arg(long)]
        n: u32,
        /// Subset members, e.g. 1,2,3
        #[arg(long)]
        set: String,
    },
    /// Apparent distance of the matrix afforded by a defining set
    Apparent {
        #[arg(long)]
        code: Option<PathBuf>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        dims: Option<String>,
        /// Defining-set orbit representatives, e.g. 0,3;1,5
        #[arg(long)]
        defining: Option<String>,
    },
    /// Minimum-apparent-distance algorithm with full trace
    Bmad {
        #[arg(long)]
        code: Option<PathBuf>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        dims: Option<String>,
        #[arg(long)]
        defining: Option<String>,
    },
    /// Dimensions, defining set and apparent distance of a stored code
    CodeInfo {
        #[arg(long)]
        code: PathBuf,
        /// Also maximize the apparent distance over root selections
        #[arg(long)]
        scan_roots: bool,
        /// Scan every selection instead of one per Galois class
        #[arg(long)]
        full_scan: bool,
    },
    /// Inverse-transform construction of a true-distance code
    Construct {
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        q: Option<u64>,
        /// Lengths r1,r2
        #[arg(long)]
        dims: String,
        /// First factor as exponent list over F_p, e.g. 0,1
        #[arg(long)]
        a: Option<String>,
        /// First factor as polynomial JSON
        #[arg(long)]
        a_file: Option<PathBuf>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        b_file: Option<PathBuf>,
        /// Shift for the first factor; found automatically when omitted
        #[arg(long)]
        h1: Option<u32>,
        #[arg(long)]
        h2: Option<u32>,
        /// Root-selection exponents, e.g. 1,1
        #[arg(long)]
        roots: Option<String>,
        /// Write the constructed code JSON here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a true-distance certificate of a stored code
    Verify {
        #[arg(long)]
        code: PathBuf,
    },
    /// Bivariate BCH code from designed distances
    Bch {
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        dims: String,
        /// Axes carrying a designed distance, e.g. 1,2
        #[arg(long)]
        gamma: String,
        /// Designed distances, e.g. 2,5
        #[arg(long)]
        delta: String,
        /// Offsets, e.g. 0,1
        #[arg(long)]
        offsets: String,
        #[arg(long)]
        roots: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force minimum distance of a stored code
    Mindist {
        #[arg(long)]
        code: PathBuf,
        /// Random-sampling trials for the weight upper bound (0 = skip)
        #[arg(long, default_value_t = 0)]
        trials: u64,
    },
    /// Recompute a bundled reference table and diff it
    Table {
        #[arg(long)]
        which: u8,
    },
}

fn parse_u32_list(s: &str) -> anyhow::Result<Vec<u32>> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<u32>().context("expected an integer list"))
        .collect()
}

fn parse_tuples(s: &str) -> anyhow::Result<Vec<Vec<u32>>> {
    s.split(';')
        .filter(|t| !t.is_empty())
        .map(|t| parse_u32_list(t))
        .collect()
}

fn load_code(path: &PathBuf) -> anyhow::Result<AbelianCode> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let wire: CodeWire = serde_json::from_str(&text).context("parsing code JSON")?;
    Ok(AbelianCode::from_wire(&wire)?)
}

fn defining_input(
    code: &Option<PathBuf>,
    q: &Option<u64>,
    dims: &Option<String>,
    defining: &Option<String>,
) -> anyhow::Result<(abelian::orbits::OrbitSet, Option<AbelianCode>)> {
    if let Some(path) = code {
        let code = load_code(path)?;
        return Ok((code.defining_set().clone(), Some(code)));
    }
    let q = q.ok_or_else(|| anyhow!("--q is required without --code"))?;
    let dims = Dims::new(&parse_u32_list(
        dims.as_deref()
            .ok_or_else(|| anyhow!("--dims is required without --code"))?,
    )?)?;
    let reps = parse_tuples(
        defining
            .as_deref()
            .ok_or_else(|| anyhow!("--defining is required without --code"))?,
    )?;
    let refs: Vec<&[u32]> = reps.iter().map(|r| r.as_slice()).collect();
    Ok((orbit_closure(refs, q, &dims)?, None))
}

fn poly_input(
    ctx: &Arc<abelian::gfield::FieldCtx>,
    r: u32,
    exps: &Option<String>,
    file: &Option<PathBuf>,
) -> anyhow::Result<MultiPoly> {
    match (exps, file) {
        (Some(list), None) => Ok(abelian::catalog::poly_from_support(
            ctx,
            r,
            &parse_u32_list(list)?,
        )),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let wire: MultiPolyWire = serde_json::from_str(&text)?;
            Ok(MultiPoly::from_wire(ctx.clone(), &wire)?)
        }
        _ => bail!("give the factor either as an exponent list or as a JSON file"),
    }
}

fn base_params(p: Option<u32>, m: u32, q: Option<u64>) -> anyhow::Result<(u32, u32)> {
    match (p, q) {
        (Some(p), None) => Ok((p, m)),
        (None, Some(q)) => {
            // interpret q as p^m with p prime
            for cand in 2..=q {
                let mut left = q;
                let mut e = 0;
                while left % cand == 0 {
                    left /= cand;
                    e += 1;
                }
                if left == 1 && e >= 1 {
                    return Ok((cand as u32, e));
                }
            }
            bail!("q = {q} is not a prime power")
        }
        (Some(p), Some(q)) => {
            if (p as u64).pow(m) == q {
                Ok((p, m))
            } else {
                bail!("inconsistent --p/--m/--q")
            }
        }
        (None, None) => bail!("give the field as --q or as --p [--m]"),
    }
}

fn roots_or_default(roots: &Option<String>, arity: usize) -> anyhow::Result<RootSelection> {
    Ok(match roots {
        Some(s) => RootSelection::new(parse_u32_list(s)?),
        None => RootSelection::canonical(arity),
    })
}

fn main() {
    let cli = Cli::parse();
    let exit = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            let record = json!({ "error": format!("{err:#}") });
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
            2
        }
    };
    std::process::exit(exit);
}

fn resolve_settings(cli: &Cli) -> anyhow::Result<Resolved> {
    let file: RunConfig = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text).context("parsing config JSON")?
        }
        None => RunConfig::default(),
    };
    let env_threads = std::env::var("ABELIAN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    Ok(Resolved {
        bounds: cli
            .bounds
            .clone()
            .or(file.bounds)
            .unwrap_or_else(|| "bch".into()),
        threads: cli.threads.or(file.threads).or(env_threads).unwrap_or(0),
        format: cli
            .format
            .clone()
            .or(file.format)
            .unwrap_or_else(|| "json".into()),
        seed: cli.seed.or(file.seed).unwrap_or(0),
        orbit_cap: cli.orbit_cap.or(file.orbit_cap).unwrap_or(20),
        cap: cli.cap.or(file.cap).unwrap_or(22),
    })
}

fn emit(settings: &Resolved, command: &str, result: serde_json::Value) {
    match settings.format.as_str() {
        "text" => {
            println!("{command}:");
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
        }
        _ => {
            let record = json!({
                "config": settings,
                "command": command,
                "result": result,
            });
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let settings = resolve_settings(&cli)?;
    let bounds = BoundSet::from_names(&settings.bounds)?;
    let threads = settings.threads;
    let settings2 = settings.clone();
    let command = cli.command;
    abelian::run_with_threads(threads, move || -> anyhow::Result<i32> {
        dispatch(command, &settings2, &bounds)
    })
}

fn dispatch(command: Command, settings: &Resolved, bounds: &BoundSet) -> anyhow::Result<i32> {
    match command {
        Command::Orbit { q, dims, n, rep } => {
            let lengths = match (dims, n) {
                (Some(d), None) => parse_u32_list(&d)?,
                (None, Some(n)) => vec![n],
                _ => bail!("give exactly one of --dims or --n"),
            };
            let dims = Dims::new(&lengths)?;
            let idx = parse_u32_list(&rep)?;
            let orbit = q_orbit(&idx, q, &dims)?;
            let mut members: Vec<Vec<u32>> = orbit.iter().collect();
            members.sort();
            let flat: Vec<serde_json::Value> = if lengths.len() == 1 {
                members.iter().map(|m| json!(m[0])).collect()
            } else {
                members.iter().map(|m| json!(m)).collect()
            };
            emit(settings, "orbit", json!({ "size": members.len(), "members": flat }));
            Ok(0)
        }
        Command::Bound { n, set } => {
            let members = parse_u32_list(&set)?;
            let subset = abelian::bounds::zn_subset(n, &members);
            let value = bounds.eval(n, &subset);
            emit(
                settings,
                "bound",
                json!({ "n": n, "set": members, "bounds": bounds.names(), "value": value }),
            );
            Ok(0)
        }
        Command::Apparent { code, q, dims, defining } => {
            let (d, _) = defining_input(&code, &q, &dims, &defining)?;
            let m = SupportHypermatrix::afforded(&d);
            let report = hyper_apparent(&m, bounds);
            let axes: Vec<_> = report
                .axes
                .iter()
                .map(|a| json!({ "omega": a.omega, "epsilon": a.epsilon, "delta": a.delta }))
                .collect();
            emit(
                settings,
                "apparent",
                json!({
                    "value": report.value,
                    "axes": axes,
                    "involved": report.involved,
                }),
            );
            Ok(0)
        }
        Command::Bmad { code, q, dims, defining } => {
            let (d, _) = defining_input(&code, &q, &dims, &defining)?;
            let m = SupportHypermatrix::afforded(&d);
            let trace = bmad(&m, bounds)?;
            let steps: Vec<_> = trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    json!({
                        "step": i,
                        "support_reps": s.support_reps,
                        "delta": s.delta,
                        "m": s.m,
                    })
                })
                .collect();
            emit(
                settings,
                "bmad",
                json!({
                    "steps": steps,
                    "early_stop": trace.early_stop,
                    "witness_step": trace.witness_step,
                    "result": trace.result,
                }),
            );
            Ok(0)
        }
        Command::CodeInfo { code, scan_roots, full_scan } => {
            let code = load_code(&code)?;
            let apparent = code_apparent_at(&code, bounds)?;
            let over_roots = if scan_roots || full_scan {
                Some(abelian::codes::code_apparent(&code, bounds, full_scan)?)
            } else {
                None
            };
            emit(
                settings,
                "code-info",
                json!({
                    "dims": code.dims().lengths(),
                    "q": code.ctx().q(),
                    "dimension": code.dimension(),
                    "defining_reps": code.defining_set().to_wire().reps,
                    "roots": code.roots().exps(),
                    "apparent_at_roots": apparent,
                    "apparent_over_roots": over_roots,
                }),
            );
            Ok(0)
        }
        Command::Construct {
            p,
            m,
            q,
            dims,
            a,
            a_file,
            b,
            b_file,
            h1,
            h2,
            roots,
            out,
        } => {
            let (p, m) = base_params(p, m, q)?;
            let lengths = parse_u32_list(&dims)?;
            if lengths.len() != 2 {
                bail!("construct needs exactly two lengths");
            }
            let ctx = Arc::new(make_context(p, m, &lengths)?);
            let pa = poly_input(&ctx, lengths[0], &a, &a_file)?;
            let pb = poly_input(&ctx, lengths[1], &b, &b_file)?;
            let sel = roots_or_default(&roots, 2)?;
            let alpha = sel.elements(&ctx, &Dims::new(&lengths)?)?;
            let h1 = match h1 {
                Some(h) => h,
                None => rational_shift(&pa, alpha[0])?
                    .ok_or_else(|| anyhow!("no rational shift exists for the first factor"))?,
            };
            let h2 = match h2 {
                Some(h) => h,
                None => rational_shift(&pb, alpha[1])?
                    .ok_or_else(|| anyhow!("no rational shift exists for the second factor"))?,
            };
            let built = construct_true_distance_code(ctx, &pa, &pb, &sel, h1, h2)?;
            let trace = bmad(&built.code.afforded(), bounds)?;
            let wire = built.code.to_wire();
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&wire)?)?;
            }
            emit(
                settings,
                "construct",
                json!({
                    "code": wire,
                    "dimension": built.code.dimension(),
                    "shifts": [built.shifts.0, built.shifts.1],
                    "certificate": {
                        "guaranteed_d": built.guaranteed_d,
                        "witness_weight": built.witness.weight(),
                        "bmad": trace.result,
                    },
                    "witness": built.witness.to_wire(),
                }),
            );
            Ok(0)
        }
        Command::Verify { code } => {
            let code = load_code(&code)?;
            let verdict = verify_true_distance(&code, bounds, settings.orbit_cap)?;
            let value = match verdict {
                Verdict::Proven { d, witness_reps } => {
                    json!({ "verdict": "proven", "d": d, "witness_reps": witness_reps })
                }
                Verdict::Inconclusive => json!({ "verdict": "inconclusive" }),
            };
            emit(settings, "verify", value);
            Ok(0)
        }
        Command::Bch {
            p,
            m,
            q,
            dims,
            gamma,
            delta,
            offsets,
            roots,
            out,
        } => {
            let (p, m) = base_params(p, m, q)?;
            let lengths = parse_u32_list(&dims)?;
            let ctx = Arc::new(make_context(p, m, &lengths)?);
            let dims = Dims::new(&lengths)?;
            let spec = BchSpec::new(
                parse_u32_list(&gamma)?.into_iter().map(|v| v as usize).collect(),
                parse_u32_list(&delta)?,
                parse_u32_list(&offsets)?,
            );
            let defining = bch_defining_set(&spec, ctx.q(), &dims)?;
            let code = AbelianCode::new(ctx, defining, roots_or_default(&roots, lengths.len())?)?;
            let apparent = if lengths.len() == 2 {
                Some(code_apparent_at(&code, bounds)?)
            } else {
                None
            };
            let wire = code.to_wire();
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&wire)?)?;
            }
            emit(
                settings,
                "bch",
                json!({
                    "code": wire,
                    "dimension": code.dimension(),
                    "spec": spec,
                    "apparent_at_roots": apparent,
                }),
            );
            Ok(0)
        }
        Command::Mindist { code, trials } => {
            let code = load_code(&code)?;
            let d = min_distance_bruteforce(&code, 1u64 << settings.cap)?;
            let sampled = if trials > 0 {
                weight_upper_bound(&code, trials, settings.seed)?
            } else {
                None
            };
            emit(
                settings,
                "mindist",
                json!({
                    "dimension": code.dimension(),
                    "d": d,
                    "sampled_upper_bound": sampled,
                    "trials": trials,
                }),
            );
            Ok(0)
        }
        Command::Table { which } => {
            let report = table_report(which)?;
            if settings.format == "csv" {
                print!("{}", report.csv());
            } else {
                emit(settings, "table", serde_json::to_value(&report)?);
            }
            if report.mismatches.is_empty() {
                Ok(0)
            } else {
                if settings.format == "csv" {
                    for m in &report.mismatches {
                        eprintln!("{m}");
                    }
                }
                Ok(1)
            }
        }
    }
}
