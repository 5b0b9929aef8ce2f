use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use stabcond::anyon::{spin_fraction, AnyonTheory};
use stabcond::condense::{run_condensation, JobDescriptor};
use stabcond::degeneracy::{distance, gsd_absolute, gsd_bruteforce, gsd_ledger, gsd_update, logical_basis, BRUTE_FORCE_CAP};
use stabcond::lattice::LatticeSpec;
use stabcond::model::{build_model, Boundary, ModelKind, StabilizerModel};
use stabcond::pants::{build_standard_network, contract, PantsNetwork, Scenario};
use stabcond::svg::model_svg;
use stabcond::verify;
use stabcond::Error;

/// Stabilizer models of Abelian quantum doubles: build, condense, count.
///
/// Exit status: 0 on success, 1 when two computations of the same number
/// disagree (or a reference check fails), 2 on bad input.
#[derive(Parser)]
#[command(name = "stabcond", version)]
struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, env = "STABCOND_WORKERS", global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// D(Z_d) on every edge
    Zd,
    /// double semion on Z4 qudits
    Ds,
    /// D(Z_d) with open sides
    ZdBoundaries,
    /// double semion with its boundary on the open rows
    DsBoundary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Torus,
    Disk,
    Cylinder,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Smooth,
    Rough,
    Even,
}

impl From<Side> for Boundary {
    fn from(s: Side) -> Boundary {
        match s {
            Side::Smooth => Boundary::Smooth,
            Side::Rough => Boundary::Rough,
            Side::Even => Boundary::Even,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a reference model and write it as JSON.
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        d: i64,
        #[arg(long, value_enum, default_value = "torus")]
        lattice: Shape,
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
        #[arg(long, value_enum, default_value = "smooth")]
        left: Side,
        #[arg(long, value_enum, default_value = "smooth")]
        right: Side,
        #[arg(long, value_enum, default_value = "smooth")]
        bottom: Side,
        #[arg(long, value_enum, default_value = "smooth")]
        top: Side,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Apply a condensation job file to a model.
    Condense {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        job: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Degeneracy by Smith form, by the counting formula and by the trace.
    Gsd {
        #[arg(long)]
        model: PathBuf,
    },
    /// Degeneracy and a logical basis as JSON.
    Logicals {
        #[arg(long)]
        model: PathBuf,
    },
    /// Weight-capped distance search.
    Distance {
        #[arg(long)]
        model: PathBuf,
        /// Largest support searched, in qudits.
        #[arg(long)]
        cap: usize,
    },
    /// Spins, braiding and Lagrangian subgroups of a theory.
    Anyons {
        /// `dz<N>` or `ds`.
        #[arg(long)]
        theory: String,
        /// List only the Lagrangian subgroups.
        #[arg(long)]
        lagrangian: bool,
        /// Condense the subgroup generated by these labels.
        #[arg(long, value_delimiter = ',')]
        condense: Vec<String>,
    },
    /// Pants-decomposition networks.
    Pants {
        #[command(subcommand)]
        cmd: PantsCmd,
    },
    /// Draw a model's edges as SVG.
    ExportSvg {
        #[arg(long)]
        model: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Recompute the reference table; nonzero exit on any mismatch.
    VerifyPaper {
        /// Only these groups (1-9).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Subcommand)]
enum PantsCmd {
    /// Contract a network file.
    Contract {
        #[arg(long)]
        network: PathBuf,
    },
    /// Write the standard network of a scenario file.
    Standard {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum Fail {
    Mismatch(String),
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Input(e.to_string())
    }
}

type Out = std::result::Result<(), Fail>;

fn read(p: &Path) -> std::result::Result<String, Fail> {
    fs::read_to_string(p).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))
}

fn write(out: &Option<PathBuf>, text: &str) -> Out {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_model(p: &Path) -> std::result::Result<StabilizerModel, Fail> {
    StabilizerModel::from_json(&read(p)?).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))
}

fn theory(name: &str) -> std::result::Result<AnyonTheory, Fail> {
    let lower = name.to_ascii_lowercase();
    if lower == "ds" {
        return Ok(AnyonTheory::double_semion());
    }
    match lower.strip_prefix("dz").and_then(|d| d.parse::<i64>().ok()) {
        Some(d) if d >= 2 => Ok(AnyonTheory::dz(d)),
        _ => Err(Fail::Input(format!("unknown theory {name:?}; use dz<N> or ds"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn build(kind: Kind, d: i64, shape: Shape, w: usize, h: usize, sides: [Side; 4], out: &Option<PathBuf>) -> Out {
    let spec = match shape {
        Shape::Torus => LatticeSpec::torus(w, h),
        Shape::Disk => LatticeSpec::disk(w, h),
        Shape::Cylinder => LatticeSpec::cylinder(w, h),
    };
    let [left, right, bottom, top] = sides.map(Boundary::from);
    let kind = match kind {
        Kind::Zd => ModelKind::ZdBulk { d },
        Kind::Ds => ModelKind::DsBulk,
        Kind::ZdBoundaries => ModelKind::ZdWithBoundaries { d, left, right, bottom, top },
        Kind::DsBoundary => ModelKind::DsWithBoundary,
    };
    let m = build_model(kind, spec)?;
    write(out, &(m.to_json() + "\n"))
}

fn condense(model: &Path, job: &Path, out: &Option<PathBuf>) -> Out {
    let m = load_model(model)?;
    let desc = JobDescriptor::from_json(&read(job)?).map_err(|e| Fail::Input(format!("{}: {e}", job.display())))?;
    let job = desc.job(m)?;
    let before = gsd_absolute(&job.model)?;
    let res = run_condensation(&job)?;
    let after = gsd_absolute(&res.model)?;
    let upd = gsd_update(&before, &res.delta)?;
    eprintln!(
        "removed {} generators, promoted {}, erased {} qudits; GSD {before} -> {after} (update gives {upd})",
        res.removed.len(),
        res.promoted.len(),
        res.erased.len()
    );
    write(out, &(res.model.to_json() + "\n"))?;
    if upd != after {
        return Err(Fail::Mismatch(format!("update gives {upd} but the Smith form gives {after}")));
    }
    Ok(())
}

fn gsd(model: &Path) -> Out {
    let m = load_model(model)?;
    let snf = gsd_absolute(&m)?;
    let ledger = gsd_ledger(&m)?;
    let dim = (m.d as f64).powi(m.num_qudits() as i32);
    let trace = if dim <= BRUTE_FORCE_CAP as f64 { Some(gsd_bruteforce(&m)?) } else { None };
    let t = trace.as_ref().map_or("- (trace: over cap)".to_string(), |t| format!("{t} (trace)"));
    println!("GSD = {snf} (snf) / {ledger} (ledger) / {t}");
    if ledger != snf || trace.is_some_and(|t| t != snf) {
        return Err(Fail::Mismatch("methods disagree".into()));
    }
    Ok(())
}

fn logicals(model: &Path) -> Out {
    let m = load_model(model)?;
    let g = gsd_absolute(&m)?;
    let basis = logical_basis(&m)?;
    let k = (g.count_ones() == 1).then(|| g.bits() - 1);
    let report = json!({
        "gsd": g.to_string(),
        "k": k,
        "logicals": basis.iter().map(|(p, _)| p.to_string()).collect::<Vec<_>>(),
        "orders": basis.iter().map(|(_, o)| o).collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    Ok(())
}

fn distance_cmd(model: &Path, cap: usize) -> Out {
    let m = load_model(model)?;
    let p = distance(&m, cap)?;
    let logicals: Vec<String> = logical_basis(&m)?.iter().map(|(l, _)| l.to_string()).collect();
    let report = json!({
        "gsd": p.gsd,
        "k": p.k,
        "logicals": logicals,
        "d_X": p.d_x,
        "d_Z": p.d_z,
        "certified": p.certified,
        "all_classes": p.all_classes,
        "cap": p.cap,
        "n_qubits": p.n_qubits,
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    if !p.certified {
        eprintln!("uncertified: no pair of conjugate logicals within {cap} qudits");
    }
    Ok(())
}

fn anyons(name: &str, lagrangian: bool, cond: &[String]) -> Out {
    let t = theory(name)?;
    if !cond.is_empty() {
        let labels: Vec<&str> = cond.iter().map(String::as_str).collect();
        let c = t.subgroup_from_labels(&labels)?;
        let (q, _) = t.condense(&c)?;
        println!("{} condensed by {{{}}}: {} anyons", t.name, t.subgroup_names(&c).join(","), q.len());
        for a in 0..q.len() {
            let (n, d) = spin_fraction(&q, a);
            println!("  {} spin {n}/{d}", q.labels[a]);
        }
        return Ok(());
    }
    if lagrangian {
        for s in t.enumerate_lagrangian() {
            println!("{{{}}}", t.subgroup_names(&s).join(","));
        }
        return Ok(());
    }
    println!("{}: {} anyons", t.name, t.len());
    for a in 0..t.len() {
        let (n, d) = spin_fraction(&t, a);
        let braids: Vec<String> = (0..t.len()).map(|b| t.braid(a, b).to_string()).collect();
        println!("  {:>6} spin {n}/{d} braiding [{}]/{}", t.labels[a], braids.join(" "), t.den);
    }
    Ok(())
}

fn pants(cmd: &PantsCmd) -> Out {
    match cmd {
        PantsCmd::Contract { network } => {
            let net = PantsNetwork::from_json(&read(network)?).map_err(|e| Fail::Input(format!("{}: {e}", network.display())))?;
            println!("GSD = {}", contract(&net)?);
            Ok(())
        }
        PantsCmd::Standard { scenario, out } => {
            let sc: Scenario = serde_json::from_str(&read(scenario)?).map_err(|e| Fail::Input(format!("{}: line {}: {e}", scenario.display(), e.line())))?;
            let net = build_standard_network(&sc)?;
            write(out, &(net.to_json() + "\n"))
        }
    }
}

fn verify_paper(only: &[u8]) -> Out {
    let checks = verify::run(only);
    for c in &checks {
        println!("[{}] {}. {}: expected {}, got {}", if c.pass { "PASS" } else { "FAIL" }, c.group, c.name, c.expected, c.got);
    }
    let bad = checks.iter().filter(|c| !c.pass).count();
    println!("{} checks, {bad} failed", checks.len());
    if bad > 0 {
        return Err(Fail::Mismatch(format!("{bad} checks failed")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    let res = match &cli.cmd {
        Cmd::Build { kind, d, lattice, width, height, left, right, bottom, top, out } => {
            build(*kind, *d, *lattice, *width, *height, [*left, *right, *bottom, *top], out)
        }
        Cmd::Condense { model, job, out } => condense(model, job, out),
        Cmd::Gsd { model } => gsd(model),
        Cmd::Logicals { model } => logicals(model),
        Cmd::Distance { model, cap } => distance_cmd(model, *cap),
        Cmd::Anyons { theory, lagrangian, condense } => anyons(theory, *lagrangian, condense),
        Cmd::Pants { cmd } => pants(cmd),
        Cmd::ExportSvg { model, out } => load_model(model).and_then(|m| write(out, &model_svg(&m))),
        Cmd::VerifyPaper { only } => verify_paper(only),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
