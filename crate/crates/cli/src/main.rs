//! obsalg: analyze two-product algebras of observables.
//!
//! Exit codes: 0 = success / physical verdict, 1 = axiom or physics
//! violation found, 2 = input error.

use clap::{Args, Parser, Subcommand};
use obsalg::algebra::{load_algebra, parse_coords, save_algebra, AlgebraDoc};
use obsalg::axioms::{check_lie, check_tau};
use obsalg::composite::tensor_compose;
use obsalg::deformation::{h2_dimension, star_rigidity_check};
use obsalg::pipeline::{run_pipeline, summarize_reports, PipelineOptions, Verdict};
use obsalg::scalar::{rat_from_str, Rat};
use obsalg::spectrum::{assoc_physical_spectrum, physical_spectrum};
use obsalg::structure::analyze;
use obsalg::trichotomy::verify_associativity;
use obsalg::trichotomy::{classify, Case};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "obsalg",
    version,
    about = "Two-product algebras of observables: verify, classify, decompose, and certify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Seed for randomized checks (always reported back).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random sample elements.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Tolerance for float-mode eigenvalue operations.
    #[arg(long = "float-eps", default_value_t = 1e-9)]
    float_eps: f64,
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the kinematic axioms (two-product) or associativity and star
    /// consistency (associative documents).
    Verify {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Compute the (λ:μ) invariant, the case tag, and ħ.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Compose two systems with a shared invariant μ.
    Compose {
        a: PathBuf,
        b: PathBuf,
        /// Shared classification invariant, e.g. 1/4 or 0.
        #[arg(long)]
        mu: String,
        /// Output path for the composite document.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Radical, Wedderburn blocks, and star summands.
    Decompose {
        file: PathBuf,
        /// Require and classify the star structure.
        #[arg(long)]
        star: bool,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Minimal polynomial and physical spectrum of an element.
    Spectrum {
        file: PathBuf,
        /// Element coordinates, e.g. "0,0,0,1".
        #[arg(long)]
        element: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Hochschild H² dimension and star rigidity.
    Rigidity {
        file: PathBuf,
        /// Perturbation scale for the star rigidity check.
        #[arg(long, default_value = "1/10")]
        t: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Full pipeline: verify → classify → hull → structure → spectrum →
    /// rigidity, with one verdict.
    Pipeline {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Summarize previously saved pipeline reports.
    Report { files: Vec<PathBuf> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<AlgebraDoc, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    load_algebra(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn dispatch(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Verify { file, opts } => {
            let doc = load(&file)?;
            match doc {
                AlgebraDoc::TwoProduct(alg) => {
                    let lie = check_lie(&alg);
                    let tau = check_tau(&alg);
                    let pass = lie.all_pass() && tau.all_pass();
                    if opts.json {
                        let value = serde_json::json!({
                            "schema": obsalg::pipeline::SCHEMA_VERSION,
                            "label": alg.label,
                            "lie": lie,
                            "tau": tau,
                            "pass": pass,
                        });
                        println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    } else {
                        for check in lie.checks.iter().chain(tau.checks.iter()) {
                            let status = if check.pass { "ok  " } else { "FAIL" };
                            match &check.witness {
                                Some(w) => println!("{status}  {} (witness {:?})", check.name, w),
                                None => println!("{status}  {}", check.name),
                            }
                        }
                    }
                    Ok(exit_bool(pass))
                }
                AlgebraDoc::Assoc(alg) => {
                    let defect = verify_associativity(&alg);
                    let pass = defect.is_none();
                    if opts.json {
                        let value = serde_json::json!({
                            "schema": obsalg::pipeline::SCHEMA_VERSION,
                            "label": alg.label,
                            "associative": pass,
                            "witness": defect.as_ref().map(|(w, _)| w.to_vec()),
                        });
                        println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    } else {
                        match &defect {
                            None => {
                                println!("ok    associativity (star consistency checked at load)")
                            }
                            Some((w, _)) => println!("FAIL  associativity at {w:?}"),
                        }
                    }
                    Ok(exit_bool(pass))
                }
            }
        }
        Command::Classify { file, opts } => {
            let doc = load(&file)?;
            let AlgebraDoc::TwoProduct(alg) = doc else {
                return Err("classify expects a two-product algebra document".into());
            };
            let report = classify(&alg);
            if opts.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("case: {}", report.case);
                println!(
                    "lambda:mu = ({} : {})",
                    report.lambda_mu.0, report.lambda_mu.1
                );
                if let Some(h) = &report.hbar {
                    match &h.exact {
                        Some(e) => println!("hbar = {e}"),
                        None => println!("hbar ≈ {}", h.approx),
                    }
                }
                if let Some(w) = report.witness {
                    println!("witness triple: {w:?}");
                }
                if report.case == Case::Inconsistent {
                    println!("residual: {}", report.residual);
                }
            }
            Ok(exit_bool(report.is_classified()))
        }
        Command::Compose { a, b, mu, output } => {
            let AlgebraDoc::TwoProduct(alg_a) = load(&a)? else {
                return Err("compose expects two-product algebra documents".into());
            };
            let AlgebraDoc::TwoProduct(alg_b) = load(&b)? else {
                return Err("compose expects two-product algebra documents".into());
            };
            let mu: Rat = rat_from_str(&mu)?;
            // an abelian factor does not constrain μ; surface the free choice
            for alg in [&alg_a, &alg_b] {
                if classify(alg).case == Case::Abelian {
                    eprintln!(
                        "note: factor {:?} is abelian, so its squaring map does not determine μ; using the supplied μ = {mu}",
                        alg.label
                    );
                }
            }
            match tensor_compose(&alg_a, &alg_b, &mu) {
                Ok(composite) => {
                    let json = save_algebra(&AlgebraDoc::TwoProduct(composite));
                    match output {
                        Some(path) => std::fs::write(&path, json)
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                        None => println!("{json}"),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(err @ obsalg::Error::IncompatibleInvariants(_))
                | Err(err @ obsalg::Error::AxiomFailure { .. }) => {
                    eprintln!("composition rejected: {err}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Decompose { file, star, opts } => {
            let AlgebraDoc::Assoc(alg) = load(&file)? else {
                return Err(
                    "decompose expects an associative algebra document (classify and build the hull first)"
                        .into(),
                );
            };
            if star && alg.star.is_none() {
                return Err("--star requested but the document has no star structure".into());
            }
            let report = analyze(&alg, opts.seed).map_err(|e| e.to_string())?;
            if opts.json {
                let value = serde_json::json!({
                    "schema": obsalg::pipeline::SCHEMA_VERSION,
                    "label": alg.label,
                    "seed": opts.seed,
                    "semisimple": report.semisimple,
                    "radical_dim": report.radical_basis.len(),
                    "radical_basis": report.radical_basis,
                    "blocks": report.blocks,
                    "star_summands": report.star_summands.iter().map(|s| &s.kind).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!("semisimple: {}", report.semisimple);
                if !report.semisimple {
                    println!("radical dimension: {}", report.radical_basis.len());
                }
                if !report.blocks.is_empty() {
                    let blocks: Vec<String> = report
                        .blocks
                        .iter()
                        .map(|(n, m)| format!("M_{n} ×{m}"))
                        .collect();
                    println!("blocks: {}", blocks.join(", "));
                }
                for s in &report.star_summands {
                    println!("star summand: {:?}", s.kind);
                }
            }
            Ok(exit_bool(report.semisimple))
        }
        Command::Spectrum {
            file,
            element,
            opts,
        } => {
            let doc = load(&file)?;
            let result = match &doc {
                AlgebraDoc::TwoProduct(alg) => {
                    let el = parse_coords(&element, alg.dim).map_err(|e| e.to_string())?;
                    physical_spectrum(alg, &el)
                }
                AlgebraDoc::Assoc(alg) => {
                    let el = parse_coords(&element, alg.dim).map_err(|e| e.to_string())?;
                    assoc_physical_spectrum(alg, &el)
                }
            };
            if opts.json {
                println!("{}", serde_json::to_string_pretty(&result).unwrap());
            } else {
                println!("minimal polynomial: {}", result.min_poly);
                println!("spectrum: {:?}", result.spectrum);
                println!("axiom 8 (nonempty spectrum): {}", flag(result.axiom8_ok));
                println!("axiom 9 (no phantoms): {}", flag(result.axiom9_ok));
                if !result.all_roots_real {
                    println!("note: minimal polynomial has non-real roots");
                }
                if !result.square_free {
                    println!("note: minimal polynomial has repeated roots");
                }
            }
            Ok(exit_bool(result.axiom8_ok && result.axiom9_ok))
        }
        Command::Rigidity { file, t, opts } => {
            let AlgebraDoc::Assoc(alg) = load(&file)? else {
                return Err("rigidity expects an associative algebra document".into());
            };
            let t: Rat = rat_from_str(&t)?;
            let hochschild = h2_dimension(&alg).map_err(|e| e.to_string())?;
            let star = if alg.star.is_some() {
                match star_rigidity_check(&alg, &t, opts.samples.min(20), opts.seed, opts.float_eps)
                {
                    Ok(r) => Some(r),
                    Err(
                        e @ (obsalg::Error::StarInconsistent(_)
                        | obsalg::Error::NotSemisimple(_)
                        | obsalg::Error::RealFieldUnsupported),
                    ) => {
                        eprintln!("star rigidity skipped: {e}");
                        None
                    }
                    Err(e) => return Err(e.to_string()),
                }
            } else {
                None
            };
            let rigid = hochschild.h2_dim == 0 && star.as_ref().is_none_or(|r| r.pass);
            if opts.json {
                let value = serde_json::json!({
                    "schema": obsalg::pipeline::SCHEMA_VERSION,
                    "label": alg.label,
                    "seed": opts.seed,
                    "hochschild": hochschild,
                    "star_rigidity": star,
                    "rigid": rigid,
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!(
                    "normalized cochain dims: C1 {} / C2 {} / C3 {}",
                    hochschild.dims.0, hochschild.dims.1, hochschild.dims.2
                );
                println!(
                    "rank d1 = {}, rank d2 = {}",
                    hochschild.rank_d1, hochschild.rank_d2
                );
                println!("H² dimension = {}", hochschild.h2_dim);
                match &star {
                    Some(r) => println!(
                        "star rigidity: {} ({} samples at t = {}, max residual {:.2e})",
                        flag(r.pass),
                        r.samples,
                        r.t,
                        r.max_residual
                    ),
                    None => println!("star rigidity: not applicable"),
                }
            }
            Ok(exit_bool(rigid))
        }
        Command::Pipeline { file, opts } => {
            let doc = load(&file)?;
            let report = run_pipeline(
                &doc,
                &PipelineOptions {
                    seed: opts.seed,
                    samples: opts.samples,
                    eps: opts.float_eps,
                },
            )
            .map_err(|e| e.to_string())?;
            if opts.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print_pipeline_text(&report);
            }
            Ok(exit_bool(report.verdict.is_qm_like()))
        }
        Command::Report { files } => {
            let mut values = Vec::new();
            for path in &files {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let value: serde_json::Value =
                    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                values.push(value);
            }
            let summary = summarize_reports(&values).map_err(|e| e.to_string())?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_bool(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn print_pipeline_text(report: &obsalg::pipeline::PipelineReport) {
    println!(
        "algebra: {} (seed {}, {} samples)",
        report.label, report.seed, report.samples
    );
    if let Some(axioms) = &report.axioms {
        let status = if axioms.all_pass() { "pass" } else { "FAIL" };
        println!("axioms: {status}");
    }
    if let Some(cls) = &report.classification {
        print!("classification: {}", cls.case);
        if let Some(h) = &cls.hbar {
            match &h.exact {
                Some(e) => print!(", hbar = {e}"),
                None => print!(", hbar ≈ {}", h.approx),
            }
        }
        println!(" — (λ:μ) = ({} : {})", cls.lambda_mu.0, cls.lambda_mu.1);
    }
    if let Some(hull) = &report.hull {
        println!(
            "hull: dim {}, {} scalars, associative: {}",
            hull.dim, hull.field, hull.associative
        );
    }
    if let Some(st) = &report.structure {
        if st.semisimple {
            let blocks: Vec<String> = st
                .blocks
                .iter()
                .map(|(n, m)| format!("M_{n} ×{m}"))
                .collect();
            println!("structure: semisimple; blocks {}", blocks.join(", "));
        } else {
            println!("structure: radical dimension {}", st.radical_dim);
        }
        for s in &st.star_summands {
            println!("star summand: {s:?}");
        }
    }
    if let Some(sp) = &report.spectrum {
        println!(
            "spectrum samples: {} checked, {} violations",
            sp.checked,
            sp.violations.len()
        );
        for v in sp.violations.iter().take(3) {
            println!(
                "  axiom {} violated by {} (min poly {}, spectrum {})",
                v.axiom, v.element, v.min_poly, v.spectrum
            );
        }
    }
    if let Some(r) = &report.rigidity {
        if let Some(h) = &r.hochschild {
            println!("rigidity: H² dimension {}", h.h2_dim);
        }
        if let Some(s) = &r.star_rigidity {
            println!(
                "star rigidity: {} (t = {}, {} samples)",
                flag(s.pass),
                s.t,
                s.samples
            );
        }
        if let Some(msg) = &r.skipped {
            println!("rigidity note: {msg}");
        }
    }
    match &report.verdict {
        Verdict::QmLike => println!("verdict: QM-like"),
        Verdict::ClassicalLike => println!("verdict: classical-like"),
        Verdict::RealAssociative => println!("verdict: real associative"),
        Verdict::Excluded {
            axiom,
            source,
            witness,
            detail,
        } => {
            println!("verdict: excluded (axiom {axiom}, via {source})");
            if !witness.is_empty() {
                println!("  witness: {witness}");
            }
            println!("  {detail}");
        }
        Verdict::Inconsistent { stage, detail } => {
            println!("verdict: inconsistent at {stage}: {detail}");
        }
    }
}
