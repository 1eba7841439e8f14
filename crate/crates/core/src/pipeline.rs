//! The full analysis pipeline: axiom verification, classification, hull
//! construction, structure and star analysis, spectrum sampling, and
//! rigidity, with one overall verdict.
//!
//! Verdict semantics: `QmLike` needs a complex ⋆-algebra hull that is
//! semisimple with only standard star summands and no sampled spectrum
//! violations. Structure-level exclusions (radical nilpotents, indefinite
//! or swapped star summands, V₂ summands) carry explicit witnesses and the
//! violated measurement axiom. Inconsistent inputs short-circuit.

use crate::algebra::{AlgebraDoc, AssocAlgebra, Element, Field, TwoProductAlgebra};
use crate::axioms::{check_lie, check_tau, AxiomReport};
use crate::deformation::{h2_dimension, star_rigidity_check, HochschildReport, StarRigidityReport};
use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, vec_scale};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;
use crate::spectrum::{assoc_physical_spectrum, physical_spectrum, SpectrumResult};
use crate::structure::{classify_star, radical, wedderburn_decompose, StarSummandKind};
use crate::trichotomy::{
    build_associative, classify, verify_associativity, Case, ClassificationReport,
};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub seed: u64,
    pub samples: usize,
    pub eps: f64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            seed: 0,
            samples: 50,
            eps: crate::numeric::DEFAULT_EPS,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Verdict {
    /// Complex ⋆-algebra, semisimple, standard star, all samples physical.
    QmLike,
    /// Commutative Poisson type with no measurement violations found.
    ClassicalLike,
    /// Real associative type with no measurement violations found.
    RealAssociative,
    Excluded {
        axiom: u8,
        source: String,
        witness: String,
        detail: String,
    },
    Inconsistent {
        stage: String,
        detail: String,
    },
}

impl Verdict {
    pub fn is_qm_like(&self) -> bool {
        matches!(self, Verdict::QmLike)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HullStage {
    pub dim: usize,
    pub field: String,
    pub associative: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureStage {
    pub semisimple: bool,
    pub radical_dim: usize,
    /// (matrix size, multiplicity) pairs; empty when not computed.
    pub blocks: Vec<(usize, usize)>,
    pub star_summands: Vec<StarSummandKind>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumViolation {
    pub element: String,
    pub axiom: u8,
    pub min_poly: String,
    pub spectrum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumStage {
    pub checked: usize,
    pub violations: Vec<SpectrumViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityStage {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hochschild: Option<HochschildReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_rigidity: Option<StarRigidityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub schema: u32,
    pub label: String,
    pub seed: u64,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hull: Option<HullStage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureStage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumStage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigidity: Option<RigidityStage>,
    pub verdict: Verdict,
}

pub fn coords_string(el: &[Scalar]) -> String {
    let inner: Vec<String> = el.iter().map(|s| s.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn roots_string(res: &SpectrumResult) -> String {
    let mut out = Vec::new();
    for r in &res.spectrum {
        out.push(match r {
            crate::poly::RealRoot::Rational(q) => q.to_string(),
            crate::poly::RealRoot::Isolated { lo, hi } => format!("({lo}, {hi})"),
        });
    }
    format!("{{{}}}", out.join(", "))
}

/// Runs the pipeline on a loaded algebra document.
pub fn run_pipeline(doc: &AlgebraDoc, opts: &PipelineOptions) -> Result<PipelineReport> {
    match doc {
        AlgebraDoc::TwoProduct(alg) => run_two_product(alg, opts),
        AlgebraDoc::Assoc(alg) => run_assoc(alg, opts),
    }
}

fn empty_report(label: &str, opts: &PipelineOptions, verdict: Verdict) -> PipelineReport {
    PipelineReport {
        schema: SCHEMA_VERSION,
        label: label.to_string(),
        seed: opts.seed,
        samples: opts.samples,
        axioms: None,
        classification: None,
        hull: None,
        structure: None,
        spectrum: None,
        rigidity: None,
        verdict,
    }
}

fn run_two_product(alg: &TwoProductAlgebra, opts: &PipelineOptions) -> Result<PipelineReport> {
    let mut report = empty_report(&alg.label, opts, Verdict::QmLike);

    // stage 1: kinematic axioms
    let lie = check_lie(alg);
    let tau = check_tau(alg);
    let mut axioms = lie.checks.clone();
    axioms.extend(tau.checks.clone());
    let axioms = AxiomReport { checks: axioms };
    if let Some(fail) = axioms.first_failure() {
        report.verdict = Verdict::Inconsistent {
            stage: "axioms".into(),
            detail: format!("{} fails at {:?}", fail.name, fail.witness),
        };
        report.axioms = Some(axioms);
        return Ok(report);
    }
    report.axioms = Some(axioms);

    // stage 2: trichotomy
    let classification = classify(alg);
    match classification.case {
        Case::Inconsistent => {
            report.verdict = Verdict::Inconsistent {
                stage: "classification".into(),
                detail: format!(
                    "no consistent (λ:μ); residual {} at {:?}",
                    classification.residual, classification.witness
                ),
            };
            report.classification = Some(classification);
            return Ok(report);
        }
        Case::Abelian => {
            report.verdict = Verdict::Excluded {
                axiom: 9,
                source: "classification".into(),
                witness: String::new(),
                detail: "abelian observable algebra: trivial dynamics".into(),
            };
            report.classification = Some(classification);
            return Ok(report);
        }
        _ => {}
    }
    report.classification = Some(classification.clone());

    // stage 3: associative hull
    let hull = build_associative(alg, &classification)?;
    let assoc_defect = verify_associativity(&hull);
    report.hull = Some(HullStage {
        dim: hull.dim,
        field: hull.field.to_string(),
        associative: assoc_defect.is_none(),
    });
    if let Some((witness, _)) = assoc_defect {
        report.verdict = Verdict::Inconsistent {
            stage: "hull".into(),
            detail: format!("hull product is not associative at {witness:?}"),
        };
        return Ok(report);
    }

    // stage 4: structure of the hull
    let exclusion = fill_structure_stage(&hull, opts, &mut report)?;

    // stage 5: spectrum sampling on the two-product data (τ powers)
    let sample_elements = two_product_samples(alg, opts);
    let spec_exclusion = fill_spectrum_stage(
        &mut report,
        sample_elements.iter().map(|el| {
            let res = physical_spectrum(alg, el);
            (el.clone(), res)
        }),
    );

    // stage 6: rigidity
    report.rigidity = Some(rigidity_stage(&hull, opts));

    report.verdict = match exclusion.or(spec_exclusion) {
        Some(v) => v,
        None => match classification.case {
            Case::Case1Poisson => Verdict::ClassicalLike,
            Case::Case2RealAssociative => Verdict::RealAssociative,
            Case::Case3ComplexAssociative => Verdict::QmLike,
            _ => unreachable!(),
        },
    };
    Ok(report)
}

fn run_assoc(alg: &AssocAlgebra, opts: &PipelineOptions) -> Result<PipelineReport> {
    let mut report = empty_report(&alg.label, opts, Verdict::QmLike);

    // stage 1: associativity (star consistency is validated at load)
    if let Some((witness, _)) = verify_associativity(alg) {
        report.verdict = Verdict::Inconsistent {
            stage: "axioms".into(),
            detail: format!("product is not associative at {witness:?}"),
        };
        return Ok(report);
    }
    report.hull = Some(HullStage {
        dim: alg.dim,
        field: alg.field.to_string(),
        associative: true,
    });

    // stage 2/3: structure
    let exclusion = fill_structure_stage(alg, opts, &mut report)?;

    // stage 4: spectrum sampling over Hermitian elements (or the whole
    // algebra when no star identifies the observables)
    let sample_elements = assoc_samples(alg, opts);
    let spec_exclusion = fill_spectrum_stage(
        &mut report,
        sample_elements.iter().map(|el| {
            let res = assoc_physical_spectrum(alg, el);
            (el.clone(), res)
        }),
    );

    report.rigidity = Some(rigidity_stage(alg, opts));

    report.verdict = match exclusion.or(spec_exclusion) {
        Some(v) => v,
        None => {
            if alg.field == Field::Complex && alg.star.is_some() {
                Verdict::QmLike
            } else {
                Verdict::RealAssociative
            }
        }
    };
    Ok(report)
}

/// Radical, Wedderburn blocks, star summands; returns the exclusion verdict
/// when structure already rules the algebra out.
fn fill_structure_stage(
    hull: &AssocAlgebra,
    opts: &PipelineOptions,
    report: &mut PipelineReport,
) -> Result<Option<Verdict>> {
    let rad = radical(hull);
    let semisimple = rad.is_empty();
    let mut stage = StructureStage {
        semisimple,
        radical_dim: rad.len(),
        blocks: Vec::new(),
        star_summands: Vec::new(),
    };
    if !semisimple {
        // a radical element is nilpotent: a non-constant observable whose
        // spectrum is forced to {0}
        let witness = hermitize(hull, &rad[0]);
        let res = assoc_physical_spectrum(hull, &witness);
        report.structure = Some(stage);
        return Ok(Some(Verdict::Excluded {
            axiom: 9,
            source: "radical".into(),
            witness: coords_string(&witness),
            detail: format!(
                "nilpotent observable with minimal polynomial {}; spectrum {}",
                res.min_poly,
                roots_string(&res)
            ),
        }));
    }
    if hull.field != Field::Complex {
        report.structure = Some(stage);
        return Ok(None);
    }
    let wd = wedderburn_decompose(hull, opts.seed)?;
    stage.blocks = wd.block_multiset();
    if hull.star.is_none() {
        report.structure = Some(stage);
        return Ok(None);
    }
    let summands = classify_star(hull, &wd)?;
    stage.star_summands = summands.iter().map(|s| s.kind.clone()).collect();
    let mut exclusion = None;
    for s in &summands {
        match &s.kind {
            StarSummandKind::Standard(_) => {}
            StarSummandKind::V2 => {
                // the Hermitian element i·(u_a − u_b) squares to −1
                let ua = &wd.blocks[s.block_indices[0]].idempotent;
                let ub = &wd.blocks[s.block_indices[1]].idempotent;
                let w = vec_scale(&crate::matrix::vec_sub(ua, ub), &Scalar::i());
                let res = assoc_physical_spectrum(hull, &w);
                exclusion = Some(Verdict::Excluded {
                    axiom: 8,
                    source: "star-summand (V2)".into(),
                    witness: coords_string(&w),
                    detail: format!(
                        "Hermitian element with minimal polynomial {}; physical spectrum {} is empty",
                        res.min_poly,
                        roots_string(&res)
                    ),
                });
                break;
            }
            StarSummandKind::Indefinite(n, sig) => {
                let (witness, detail) = match &s.nilpotent_witness {
                    Some(w) => (
                        coords_string(w),
                        format!(
                            "indefinite star summand M_{n} with signature {sig:?} has a Hermitian nilpotent"
                        ),
                    ),
                    None => (
                        String::new(),
                        format!(
                            "indefinite star summand M_{n} with signature {sig:?} (Hermitian nilpotent exists over ℝ)"
                        ),
                    ),
                };
                exclusion = Some(Verdict::Excluded {
                    axiom: 9,
                    source: "star-summand (indefinite)".into(),
                    witness,
                    detail,
                });
                break;
            }
            StarSummandKind::Swap(n) => {
                let witness = s
                    .nilpotent_witness
                    .as_ref()
                    .map(|w| coords_string(w))
                    .unwrap_or_default();
                exclusion = Some(Verdict::Excluded {
                    axiom: 9,
                    source: "star-summand (swap)".into(),
                    witness,
                    detail: format!("swapped pair of M_{n} blocks carries Hermitian nilpotents"),
                });
                break;
            }
        }
    }
    report.structure = Some(stage);
    Ok(exclusion)
}

fn hermitize(hull: &AssocAlgebra, v: &[Scalar]) -> Element {
    match &hull.star {
        None => v.to_vec(),
        Some(star) => {
            let h = crate::matrix::vec_add(v, &star.apply(v));
            if !vec_is_zero(&h) {
                h
            } else {
                let iv = vec_scale(v, &Scalar::i());
                crate::matrix::vec_add(&iv, &star.apply(&iv))
            }
        }
    }
}

fn fill_spectrum_stage(
    report: &mut PipelineReport,
    results: impl Iterator<Item = (Element, SpectrumResult)>,
) -> Option<Verdict> {
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut exclusion = None;
    for (el, res) in results {
        checked += 1;
        if res.axiom8_ok && res.axiom9_ok {
            continue;
        }
        let axiom = if !res.axiom8_ok { 8 } else { 9 };
        if exclusion.is_none() {
            exclusion = Some(Verdict::Excluded {
                axiom,
                source: "spectrum-sample".into(),
                witness: coords_string(&el),
                detail: format!(
                    "minimal polynomial {}; physical spectrum {}",
                    res.min_poly,
                    roots_string(&res)
                ),
            });
        }
        violations.push(SpectrumViolation {
            element: coords_string(&el),
            axiom,
            min_poly: res.min_poly.to_string(),
            spectrum: roots_string(&res),
        });
    }
    report.spectrum = Some(SpectrumStage {
        checked,
        violations,
    });
    exclusion
}

fn two_product_samples(alg: &TwoProductAlgebra, opts: &PipelineOptions) -> Vec<Element> {
    let mut out: Vec<Element> = (0..alg.dim).map(|i| alg.basis_vec(i)).collect();
    let mut rng = SplitMix64::new(opts.seed);
    for _ in 0..opts.samples {
        out.push(
            (0..alg.dim)
                .map(|_| Scalar::from_int(rng.int_in(-3, 3)))
                .collect(),
        );
    }
    out
}

fn assoc_samples(alg: &AssocAlgebra, opts: &PipelineOptions) -> Vec<Element> {
    let mut rng = SplitMix64::new(opts.seed);
    match alg.hermitian_basis() {
        Some(herm) if !herm.is_empty() => {
            let mut out = herm.clone();
            for _ in 0..opts.samples {
                let mut acc = vec![Scalar::zero(); alg.dim];
                for h in &herm {
                    let c = Scalar::from_int(rng.int_in(-3, 3));
                    if !c.is_zero() {
                        acc = crate::matrix::vec_add(&acc, &vec_scale(h, &c));
                    }
                }
                out.push(acc);
            }
            out
        }
        _ => {
            let mut out: Vec<Element> = (0..alg.dim).map(|i| alg.basis_vec(i)).collect();
            for _ in 0..opts.samples {
                out.push(
                    (0..alg.dim)
                        .map(|_| Scalar::from_int(rng.int_in(-3, 3)))
                        .collect(),
                );
            }
            out
        }
    }
}

fn rigidity_stage(hull: &AssocAlgebra, opts: &PipelineOptions) -> RigidityStage {
    let hochschild = match h2_dimension(hull) {
        Ok(r) => Some(r),
        Err(Error::TooLarge(..)) => None,
        Err(_) => None,
    };
    let star_rigidity = if hull.field == Field::Complex && hull.star.is_some() {
        star_rigidity_check(hull, &crate::scalar::rat(1, 10), 20, opts.seed, opts.eps).ok()
    } else {
        None
    };
    let skipped = if hochschild.is_none() {
        Some(format!(
            "hochschild dimension check skipped (dim {} > 8)",
            hull.dim
        ))
    } else {
        None
    };
    RigidityStage {
        hochschild,
        star_rigidity,
        skipped,
    }
}

/// Merges pipeline reports (as JSON values) into a stable, sorted summary.
/// Rejects documents whose schema version does not match.
pub fn summarize_reports(reports: &[serde_json::Value]) -> Result<String> {
    let mut rows = Vec::new();
    for value in reports {
        let schema = value
            .get("schema")
            .and_then(serde_json::Value::as_u64)
            .ok_or(Error::SchemaMismatch {
                expected: SCHEMA_VERSION,
                found: 0,
            })?;
        if schema != SCHEMA_VERSION as u64 {
            return Err(Error::SchemaMismatch {
                expected: SCHEMA_VERSION,
                found: schema as u32,
            });
        }
        let label = value
            .get("label")
            .and_then(serde_json::Value::as_str)
            .unwrap_or("?");
        let verdict = value
            .get("verdict")
            .and_then(|v| v.get("kind"))
            .and_then(serde_json::Value::as_str)
            .unwrap_or("?");
        let case = value
            .get("classification")
            .and_then(|c| c.get("case"))
            .and_then(serde_json::Value::as_str)
            .map(str::to_string)
            .unwrap_or_else(|| "-".into());
        let blocks = value
            .get("structure")
            .and_then(|s| s.get("blocks"))
            .map(|b| b.to_string())
            .unwrap_or_else(|| "-".into());
        let h2 = value
            .get("rigidity")
            .and_then(|r| r.get("hochschild"))
            .and_then(|h| h.get("h2_dim"))
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into());
        rows.push((label.to_string(), verdict.to_string(), case, blocks, h2));
    }
    rows.sort();
    let mut out = String::from("label | verdict | case | blocks | h2\n");
    for (label, verdict, case, blocks, h2) in rows {
        out.push_str(&format!("{label} | {verdict} | {case} | {blocks} | {h2}\n"));
    }
    Ok(out)
}
