//! Browser bindings: classify an algebra document, explore spectra of
//! elements, and run the full pipeline, all over exact arithmetic compiled
//! to WebAssembly. Inputs and outputs are JSON strings so the page stays a
//! plain static file.

use obsalg::algebra::{load_algebra, parse_coords, AlgebraDoc};
use obsalg::pipeline::{run_pipeline, PipelineOptions};
use obsalg::spectrum::{assoc_physical_spectrum, physical_spectrum};
use obsalg::trichotomy::classify;
use wasm_bindgen::prelude::*;

fn err_json(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

/// Labels of the bundled corpus.
#[wasm_bindgen]
pub fn corpus_list() -> String {
    serde_json::to_string(&obsalg::corpus::LABELS).unwrap()
}

/// Raw JSON document for a bundled corpus label.
#[wasm_bindgen]
pub fn corpus_source(label: &str) -> String {
    obsalg::corpus::source(label).unwrap_or("{}").to_string()
}

/// Classification report for a two-product algebra document: the case tag,
/// the (λ:μ) invariant, and ħ.
#[wasm_bindgen]
pub fn classify_json(document: &str) -> String {
    match load_algebra(document) {
        Ok(AlgebraDoc::TwoProduct(alg)) => {
            let report = classify(&alg);
            serde_json::to_string_pretty(&report).unwrap_or_else(err_json)
        }
        Ok(AlgebraDoc::Assoc(_)) => {
            err_json("classification expects a two-product algebra document")
        }
        Err(e) => err_json(e),
    }
}

/// Minimal polynomial, physical spectrum, and axiom flags for an element
/// given as comma-separated rational coordinates.
#[wasm_bindgen]
pub fn spectrum_json(document: &str, element: &str) -> String {
    let doc = match load_algebra(document) {
        Ok(doc) => doc,
        Err(e) => return err_json(e),
    };
    let result = match &doc {
        AlgebraDoc::TwoProduct(alg) => {
            parse_coords(element, alg.dim).map(|el| physical_spectrum(alg, &el))
        }
        AlgebraDoc::Assoc(alg) => {
            parse_coords(element, alg.dim).map(|el| assoc_physical_spectrum(alg, &el))
        }
    };
    match result {
        Ok(res) => serde_json::to_string_pretty(&res).unwrap_or_else(err_json),
        Err(e) => err_json(e),
    }
}

/// Full pipeline report with the overall verdict.
#[wasm_bindgen]
pub fn pipeline_json(document: &str, seed: u32, samples: u32) -> String {
    let doc = match load_algebra(document) {
        Ok(doc) => doc,
        Err(e) => return err_json(e),
    };
    let opts = PipelineOptions {
        seed: seed as u64,
        samples: samples as usize,
        ..Default::default()
    };
    match run_pipeline(&doc, &opts) {
        Ok(report) => serde_json::to_string_pretty(&report).unwrap_or_else(err_json),
        Err(e) => err_json(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_round_trip() {
        let labels: Vec<String> = serde_json::from_str(&corpus_list()).unwrap();
        assert!(labels.contains(&"pauli".to_string()));
        let doc = corpus_source("pauli");
        let report: serde_json::Value = serde_json::from_str(&classify_json(&doc)).unwrap();
        assert_eq!(report["case"], "Case3ComplexAssociative");
    }

    #[test]
    fn spectrum_endpoint() {
        let doc = corpus_source("pauli");
        let res: serde_json::Value = serde_json::from_str(&spectrum_json(&doc, "0,0,0,1")).unwrap();
        assert_eq!(res["spectrum"], serde_json::json!(["-1", "1"]));
        let bad: serde_json::Value = serde_json::from_str(&spectrum_json(&doc, "1,2")).unwrap();
        assert!(bad.get("error").is_some());
    }

    #[test]
    fn pipeline_endpoint() {
        let doc = corpus_source("v2");
        let res: serde_json::Value = serde_json::from_str(&pipeline_json(&doc, 0, 20)).unwrap();
        assert_eq!(res["verdict"]["kind"], "excluded");
        assert_eq!(res["verdict"]["axiom"], 8);
    }

    #[test]
    fn malformed_documents_surface_errors() {
        let res: serde_json::Value = serde_json::from_str(&classify_json("{not json")).unwrap();
        assert!(res.get("error").is_some());
    }
}
