//! Browser bindings for the grading explorer in `www/`. Each export takes a
//! grading document (JSON text) and returns a JSON string; the plain Rust
//! functions behind them are what the native tests call.

use gradeid::cli::{evaluation_report, grading_report, monomial_report};
use gradeid::document::{format_degree_sequence, parse_grading_document};
use gradeid::field::Field;
use gradeid::freealg::GradedPolynomial;
use gradeid::generic::evaluate;
use gradeid::monomials::SubsetAutomaton;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Longest enumeration the page may request.
pub const MAX_ENUMERATION_LENGTH: usize = 10;

fn to_string(v: Value) -> String {
    serde_json::to_string(&v).unwrap_or_default()
}

pub fn grading_info_json(grading: &str) -> Result<String, String> {
    let spec = parse_grading_document(grading).map_err(|e| e.to_string())?;
    Ok(to_string(grading_report(&spec).1))
}

pub fn explore_monomials_json(
    grading: &str,
    max_len: usize,
    minimal: bool,
) -> Result<String, String> {
    if max_len > MAX_ENUMERATION_LENGTH {
        return Err(format!(
            "max length is limited to {MAX_ENUMERATION_LENGTH} here"
        ));
    }
    let spec = parse_grading_document(grading).map_err(|e| e.to_string())?;
    let (_, mut report) = monomial_report(&spec, max_len, minimal);
    let automaton = SubsetAutomaton::build(&spec);
    let shortest = automaton.shortest();
    report["shortest"] = json!(shortest
        .as_ref()
        .map(|s| format_degree_sequence(spec.group(), s)));
    report["automaton_states"] = json!(automaton.num_states());
    Ok(to_string(report))
}

pub fn evaluate_polynomial_json(
    grading: &str,
    polynomial: &str,
    field: &str,
) -> Result<String, String> {
    let spec = parse_grading_document(grading).map_err(|e| e.to_string())?;
    let field: Field = field.parse().map_err(|e: gradeid::Error| e.to_string())?;
    let f = GradedPolynomial::parse(polynomial, &spec, field).map_err(|e| e.to_string())?;
    let (_, mut report) = evaluation_report(&spec, &f).map_err(|e| e.to_string())?;
    report["identity"] = if spec.is_distinct() {
        json!(evaluate(&spec, &f).map_err(|e| e.to_string())?.is_zero())
    } else {
        Value::Null
    };
    Ok(to_string(report))
}

#[wasm_bindgen]
pub fn grading_info(grading: &str) -> Result<String, JsValue> {
    grading_info_json(grading).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore_monomials(grading: &str, max_len: usize, minimal: bool) -> Result<String, JsValue> {
    explore_monomials_json(grading, max_len, minimal).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn evaluate_polynomial(
    grading: &str,
    polynomial: &str,
    field: &str,
) -> Result<String, JsValue> {
    evaluate_polynomial_json(grading, polynomial, field).map_err(|e| JsValue::from_str(&e))
}
