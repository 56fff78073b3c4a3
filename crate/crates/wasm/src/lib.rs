//! Browser bindings. Every export takes graph-file text and returns JSON;
//! errors come back as `"<class>: <message>"` strings.

use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use jumplat::io::parse_graph;
use jumplat::rational::{self, Rational};
use jumplat::{seifert, spectrum, Error, ErrorClass, JumpSpectrum};

fn describe(e: Error) -> String {
    let class = match e.class() {
        ErrorClass::Parse => "parse",
        ErrorClass::Precondition => "precondition",
        ErrorClass::NeedsInput => "needs-input",
    };
    format!("{class}: {e}")
}

fn label(cycle: &str) -> Option<&str> {
    let cycle = cycle.trim();
    (!cycle.is_empty()).then_some(cycle)
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    rational::parse(s.trim()).map_err(|m| Error::Precondition(format!("`{s}`: {m}")))
}

/// Nonnegative multiplicities on `[lo, hi]`. An empty `cycle` means the arrows.
pub fn jump_json(graph: &str, cycle: &str, lo: &str, hi: &str) -> Result<Value, Error> {
    let file = parse_graph(graph)?;
    let (input, r) = file.jump_input(label(cycle))?;
    let r = Rational::from_integer(r);
    let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
    let lo = lo.max(Rational::from_integer(BigInt::from(0)));
    let mut sp = JumpSpectrum::new();
    for c in input.candidates(&(&lo / &r), &(&hi / &r)) {
        // positive genus leaves m(0) undecided; the page shows the rest
        match input.mult(&c) {
            Ok(m) => sp.add_term(c, m),
            Err(e) if e.class() == ErrorClass::NeedsInput => {}
            Err(e) => return Err(e),
        }
    }
    let (lct, m) = input.lct();
    Ok(json!({
        "scale": r.to_string(),
        "lct": rational::render(&(lct * &r)),
        "lct_mult": m,
        "terms": sp.scale_exponents(&r),
    }))
}

/// Hodge spectrum on `[0, 2)` next to the topological spectrum on `[0, 1)`.
pub fn hodge_json(graph: &str, cycle: &str) -> Result<Value, Error> {
    let file = parse_graph(graph)?;
    let (input, r) = file.jump_input(label(cycle))?;
    if r != BigInt::from(1) {
        return Err(Error::Precondition(format!(
            "the Hodge spectrum needs an integral cycle; this one clears only after scaling by {r}"
        )));
    }
    let cg = spectrum::complete_graph(input.graph(), input.f())?;
    let hodge = spectrum::extend_by_symmetry(&spectrum::hodge_spectrum_01(&cg))?;
    let tsp = spectrum::tsp_from_zk(input.graph(), input.f())?;
    Ok(json!({ "hodge": hodge, "tsp": tsp }))
}

/// Seifert invariants and the weighted homogeneous spectrum of a star.
pub fn seifert_json(graph: &str, lmax: u32) -> Result<Value, Error> {
    let file = parse_graph(graph)?;
    let (_, star) = seifert::central_input(&file.graph)?;
    let sd = &star.data;
    let p = seifert::dpd_series(sd, lmax as usize)?;
    let wh = seifert::wh_jump_spectrum(&p, sd);
    Ok(json!({
        "center": file.graph.vertex(star.center).id,
        "data": sd,
        "e": rational::render(&sd.e()),
        "r": rational::render(&sd.r()),
        "alpha": sd.alpha(),
        "o": sd.o(),
        "poincare": p.coeffs(),
        "c_max": rational::render(&wh.c_max),
        "terms": wh.spectrum,
    }))
}

fn export(v: Result<Value, Error>) -> Result<String, JsValue> {
    v.map(|v| v.to_string())
        .map_err(|e| JsValue::from_str(&describe(e)))
}

#[wasm_bindgen]
pub fn jump_spectrum(graph: &str, cycle: &str, lo: &str, hi: &str) -> Result<String, JsValue> {
    export(jump_json(graph, cycle, lo, hi))
}

#[wasm_bindgen]
pub fn hodge_spectrum(graph: &str, cycle: &str) -> Result<String, JsValue> {
    export(hodge_json(graph, cycle))
}

#[wasm_bindgen]
pub fn seifert_spectrum(graph: &str, lmax: u32) -> Result<String, JsValue> {
    export(seifert_json(graph, lmax))
}
