//! Browser bindings: each export takes plain strings and returns the same
//! JSON report the command-line tool prints with `--json`.

use milnor::curve::BivariatePolynomial;
use milnor::pham::{Enumeration, Exponents};
use milnor::plumbing::PlumbingGraph;
use milnor_cli::commands::{self, Meet};
use milnor_cli::input;
use milnor_cli::report::Report;
use wasm_bindgen::prelude::*;

/// Kept below the command-line default so a page never stalls for long.
const BROWSER_BUDGET: u64 = 2_000_000;

fn parse_exponents(s: &str) -> milnor::Result<Vec<u64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| milnor::Error::InvalidInput(format!("`{t}` is not an exponent")))
        })
        .collect()
}

fn finish(command: &str, r: milnor::Result<Report>) -> String {
    match r {
        Ok(r) => r.to_json(),
        Err(e) => Report::failed(command, milnor_cli::exit_code(&e), e.to_string()).to_json(),
    }
}

/// Report for the link of `x_0^a_0 + … + x_n^a_n`; `exponents` is a
/// space- or comma-separated list.
#[wasm_bindgen]
pub fn link_report(exponents: &str, max_degree: usize) -> String {
    let cfg = Enumeration::default().with_budget(BROWSER_BUDGET);
    finish(
        "link",
        parse_exponents(exponents).and_then(|a| commands::link(&a, &cfg, max_degree)),
    )
}

/// Monodromy eigenvalues as flat `[numerator, denominator, multiplicity, …]`
/// triples; the eigenvalue is `exp(2πi · numerator/denominator)`.
#[wasm_bindgen]
pub fn spectrum_points(exponents: &str) -> Result<Vec<u32>, JsValue> {
    let points = || -> milnor::Result<Vec<u32>> {
        let a = Exponents::new(parse_exponents(exponents)?)?;
        let spectrum = Enumeration::default()
            .with_budget(BROWSER_BUDGET)
            .spectrum(&a)?;
        let narrow = |v: u64| {
            u32::try_from(v).map_err(|_| milnor::Error::Unsupported(format!("{v} exceeds 32 bits")))
        };
        let mut out = Vec::with_capacity(3 * spectrum.entries().len());
        for (r, m) in spectrum.entries() {
            out.extend([narrow(r.numer())?, narrow(r.denom())?, narrow(*m)?]);
        }
        Ok(out)
    };
    points().map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Plane-curve branch in the `e:c,…` term format, with an optional implicit
/// curve `meet` (empty string for none).
#[wasm_bindgen]
pub fn curve_report(terms: &str, meet: &str) -> String {
    let r = (|| {
        let branch = input::branch(input::parse_inline_terms(terms)?, None)?;
        let meet = match meet.trim() {
            "" => None,
            f => Some(Meet::Implicit(f.parse::<BivariatePolynomial>()?)),
        };
        commands::curve(&branch, meet.as_ref())
    })();
    finish("curve", r)
}

/// Plumbing graph given by name (`E8`, `A<k>`) or as graph-file text.
#[wasm_bindgen]
pub fn plumb_report(graph: &str) -> String {
    let r = (|| {
        let (name, g) = match PlumbingGraph::named(graph) {
            Some(g) => (graph.trim().to_string(), g),
            None => ("inline".to_string(), graph.parse()?),
        };
        commands::plumb(&name, &g)
    })();
    finish("plumb", r)
}
