//! Report rendering. Every command can emit JSON (schema-tagged, with
//! arbitrary-precision values as decimal strings), a human table, or — for
//! `search` and `bench` — CSV.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use expansive_core::bounds::GapBoundReport;
use expansive_core::dpoly::{SymbolicPoly, TermCountReport};
use expansive_core::enumerate::CensusResult;
use expansive_core::expansivity::ExpansivityVerdict;
use expansive_core::oracle::NumericRoots;
use expansive_core::poly::Rational;
use expansive_core::IntPolynomial;

use crate::bench::{growth_csv, GrowthProfile};

pub fn coeff_strings(coeffs: &[BigInt]) -> Value {
    Value::Array(
        coeffs
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn check_json(f: &IntPolynomial, verdict: &ExpansivityVerdict) -> Value {
    json!({
        "schema": "expansive.check/v1",
        "polynomial": coeff_strings(f.coeffs()),
        "expansive": verdict.expansive,
        "method": verdict.method.as_str(),
        "witness": verdict.witness,
        "conditions_checked": verdict.conditions_checked,
    })
}

pub fn check_table(f: &IntPolynomial, verdict: &ExpansivityVerdict) -> String {
    format!(
        "polynomial          {f}\n\
         expansive           {}\n\
         method              {}\n\
         witness             {}\n\
         conditions checked  {}\n",
        verdict.expansive,
        verdict.method.as_str(),
        verdict.witness,
        verdict.conditions_checked
    )
}

fn bound_pair_json(pair: &expansive_core::bounds::BoundPair) -> Value {
    json!({
        "real": rational_string(&pair.real),
        "complex": pair.complex.as_ref().map(|b| b.to_string()),
    })
}

pub struct GapOutput {
    pub report: GapBoundReport,
    pub certified: Option<(Rational, Rational)>, // (tolerance, s_low)
    pub numeric_gap: Option<f64>,
}

pub fn gap_json(f: &IntPolynomial, out: &GapOutput) -> Value {
    let r = &out.report;
    let mut obj = Map::new();
    obj.insert("schema".into(), json!("expansive.gap/v1"));
    obj.insert("polynomial".into(), coeff_strings(f.coeffs()));
    obj.insert("degree".into(), json!(r.n));
    obj.insert(
        "bounds".into(),
        json!({
            "A": bound_pair_json(&r.a),
            "AZ": bound_pair_json(&r.az),
            "H": bound_pair_json(&r.height),
            "L": bound_pair_json(&r.length),
        }),
    );
    obj.insert("best_real".into(), json!(r.best_real.as_str()));
    obj.insert(
        "best_complex".into(),
        json!(r.best_complex.map(|b| b.as_str())),
    );
    obj.insert(
        "implied_gap_real".into(),
        json!(rational_string(&r.implied_gap_real)),
    );
    obj.insert(
        "implied_gap_complex".into(),
        json!(r.implied_gap_complex.as_ref().map(rational_string)),
    );
    obj.insert(
        "implied_gap_any".into(),
        json!(rational_string(&r.implied_gap_any)),
    );
    if let Some((tol, s_low)) = &out.certified {
        let gap_low = s_low - Rational::from_integer(BigInt::from(1));
        obj.insert(
            "certified".into(),
            json!({
                "tolerance": rational_string(tol),
                "s_low": rational_string(s_low),
                "gap_low": rational_string(&gap_low),
            }),
        );
    }
    if let Some(g) = out.numeric_gap {
        obj.insert("numeric_gap".into(), json!(g));
    }
    Value::Object(obj)
}

pub fn gap_table(f: &IntPolynomial, out: &GapOutput) -> String {
    let r = &out.report;
    let fmt_pair = |pair: &expansive_core::bounds::BoundPair| {
        let c = pair
            .complex
            .as_ref()
            .map_or("-".to_string(), |b| b.to_string());
        (rational_string(&pair.real), c)
    };
    let rows = [
        ("A", fmt_pair(&r.a)),
        ("AZ", fmt_pair(&r.az)),
        ("H", fmt_pair(&r.height)),
        ("L", fmt_pair(&r.length)),
    ];
    let mut s = format!("bounds on 1/(|root| - 1) for {f} (degree {})\n\n", r.n);
    s.push_str(&format!(
        "{:<8}{:>16}{:>20}\n",
        "family", "real root", "non-real root"
    ));
    for (name, (real, complex)) in rows {
        s.push_str(&format!("{name:<8}{real:>16}{complex:>20}\n"));
    }
    s.push_str(&format!(
        "\nbest real: {} (gap >= {})\n",
        r.best_real.as_str(),
        rational_string(&r.implied_gap_real)
    ));
    match (&r.best_complex, &r.implied_gap_complex) {
        (Some(fam), Some(gap)) => {
            s.push_str(&format!(
                "best non-real: {} (gap >= {})\n",
                fam.as_str(),
                rational_string(gap)
            ));
        }
        _ => s.push_str("best non-real: - (degree 1 has no non-real roots)\n"),
    }
    s.push_str(&format!(
        "any root: gap >= {}\n",
        rational_string(&r.implied_gap_any)
    ));
    if let Some((tol, s_low)) = &out.certified {
        let gap_low = s_low - Rational::from_integer(BigInt::from(1));
        s.push_str(&format!(
            "certified: all roots beyond {} (gap >= {}, tolerance {})\n",
            rational_string(s_low),
            rational_string(&gap_low),
            rational_string(tol),
        ));
    }
    if let Some(g) = out.numeric_gap {
        s.push_str(&format!("numeric gap: {g}\n"));
    }
    s
}

pub enum DpolyKind {
    Single { k: usize, sign: char },
    PairProduct,
    Resultant,
}

pub fn dpoly_json(f: &IntPolynomial, kind: &DpolyKind, poly: &SymbolicPoly) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!("expansive.dpoly/v1"));
    obj.insert("polynomial".into(), coeff_strings(f.coeffs()));
    match kind {
        DpolyKind::Single { k, sign } => {
            obj.insert("kind".into(), json!("d-polynomial"));
            obj.insert("k".into(), json!(k));
            obj.insert("sign".into(), json!(sign.to_string()));
        }
        DpolyKind::PairProduct => {
            obj.insert("kind".into(), json!("pair-product"));
        }
        DpolyKind::Resultant => {
            obj.insert("kind".into(), json!("resultant"));
        }
    }
    obj.insert("degree".into(), json!(poly.degree()));
    obj.insert("coeffs".into(), coeff_strings(poly.coeffs()));
    Value::Object(obj)
}

pub fn term_count_json(report: &TermCountReport) -> Value {
    json!({
        "schema": "expansive.term-count/v1",
        "n": report.n,
        "raw_terms": report.raw_terms.to_string(),
        "collected_terms": report.collected_terms.to_string(),
        "reference_match": report.reference_match(),
    })
}

pub fn term_count_table(report: &TermCountReport) -> String {
    let reference = report
        .reference_match()
        .map_or("n/a (no reference for this degree)".to_string(), |m| {
            m.to_string()
        });
    format!(
        "degree           {}\n\
         raw terms        {}\n\
         collected terms  {}\n\
         reference match  {}\n",
        report.n, report.raw_terms, report.collected_terms, reference
    )
}

pub fn roots_json(f: &IntPolynomial, roots: &NumericRoots) -> Value {
    json!({
        "schema": "expansive.roots/v1",
        "polynomial": coeff_strings(f.coeffs()),
        "degree": roots.roots.len(),
        "roots": roots
            .roots
            .iter()
            .map(|z| json!({"re": z.re, "im": z.im, "abs": z.norm()}))
            .collect::<Vec<_>>(),
        "max_residual": roots.max_residual,
    })
}

pub fn roots_table(f: &IntPolynomial, roots: &NumericRoots) -> String {
    let mut s = format!("roots of {f}\n\n{:>18}{:>18}{:>18}\n", "re", "im", "abs");
    for z in &roots.roots {
        s.push_str(&format!(
            "{:>18.12}{:>18.12}{:>18.12}\n",
            z.re,
            z.im,
            z.norm()
        ));
    }
    s.push_str(&format!("\nmax residual: {:.3e}\n", roots.max_residual));
    s
}

pub fn search_json(census: &CensusResult, spec_degree: usize, a0: &BigInt) -> Value {
    json!({
        "schema": "expansive.search/v1",
        "degree": spec_degree,
        "constant_term": a0.to_string(),
        "total_checked": census.total_checked,
        "expansive": census.expansive,
        "polynomials": census
            .polynomials
            .iter()
            .map(|f| coeff_strings(f.coeffs()))
            .collect::<Vec<_>>(),
    })
}

/// CSV schema `search-csv-v1`: header `a0..an`, one polynomial per row,
/// ascending coefficients.
pub fn search_csv(census: &CensusResult, spec_degree: usize) -> String {
    let header: Vec<String> = (0..=spec_degree).map(|i| format!("a{i}")).collect();
    let mut out = header.join(",");
    out.push('\n');
    for f in &census.polynomials {
        let row: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn search_table(census: &CensusResult, spec_degree: usize, a0: &BigInt) -> String {
    let mut s = format!(
        "census: degree {spec_degree}, constant term {a0}\n\
         candidates checked: {}\n\
         expansive: {}\n\n",
        census.total_checked, census.expansive
    );
    for f in &census.polynomials {
        s.push_str(&format!("{f}\n"));
    }
    s
}

pub fn bench_json(profile: &GrowthProfile) -> Value {
    json!({
        "schema": "expansive.bench/v1",
        "degree": profile.degree,
        "height": profile.height.to_string(),
        "trials": profile.trials,
        "seed": profile.seed,
        "schur_bits": profile.schur_bits,
        "schur_median_bits": profile.schur_median_bits,
        "bareiss_bits": profile.bareiss_bits,
        "bareiss_median_bits": profile.bareiss_median_bits,
        "max_trace_excess": profile.max_trace_excess,
        "schur_wall_ms": profile.schur_wall_ms,
        "bareiss_wall_ms": profile.bareiss_wall_ms,
    })
}

pub fn bench_table(profile: &GrowthProfile) -> String {
    let mut s = format!(
        "coefficient growth: degree {}, height {}, {} trials, seed {}\n\n",
        profile.degree, profile.height, profile.trials, profile.seed
    );
    s.push_str(&format!(
        "{:<6}{:>24}{:>26}\n",
        "step", "schur median bits", "bareiss median bits (k)"
    ));
    let steps = profile.schur_median_bits.len();
    for i in 0..steps {
        let schur = profile.schur_median_bits[i];
        let bareiss = if i >= 1 && i - 1 < profile.bareiss_median_bits.len() {
            format!("{} (k={})", profile.bareiss_median_bits[i - 1], i)
        } else {
            "-".to_string()
        };
        s.push_str(&format!("{i:<6}{schur:>24}{bareiss:>26}\n"));
    }
    s.push_str(&format!(
        "\nmax trace excess over Hadamard budget: {} bits\n\
         wall time: schur {:.3} ms, bareiss {:.3} ms\n",
        profile.max_trace_excess, profile.schur_wall_ms, profile.bareiss_wall_ms
    ));
    s
}

pub fn bench_csv(profile: &GrowthProfile) -> String {
    growth_csv(profile)
}

/// Pretty-print a JSON value with a trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
