//! Text, LaTeX and JSON renderings of polynomials, matrices, generating
//! functions and verification reports, plus the JSON readers used to check
//! that emitted documents reconstruct the exact values.
//!
//! JSON coefficients are decimal strings (`"-3"`, `"1/2"`), never numbers.
//! A polynomial in `c` is a list of `[c_degree, coeff]` pairs in descending
//! degree; a bivariate polynomial is a list of `[z_degree, c_degree, coeff]`
//! triples, ascending in `z` and descending in `c` within each power of `z`.

use chromgf_core::oracle::VerificationReport;
use chromgf_core::{CanonState, PolyC, PolyZC, Rat, RatFunc, TransferMatrix};
use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt::Write;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

fn rat_text(a: &Rat, style: Style) -> String {
    match style {
        Style::Text => a.to_string(),
        Style::Latex if a.is_integer() => a.to_string(),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()),
    }
}

fn power(var: &str, deg: usize, style: Style) -> String {
    match (deg, style) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (d, Style::Latex) if d >= 10 => format!("{var}^{{{d}}}"),
        (d, _) => format!("{var}^{d}"),
    }
}

/// Signed term list `[(negative, magnitude-string)]` joined as `a-b+c`.
fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push('-'),
            (_, false) => s.push('+'),
        }
        s.push_str(&body);
    }
    s
}

fn poly_c_terms(p: &PolyC, var: &str, style: Style) -> Vec<(bool, String)> {
    let mul = if style == Style::Text { "*" } else { "" };
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, a)| !a.is_zero())
        .map(|(d, a)| {
            let mag = a.abs();
            let body = if d == 0 {
                rat_text(&mag, style)
            } else if mag.is_one() {
                power(var, d, style)
            } else {
                format!("{}{mul}{}", rat_text(&mag, style), power(var, d, style))
            };
            (a.is_negative(), body)
        })
        .collect()
}

fn poly_c(p: &PolyC, style: Style) -> String {
    join_terms(poly_c_terms(p, "c", style))
}

pub fn poly_c_text(p: &PolyC) -> String {
    poly_c(p, Style::Text)
}

pub fn poly_c_latex(p: &PolyC) -> String {
    poly_c(p, Style::Latex)
}

fn poly_zc(p: &PolyZC, z: &str, style: Style) -> String {
    let mul = if style == Style::Text { "*" } else { "" };
    let mut terms = Vec::new();
    for (d, coeff) in p.coeffs().iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let inner = poly_c_terms(coeff, "c", style);
        if d == 0 {
            terms.extend(inner);
            continue;
        }
        let zpow = power(z, d, style);
        let term = match inner.as_slice() {
            [(neg, body)] if body == "1" => (*neg, zpow),
            [(neg, body)] => (*neg, format!("{body}{mul}{zpow}")),
            _ => {
                let open = if style == Style::Latex { "\\left(" } else { "(" };
                let close = if style == Style::Latex { "\\right)" } else { ")" };
                (false, format!("{open}{}{close}{mul}{zpow}", join_terms(inner)))
            }
        };
        terms.push(term);
    }
    join_terms(terms)
}

pub fn poly_zc_text(p: &PolyZC, z: &str) -> String {
    poly_zc(p, z, Style::Text)
}

pub fn ratfunc_text(f: &RatFunc, z: &str) -> String {
    let num = poly_zc(f.numer(), z, Style::Text);
    if f.denom().is_one() {
        return num;
    }
    format!("({num})/({})", poly_zc(f.denom(), z, Style::Text))
}

pub fn ratfunc_latex(f: &RatFunc, z: &str) -> String {
    let num = poly_zc(f.numer(), z, Style::Latex);
    if f.denom().is_one() {
        return num;
    }
    format!("\\frac{{{num}}}{{{}}}", poly_zc(f.denom(), z, Style::Latex))
}

fn coeff_json(a: &Rat) -> Value {
    Value::String(a.to_string())
}

pub fn poly_c_json(p: &PolyC) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(d, a)| json!([d, coeff_json(a)]))
            .collect(),
    )
}

pub fn poly_zc_json(p: &PolyZC) -> Value {
    let mut out = Vec::new();
    for (zd, row) in p.coeffs().iter().enumerate() {
        for (cd, a) in row.coeffs().iter().enumerate().rev() {
            if !a.is_zero() {
                out.push(json!([zd, cd, coeff_json(a)]));
            }
        }
    }
    Value::Array(out)
}

pub fn ratfunc_json(f: &RatFunc) -> Value {
    json!({ "num": poly_zc_json(f.numer()), "den": poly_zc_json(f.denom()) })
}

fn state_json(s: &CanonState) -> Value {
    json!(s.labels())
}

pub fn states(states: &[CanonState], format: Format) -> String {
    match format {
        Format::Text => states.iter().map(|s| format!("{s}\n")).collect(),
        Format::Latex => {
            let items: Vec<String> = states.iter().map(ToString::to_string).collect();
            format!("\\{{{}\\}}\n", items.join(", "))
        }
        Format::Json => json_line(&json!({ "states": states.iter().map(state_json).collect::<Vec<_>>() })),
    }
}

pub fn matrix(m: &TransferMatrix, format: Format) -> String {
    let names: Vec<String> = m.states.iter().map(ToString::to_string).collect();
    match format {
        Format::Text => {
            let mut s = format!("states: {}\n", names.join(" "));
            for (i, row) in m.entries.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    let _ = writeln!(s, "M[{},{}] = {}", names[i], names[j], poly_c_text(e));
                }
            }
            s
        }
        Format::Latex => {
            let mut s = format!("% states: {}\n\\begin{{pmatrix}}\n", names.join(", "));
            let rows: Vec<String> =
                m.entries.iter().map(|row| row.iter().map(poly_c_latex).collect::<Vec<_>>().join(" & ")).collect();
            s.push_str(&rows.join(" \\\\\n"));
            s.push_str("\n\\end{pmatrix}\n");
            s
        }
        Format::Json => json_line(&json!({
            "states": m.states.iter().map(state_json).collect::<Vec<_>>(),
            "entries": m.entries.iter().map(|row| row.iter().map(poly_c_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
    }
}

pub fn genfunc(f: &RatFunc, z: &str, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", ratfunc_text(f, z)),
        Format::Latex => format!("{}\n", ratfunc_latex(f, z)),
        Format::Json => json_line(&ratfunc_json(f)),
    }
}

pub fn series(coeffs: &[PolyC], format: Format) -> String {
    match format {
        Format::Text => coeffs.iter().enumerate().map(|(n, p)| format!("n={n}: {}\n", poly_c_text(p))).collect(),
        Format::Latex => {
            coeffs.iter().enumerate().map(|(n, p)| format!("P_{{{n}}}(c) = {} \\\\\n", poly_c_latex(p))).collect()
        }
        Format::Json => json_line(&json!({ "series": coeffs.iter().map(poly_c_json).collect::<Vec<_>>() })),
    }
}

pub fn report(r: &VerificationReport, format: Format) -> String {
    let verdict = |ok: bool| if ok { "OK" } else { "FAIL" };
    let overall = if r.passed() { "PASS" } else { "FAIL" };
    match format {
        Format::Text => {
            let mut s = String::new();
            for row in &r.rows {
                let _ = writeln!(s, "n={} {}", row.n, verdict(row.ok()));
            }
            let _ = writeln!(s, "{overall}");
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{rl}\nn & verdict \\\\\n");
            for row in &r.rows {
                let _ = writeln!(s, "{} & {} \\\\", row.n, verdict(row.ok()));
            }
            let _ = writeln!(s, "\\end{{tabular}}\n{overall}");
            s
        }
        Format::Json => json_line(&json!({
            "rows": r.rows.iter().map(|row| json!({
                "n": row.n,
                "ok": row.ok(),
                "series": poly_c_json(&row.series),
                "oracle": poly_c_json(&row.oracle),
            })).collect::<Vec<_>>(),
            "pass": r.passed(),
        })),
    }
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed JSON document: {0}")]
pub struct JsonShapeError(String);

fn bad(what: &str) -> JsonShapeError {
    JsonShapeError(what.to_string())
}

fn parse_rat(v: &Value) -> Result<Rat, JsonShapeError> {
    v.as_str()
        .ok_or_else(|| bad("coefficient must be a string"))?
        .parse::<Rat>()
        .map_err(|_| bad("unparsable coefficient"))
}

fn parse_index(v: &Value) -> Result<usize, JsonShapeError> {
    v.as_u64().map(|d| d as usize).ok_or_else(|| bad("degree must be a nonnegative integer"))
}

pub fn parse_poly_c_json(v: &Value) -> Result<PolyC, JsonShapeError> {
    let items = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    let mut coeffs: Vec<Rat> = Vec::new();
    for item in items {
        match item.as_array().map(Vec::as_slice) {
            Some([d, a]) => {
                let d = parse_index(d)?;
                if coeffs.len() <= d {
                    coeffs.resize(d + 1, Rat::zero());
                }
                coeffs[d] += parse_rat(a)?;
            }
            _ => return Err(bad("term must be [degree, coeff]")),
        }
    }
    Ok(PolyC::new(coeffs))
}

pub fn parse_poly_zc_json(v: &Value) -> Result<PolyZC, JsonShapeError> {
    let items = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    let mut terms = Vec::new();
    for item in items {
        match item.as_array().map(Vec::as_slice) {
            Some([zd, cd, a]) => terms.push(chromgf_core::algebra::Term {
                z_deg: parse_index(zd)?,
                c_deg: parse_index(cd)?,
                coeff: parse_rat(a)?,
            }),
            _ => return Err(bad("term must be [z_degree, c_degree, coeff]")),
        }
    }
    Ok(PolyZC::from_terms(terms))
}

pub fn parse_ratfunc_json(v: &Value) -> Result<RatFunc, JsonShapeError> {
    let num = parse_poly_zc_json(v.get("num").ok_or_else(|| bad("missing num"))?)?;
    let den = parse_poly_zc_json(v.get("den").ok_or_else(|| bad("missing den"))?)?;
    RatFunc::new(num, den).map_err(|e| JsonShapeError(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use chromgf_core::gf_grid;

    fn c(coeffs: &[i64]) -> PolyC {
        PolyC::from_ints(coeffs)
    }

    #[test]
    fn text_polynomials() {
        assert_eq!(poly_c_text(&c(&[5, -4, 1])), "c^2-4*c+5");
        assert_eq!(poly_c_text(&c(&[-10, 13, -6, 1])), "c^3-6*c^2+13*c-10");
        assert_eq!(poly_c_text(&c(&[0, 1, -2, 1])), "c^3-2*c^2+c");
        assert_eq!(poly_c_text(&c(&[0, -1])), "-c");
        assert_eq!(poly_c_text(&PolyC::zero()), "0");
        let half = PolyC::new(vec![Rat::new(1.into(), 2.into()), Rat::zero(), Rat::new((-3).into(), 2.into())]);
        assert_eq!(poly_c_text(&half), "-3/2*c^2+1/2");
    }

    #[test]
    fn latex_polynomials() {
        assert_eq!(poly_c_latex(&c(&[5, -4, 1])), "c^2-4c+5");
        assert_eq!(poly_c_latex(&PolyC::monomial(Rat::from_integer(3.into()), 12)), "3c^{12}");
    }

    #[test]
    fn path_generating_function_renderings() {
        let f = gf_grid(1).unwrap();
        assert_eq!(ratfunc_text(&f.value, "z"), "(z+1)/((-c+1)*z+1)");
        assert_eq!(ratfunc_text(&f.value, "t"), "(t+1)/((-c+1)*t+1)");
        assert_eq!(
            ratfunc_json(&f.value).to_string(),
            r#"{"num":[[0,0,"1"],[1,0,"1"]],"den":[[0,0,"1"],[1,1,"-1"],[1,0,"1"]]}"#
        );
        assert_eq!(ratfunc_latex(&f.value, "z"), "\\frac{z+1}{\\left(-c+1\\right)z+1}");
    }

    #[test]
    fn json_round_trip() {
        let f = gf_grid(3).unwrap().value;
        assert_eq!(parse_ratfunc_json(&ratfunc_json(&f)).unwrap(), f);
        let p = c(&[-13, 14, -6, 1]);
        assert_eq!(parse_poly_c_json(&poly_c_json(&p)).unwrap(), p);
    }

    #[test]
    fn json_rejects_numeric_coefficients() {
        let v: Value = serde_json::from_str("[[1, 3]]").unwrap();
        assert!(parse_poly_c_json(&v).is_err());
    }
}
