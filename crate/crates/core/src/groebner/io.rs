//! Ideal files and JSON views of bases and Hilbert data.
//!
//! An ideal file is line oriented:
//!
//! ```text
//! # free-form comment
//! vars: x1,x2,y1
//! x1^2 - y1
//! x2 - 1
//! ```
//!
//! The header must come before the first polynomial. Blank lines are ignored.

use serde_json::{json, Value};

use super::{HilbertData, IdealPresentation, ReducedGB};
use crate::error::{Error, Result};
use crate::polyalg::{int_json, parse_poly, VarContext};

/// A parsed ideal file: the presentation and the comment lines (without `#`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub ideal: IdealPresentation,
    pub comments: Vec<String>,
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut ctx = None;
    let mut gens = Vec::new();
    let mut comments = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.trim().to_string());
            continue;
        }
        if let Some(v) = line.strip_prefix("vars:") {
            if ctx.is_some() {
                return Err(Error::Format(format!("line {}: duplicate `vars:` header", lineno + 1)));
            }
            let names: Vec<&str> = v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            ctx = Some(VarContext::new(&names)?);
            continue;
        }
        let Some(c) = ctx.as_ref() else {
            return Err(Error::Format(format!("line {}: polynomial before the `vars:` header", lineno + 1)));
        };
        let p = parse_poly(line, c).map_err(|e| match e {
            Error::Syntax { pos, msg } => Error::Format(format!("line {}, column {}: {msg}", lineno + 1, pos + 1)),
            other => other,
        })?;
        gens.push(p);
    }
    let ctx = ctx.ok_or_else(|| Error::Format("missing `vars:` header".into()))?;
    Ok(IdealFile { ideal: IdealPresentation::new(&ctx, gens)?, comments })
}

/// Serialises a presentation; each comment becomes a leading `# ` line.
pub fn write_ideal_file(ideal: &IdealPresentation, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str("vars: ");
    out.push_str(&ideal.context().names().join(","));
    out.push('\n');
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn ideal_json(ideal: &IdealPresentation) -> Value {
    json!({
        "vars": ideal.context().names(),
        "generators": ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

pub fn gb_json(gb: &ReducedGB) -> Value {
    json!({
        "vars": gb.context().names(),
        "order": gb.order().to_string(),
        "basis": gb.basis_strings(),
    })
}

pub fn hilbert_json(h: &HilbertData) -> Value {
    json!({
        "numerator": h.numerator.iter().map(int_json).collect::<Vec<_>>(),
        "krull_dim": h.krull_dim,
        "proj_dim": h.proj_dim,
        "degree": int_json(&h.degree),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_text() {
        let text = "# sl2 orbit\nvars: x,y,z\n\nx^2 + y*z - 1\n0\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.comments, ["sl2 orbit"]);
        assert_eq!(f.ideal.generators().len(), 1);
        let written = write_ideal_file(&f.ideal, &f.comments);
        assert_eq!(written, "# sl2 orbit\nvars: x,y,z\nx^2 + y*z - 1\n");
        assert_eq!(parse_ideal_file(&written).unwrap(), f);
    }

    #[test]
    fn reports_malformed_files() {
        assert!(matches!(parse_ideal_file("x + 1\n"), Err(Error::Format(_))));
        assert!(matches!(parse_ideal_file("# only comments\n"), Err(Error::Format(_))));
        assert!(matches!(parse_ideal_file("vars: x\nvars: y\n"), Err(Error::Format(_))));
        let err = parse_ideal_file("vars: x\nx +\n").unwrap_err();
        assert_eq!(err, Error::Format("line 2, column 4: expected a coefficient or a variable".into()));
        assert_eq!(parse_ideal_file("vars: x\ny\n"), Err(Error::UnknownVariable("y".into())));
    }

    #[test]
    fn json_mirrors_fields() {
        let f = parse_ideal_file("vars: x,y\nx^2\nx*y\n").unwrap();
        let gb = crate::groebner::buchberger(&f.ideal, crate::polyalg::MonomialOrder::Grevlex).unwrap();
        assert_eq!(
            gb_json(&gb),
            json!({"vars": ["x", "y"], "order": "grevlex", "basis": ["x*y", "x^2"]})
        );
        let h = crate::groebner::hilbert(&gb).unwrap();
        assert_eq!(hilbert_json(&h)["krull_dim"], json!(1));
        assert_eq!(ideal_json(&f.ideal)["generators"], json!(["x^2", "x*y"]));
    }
}
