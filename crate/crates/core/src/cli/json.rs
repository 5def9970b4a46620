//! JSON documents exchanged by the command-line tool.

use serde::Deserialize;
use serde_json::{json, Value};

use super::parse::parse_poly;
use crate::cocycle::PhaseFunction;
use crate::error::{Error, Result};
use crate::ffield::Prime;
use crate::sca::ScaMatrix;

/// `{ "p": int, "d": int, "entries": [[poly, poly], [poly, poly]] }`;
/// other fields are ignored on input.
#[derive(Debug, Deserialize)]
struct MatrixDoc {
    p: u64,
    d: usize,
    entries: [[String; 2]; 2],
}

/// Parses a matrix document. `p` and `d`, when given, must agree with it.
pub fn matrix_from_json(text: &str, p: Option<u64>, d: Option<usize>) -> Result<ScaMatrix> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("matrix JSON: {e}")))?;
    if let Some(p) = p.filter(|&p| p != doc.p) {
        return Err(Error::Input(format!("--p {p} disagrees with matrix p = {}", doc.p)));
    }
    if let Some(d) = d.filter(|&d| d != doc.d) {
        return Err(Error::Input(format!("--d {d} disagrees with matrix d = {}", doc.d)));
    }
    let modulus = Prime::new(doc.p)?;
    let [[a, b], [c, e]] = &doc.entries;
    let poly = |s: &str| parse_poly(s, modulus, doc.d);
    ScaMatrix::new(poly(a)?, poly(b)?, poly(c)?, poly(e)?)
}

pub fn matrix_to_json(s: &ScaMatrix) -> Value {
    let e = |i, j| s.entry(i, j).to_string();
    json!({
        "p": s.modulus().get(),
        "d": s.dim(),
        "entries": [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
    })
}

/// `{ "order": int, "gen_plus": int, "gen_minus": int }`.
pub fn phase_to_json(phi: &PhaseFunction) -> Value {
    json!({
        "order": phi.order(),
        "gen_plus": phi.gen_plus().value(),
        "gen_minus": phi.gen_minus().value(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldElement;

    #[test]
    fn roundtrip() {
        let p = Prime::new(3).unwrap();
        let s = ScaMatrix::shift(&[2], p)
            .compose(&ScaMatrix::shear_g(1, FieldElement::new(2, p)))
            .unwrap();
        let text = matrix_to_json(&s).to_string();
        assert_eq!(
            text,
            r#"{"d":1,"entries":[["u^2","0"],["2u + 2u^3","u^2"]],"p":3}"#
        );
        assert_eq!(matrix_from_json(&text, None, None).unwrap(), s);
    }

    #[test]
    fn flag_cross_check() {
        let text = r#"{"p":2,"d":1,"entries":[["1","0"],["0","1"]]}"#;
        assert!(matrix_from_json(text, Some(2), Some(1)).is_ok());
        assert!(matrix_from_json(text, Some(3), None).is_err());
        assert!(matrix_from_json(text, None, Some(2)).is_err());
        assert!(matrix_from_json(r#"{"p":4,"d":1,"entries":[["1","0"],["0","1"]]}"#, None, None).is_err());
        assert!(matrix_from_json(r#"{"p":2}"#, None, None).is_err());
    }
}
