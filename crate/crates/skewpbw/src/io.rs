//! File formats: the presentation config document, element literals and
//! the basis/sep output documents.
//!
//! Generator indices in files are 1-based (`"c": {"1,2": ...}`); points of
//! the underlying set and permutation image lists are 0-based. Rationals
//! are accepted as strings `"p/q"` or as integers and always emitted as
//! strings in lowest terms. Emitted objects keep deglex key order, so
//! output is byte-stable.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::commutant::{GradedBasis, SubspaceBasis};
use crate::error::{Error, Result};
use crate::funalg::{AlgebraElement, Permutation};
use crate::multiindex::MultiIndex;
use crate::pbw::{PBWElement, Presentation, Remainder};
use crate::rational::{format_rational, parse_rational};

/// A rational in a file: either a JSON integer or a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RatLit {
    Int(i64),
    Str(String),
}

impl RatLit {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            RatLit::Int(v) => Ok(BigRational::from_integer((*v).into())),
            RatLit::Str(s) => parse_rational(s),
        }
    }
}

fn algebra_element(lits: &[RatLit], m: usize, what: &str) -> Result<AlgebraElement> {
    if lits.len() != m {
        return Err(Error::Dimension(format!(
            "{what} has {} entries, omega has {m}",
            lits.len()
        )));
    }
    Ok(AlgebraElement::new(
        lits.iter().map(RatLit::to_rational).collect::<Result<Vec<_>>>()?,
    ))
}

#[derive(Debug, Deserialize)]
struct RemainderDoc {
    #[serde(default, rename = "const")]
    constant: Option<Vec<RatLit>>,
    #[serde(default)]
    lin: Option<Vec<Vec<RatLit>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    omega_size: usize,
    n: usize,
    tau: Vec<Vec<usize>>,
    #[serde(default)]
    d: Option<Vec<Vec<RatLit>>>,
    #[serde(default)]
    c: BTreeMap<String, Vec<RatLit>>,
    #[serde(default)]
    r: BTreeMap<String, RemainderDoc>,
}

/// Parses a 1-based generator pair key `"i,j"` with `i < j`.
fn parse_pair_key(key: &str, n: usize) -> Result<(usize, usize)> {
    let (a, b) = key
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("pair key {key:?} must look like \"i,j\"")))?;
    let i: usize = a
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad generator index in {key:?}: {e}")))?;
    let j: usize = b
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad generator index in {key:?}: {e}")))?;
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Parse(format!(
            "pair {key:?} out of range: generators are numbered 1..={n}"
        )));
    }
    if i >= j {
        return Err(Error::Parse(format!("pair {key:?} must have i < j")));
    }
    Ok((i - 1, j - 1))
}

/// Loads a presentation from the JSON config document. The structural
/// checks (permutations, invertible constants, remainder shapes) always
/// run; `strict` additionally runs the Leibniz and associativity
/// self-checks.
pub fn presentation_from_json(text: &str, strict: bool) -> Result<Presentation> {
    let doc: PresentationDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.tau.len() != doc.n {
        return Err(Error::Dimension(format!(
            "n = {} but {} permutations given",
            doc.n,
            doc.tau.len()
        )));
    }
    let taus = doc
        .tau
        .into_iter()
        .map(Permutation::from_image)
        .collect::<Result<Vec<_>>>()?;
    for tau in &taus {
        if tau.len() != doc.omega_size {
            return Err(Error::Dimension(format!(
                "permutation on {} points, omega_size is {}",
                tau.len(),
                doc.omega_size
            )));
        }
    }

    let d_params = doc
        .d
        .map(|ds| {
            ds.iter()
                .enumerate()
                .map(|(i, lits)| algebra_element(lits, doc.omega_size, &format!("d[{}]", i + 1)))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;

    let mut c_pairs = BTreeMap::new();
    for (key, lits) in &doc.c {
        let pair = parse_pair_key(key, doc.n)?;
        c_pairs.insert(pair, algebra_element(lits, doc.omega_size, &format!("c[{key}]"))?);
    }

    let mut r_pairs = BTreeMap::new();
    for (key, rd) in &doc.r {
        let pair = parse_pair_key(key, doc.n)?;
        let constant = match &rd.constant {
            Some(lits) => algebra_element(lits, doc.omega_size, &format!("r[{key}].const"))?,
            None => AlgebraElement::constant(doc.omega_size, BigRational::from_integer(0.into())),
        };
        let linear = match &rd.lin {
            Some(rows) => {
                if rows.len() != doc.n {
                    return Err(Error::Dimension(format!(
                        "r[{key}].lin has {} rows, need one per generator ({})",
                        rows.len(),
                        doc.n
                    )));
                }
                rows.iter()
                    .enumerate()
                    .map(|(k, lits)| {
                        algebra_element(lits, doc.omega_size, &format!("r[{key}].lin[{}]", k + 1))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            None => vec![
                AlgebraElement::constant(doc.omega_size, BigRational::from_integer(0.into()));
                doc.n
            ],
        };
        r_pairs.insert(pair, Remainder::new(constant, linear));
    }

    let p = Presentation::new(doc.omega_size, taus, d_params, c_pairs, r_pairs)?;
    if strict {
        if let Err(i) = p.leibniz_check() {
            return Err(Error::InvalidPresentation(format!(
                "derivation {} violates the twisted Leibniz rule",
                i + 1
            )));
        }
        let outcome = p.associativity_check(3);
        if let crate::pbw::AssocOutcome::Counterexample { left, mid, right } = outcome {
            return Err(Error::NotAssociative(format!(
                "({left}) * ({mid}) * ({right}) depends on bracketing"
            )));
        }
    }
    Ok(p)
}

/// Parses an element literal `{"(a1,...,an)": ["p/q", ...], ...}` against
/// the shape of a presentation.
pub fn element_from_value(v: &Value, n: usize, m: usize) -> Result<PBWElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("element literal must be a JSON object".into()))?;
    let mut terms = Vec::new();
    for (key, entry) in obj {
        let alpha = MultiIndex::parse(key)?;
        if alpha.len() != n {
            return Err(Error::Dimension(format!(
                "monomial {key} has {} exponents, presentation has {n} generators",
                alpha.len()
            )));
        }
        let lits: Vec<RatLit> = serde_json::from_value(entry.clone())
            .map_err(|e| Error::Parse(format!("coefficients of {key}: {e}")))?;
        terms.push((alpha, algebra_element(&lits, m, &format!("coefficient of {key}"))?));
    }
    Ok(PBWElement::from_terms(terms))
}

pub fn element_from_json(text: &str, n: usize, m: usize) -> Result<PBWElement> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    element_from_value(&v, n, m)
}

fn rational_array(coeff: &AlgebraElement) -> Value {
    Value::Array(coeff.values().iter().map(|q| Value::String(format_rational(q))).collect())
}

/// Element literal as an ordered JSON object, keys in ascending deglex
/// order.
pub fn element_to_value(f: &PBWElement) -> Value {
    let mut map = Map::new();
    for (alpha, coeff) in f.terms() {
        map.insert(alpha.to_string(), rational_array(coeff));
    }
    Value::Object(map)
}

/// Output document for a graded (per-monomial) basis.
pub fn graded_basis_doc(gb: &GradedBasis) -> Value {
    let mut basis = Vec::new();
    for (alpha, vectors) in &gb.per_alpha {
        for v in vectors {
            basis.push(json!({ "alpha": alpha.to_string(), "coeff": rational_array(v) }));
        }
    }
    json!({ "method": "sep", "max_degree": gb.max_degree, "basis": basis })
}

/// Output document for a flat element basis (`kernel` or `direct`).
pub fn subspace_basis_doc(method: &str, sb: &SubspaceBasis) -> Value {
    let basis: Vec<Value> = sb.elements.iter().map(element_to_value).collect();
    json!({ "method": method, "max_degree": sb.max_degree, "basis": basis })
}

/// Re-reads a basis document produced by [`graded_basis_doc`] or
/// [`subspace_basis_doc`]; the inverse of the emitters up to span data.
pub fn parse_basis_doc(
    v: &Value,
    n: usize,
    m: usize,
) -> Result<(String, u32, Vec<PBWElement>)> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("basis doc must be an object".into()))?;
    let method = obj
        .get("method")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing method".into()))?
        .to_string();
    let max_degree = obj
        .get("max_degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing max_degree".into()))? as u32;
    let basis = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing basis".into()))?;
    let mut elements = Vec::new();
    for entry in basis {
        if let Some(entry_obj) = entry.as_object() {
            if entry_obj.contains_key("alpha") {
                let alpha = MultiIndex::parse(
                    entry_obj
                        .get("alpha")
                        .and_then(Value::as_str)
                        .ok_or_else(|| Error::Parse("alpha must be a string".into()))?,
                )?;
                let lits: Vec<RatLit> = serde_json::from_value(
                    entry_obj.get("coeff").cloned().unwrap_or(Value::Null),
                )
                .map_err(|e| Error::Parse(format!("coeff of {alpha}: {e}")))?;
                elements.push(PBWElement::monomial(alpha, algebra_element(&lits, m, "coeff")?));
                continue;
            }
        }
        elements.push(element_from_value(entry, n, m)?);
    }
    Ok((method, max_degree, elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::MultiIndex;

    const SWAP_PLANE: &str = r#"{
        "omega_size": 2,
        "n": 2,
        "tau": [[0, 1], [1, 0]],
        "c": {"1,2": ["1", "2"]}
    }"#;

    #[test]
    fn loads_minimal_presentation() {
        let p = presentation_from_json(SWAP_PLANE, true).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.omega_size(), 2);
        assert!(p.is_quasi_commutative());
        assert_eq!(p.c(0, 1), &AlgebraElement::from_integers(&[1, 2]));
    }

    #[test]
    fn loads_derivations_and_remainders() {
        let text = r#"{
            "omega_size": 2,
            "n": 2,
            "tau": [[1, 0], [1, 0]],
            "d": [["1", "1"], [0, 0]],
            "c": {"1,2": [1, 1]},
            "r": {"1,2": {"const": ["1/2", "1/2"], "lin": [["1", "1"], [0, 0]]}}
        }"#;
        let p = presentation_from_json(text, false).unwrap();
        assert!(!p.is_quasi_commutative());
        assert!(!p.delta(0).is_zero_map());
        assert!(p.delta(1).is_zero_map());
        assert!(!p.remainder(0, 1).is_zero());
    }

    #[test]
    fn rejects_bad_documents() {
        // Not a permutation.
        assert!(presentation_from_json(
            r#"{"omega_size": 2, "n": 1, "tau": [[0, 0]]}"#,
            false
        )
        .is_err());
        // Zero entry in c.
        assert!(presentation_from_json(
            r#"{"omega_size": 2, "n": 2, "tau": [[0,1],[1,0]], "c": {"1,2": [1, 0]}}"#,
            false
        )
        .is_err());
        // Bad pair key.
        assert!(presentation_from_json(
            r#"{"omega_size": 2, "n": 2, "tau": [[0,1],[1,0]], "c": {"2,1": [1, 1]}}"#,
            false
        )
        .is_err());
        // Unknown field.
        assert!(presentation_from_json(
            r#"{"omega_size": 2, "n": 1, "tau": [[0,1]], "bogus": 1}"#,
            false
        )
        .is_err());
    }

    #[test]
    fn strict_mode_rejects_inconsistent_relations() {
        let text = r#"{
            "omega_size": 2,
            "n": 2,
            "tau": [[0, 1], [1, 0]],
            "c": {"1,2": ["1", "2"]},
            "r": {"1,2": {"const": ["1", "0"]}}
        }"#;
        assert!(presentation_from_json(text, false).is_ok());
        assert!(matches!(
            presentation_from_json(text, true),
            Err(Error::NotAssociative(_))
        ));
    }

    #[test]
    fn element_literal_round_trip() {
        let f = PBWElement::from_terms(vec![
            (
                MultiIndex::new(vec![1, 0]),
                AlgebraElement::new(vec![
                    BigRational::from_integer(1.into()),
                    BigRational::new(1.into(), 2.into()),
                ]),
            ),
            (MultiIndex::new(vec![0, 2]), AlgebraElement::from_integers(&[-3, 0])),
        ]);
        let v = element_to_value(&f);
        let text = serde_json::to_string(&v).unwrap();
        let back = element_from_json(&text, 2, 2).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn element_keys_come_out_in_deglex_order() {
        let f = PBWElement::from_terms(vec![
            (MultiIndex::new(vec![2, 0]), AlgebraElement::from_integers(&[1, 1])),
            (MultiIndex::new(vec![0, 1]), AlgebraElement::from_integers(&[1, 1])),
            (MultiIndex::new(vec![0, 0]), AlgebraElement::from_integers(&[1, 1])),
        ]);
        let text = serde_json::to_string(&element_to_value(&f)).unwrap();
        let i0 = text.find("(0,0)").unwrap();
        let i1 = text.find("(0,1)").unwrap();
        let i2 = text.find("(2,0)").unwrap();
        assert!(i0 < i1 && i1 < i2);
    }

    #[test]
    fn element_literal_errors() {
        assert!(element_from_json(r#"{"(1)": ["1", "1"]}"#, 2, 2).is_err());
        assert!(element_from_json(r#"{"(1,0)": ["1"]}"#, 2, 2).is_err());
        assert!(element_from_json(r#"{"(1,0)": ["1/0", "1"]}"#, 2, 2).is_err());
        assert!(element_from_json(r#"["1"]"#, 2, 2).is_err());
    }

    #[test]
    fn basis_doc_round_trip() {
        let sb = crate::commutant::SubspaceBasis {
            max_degree: 2,
            elements: vec![PBWElement::monomial(
                MultiIndex::new(vec![1, 1]),
                AlgebraElement::from_integers(&[1, 4]),
            )],
        };
        let doc = subspace_basis_doc("direct", &sb);
        let (method, d, elements) = parse_basis_doc(&doc, 2, 2).unwrap();
        assert_eq!(method, "direct");
        assert_eq!(d, 2);
        assert_eq!(elements, sb.elements);
    }
}
