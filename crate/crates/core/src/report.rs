//! JSON encodings of matrices, modules, forms and move witnesses.
//!
//! Elements are canonical strings, keys are sorted (`serde_json` maps are
//! ordered), and every form or automorphism carries its inverse. Term indices
//! inside witness moves are 0-based positions in the running formal sum.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::projmod::{dual, Iso, LineModule, ModuleHom, OrientedAltIso, ProjModule};
use crate::ring::Ring;
use crate::witt::{
    Certificate, Claim, ElementaryStep, ElementaryWord, FormalSum, Mode, Move, MoveWitness, Triple,
};

pub const WITNESS_FORMAT: &str = "vaserstein-witness/1";

pub fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_strings())
}

pub fn matrix_from_json(ring: &Ring, v: &Value) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Json("matrix must be an array of rows".into()))?;
    let mut out: Vec<Vec<String>> = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Json("matrix row must be an array".into()))?;
        let mut cells = Vec::with_capacity(row.len());
        for c in row {
            cells.push(match c {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(Error::Json("matrix entries must be strings or integers".into())),
            });
        }
        out.push(cells);
    }
    if out.is_empty() {
        return Ok(Matrix::zeros(ring, 0, 0));
    }
    Matrix::from_strings(ring, &out)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Json(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Json(format!("field {key:?} must be a non-negative integer")))
}

fn i64_field(v: &Value, key: &str) -> Result<i64> {
    field(v, key)?
        .as_i64()
        .ok_or_else(|| Error::Json(format!("field {key:?} must be an integer")))
}

pub fn module_from_json(ring: &Ring, v: &Value) -> Result<ProjModule> {
    ProjModule::new(matrix_from_json(ring, v)?)
}

/// `{"matrix", "inverse"}`; the module is implied by context.
pub fn form_json(f: &OrientedAltIso) -> Value {
    json!({
        "matrix": matrix_json(f.matrix()),
        "inverse": matrix_json(f.inverse_matrix()),
    })
}

pub fn form_from_json(line: &LineModule, p: &ProjModule, v: &Value) -> Result<OrientedAltIso> {
    let r = p.ring();
    let pd = dual(p, line)?;
    let m = matrix_from_json(r, field(v, "matrix")?)?;
    let inv = matrix_from_json(r, field(v, "inverse")?)?;
    OrientedAltIso::new(line, ModuleHom::new(p, &pd, m)?, ModuleHom::new(&pd, p, inv)?)
}

/// Form together with its module.
pub fn module_form_json(f: &OrientedAltIso) -> Value {
    let mut v = form_json(f);
    v["module"] = matrix_json(f.module().idempotent());
    v
}

fn module_form_from_json(line: &LineModule, v: &Value) -> Result<OrientedAltIso> {
    let p = module_from_json(line.ring(), field(v, "module")?)?;
    form_from_json(line, &p, v)
}

pub fn iso_json(phi: &Iso) -> Value {
    json!({
        "source": matrix_json(phi.map().source().idempotent()),
        "target": matrix_json(phi.map().target().idempotent()),
        "matrix": matrix_json(phi.map().matrix()),
        "inverse": matrix_json(phi.inverse().matrix()),
    })
}

pub fn iso_from_json(ring: &Ring, v: &Value) -> Result<Iso> {
    let src = module_from_json(ring, field(v, "source")?)?;
    let tgt = module_from_json(ring, field(v, "target")?)?;
    let m = matrix_from_json(ring, field(v, "matrix")?)?;
    let inv = matrix_from_json(ring, field(v, "inverse")?)?;
    Iso::new(ModuleHom::new(&src, &tgt, m)?, ModuleHom::new(&tgt, &src, inv)?)
}

pub fn triple_json(t: &Triple) -> Value {
    json!({
        "module": matrix_json(t.module().idempotent()),
        "g": form_json(t.g()),
        "f": form_json(t.f()),
    })
}

pub fn triple_from_json(line: &LineModule, v: &Value) -> Result<Triple> {
    let p = module_from_json(line.ring(), field(v, "module")?)?;
    Triple::new(
        form_from_json(line, &p, field(v, "g")?)?,
        form_from_json(line, &p, field(v, "f")?)?,
    )
}

fn sum_json(s: &FormalSum) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(c, t)| json!({"coefficient": c, "triple": triple_json(t)}))
            .collect(),
    )
}

fn sum_from_json(line: &LineModule, v: &Value) -> Result<FormalSum> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("formal sum must be an array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        terms.push((i64_field(t, "coefficient")?, triple_from_json(line, field(t, "triple")?)?));
    }
    Ok(FormalSum::from_terms(terms))
}

pub fn word_json(w: &ElementaryWord) -> Value {
    json!({
        "summands": w.summands().iter().map(|p| matrix_json(p.idempotent())).collect::<Vec<_>>(),
        "word": w.steps().iter().map(|s| json!({"i": s.i, "j": s.j, "map": matrix_json(&s.map)})).collect::<Vec<_>>(),
    })
}

pub fn word_from_json(ring: &Ring, v: &Value) -> Result<ElementaryWord> {
    let summands = field(v, "summands")?
        .as_array()
        .ok_or_else(|| Error::Json("summands must be an array".into()))?
        .iter()
        .map(|m| module_from_json(ring, m))
        .collect::<Result<Vec<_>>>()?;
    let steps = field(v, "word")?
        .as_array()
        .ok_or_else(|| Error::Json("word must be an array".into()))?
        .iter()
        .map(|s| {
            Ok(ElementaryStep::new(
                usize_field(s, "i")?,
                usize_field(s, "j")?,
                matrix_from_json(ring, field(s, "map")?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    ElementaryWord::new(summands, steps)
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Elementary(w) => {
            let mut v = word_json(w);
            v["kind"] = json!("elementary");
            v
        }
        Certificate::DetOne => json!({"kind": "det_one"}),
        Certificate::General => json!({"kind": "general"}),
    }
}

fn certificate_from_json(ring: &Ring, v: &Value) -> Result<Certificate> {
    match field(v, "kind")?.as_str() {
        Some("elementary") => Ok(Certificate::Elementary(word_from_json(ring, v)?)),
        Some("det_one") => Ok(Certificate::DetOne),
        Some("general") => Ok(Certificate::General),
        _ => Err(Error::Json("unknown certificate kind".into())),
    }
}

pub fn move_json(mv: &Move) -> Value {
    let mut v = match mv {
        Move::PerpSplit { term, at, amount } => json!({"term": term, "at": at, "amount": amount}),
        Move::PerpJoin { first, second, amount } | Move::ChainJoin { first, second, amount } => {
            json!({"first": first, "second": second, "amount": amount})
        }
        Move::ChainInsert { term, middle, amount } => {
            json!({"term": term, "middle": module_form_json(middle), "amount": amount})
        }
        Move::Congruence {
            term,
            phi,
            certificate,
            amount,
        } => json!({
            "term": term,
            "phi": iso_json(phi),
            "certificate": certificate_json(certificate),
            "amount": amount,
        }),
        Move::Isometry { term, phi, amount } => json!({"term": term, "phi": iso_json(phi), "amount": amount}),
        Move::Stabilize { form, amount } => json!({"form": module_form_json(form), "amount": amount}),
        Move::Destabilize { term, amount } | Move::Antisymmetry { term, amount } => {
            json!({"term": term, "amount": amount})
        }
    };
    v["move"] = json!(mv.name());
    v
}

pub fn move_from_json(line: &LineModule, v: &Value) -> Result<Move> {
    let ring = line.ring();
    let amount = i64_field(v, "amount")?;
    let kind = field(v, "move")?
        .as_str()
        .ok_or_else(|| Error::Json("move name must be a string".into()))?;
    Ok(match kind {
        "perp_split" => Move::PerpSplit {
            term: usize_field(v, "term")?,
            at: usize_field(v, "at")?,
            amount,
        },
        "perp_join" => Move::PerpJoin {
            first: usize_field(v, "first")?,
            second: usize_field(v, "second")?,
            amount,
        },
        "chain_insert" => Move::ChainInsert {
            term: usize_field(v, "term")?,
            middle: module_form_from_json(line, field(v, "middle")?)?,
            amount,
        },
        "chain_join" => Move::ChainJoin {
            first: usize_field(v, "first")?,
            second: usize_field(v, "second")?,
            amount,
        },
        "congruence" => Move::Congruence {
            term: usize_field(v, "term")?,
            phi: iso_from_json(ring, field(v, "phi")?)?,
            certificate: certificate_from_json(ring, field(v, "certificate")?)?,
            amount,
        },
        "isometry" => Move::Isometry {
            term: usize_field(v, "term")?,
            phi: iso_from_json(ring, field(v, "phi")?)?,
            amount,
        },
        "stabilize" => Move::Stabilize {
            form: module_form_from_json(line, field(v, "form")?)?,
            amount,
        },
        "destabilize" => Move::Destabilize {
            term: usize_field(v, "term")?,
            amount,
        },
        "antisymmetry" => Move::Antisymmetry {
            term: usize_field(v, "term")?,
            amount,
        },
        other => return Err(Error::Json(format!("unknown move {other:?}"))),
    })
}

pub fn witness_json(ring: &Ring, mode: Mode, w: &MoveWitness) -> Value {
    json!({
        "format": WITNESS_FORMAT,
        "ring": ring.to_string(),
        "mode": mode.to_string(),
        "line": matrix_json(w.line.idempotent()),
        "claim": {"lhs": sum_json(&w.claim.lhs), "rhs": sum_json(&w.claim.rhs)},
        "moves": w.moves.iter().map(move_json).collect::<Vec<_>>(),
    })
}

/// A decoded witness document.
#[derive(Clone, Debug)]
pub struct WitnessDoc {
    pub ring: Ring,
    pub mode: Mode,
    pub witness: MoveWitness,
}

/// Decode a witness document, or a report carrying one under `"witness"` or
/// `"result"."witness"`.
/// Malformed content inside the claim or a move is reported as an invalid
/// witness at that position; an unreadable header is an input error.
pub fn witness_from_json(v: &Value) -> Result<WitnessDoc> {
    let v = if v.get("format").is_some() {
        v
    } else if let Some(inner) = v.get("witness") {
        inner
    } else if let Some(inner) = v.get("result").and_then(|r| r.get("witness")) {
        inner
    } else {
        v
    };
    if field(v, "format")?.as_str() != Some(WITNESS_FORMAT) {
        return Err(Error::Json(format!("expected format {WITNESS_FORMAT:?}")));
    }
    let ring = Ring::parse(
        field(v, "ring")?
            .as_str()
            .ok_or_else(|| Error::Json("ring must be a string".into()))?,
    )?;
    let mode = Mode::parse(
        field(v, "mode")?
            .as_str()
            .ok_or_else(|| Error::Json("mode must be a string".into()))?,
    )?;
    let structural = |index: usize| {
        move |e: Error| Error::WitnessInvalid {
            index,
            reason: e.to_string(),
        }
    };
    let line = module_from_json(&ring, field(v, "line")?)
        .and_then(LineModule::new)
        .map_err(structural(0))?;
    let claim = field(v, "claim")?;
    let lhs = sum_from_json(&line, field(claim, "lhs")?).map_err(structural(0))?;
    let rhs = sum_from_json(&line, field(claim, "rhs")?).map_err(structural(0))?;
    let moves = field(v, "moves")?
        .as_array()
        .ok_or_else(|| Error::Json("moves must be an array".into()))?
        .iter()
        .enumerate()
        .map(|(i, m)| move_from_json(&line, m).map_err(structural(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessDoc {
        ring,
        mode,
        witness: MoveWitness {
            line,
            claim: Claim { lhs, rhs },
            moves,
        },
    })
}

/// Every matrix-entry location in a JSON value, as paths of keys and indices.
pub fn entry_paths(v: &Value) -> Vec<Vec<PathStep>> {
    let mut out = Vec::new();
    walk(v, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathStep {
    Key(String),
    Index(usize),
}

fn walk(v: &Value, path: &mut Vec<PathStep>, out: &mut Vec<Vec<PathStep>>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                path.push(PathStep::Key(k.clone()));
                walk(x, path, out);
                path.pop();
            }
        }
        Value::Array(items) => {
            let is_matrix_row = items.iter().all(Value::is_string) && !items.is_empty();
            for (i, x) in items.iter().enumerate() {
                path.push(PathStep::Index(i));
                if is_matrix_row {
                    out.push(path.clone());
                } else {
                    walk(x, path, out);
                }
                path.pop();
            }
        }
        _ => {}
    }
}

pub fn value_at_mut<'a>(v: &'a mut Value, path: &[PathStep]) -> Option<&'a mut Value> {
    let mut cur = v;
    for step in path {
        cur = match step {
            PathStep::Key(k) => cur.as_object_mut()?.get_mut(k)?,
            PathStep::Index(i) => cur.as_array_mut()?.get_mut(*i)?,
        };
    }
    Some(cur)
}

/// Sorted-key pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::AlternatingMatrix;
    use crate::witt::search::{bounded_equiv_search, path_to_witness, SearchOptions};
    use crate::witt::verify_witness;

    #[test]
    fn witness_round_trip() {
        let r = Ring::integers();
        let a = AlternatingMatrix::standard(&r, 2);
        let mut m = a.matrix().clone();
        m.congruence_elementary_in_place(1, 2, &r.one());
        let b = AlternatingMatrix::check(m).unwrap();
        let path = bounded_equiv_search(&a, &b, &SearchOptions::default()).unwrap();
        let w = path_to_witness(&a, &b, &path.steps).unwrap();
        let v = witness_json(&r, Mode::V, &w);
        let text = to_pretty(&v);
        let back: Value = serde_json::from_str(&text).unwrap();
        let doc = witness_from_json(&back).unwrap();
        assert_eq!(doc.witness, w);
        verify_witness(&doc.witness, doc.mode).unwrap();
        assert_eq!(to_pretty(&witness_json(&doc.ring, doc.mode, &doc.witness)), text);
        assert!(!entry_paths(&v).is_empty());
    }

    #[test]
    fn ring_names_parse_back() {
        for spec in ["Z", "Q", "Z/6", "GF(5)", "Q[x,y]", "Q[x,y,z]/(x^2+y^2+z^2-1)", "GF(3)[t]/(t^2+1)"] {
            let r = Ring::parse(spec).unwrap();
            assert_eq!(Ring::parse(&r.to_string()).unwrap(), r, "{spec}");
        }
    }
}
