//! JSON interchange format for morphisms.
//!
//! ```json
//! {"preset": "jacobson-dg", "field": "gf2", "n": 1, "m": 1,
//!  "terms": [{"coeff": "1", "pairs": [[1, 1]], "tops": [], "longs": [2], "bottoms": []}]}
//! ```
//!
//! Pairs are 1-based. Labels are integers for jacobson-dg, letter arrays
//! for leavitt (a long label is `[I, J]`) and `null` for quiver-example1.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagram::{BasisDiagram, Morphism, PartialBijection};
use crate::error::{Error, Result};
use crate::presentation::{BottomLabel, LongLabel, Presentation, TopLabel, Word};
use crate::scalar::{format_scalar, parse_scalar, LinComb};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub preset: String,
    pub field: String,
    pub n: usize,
    pub m: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub pairs: Vec<[usize; 2]>,
    pub tops: Vec<Value>,
    pub longs: Vec<Value>,
    pub bottoms: Vec<Value>,
}

fn word_json(w: &Word) -> Value {
    Value::from(w.iter().map(|&a| a as u64).collect::<Vec<_>>())
}

fn top_json(t: &TopLabel) -> Value {
    match t {
        TopLabel::Jacobson(p) => Value::from(*p),
        TopLabel::Leavitt(w) => word_json(w),
        TopLabel::Quiver => Value::Null,
    }
}

fn bottom_json(b: &BottomLabel) -> Value {
    match b {
        BottomLabel::Jacobson(q) => Value::from(*q),
        BottomLabel::Leavitt(w) => word_json(w),
        BottomLabel::Quiver => Value::Null,
    }
}

fn long_json(a: &LongLabel) -> Value {
    match a {
        LongLabel::Jacobson(m) => Value::from(*m),
        LongLabel::Leavitt(i, j) => Value::from(vec![word_json(i), word_json(j)]),
        LongLabel::Quiver => Value::Null,
    }
}

pub fn to_json(pres: &Presentation, m: &Morphism) -> MorphismJson {
    MorphismJson {
        preset: pres.preset.name(),
        field: pres.field.name().to_string(),
        n: m.n,
        m: m.m,
        terms: m
            .terms
            .iter()
            .map(|(d, c)| TermJson {
                coeff: format_scalar(c),
                pairs: d.pb.pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
                tops: d.tops.iter().map(top_json).collect(),
                longs: d.longs.iter().map(long_json).collect(),
                bottoms: d.bottoms.iter().map(bottom_json).collect(),
            })
            .collect(),
    }
}

pub fn to_string(pres: &Presentation, m: &Morphism) -> String {
    serde_json::to_string_pretty(&to_json(pres, m)).expect("serializable")
}

fn bad(v: &Value) -> Error {
    Error::InvalidLabel(format!("cannot read label {v}"))
}

fn json_word(v: &Value) -> Result<Word> {
    let arr = v.as_array().ok_or_else(|| bad(v))?;
    arr.iter()
        .map(|x| x.as_u64().and_then(|a| u8::try_from(a).ok()).ok_or_else(|| bad(v)))
        .collect()
}

fn json_top(pres: &Presentation, v: &Value) -> Result<TopLabel> {
    use crate::presentation::Preset::*;
    match pres.preset {
        JacobsonDg { .. } => Ok(TopLabel::Jacobson(v.as_u64().and_then(|p| u32::try_from(p).ok()).ok_or_else(|| bad(v))?)),
        Leavitt { .. } => Ok(TopLabel::Leavitt(json_word(v)?)),
        QuiverExample1 => v.is_null().then_some(TopLabel::Quiver).ok_or_else(|| bad(v)),
    }
}

fn json_bottom(pres: &Presentation, v: &Value) -> Result<BottomLabel> {
    use crate::presentation::Preset::*;
    match pres.preset {
        JacobsonDg { .. } => Ok(BottomLabel::Jacobson(
            v.as_u64().and_then(|p| u32::try_from(p).ok()).ok_or_else(|| bad(v))?,
        )),
        Leavitt { .. } => Ok(BottomLabel::Leavitt(json_word(v)?)),
        QuiverExample1 => v.is_null().then_some(BottomLabel::Quiver).ok_or_else(|| bad(v)),
    }
}

fn json_long(pres: &Presentation, v: &Value) -> Result<LongLabel> {
    use crate::presentation::Preset::*;
    match pres.preset {
        JacobsonDg { .. } => Ok(LongLabel::Jacobson(v.as_i64().ok_or_else(|| bad(v))?)),
        Leavitt { .. } => match v.as_array().map(|a| &a[..]) {
            Some([i, j]) => Ok(LongLabel::Leavitt(json_word(i)?, json_word(j)?)),
            _ => Err(bad(v)),
        },
        QuiverExample1 => v.is_null().then_some(LongLabel::Quiver).ok_or_else(|| bad(v)),
    }
}

pub fn from_json(j: &MorphismJson) -> Result<(Presentation, Morphism)> {
    let pres = Presentation::from_names(&j.preset, Some(&j.field))?;
    let mut terms = LinComb::zero();
    for t in &j.terms {
        let mut pairs = Vec::with_capacity(t.pairs.len());
        for &[i, jj] in &t.pairs {
            if i == 0 || jj == 0 {
                return Err(Error::InvalidDiagram("pairs are 1-based".into()));
            }
            pairs.push((i - 1, jj - 1));
        }
        let d = BasisDiagram {
            pb: PartialBijection::new(j.n, j.m, pairs)?,
            tops: t.tops.iter().map(|v| json_top(&pres, v)).collect::<Result<_>>()?,
            longs: t.longs.iter().map(|v| json_long(&pres, v)).collect::<Result<_>>()?,
            bottoms: t.bottoms.iter().map(|v| json_bottom(&pres, v)).collect::<Result<_>>()?,
        };
        pres.validate_diagram(&d)?;
        let c = pres.field.reduce(parse_scalar(&t.coeff)?)?;
        terms.add_term(pres.field, d, c);
    }
    Ok((pres, Morphism { n: j.n, m: j.m, terms }))
}

pub fn from_str(s: &str) -> Result<(Presentation, Morphism)> {
    from_json(&serde_json::from_str(s)?)
}
