//! Label algebras for the built-in presets.
//!
//! A preset supplies the four label families of an (A, e) pair: tops
//! (`(1-e)Ae`), bottoms (`eA(1-e)`), longs (a basis of the part of
//! `(1-e)A(1-e)` not factoring through `e`) and the scalar `eAe`, together
//! with the multiplication rules between them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, LinComb, Scalar};

/// A word over the letters `1..=L`.
pub type Word = Vec<u8>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityMode {
    Super,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// One-sided inverse pair `yx = 1` with `deg x = x_degree` (odd).
    JacobsonDg { x_degree: i64 },
    /// Leavitt-type presentation with `loops` generators `x_1..x_L`.
    Leavitt { loops: u8 },
    QuiverExample1,
}

impl Preset {
    pub const JACOBSON: Preset = Preset::JacobsonDg { x_degree: 1 };

    pub fn name(&self) -> String {
        match self {
            Preset::JacobsonDg { x_degree: 1 } => "jacobson-dg".to_string(),
            Preset::JacobsonDg { x_degree } => format!("jacobson-dg:{x_degree}"),
            Preset::Leavitt { loops } => format!("leavitt:{loops}"),
            Preset::QuiverExample1 => "quiver-example1".to_string(),
        }
    }

    pub fn parity_mode(&self) -> ParityMode {
        match self {
            Preset::JacobsonDg { .. } => ParityMode::Super,
            _ => ParityMode::Plain,
        }
    }

    pub fn default_field(&self) -> Field {
        match self {
            Preset::JacobsonDg { .. } => Field::Gf2,
            _ => Field::Rational,
        }
    }

    pub fn is_jacobson(&self) -> bool {
        matches!(self, Preset::JacobsonDg { .. })
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownPreset(s.to_string());
        if s == "jacobson-dg" {
            return Ok(Preset::JACOBSON);
        }
        if s == "quiver-example1" {
            return Ok(Preset::QuiverExample1);
        }
        if let Some(d) = s.strip_prefix("jacobson-dg:") {
            let d: i64 = d.parse().map_err(|_| bad())?;
            if d % 2 == 0 {
                return Err(bad());
            }
            return Ok(Preset::JacobsonDg { x_degree: d });
        }
        if let Some(l) = s.strip_prefix("leavitt:") {
            let l: u8 = l.parse().map_err(|_| bad())?;
            if !(2..=9).contains(&l) {
                return Err(bad());
            }
            return Ok(Preset::Leavitt { loops: l });
        }
        Err(bad())
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Label of a short strand ending at the top boundary.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TopLabel {
    /// `x^p z`
    Jacobson(u32),
    /// `z_I = x_I z`
    Leavitt(Word),
    Quiver,
}

/// Label of a short strand starting at the bottom boundary.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BottomLabel {
    /// `z^* y^q`
    Jacobson(u32),
    /// `z^*_I = z^* x_I^*`
    Leavitt(Word),
    Quiver,
}

/// Label of a long strand.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LongLabel {
    /// `x^m` for `m > 0`, `y^-m` for `m < 0`, `1_X` for `m = 0`.
    Jacobson(i64),
    /// `x_I x_J^*`
    Leavitt(Word, Word),
    Quiver,
}

/// Result of multiplying two long labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LongProduct {
    Long(LongLabel),
    /// A top label placed directly above a bottom label on the same site.
    Pair(TopLabel, BottomLabel),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Top,
    Bottom,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Top(TopLabel),
    Bottom(BottomLabel),
    Long(LongLabel),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub preset: Preset,
    pub field: Field,
}

fn all_words(letters: u8, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=letters {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

/// Cancels `x_J^* x_K` letter by letter. Returns `None` when the product
/// vanishes, otherwise the uncancelled remainders `(J', K')`, one of which
/// is empty.
fn cancel(j: &[u8], k: &[u8]) -> Option<(Word, Word)> {
    let mut a = j.len();
    let mut b = 0;
    while a > 0 && b < k.len() {
        if j[a - 1] != k[b] {
            return None;
        }
        a -= 1;
        b += 1;
    }
    Some((j[..a].to_vec(), k[b..].to_vec()))
}

impl Presentation {
    pub fn new(preset: Preset, field: Field) -> Self {
        Presentation { preset, field }
    }

    pub fn from_names(preset: &str, field: Option<&str>) -> Result<Self> {
        let preset: Preset = preset.parse()?;
        let field = match field {
            Some(f) => f.parse()?,
            None => preset.default_field(),
        };
        Ok(Self::new(preset, field))
    }

    fn x_degree(&self) -> i64 {
        match self.preset {
            Preset::JacobsonDg { x_degree } => x_degree,
            _ => 0,
        }
    }

    pub fn loops(&self) -> Option<u8> {
        match self.preset {
            Preset::Leavitt { loops } => Some(loops),
            _ => None,
        }
    }

    // ---- degrees and weights -------------------------------------------

    pub fn deg_top(&self, t: &TopLabel) -> i64 {
        match t {
            TopLabel::Jacobson(p) => self.x_degree() * *p as i64,
            _ => 0,
        }
    }

    pub fn deg_bottom(&self, b: &BottomLabel) -> i64 {
        match b {
            BottomLabel::Jacobson(q) => -self.x_degree() * *q as i64,
            _ => 0,
        }
    }

    pub fn deg_long(&self, a: &LongLabel) -> i64 {
        match a {
            LongLabel::Jacobson(m) => self.x_degree() * m,
            _ => 0,
        }
    }

    pub fn deg_label(&self, l: &Label) -> i64 {
        match l {
            Label::Top(t) => self.deg_top(t),
            Label::Bottom(b) => self.deg_bottom(b),
            Label::Long(a) => self.deg_long(a),
        }
    }

    pub fn weight(&self, l: &Label) -> usize {
        match l {
            Label::Top(TopLabel::Jacobson(p)) | Label::Bottom(BottomLabel::Jacobson(p)) => *p as usize,
            Label::Top(TopLabel::Leavitt(w)) | Label::Bottom(BottomLabel::Leavitt(w)) => w.len(),
            Label::Long(LongLabel::Jacobson(m)) => m.unsigned_abs() as usize,
            Label::Long(LongLabel::Leavitt(i, j)) => i.len() + j.len(),
            _ => 0,
        }
    }

    pub fn weight_top(&self, t: &TopLabel) -> usize {
        self.weight(&Label::Top(t.clone()))
    }

    pub fn weight_bottom(&self, b: &BottomLabel) -> usize {
        self.weight(&Label::Bottom(b.clone()))
    }

    pub fn weight_long(&self, a: &LongLabel) -> usize {
        self.weight(&Label::Long(a.clone()))
    }

    // ---- validity ------------------------------------------------------

    fn check_word(&self, w: &[u8]) -> bool {
        let l = self.loops().unwrap_or(0);
        w.iter().all(|&a| (1..=l).contains(&a))
    }

    pub fn validate(&self, l: &Label) -> Result<()> {
        let ok = match (self.preset, l) {
            (Preset::JacobsonDg { .. }, Label::Top(TopLabel::Jacobson(_)))
            | (Preset::JacobsonDg { .. }, Label::Bottom(BottomLabel::Jacobson(_)))
            | (Preset::JacobsonDg { .. }, Label::Long(LongLabel::Jacobson(_))) => true,
            (Preset::Leavitt { loops }, Label::Long(LongLabel::Leavitt(i, j))) => {
                self.check_word(i) && self.check_word(j) && !(i.last() == Some(&loops) && j.first() == Some(&loops))
            }
            (Preset::Leavitt { .. }, Label::Top(TopLabel::Leavitt(w)))
            | (Preset::Leavitt { .. }, Label::Bottom(BottomLabel::Leavitt(w))) => self.check_word(w),
            (Preset::QuiverExample1, Label::Top(TopLabel::Quiver))
            | (Preset::QuiverExample1, Label::Bottom(BottomLabel::Quiver))
            | (Preset::QuiverExample1, Label::Long(LongLabel::Quiver)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel(format!("{l:?} for preset {}", self.preset)))
        }
    }

    pub fn identity_long(&self) -> LongLabel {
        match self.preset {
            Preset::JacobsonDg { .. } => LongLabel::Jacobson(0),
            Preset::Leavitt { .. } => LongLabel::Leavitt(Vec::new(), Vec::new()),
            Preset::QuiverExample1 => LongLabel::Quiver,
        }
    }

    // ---- enumeration ---------------------------------------------------

    pub fn tops(&self, max_weight: usize) -> Vec<TopLabel> {
        match self.preset {
            Preset::JacobsonDg { .. } => (0..=max_weight as u32).map(TopLabel::Jacobson).collect(),
            Preset::Leavitt { loops } => all_words(loops, max_weight).into_iter().map(TopLabel::Leavitt).collect(),
            Preset::QuiverExample1 => vec![TopLabel::Quiver],
        }
    }

    pub fn bottoms(&self, max_weight: usize) -> Vec<BottomLabel> {
        match self.preset {
            Preset::JacobsonDg { .. } => (0..=max_weight as u32).map(BottomLabel::Jacobson).collect(),
            Preset::Leavitt { loops } => all_words(loops, max_weight).into_iter().map(BottomLabel::Leavitt).collect(),
            Preset::QuiverExample1 => vec![BottomLabel::Quiver],
        }
    }

    pub fn longs(&self, max_weight: usize) -> Vec<LongLabel> {
        match self.preset {
            Preset::JacobsonDg { .. } => {
                let w = max_weight as i64;
                (-w..=w).map(LongLabel::Jacobson).collect()
            }
            Preset::Leavitt { loops } => {
                let words = all_words(loops, max_weight);
                let mut out = Vec::new();
                for i in &words {
                    for j in &words {
                        if i.len() + j.len() > max_weight {
                            continue;
                        }
                        if i.last() == Some(&loops) && j.first() == Some(&loops) {
                            continue;
                        }
                        out.push(LongLabel::Leavitt(i.clone(), j.clone()));
                    }
                }
                out
            }
            Preset::QuiverExample1 => vec![LongLabel::Quiver],
        }
    }

    pub fn enumerate_labels(&self, kind: LabelKind, max_weight: usize) -> Vec<Label> {
        match kind {
            LabelKind::Top => self.tops(max_weight).into_iter().map(Label::Top).collect(),
            LabelKind::Bottom => self.bottoms(max_weight).into_iter().map(Label::Bottom).collect(),
            LabelKind::Long => self.longs(max_weight).into_iter().map(Label::Long).collect(),
        }
    }

    // ---- multiplication ------------------------------------------------

    /// Product `upper · lower` of two long labels.
    pub fn mul_long_long(&self, upper: &LongLabel, lower: &LongLabel) -> LinComb<LongProduct> {
        let field = self.field;
        let mut out = LinComb::zero();
        match (upper, lower) {
            (LongLabel::Jacobson(a), LongLabel::Jacobson(b)) => {
                out.add_term(field, LongProduct::Long(LongLabel::Jacobson(a + b)), Scalar::one());
                if *a > 0 && *b < 0 {
                    let (p, q) = (*a as u32, (-b) as u32);
                    for t in 1..=p.min(q) {
                        out.add_term(
                            field,
                            LongProduct::Pair(TopLabel::Jacobson(p - t), BottomLabel::Jacobson(q - t)),
                            -Scalar::one(),
                        );
                    }
                }
            }
            (LongLabel::Leavitt(i, j), LongLabel::Leavitt(k, m)) => {
                if let Some((j2, k2)) = cancel(j, k) {
                    let mut left = i.clone();
                    left.extend_from_slice(&k2);
                    let mut right = j2;
                    right.extend_from_slice(m);
                    self.leavitt_normal(&left, &right, Scalar::one(), &mut out);
                }
            }
            (LongLabel::Quiver, LongLabel::Quiver) => {
                out.add_term(field, LongProduct::Long(LongLabel::Quiver), Scalar::one());
            }
            _ => panic!("labels from different presets"),
        }
        out
    }

    /// Rewrites `x_I x_J^*` into normal form, expanding the forbidden
    /// adjacency `x_L x_L^*` by the completeness relation.
    fn leavitt_normal(&self, i: &[u8], j: &[u8], coeff: Scalar, out: &mut LinComb<LongProduct>) {
        let l = self.loops().expect("leavitt preset");
        let field = self.field;
        if i.last() == Some(&l) && j.first() == Some(&l) {
            let i2 = &i[..i.len() - 1];
            let j2 = &j[1..];
            self.leavitt_normal(i2, j2, coeff.clone(), out);
            for a in 1..l {
                let mut left = i2.to_vec();
                left.push(a);
                let mut right = vec![a];
                right.extend_from_slice(j2);
                out.add_term(field, LongProduct::Long(LongLabel::Leavitt(left, right)), -coeff.clone());
            }
            out.add_term(
                field,
                LongProduct::Pair(TopLabel::Leavitt(i2.to_vec()), BottomLabel::Leavitt(j2.to_vec())),
                -coeff,
            );
        } else {
            out.add_term(field, LongProduct::Long(LongLabel::Leavitt(i.to_vec(), j.to_vec())), coeff);
        }
    }

    /// Product `upper · lower` of a long label with a top label.
    pub fn mul_long_top(&self, upper: &LongLabel, lower: &TopLabel) -> LinComb<TopLabel> {
        match (upper, lower) {
            (LongLabel::Jacobson(m), TopLabel::Jacobson(p)) => {
                let r = *p as i64 + m;
                if r >= 0 {
                    LinComb::unit(TopLabel::Jacobson(r as u32))
                } else {
                    LinComb::zero()
                }
            }
            (LongLabel::Leavitt(i, j), TopLabel::Leavitt(k)) => match cancel(j, k) {
                Some((j2, k2)) if j2.is_empty() => {
                    let mut w = i.clone();
                    w.extend_from_slice(&k2);
                    LinComb::unit(TopLabel::Leavitt(w))
                }
                _ => LinComb::zero(),
            },
            (LongLabel::Quiver, TopLabel::Quiver) => LinComb::unit(TopLabel::Quiver),
            _ => panic!("labels from different presets"),
        }
    }

    /// Product `upper · lower` of a bottom label with a long label.
    pub fn mul_bottom_long(&self, upper: &BottomLabel, lower: &LongLabel) -> LinComb<BottomLabel> {
        match (upper, lower) {
            (BottomLabel::Jacobson(q), LongLabel::Jacobson(m)) => {
                let r = *q as i64 - m;
                if r >= 0 {
                    LinComb::unit(BottomLabel::Jacobson(r as u32))
                } else {
                    LinComb::zero()
                }
            }
            (BottomLabel::Leavitt(w), LongLabel::Leavitt(i, j)) => match cancel(w, i) {
                Some((w2, i2)) if i2.is_empty() => {
                    let mut v = w2;
                    v.extend_from_slice(j);
                    LinComb::unit(BottomLabel::Leavitt(v))
                }
                _ => LinComb::zero(),
            },
            (BottomLabel::Quiver, LongLabel::Quiver) => LinComb::unit(BottomLabel::Quiver),
            _ => panic!("labels from different presets"),
        }
    }

    /// The scalar `upper · lower` of a closed bottom-over-top pair.
    pub fn eval_float(&self, upper: &BottomLabel, lower: &TopLabel) -> Scalar {
        let hit = match (upper, lower) {
            (BottomLabel::Jacobson(q), TopLabel::Jacobson(p)) => p == q,
            (BottomLabel::Leavitt(w), TopLabel::Leavitt(k)) => {
                matches!(cancel(w, k), Some((a, b)) if a.is_empty() && b.is_empty())
            }
            (BottomLabel::Quiver, TopLabel::Quiver) => true,
            _ => panic!("labels from different presets"),
        };
        if hit {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}
