//! Generator expressions: evaluation to normal form, factorization of basis
//! diagrams into generators, and canonical printing.

use std::fmt;

use num_traits::{One, Signed};

use crate::diagram::{odd_inversions, BasisDiagram, Morphism};
use crate::error::{Error, Result};
use crate::presentation::{BottomLabel, Label, LongLabel, Presentation, TopLabel};
use crate::scalar::{format_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenExpr {
    Gen(String),
    Id(usize),
    Tensor(Box<GenExpr>, Box<GenExpr>),
    /// `Compose(upper, lower)`, i.e. `upper ∘ lower`.
    Compose(Box<GenExpr>, Box<GenExpr>),
    Scale(Scalar, Box<GenExpr>),
    Add(Box<GenExpr>, Box<GenExpr>),
    /// The zero morphism, whose arity is taken from context.
    Zero,
}

impl GenExpr {
    pub fn gen(name: &str) -> Self {
        GenExpr::Gen(name.to_string())
    }

    pub fn tensor(a: GenExpr, b: GenExpr) -> Self {
        GenExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn compose(a: GenExpr, b: GenExpr) -> Self {
        GenExpr::Compose(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Scalar, a: GenExpr) -> Self {
        GenExpr::Scale(c, Box::new(a))
    }

    pub fn sum(a: GenExpr, b: GenExpr) -> Self {
        GenExpr::Add(Box::new(a), Box::new(b))
    }

    /// Left-nested composite of `parts`, uppermost first.
    pub fn compose_chain(parts: Vec<GenExpr>) -> Self {
        let mut it = parts.into_iter();
        let first = it.next().expect("non-empty chain");
        it.fold(first, GenExpr::compose)
    }

    /// Left-nested tensor product; the empty product is `id(0)`.
    pub fn tensor_chain(parts: Vec<GenExpr>) -> Self {
        let mut it = parts.into_iter();
        match it.next() {
            None => GenExpr::Id(0),
            Some(first) => it.fold(first, GenExpr::tensor),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            GenExpr::Add(..) => 0,
            GenExpr::Tensor(..) => 1,
            GenExpr::Compose(..) => 2,
            GenExpr::Scale(..) => 3,
            GenExpr::Gen(_) | GenExpr::Id(_) | GenExpr::Zero => 4,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            GenExpr::Gen(g) => write!(f, "{g}"),
            GenExpr::Id(k) => write!(f, "id({k})"),
            GenExpr::Zero => write!(f, "0"),
            GenExpr::Add(a, b) => {
                a.fmt_at(f, 0)?;
                write!(f, " + ")?;
                b.fmt_at(f, 1)
            }
            GenExpr::Tensor(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " * ")?;
                b.fmt_at(f, 2)
            }
            GenExpr::Compose(a, b) => {
                a.fmt_at(f, 2)?;
                write!(f, ".")?;
                b.fmt_at(f, 3)
            }
            GenExpr::Scale(c, a) => {
                if c.is_negative() {
                    write!(f, "(-{} ", format_scalar(&-c))?;
                    a.fmt_at(f, 4)?;
                    return write!(f, ")");
                }
                write!(f, "{} ", format_scalar(c))?;
                a.fmt_at(f, 4)
            }
        }
    }
}

impl fmt::Display for GenExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

enum Value {
    Zero,
    M(Morphism),
}

fn eval_value(pres: &Presentation, e: &GenExpr) -> Result<Value> {
    Ok(match e {
        GenExpr::Gen(name) => Value::M(pres.generator(name)?),
        GenExpr::Id(k) => Value::M(pres.identity(*k)),
        GenExpr::Zero => Value::Zero,
        GenExpr::Scale(c, a) => {
            let c = pres.field.reduce(c.clone())?;
            match eval_value(pres, a)? {
                Value::Zero => Value::Zero,
                Value::M(m) => Value::M(pres.scale(&c, &m)),
            }
        }
        GenExpr::Add(a, b) => match (eval_value(pres, a)?, eval_value(pres, b)?) {
            (Value::Zero, v) | (v, Value::Zero) => v,
            (Value::M(x), Value::M(y)) => Value::M(pres.add(&x, &y)?),
        },
        GenExpr::Tensor(a, b) => match (eval_value(pres, a)?, eval_value(pres, b)?) {
            (Value::M(x), Value::M(y)) => Value::M(pres.tensor(&x, &y)?),
            _ => Value::Zero,
        },
        GenExpr::Compose(a, b) => match (eval_value(pres, a)?, eval_value(pres, b)?) {
            (Value::M(x), Value::M(y)) => Value::M(pres.compose(&x, &y)?),
            _ => Value::Zero,
        },
    })
}

/// Evaluates an expression to its normal form.
pub fn eval(pres: &Presentation, e: &GenExpr) -> Result<Morphism> {
    match eval_value(pres, e)? {
        Value::M(m) => Ok(m),
        Value::Zero => Err(Error::UnknownArity),
    }
}

/// Like [`eval`], with the arities the result must have.
pub fn eval_with_arity(pres: &Presentation, e: &GenExpr, n: usize, m: usize) -> Result<Morphism> {
    match eval_value(pres, e)? {
        Value::Zero => Ok(Morphism::zero(n, m)),
        Value::M(x) if (x.n, x.m) == (n, m) => Ok(x),
        Value::M(x) => Err(Error::ArityMismatch {
            op: "eval",
            left: (n, m),
            right: (x.n, x.m),
        }),
    }
}

fn power(name: &str, k: usize) -> Vec<GenExpr> {
    (0..k).map(|_| GenExpr::gen(name)).collect()
}

fn letter(i: u8, dagger: bool) -> GenExpr {
    if dagger {
        GenExpr::Gen(format!("x{i}^*"))
    } else {
        GenExpr::Gen(format!("x{i}"))
    }
}

/// A generator expression for a single label, as a morphism of arity
/// `0->1` (top), `1->0` (bottom) or `1->1` (long).
pub fn label_expr(l: &Label) -> GenExpr {
    let parts = match l {
        Label::Top(TopLabel::Jacobson(p)) => {
            let mut v = power("x", *p as usize);
            v.push(GenExpr::gen("z"));
            v
        }
        Label::Bottom(BottomLabel::Jacobson(q)) => {
            let mut v = vec![GenExpr::gen("z^*")];
            v.extend(power("y", *q as usize));
            v
        }
        Label::Long(LongLabel::Jacobson(m)) => match m.signum() {
            0 => return GenExpr::Id(1),
            1 => power("x", *m as usize),
            _ => power("y", m.unsigned_abs() as usize),
        },
        Label::Top(TopLabel::Leavitt(w)) => {
            let mut v: Vec<_> = w.iter().map(|&i| letter(i, false)).collect();
            v.push(GenExpr::gen("z"));
            v
        }
        Label::Bottom(BottomLabel::Leavitt(w)) => {
            let mut v = vec![GenExpr::gen("z^*")];
            v.extend(w.iter().map(|&i| letter(i, true)));
            v
        }
        Label::Long(LongLabel::Leavitt(i, j)) => {
            if i.is_empty() && j.is_empty() {
                return GenExpr::Id(1);
            }
            i.iter().map(|&a| letter(a, false)).chain(j.iter().map(|&a| letter(a, true))).collect()
        }
        Label::Top(TopLabel::Quiver) => vec![GenExpr::gen("b")],
        Label::Bottom(BottomLabel::Quiver) => vec![GenExpr::gen("c")],
        Label::Long(LongLabel::Quiver) => return GenExpr::Id(1),
    };
    GenExpr::compose_chain(parts)
}

fn layer(before: usize, piece: GenExpr, after: usize) -> GenExpr {
    let mut parts = Vec::new();
    if before > 0 {
        parts.push(GenExpr::Id(before));
    }
    parts.push(piece);
    if after > 0 {
        parts.push(GenExpr::Id(after));
    }
    GenExpr::tensor_chain(parts)
}

/// Writes a basis diagram as a composite of layers, one label per layer,
/// stacked in the diagram's canonical height order. Evaluates to the
/// diagram with coefficient `+1`.
pub fn factorize(d: &BasisDiagram) -> GenExpr {
    let n = d.n();
    let l = d.long_strands();
    // Layers from the bottom up.
    let mut layers = Vec::new();
    let mut width = n;
    for (c, &i) in d.bottoms.iter().zip(&d.pb.free_inputs()).rev() {
        layers.push(layer(i, label_expr(&Label::Bottom(c.clone())), width - i - 1));
        width -= 1;
    }
    for (t, a) in d.longs.iter().enumerate().rev() {
        if matches!(label_expr(&Label::Long(a.clone())), GenExpr::Id(1)) {
            continue;
        }
        layers.push(layer(t, label_expr(&Label::Long(a.clone())), l - t - 1));
    }
    for (t, &j) in d.tops.iter().zip(&d.pb.free_outputs()).rev() {
        let pos = d.pb.pairs.iter().filter(|&&(_, jj)| jj < j).count();
        layers.push(layer(pos, label_expr(&Label::Top(t.clone())), width - pos));
        width += 1;
    }
    if layers.is_empty() {
        return GenExpr::Id(n);
    }
    layers.reverse();
    GenExpr::compose_chain(layers)
}

fn piece_text(l: &Label) -> String {
    let pow = |g: &str, k: usize| if k == 1 { g.to_string() } else { format!("{g}^{k}") };
    match l {
        Label::Top(TopLabel::Jacobson(0)) => "z".into(),
        Label::Top(TopLabel::Jacobson(p)) => format!("{}.z", pow("x", *p as usize)),
        Label::Bottom(BottomLabel::Jacobson(0)) => "z^*".into(),
        Label::Bottom(BottomLabel::Jacobson(q)) => format!("z^*.{}", pow("y", *q as usize)),
        Label::Long(LongLabel::Jacobson(0)) => "1_X".into(),
        Label::Long(LongLabel::Jacobson(m)) if *m > 0 => pow("x", *m as usize),
        Label::Long(LongLabel::Jacobson(m)) => pow("y", m.unsigned_abs() as usize),
        Label::Top(TopLabel::Leavitt(w)) => {
            let mut s: Vec<String> = w.iter().map(|i| format!("x{i}")).collect();
            s.push("z".into());
            s.join(".")
        }
        Label::Bottom(BottomLabel::Leavitt(w)) => {
            let mut s = vec!["z^*".to_string()];
            s.extend(w.iter().map(|i| format!("x{i}^*")));
            s.join(".")
        }
        Label::Long(LongLabel::Leavitt(i, j)) => {
            if i.is_empty() && j.is_empty() {
                return "1_X".into();
            }
            let s: Vec<String> = i
                .iter()
                .map(|a| format!("x{a}"))
                .chain(j.iter().map(|a| format!("x{a}^*")))
                .collect();
            s.join(".")
        }
        Label::Top(TopLabel::Quiver) => "b".into(),
        Label::Bottom(BottomLabel::Quiver) => "c".into(),
        Label::Long(LongLabel::Quiver) => "1_X".into(),
    }
}

/// The diagram as a left-to-right tensor product of single-label pieces,
/// together with the parity of the reordering from piece order to the
/// canonical height order.
fn diagram_text(pres: &Presentation, d: &BasisDiagram) -> (String, usize, bool) {
    let free_in = d.pb.free_inputs();
    let free_out = d.pb.free_outputs();
    let mut pieces: Vec<(Label, (u8, usize))> = Vec::new();
    let (mut bi, mut ti) = (0, 0);
    let flush = |pieces: &mut Vec<(Label, (u8, usize))>, bi: &mut usize, ti: &mut usize, lim_in: usize, lim_out: usize| {
        while *bi < free_in.len() && free_in[*bi] < lim_in {
            pieces.push((Label::Bottom(d.bottoms[*bi].clone()), (2, free_in[*bi])));
            *bi += 1;
        }
        while *ti < free_out.len() && free_out[*ti] < lim_out {
            pieces.push((Label::Top(d.tops[*ti].clone()), (0, free_out[*ti])));
            *ti += 1;
        }
    };
    for (a, &(i, j)) in d.longs.iter().zip(&d.pb.pairs) {
        flush(&mut pieces, &mut bi, &mut ti, i, j);
        pieces.push((Label::Long(a.clone()), (1, j)));
    }
    flush(&mut pieces, &mut bi, &mut ti, usize::MAX, usize::MAX);
    let keyed: Vec<((u8, usize), bool)> = pieces
        .iter()
        .map(|(l, k)| (*k, pres.deg_label(l).rem_euclid(2) == 1))
        .collect();
    let odd = odd_inversions(&keyed);
    if pieces.is_empty() {
        return ("1_1".into(), 1, odd);
    }
    let text: Vec<String> = pieces.iter().map(|(l, _)| piece_text(l)).collect();
    (text.join(" * "), pieces.len(), odd)
}

/// Canonical text of a morphism; parsing and evaluating it gives back the
/// same morphism.
pub fn print(pres: &Presentation, m: &Morphism) -> String {
    if m.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (d, c)) in m.terms.iter().enumerate() {
        let (body, pieces, odd) = diagram_text(pres, d);
        let c = c * pres.field.sign(odd);
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format_scalar(&mag));
            out.push(' ');
            if pieces > 1 {
                out.push('(');
                out.push_str(&body);
                out.push(')');
            } else {
                out.push_str(&body);
            }
        }
    }
    out
}
