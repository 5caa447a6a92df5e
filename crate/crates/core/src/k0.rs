//! Direct-sum decompositions of tensor powers of `X` and the relations they
//! force on Grothendieck classes.
//!
//! This is symbol arithmetic: an isomorphism verified by diagram composition
//! yields a linear relation between classes, and the relation is solved.
//! Nothing here computes a Grothendieck group.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::diagram::{Degree, Morphism};
use crate::error::{Error, Result};
use crate::presentation::{Preset, Presentation};
use crate::scalar::{format_scalar, int, LinComb, Scalar};

/// One summand of a direct sum: `X^power[shift]`, cut down by an
/// idempotent when present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub power: usize,
    pub shift: i64,
    pub idempotent: Option<Morphism>,
}

impl Slot {
    pub fn plain(power: usize, shift: i64) -> Self {
        Slot {
            power,
            shift,
            idempotent: None,
        }
    }

    pub fn identity(&self, pres: &Presentation) -> Morphism {
        self.idempotent.clone().unwrap_or_else(|| pres.identity(self.power))
    }
}

/// A matrix of morphisms between direct sums. Entry `(r, c)` maps slot `c`
/// of the source to slot `r` of the target and has degree
/// `shift(r) - shift(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismMatrix {
    pub rows: Vec<Slot>,
    pub cols: Vec<Slot>,
    pub entries: Vec<Vec<Morphism>>,
}

impl MorphismMatrix {
    pub fn new(pres: &Presentation, rows: Vec<Slot>, cols: Vec<Slot>, entries: Vec<Vec<Morphism>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::InvalidArgument("matrix shape does not match its slots".into()));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, col) in cols.iter().enumerate() {
                let e = &entries[r][c];
                if e.n != col.power || e.m != row.power {
                    return Err(Error::ArityMismatch {
                        op: "matrix entry",
                        left: (e.n, e.m),
                        right: (col.power, row.power),
                    });
                }
                match pres.degree_of(e) {
                    Degree::Zero => {}
                    Degree::Homogeneous(d) if d == row.shift - col.shift => {}
                    other => {
                        return Err(Error::InvalidArgument(format!(
                            "entry ({r},{c}) has degree {other:?}, expected {}",
                            row.shift - col.shift
                        )))
                    }
                }
            }
        }
        Ok(MorphismMatrix { rows, cols, entries })
    }

    /// `upper ∘ lower`.
    pub fn compose(pres: &Presentation, upper: &Self, lower: &Self) -> Result<Self> {
        if upper.cols != lower.rows {
            return Err(Error::InvalidArgument("matrix slots do not match".into()));
        }
        let mut entries = Vec::with_capacity(upper.rows.len());
        for (r, row) in upper.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(lower.cols.len());
            for (c, col) in lower.cols.iter().enumerate() {
                let mut acc = Morphism::zero(col.power, row.power);
                for l in 0..upper.cols.len() {
                    acc = pres.add(&acc, &pres.compose(&upper.entries[r][l], &lower.entries[l][c])?)?;
                }
                out.push(acc);
            }
            entries.push(out);
        }
        Self::new(pres, upper.rows.clone(), lower.cols.clone(), entries)
    }

    /// Identity of the direct sum: slot identities on the diagonal, zeros
    /// elsewhere.
    pub fn is_identity(&self, pres: &Presentation) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, e)| {
                    if r == c {
                        *e == self.rows[r].identity(pres)
                    } else {
                        e.is_zero()
                    }
                })
            })
    }
}

/// The pair `X^k → ⊕ slots → X^k` for the preset, each entry tensored
/// with `identity(k-1)` on the right. Returns `(column, row)`.
pub fn iso_pair(pres: &Presentation, k: usize) -> Result<(MorphismMatrix, MorphismMatrix)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let rest = pres.identity(k - 1);
    let g = |name: &str| -> Result<Morphism> { pres.tensor(&pres.generator(name)?, &rest) };
    let (slots, down, up): (Vec<Slot>, Vec<Morphism>, Vec<Morphism>) = match pres.preset {
        Preset::JacobsonDg { x_degree } => (
            vec![Slot::plain(k - 1, 0), Slot::plain(k, -x_degree)],
            vec![g("z^*")?, g("y")?],
            vec![g("z")?, g("x")?],
        ),
        Preset::Leavitt { loops } => {
            let mut slots = vec![Slot::plain(k - 1, 0)];
            let mut down = vec![g("z^*")?];
            let mut up = vec![g("z")?];
            for i in 1..=loops {
                slots.push(Slot::plain(k, 0));
                down.push(g(&format!("x{i}^*"))?);
                up.push(g(&format!("x{i}"))?);
            }
            (slots, down, up)
        }
        Preset::QuiverExample1 => {
            let bc = pres.compose(&pres.generator("b")?, &pres.generator("c")?)?;
            let e = pres.tensor(&pres.sub(&pres.identity(1), &bc)?, &rest)?;
            (
                vec![
                    Slot::plain(k - 1, 0),
                    Slot {
                        power: k,
                        shift: 0,
                        idempotent: Some(e.clone()),
                    },
                ],
                vec![g("c")?, e.clone()],
                vec![g("b")?, e],
            )
        }
    };
    let whole = vec![Slot::plain(k, 0)];
    let column = MorphismMatrix::new(pres, slots.clone(), whole.clone(), down.into_iter().map(|m| vec![m]).collect())?;
    let row = MorphismMatrix::new(pres, whole, slots, vec![up])?;
    Ok((column, row))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub k: usize,
    pub slots: usize,
    /// `row ∘ column = 1_{X^k}`.
    pub row_column: bool,
    /// `column ∘ row = 1` on the direct sum.
    pub column_row: bool,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.row_column && self.column_row
    }
}

pub fn verify_iso_pair(pres: &Presentation, k: usize) -> Result<IsoReport> {
    let (column, row) = iso_pair(pres, k)?;
    let rc = MorphismMatrix::compose(pres, &row, &column)?;
    let cr = MorphismMatrix::compose(pres, &column, &row)?;
    Ok(IsoReport {
        k,
        slots: column.rows.len(),
        row_column: rc.is_identity(pres),
        column_row: cr.is_identity(pres),
    })
}

/// An exact class in the Grothendieck ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Elem(pub Scalar);

impl fmt::Display for K0Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(&self.0))
    }
}

impl Serialize for K0Elem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Unit,
    Var(String),
}

/// `lhs = rhs`, both sides integer combinations of symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: LinComb<Symbol>,
    pub rhs: LinComb<Symbol>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &LinComb<Symbol>| {
            if s.is_zero() {
                return "0".to_string();
            }
            let mut out = String::new();
            for (k, (sym, c)) in s.iter().enumerate() {
                let neg = c.is_negative();
                let mag = c.abs();
                if k == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                match sym {
                    Symbol::Unit => out.push_str(&format_scalar(&mag)),
                    Symbol::Var(v) => {
                        if !mag.is_one() {
                            out.push_str(&format_scalar(&mag));
                        }
                        out.push_str(v);
                    }
                }
            }
            out
        };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

/// Reads relations such as `x = -x + 1` or `x = 4x + 1`.
pub fn parse_relation(src: &str) -> Result<Relation> {
    let (l, r) = src
        .split_once('=')
        .ok_or_else(|| Error::InvalidArgument(format!("relation `{src}` has no `=`")))?;
    Ok(Relation {
        lhs: parse_side(l)?,
        rhs: parse_side(r)?,
    })
}

fn parse_side(src: &str) -> Result<LinComb<Symbol>> {
    let bad = || Error::InvalidArgument(format!("cannot read `{}` as a sum of symbols", src.trim()));
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut out = LinComb::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body[1.min(body.len())..].find(['+', '-']).map(|p| p + 1).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let split = term.find(|c: char| !c.is_ascii_digit() && c != '/').unwrap_or(term.len());
        let (num, var) = term.split_at(split);
        let mut c = if num.is_empty() {
            Scalar::one()
        } else {
            crate::scalar::parse_scalar(num).map_err(|_| bad())?
        };
        if neg {
            c = -c;
        }
        let sym = if var.is_empty() {
            if num.is_empty() {
                return Err(bad());
            }
            Symbol::Unit
        } else if var.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_' || ch == '[' || ch == ']') {
            Symbol::Var(var.to_string())
        } else {
            return Err(bad());
        };
        out.add_term(crate::scalar::Field::Rational, sym, c);
    }
    Ok(out)
}

/// Solves a relation that is linear in `unknown` and mentions no other
/// symbol.
pub fn ledger_reduce(rel: &Relation, unknown: &str) -> Result<K0Elem> {
    let mut a = Scalar::zero();
    let mut b = Scalar::zero();
    for (side, sign) in [(&rel.lhs, 1), (&rel.rhs, -1)] {
        for (sym, c) in side {
            let c = c * int(sign);
            match sym {
                Symbol::Unit => b += c,
                Symbol::Var(v) if v == unknown => a += c,
                Symbol::Var(v) => return Err(Error::Undetermined(format!("relation also involves `{v}`"))),
            }
        }
    }
    // a·x + b = 0
    if a.is_zero() {
        return if b.is_zero() {
            Err(Error::Undetermined(format!("`{rel}` holds for every value of {unknown}")))
        } else {
            Err(Error::Collapse)
        };
    }
    Ok(K0Elem(-b / a))
}

/// The relation `[X] = Σ ±[slot]` read off the verified `k = 1`
/// decomposition, with `[M[s]] = (-1)^s [M]`. Cut-down slots become their
/// own symbols.
pub fn ledger_relation(pres: &Presentation) -> Result<Relation> {
    let (column, _) = iso_pair(pres, 1)?;
    let mut rhs = LinComb::zero();
    for (n, s) in column.rows.iter().enumerate() {
        let sign = if s.shift.rem_euclid(2) == 0 { 1 } else { -1 };
        let sym = match (s.power, &s.idempotent) {
            (_, Some(_)) => Symbol::Var(format!("[X_{n}]")),
            (0, None) => Symbol::Unit,
            (1, None) => Symbol::Var("[X]".into()),
            (p, None) => return Err(Error::InvalidArgument(format!("unexpected slot power {p}"))),
        };
        rhs.add_term(crate::scalar::Field::Rational, sym, int(sign));
    }
    Ok(Relation {
        lhs: LinComb::unit(Symbol::Var("[X]".into())),
        rhs,
    })
}

/// Denominator the ledger values of the preset may carry.
pub fn denominator_base(preset: Preset) -> Option<u64> {
    match preset {
        Preset::JacobsonDg { .. } => Some(2),
        Preset::Leavitt { loops } => Some(loops as u64 - 1),
        Preset::QuiverExample1 => None,
    }
}

fn is_power_of(mut d: num_bigint::BigInt, base: u64) -> bool {
    let base = num_bigint::BigInt::from(base);
    if base == num_bigint::BigInt::one() {
        return d.is_one();
    }
    while !d.is_one() {
        if (&d % &base).is_zero() {
            d /= &base;
        } else {
            return false;
        }
    }
    true
}

/// `[X]^k`, with `[X]` solved from the verified decomposition.
pub fn k0_class_of_power(pres: &Presentation, k: u32) -> Result<K0Elem> {
    if k == 0 {
        return Ok(K0Elem(Scalar::one()));
    }
    if let Preset::JacobsonDg { x_degree } = pres.preset {
        if x_degree.abs() != 1 {
            return Err(Error::Undetermined(format!(
                "no class is claimed for deg x = {x_degree}; the relation is {}",
                ledger_relation(pres)?
            )));
        }
    }
    let x = ledger_reduce(&ledger_relation(pres)?, "[X]")?;
    let v = num_traits::pow(x.0, k as usize);
    if let Some(base) = denominator_base(pres.preset) {
        if !is_power_of(v.denom().clone(), base) {
            return Err(Error::InvalidArgument(format!("class {v} has a denominator outside base {base}")));
        }
    }
    Ok(K0Elem(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::new(p.into(), d.into())
    }

    #[test]
    fn isomorphisms() {
        for preset in [Preset::JACOBSON, Preset::Leavitt { loops: 3 }, Preset::QuiverExample1] {
            for field in [Field::Gf2, Field::Rational] {
                let p = Presentation::new(preset, field);
                for k in 1..=2 {
                    assert!(verify_iso_pair(&p, k).unwrap().holds(), "{preset} {k}");
                }
            }
        }
    }

    #[test]
    fn ledger() {
        let j = Presentation::new(Preset::JACOBSON, Field::Gf2);
        assert_eq!(k0_class_of_power(&j, 3).unwrap().0, q(1, 8));
        assert_eq!(ledger_relation(&j).unwrap().to_string(), "[X] = 1 - [X]");
        let l = Presentation::new(Preset::Leavitt { loops: 3 }, Field::Rational);
        assert_eq!(k0_class_of_power(&l, 1).unwrap().0, q(-1, 2));
        let quiver = Presentation::new(Preset::QuiverExample1, Field::Rational);
        assert!(matches!(k0_class_of_power(&quiver, 1), Err(Error::Undetermined(_))));
        assert_eq!(k0_class_of_power(&quiver, 0).unwrap().0, Scalar::one());

        assert_eq!(ledger_reduce(&parse_relation("x = -x + 1").unwrap(), "x").unwrap().0, q(1, 2));
        assert_eq!(ledger_reduce(&parse_relation("x = 4x + 1").unwrap(), "x").unwrap().0, q(-1, 3));
        assert!(matches!(ledger_reduce(&parse_relation("x = x + 1").unwrap(), "x"), Err(Error::Collapse)));
    }
}
