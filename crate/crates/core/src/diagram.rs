//! Basis diagrams, morphisms, and their vertical and horizontal products.
//!
//! Strand positions are 0-based here; the JSON interchange format and the
//! CLI use 1-based positions.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::presentation::{BottomLabel, Label, LongLabel, LongProduct, Preset, Presentation, TopLabel};
use crate::scalar::{LinComb, Scalar};

/// An order-preserving bijection between a subset of `0..n` and a subset
/// of `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    pub n: usize,
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl PartialBijection {
    pub fn new(n: usize, m: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if !(w[0].0 < w[1].0 && w[0].1 < w[1].1) {
                return Err(Error::InvalidDiagram(format!("pairs not order preserving: {pairs:?}")));
            }
        }
        if pairs.iter().any(|&(i, j)| i >= n || j >= m) {
            return Err(Error::InvalidDiagram(format!("pair out of range for {n}->{m}: {pairs:?}")));
        }
        Ok(PartialBijection { n, m, pairs })
    }

    pub fn identity(n: usize) -> Self {
        PartialBijection {
            n,
            m: n,
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }

    /// Number of long strands.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn free_inputs(&self) -> Vec<usize> {
        let mut used = vec![false; self.n];
        for &(i, _) in &self.pairs {
            used[i] = true;
        }
        (0..self.n).filter(|&i| !used[i]).collect()
    }

    pub fn free_outputs(&self) -> Vec<usize> {
        let mut used = vec![false; self.m];
        for &(_, j) in &self.pairs {
            used[j] = true;
        }
        (0..self.m).filter(|&j| !used[j]).collect()
    }
}

/// One normal-form basis element of `Hom(X^n, X^m)`.
///
/// Labels are listed left to right. Their implicit heights, from highest to
/// lowest, are: tops, then longs, then bottoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisDiagram {
    pub pb: PartialBijection,
    pub tops: Vec<TopLabel>,
    pub longs: Vec<LongLabel>,
    pub bottoms: Vec<BottomLabel>,
}

impl BasisDiagram {
    pub fn n(&self) -> usize {
        self.pb.n
    }

    pub fn m(&self) -> usize {
        self.pb.m
    }

    pub fn long_strands(&self) -> usize {
        self.pb.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.tops
            .iter()
            .cloned()
            .map(Label::Top)
            .chain(self.longs.iter().cloned().map(Label::Long))
            .chain(self.bottoms.iter().cloned().map(Label::Bottom))
    }

    pub fn max_weight(&self, pres: &Presentation) -> usize {
        self.labels().map(|l| pres.weight(&l)).max().unwrap_or(0)
    }
}

/// A linear combination of basis diagrams with common arities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub n: usize,
    pub m: usize,
    pub terms: LinComb<BasisDiagram>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    Homogeneous(i64),
    Mixed,
    /// The zero morphism has every degree.
    Zero,
}

impl Morphism {
    pub fn zero(n: usize, m: usize) -> Self {
        Morphism {
            n,
            m,
            terms: LinComb::zero(),
        }
    }

    pub fn from_diagram(d: BasisDiagram) -> Self {
        Morphism {
            n: d.n(),
            m: d.m(),
            terms: LinComb::unit(d),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_long_strands(&self) -> Option<usize> {
        self.terms.keys().map(|d| d.long_strands()).max()
    }
}

/// Upper bound on the number of terms in any single result.
pub fn max_terms() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("ARCDIAG_MAX_TERMS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(1_000_000)
    })
}

fn check_terms(m: &Morphism) -> Result<()> {
    let limit = max_terms();
    if m.len() > limit {
        return Err(Error::TermLimit { count: m.len(), limit });
    }
    Ok(())
}

/// Order in which interface points are resolved during composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FusionOrder {
    #[default]
    LeftToRight,
    RightToLeft,
}

/// Final position of a label once composition is finished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Pending(usize),
    Top(usize),
    Long(usize, usize),
    Bottom(usize),
}

impl Slot {
    fn key(self) -> (u8, usize) {
        match self {
            Slot::Top(j) => (0, j),
            Slot::Long(_, j) => (1, j),
            Slot::Bottom(i) => (2, i),
            Slot::Pending(_) => unreachable!("unresolved interface point"),
        }
    }
}

#[derive(Clone, Debug)]
struct Entry {
    label: Label,
    odd: bool,
    slot: Slot,
}

/// Parity of the permutation sorting `keys` restricted to odd entries.
pub(crate) fn odd_inversions<K: Ord>(items: &[(K, bool)]) -> bool {
    let mut odd = false;
    for a in 0..items.len() {
        if !items[a].1 {
            continue;
        }
        for b in a + 1..items.len() {
            if items[b].1 && items[a].0 > items[b].0 {
                odd = !odd;
            }
        }
    }
    odd
}

impl Presentation {
    fn parity(&self, l: &Label) -> bool {
        self.deg_label(l).rem_euclid(2) == 1
    }

    fn entry(&self, label: Label, slot: Slot) -> Entry {
        let odd = self.parity(&label);
        Entry { label, odd, slot }
    }

    pub fn validate_diagram(&self, d: &BasisDiagram) -> Result<()> {
        let pb = PartialBijection::new(d.pb.n, d.pb.m, d.pb.pairs.clone())?;
        if d.longs.len() != pb.len() || d.tops.len() != pb.m - pb.len() || d.bottoms.len() != pb.n - pb.len() {
            return Err(Error::InvalidDiagram("label counts do not match the partial bijection".into()));
        }
        for l in d.labels() {
            self.validate(&l)?;
        }
        Ok(())
    }

    pub fn identity_diagram(&self, n: usize) -> BasisDiagram {
        BasisDiagram {
            pb: PartialBijection::identity(n),
            tops: Vec::new(),
            longs: vec![self.identity_long(); n],
            bottoms: Vec::new(),
        }
    }

    pub fn identity(&self, n: usize) -> Morphism {
        Morphism::from_diagram(self.identity_diagram(n))
    }

    pub fn top_diagram(&self, t: TopLabel) -> BasisDiagram {
        BasisDiagram {
            pb: PartialBijection { n: 0, m: 1, pairs: vec![] },
            tops: vec![t],
            longs: vec![],
            bottoms: vec![],
        }
    }

    pub fn bottom_diagram(&self, b: BottomLabel) -> BasisDiagram {
        BasisDiagram {
            pb: PartialBijection { n: 1, m: 0, pairs: vec![] },
            tops: vec![],
            longs: vec![],
            bottoms: vec![b],
        }
    }

    pub fn long_diagram(&self, a: LongLabel) -> BasisDiagram {
        BasisDiagram {
            pb: PartialBijection::identity(1),
            tops: vec![],
            longs: vec![a],
            bottoms: vec![],
        }
    }

    /// The generator named `name`. Accepts `z*` and `z^*` spellings, and
    /// `x_2`/`x2` for Leavitt loops.
    pub fn generator(&self, name: &str) -> Result<Morphism> {
        let unknown = || Error::UnknownGenerator {
            name: name.to_string(),
            preset: self.preset.name(),
        };
        let (base, dagger) = match name.strip_suffix("^*").or_else(|| name.strip_suffix('*')) {
            Some(b) => (b, true),
            None => (name, false),
        };
        let d = match self.preset {
            Preset::JacobsonDg { .. } => match (base, dagger) {
                ("x", false) => self.long_diagram(LongLabel::Jacobson(1)),
                ("y", false) => self.long_diagram(LongLabel::Jacobson(-1)),
                ("z", false) => self.top_diagram(TopLabel::Jacobson(0)),
                ("z", true) => self.bottom_diagram(BottomLabel::Jacobson(0)),
                _ => return Err(unknown()),
            },
            Preset::Leavitt { loops } => match (base, dagger) {
                ("z", false) => self.top_diagram(TopLabel::Leavitt(vec![])),
                ("z", true) => self.bottom_diagram(BottomLabel::Leavitt(vec![])),
                _ => {
                    let digits = base.strip_prefix('x').ok_or_else(unknown)?;
                    let digits = digits.strip_prefix('_').unwrap_or(digits);
                    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                        return Err(unknown());
                    }
                    let i: u8 = digits.parse().map_err(|_| unknown())?;
                    if !(1..=loops).contains(&i) {
                        return Err(unknown());
                    }
                    if dagger {
                        self.long_diagram(LongLabel::Leavitt(vec![], vec![i]))
                    } else {
                        self.long_diagram(LongLabel::Leavitt(vec![i], vec![]))
                    }
                }
            },
            Preset::QuiverExample1 => match (base, dagger) {
                ("b", false) => self.top_diagram(TopLabel::Quiver),
                ("c", false) => self.bottom_diagram(BottomLabel::Quiver),
                _ => return Err(unknown()),
            },
        };
        Ok(Morphism::from_diagram(d))
    }

    /// Names of all generators of the preset.
    pub fn generator_names(&self) -> Vec<String> {
        match self.preset {
            Preset::JacobsonDg { .. } => ["x", "y", "z", "z^*"].iter().map(|s| s.to_string()).collect(),
            Preset::Leavitt { loops } => {
                let mut v = vec!["z".to_string(), "z^*".to_string()];
                for i in 1..=loops {
                    v.push(format!("x{i}"));
                    v.push(format!("x{i}^*"));
                }
                v
            }
            Preset::QuiverExample1 => vec!["b".into(), "c".into()],
        }
    }

    // ---- linear structure ----------------------------------------------

    pub fn add(&self, a: &Morphism, b: &Morphism) -> Result<Morphism> {
        if (a.n, a.m) != (b.n, b.m) {
            return Err(Error::ArityMismatch {
                op: "add",
                left: (a.n, a.m),
                right: (b.n, b.m),
            });
        }
        let mut terms = a.terms.clone();
        terms.add_assign(self.field, &b.terms);
        let out = Morphism { n: a.n, m: a.m, terms };
        check_terms(&out)?;
        Ok(out)
    }

    pub fn sub(&self, a: &Morphism, b: &Morphism) -> Result<Morphism> {
        self.add(a, &self.scale(&-Scalar::one(), b))
    }

    pub fn scale(&self, c: &Scalar, a: &Morphism) -> Morphism {
        Morphism {
            n: a.n,
            m: a.m,
            terms: a.terms.scaled(self.field, c),
        }
    }

    /// Reduces every coefficient into the active field.
    pub fn reduce(&self, a: &Morphism) -> Result<Morphism> {
        let mut terms = LinComb::zero();
        for (d, c) in &a.terms {
            terms.add_term(self.field, d.clone(), self.field.reduce(c.clone())?);
        }
        Ok(Morphism { n: a.n, m: a.m, terms })
    }

    pub fn equal(&self, a: &Morphism, b: &Morphism) -> Result<bool> {
        if (a.n, a.m) != (b.n, b.m) {
            return Err(Error::ArityMismatch {
                op: "equal",
                left: (a.n, a.m),
                right: (b.n, b.m),
            });
        }
        Ok(a.terms == b.terms)
    }

    pub fn diagram_degree(&self, d: &BasisDiagram) -> i64 {
        d.labels().map(|l| self.deg_label(&l)).sum()
    }

    pub fn degree_of(&self, a: &Morphism) -> Degree {
        let mut degs = a.terms.keys().map(|d| self.diagram_degree(d));
        match degs.next() {
            None => Degree::Zero,
            Some(first) => {
                if degs.all(|d| d == first) {
                    Degree::Homogeneous(first)
                } else {
                    Degree::Mixed
                }
            }
        }
    }

    // ---- composition ---------------------------------------------------

    pub fn compose(&self, upper: &Morphism, lower: &Morphism) -> Result<Morphism> {
        self.compose_with(upper, lower, FusionOrder::LeftToRight)
    }

    pub fn compose_with(&self, upper: &Morphism, lower: &Morphism, order: FusionOrder) -> Result<Morphism> {
        if lower.m != upper.n {
            return Err(Error::ArityMismatch {
                op: "compose",
                left: (upper.n, upper.m),
                right: (lower.n, lower.m),
            });
        }
        let mut terms = LinComb::zero();
        for (du, cu) in &upper.terms {
            for (dl, cl) in &lower.terms {
                let c = self.field.mul(cu, cl);
                for (d, c2) in self.compose_diagrams(du, dl, order) {
                    terms.add_term(self.field, d, &c * c2);
                }
            }
        }
        let out = Morphism {
            n: lower.n,
            m: upper.m,
            terms,
        };
        check_terms(&out)?;
        Ok(out)
    }

    /// Composite `upper ∘ lower` of two basis diagrams.
    pub fn compose_diagrams(&self, upper: &BasisDiagram, lower: &BasisDiagram, order: FusionOrder) -> LinComb<BasisDiagram> {
        assert_eq!(upper.n(), lower.m(), "compose arity");
        let k = upper.n();
        let field = self.field;
        // What each interface point connects to once fused.
        let mut up_out: Vec<Option<usize>> = vec![None; k];
        let mut low_in: Vec<Option<usize>> = vec![None; k];
        let mut entries = Vec::new();

        let upper_free_out = upper.pb.free_outputs();
        for (t, &j) in upper.tops.iter().zip(&upper_free_out) {
            entries.push(self.entry(Label::Top(t.clone()), Slot::Top(j)));
        }
        for (a, &(p, j)) in upper.longs.iter().zip(&upper.pb.pairs) {
            up_out[p] = Some(j);
            entries.push(self.entry(Label::Long(a.clone()), Slot::Pending(p)));
        }
        for (c, &p) in upper.bottoms.iter().zip(&upper.pb.free_inputs()) {
            entries.push(self.entry(Label::Bottom(c.clone()), Slot::Pending(p)));
        }
        for (t, &p) in lower.tops.iter().zip(&lower.pb.free_outputs()) {
            entries.push(self.entry(Label::Top(t.clone()), Slot::Pending(p)));
        }
        for (a, &(i, p)) in lower.longs.iter().zip(&lower.pb.pairs) {
            low_in[p] = Some(i);
            entries.push(self.entry(Label::Long(a.clone()), Slot::Pending(p)));
        }
        for (c, &i) in lower.bottoms.iter().zip(&lower.pb.free_inputs()) {
            entries.push(self.entry(Label::Bottom(c.clone()), Slot::Bottom(i)));
        }

        let points: Vec<usize> = match order {
            FusionOrder::LeftToRight => (0..k).collect(),
            FusionOrder::RightToLeft => (0..k).rev().collect(),
        };
        let mut states: Vec<(Scalar, Vec<Entry>)> = vec![(Scalar::one(), entries)];
        for p in points {
            let mut next = Vec::new();
            for (coeff, mut es) in states {
                let a = es.iter().position(|e| e.slot == Slot::Pending(p)).expect("upper label");
                let b = a + 1 + es[a + 1..].iter().position(|e| e.slot == Slot::Pending(p)).expect("lower label");
                let crossed = es[a + 1..b].iter().filter(|e| e.odd).count();
                let coeff = if es[a].odd && crossed % 2 == 1 { -coeff } else { coeff };
                let up = es.remove(a);
                let at = b - 1;
                let low = es.remove(at);
                match (up.label, low.label) {
                    (Label::Long(u), Label::Long(l)) => {
                        let (i, j) = (low_in[p].unwrap(), up_out[p].unwrap());
                        for (prod, c) in self.mul_long_long(&u, &l) {
                            let mut es2 = es.clone();
                            match prod {
                                LongProduct::Long(x) => {
                                    es2.insert(at, self.entry(Label::Long(x), Slot::Long(i, j)));
                                }
                                LongProduct::Pair(t, bo) => {
                                    es2.insert(at, self.entry(Label::Bottom(bo), Slot::Bottom(i)));
                                    es2.insert(at, self.entry(Label::Top(t), Slot::Top(j)));
                                }
                            }
                            next.push((&coeff * c, es2));
                        }
                    }
                    (Label::Long(u), Label::Top(t)) => {
                        let j = up_out[p].unwrap();
                        for (t2, c) in self.mul_long_top(&u, &t) {
                            let mut es2 = es.clone();
                            es2.insert(at, self.entry(Label::Top(t2), Slot::Top(j)));
                            next.push((&coeff * c, es2));
                        }
                    }
                    (Label::Bottom(bo), Label::Long(l)) => {
                        let i = low_in[p].unwrap();
                        for (b2, c) in self.mul_bottom_long(&bo, &l) {
                            let mut es2 = es.clone();
                            es2.insert(at, self.entry(Label::Bottom(b2), Slot::Bottom(i)));
                            next.push((&coeff * c, es2));
                        }
                    }
                    (Label::Bottom(bo), Label::Top(t)) => {
                        let c = self.eval_float(&bo, &t);
                        if !c.is_zero() {
                            next.push((&coeff * c, es));
                        }
                    }
                    _ => unreachable!("interface labels are long/bottom above long/top"),
                }
            }
            states = next;
        }

        let mut out = LinComb::zero();
        for (coeff, es) in states {
            let keyed: Vec<((u8, usize), bool)> = es.iter().map(|e| (e.slot.key(), e.odd)).collect();
            let sign = field.sign(odd_inversions(&keyed));
            let mut es = es;
            es.sort_by_key(|e| e.slot.key());
            let mut d = BasisDiagram {
                pb: PartialBijection {
                    n: lower.n(),
                    m: upper.m(),
                    pairs: Vec::new(),
                },
                tops: Vec::new(),
                longs: Vec::new(),
                bottoms: Vec::new(),
            };
            for e in es {
                match (e.label, e.slot) {
                    (Label::Top(t), Slot::Top(_)) => d.tops.push(t),
                    (Label::Long(a), Slot::Long(i, j)) => {
                        d.pb.pairs.push((i, j));
                        d.longs.push(a);
                    }
                    (Label::Bottom(c), Slot::Bottom(_)) => d.bottoms.push(c),
                    _ => unreachable!("slot kind matches label kind"),
                }
            }
            out.add_term(field, d, coeff * sign);
        }
        out
    }

    // ---- tensor --------------------------------------------------------

    pub fn tensor(&self, left: &Morphism, right: &Morphism) -> Result<Morphism> {
        let mut terms = LinComb::zero();
        for (dl, cl) in &left.terms {
            for (dr, cr) in &right.terms {
                let (d, odd) = self.tensor_diagrams(dl, dr);
                terms.add_term(self.field, d, cl * cr * self.field.sign(odd));
            }
        }
        let out = Morphism {
            n: left.n + right.n,
            m: left.m + right.m,
            terms,
        };
        check_terms(&out)?;
        Ok(out)
    }

    /// Places `left` beside `right` with `left`'s labels higher; returns the
    /// canonical diagram and whether the reordering is odd.
    pub fn tensor_diagrams(&self, left: &BasisDiagram, right: &BasisDiagram) -> (BasisDiagram, bool) {
        let mut keyed = Vec::new();
        for (part, shift) in [(left, 0usize), (right, 1usize)] {
            let long_w: u8 = if shift == 0 { 0 } else { 1 };
            for t in &part.tops {
                keyed.push(((0u8, long_w), self.parity(&Label::Top(t.clone()))));
            }
            for a in &part.longs {
                keyed.push(((1u8, long_w), self.parity(&Label::Long(a.clone()))));
            }
            for c in &part.bottoms {
                keyed.push(((2u8, long_w), self.parity(&Label::Bottom(c.clone()))));
            }
        }
        let odd = odd_inversions(&keyed);
        let (n1, m1) = (left.n(), left.m());
        let mut pairs = left.pb.pairs.clone();
        pairs.extend(right.pb.pairs.iter().map(|&(i, j)| (i + n1, j + m1)));
        let d = BasisDiagram {
            pb: PartialBijection {
                n: n1 + right.n(),
                m: m1 + right.m(),
                pairs,
            },
            tops: left.tops.iter().chain(&right.tops).cloned().collect(),
            longs: left.longs.iter().chain(&right.longs).cloned().collect(),
            bottoms: left.bottoms.iter().chain(&right.bottoms).cloned().collect(),
        };
        (d, odd)
    }

    /// Tensor product of several morphisms, left to right.
    pub fn tensor_all(&self, parts: &[Morphism]) -> Result<Morphism> {
        let mut acc = self.identity(0);
        for p in parts {
            acc = self.tensor(&acc, p)?;
        }
        Ok(acc)
    }

    /// Composite of several morphisms, uppermost first.
    pub fn compose_all(&self, parts: &[Morphism]) -> Result<Morphism> {
        let mut iter = parts.iter().rev();
        let mut acc = iter.next().expect("at least one factor").clone();
        for p in iter {
            acc = self.compose(p, &acc)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Field};

    fn jac(field: Field) -> Presentation {
        Presentation::new(Preset::JACOBSON, field)
    }

    #[test]
    fn generator_relations() {
        let p = jac(Field::Rational);
        let x = p.generator("x").unwrap();
        let y = p.generator("y").unwrap();
        let z = p.generator("z").unwrap();
        let zs = p.generator("z*").unwrap();
        assert_eq!(p.compose(&y, &x).unwrap(), p.identity(1));
        assert_eq!(p.compose(&zs, &z).unwrap(), p.identity(0));
        assert!(p.compose(&zs, &x).unwrap().is_zero());
        assert!(p.compose(&y, &z).unwrap().is_zero());
        let xy = p.compose(&x, &y).unwrap();
        let zzs = p.compose(&z, &zs).unwrap();
        assert_eq!(p.add(&xy, &zzs).unwrap(), p.identity(1));
        assert!(p.generator("x_1").is_err());
    }

    #[test]
    fn interchange_sign() {
        for (field, expect_neg) in [(Field::Rational, true), (Field::Gf2, false)] {
            let p = jac(field);
            let x = p.generator("x").unwrap();
            let id = p.identity(1);
            let a = p
                .compose(&p.tensor(&x, &id).unwrap(), &p.tensor(&id, &x).unwrap())
                .unwrap();
            let b = p
                .compose(&p.tensor(&id, &x).unwrap(), &p.tensor(&x, &id).unwrap())
                .unwrap();
            let neg_b = p.scale(&int(-1), &b);
            if expect_neg {
                assert_ne!(a, b);
                assert_eq!(a, neg_b);
            } else {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn fusion_orders_agree_on_crossing_labels() {
        let p = jac(Field::Rational);
        let x = p.generator("x").unwrap();
        let y = p.generator("y").unwrap();
        let id = p.identity(1);
        let u = p.tensor(&x, &x).unwrap();
        let l = p.tensor(&y, &p.compose(&x, &y).unwrap()).unwrap();
        let a = p.compose_with(&u, &l, FusionOrder::LeftToRight).unwrap();
        let b = p.compose_with(&u, &l, FusionOrder::RightToLeft).unwrap();
        assert_eq!(a, b);
        assert_eq!(p.compose(&p.identity(2), &l).unwrap(), l);
        assert_eq!(p.tensor(&p.identity(0), &id).unwrap(), id);
    }

    #[test]
    fn degrees() {
        let p = jac(Field::Gf2);
        let x = p.generator("x").unwrap();
        assert_eq!(p.degree_of(&x), Degree::Homogeneous(1));
        assert_eq!(p.degree_of(&p.identity(3)), Degree::Homogeneous(0));
        let zzs = p.compose(&p.generator("z").unwrap(), &p.generator("z^*").unwrap()).unwrap();
        assert_eq!(p.degree_of(&p.add(&x, &zzs).unwrap()), Degree::Mixed);
        assert_eq!(p.degree_of(&Morphism::zero(1, 1)), Degree::Zero);
    }

    #[test]
    fn leavitt_generators() {
        let p = Presentation::new(Preset::Leavitt { loops: 3 }, Field::Rational);
        let x2s = p.generator("x_2*").unwrap();
        assert_eq!(x2s.terms.keys().next().unwrap().longs, vec![LongLabel::Leavitt(vec![], vec![2])]);
        assert!(p.generator("x4").is_err());
        let zs = p.generator("z^*").unwrap();
        let x1 = p.generator("x1").unwrap();
        assert!(p.compose(&zs, &x1).unwrap().is_zero());
    }
}
