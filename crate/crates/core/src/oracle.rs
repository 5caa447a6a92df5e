//! Truncated linear representations of the presets.
//!
//! Each preset acts on a concrete graded vector space `V` truncated at
//! size `N`; `X^k` acts on `V^{⊗k}`. Operators are kept as expression trees
//! over the generator actions and evaluated on demand, so nothing here goes
//! through diagram composition: a morphism enters only through
//! [`factorize`], and its operator is assembled by this module's own
//! composition and Koszul tensor product.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::diagram::Morphism;
use crate::error::{Error, Result};
use crate::expr::{factorize, GenExpr};
use crate::presentation::Preset;
use crate::scalar::{Field, Scalar};

pub type Coeff = Rational64;

/// Basis of one tensor factor, truncated at `trunc`.
///
/// * jacobson-dg: `v_0..v_N`, `deg v_i = i·deg x`;
/// * leavitt:L: words of length at most `N`, indexed by length and then
///   lexicographically;
/// * quiver-example1: `v_0` (image of `b`) and `v_1` (kernel of `c`).
#[derive(Clone, Debug)]
pub struct TruncSpace {
    pub preset: Preset,
    pub trunc: usize,
    offsets: Vec<u64>,
    powers: Vec<u64>,
}

/// Local state of one factor during evaluation; `None` is the unit object.
pub type Local = Option<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalGen {
    X,
    Y,
    Z,
    ZStar,
    Loop(u8),
    LoopStar(u8),
    B,
    C,
}

impl LocalGen {
    pub fn arity(self) -> (usize, usize) {
        match self {
            LocalGen::Z | LocalGen::B => (0, 1),
            LocalGen::ZStar | LocalGen::C => (1, 0),
            _ => (1, 1),
        }
    }
}

impl TruncSpace {
    pub fn new(preset: Preset, trunc: usize) -> Self {
        let letters: u64 = match preset {
            Preset::Leavitt { loops } => loops as u64,
            _ => 0,
        };
        let (mut offsets, mut powers) = (vec![0u64], vec![1u64]);
        if letters > 0 {
            for k in 0..=trunc {
                let p = powers[k];
                offsets.push(offsets[k].checked_add(p).expect("truncation too large"));
                powers.push(p.checked_mul(letters).expect("truncation too large"));
            }
        }
        TruncSpace {
            preset,
            trunc,
            offsets,
            powers,
        }
    }

    pub fn dim(&self) -> u64 {
        match self.preset {
            Preset::JacobsonDg { .. } => self.trunc as u64 + 1,
            Preset::Leavitt { .. } => self.offsets[self.trunc + 1],
            Preset::QuiverExample1 => 2,
        }
    }

    /// Index (jacobson-dg), word length (leavitt) or 0 (quiver).
    pub fn size(&self, v: u64) -> usize {
        match self.preset {
            Preset::JacobsonDg { .. } => v as usize,
            Preset::Leavitt { .. } => self.offsets.partition_point(|&o| o <= v) - 1,
            Preset::QuiverExample1 => 0,
        }
    }

    pub fn degree(&self, v: u64) -> i64 {
        match self.preset {
            Preset::JacobsonDg { x_degree } => v as i64 * x_degree,
            _ => 0,
        }
    }

    /// Number of basis vectors of size at most `s`.
    pub fn count_up_to(&self, s: usize) -> u64 {
        match self.preset {
            Preset::JacobsonDg { .. } => (s.min(self.trunc) + 1) as u64,
            Preset::Leavitt { .. } => self.offsets[s.min(self.trunc) + 1],
            Preset::QuiverExample1 => 2,
        }
    }

    /// Inputs on which an operator of weight at most `w` is computed
    /// exactly: every factor has size at most `N - w`.
    pub fn window(&self, w: usize) -> std::ops::Range<u64> {
        0..self.count_up_to(self.trunc.saturating_sub(w))
    }

    pub fn encode_word(&self, w: &[u8]) -> Option<u64> {
        let mut v = 0;
        for &a in w.iter().rev() {
            v = self.prepend(a, v)?;
        }
        Some(v)
    }

    pub fn word(&self, v: u64) -> Vec<u8> {
        let mut out = Vec::new();
        let mut v = v;
        while self.size(v) > 0 {
            let k = self.size(v);
            let val = v - self.offsets[k];
            let first = val / self.powers[k - 1];
            out.push(first as u8 + 1);
            v = self.offsets[k - 1] + val % self.powers[k - 1];
        }
        out
    }

    fn prepend(&self, a: u8, v: u64) -> Option<u64> {
        let k = self.size(v);
        if k + 1 > self.trunc {
            return None;
        }
        let val = v - self.offsets[k];
        Some(self.offsets[k + 1] + (a as u64 - 1) * self.powers[k] + val)
    }

    fn strip(&self, a: u8, v: u64) -> Option<u64> {
        let k = self.size(v);
        if k == 0 {
            return None;
        }
        let val = v - self.offsets[k];
        let p = self.powers[k - 1];
        if val / p + 1 != a as u64 {
            return None;
        }
        Some(self.offsets[k - 1] + val % p)
    }

    /// Action of one generator; `None` means the result is zero.
    pub fn apply_gen(&self, g: LocalGen, input: Local) -> Option<Local> {
        let n = self.trunc as u64;
        match (g, input) {
            (LocalGen::X, Some(i)) => (i < n).then_some(Some(i + 1)),
            (LocalGen::Y, Some(i)) => (i > 0).then(|| Some(i - 1)),
            (LocalGen::Z, None) => Some(Some(0)),
            (LocalGen::ZStar, Some(v)) => (v == 0).then_some(None),
            (LocalGen::Loop(a), Some(v)) => self.prepend(a, v).map(Some),
            (LocalGen::LoopStar(a), Some(v)) => self.strip(a, v).map(Some),
            (LocalGen::B, None) => Some(Some(0)),
            (LocalGen::C, Some(v)) => (v == 0).then_some(None),
            _ => panic!("generator {g:?} applied to wrong arity"),
        }
    }

    pub fn run(&self, seq: &[LocalGen], input: Local) -> Option<Local> {
        let mut s = input;
        for &g in seq {
            s = self.apply_gen(g, s)?;
        }
        Some(s)
    }

    /// Blocks of the safe window for weight `w`, as `(block, lo, hi)` with
    /// values relative to the block start.
    pub fn window_blocks(&self, w: usize) -> Vec<(Option<usize>, u64, u64)> {
        let top = self.trunc.saturating_sub(w);
        match self.preset {
            Preset::JacobsonDg { .. } => vec![(Some(0), 0, top as u64 + 1)],
            Preset::Leavitt { .. } => (0..=top).map(|k| (Some(k), 0, self.powers[k])).collect(),
            Preset::QuiverExample1 => vec![(Some(0), 0, 2)],
        }
    }

    pub fn block_offset(&self, block: usize) -> u64 {
        match self.preset {
            Preset::Leavitt { .. } => self.offsets[block],
            _ => 0,
        }
    }

    /// Image of a run under one generator. The run's domain shrinks to the
    /// inputs that survive.
    fn step_interval(&self, g: LocalGen, r: Run) -> Option<Run> {
        let (a, b) = (r.lo as i64 + r.delta, r.hi as i64 + r.delta);
        let restrict = |lo: i64, hi: i64, class: Option<usize>, shift: i64| {
            let (a2, b2) = (a.max(lo), b.min(hi));
            (a2 < b2).then(|| Run {
                lo: (a2 - r.delta) as u64,
                hi: (b2 - r.delta) as u64,
                class,
                delta: r.delta + shift,
            })
        };
        let n = self.trunc as i64;
        match (g, r.class) {
            (LocalGen::X, Some(0)) => restrict(0, n, Some(0), 1),
            (LocalGen::Y, Some(0)) => restrict(1, i64::MAX, Some(0), -1),
            (LocalGen::Z | LocalGen::B, None) => restrict(0, 1, Some(0), 0),
            (LocalGen::ZStar | LocalGen::C, Some(0)) => restrict(0, 1, None, 0),
            (LocalGen::ZStar | LocalGen::C, Some(_)) => None,
            (LocalGen::Loop(i), Some(k)) => {
                if k + 1 > self.trunc {
                    return None;
                }
                restrict(0, i64::MAX, Some(k + 1), (i as i64 - 1) * self.powers[k] as i64)
            }
            (LocalGen::LoopStar(i), Some(k)) => {
                if k == 0 {
                    return None;
                }
                let p = self.powers[k - 1] as i64;
                let base = (i as i64 - 1) * p;
                restrict(base, base + p, Some(k - 1), -base)
            }
            _ => panic!("generator {g:?} applied to wrong arity"),
        }
    }

    fn run_interval(&self, seq: &[LocalGen], start: Run) -> Option<Run> {
        let mut r = start;
        for &g in seq {
            r = self.step_interval(g, r)?;
        }
        Some(r)
    }

    /// Generator action for `name` in the space's preset.
    pub fn local_generator(&self, name: &str) -> Result<LocalGen> {
        let unknown = || Error::UnknownGenerator {
            name: name.to_string(),
            preset: self.preset.name(),
        };
        let (base, dagger) = match name.strip_suffix("^*").or_else(|| name.strip_suffix('*')) {
            Some(b) => (b, true),
            None => (name, false),
        };
        Ok(match (self.preset, base, dagger) {
            (Preset::JacobsonDg { .. }, "x", false) => LocalGen::X,
            (Preset::JacobsonDg { .. }, "y", false) => LocalGen::Y,
            (Preset::JacobsonDg { .. }, "z", false) | (Preset::Leavitt { .. }, "z", false) => LocalGen::Z,
            (Preset::JacobsonDg { .. }, "z", true) | (Preset::Leavitt { .. }, "z", true) => LocalGen::ZStar,
            (Preset::QuiverExample1, "b", false) => LocalGen::B,
            (Preset::QuiverExample1, "c", false) => LocalGen::C,
            (Preset::Leavitt { loops }, b, _) => {
                let digits = b.strip_prefix('x').ok_or_else(unknown)?;
                let digits = digits.strip_prefix('_').unwrap_or(digits);
                if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(unknown());
                }
                let i: u8 = digits.parse().map_err(|_| unknown())?;
                if !(1..=loops).contains(&i) {
                    return Err(unknown());
                }
                if dagger {
                    LocalGen::LoopStar(i)
                } else {
                    LocalGen::Loop(i)
                }
            }
            _ => return Err(unknown()),
        })
    }
}

/// A linear map `V^{⊗n} -> V^{⊗m}` given as an expression over generator
/// actions.
#[derive(Clone, Debug)]
pub enum OracleOperator {
    Gen(LocalGen),
    Identity(usize),
    /// `Compose(upper, lower)`: apply `lower`, then `upper`.
    Compose(Box<OracleOperator>, Box<OracleOperator>),
    /// Koszul tensor product `(F⊗G)(u⊗w) = (-1)^{|G||u|} F(u)⊗G(w)`.
    Tensor(Box<OracleOperator>, Box<OracleOperator>),
    Sum {
        n: usize,
        m: usize,
        terms: Vec<(Coeff, OracleOperator)>,
    },
}

/// A single-factor operator as a sum of generator words, each listed in
/// application order.
pub type Program = Vec<(Coeff, Vec<LocalGen>)>;

impl OracleOperator {
    pub fn arity(&self) -> (usize, usize) {
        match self {
            OracleOperator::Gen(g) => g.arity(),
            OracleOperator::Identity(k) => (*k, *k),
            OracleOperator::Compose(u, l) => (l.arity().0, u.arity().1),
            OracleOperator::Tensor(f, g) => {
                let (a, b) = (f.arity(), g.arity());
                (a.0 + b.0, a.1 + b.1)
            }
            OracleOperator::Sum { n, m, .. } => (*n, *m),
        }
    }

    pub fn compose(upper: OracleOperator, lower: OracleOperator) -> Result<Self> {
        if upper.arity().0 != lower.arity().1 {
            return Err(Error::ArityMismatch {
                op: "oracle compose",
                left: upper.arity(),
                right: lower.arity(),
            });
        }
        Ok(OracleOperator::Compose(Box::new(upper), Box::new(lower)))
    }

    pub fn tensor(f: OracleOperator, g: OracleOperator) -> Self {
        OracleOperator::Tensor(Box::new(f), Box::new(g))
    }

    /// Flattens an operator with at most one input and one output factor.
    pub fn program(&self, space: &TruncSpace) -> Option<Program> {
        let (n, m) = self.arity();
        if n > 1 || m > 1 {
            return None;
        }
        Some(match self {
            OracleOperator::Gen(g) => vec![(Coeff::one(), vec![*g])],
            OracleOperator::Identity(_) => vec![(Coeff::one(), vec![])],
            OracleOperator::Compose(u, l) => {
                let (pu, pl) = (u.program(space)?, l.program(space)?);
                let mut out = Vec::new();
                for (cl, sl) in &pl {
                    for (cu, su) in &pu {
                        let mut s = sl.clone();
                        s.extend_from_slice(su);
                        out.push((cl * cu, s));
                    }
                }
                out
            }
            OracleOperator::Tensor(f, g) => {
                let (scalar, other) = if f.arity() == (0, 0) {
                    (f, g)
                } else if g.arity() == (0, 0) {
                    (g, f)
                } else {
                    return None;
                };
                let mut s = Coeff::zero();
                for (c, seq) in scalar.program(space)? {
                    if space.run(&seq, None) == Some(None) {
                        s += c;
                    }
                }
                other.program(space)?.into_iter().map(|(c, q)| (c * s, q)).collect()
            }
            OracleOperator::Sum { terms, .. } => {
                let mut out = Vec::new();
                for (c, t) in terms {
                    out.extend(t.program(space)?.into_iter().map(|(c2, q)| (c * c2, q)));
                }
                out
            }
        })
    }
}

pub type Tensor = Vec<u64>;

/// Inputs `lo..hi` of one block, each sent to `v + delta` in block
/// `class` (`None` is the unit object).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Run {
    lo: u64,
    hi: u64,
    class: Option<usize>,
    delta: i64,
}

fn merge<K: Ord>(mut v: Vec<(K, Coeff)>) -> Vec<(K, Coeff)> {
    v.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(K, Coeff)> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Outcome of a window comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowReport {
    pub equal: bool,
    pub inputs: u64,
    /// First input (in enumeration order) on which the operators differ.
    pub witness: Option<Tensor>,
}

/// Evaluation context: a truncated space and a coefficient field.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub space: TruncSpace,
    pub field: Field,
}

pub fn to_coeff(c: &Scalar) -> Result<Coeff> {
    match (c.numer().to_i64(), c.denom().to_i64()) {
        (Some(a), Some(b)) => Ok(Coeff::new(a, b)),
        _ => Err(Error::InvalidArgument(format!("coefficient {c} too large for the oracle"))),
    }
}

impl Oracle {
    pub fn new(preset: Preset, field: Field, trunc: usize) -> Self {
        Oracle {
            space: TruncSpace::new(preset, trunc),
            field,
        }
    }

    fn nonzero(&self, c: &Coeff) -> bool {
        match self.field {
            Field::Rational => !c.is_zero(),
            Field::Gf2 => {
                debug_assert!(c.is_integer());
                c.numer().is_odd()
            }
        }
    }

    pub fn rep_generator(&self, name: &str) -> Result<OracleOperator> {
        Ok(OracleOperator::Gen(self.space.local_generator(name)?))
    }

    pub fn rep_expr(&self, e: &GenExpr) -> Result<OracleOperator> {
        Ok(match e {
            GenExpr::Gen(name) => self.rep_generator(name)?,
            GenExpr::Id(k) => OracleOperator::Identity(*k),
            GenExpr::Compose(u, l) => OracleOperator::compose(self.rep_expr(u)?, self.rep_expr(l)?)?,
            GenExpr::Tensor(f, g) => OracleOperator::tensor(self.rep_expr(f)?, self.rep_expr(g)?),
            GenExpr::Scale(c, a) => {
                let a = self.rep_expr(a)?;
                let (n, m) = a.arity();
                OracleOperator::Sum {
                    n,
                    m,
                    terms: vec![(to_coeff(c)?, a)],
                }
            }
            GenExpr::Add(a, b) => {
                let (a, b) = (self.rep_expr(a)?, self.rep_expr(b)?);
                if a.arity() != b.arity() {
                    return Err(Error::ArityMismatch {
                        op: "oracle add",
                        left: a.arity(),
                        right: b.arity(),
                    });
                }
                let (n, m) = a.arity();
                OracleOperator::Sum {
                    n,
                    m,
                    terms: vec![(Coeff::one(), a), (Coeff::one(), b)],
                }
            }
            GenExpr::Zero => return Err(Error::UnknownArity),
        })
    }

    /// Operator of a morphism, built from the factorizations of its terms.
    pub fn rep_morphism(&self, m: &Morphism) -> Result<OracleOperator> {
        let mut terms = Vec::with_capacity(m.len());
        for (d, c) in &m.terms {
            terms.push((to_coeff(c)?, self.rep_expr(&factorize(d))?));
        }
        Ok(OracleOperator::Sum { n: m.n, m: m.m, terms })
    }

    fn degree_of(&self, t: &[u64]) -> i64 {
        t.iter().map(|&v| self.space.degree(v)).sum()
    }

    /// `op` applied to a basis tensor, with merged coefficients.
    pub fn apply(&self, op: &OracleOperator, input: &[u64]) -> Vec<(Tensor, Coeff)> {
        merge(self.apply_raw(op, input))
    }

    fn apply_raw(&self, op: &OracleOperator, input: &[u64]) -> Vec<(Tensor, Coeff)> {
        match op {
            OracleOperator::Gen(g) => {
                let local = input.first().copied();
                match self.space.apply_gen(*g, local) {
                    None => vec![],
                    Some(out) => vec![(out.into_iter().collect(), Coeff::one())],
                }
            }
            OracleOperator::Identity(_) => vec![(input.to_vec(), Coeff::one())],
            OracleOperator::Compose(u, l) => {
                let mid = self.apply(l, input);
                let mut out = Vec::new();
                for (v, c) in mid {
                    for (w, c2) in self.apply_raw(u, &v) {
                        out.push((w, c * c2));
                    }
                }
                merge(out)
            }
            OracleOperator::Tensor(f, g) => {
                let k = f.arity().0;
                let (u, w) = input.split_at(k);
                let deg_u = self.degree_of(u);
                let deg_w = self.degree_of(w);
                let fu = self.apply(f, u);
                let mut out = Vec::new();
                for (w2, cg) in self.apply(g, w) {
                    let odd = ((self.degree_of(&w2) - deg_w) * deg_u).rem_euclid(2) == 1;
                    let cg = if odd { -cg } else { cg };
                    for (u2, cf) in &fu {
                        let mut t = u2.clone();
                        t.extend_from_slice(&w2);
                        out.push((t, cf * cg));
                    }
                }
                out
            }
            OracleOperator::Sum { terms, .. } => {
                let mut out = Vec::new();
                for (c, t) in terms {
                    out.extend(self.apply_raw(t, input).into_iter().map(|(v, c2)| (v, c * c2)));
                }
                out
            }
        }
    }

    /// Basis tensors of `V^{⊗k}` inside the safe window for weight `w`.
    pub fn window_inputs(&self, k: usize, w: usize) -> Vec<Tensor> {
        let range = self.space.window(w);
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::with_capacity(out.len() * range.end as usize);
            for t in &out {
                for v in range.clone() {
                    let mut t2 = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    fn differs(&self, a: Vec<(Tensor, Coeff)>, b: Vec<(Tensor, Coeff)>) -> bool {
        let mut diff = a;
        diff.extend(b.into_iter().map(|(k, c)| (k, -c)));
        merge(diff).iter().any(|(_, c)| self.nonzero(c))
    }

    /// Compares two operators on every input of the safe window for weight
    /// `w`.
    pub fn equal_on_window(&self, f: &OracleOperator, g: &OracleOperator, w: usize) -> Result<WindowReport> {
        if f.arity() != g.arity() {
            return Err(Error::ArityMismatch {
                op: "equal_on_window",
                left: f.arity(),
                right: g.arity(),
            });
        }
        if w > self.space.trunc {
            return Err(Error::InvalidArgument(format!(
                "weight {w} exceeds truncation {}",
                self.space.trunc
            )));
        }
        let (n, _) = f.arity();
        if let (Some(pf), Some(pg)) = (f.program(&self.space), g.program(&self.space)) {
            return Ok(self.equal_programs(&pf, &pg, n, w));
        }
        let inputs = self.window_inputs(n, w);
        let witness = inputs
            .par_iter()
            .find_first(|t| self.differs(self.apply(f, t), self.apply(g, t)))
            .cloned();
        Ok(WindowReport {
            equal: witness.is_none(),
            inputs: inputs.len() as u64,
            witness,
        })
    }

    fn run_program(&self, p: &Program, input: Local, out: &mut Vec<(Local, Coeff)>) {
        for (c, seq) in p {
            if let Some(v) = self.space.run(seq, input) {
                out.push((v, *c));
            }
        }
    }

    /// Compares two single-factor programs on the whole safe window.
    ///
    /// Every generator maps a run of consecutive basis indices of one
    /// block (one word length for leavitt) to a run of consecutive indices
    /// by a translation, so each program term acts on a block as a
    /// translation restricted to a sub-run. Cutting the block at the ends of
    /// those sub-runs gives pieces on which both sides are fixed sums of
    /// translations, and comparing those sums decides equality at every
    /// input of the piece.
    fn equal_programs(&self, pf: &Program, pg: &Program, n: usize, w: usize) -> WindowReport {
        let blocks = if n == 0 {
            vec![(None, 0, 1)]
        } else {
            self.space.window_blocks(w)
        };
        let inputs = if n == 0 { 1 } else { self.space.window(w).end };
        for (class, lo, hi) in blocks {
            let start = Run { lo, hi, class, delta: 0 };
            let runs: Vec<(Run, Coeff)> = pf
                .iter()
                .map(|(c, s)| (s, *c))
                .chain(pg.iter().map(|(c, s)| (s, -*c)))
                .filter_map(|(s, c)| self.space.run_interval(s, start).map(|r| (r, c)))
                .collect();
            let mut cuts: Vec<u64> = vec![lo, hi];
            for (r, _) in &runs {
                cuts.push(r.lo);
                cuts.push(r.hi);
            }
            cuts.sort_unstable();
            cuts.dedup();
            for win in cuts.windows(2) {
                let (p, q) = (win[0], win[1]);
                let terms: Vec<((Option<usize>, i64), Coeff)> = runs
                    .iter()
                    .filter(|(r, _)| r.lo <= p && q <= r.hi)
                    .map(|(r, c)| ((r.class, r.delta), *c))
                    .collect();
                if merge(terms).iter().any(|(_, c)| self.nonzero(c)) {
                    let witness = match class {
                        None => vec![],
                        Some(k) => vec![self.space.block_offset(k) + p],
                    };
                    return WindowReport {
                        equal: false,
                        inputs,
                        witness: Some(witness),
                    };
                }
            }
        }
        WindowReport {
            equal: true,
            inputs,
            witness: None,
        }
    }

    /// Pointwise version of [`Self::equal_programs`], one input at a time.
    pub fn equal_programs_pointwise(&self, pf: &Program, pg: &Program, n: usize, w: usize) -> WindowReport {
        let check = |input: Local| {
            let mut buf = Vec::with_capacity(8);
            self.run_program(pf, input, &mut buf);
            let split = buf.len();
            self.run_program(pg, input, &mut buf);
            for e in &mut buf[split..] {
                e.1 = -e.1;
            }
            merge(buf).iter().any(|(_, c)| self.nonzero(c))
        };
        if n == 0 {
            let bad = check(None);
            return WindowReport {
                equal: !bad,
                inputs: 1,
                witness: bad.then(Vec::new),
            };
        }
        let range = self.space.window(w);
        const CHUNK: u64 = 1 << 16;
        let chunks = range.end.div_ceil(CHUNK);
        let witness = (0..chunks).into_par_iter().find_map_first(|ch| {
            let lo = ch * CHUNK;
            let hi = (lo + CHUNK).min(range.end);
            (lo..hi).find(|&v| check(Some(v)))
        });
        WindowReport {
            equal: witness.is_none(),
            inputs: range.end,
            witness: witness.map(|v| vec![v]),
        }
    }

    /// The restriction of `op` to the safe window, as a sparse column
    /// keyed by `(input, output)`.
    pub fn window_column(&self, op: &OracleOperator, w: usize) -> BTreeMap<(Tensor, Tensor), Scalar> {
        let mut col = BTreeMap::new();
        for t in self.window_inputs(op.arity().0, w) {
            for (v, c) in self.apply(op, &t) {
                if self.nonzero(&c) {
                    let c = Scalar::new((*c.numer()).into(), (*c.denom()).into());
                    col.insert((t.clone(), v), self.field.normalize(c));
                }
            }
        }
        col
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn word_encoding() {
        let s = TruncSpace::new(Preset::Leavitt { loops: 3 }, 4);
        assert_eq!(s.dim(), 1 + 3 + 9 + 27 + 81);
        for v in 0..s.dim() {
            assert_eq!(s.encode_word(&s.word(v)), Some(v));
        }
        let w = s.encode_word(&[2, 1, 3]).unwrap();
        assert_eq!(s.size(w), 3);
        assert_eq!(s.apply_gen(LocalGen::LoopStar(2), Some(w)), Some(s.encode_word(&[1, 3])));
        assert_eq!(s.apply_gen(LocalGen::LoopStar(1), Some(w)), None);
        assert_eq!(s.apply_gen(LocalGen::Loop(1), Some(s.encode_word(&[1, 1, 1, 1]).unwrap())), None);
    }

    #[test]
    fn generator_models() {
        let o = Oracle::new(Preset::JACOBSON, Field::Rational, 6);
        let y = o.rep_generator("y").unwrap();
        let x = o.rep_generator("x").unwrap();
        let yx = OracleOperator::compose(y.clone(), x.clone()).unwrap();
        assert!(o.equal_on_window(&yx, &OracleOperator::Identity(1), 1).unwrap().equal);
        let xy = OracleOperator::compose(x, y).unwrap();
        assert!(!o.equal_on_window(&xy, &OracleOperator::Identity(1), 1).unwrap().equal);

        let l = Oracle::new(Preset::Leavitt { loops: 3 }, Field::Rational, 5);
        let a = OracleOperator::compose(l.rep_generator("x1^*").unwrap(), l.rep_generator("x2").unwrap()).unwrap();
        let zero = OracleOperator::Sum { n: 1, m: 1, terms: vec![] };
        assert!(l.equal_on_window(&a, &zero, 1).unwrap().equal);
    }

    fn random_program(rng: &mut impl rand::Rng, preset: Preset, n: usize, m: usize) -> Program {
        let (ups, downs, loops): (Vec<LocalGen>, Vec<LocalGen>, Vec<LocalGen>) = match preset {
            Preset::JacobsonDg { .. } => (vec![LocalGen::Z], vec![LocalGen::ZStar], vec![LocalGen::X, LocalGen::Y]),
            Preset::Leavitt { loops } => (
                vec![LocalGen::Z],
                vec![LocalGen::ZStar],
                (1..=loops).flat_map(|i| [LocalGen::Loop(i), LocalGen::LoopStar(i)]).collect(),
            ),
            Preset::QuiverExample1 => (vec![LocalGen::B], vec![LocalGen::C], vec![]),
        };
        let terms = rng.gen_range(1..=3);
        (0..terms)
            .map(|_| {
                let mut seq = Vec::new();
                let mut unit = n == 0;
                let len = rng.gen_range(0..=5);
                for _ in 0..len {
                    if unit {
                        seq.push(ups[0]);
                        unit = false;
                    } else if !loops.is_empty() && rng.gen_bool(0.8) {
                        seq.push(loops[rng.gen_range(0..loops.len())]);
                    } else {
                        seq.push(downs[0]);
                        unit = true;
                    }
                }
                if unit != (m == 0) {
                    seq.push(if unit { ups[0] } else { downs[0] });
                }
                (Coeff::from_integer(rng.gen_range(-2..=2)), seq)
            })
            .collect()
    }

    #[test]
    fn interval_and_pointwise_agree() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut outcomes = [0usize; 2];
        for preset in [Preset::JACOBSON, Preset::Leavitt { loops: 2 }, Preset::Leavitt { loops: 3 }, Preset::QuiverExample1] {
            for field in [Field::Gf2, Field::Rational] {
                let o = Oracle::new(preset, field, 6);
                for _ in 0..300 {
                    let n = rng.gen_range(0..=1);
                    let m = rng.gen_range(0..=1);
                    let f = random_program(&mut rng, preset, n, m);
                    let g = if rng.gen_bool(0.3) { f.clone() } else { random_program(&mut rng, preset, n, m) };
                    let w = rng.gen_range(0..=3);
                    let fast = o.equal_programs(&f, &g, n, w);
                    assert_eq!(fast, o.equal_programs_pointwise(&f, &g, n, w), "{preset} {f:?} {g:?}");
                    outcomes[fast.equal as usize] += 1;
                }
            }
        }
        assert!(outcomes.iter().all(|&c| c > 100), "{outcomes:?}");
    }

    #[test]
    fn koszul_tensor() {
        let o = Oracle::new(Preset::JACOBSON, Field::Rational, 5);
        let x = o.rep_generator("x").unwrap();
        let id = OracleOperator::Identity(1);
        let a = OracleOperator::tensor(id.clone(), x.clone());
        // (1⊗x)(v_1⊗v_0) = -v_1⊗v_1
        assert_eq!(o.apply(&a, &[1, 0]), vec![(vec![1, 1], Coeff::from_integer(-1))]);
        let b = OracleOperator::tensor(x, id);
        assert_eq!(o.apply(&b, &[1, 0]), vec![(vec![2, 0], Coeff::one())]);
    }
}
