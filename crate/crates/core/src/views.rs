//! Endomorphism algebras `A_k = End(X^k)`, the long-strand filtration, the
//! quotients `L_k`, and the complex built from the idempotents of `J`.

use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use crate::diagram::{BasisDiagram, Morphism, PartialBijection};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::presentation::{BottomLabel, LongLabel, Presentation, TopLabel};
use crate::scalar::{LinComb, Scalar};

pub fn long_strand_count(d: &BasisDiagram) -> usize {
    d.long_strands()
}

fn require_endo(m: &Morphism, op: &'static str) -> Result<usize> {
    if m.n != m.m {
        return Err(Error::ArityMismatch {
            op,
            left: (m.n, m.m),
            right: (m.m, m.n),
        });
    }
    Ok(m.n)
}

fn require_jacobson(pres: &Presentation) -> Result<()> {
    if pres.preset.is_jacobson() {
        Ok(())
    } else {
        Err(Error::PresetMismatch {
            expected: "jacobson-dg",
            got: pres.preset.name(),
        })
    }
}

/// Whether `m ∈ J_{bound,k}`: every term has at most `bound` long strands.
/// The zero morphism lies in every ideal, including `J_{-1,k}`.
pub fn in_ideal(m: &Morphism, bound: i64) -> Result<bool> {
    require_endo(m, "in_ideal")?;
    Ok(m.terms.keys().all(|d| (d.long_strands() as i64) <= bound))
}

/// `α_k(f) = (z∘z^*) ⊗ f`.
pub fn alpha_embed(pres: &Presentation, m: &Morphism) -> Result<Morphism> {
    require_endo(m, "alpha_embed")?;
    let zz = pres.compose(&pres.generator("z")?, &pres.generator("z^*")?)?;
    pres.tensor(&zz, m)
}

/// An element of `L_k`, stored as its combination of diagrams with `k`
/// long strands, keyed by the tuple of long labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LkElement {
    pub k: usize,
    pub terms: LinComb<Vec<LongLabel>>,
}

impl LkElement {
    pub fn zero(k: usize) -> Self {
        LkElement { k, terms: LinComb::zero() }
    }

    pub fn basis(labels: Vec<LongLabel>) -> Self {
        LkElement {
            k: labels.len(),
            terms: LinComb::unit(labels),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

pub fn project_lk(m: &Morphism) -> Result<LkElement> {
    let k = require_endo(m, "project_lk")?;
    let mut terms = LinComb::zero();
    for (d, c) in &m.terms {
        if d.long_strands() == k {
            terms.add_term(crate::scalar::Field::Rational, d.longs.clone(), c.clone());
        }
    }
    Ok(LkElement { k, terms })
}

/// The representative of an `L_k` element in `A_k`.
pub fn lk_lift(a: &LkElement) -> Morphism {
    let mut terms = LinComb::zero();
    for (labels, c) in &a.terms {
        let d = BasisDiagram {
            pb: PartialBijection::identity(a.k),
            tops: vec![],
            longs: labels.clone(),
            bottoms: vec![],
        };
        terms.add_term(crate::scalar::Field::Rational, d, c.clone());
    }
    Morphism { n: a.k, m: a.k, terms }
}

pub fn lk_multiply(pres: &Presentation, a: &LkElement, b: &LkElement) -> Result<LkElement> {
    if a.k != b.k {
        return Err(Error::ArityMismatch {
            op: "lk_multiply",
            left: (a.k, a.k),
            right: (b.k, b.k),
        });
    }
    project_lk(&pres.compose(&lk_lift(a), &lk_lift(b))?)
}

/// The monomial `a_1^{e_1} ⋯ a_k^{e_k}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SkewWord(pub Vec<i64>);

impl SkewWord {
    pub fn unit(k: usize) -> Self {
        SkewWord(vec![0; k])
    }

    pub fn generator(k: usize, i: usize, e: i64) -> Self {
        let mut v = vec![0; k];
        v[i] = e;
        SkewWord(v)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Product of two monomials in canonical order; the flag is the parity of
/// the reordering, `Σ_{i>j} e_i f_j`.
pub fn skew_multiply(a: &SkewWord, b: &SkewWord) -> Result<(bool, SkewWord)> {
    if a.0.len() != b.0.len() {
        return Err(Error::ArityMismatch {
            op: "skew_multiply",
            left: (a.0.len(), a.0.len()),
            right: (b.0.len(), b.0.len()),
        });
    }
    let k = a.0.len();
    let mut odd = 0i64;
    for i in 0..k {
        for j in 0..i {
            odd += a.0[i] * b.0[j];
        }
    }
    let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
    Ok((odd.rem_euclid(2) == 1, SkewWord(e)))
}

pub fn skew_product(pres: &Presentation, a: &LinComb<SkewWord>, b: &LinComb<SkewWord>) -> Result<LinComb<SkewWord>> {
    let mut out = LinComb::zero();
    for (u, cu) in a {
        for (v, cv) in b {
            let (odd, w) = skew_multiply(u, v)?;
            out.add_term(pres.field, w, cu * cv * pres.field.sign(odd));
        }
    }
    Ok(out)
}

/// `x̄_i ↦ a_i`, `ȳ_i ↦ a_i^{-1}`.
pub fn lk_to_skew(pres: &Presentation, a: &LkElement) -> Result<LinComb<SkewWord>> {
    require_jacobson(pres)?;
    let mut out = LinComb::zero();
    for (labels, c) in &a.terms {
        let e = labels
            .iter()
            .map(|l| match l {
                LongLabel::Jacobson(m) => Ok(*m),
                other => Err(Error::InvalidLabel(format!("{other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        out.add_term(pres.field, SkewWord(e), c.clone());
    }
    Ok(out)
}

pub fn skew_to_lk(pres: &Presentation, k: usize, a: &LinComb<SkewWord>) -> Result<LkElement> {
    require_jacobson(pres)?;
    let mut terms = LinComb::zero();
    for (w, c) in a {
        if w.0.len() != k {
            return Err(Error::InvalidArgument(format!("monomial {:?} is not in L_{k}", w.0)));
        }
        terms.add_term(pres.field, w.0.iter().map(|&m| LongLabel::Jacobson(m)).collect(), c.clone());
    }
    Ok(LkElement { k, terms })
}

/// The matrix unit `e_{ij} = x^i z z^* y^j` of `J ⊂ A_1`.
pub fn matrix_unit(pres: &Presentation, i: u32, j: u32) -> Result<Morphism> {
    require_jacobson(pres)?;
    Ok(Morphism::from_diagram(BasisDiagram {
        pb: PartialBijection::new(1, 1, vec![])?,
        tops: vec![TopLabel::Jacobson(i)],
        longs: vec![],
        bottoms: vec![BottomLabel::Jacobson(j)],
    }))
}

/// `u(T, i)`: `e_{i_t i_t}` on strand `t ∈ T` (1-based, increasing) and
/// the identity elsewhere.
pub fn idempotent_u(pres: &Presentation, set: &[usize], index: &[u32], k: usize) -> Result<Morphism> {
    require_jacobson(pres)?;
    if set.len() != index.len() || set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&t| t == 0 || t > k) {
        return Err(Error::InvalidArgument(format!("invalid T = {set:?}, i = {index:?} for k = {k}")));
    }
    let mut parts = Vec::with_capacity(k);
    for pos in 1..=k {
        match set.iter().position(|&t| t == pos) {
            Some(s) => parts.push(matrix_unit(pres, index[s], index[s])?),
            None => parts.push(pres.identity(1)),
        }
    }
    pres.tensor_all(&parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PLkTerm {
    /// `T ⊆ {1..k}`, increasing.
    pub set: Vec<usize>,
    pub index: Vec<u32>,
}

impl PLkTerm {
    pub fn position(&self) -> i64 {
        -(self.set.len() as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PLkMap {
    pub source: usize,
    pub target: usize,
    /// The strand `r ∈ T` dropped by the inclusion.
    pub removed: usize,
    pub sign: i8,
}

/// The truncated complex `⊕ u(T,i)A_k` with the alternating sum of
/// inclusions as differential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PLkComplex {
    pub k: usize,
    pub max_index: u32,
    pub terms: Vec<PLkTerm>,
    pub maps: Vec<PLkMap>,
}

/// `c(T, r) = #{t ∈ T : t < r}`.
pub fn c_count(set: &[usize], r: usize) -> usize {
    set.iter().filter(|&&t| t < r).count()
}

fn index_tuples(len: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn build_plk(k: usize, max_index: u32) -> Result<PLkComplex> {
    if k == 0 || max_index == 0 {
        return Err(Error::InvalidArgument("k and the maximal index must be positive".into()));
    }
    let mut terms = Vec::new();
    for size in 0..=k {
        for set in crate::basis::subsets(k, size) {
            let set: Vec<usize> = set.into_iter().map(|t| t + 1).collect();
            for index in index_tuples(size, max_index) {
                terms.push(PLkTerm { set: set.clone(), index });
            }
        }
    }
    let lookup: BTreeMap<(Vec<usize>, Vec<u32>), usize> = terms
        .iter()
        .enumerate()
        .map(|(n, t)| ((t.set.clone(), t.index.clone()), n))
        .collect();
    let mut maps = Vec::new();
    for (source, t) in terms.iter().enumerate() {
        for (s, &r) in t.set.iter().enumerate() {
            let mut set = t.set.clone();
            let mut index = t.index.clone();
            set.remove(s);
            index.remove(s);
            let target = lookup[&(set, index)];
            let sign = if c_count(&t.set, r).is_multiple_of(2) { 1 } else { -1 };
            maps.push(PLkMap {
                source,
                target,
                removed: r,
                sign,
            });
        }
    }
    Ok(PLkComplex {
        k,
        max_index,
        terms,
        maps,
    })
}

/// Outcome of the `∂² = 0` check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSquaredReport {
    pub holds: bool,
    pub paths: usize,
    /// `(term, r, r')` of the first failing pair of routes.
    pub witness: Option<(usize, usize, usize)>,
}

/// For every term and every two strands `r < r'` of `T`, the two routes
/// down to `T ∖ {r, r'}` carry opposite signs, and the images of the
/// generator `u(T,i)` along both routes, computed as
/// `u(S,j)·u(r',i_{r'})·u(r,i_r)` and `u(S,j)·u(r,i_r)·u(r',i_{r'})`, agree.
pub fn check_d_squared(pres: &Presentation, c: &PLkComplex) -> Result<DSquaredReport> {
    let mut by_source: BTreeMap<usize, Vec<&PLkMap>> = BTreeMap::new();
    for m in &c.maps {
        by_source.entry(m.source).or_default().push(m);
    }
    let mut paths = 0;
    for (n, t) in c.terms.iter().enumerate() {
        let first = by_source.get(&n).cloned().unwrap_or_default();
        for (a, &r) in t.set.iter().enumerate() {
            for (b, &r2) in t.set.iter().enumerate().skip(a + 1) {
                let route_sign = |m1: &PLkMap| -> Option<i8> {
                    let m2 = c
                        .maps
                        .iter()
                        .find(|m2| m2.source == m1.target && m2.removed == if m1.removed == r { r2 } else { r })?;
                    Some(m1.sign * m2.sign)
                };
                let via_r = first.iter().find(|m| m.removed == r).and_then(|m| route_sign(m));
                let via_r2 = first.iter().find(|m| m.removed == r2).and_then(|m| route_sign(m));
                paths += 2;
                let (Some(s1), Some(s2)) = (via_r, via_r2) else {
                    return Ok(DSquaredReport {
                        holds: false,
                        paths,
                        witness: Some((n, r, r2)),
                    });
                };
                let mut set = t.set.clone();
                let mut index = t.index.clone();
                set.remove(b);
                index.remove(b);
                set.remove(a);
                index.remove(a);
                let base = idempotent_u(pres, &set, &index, c.k)?;
                let ur = idempotent_u(pres, &[r], &[t.index[a]], c.k)?;
                let ur2 = idempotent_u(pres, &[r2], &[t.index[b]], c.k)?;
                let v1 = pres.compose_all(&[base.clone(), ur2.clone(), ur.clone()])?;
                let v2 = pres.compose_all(&[base, ur, ur2])?;
                let total = pres.add(
                    &pres.scale(&Scalar::from_integer(s1.into()), &v1),
                    &pres.scale(&Scalar::from_integer(s2.into()), &v2),
                )?;
                let full = idempotent_u(pres, &t.set, &t.index, c.k)?;
                if s1 + s2 != 0 || !total.is_zero() || v1 != full {
                    return Ok(DSquaredReport {
                        holds: false,
                        paths,
                        witness: Some((n, r, r2)),
                    });
                }
            }
        }
    }
    Ok(DSquaredReport {
        holds: true,
        paths,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub injective: bool,
    pub target_dim: usize,
    pub image_dim: usize,
    pub cokernel_dim: usize,
    pub expected_cokernel: usize,
}

impl HomologyReport {
    pub fn holds(&self) -> bool {
        self.injective && self.cokernel_dim == self.expected_cokernel
    }
}

fn column(m: &Morphism) -> SparseVec<BasisDiagram> {
    m.terms.iter().map(|(d, c)| (d.clone(), c.clone())).collect()
}

/// The map `⊕_{j<N} e_{jj}A_1 → A_1` on the span of basis diagrams with
/// labels of weight at most `w`: checks that the summands meet trivially and
/// measures the cokernel inside the weight-`w` span.
pub fn homology_check_k1(pres: &Presentation, trunc: u32, w: u32) -> Result<HomologyReport> {
    require_jacobson(pres)?;
    if trunc <= w {
        return Err(Error::InvalidArgument(format!("truncation {trunc} must exceed the weight bound {w}")));
    }
    let target = crate::basis::enumerate_basis(pres, 1, 1, w as usize, None);
    let target_cols: Vec<_> = target.iter().map(|d| column(&Morphism::from_diagram(d.clone()))).collect();

    let mut all = Echelon::new(pres.field);
    let mut block_ranks = 0;
    let mut image_cols = Vec::new();
    for j in 0..trunc {
        let e = matrix_unit(pres, j, j)?;
        let mut block = Echelon::new(pres.field);
        for d in &target {
            let col = column(&pres.compose(&e, &Morphism::from_diagram(d.clone()))?);
            block.insert(col.clone());
            all.insert(col.clone());
            image_cols.push(col);
        }
        block_ranks += block.rank();
    }
    let injective = block_ranks == all.rank();
    let image_rank = all.rank();
    let mut sum = all;
    for c in &target_cols {
        sum.insert(c.clone());
    }
    // dim(I ∩ T) = dim I + dim T - dim(I + T)
    let image_dim = image_rank + target.len() - sum.rank();
    Ok(HomologyReport {
        injective,
        target_dim: target.len(),
        image_dim,
        cokernel_dim: target.len() - image_dim,
        expected_cokernel: 2 * w as usize + 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftReport {
    pub strand: usize,
    pub monomials: usize,
    pub bijective: bool,
    pub degree_shift: Option<i64>,
}

/// Left multiplication by `a_i` (1-based `i`) on the monomials with
/// exponents in `[-w, w]^k`, computed in `L_k` through diagram composition:
/// each image is a single signed monomial of degree one higher, images are
/// distinct, and multiplying by `a_i^{-1}` restores the input.
pub fn shift_check(pres: &Presentation, k: usize, i: usize, w: i64) -> Result<ShiftReport> {
    require_jacobson(pres)?;
    if i == 0 || i > k {
        return Err(Error::InvalidArgument(format!("strand {i} outside 1..={k}")));
    }
    let gen = skew_to_lk(pres, k, &LinComb::unit(SkewWord::generator(k, i - 1, 1)))?;
    let inv = skew_to_lk(pres, k, &LinComb::unit(SkewWord::generator(k, i - 1, -1)))?;
    let x_deg = match pres.preset {
        crate::presentation::Preset::JacobsonDg { x_degree } => x_degree,
        _ => unreachable!(),
    };
    let mut images = std::collections::BTreeSet::new();
    let mut bijective = true;
    let mut degree_shift = None;
    let mut count = 0;
    for e in index_tuples(k, (2 * w + 1) as u32) {
        let word = SkewWord(e.iter().map(|&v| v as i64 - w).collect());
        let m = skew_to_lk(pres, k, &LinComb::unit(word.clone()))?;
        let img = lk_multiply(pres, &gen, &m)?;
        let skew = lk_to_skew(pres, &img)?;
        count += 1;
        let single = skew.len() == 1 && skew.iter().all(|(_, c)| c.abs_one());
        let back = lk_multiply(pres, &inv, &img)?;
        if !single || back != m {
            bijective = false;
            continue;
        }
        let (out, _) = skew.iter().next().unwrap();
        let shift = (out.degree() - word.degree()) * x_deg;
        if *degree_shift.get_or_insert(shift) != shift || !images.insert(out.clone()) {
            bijective = false;
        }
    }
    Ok(ShiftReport {
        strand: i,
        monomials: count,
        bijective,
        degree_shift,
    })
}

trait AbsOne {
    fn abs_one(&self) -> bool;
}

impl AbsOne for Scalar {
    fn abs_one(&self) -> bool {
        self.is_one() || (-self).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Preset;
    use crate::scalar::{int, Field};

    fn jac(field: Field) -> Presentation {
        Presentation::new(Preset::JACOBSON, field)
    }

    #[test]
    fn matrix_units_multiply() {
        let p = jac(Field::Rational);
        let e = |i, j| matrix_unit(&p, i, j).unwrap();
        assert_eq!(p.compose(&e(1, 2), &e(2, 5)).unwrap(), e(1, 5));
        assert!(p.compose(&e(1, 2), &e(3, 5)).unwrap().is_zero());
        assert_eq!(p.degree_of(&e(3, 1)), crate::diagram::Degree::Homogeneous(2));
        assert_eq!(alpha_embed(&p, &p.identity(0)).unwrap(), e(0, 0));
        assert!(in_ideal(&e(0, 0), 0).unwrap());
        assert!(!in_ideal(&p.identity(1), 0).unwrap());
        assert!(in_ideal(&Morphism::zero(2, 2), -1).unwrap());
    }

    #[test]
    fn lk_products() {
        let p = jac(Field::Rational);
        let xy = p.compose(&p.generator("x").unwrap(), &p.generator("y").unwrap()).unwrap();
        assert_eq!(project_lk(&xy).unwrap(), LkElement::basis(vec![LongLabel::Jacobson(0)]));
        let y = project_lk(&p.generator("y").unwrap()).unwrap();
        assert_eq!(lk_to_skew(&p, &y).unwrap(), LinComb::unit(SkewWord(vec![-1])));

        let a1 = LkElement::basis(vec![LongLabel::Jacobson(1), LongLabel::Jacobson(0)]);
        let a2 = LkElement::basis(vec![LongLabel::Jacobson(0), LongLabel::Jacobson(1)]);
        let l = lk_multiply(&p, &a1, &a2).unwrap();
        let r = lk_multiply(&p, &a2, &a1).unwrap();
        assert_eq!(l.terms, r.terms.scaled(p.field, &int(-1)));
        assert_eq!(
            skew_multiply(&SkewWord(vec![0, 1]), &SkewWord(vec![1, 0])).unwrap(),
            (true, SkewWord(vec![1, 1]))
        );
    }

    #[test]
    fn idempotents() {
        let p = jac(Field::Gf2);
        assert_eq!(idempotent_u(&p, &[], &[], 2).unwrap(), p.identity(2));
        let u = idempotent_u(&p, &[1, 3], &[2, 0], 3).unwrap();
        assert_eq!(p.compose(&u, &u).unwrap(), u);
    }

    #[test]
    fn complexes() {
        let p = jac(Field::Rational);
        for (k, n) in [(1, 3), (2, 2), (3, 2)] {
            let c = build_plk(k, n).unwrap();
            assert!(check_d_squared(&p, &c).unwrap().holds, "k={k}");
        }
        for (w, n, dim) in [(0, 2, 1), (1, 4, 3), (2, 8, 5)] {
            let r = homology_check_k1(&p, n, w).unwrap();
            assert!(r.injective);
            assert_eq!(r.cokernel_dim, dim);
        }
    }

    #[test]
    fn shifts() {
        let p = jac(Field::Rational);
        for k in 1..=3 {
            for i in [1, k] {
                let r = shift_check(&p, k, i, 2).unwrap();
                assert!(r.bijective, "k={k} i={i}");
                assert_eq!(r.degree_shift, Some(1));
            }
        }
    }
}
