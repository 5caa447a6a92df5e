//! Enumeration of normal-form bases of `Hom(X^n, X^m)`.

use crate::diagram::{BasisDiagram, PartialBijection};
use crate::presentation::{BottomLabel, LongLabel, Presentation, TopLabel};

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All partial order-preserving bijections `0..n -> 0..m`, ordered by the
/// number of pairs, then by domain, then by image.
pub fn partial_bijections(n: usize, m: usize) -> Vec<PartialBijection> {
    let mut out = Vec::new();
    for l in 0..=n.min(m) {
        for dom in subsets(n, l) {
            for img in subsets(m, l) {
                out.push(PartialBijection {
                    n,
                    m,
                    pairs: dom.iter().copied().zip(img.iter().copied()).collect(),
                });
            }
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `Σ_ℓ C(n,ℓ)·C(m,ℓ)`, which equals `C(n+m, n)`.
pub fn count_partial_bijections(n: usize, m: usize) -> u128 {
    (0..=n.min(m))
        .map(|l| binomial(n as u64, l as u64) * binomial(m as u64, l as u64))
        .sum()
}

/// A basis diagram given by label indices into a [`BasisEnumerator`]'s
/// label tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedDiagram {
    pub pb: usize,
    pub tops: Vec<u32>,
    pub longs: Vec<u32>,
    pub bottoms: Vec<u32>,
}

/// Random-access view of all basis diagrams `X^n -> X^m` whose labels have
/// weight at most `max_weight`, without materializing them.
#[derive(Clone, Debug)]
pub struct BasisEnumerator {
    pub n: usize,
    pub m: usize,
    pub max_weight: usize,
    pub pbs: Vec<PartialBijection>,
    pub tops: Vec<TopLabel>,
    pub longs: Vec<LongLabel>,
    pub bottoms: Vec<BottomLabel>,
    offsets: Vec<u128>,
}

impl BasisEnumerator {
    pub fn new(pres: &Presentation, n: usize, m: usize, max_weight: usize) -> Self {
        let pbs = partial_bijections(n, m);
        let tops = pres.tops(max_weight);
        let longs = pres.longs(max_weight);
        let bottoms = pres.bottoms(max_weight);
        let mut offsets = vec![0u128];
        for pb in &pbs {
            let l = pb.len() as u32;
            let size = (tops.len() as u128).pow(m as u32 - l)
                * (longs.len() as u128).pow(l)
                * (bottoms.len() as u128).pow(n as u32 - l);
            offsets.push(offsets.last().unwrap() + size);
        }
        BasisEnumerator {
            n,
            m,
            max_weight,
            pbs,
            tops,
            longs,
            bottoms,
            offsets,
        }
    }

    /// Number of basis diagrams: the sum over partial bijections of the
    /// product of label-set sizes.
    pub fn len(&self) -> u128 {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index range occupied by the diagrams over partial bijection `pb`.
    pub fn block(&self, pb: usize) -> std::ops::Range<u128> {
        self.offsets[pb]..self.offsets[pb + 1]
    }

    pub fn indexed(&self, idx: u128) -> IndexedDiagram {
        assert!(idx < self.len(), "basis index out of range");
        let pb = self.offsets.partition_point(|&o| o <= idx) - 1;
        let mut rest = idx - self.offsets[pb];
        let l = self.pbs[pb].len();
        let mut digit = |base: usize| {
            let d = (rest % base as u128) as u32;
            rest /= base as u128;
            d
        };
        let bottoms: Vec<u32> = (0..self.n - l).map(|_| digit(self.bottoms.len())).collect();
        let longs: Vec<u32> = (0..l).map(|_| digit(self.longs.len())).collect();
        let tops: Vec<u32> = (0..self.m - l).map(|_| digit(self.tops.len())).collect();
        IndexedDiagram { pb, tops, longs, bottoms }
    }

    pub fn materialize(&self, d: &IndexedDiagram) -> BasisDiagram {
        BasisDiagram {
            pb: self.pbs[d.pb].clone(),
            tops: d.tops.iter().map(|&t| self.tops[t as usize].clone()).collect(),
            longs: d.longs.iter().map(|&a| self.longs[a as usize].clone()).collect(),
            bottoms: d.bottoms.iter().map(|&c| self.bottoms[c as usize].clone()).collect(),
        }
    }

    pub fn get(&self, idx: u128) -> BasisDiagram {
        self.materialize(&self.indexed(idx))
    }

    pub fn iter(&self) -> impl Iterator<Item = BasisDiagram> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

/// All basis diagrams with label weights at most `max_weight` and, if a
/// window is given, total degree inside it.
pub fn enumerate_basis(
    pres: &Presentation,
    n: usize,
    m: usize,
    max_weight: usize,
    degree_window: Option<(i64, i64)>,
) -> Vec<BasisDiagram> {
    BasisEnumerator::new(pres, n, m, max_weight)
        .iter()
        .filter(|d| match degree_window {
            None => true,
            Some((lo, hi)) => {
                let deg = pres.diagram_degree(d);
                lo <= deg && deg <= hi
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Preset;
    use crate::scalar::Field;

    #[test]
    fn pb_counts() {
        assert_eq!(count_partial_bijections(1, 1), 2);
        assert_eq!(count_partial_bijections(2, 2), 6);
        assert_eq!(count_partial_bijections(5, 4), 126);
        assert_eq!(partial_bijections(5, 4).len(), 126);
    }

    #[test]
    fn small_bases() {
        let q = Presentation::new(Preset::QuiverExample1, Field::Rational);
        assert_eq!(enumerate_basis(&q, 1, 1, 3, None).len(), 2);
        assert_eq!(enumerate_basis(&q, 2, 2, 3, None).len(), 6);
        let j = Presentation::new(Preset::JACOBSON, Field::Gf2);
        assert_eq!(enumerate_basis(&j, 1, 1, 0, Some((0, 0))).len(), 2);
        assert_eq!(enumerate_basis(&j, 1, 1, 2, None).len(), 14);
    }

    #[test]
    fn index_round_trip() {
        let p = Presentation::new(Preset::Leavitt { loops: 3 }, Field::Rational);
        let e = BasisEnumerator::new(&p, 2, 2, 1);
        let all: Vec<_> = e.iter().collect();
        assert_eq!(all.len() as u128, e.len());
        let distinct: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for d in &all {
            p.validate_diagram(d).unwrap();
        }
    }
}
