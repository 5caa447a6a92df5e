//! Exact sparse rank computations.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_traits::Zero;

use crate::scalar::{Field, Scalar};

/// A sparse vector keyed by row labels.
pub type SparseVec<R> = BTreeMap<R, Scalar>;

/// Incremental Gaussian elimination over the chosen field. Each stored
/// pivot column has its pivot at its smallest row key.
#[derive(Clone, Debug)]
pub struct Echelon<R: Ord + Clone + Hash> {
    field: Field,
    pivots: HashMap<R, SparseVec<R>>,
}

impl<R: Ord + Clone + Hash> Echelon<R> {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored pivots.
    pub fn reduce(&self, mut v: SparseVec<R>) -> SparseVec<R> {
        let field = self.field;
        v.retain(|_, c| !field.normalize(c.clone()).is_zero());
        let mut done = SparseVec::new();
        while let Some((r, c)) = v.pop_first() {
            match self.pivots.get(&r) {
                None => {
                    done.insert(r, c);
                }
                Some(p) => {
                    let f = &c / &p[&r];
                    for (k, pc) in p.iter().skip(1) {
                        let e = v.entry(k.clone()).or_insert_with(Scalar::zero);
                        *e = field.normalize(&*e - &f * pc);
                        if e.is_zero() {
                            v.remove(k);
                        }
                    }
                }
            }
        }
        done
    }

    /// Adds a column; returns `true` if it was independent of the previous
    /// ones.
    pub fn insert(&mut self, v: SparseVec<R>) -> bool {
        let v = self.reduce(v);
        match v.keys().next().cloned() {
            None => false,
            Some(r) => {
                self.pivots.insert(r, v);
                true
            }
        }
    }
}

pub fn rank<R: Ord + Clone + Hash>(field: Field, columns: impl IntoIterator<Item = SparseVec<R>>) -> usize {
    let mut e = Echelon::new(field);
    for c in columns {
        e.insert(c);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn col(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(r, c)| (r, int(c))).collect()
    }

    #[test]
    fn small_ranks() {
        let cols = vec![col(&[(0, 1), (1, 1)]), col(&[(1, 1), (2, 1)]), col(&[(0, 1), (2, 1)])];
        assert_eq!(rank(Field::Rational, cols.clone()), 3);
        assert_eq!(rank(Field::Gf2, cols), 2);
        assert_eq!(rank(Field::Rational, vec![col(&[(3, 2)]), col(&[(3, 4)])]), 1);
        assert_eq!(rank(Field::Gf2, vec![col(&[(3, 2)])]), 0);
    }
}
