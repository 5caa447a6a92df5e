//! Seeded random morphisms for property checks.

use std::collections::BTreeMap;

use rand::Rng;

use crate::basis::BasisEnumerator;
use crate::diagram::{BasisDiagram, Morphism};
use crate::presentation::Presentation;
use crate::scalar::{Field, LinComb, Scalar};

/// Draws basis diagrams and morphisms of bounded weight, caching one
/// enumerator per arity.
pub struct Sampler<'a> {
    pub pres: &'a Presentation,
    pub max_weight: usize,
    cache: BTreeMap<(usize, usize), BasisEnumerator>,
}

impl<'a> Sampler<'a> {
    pub fn new(pres: &'a Presentation, max_weight: usize) -> Self {
        Sampler {
            pres,
            max_weight,
            cache: BTreeMap::new(),
        }
    }

    fn enumerator(&mut self, n: usize, m: usize) -> &BasisEnumerator {
        let (pres, w) = (self.pres, self.max_weight);
        self.cache
            .entry((n, m))
            .or_insert_with(|| BasisEnumerator::new(pres, n, m, w))
    }

    /// A uniform basis diagram with at most `max_long` long strands.
    pub fn diagram(&mut self, rng: &mut impl Rng, n: usize, m: usize, max_long: usize) -> BasisDiagram {
        let e = self.enumerator(n, m);
        let end = (0..e.pbs.len())
            .filter(|&p| e.pbs[p].len() <= max_long)
            .map(|p| e.block(p).end)
            .max()
            .expect("the empty bijection is always allowed");
        e.get(rng.gen_range(0..end))
    }

    pub fn coeff(&self, rng: &mut impl Rng) -> Scalar {
        match self.pres.field {
            Field::Gf2 => Scalar::from_integer(1.into()),
            Field::Rational => {
                let num: i64 = *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap();
                let den: i64 = if rng.gen_bool(0.2) { 2 } else { 1 };
                Scalar::new(num.into(), den.into())
            }
        }
    }

    /// A sum of up to `terms` random diagrams with random coefficients.
    pub fn morphism(&mut self, rng: &mut impl Rng, n: usize, m: usize, terms: usize, max_long: usize) -> Morphism {
        let mut out = LinComb::zero();
        for _ in 0..rng.gen_range(1..=terms.max(1)) {
            let d = self.diagram(rng, n, m, max_long);
            let c = self.coeff(rng);
            out.add_term(self.pres.field, d, c);
        }
        Morphism { n, m, terms: out }
    }

    /// Like [`Self::morphism`], but every term has the degree of the first.
    pub fn homogeneous(&mut self, rng: &mut impl Rng, n: usize, m: usize, terms: usize) -> Morphism {
        let first = self.diagram(rng, n, m, n.min(m));
        let deg = self.pres.diagram_degree(&first);
        let mut out = LinComb::zero();
        let c = self.coeff(rng);
        out.add_term(self.pres.field, first, c);
        let want = rng.gen_range(1..=terms.max(1));
        let mut tries = 0;
        while out.len() < want && tries < 20 * terms {
            tries += 1;
            let d = self.diagram(rng, n, m, n.min(m));
            if self.pres.diagram_degree(&d) == deg {
                let c = self.coeff(rng);
                out.add_term(self.pres.field, d, c);
            }
        }
        Morphism { n, m, terms: out }
    }
}
