//! Coefficient fields and finite linear combinations.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Coefficient field. Scalars are stored as exact rationals in both cases;
/// over GF(2) every stored value is 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "q")]
    Rational,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rational => "q",
        }
    }

    /// Maps an exact rational into the field. Over GF(2) this fails when the
    /// denominator is even.
    pub fn reduce(self, x: Scalar) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(x),
            Field::Gf2 => {
                if x.denom().is_even() {
                    return Err(Error::NotInField(x.to_string()));
                }
                Ok(if x.numer().is_odd() {
                    Scalar::one()
                } else {
                    Scalar::zero()
                })
            }
        }
    }

    /// Like [`Field::reduce`] for values produced by the engine itself,
    /// which are always integral.
    pub fn normalize(self, x: Scalar) -> Scalar {
        self.reduce(x).expect("engine scalars are integral")
    }

    pub fn sign(self, odd: bool) -> Scalar {
        if odd && self == Field::Rational {
            -Scalar::one()
        } else {
            Scalar::one()
        }
    }

    pub fn neg(self, x: &Scalar) -> Scalar {
        self.normalize(-x.clone())
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a * b)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Gf2 => 2,
            Field::Rational => 0,
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" => Ok(Field::Gf2),
            "q" | "rational" => Ok(Field::Rational),
            _ => Err(Error::UnknownField(s.to_string())),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Renders a scalar as `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::InvalidArgument(format!("not a rational literal: `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

pub fn is_unit_magnitude(x: &Scalar) -> bool {
    x.abs().is_one()
}

/// A finite formal sum with nonzero coefficients, ordered by key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        if !coeff.is_zero() {
            out.terms.insert(key, coeff);
        }
        out
    }

    pub fn unit(key: K) -> Self {
        Self::single(key, Scalar::one())
    }

    pub fn add_term(&mut self, field: Field, key: K, coeff: Scalar) {
        let coeff = field.normalize(coeff);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = field.normalize(o.get() + coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, field: Field, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(field, k.clone(), c.clone());
        }
    }

    pub fn scaled(&self, field: Field, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(field, k.clone(), c * v);
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, field: Field, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(field, f(k), v.clone());
        }
        out
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn retain(&mut self, f: impl FnMut(&K, &mut Scalar) -> bool) {
        self.terms.retain(f);
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
