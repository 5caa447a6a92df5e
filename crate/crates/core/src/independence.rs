//! Rank of the oracle images of a set of basis diagrams.
//!
//! Small sets are handled by exact elimination on the safe-window matrix.
//! Large bases use a triangularity certificate instead: every label acts on
//! the model by a signed monomial map, so each diagram `d` has a witness
//! input tensor `u_d` whose image under `rep(d)` is `±v_d`. If for every
//! diagram the only diagrams of the set hitting the entry `(u_d, v_d)` are
//! strictly larger in a fixed order, the matrix restricted to the witness
//! rows is triangular with unit diagonal and the rank equals the count.
//! The certificate is decided per label, so its cost does not depend on
//! the number of diagrams.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::BasisEnumerator;
use crate::diagram::{BasisDiagram, Morphism};
use crate::error::{Error, Result};
use crate::expr::label_expr;
use crate::linalg::Echelon;
use crate::oracle::{LocalGen, Oracle};
use crate::presentation::{BottomLabel, Label, LongLabel, Preset, Presentation, TopLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMethod {
    Certificate,
    Elimination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: u128,
    pub count: u128,
    pub method: RankMethod,
}

impl RankReport {
    pub fn full(&self) -> bool {
        self.rank == self.count
    }
}

/// Largest `count × window` product handled by elimination.
pub const ELIMINATION_LIMIT: u128 = 4_000_000;

/// Why a certificate could not be issued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoCertificate(pub String);

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, NoCertificate> {
    Err(NoCertificate(msg.into()))
}

/// Signed-monomial action of a label on one factor, read off the oracle.
fn label_action(oracle: &Oracle, l: &Label) -> std::result::Result<Vec<LocalGen>, NoCertificate> {
    let op = oracle.rep_expr(&label_expr(l)).map_err(|e| NoCertificate(e.to_string()))?;
    match op.program(&oracle.space) {
        Some(p) if p.len() == 1 && p[0].0.abs().is_one() => Ok(p.into_iter().next().unwrap().1),
        _ => fail(format!("label {l:?} is not a signed monomial in the model")),
    }
}

/// Checks the triangularity certificate for all diagrams whose labels come
/// from the given tables.
pub fn certify(
    oracle: &Oracle,
    pres: &Presentation,
    tops: &[TopLabel],
    longs: &[LongLabel],
    bottoms: &[BottomLabel],
) -> std::result::Result<(), NoCertificate> {
    let space = &oracle.space;
    let w = tops
        .iter()
        .map(|t| pres.weight_top(t))
        .chain(bottoms.iter().map(|b| pres.weight_bottom(b)))
        .chain(longs.iter().map(|a| pres.weight_long(a)))
        .max()
        .unwrap_or(0);
    let big = w + 1;
    if !matches!(space.preset, Preset::QuiverExample1) && space.trunc < 3 * w + 1 {
        return fail(format!("truncation {} below {} for weight {w}", space.trunc, 3 * w + 1));
    }
    let small: Vec<u64> = match space.preset {
        Preset::QuiverExample1 => vec![0],
        _ => (0..space.count_up_to(w)).collect(),
    };
    let small_set: HashSet<u64> = small.iter().copied().collect();

    let mut long_wit = Vec::with_capacity(longs.len());
    for a in longs {
        let input = match (space.preset, a) {
            (Preset::JacobsonDg { .. }, LongLabel::Jacobson(m)) => (big + (*m).min(0).unsigned_abs() as usize) as u64,
            (Preset::Leavitt { loops }, LongLabel::Leavitt(_, j)) => {
                let mut word: Vec<u8> = j.iter().rev().copied().collect();
                word.extend(std::iter::repeat_n(loops, big));
                match space.encode_word(&word) {
                    Some(v) => v,
                    None => return fail("long witness exceeds truncation"),
                }
            }
            (Preset::QuiverExample1, LongLabel::Quiver) => 1,
            _ => return fail(format!("label {a:?} does not match preset")),
        };
        let seq = label_action(oracle, &Label::Long(a.clone()))?;
        let output = match space.run(&seq, Some(input)) {
            Some(Some(v)) => v,
            _ => return fail(format!("long label {a:?} kills its witness")),
        };
        if small_set.contains(&input) || small_set.contains(&output) {
            return fail(format!("witness of {a:?} overlaps the small values"));
        }
        long_wit.push((seq, input, output));
    }
    let by_pair: HashMap<(u64, u64), usize> =
        long_wit.iter().enumerate().map(|(k, (_, u, v))| ((*u, *v), k)).collect();
    if by_pair.len() != longs.len() {
        return fail("long witnesses are not distinct");
    }
    let big_in: BTreeSet<u64> = long_wit.iter().map(|(_, u, _)| *u).collect();
    let inputs: Vec<u64> = small.iter().copied().chain(big_in.iter().copied()).collect();
    if let Some(&max) = inputs.iter().max() {
        if !matches!(space.preset, Preset::QuiverExample1) && space.size(max) + w > space.trunc {
            return fail("witness inputs leave the safe window");
        }
    }

    let mut seen = HashSet::new();
    for t in tops {
        let seq = label_action(oracle, &Label::Top(t.clone()))?;
        match space.run(&seq, None) {
            Some(Some(v)) if small_set.contains(&v) => {
                if !seen.insert(v) {
                    return fail("top witnesses are not distinct");
                }
            }
            _ => return fail(format!("top label {t:?} has no small output")),
        }
    }
    seen.clear();
    for b in bottoms {
        let seq = label_action(oracle, &Label::Bottom(b.clone()))?;
        let accepted: Vec<u64> = inputs
            .iter()
            .copied()
            .filter(|&u| space.run(&seq, Some(u)) == Some(None))
            .collect();
        match accepted[..] {
            [u] if small_set.contains(&u) => {
                if !seen.insert(u) {
                    return fail("bottom witnesses are not distinct");
                }
            }
            _ => return fail(format!("bottom label {b:?} accepts {} witness inputs", accepted.len())),
        }
    }

    for (k, a) in longs.iter().enumerate() {
        let (seq, _, _) = &long_wit[k];
        for &u in &big_in {
            if let Some(Some(v)) = space.run(seq, Some(u)) {
                if let Some(&k2) = by_pair.get(&(u, v)) {
                    if k2 != k && pres.weight_long(&longs[k2]) <= pres.weight_long(a) {
                        return fail(format!("long label {a:?} hits the witness of {:?}", longs[k2]));
                    }
                }
            }
        }
    }
    Ok(())
}

fn labels_of(ds: &[BasisDiagram]) -> (Vec<TopLabel>, Vec<LongLabel>, Vec<BottomLabel>) {
    let mut t = BTreeSet::new();
    let mut l = BTreeSet::new();
    let mut b = BTreeSet::new();
    for d in ds {
        t.extend(d.tops.iter().cloned());
        l.extend(d.longs.iter().cloned());
        b.extend(d.bottoms.iter().cloned());
    }
    (t.into_iter().collect(), l.into_iter().collect(), b.into_iter().collect())
}

/// Rank by exact elimination of the safe-window columns.
pub fn elimination_rank(oracle: &Oracle, pres: &Presentation, ds: &[BasisDiagram]) -> Result<u128> {
    let Some(first) = ds.first() else { return Ok(0) };
    let (n, m) = (first.n(), first.m());
    if ds.iter().any(|d| d.n() != n || d.m() != m) {
        return Err(Error::InvalidArgument("diagrams of different arities".into()));
    }
    let w = ds.iter().map(|d| d.max_weight(pres)).max().unwrap_or(0);
    if w > oracle.space.trunc {
        return Err(Error::InvalidArgument(format!(
            "truncation {} below weight {w}",
            oracle.space.trunc
        )));
    }
    let window = (oracle.space.window(w).end as u128).pow(n as u32);
    if window * ds.len() as u128 > ELIMINATION_LIMIT {
        return Err(Error::Undetermined(format!(
            "{} diagrams on {window} window inputs is too large for elimination",
            ds.len()
        )));
    }
    let columns: Vec<_> = ds
        .par_iter()
        .map(|d| -> Result<_> {
            let op = oracle.rep_morphism(&Morphism::from_diagram(d.clone()))?;
            Ok(oracle.window_column(&op, w))
        })
        .collect::<Result<_>>()?;
    let mut e = Echelon::new(oracle.field);
    for c in columns {
        e.insert(c);
    }
    Ok(e.rank() as u128)
}

/// `independence_rank` for an explicit list of diagrams.
pub fn independence_rank(oracle: &Oracle, pres: &Presentation, ds: &[BasisDiagram]) -> Result<RankReport> {
    let count = ds.len() as u128;
    let distinct: BTreeSet<&BasisDiagram> = ds.iter().collect();
    if distinct.len() == ds.len() {
        let (t, l, b) = labels_of(ds);
        if certify(oracle, pres, &t, &l, &b).is_ok() {
            return Ok(RankReport {
                rank: count,
                count,
                method: RankMethod::Certificate,
            });
        }
    }
    Ok(RankReport {
        rank: elimination_rank(oracle, pres, ds)?,
        count,
        method: RankMethod::Elimination,
    })
}

/// Counts the diagrams of an enumerator one by one and certifies their
/// independence; falls back to elimination for small bases.
pub fn basis_rank(oracle: &Oracle, pres: &Presentation, e: &BasisEnumerator) -> Result<RankReport> {
    let mut count: u128 = 0;
    for pb in 0..e.pbs.len() {
        let block = e.block(pb);
        if block.is_empty() {
            continue;
        }
        for idx in [block.start, block.end - 1] {
            let d = e.get(idx);
            pres.validate_diagram(&d)?;
            if d.pb != e.pbs[pb] {
                return Err(Error::InvalidDiagram(format!("index {idx} decodes outside its block")));
            }
        }
        count += block.end - block.start;
    }
    match certify(oracle, pres, &e.tops, &e.longs, &e.bottoms) {
        Ok(()) => Ok(RankReport {
            rank: count,
            count,
            method: RankMethod::Certificate,
        }),
        Err(NoCertificate(why)) => {
            if count > ELIMINATION_LIMIT {
                return Err(Error::Undetermined(why));
            }
            let ds: Vec<_> = e.iter().collect();
            Ok(RankReport {
                rank: elimination_rank(oracle, pres, &ds)?,
                count,
                method: RankMethod::Elimination,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::enumerate_basis;
    use crate::scalar::Field;

    #[test]
    fn duplicated_list() {
        let p = Presentation::new(Preset::JACOBSON, Field::Gf2);
        let o = Oracle::new(p.preset, p.field, 8);
        let d = p.long_diagram(LongLabel::Jacobson(1));
        let r = independence_rank(&o, &p, &[d.clone(), d]).unwrap();
        assert_eq!((r.rank, r.count, r.method), (1, 2, RankMethod::Elimination));
    }

    #[test]
    fn certificate_agrees_with_elimination() {
        for (preset, w, n, m) in [
            (Preset::JACOBSON, 2, 1, 1),
            (Preset::JACOBSON, 1, 2, 2),
            (Preset::Leavitt { loops: 3 }, 1, 1, 1),
            (Preset::Leavitt { loops: 2 }, 1, 2, 1),
            (Preset::QuiverExample1, 0, 2, 2),
            (Preset::Leavitt { loops: 3 }, 2, 1, 1),
            (Preset::JACOBSON, 2, 2, 2),
        ] {
            for field in [Field::Gf2, Field::Rational] {
                let p = Presentation::new(preset, field);
                let o = Oracle::new(preset, field, 3 * w + 1);
                let ds = enumerate_basis(&p, n, m, w, None);
                let e = BasisEnumerator::new(&p, n, m, w);
                assert!(certify(&o, &p, &e.tops, &e.longs, &e.bottoms).is_ok(), "{preset} {n}->{m}");
                let r = elimination_rank(&o, &p, &ds).unwrap();
                assert_eq!(r, ds.len() as u128, "{preset} {field:?} {n}->{m}");
            }
        }
    }
}
