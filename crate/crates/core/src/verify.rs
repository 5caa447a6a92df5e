//! The acceptance suite. Each criterion returns a [`CriterionResult`]; the
//! CLI's `verify all` and the `acceptance` test target both call
//! [`run_all`].

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{binomial, count_partial_bijections, enumerate_basis, BasisEnumerator};
use crate::diagram::{Degree, FusionOrder, Morphism};
use crate::error::Result;
use crate::expr::{eval_with_arity, print, GenExpr};
use crate::independence::{basis_rank, elimination_rank, RankMethod, ELIMINATION_LIMIT};
use crate::interchange;
use crate::k0::{k0_class_of_power, ledger_reduce, parse_relation, verify_iso_pair};
use crate::oracle::{Oracle, OracleOperator};
use crate::parser::parse;
use crate::presentation::{Preset, Presentation};
use crate::sample::Sampler;
use crate::scalar::{Field, Scalar};
use crate::views;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub wall_time_ms: u128,
    pub budget_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<28} {} ({} ms) {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.wall_time_ms,
            self.detail
        )
    }
}

struct Outcome {
    ok: bool,
    detail: String,
    witness: Option<Value>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome {
            ok: true,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(detail: impl Into<String>, witness: Value) -> Self {
        Outcome {
            ok: false,
            detail: detail.into(),
            witness: Some(witness),
        }
    }
}

fn timed(id: u8, name: &'static str, budget: Option<Duration>, f: impl FnOnce() -> Result<Outcome>) -> CriterionResult {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail, witness) = match out {
        Ok(o) => (o.ok, o.detail, o.witness),
        Err(e) => (false, format!("error: {e}"), Some(json!({ "error": e.to_string() }))),
    };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail = format!("{detail}; over the {} ms budget", b.as_millis());
        }
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        wall_time_ms: elapsed.as_millis(),
        budget_ms: budget.map(|b| b.as_millis()),
        witness,
    }
}

fn rng_for(seed: u64, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn pres(preset: Preset, field: Field) -> Presentation {
    Presentation::new(preset, field)
}

fn leavitt(loops: u8) -> Preset {
    Preset::Leavitt { loops }
}

fn witness_morphisms(p: &Presentation, items: &[(&str, &Morphism)]) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("preset".into(), Value::from(p.preset.name()));
    obj.insert("field".into(), Value::from(p.field.name()));
    for (k, m) in items {
        obj.insert((*k).into(), serde_json::to_value(interchange::to_json(p, m)).expect("json"));
    }
    Value::Object(obj)
}

// ---- 1. relations ------------------------------------------------------

/// The defining relations of a preset as `(lhs, rhs)` expression pairs.
pub fn relations(preset: Preset) -> Vec<(String, String)> {
    let r = |a: &str, b: &str| (a.to_string(), b.to_string());
    match preset {
        Preset::JacobsonDg { .. } => vec![
            r("y.x", "1_X"),
            r("x.y + z.z^*", "1_X"),
            r("z^*.z", "1_1"),
            r("z^*.x", "0"),
            r("y.z", "0"),
        ],
        Preset::Leavitt { loops } => {
            let mut out = vec![r("z^*.z", "1_1")];
            for i in 1..=loops {
                out.push(r(&format!("z^*.x{i}"), "0"));
                out.push(r(&format!("x{i}^*.z"), "0"));
            }
            for i in 1..=loops {
                for j in 1..=loops {
                    out.push(r(&format!("x{i}^*.x{j}"), if i == j { "1_X" } else { "0" }));
                }
            }
            let mut sum: Vec<String> = (1..=loops).map(|i| format!("x{i}.x{i}^*")).collect();
            sum.push("z.z^*".into());
            out.push((sum.join(" + "), "1_X".into()));
            out
        }
        Preset::QuiverExample1 => vec![r("c.b", "1_1")],
    }
}

/// Truncation used by the oracle checks.
pub const ORACLE_TRUNC: usize = 12;

fn oracle_side(o: &Oracle, e: &GenExpr, arity: (usize, usize)) -> Result<OracleOperator> {
    match e {
        GenExpr::Zero => Ok(OracleOperator::Sum {
            n: arity.0,
            m: arity.1,
            terms: vec![],
        }),
        _ => o.rep_expr(e),
    }
}

/// Checks one relation symbolically and in the oracle; returns
/// `(symbolic, oracle)`.
pub fn check_relation(p: &Presentation, o: &Oracle, lhs: &str, rhs: &str) -> Result<(bool, bool)> {
    let (l, r) = (parse(lhs)?, parse(rhs)?);
    let lm = crate::expr::eval(p, &l)?;
    let rm = eval_with_arity(p, &r, lm.n, lm.m)?;
    let symbolic = p.equal(&lm, &rm)?;
    let lo = o.rep_expr(&l)?;
    let ro = oracle_side(o, &r, lo.arity())?;
    // the normal form of the left side must act like the raw expression
    let nf = o.rep_morphism(&lm)?;
    let oracle = o.equal_on_window(&lo, &ro, 1)?.equal && o.equal_on_window(&lo, &nf, 1)?.equal;
    Ok((symbolic, oracle))
}

pub fn criterion_relations() -> CriterionResult {
    timed(1, "relations", Some(Duration::from_secs(5)), || {
        let mut counts = Vec::new();
        for preset in [Preset::JACOBSON, leavitt(3), leavitt(4), leavitt(5), Preset::QuiverExample1] {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                let o = Oracle::new(preset, field, ORACLE_TRUNC);
                let rels = relations(preset);
                for (lhs, rhs) in &rels {
                    let (sym, orc) = check_relation(&p, &o, lhs, rhs)?;
                    if !(sym && orc) {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?}: `{lhs} = {rhs}` symbolic={sym} oracle={orc}"),
                            json!({ "preset": preset.name(), "field": field.name(), "lhs": lhs, "rhs": rhs,
                                    "symbolic": sym, "oracle": orc }),
                        ));
                    }
                }
                if field == Field::Rational {
                    counts.push(format!("{}:{}", preset.name(), rels.len()));
                }
            }
        }
        Ok(Outcome::pass(format!(
            "symbolic and oracle (N={ORACLE_TRUNC}) agree; relations per preset {}",
            counts.join(" ")
        )))
    })
}

// ---- 2. basis faithfulness -------------------------------------------

/// `Σ_ℓ C(n,ℓ) C(m,ℓ) |tops|^{m-ℓ} |longs|^ℓ |bottoms|^{n-ℓ}`.
pub fn basis_count_formula(pres: &Presentation, n: usize, m: usize, w: usize) -> u128 {
    let (t, a, b) = (
        pres.tops(w).len() as u128,
        pres.longs(w).len() as u128,
        pres.bottoms(w).len() as u128,
    );
    (0..=n.min(m))
        .map(|l| {
            binomial(n as u64, l as u64)
                * binomial(m as u64, l as u64)
                * t.pow((m - l) as u32)
                * a.pow(l as u32)
                * b.pow((n - l) as u32)
        })
        .sum()
}

pub fn criterion_basis() -> CriterionResult {
    timed(2, "basis faithfulness", Some(Duration::from_secs(120)), || {
        let mut total: u128 = 0;
        let mut eliminated = 0;
        for preset in [Preset::JACOBSON, leavitt(3), leavitt(4), leavitt(5), Preset::QuiverExample1] {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                let o = Oracle::new(preset, field, ORACLE_TRUNC);
                for n in 0..=3 {
                    for m in 0..=3 {
                        let w = 2;
                        let e = BasisEnumerator::new(&p, n, m, w);
                        let report = basis_rank(&o, &p, &e)?;
                        let formula = basis_count_formula(&p, n, m, w);
                        let mut ok = report.full() && report.count == formula && e.len() == formula;
                        let window = (o.space.window(w).end as u128).pow(n as u32);
                        if ok && report.method == RankMethod::Certificate && report.count * window <= ELIMINATION_LIMIT / 4 {
                            let ds: Vec<_> = e.iter().collect();
                            ok = elimination_rank(&o, &p, &ds)? == report.count;
                            eliminated += 1;
                        }
                        if !ok {
                            return Ok(Outcome::fail(
                                format!("{preset} {field:?} {n}->{m}: rank {} count {} formula {formula}", report.rank, report.count),
                                json!({ "preset": preset.name(), "field": field.name(), "n": n, "m": m,
                                        "rank": report.rank.to_string(), "count": report.count.to_string(),
                                        "formula": formula.to_string() }),
                            ));
                        }
                        total += report.count;
                    }
                }
            }
        }
        Ok(Outcome::pass(format!(
            "{total} diagrams independent (N={ORACLE_TRUNC}, weight ≤ 2); {eliminated} cases also by elimination"
        )))
    })
}

// ---- 3. associativity and interchange --------------------------------

const PRESETS_3: [Preset; 4] = [Preset::JACOBSON, Preset::Leavitt { loops: 3 }, Preset::Leavitt { loops: 4 }, Preset::QuiverExample1];

fn sign_law(p: &Presentation, g: &Morphism, f2: &Morphism) -> Scalar {
    match (p.degree_of(g), p.degree_of(f2)) {
        (Degree::Homogeneous(a), Degree::Homogeneous(b)) => p.field.sign((a * b).rem_euclid(2) == 1),
        _ => Scalar::from_integer(1.into()),
    }
}

pub fn criterion_associativity(seed: u64, trials: usize) -> CriterionResult {
    timed(3, "associativity & interchange", Some(Duration::from_secs(60)), || {
        let mut rng = rng_for(seed, 3);
        let mut checks = 0usize;
        for preset in PRESETS_3 {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                let mut s = Sampler::new(&p, 2);
                for _ in 0..trials {
                    let a: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=2)).collect();
                    let f = s.morphism(&mut rng, a[2], a[3], 2, 3);
                    let g = s.morphism(&mut rng, a[1], a[2], 2, 3);
                    let h = s.morphism(&mut rng, a[0], a[1], 2, 3);
                    let left = p.compose(&p.compose(&f, &g)?, &h)?;
                    let right = p.compose(&f, &p.compose(&g, &h)?)?;
                    let alt = p.compose_with(&p.compose_with(&f, &g, FusionOrder::RightToLeft)?, &h, FusionOrder::RightToLeft)?;
                    let t1 = p.tensor(&p.tensor(&f, &g)?, &h)?;
                    let t2 = p.tensor(&f, &p.tensor(&g, &h)?)?;
                    if left != right || left != alt || t1 != t2 {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?}: associativity"),
                            witness_morphisms(&p, &[("f", &f), ("g", &g), ("h", &h)]),
                        ));
                    }
                    // (f⊗g)∘(f'⊗g') = (-1)^{|g||f'|} (f∘f')⊗(g∘g')
                    let b: Vec<usize> = (0..6).map(|_| rng.gen_range(0..=2)).collect();
                    let f1 = s.morphism(&mut rng, b[0], b[1], 2, 2);
                    let f2 = s.homogeneous(&mut rng, b[2], b[0], 2);
                    let g1 = s.homogeneous(&mut rng, b[3], b[4], 2);
                    let g2 = s.morphism(&mut rng, b[5], b[3], 2, 2);
                    let lhs = p.compose(&p.tensor(&f1, &g1)?, &p.tensor(&f2, &g2)?)?;
                    let rhs = p.scale(
                        &sign_law(&p, &g1, &f2),
                        &p.tensor(&p.compose(&f1, &f2)?, &p.compose(&g1, &g2)?)?,
                    );
                    if lhs != rhs {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?}: interchange"),
                            witness_morphisms(&p, &[("f", &f1), ("f_prime", &f2), ("g", &g1), ("g_prime", &g2)]),
                        ));
                    }
                    checks += 2;
                }
            }
        }
        Ok(Outcome::pass(format!("{checks} random triples and quadruples, seed {seed}")))
    })
}

// ---- 4. ideal filtration ---------------------------------------------

pub fn criterion_ideals(seed: u64, trials: usize) -> CriterionResult {
    timed(4, "ideal filtration", None, || {
        let mut rng = rng_for(seed, 4);
        let mut products = 0;
        for preset in [Preset::JACOBSON, leavitt(3), Preset::QuiverExample1] {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                let mut s = Sampler::new(&p, 2);
                for _ in 0..trials {
                    let k = rng.gen_range(1..=3);
                    let (l1, l2) = (rng.gen_range(0..=k), rng.gen_range(0..=k));
                    let f = s.morphism(&mut rng, k, k, 3, l1);
                    let g = s.morphism(&mut rng, k, k, 3, l2);
                    let bound = l1.min(l2) as i64;
                    let fg = p.compose(&f, &g)?;
                    let gf = p.compose(&g, &f)?;
                    if !(views::in_ideal(&f, l1 as i64)? && views::in_ideal(&fg, bound)? && views::in_ideal(&gf, bound)?) {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?}: product left J_{{{bound},{k}}}"),
                            witness_morphisms(&p, &[("f", &f), ("g", &g)]),
                        ));
                    }
                    products += 2;
                }
            }
        }
        Ok(Outcome::pass(format!("{products} products stay in J_{{min(l1,l2),k}}, k ≤ 3, seed {seed}")))
    })
}

// ---- 5. matrix units ---------------------------------------------------

pub fn criterion_matrix_units() -> CriterionResult {
    timed(5, "matrix units", Some(Duration::from_secs(1)), || {
        let mut checks = 0;
        for field in [Field::Gf2, Field::Rational] {
            let p = pres(Preset::JACOBSON, field);
            let d = match p.preset {
                Preset::JacobsonDg { x_degree } => x_degree,
                _ => unreachable!(),
            };
            for i in 0..=5u32 {
                for j in 0..=5u32 {
                    let eij = views::matrix_unit(&p, i, j)?;
                    if p.degree_of(&eij) != Degree::Homogeneous((i as i64 - j as i64) * d) {
                        return Ok(Outcome::fail(format!("deg e_{i}{j}"), witness_morphisms(&p, &[("e", &eij)])));
                    }
                    for k in 0..=5u32 {
                        for l in 0..=5u32 {
                            let ekl = views::matrix_unit(&p, k, l)?;
                            let prod = p.compose(&eij, &ekl)?;
                            let want = if j == k { views::matrix_unit(&p, i, l)? } else { Morphism::zero(1, 1) };
                            if prod != want {
                                return Ok(Outcome::fail(
                                    format!("e_{i}{j} e_{k}{l}"),
                                    witness_morphisms(&p, &[("left", &eij), ("right", &ekl), ("product", &prod)]),
                                ));
                            }
                            checks += 1;
                        }
                    }
                }
            }
        }
        Ok(Outcome::pass(format!("{checks} products and all degrees, indices ≤ 5")))
    })
}

// ---- 6. L_k -------------------------------------------------------------

pub fn criterion_lk(seed: u64, trials: usize) -> CriterionResult {
    timed(6, "L_k structure", None, || {
        let mut rng = rng_for(seed, 6);
        let mut pairs = 0;
        for preset in [Preset::JACOBSON, leavitt(3)] {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                let mut s = Sampler::new(&p, 2);
                for _ in 0..trials {
                    let k = rng.gen_range(1..=3);
                    let f = s.morphism(&mut rng, k, k, 3, k);
                    let g = s.morphism(&mut rng, k, k, 3, k);
                    let whole = views::project_lk(&p.compose(&f, &g)?)?;
                    let parts = views::lk_multiply(&p, &views::project_lk(&f)?, &views::project_lk(&g)?)?;
                    if whole != parts {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?}: L_{k} product not well defined"),
                            witness_morphisms(&p, &[("f", &f), ("g", &g)]),
                        ));
                    }
                    pairs += 1;
                }
            }
        }
        let mut monomials = 0;
        for field in [Field::Gf2, Field::Rational] {
            let p = pres(Preset::JACOBSON, field);
            for k in 1..=3usize {
                let words: Vec<views::SkewWord> = (0..5usize.pow(k as u32))
                    .map(|mut c| {
                        views::SkewWord(
                            (0..k)
                                .map(|_| {
                                    let e = (c % 5) as i64 - 2;
                                    c /= 5;
                                    e
                                })
                                .collect(),
                        )
                    })
                    .collect();
                let lifted: Vec<_> = words
                    .iter()
                    .map(|w| views::skew_to_lk(&p, k, &crate::scalar::LinComb::unit(w.clone())))
                    .collect::<Result<_>>()?;
                for (w, l) in words.iter().zip(&lifted) {
                    if views::lk_to_skew(&p, l)? != crate::scalar::LinComb::unit(w.clone()) {
                        return Ok(Outcome::fail(format!("skew map not bijective at {:?}", w.0), json!({ "word": w.0 })));
                    }
                }
                for (u, lu) in words.iter().zip(&lifted) {
                    for (v, lv) in words.iter().zip(&lifted) {
                        let via_diagrams = views::lk_to_skew(&p, &views::lk_multiply(&p, lu, lv)?)?;
                        let (odd, uv) = views::skew_multiply(u, v)?;
                        let want = crate::scalar::LinComb::single(uv, p.field.sign(odd));
                        if via_diagrams != want {
                            return Ok(Outcome::fail(
                                format!("{field:?}: skew product of {:?} and {:?}", u.0, v.0),
                                json!({ "u": u.0, "v": v.0, "field": field.name() }),
                            ));
                        }
                        monomials += 1;
                    }
                }
            }
        }
        let mut shifts = Vec::new();
        for k in 1..=3 {
            for i in if k == 1 { vec![1] } else { vec![1, k] } {
                let r = views::shift_check(&pres(Preset::JACOBSON, Field::Rational), k, i, 2)?;
                if !r.bijective || r.degree_shift != Some(1) {
                    return Ok(Outcome::fail(format!("shift by a_{i} on L_{k}"), serde_json::to_value(&r)?));
                }
                shifts.push(format!("k{k}/a{i}"));
            }
        }
        Ok(Outcome::pass(format!(
            "{pairs} random pairs well defined; {monomials} monomial products; shifts {} bijective of degree +1",
            shifts.join(",")
        )))
    })
}

// ---- 7. P(L_k) ---------------------------------------------------------

pub fn criterion_plk() -> CriterionResult {
    timed(7, "P(L_k)", None, || {
        let mut paths = 0;
        for field in [Field::Gf2, Field::Rational] {
            let p = pres(Preset::JACOBSON, field);
            for k in 1..=3 {
                for n in 1..=3 {
                    let c = views::build_plk(k, n)?;
                    let r = views::check_d_squared(&p, &c)?;
                    if !r.holds {
                        return Ok(Outcome::fail(format!("d^2 != 0 for k={k}, N={n}"), serde_json::to_value(&r)?));
                    }
                    paths += r.paths;
                }
            }
        }
        let mut dims = Vec::new();
        for (w, n, want) in [(0u32, 2u32, 1usize), (1, 4, 3), (2, 8, 5)] {
            for field in [Field::Gf2, Field::Rational] {
                let r = views::homology_check_k1(&pres(Preset::JACOBSON, field), n, w)?;
                if !r.holds() || r.cokernel_dim != want {
                    return Ok(Outcome::fail(format!("homology W={w} N={n}"), serde_json::to_value(&r)?));
                }
            }
            dims.push(want.to_string());
        }
        Ok(Outcome::pass(format!(
            "d^2 = 0 on {paths} paths (k,N ≤ 3); k=1 injective with cokernel dims {}",
            dims.join(",")
        )))
    })
}

// ---- 8. isomorphism pairs ----------------------------------------------

pub fn criterion_iso() -> CriterionResult {
    timed(8, "isomorphism pairs", None, || {
        let mut done = Vec::new();
        for preset in [Preset::JACOBSON, leavitt(3), leavitt(4), leavitt(5), Preset::QuiverExample1] {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                for k in 1..=3 {
                    let r = verify_iso_pair(&p, k)?;
                    if !r.holds() {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?} k={k}"),
                            json!({ "preset": preset.name(), "field": field.name(), "report": r }),
                        ));
                    }
                }
            }
            done.push(preset.name());
        }
        Ok(Outcome::pass(format!("k ≤ 3, both fields: {}", done.join(", "))))
    })
}

// ---- 9. K0 ledger --------------------------------------------------------

pub fn criterion_k0() -> CriterionResult {
    timed(9, "K0 ledger", Some(Duration::from_secs(1)), || {
        let half = Scalar::new(1.into(), 2.into());
        let cases = [
            (Preset::JACOBSON, half.clone()),
            (leavitt(3), -half),
            (leavitt(4), Scalar::new((-1).into(), 3.into())),
            (leavitt(5), Scalar::new((-1).into(), 4.into())),
        ];
        for (preset, base) in cases {
            let p = pres(preset, preset.default_field());
            for k in 0..=10u32 {
                let got = k0_class_of_power(&p, k)?;
                let want = num_traits::pow(base.clone(), k as usize);
                if got.0 != want {
                    return Ok(Outcome::fail(
                        format!("{preset} k={k}: {got}"),
                        json!({ "preset": preset.name(), "k": k, "got": got.to_string() }),
                    ));
                }
            }
        }
        let collapse = matches!(
            ledger_reduce(&parse_relation("x = x + 1")?, "x"),
            Err(crate::error::Error::Collapse)
        );
        if !collapse {
            return Ok(Outcome::fail("x = x + 1 did not collapse", json!({ "relation": "x = x + 1" })));
        }
        Ok(Outcome::pass("2^-k, (-1/2)^k, (-1/3)^k, (-1/4)^k for k ≤ 10; x = x + 1 collapses"))
    })
}

// ---- 10. parser ----------------------------------------------------------

/// Precedence fixtures: source text and the tree it must parse to.
pub fn precedence_fixtures() -> Vec<(&'static str, GenExpr)> {
    let g = GenExpr::gen;
    vec![
        ("y.x", GenExpr::compose(g("y"), g("x"))),
        ("a . b * c", GenExpr::tensor(GenExpr::compose(g("a"), g("b")), g("c"))),
        (
            "x*id(1) . id(1)*x",
            GenExpr::tensor(GenExpr::tensor(g("x"), GenExpr::compose(GenExpr::Id(1), GenExpr::Id(1))), g("x")),
        ),
        (
            "(x*id(1)) . (id(1)*x)",
            GenExpr::compose(GenExpr::tensor(g("x"), GenExpr::Id(1)), GenExpr::tensor(GenExpr::Id(1), g("x"))),
        ),
        ("a + b * c", GenExpr::sum(g("a"), GenExpr::tensor(g("b"), g("c")))),
        ("x.y + z.z^*", GenExpr::sum(GenExpr::compose(g("x"), g("y")), GenExpr::compose(g("z"), g("z^*")))),
        ("z* . x", GenExpr::compose(g("z^*"), g("x"))),
        ("z * x", GenExpr::tensor(g("z"), g("x"))),
        ("x^3", GenExpr::compose_chain(vec![g("x"), g("x"), g("x")])),
        ("-x + y", GenExpr::sum(GenExpr::scale(Scalar::from_integer((-1).into()), g("x")), g("y"))),
        ("2*x . y", GenExpr::compose(GenExpr::scale(Scalar::from_integer(2.into()), g("x")), g("y"))),
        ("1_X * 1_1", GenExpr::tensor(GenExpr::Id(1), GenExpr::Id(0))),
    ]
}

pub fn criterion_parser(seed: u64, per_preset: usize) -> CriterionResult {
    timed(10, "parser round trip", None, || {
        for (src, want) in precedence_fixtures() {
            let got = parse(src)?;
            if got != want {
                return Ok(Outcome::fail(
                    format!("`{src}` parsed as {got}"),
                    json!({ "source": src, "parsed": got.to_string(), "expected": want.to_string() }),
                ));
            }
        }
        let mut rng = rng_for(seed, 10);
        let mut corpus = 0;
        for preset in PRESETS_3 {
            for field in [Field::Gf2, Field::Rational] {
                let p = pres(preset, field);
                let mut items: Vec<Morphism> = Vec::new();
                for n in 0..=2 {
                    for m in 0..=2 {
                        items.extend(enumerate_basis(&p, n, m, 1, None).into_iter().map(Morphism::from_diagram));
                    }
                }
                let mut s = Sampler::new(&p, 2);
                for _ in 0..per_preset {
                    let (n, m) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
                    items.push(s.morphism(&mut rng, n, m, 4, 3));
                }
                for (lhs, _) in relations(preset) {
                    items.push(crate::expr::eval(&p, &parse(&lhs)?)?);
                }
                for m in &items {
                    let text = print(&p, m);
                    let back = eval_with_arity(&p, &parse(&text)?, m.n, m.m)?;
                    let json_text = interchange::to_string(&p, m);
                    let (p2, m2) = interchange::from_str(&json_text)?;
                    if back != *m || m2 != *m || p2 != p || interchange::to_string(&p2, &m2) != json_text {
                        return Ok(Outcome::fail(
                            format!("{preset} {field:?}: `{text}` does not round-trip"),
                            witness_morphisms(&p, &[("morphism", m), ("reparsed", &back)]),
                        ));
                    }
                }
                corpus += items.len();
            }
        }
        Ok(Outcome::pass(format!(
            "{} precedence fixtures; {corpus} morphisms round-trip through text and JSON",
            precedence_fixtures().len()
        )))
    })
}

// ---- 11. Example 1 counts ----------------------------------------------

pub fn criterion_counts() -> CriterionResult {
    timed(11, "quiver hom dimensions", None, || {
        let p = pres(Preset::QuiverExample1, Field::Rational);
        for n in 0..=4 {
            for m in 0..=4 {
                let enumerated = enumerate_basis(&p, n, m, 0, None).len() as u128;
                let want = binomial((n + m) as u64, n as u64);
                if enumerated != want || count_partial_bijections(n, m) != want {
                    return Ok(Outcome::fail(
                        format!("{n}->{m}: enumerated {enumerated}, C(n+m,n) = {want}"),
                        json!({ "n": n, "m": m, "enumerated": enumerated.to_string(), "binomial": want.to_string() }),
                    ));
                }
            }
        }
        Ok(Outcome::pass("dim Hom(X^n, X^m) = C(n+m, n) for n, m ≤ 4"))
    })
}

/// Runs all criteria in order.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    vec![
        criterion_relations(),
        criterion_basis(),
        criterion_associativity(seed, 1000),
        criterion_ideals(seed, 100),
        criterion_matrix_units(),
        criterion_lk(seed, 130),
        criterion_plk(),
        criterion_iso(),
        criterion_k0(),
        criterion_parser(seed, 150),
        criterion_counts(),
    ]
}
