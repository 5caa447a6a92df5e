//! Command-line front end. [`run`] parses arguments, dispatches, writes
//! the human or JSON report and returns the exit code.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{count_partial_bijections, enumerate_basis, BasisEnumerator};
use crate::diagram::Morphism;
use crate::error::{Error, Result};
use crate::expr::{eval, eval_with_arity, print};
use crate::independence::basis_rank;
use crate::interchange;
use crate::k0::{k0_class_of_power, ledger_relation, verify_iso_pair};
use crate::oracle::{Oracle, OracleOperator};
use crate::parser::parse;
use crate::presentation::Presentation;
use crate::sample::Sampler;
use crate::scalar::{format_scalar, LinComb};
use crate::verify::{self, basis_count_formula, check_relation, relations, DEFAULT_SEED};
use crate::views::{self, SkewWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "arcdiag", version, about = "Normal forms and verification for arc-diagram categories")]
pub struct Cli {
    /// jacobson-dg, jacobson-dg:<odd d>, leavitt:<L> or quiver-example1
    #[arg(long, global = true, default_value = "jacobson-dg")]
    pub preset: String,
    /// gf2 or q (default depends on the preset)
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression to normal form and print it as an expression
    Eval(ExprArgs),
    /// Evaluate an expression and print its normal form in the interchange format
    NormalForm(ExprArgs),
    /// Compose two morphism files: UPPER ∘ LOWER
    Compose { upper: PathBuf, lower: PathBuf },
    /// List basis diagrams X^n -> X^m
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        max_weight: usize,
        #[arg(long, allow_negative_numbers = true)]
        deg_min: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        deg_max: Option<i64>,
    },
    /// Number of partial bijections between n and m points
    CountPb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Random products against the long-strand filtration
    IdealCheck {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        max_weight: usize,
    },
    /// The rings L_k
    Lk {
        #[command(subcommand)]
        op: LkOp,
    },
    /// The complex P(L_k)
    Plk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_index: u32,
        /// Check d^2 = 0 (default when neither flag is given)
        #[arg(long)]
        d2: bool,
        /// Check injectivity and the cokernel for k = 1
        #[arg(long)]
        homology: bool,
        /// Label weight bound for --homology
        #[arg(long, default_value_t = 1)]
        w: u32,
    },
    /// Compare the engine with the operator model
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Class of X^k in the Grothendieck ring
    K0 {
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Run checks
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
}

#[derive(Args, Debug)]
pub struct ExprArgs {
    pub expr: String,
    /// Source arity, needed when the expression is `0`
    #[arg(long)]
    pub n: Option<usize>,
    /// Target arity, needed when the expression is `0`
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum LkOp {
    /// Product in L_k of the projections of two endomorphisms of X^k
    Mul {
        #[arg(long)]
        k: usize,
        left: String,
        right: String,
    },
    /// Product of two skew monomials, computed in L_k and in the skew ring
    Skew {
        /// Exponents, comma separated, e.g. `1,-2`
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleOp {
    Check {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        max_weight: usize,
        #[arg(long, default_value_t = verify::ORACLE_TRUNC)]
        trunc: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyOp {
    /// The full acceptance suite
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Value,
}

/// Machine-readable result of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub preset: String,
    pub field: String,
    pub seed: u64,
    pub params: Value,
    pub outcome: Status,
    pub value: Value,
    pub witnesses: Vec<Value>,
    pub wall_time_ms: u128,
    #[serde(skip)]
    text: String,
}

impl Report {
    fn new(command: &str, pres: &Presentation, seed: u64, params: Value) -> Self {
        Report {
            command: command.to_string(),
            preset: pres.preset.name(),
            field: pres.field.name().to_string(),
            seed,
            params,
            outcome: Status::Value,
            value: Value::Null,
            witnesses: vec![],
            wall_time_ms: 0,
            text: String::new(),
        }
    }

    fn value(mut self, value: Value, text: impl Into<String>) -> Self {
        self.value = value;
        self.text = text.into();
        self
    }

    fn check(mut self, passed: bool, value: Value, text: impl Into<String>) -> Self {
        self.outcome = if passed { Status::Pass } else { Status::Fail };
        self.value = value;
        self.text = text.into();
        self
    }

    fn exit_code(&self) -> i32 {
        if self.outcome == Status::Fail {
            EXIT_FAIL
        } else {
            EXIT_OK
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its report to `out`, errors to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(mut report) => {
            report.wall_time_ms = start.elapsed().as_millis();
            if cli.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                let _ = writeln!(out, "{}", report.text);
                if !report.witnesses.is_empty() {
                    for w in &report.witnesses {
                        let _ = writeln!(err, "witness: {w}");
                    }
                }
            }
            report.exit_code()
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn morphism_json(pres: &Presentation, m: &Morphism) -> Value {
    serde_json::to_value(interchange::to_json(pres, m)).expect("serializable")
}

fn eval_args(pres: &Presentation, a: &ExprArgs) -> Result<Morphism> {
    let e = parse(&a.expr)?;
    match (a.n, a.m) {
        (Some(n), Some(m)) => eval_with_arity(pres, &e, n, m),
        (None, None) => eval(pres, &e),
        _ => Err(Error::InvalidArgument("give both --n and --m or neither".into())),
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let pres = Presentation::from_names(&cli.preset, cli.field.as_deref())?;
    let seed = cli.seed;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match &cli.command {
        Command::Eval(a) => {
            let m = eval_args(&pres, a)?;
            let text = print(&pres, &m);
            Ok(Report::new("eval", &pres, seed, json!({ "expr": a.expr }))
                .value(json!({ "normal_form": text, "morphism": morphism_json(&pres, &m) }), text))
        }
        Command::NormalForm(a) => {
            let m = eval_args(&pres, a)?;
            Ok(Report::new("normal-form", &pres, seed, json!({ "expr": a.expr }))
                .value(morphism_json(&pres, &m), interchange::to_string(&pres, &m)))
        }
        Command::Compose { upper, lower } => {
            let (pu, u) = interchange::from_str(&std::fs::read_to_string(upper)?)?;
            let (pl, l) = interchange::from_str(&std::fs::read_to_string(lower)?)?;
            if pu != pl {
                return Err(Error::InvalidArgument(format!(
                    "files use different presentations: {} {} and {} {}",
                    pu.preset, pu.field, pl.preset, pl.field
                )));
            }
            let c = pu.compose(&u, &l)?;
            let params = json!({ "upper": upper.display().to_string(), "lower": lower.display().to_string() });
            let mut r = Report::new("compose", &pu, seed, params)
                .value(morphism_json(&pu, &c), interchange::to_string(&pu, &c));
            r.params["normal_form"] = Value::from(print(&pu, &c));
            Ok(r)
        }
        Command::Basis {
            n,
            m,
            max_weight,
            deg_min,
            deg_max,
        } => {
            let window = match (deg_min, deg_max) {
                (None, None) => None,
                (lo, hi) => Some((lo.unwrap_or(i64::MIN), hi.unwrap_or(i64::MAX))),
            };
            let total = BasisEnumerator::new(&pres, *n, *m, *max_weight).len();
            if total > crate::diagram::max_terms() as u128 {
                return Err(Error::TermLimit {
                    count: usize::try_from(total).unwrap_or(usize::MAX),
                    limit: crate::diagram::max_terms(),
                });
            }
            let ds = enumerate_basis(&pres, *n, *m, *max_weight, window);
            let lines: Vec<String> = ds
                .iter()
                .map(|d| format!("{:>4}  {}", pres.diagram_degree(d), print(&pres, &Morphism::from_diagram(d.clone()))))
                .collect();
            let text = format!("{} diagrams\n{}", ds.len(), lines.join("\n"));
            let value = json!({
                "count": ds.len(),
                "diagrams": ds.iter().map(|d| json!({
                    "degree": pres.diagram_degree(d),
                    "expr": print(&pres, &Morphism::from_diagram(d.clone())),
                })).collect::<Vec<_>>(),
            });
            let params = json!({ "n": n, "m": m, "max_weight": max_weight, "deg_min": deg_min, "deg_max": deg_max });
            Ok(Report::new("basis", &pres, seed, params).value(value, text))
        }
        Command::CountPb { n, m } => {
            let c = count_partial_bijections(*n, *m);
            Ok(Report::new("count-pb", &pres, seed, json!({ "n": n, "m": m }))
                .value(Value::from(c.to_string()), c.to_string()))
        }
        Command::IdealCheck { k, trials, max_weight } => ideal_check(&pres, seed, &mut rng, *k, *trials, *max_weight),
        Command::Lk { op } => match op {
            LkOp::Mul { k, left, right } => {
                let a = eval_with_arity(&pres, &parse(left)?, *k, *k)?;
                let b = eval_with_arity(&pres, &parse(right)?, *k, *k)?;
                let prod = views::lk_multiply(&pres, &views::project_lk(&a)?, &views::project_lk(&b)?)?;
                let lifted = views::lk_lift(&prod);
                let text = print(&pres, &lifted);
                let params = json!({ "k": k, "left": left, "right": right });
                Ok(Report::new("lk mul", &pres, seed, params)
                    .value(json!({ "product": text, "morphism": morphism_json(&pres, &lifted) }), text))
            }
            LkOp::Skew { left, right } => lk_skew(&pres, seed, left, right),
        },
        Command::Plk {
            k,
            max_index,
            d2,
            homology,
            w,
        } => {
            let params = json!({ "k": k, "max_index": max_index, "d2": d2, "homology": homology, "w": w });
            if *homology {
                if *k != 1 {
                    return Err(Error::InvalidArgument("--homology is available for k = 1 only".into()));
                }
                let r = views::homology_check_k1(&pres, *max_index, *w)?;
                let text = format!(
                    "injective: {}; cokernel dimension {} (expected {})",
                    r.injective, r.cokernel_dim, r.expected_cokernel
                );
                let mut rep = Report::new("plk", &pres, seed, params).check(r.holds(), serde_json::to_value(&r)?, text);
                if !r.holds() {
                    rep.witnesses.push(serde_json::to_value(&r)?);
                }
                Ok(rep)
            } else {
                let c = views::build_plk(*k, *max_index)?;
                let r = views::check_d_squared(&pres, &c)?;
                let text = format!("d^2 = 0: {} ({} terms, {} paths)", r.holds, c.terms.len(), r.paths);
                let mut rep = Report::new("plk", &pres, seed, params).check(r.holds, serde_json::to_value(&r)?, text);
                if let Some(w) = r.witness {
                    rep.witnesses.push(json!({ "term": w.0, "r": w.1, "r_prime": w.2 }));
                }
                Ok(rep)
            }
        }
        Command::Oracle {
            op:
                OracleOp::Check {
                    n,
                    m,
                    max_weight,
                    trunc,
                    trials,
                },
        } => oracle_check(&pres, seed, &mut rng, *n, *m, *max_weight, *trunc, *trials),
        Command::K0 { power } => k0(&pres, seed, *power),
        Command::Verify { op: VerifyOp::All } => {
            let results = verify::run_all(seed);
            let passed = results.iter().all(|r| r.passed);
            let text = results.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
            let value = json!(results
                .iter()
                .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
                .collect::<Vec<_>>());
            let params = json!({ "scope": "every preset and both fields" });
            let mut rep = Report::new("verify all", &pres, seed, params).check(passed, value, text);
            rep.witnesses = results
                .iter()
                .filter_map(|r| r.witness.clone().map(|w| json!({ "criterion": r.id, "witness": w })))
                .collect();
            Ok(rep)
        }
    }
}

fn ideal_check(
    pres: &Presentation,
    seed: u64,
    rng: &mut ChaCha8Rng,
    k: usize,
    trials: usize,
    max_weight: usize,
) -> Result<Report> {
    let mut s = Sampler::new(pres, max_weight);
    let mut witnesses = Vec::new();
    for _ in 0..trials {
        let (l1, l2) = (rng.gen_range(0..=k), rng.gen_range(0..=k));
        let f = s.morphism(rng, k, k, 3, l1);
        let g = s.morphism(rng, k, k, 3, l2);
        let bound = l1.min(l2) as i64;
        for (name, prod) in [("f.g", pres.compose(&f, &g)?), ("g.f", pres.compose(&g, &f)?)] {
            if !views::in_ideal(&prod, bound)? {
                witnesses.push(json!({
                    "product": name,
                    "bound": bound,
                    "f": morphism_json(pres, &f),
                    "g": morphism_json(pres, &g),
                }));
            }
        }
        if !witnesses.is_empty() {
            break;
        }
    }
    let passed = witnesses.is_empty();
    let text = if passed {
        format!("{} products stay in J_{{min(l,l'),{k}}}", 2 * trials)
    } else {
        "a product left the ideal".to_string()
    };
    let params = json!({ "k": k, "trials": trials, "max_weight": max_weight });
    let mut r = Report::new("ideal-check", pres, seed, params).check(passed, json!({ "products": 2 * trials }), text);
    r.witnesses = witnesses;
    Ok(r)
}

fn parse_exponents(s: &str) -> Result<SkewWord> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("bad exponent list `{s}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(SkewWord)
}

fn skew_text(c: &LinComb<SkewWord>) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.iter()
        .map(|(w, coeff)| {
            let mono: Vec<String> = w
                .0
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(i, e)| if *e == 1 { format!("a{}", i + 1) } else { format!("a{}^{e}", i + 1) })
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join(" ") };
            format!("{} {mono}", format_scalar(coeff))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn lk_skew(pres: &Presentation, seed: u64, left: &str, right: &str) -> Result<Report> {
    let (u, v) = (parse_exponents(left)?, parse_exponents(right)?);
    if u.0.len() != v.0.len() {
        return Err(Error::InvalidArgument("exponent lists differ in length".into()));
    }
    let k = u.0.len();
    let lu = views::skew_to_lk(pres, k, &LinComb::unit(u.clone()))?;
    let lv = views::skew_to_lk(pres, k, &LinComb::unit(v.clone()))?;
    let via_diagrams = views::lk_to_skew(pres, &views::lk_multiply(pres, &lu, &lv)?)?;
    let (odd, uv) = views::skew_multiply(&u, &v)?;
    let in_ring = LinComb::single(uv, pres.field.sign(odd));
    let passed = via_diagrams == in_ring;
    let text = format!("{} (skew ring: {})", skew_text(&via_diagrams), skew_text(&in_ring));
    let value = json!({ "diagrams": skew_text(&via_diagrams), "skew_ring": skew_text(&in_ring) });
    let mut r = Report::new("lk skew", pres, seed, json!({ "left": left, "right": right })).check(passed, value, text);
    if !passed {
        r.witnesses.push(json!({ "left": u.0, "right": v.0 }));
    }
    Ok(r)
}

/// Largest truncation (at most `cap`) whose safe window for `w` keeps
/// `k`-fold tensor inputs below `limit`.
fn functor_trunc(pres: &Presentation, k: usize, w: usize, cap: usize, limit: u64) -> usize {
    (w..=cap)
        .rev()
        .find(|&t| {
            let size = crate::oracle::TruncSpace::new(pres.preset, t).window(w).end;
            size.checked_pow(k as u32).is_some_and(|s| s <= limit)
        })
        .unwrap_or(w)
}

#[allow(clippy::too_many_arguments)]
fn oracle_check(
    pres: &Presentation,
    seed: u64,
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    max_weight: usize,
    trunc: usize,
    trials: usize,
) -> Result<Report> {
    let oracle = Oracle::new(pres.preset, pres.field, trunc);
    let mut checks = serde_json::Map::new();
    let mut witnesses = Vec::new();

    let e = BasisEnumerator::new(pres, n, m, max_weight);
    let rank = basis_rank(&oracle, pres, &e)?;
    let formula = basis_count_formula(pres, n, m, max_weight);
    let rank_ok = rank.full() && rank.count == formula;
    checks.insert("basis_rank".into(), json!({
        "passed": rank_ok, "rank": rank.rank.to_string(), "count": rank.count.to_string(),
        "formula": formula.to_string(), "method": rank.method,
    }));
    if !rank_ok {
        witnesses.push(json!({ "check": "basis_rank", "rank": rank.rank.to_string(), "count": rank.count.to_string() }));
    }

    let mut rel_ok = true;
    for (lhs, rhs) in relations(pres.preset) {
        let (sym, orc) = check_relation(pres, &oracle, &lhs, &rhs)?;
        if !(sym && orc) {
            rel_ok = false;
            witnesses.push(json!({ "check": "relations", "lhs": lhs, "rhs": rhs, "symbolic": sym, "oracle": orc }));
        }
    }
    checks.insert("relations".into(), json!({ "passed": rel_ok, "count": relations(pres.preset).len() }));

    // composition and tensor on random morphisms, on a truncation small
    // enough for pointwise comparison of multi-strand operators
    let w = 2 * max_weight;
    let ft = functor_trunc(pres, n.max(m).max(1), w, trunc, 200_000);
    let small = Oracle::new(pres.preset, pres.field, ft);
    let pt = functor_trunc(pres, 2, max_weight, trunc, 200_000);
    let pair = Oracle::new(pres.preset, pres.field, pt);
    let mut s = Sampler::new(pres, max_weight);
    let (mut comp_ok, mut tensor_ok) = (true, true);
    for _ in 0..trials {
        let lower = s.morphism(rng, n, m, 2, n.min(m));
        let upper = s.morphism(rng, m, n, 2, n.min(m));
        let engine = small.rep_morphism(&pres.compose(&upper, &lower)?)?;
        let model = OracleOperator::compose(small.rep_morphism(&upper)?, small.rep_morphism(&lower)?)?;
        let r = small.equal_on_window(&engine, &model, w)?;
        if !r.equal {
            comp_ok = false;
            witnesses.push(json!({ "check": "composition", "upper": morphism_json(pres, &upper),
                                   "lower": morphism_json(pres, &lower), "input": r.witness }));
            break;
        }
        let (a, b) = (s.morphism(rng, 1, 1, 2, 1), s.morphism(rng, 1, 1, 2, 1));
        let engine = pair.rep_morphism(&pres.tensor(&a, &b)?)?;
        let model = OracleOperator::tensor(pair.rep_morphism(&a)?, pair.rep_morphism(&b)?);
        let r = pair.equal_on_window(&engine, &model, max_weight)?;
        if !r.equal {
            tensor_ok = false;
            witnesses.push(json!({ "check": "tensor", "left": morphism_json(pres, &a),
                                   "right": morphism_json(pres, &b), "input": r.witness }));
            break;
        }
    }
    checks.insert("composition".into(), json!({ "passed": comp_ok, "trials": trials, "trunc": ft }));
    checks.insert("tensor".into(), json!({ "passed": tensor_ok, "trials": trials, "trunc": pt }));

    let passed = rank_ok && rel_ok && comp_ok && tensor_ok;
    let text = checks
        .iter()
        .map(|(k, v)| format!("{k}: {}", if v["passed"] == Value::Bool(true) { "pass" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    let params = json!({ "n": n, "m": m, "max_weight": max_weight, "trunc": trunc, "trials": trials });
    let mut r = Report::new("oracle check", pres, seed, params).check(passed, Value::Object(checks), text);
    r.witnesses = witnesses;
    Ok(r)
}

fn k0(pres: &Presentation, seed: u64, power: u32) -> Result<Report> {
    let mut isos = Vec::new();
    for k in 1..=power.clamp(1, 3) as usize {
        isos.push(verify_iso_pair(pres, k)?);
    }
    let iso_ok = isos.iter().all(|r| r.holds());
    let relation = ledger_relation(pres)?;
    let params = json!({ "power": power });
    let summary: Vec<String> = isos
        .iter()
        .map(|r| format!("k={}: {} slots, {}", r.k, r.slots, if r.holds() { "iso" } else { "NOT iso" }))
        .collect();
    match k0_class_of_power(pres, power) {
        Ok(class) => {
            let text = format!("{class}\nrelation {relation}\n{}", summary.join("\n"));
            let value = json!({ "class": class, "relation": relation.to_string(), "isomorphisms": isos });
            let mut r = Report::new("k0", pres, seed, params).check(iso_ok, value, text);
            if !iso_ok {
                r.witnesses = isos.iter().filter(|r| !r.holds()).map(|r| json!(r)).collect();
            }
            Ok(r)
        }
        Err(Error::Undetermined(why)) => {
            let text = format!("undetermined: {why}\nrelation {relation}\n{}", summary.join("\n"));
            let value = json!({ "class": Value::Null, "undetermined": why, "relation": relation.to_string(), "isomorphisms": isos });
            Ok(Report::new("k0", pres, seed, params).value(value, text))
        }
        Err(e) => Err(e),
    }
}
