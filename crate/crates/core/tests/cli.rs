use std::process::{Command, Output};

use serde_json::Value;

fn arcdiag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcdiag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = arcdiag(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

#[test]
fn eval_prints_normal_form() {
    let o = arcdiag(&["eval", "y.x", "--preset", "jacobson-dg"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1_X");
    let o = arcdiag(&["eval", "x1^*.x2", "--preset", "leavitt:3"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn count_pb() {
    let o = arcdiag(&["count-pb", "--n", "2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(arcdiag(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(arcdiag(&["eval", "x_1"]).status.code(), Some(2));
    assert_eq!(arcdiag(&["eval", "x", "--preset", "leavitt:0"]).status.code(), Some(2));
    assert_eq!(arcdiag(&["eval", "x.z"]).status.code(), Some(0));
    assert_eq!(arcdiag(&["eval", "z.x"]).status.code(), Some(2));
}

#[test]
fn term_cap_exits_two() {
    let o = Command::new(env!("CARGO_BIN_EXE_arcdiag"))
        .args(["eval", "x + y + 1_X + z.z^*"])
        .env("ARCDIAG_MAX_TERMS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ARCDIAG_MAX_TERMS"));
}

#[test]
fn compose_files() {
    let dir = std::env::temp_dir().join(format!("arcdiag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, expr: &str| {
        let path = dir.join(name);
        let o = arcdiag(&["normal-form", expr, "--field", "q"]);
        std::fs::write(&path, o.stdout).unwrap();
        path.to_str().unwrap().to_string()
    };
    let y = write("y.json", "y");
    let x = write("x.json", "x");
    let (code, r) = report(&["compose", &y, &x]);
    assert_eq!(code, 0);
    assert_eq!(r["params"]["normal_form"], "1_X");
    assert_eq!(r["value"]["terms"].as_array().unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_deterministic() {
    let args = ["ideal-check", "--preset", "leavitt:3", "--k", "2", "--trials", "40", "--seed", "7"];
    let (c1, mut a) = report(&args);
    let (c2, mut b) = report(&args);
    assert_eq!((c1, c2), (0, 0));
    a["wall_time_ms"] = Value::Null;
    b["wall_time_ms"] = Value::Null;
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a["outcome"], "pass");
    assert_eq!(a["seed"], 7);
}

#[test]
fn k0_reports() {
    let (code, r) = report(&["k0", "--power", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["value"]["class"], "1/8");
    let (_, r) = report(&["k0", "--preset", "leavitt:4", "--power", "2"]);
    assert_eq!(r["value"]["class"], "1/9");
    let (code, r) = report(&["k0", "--preset", "quiver-example1"]);
    assert_eq!(code, 0);
    assert!(r["value"]["class"].is_null());
}

#[test]
fn lk_and_plk() {
    let (code, r) = report(&["lk", "skew", "0,1", "1,0", "--field", "q"]);
    assert_eq!(code, 0);
    assert_eq!(r["value"]["diagrams"], "-1 a1 a2");
    let (_, r) = report(&["lk", "mul", "--k", "1", "x", "y"]);
    assert_eq!(r["value"]["product"], "1_X");
    let (code, r) = report(&["plk", "--k", "3", "--max-index", "2"]);
    assert_eq!((code, &r["outcome"]), (0, &Value::from("pass")));
    let (_, r) = report(&["plk", "--k", "1", "--max-index", "8", "--homology", "--w", "2"]);
    assert_eq!(r["value"]["cokernel_dim"], 5);
}

#[test]
fn basis_listing() {
    let (_, r) = report(&["basis", "--n", "1", "--m", "1", "--max-weight", "0", "--deg-min", "0", "--deg-max", "0"]);
    assert_eq!(r["value"]["count"], 2);
    let (_, r) = report(&["basis", "--preset", "quiver-example1", "--n", "2", "--m", "2"]);
    assert_eq!(r["value"]["count"], 6);
}

#[test]
fn oracle_check_passes() {
    let (code, r) = report(&["oracle", "check", "--preset", "leavitt:3", "--n", "2", "--m", "1", "--trials", "10"]);
    assert_eq!(code, 0, "{r}");
    for check in ["basis_rank", "relations", "composition", "tensor"] {
        assert_eq!(r["value"][check]["passed"], true, "{check}");
    }
}

#[test]
fn verify_all() {
    let (code, r) = report(&["verify", "all", "--preset", "leavitt:3", "--field", "q"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["value"].as_array().unwrap().len(), 11);
    assert!(r["witnesses"].as_array().unwrap().is_empty());
}
