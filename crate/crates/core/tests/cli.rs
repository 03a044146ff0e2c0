use heisenberg_zeta::cli;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hzeta").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn text(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let v: Value = serde_json::from_str(&text(&all)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn classify() {
    assert_eq!(text(&["classify", "--d", "2", "--pmax", "7"]), "2 Ramified\n3 Inert\n5 Inert\n7 Split\n");
    assert_eq!(text(&["classify", "--d", "-1", "--pmax", "5"]), "2 Ramified\n3 Inert\n5 Split\n");
    assert_eq!(
        text(&["classify", "--d", "-1", "--pmax", "5", "--output", "csv"]),
        "p,class\n2,Ramified\n3,Inert\n5,Split\n"
    );
    let (code, out, err) = run(&["classify", "--d", "12", "--pmax", "7"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("NotSquareFree"));
}

#[test]
fn count_and_series() {
    assert_eq!(text(&["count", "--d", "2", "--p", "7", "--n", "1"]), "12\n");
    assert_eq!(text(&["count", "--d", "2", "--p", "5", "--n", "0"]), "1\n");
    assert_eq!(text(&["series", "--d", "2", "--nmax", "5"]), "1,1,0,2,0\n");
    let v = json(&["count", "--d", "2", "--p", "7", "--n", "1"]);
    assert_eq!(v["count"], "12");
    assert_eq!(v["enumerated"], "12");
    assert_eq!(run(&["count", "--d", "2", "--p", "4", "--n", "1"]).0, 2);
}

#[test]
fn build() {
    let v = json(&["build", "--d", "2", "--p", "2", "--n", "1"]);
    let reps = v["representations"].as_array().unwrap();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0]["relations_ok"], true);
    assert_eq!(reps[0]["irreducible_ok"], true);
    assert_eq!(reps[0]["generators"]["y"]["perm"], serde_json::json!(["1", "0"]));
    let v = json(&["build", "--d", "2", "--p", "5", "--n", "1"]);
    assert_eq!(v["representations"], serde_json::json!([]));
    let (code, _, err) = run(&["build", "--d", "2", "--p", "5", "--n", "2", "--index", "24"]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"));
    assert!(text(&["build", "--d", "2", "--p", "5", "--n", "2", "--index", "23"]).starts_with("#23 dim 25"));
}

#[test]
fn zeta() {
    assert_eq!(text(&["zeta", "--d", "2", "--p", "5"]), "(1 - T^2)/(1 - P^2*T^2)\n");
    assert_eq!(text(&["zeta", "--d", "2", "--check-identity", "--nmax", "200"]), "OK\n");
    assert_eq!(text(&["zeta", "--d", "2", "--p", "2", "--feq"]), "exponent 1\n");
    assert_eq!(text(&["zeta", "--d", "2", "--p", "7", "--feq"]), "exponent 2\n");
    let csv = text(&["zeta", "--d", "-1", "--check-identity", "--nmax", "4", "--output", "csv"]);
    assert_eq!(csv, "n,r_n,b_n\n1,1,1\n2,1,1\n3,0,0\n4,2,2\n");
    assert_eq!(run(&["zeta", "--d", "2"]).0, 2);
}

#[test]
fn oracle() {
    let v = json(&["oracle", "--d", "2", "--p", "2", "--k", "1", "--n", "1"]);
    assert_eq!((&v["oracle"], &v["formula"], &v["agree"]), (&"1".into(), &"1".into(), &true.into()));
    let v = json(&["oracle", "--d", "2", "--p", "7", "--k", "1", "--n", "1"]);
    assert_eq!((&v["oracle"], &v["formula"], &v["agree"]), (&"12".into(), &"12".into(), &true.into()));
    let (code, _, err) = run(&["oracle", "--d", "2", "--p", "11", "--k", "1", "--n", "1"]);
    assert_eq!(code, 3);
    assert!(err.contains("TooLarge"));
    assert_eq!(run(&["oracle", "--d", "2", "--p", "7", "--k", "1", "--n", "2"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "--d", "-1", "--p", "2", "--k", "2", "--output", "json"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["count", "--d", "2"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
