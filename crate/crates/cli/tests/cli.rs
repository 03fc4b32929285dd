use msym_cli::{run, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn msym(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("msym").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn kostka_table_text() {
    let (code, out) = msym(&["kostka", "1,0|2"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "3,0|       t^2");
    assert!(lines.contains(&"1,0|2      q^2*t^2 + 1"));
    assert!(lines.contains(&"0,0|1,1,1  q^2"));
}

#[test]
fn hall_littlewood_composition() {
    assert_eq!(msym(&["hl", "0,1"]), (EXIT_OK, "H[0,1] = x2\n".into()));
}

#[test]
fn output_is_deterministic() {
    for args in [&["kostka", "2|1,1"][..], &["P", "1|1", "--json"], &["schur-star", "0,1|1", "--in", "m"]] {
        assert_eq!(msym(args), msym(args));
    }
}

#[test]
fn json_has_schema_and_entries() {
    let (code, out) = msym(&["kostka", "1,0|2", "--json", "--eval", "q=1", "t=1"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "kostka");
    let entries = v["result"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 14);
    let e = entries.iter().find(|e| e["label"] == "0,0|2,1").unwrap();
    assert_eq!(e["text"], "q^2*t + q");
    assert_eq!(e["eval"], "2");
    assert_eq!(e["nonnegative"], true);
}

#[test]
fn eval_appends_values() {
    let (code, out) = msym(&["kostka-comp", "0,1", "1,0", "--eval", "q=1/2", "t=3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "K[0,1, 1,0] = q  [= 1/2]\n");
    let (code, out) = msym(&["e", "1,0", "--eval", "q=2", "t=0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("at q=2, t=0: x1"), "{out}");
}

#[test]
fn latex_output() {
    let (code, out) = msym(&["kostka", "0|1", "--latex"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "\\wp(J_{0;1}) = t s_{1;\\emptyset} + s_{0;1}\n");
    let (_, out) = msym(&["schur", "1|", "--latex"]);
    assert_eq!(out, "s_{1;\\emptyset} = x_{1}\n");
}

#[test]
fn polynomial_commands() {
    assert_eq!(msym(&["e", "0,1"]).1, "E[0,1] = x2\n");
    let (code, out) = msym(&["J", "|1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "J[|1] = (-t + 1)*x1\n");
    let (code, out) = msym(&["P", "1|1", "--in", "P"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "P[1|1] =\n  1 * P[1|1]\n");
    let (code, out) = msym(&["mod-lm", "1,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn parse_errors_name_the_token() {
    let (code, out) = msym(&["kostka", "1,x|2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("`x`"), "{out}");
    let (code, out) = msym(&["kostka", "1|1,2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("`1,2`"), "{out}");
    assert_eq!(msym(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(msym(&["kostka-comp", "1", "2"]).0, EXIT_USAGE);
    assert_eq!(msym(&["P", "1|1", "--eval", "q=1", "s=2"]).0, EXIT_USAGE);
}

#[test]
fn infeasible_variable_counts() {
    assert_eq!(msym(&["P", "1|2,1", "--n", "2"]).0, EXIT_INFEASIBLE);
    assert_eq!(msym(&["schur", "1|1", "--n", "1"]).0, EXIT_INFEASIBLE);
    assert_eq!(msym(&["kostka", "1|1", "--n", "1"]).0, EXIT_INFEASIBLE);
    assert_eq!(msym(&["e", "1,0,1", "--n", "2"]).0, EXIT_INFEASIBLE);
}

#[test]
fn verify_small_bounds() {
    let (code, out) = msym(&["verify", "all", "--m-max", "1", "--d-max", "2"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("proved-statement failures: 0"));
    assert!(out.contains("conjecture_violations: 0"));
    assert!(!out.contains("FAIL"));
    let (code, out) = msym(&["verify", "kostka", "--m-max", "1", "--d-max", "2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"]["proved_failures"], 0);
}

#[test]
fn verify_all_default_example() {
    let (code, out) = msym(&["verify", "all", "--m-max", "2", "--d-max", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
}
