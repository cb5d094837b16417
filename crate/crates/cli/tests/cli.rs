use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paralogic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn degree_preserving_logic_is_paraconsistent() {
    let o = run(&["entail", "p & ~p |- q", "--logic", "G<=5~"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("fails"));
    assert!(out.contains("counterexample: p = 1/4, q = 0"));
}

#[test]
fn holding_queries_exit_zero() {
    let o = run(&["entail", "p |- p", "--logic", "J3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["entail", "--class", "above-zero", "!!p |- p"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("holds  above-zero"));
}

#[test]
fn records_are_json_lines() {
    let o = run(&["entail", "p, ~p |- q", "--logic", "J3", "--logic", "CPL", "--format", "records"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["logic"], "J3");
    assert_eq!(lines[0]["holds"], false);
    assert_eq!(lines[0]["counterexample"], "p = 1/2, q = 0");
    assert_eq!(lines[0]["complete"], true);
    assert_eq!(lines[1]["holds"], true);
    for key in ["query", "logic", "holds", "counterexample", "steps", "complete"] {
        assert!(lines[1].get(key).is_some(), "{key}");
    }
    // byte-identical on a second run
    let again = run(&["entail", "p, ~p |- q", "--logic", "J3", "--logic", "CPL", "--format", "records"]);
    assert_eq!(stdout(&again), out);
}

#[test]
fn query_files() {
    let dir = std::env::temp_dir().join(format!("paralogic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("queries.txt");
    std::fs::write(
        &path,
        "# alpha and beta\nD(p <-> ~p) |- 0 @ J4\n\n~((p1 -> p2) | (p2 -> p3) | (p3 -> p4)) |- 0 @ J3 # beta\n",
    )
    .unwrap();
    let o = run(&["entail", "--file", path.to_str().unwrap(), "--format", "records"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 2);
    std::fs::write(&path, "p |- p\n").unwrap();
    let o = run(&["entail", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_is_rejected_up_front() {
    let o = run(&["entail", "p |- p", "--logic", "J3", "--logic", "J5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown logic"));
    assert_eq!(run(&["entail", "p |- p", "--logic", "J3", "--budget", "0"]).status.code(), Some(2));
    assert_eq!(run(&["entail", "p |-", "--logic", "J3"]).status.code(), Some(2));
    assert_eq!(run(&["translate", "star9", "p"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_is_incomplete() {
    let o = run(&["entail", "p, q, r |- s", "--logic", "G<=7~", "--budget", "5", "--format", "records"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["complete"], false);
    assert!(v["holds"].is_null());
}

#[test]
fn translations() {
    assert_eq!(stdout(&run(&["translate", "ft-star", "p =>F q"])).trim(), "D(p -> q) & (~p | q)");
    assert_eq!(stdout(&run(&["translate", "star3", "p"])).trim(), "!!p");
    assert_eq!(stdout(&run(&["translate", "delta-set", "p, q"])).trim(), "D p, D q");
}

#[test]
fn classify_godel_five() {
    let o = run(&["classify", "--godel", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("saturated: J4, J3, J3xJ4\n"), "{out}");
    assert!(out.contains("ideal: J4, J3\n"));
    assert!(out.contains("agrees with the predictions: yes"));
    let o = run(&["classify", "--godel", "2"]);
    assert!(stdout(&o).contains("0 paraconsistent"));
}

#[test]
fn classify_luk_fifteen() {
    let o = run(&["classify", "--luk", "15", "--i", "7", "--logic", "L(15,7)", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["saturated"], true);
    let o = run(&["classify", "--luk", "6", "--i", "3", "--primes", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_export() {
    let o = run(&["export-dot", "--godel", "2", "--paraconsistent"]);
    assert_eq!(stdout(&o), "digraph catalog {\n  rankdir=BT;\n  node [shape=box];\n}\n");
    let out = stdout(&run(&["export-dot", "--godel", "5", "--paraconsistent", "--saturated"]));
    for name in ["J3\\n", "J4\\n", "J3xJ4\\n"] {
        let line = out.lines().find(|l| l.contains(name)).unwrap();
        assert!(line.contains("peripheries=2"), "{line}");
    }
    let luk = stdout(&run(&["export-dot", "--luk", "4", "--i", "1"]));
    assert!(luk.contains("L(2,1)") && luk.contains("->"));
}
