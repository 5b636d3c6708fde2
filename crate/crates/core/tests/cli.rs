use fdekit::cli::run;
use serde_json::Value;

fn fdekit(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("fdekit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8"), String::from_utf8(err).expect("utf-8"))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = fdekit(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}\n{err}"));
    (code, v)
}

#[test]
fn entailment_reports_a_countermodel() {
    let (code, out, _) = fdekit(&["entails", "--matrix", "bd", "p & ~p |- q"]);
    assert_eq!(code, 1);
    assert_eq!(out, "NO\ncountermodel: p↦b, q↦f\n");
    let (code, out, _) = fdekit(&["entails", "--matrix", "k3", "p & ~p |- q"]);
    assert_eq!((code, out.as_str()), (0, "YES\n"));
    let (_, v) = json(&["entails", "--matrix", "bd", "|- p | ~p"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["countermodel"]["p"], "n");
}

#[test]
fn family_commands() {
    assert_eq!(fdekit(&["count-sr"]).1, "274877906944\n");
    let (code, m, _) = fdekit(&["sr-decode", "13129950543"]);
    assert_eq!(code, 0);
    let path = std::env::temp_dir().join(format!("fdekit-cli-{}.json", std::process::id()));
    std::fs::write(&path, &m).expect("temp file");
    let (code, out, _) = fdekit(&["sr-encode", path.to_str().expect("utf-8 path")]);
    std::fs::remove_file(&path).ok();
    assert_eq!((code, out.as_str()), (0, "13129950543\n"));
    assert_eq!(fdekit(&["sr-encode", "bd-impl-bot"]).1, "13129950543\n");
    assert_eq!(fdekit(&["sr-decode", "274877906944"]).0, 2);
}

#[test]
fn definability_commands() {
    let (code, out, _) = fdekit(&["definable", "--matrix", "bd-impl-bot-confl", "--target", "confl", "--using", "not,and,or,impl,bot"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("NOT DEFINABLE\n"), "{out}");
    let (code, v) = json(&["definable", "--matrix", "bd-impl-bot-delta", "--target", "delta", "--using", "not,and,or,impl,bot"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness"], "~(p1 -> bot)");
    assert_eq!(fdekit(&["interdef", "--a", "bd-impl-bot", "--b", "bd-delta"]).0, 0);
    assert_eq!(fdekit(&["interdef", "--a", "bd-cons-det", "--b", "bd-circ"]).0, 1);
    assert_eq!(fdekit(&["interdef", "--a", "bd-circ", "--b", "bd-impl-bot", "--common", "bd-impl-bot-circ", "--one-way"]).0, 0);
    assert_eq!(fdekit(&["synonymous", "--matrix", "bd-b-n-bot", "bot", "B & N"]).0, 0);
    assert_eq!(fdekit(&["equiv", "--matrix", "bd", "p", "p | p & q"]).0, 0);
    let (_, v) = json(&["clone", "--matrix", "bd", "--arity", "1"]);
    assert_eq!(v["count"], 4);
}

#[test]
fn proofs_round_trip_through_files() {
    let (code, v) = json(&["prove", "--system", "CL", "|- p | ~p"]);
    assert_eq!(code, 0);
    let path = std::env::temp_dir().join(format!("fdekit-proof-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&v["derivation"]).expect("serialises")).expect("temp file");
    let p = path.to_str().expect("utf-8 path");
    let cl = fdekit(&["check", p]);
    let bd = fdekit(&["check", "--system", "BD", p]);
    std::fs::remove_file(&path).ok();
    assert_eq!((cl.0, cl.1.as_str()), (0, "VALID\n"));
    assert_eq!(bd.0, 1);
    assert!(bd.1.starts_with("INVALID\n"));
    assert_eq!(fdekit(&["prove", "|- p | ~p"]).1, "NOT PROVED\n");
    let (code, out, _) = fdekit(&["derived-rule", "--system", "CL", "~->L"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("DERIVED\n"));
    assert_eq!(fdekit(&["derived-rule", "--system", "BD", "~R"]).0, 1);
}

#[test]
fn evaluation_and_parsing() {
    assert_eq!(fdekit(&["eval", "--matrix", "bd", "p & ~p", "--assign", "p=b"]).1, "b\n");
    assert_eq!(fdekit(&["parse", "p -> q -> r & top"]).1, "p -> q -> r & ~bot\n");
    let (_, v) = json(&["parse", "delta (p | q)"]);
    assert_eq!(v["depth"], 2);
}

#[test]
fn laws_filter() {
    assert_eq!(fdekit(&["laws-filter"]).1, "all\n");
    let (code, v) = json(&["laws-filter", "--table"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 81);
    assert_eq!(v["verified"], true);
    assert!(v["indices"].as_array().expect("listed").contains(&Value::from(13129950543u64)));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["frobnicate"][..],
        &["entails", "--matrix", "nope", "p |- p"],
        &["entails", "--matrix", "bd", "p |- ("],
        &["eval", "--matrix", "bd", "p", "--assign", "p=x"],
        &["prove", "--system", "S4", "p |- p"],
        &["derived-rule", "Cut"],
        &["check", "/nonexistent/proof.json"],
        &["laws-filter", "--law", "no-such-law"],
    ] {
        let (code, _, err) = fdekit(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}
