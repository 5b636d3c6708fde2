//! Defining a matrix in JSON and using it like a preset.

use fdekit::matrix::eval::countermodel;
use fdekit::matrix::Matrix;
use fdekit::syntax::parse_sequent;

const THREE_VALUED: &str = r#"{
  "values": ["0", "h", "1"],
  "designated": ["h", "1"],
  "connectives": {
    "not": {"arity": 1, "table": ["1", "h", "0"]},
    "and": {"arity": 2, "table": [["0", "0", "0"], ["0", "h", "h"], ["0", "h", "1"]]},
    "or": {"arity": 2, "table": [["0", "h", "1"], ["h", "h", "1"], ["1", "1", "1"]]}
  }
}"#;

fn main() {
    let m = Matrix::from_json(THREE_VALUED).expect("well-formed");
    print!("{m}");
    for text in ["p, ~p |- q", "|- p | ~p", "p & q |- p"] {
        let (l, r) = parse_sequent(text, m.signature()).expect("parses");
        let verdict = match countermodel(&m, &l, &r).expect("evaluates") {
            None => "valid".to_string(),
            Some(cm) => format!("fails at {}", cm.display(&m)),
        };
        println!("{text}: {verdict}");
    }
    let back = Matrix::from_json(&m.to_json()).expect("round trip");
    println!("JSON round trip preserves the matrix: {}", back == m);

    let bad = THREE_VALUED.replace(r#""designated": ["h", "1"]"#, r#""designated": ["x"]"#);
    println!("an undeclared value is rejected: {}", Matrix::from_json(&bad).unwrap_err());
}
