//! JSON matrix files.
//!
//! ```json
//! {"values": ["t","f","b","n"], "designated": ["t","b"],
//!  "connectives": {"not": {"arity": 1, "table": ["f","t","b","n"]},
//!                  "bot": {"arity": 0, "table": "f"}}}
//! ```
//!
//! Tables are nested arrays with the first argument outermost.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Matrix, MatrixError, Table};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectiveEntry {
    pub arity: usize,
    pub table: Value,
}

/// The serialized form of a [`Matrix`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub values: Vec<String>,
    pub designated: Vec<String>,
    pub connectives: BTreeMap<String, ConnectiveEntry>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        let k = m.size();
        let names = m.value_names();
        let connectives = m
            .tables()
            .map(|(name, t)| {
                let table = nest(t.entries(), t.arity(), k, names);
                (
                    name.to_string(),
                    ConnectiveEntry {
                        arity: t.arity(),
                        table,
                    },
                )
            })
            .collect();
        MatrixFile {
            values: names.to_vec(),
            designated: m.designated_names(),
            connectives,
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, MatrixError> {
        let k = self.values.len();
        let mut tables = Vec::new();
        for (name, c) in &self.connectives {
            let mut entries = Vec::with_capacity(k.pow(c.arity as u32));
            flatten(&c.table, c.arity, k, &self.values, name, &mut entries)?;
            tables.push((name.clone(), Table::new(c.arity, entries)));
        }
        Matrix::new(self.values.clone(), &self.designated, tables)
    }
}

fn nest(entries: &[u8], arity: usize, k: usize, names: &[String]) -> Value {
    if arity == 0 {
        return Value::String(names[entries[0] as usize].clone());
    }
    let stride = entries.len() / k;
    Value::Array(
        (0..k)
            .map(|i| nest(&entries[i * stride..(i + 1) * stride], arity - 1, k, names))
            .collect(),
    )
}

fn flatten(
    v: &Value,
    arity: usize,
    k: usize,
    names: &[String],
    conn: &str,
    out: &mut Vec<u8>,
) -> Result<(), MatrixError> {
    let bad = |what: &str| MatrixError::Format(format!("table of `{conn}`: {what}"));
    if arity == 0 {
        let s = v.as_str().ok_or_else(|| bad("expected a value name"))?;
        let i = names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| MatrixError::UnknownValue(s.to_string()))?;
        out.push(i as u8);
        return Ok(());
    }
    let rows = v.as_array().ok_or_else(|| bad("expected an array"))?;
    if rows.len() != k {
        return Err(bad(&format!("expected {k} rows, found {}", rows.len())));
    }
    rows.iter()
        .try_for_each(|r| flatten(r, arity - 1, k, names, conn, out))
}

impl Matrix {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&MatrixFile::from_matrix(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Matrix, MatrixError> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| MatrixError::Format(e.to_string()))?;
        file.to_matrix()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_tables() {
        let text = r#"{
            "values": ["t", "f"],
            "designated": ["t"],
            "connectives": {
                "not": {"arity": 1, "table": ["f", "t"]},
                "and": {"arity": 2, "table": [["t", "f"], ["f", "f"]]},
                "bot": {"arity": 0, "table": "f"}
            }
        }"#;
        let m = Matrix::from_json(text).unwrap();
        assert_eq!(m.table("and").unwrap().entries(), &[0, 1, 1, 1]);
        assert_eq!(m.table("bot").unwrap().entries(), &[1]);
        assert_eq!(Matrix::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn rejects_bad_shapes() {
        let text = r#"{"values": ["t","f"], "designated": ["t"],
            "connectives": {"not": {"arity": 1, "table": ["f"]}}}"#;
        assert!(matches!(Matrix::from_json(text), Err(MatrixError::Format(_))));
        let text = r#"{"values": ["t","f"], "designated": ["t"],
            "connectives": {"not": {"arity": 1, "table": ["f", "x"]}}}"#;
        assert_eq!(
            Matrix::from_json(text),
            Err(MatrixError::UnknownValue("x".into()))
        );
        assert!(Matrix::from_json("{").is_err());
    }
}
