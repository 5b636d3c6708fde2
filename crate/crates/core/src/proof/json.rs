use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{parse, print, Formula, ParseError, Signature};

use super::rules::RuleId;
use super::{Derivation, Sequent, System};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed derivation JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("bad formula `{text}`: {source}")]
    Formula { text: String, source: ParseError },
    #[error("unknown rule `{0}`")]
    Rule(String),
    #[error("unknown system `{0}`")]
    System(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SideJson {
    left: Vec<String>,
    right: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct NodeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    system: Option<String>,
    rule: String,
    conclusion: SideJson,
    principal: Option<String>,
    #[serde(default)]
    premises: Vec<NodeJson>,
}

/// A derivation together with the system it is meant for. The system tag
/// is written on the root node only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationFile {
    pub system: System,
    pub derivation: Derivation,
}

impl DerivationFile {
    pub fn to_json(&self) -> String {
        let mut root = node_to_json(&self.derivation);
        root.system = Some(self.system.name().to_string());
        serde_json::to_string_pretty(&root).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, JsonError> {
        let root: NodeJson = serde_json::from_str(text)?;
        let tag = root.system.clone().unwrap_or_else(|| "BD".into());
        let system = System::from_name(&tag).ok_or(JsonError::System(tag))?;
        let sig = Signature::bd_impl_bot();
        Ok(DerivationFile {
            system,
            derivation: node_from_json(&root, &sig)?,
        })
    }
}

fn node_to_json(d: &Derivation) -> NodeJson {
    NodeJson {
        system: None,
        rule: d.rule.name().to_string(),
        conclusion: SideJson {
            left: d.conclusion.left.iter().map(print).collect(),
            right: d.conclusion.right.iter().map(print).collect(),
        },
        principal: d.principal.as_ref().map(print),
        premises: d.premises.iter().map(node_to_json).collect(),
    }
}

fn formula(text: &str, sig: &Signature) -> Result<Formula, JsonError> {
    parse(text, sig).map_err(|source| JsonError::Formula {
        text: text.to_string(),
        source,
    })
}

fn node_from_json(n: &NodeJson, sig: &Signature) -> Result<Derivation, JsonError> {
    let rule = RuleId::from_name(&n.rule).ok_or_else(|| JsonError::Rule(n.rule.clone()))?;
    let side = |v: &[String]| v.iter().map(|t| formula(t, sig)).collect::<Result<Vec<_>, _>>();
    Ok(Derivation {
        conclusion: Sequent::new(side(&n.conclusion.left)?, side(&n.conclusion.right)?),
        rule,
        principal: n.principal.as_deref().map(|t| formula(t, sig)).transpose()?,
        premises: n
            .premises
            .iter()
            .map(|p| node_from_json(p, sig))
            .collect::<Result<_, _>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::prove;

    #[test]
    fn round_trip() {
        let s = Sequent::parse("p & q, ~(p | q) |- q -> p").unwrap();
        let d = prove(&s, System::Bd).unwrap();
        let file = DerivationFile {
            system: System::Bd,
            derivation: d,
        };
        let text = file.to_json();
        assert!(text.contains("\"system\": \"BD\""));
        assert_eq!(DerivationFile::from_json(&text).unwrap(), file);
    }

    #[test]
    fn rejects_unknown_rule() {
        let text = r#"{"system":"BD","rule":"magic","conclusion":{"left":[],"right":["p"]},"principal":null,"premises":[]}"#;
        assert!(matches!(DerivationFile::from_json(text), Err(JsonError::Rule(_))));
        assert!(DerivationFile::from_json("{").is_err());
    }
}
