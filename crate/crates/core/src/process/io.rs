//! JSON machine files.
//!
//! ```json
//! {
//!   "alphabet": ["0", "1"],
//!   "states": ["A", "B"],
//!   "transitions": [{"from": "A", "symbol": "0", "to": "B", "p": 0.5}, ...]
//! }
//! ```
//!
//! Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use super::{Alphabet, Edge, EpsilonMachine};
use crate::error::{Error, Result};
use crate::numerics::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineFile {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub transitions: Vec<TransitionRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionRecord {
    pub from: String,
    pub symbol: String,
    pub to: String,
    pub p: f64,
}

impl MachineFile {
    pub fn from_machine<T: Scalar>(m: &EpsilonMachine<T>) -> Self {
        Self {
            alphabet: m.alphabet().symbols().to_vec(),
            states: m.states().to_vec(),
            transitions: m
                .edges()
                .map(|e| TransitionRecord {
                    from: m.states()[e.from].clone(),
                    symbol: m.alphabet().symbols()[e.symbol].clone(),
                    to: m.states()[e.to].clone(),
                    p: e.prob.as_f64(),
                })
                .collect(),
        }
    }

    pub fn into_machine<T: Scalar>(self) -> Result<EpsilonMachine<T>> {
        let alphabet = Alphabet::new(self.alphabet).map_err(format_err)?;
        let state = |label: &str| {
            self.states
                .iter()
                .position(|s| s == label)
                .ok_or_else(|| Error::Format(format!("transition names unknown state {label:?}")))
        };
        let edges = self
            .transitions
            .iter()
            .map(|t| {
                Ok(Edge {
                    from: state(&t.from)?,
                    symbol: alphabet
                        .index_of(&t.symbol)
                        .ok_or_else(|| Error::Format(format!("transition names unknown symbol {:?}", t.symbol)))?,
                    to: state(&t.to)?,
                    prob: T::from_f64(t.p)
                        .ok_or_else(|| Error::Format(format!("unrepresentable probability {}", t.p)))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        EpsilonMachine::new(self.states.iter().cloned(), alphabet, edges).map_err(format_err)
    }
}

fn format_err(e: Error) -> Error {
    match e {
        Error::Contract(msg) => Error::Format(msg),
        other => other,
    }
}

impl<T: Scalar> EpsilonMachine<T> {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: MachineFile = serde_json::from_str(text)?;
        file.into_machine()
    }

    /// Pretty-printed JSON listing nonzero transitions in index order.
    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(&MachineFile::from_machine(self)).expect("machine files always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::process::build_and_process;

    #[test]
    fn round_trip_and_machine() {
        let m = build_and_process(0.3f64).unwrap();
        let back = EpsilonMachine::<f64>::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{"alphabet":["0"],"states":["S"],"transitions":[],"extra":1}"#;
        assert!(matches!(EpsilonMachine::<f64>::from_json(text), Err(Error::Json(_))));
        let text =
            r#"{"alphabet":["0"],"states":["S"],"transitions":[{"from":"S","symbol":"0","to":"S","p":1,"w":2}]}"#;
        assert!(EpsilonMachine::<f64>::from_json(text).is_err());
    }

    #[test]
    fn rejects_unknown_labels() {
        let text = r#"{"alphabet":["0"],"states":["S"],"transitions":[{"from":"S","symbol":"1","to":"S","p":1}]}"#;
        let err = EpsilonMachine::<f64>::from_json(text).unwrap_err();
        assert!(err.is_parse_error(), "{err}");
        let text = r#"{"alphabet":["0"],"states":["S"],"transitions":[{"from":"S","symbol":"0","to":"Q","p":1}]}"#;
        assert!(EpsilonMachine::<f64>::from_json(text).unwrap_err().is_parse_error());
    }

    #[test]
    fn missing_field_is_parse_error() {
        let text = r#"{"alphabet":["0"],"states":["S"]}"#;
        assert!(EpsilonMachine::<f64>::from_json(text).unwrap_err().is_parse_error());
    }
}
