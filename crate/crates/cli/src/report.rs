use serde::{Deserialize, Serialize};

/// The machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub result: String,
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Report {
    pub fn new(command: &str, input: impl Into<String>, result: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            input: input.into(),
            result: result.into(),
            witnesses: Vec::new(),
            counterexample: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
