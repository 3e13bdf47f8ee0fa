//! JSON front-end for `toric-core`.
//!
//! A request is `{"schema": 1, "command"?: "<group> <op>", "payload": {...}}`. The answer
//! is a JSON object on standard output; errors are `{"error": {...}}` with exit code 1 for
//! domain errors and 2 for schema errors (carrying a JSON pointer into the request).

pub mod commands;
pub mod encode;
pub mod schema;

use serde_json::{json, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("unknown command \"{0}\"")]
    UnknownCommand(String),
    #[error("{0}")]
    Domain(toric_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Schema { .. } | CliError::UnknownCommand(_) => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Schema { pointer, message } => {
                json!({"error": {"kind": "schema", "pointer": pointer, "message": message}})
            }
            CliError::UnknownCommand(c) => json!({"error": {"kind": "schema", "pointer": "/command", "message": self.to_string(), "command": c}}),
            CliError::Domain(e) => json!({"error": {"kind": "domain", "message": domain_message(e)}}),
        }
    }
}

/// Library messages count cones from 0; responses count from 1.
fn domain_message(e: &toric_core::Error) -> String {
    use toric_core::Error as E;
    let shifted = match e {
        E::ConeNotPointed(i) => E::ConeNotPointed(i + 1),
        E::RayNotExtreme(i) => E::RayNotExtreme(i + 1),
        E::BadIntersection(i, j) => E::BadIntersection(i + 1, j + 1),
        E::NotSmoothFullDim(i) => E::NotSmoothFullDim(i + 1),
        E::NotRefined { cone } => E::NotRefined { cone: cone + 1 },
        E::NotCartier(i) => E::NotCartier(i + 1),
        other => other.clone(),
    };
    shifted.to_string()
}

impl From<toric_core::Error> for CliError {
    fn from(e: toric_core::Error) -> Self {
        CliError::Domain(e)
    }
}

/// Validates the envelope and dispatches `command` on the payload.
pub fn handle(command: &str, request: &Value) -> Result<Value, CliError> {
    let root = schema::Node::root(request);
    let version = root.field("schema")?;
    if version.value.as_u64() != Some(SCHEMA_VERSION) {
        return Err(schema::schema_error(&version.path, format!("unsupported schema version, expected {SCHEMA_VERSION}")));
    }
    if let Some(c) = root.opt_field("command")? {
        if c.value.as_str() != Some(command) {
            return Err(schema::schema_error(&c.path, format!("request is for a different command than \"{command}\"")));
        }
    }
    let payload = root.field("payload")?;
    commands::dispatch(command, payload.node())
}

/// Parses `text` and runs `command`, returning the exit code and the JSON to print.
pub fn execute(command: &str, text: &str) -> (i32, Value) {
    let request: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => {
            let err = CliError::Schema { pointer: "/".into(), message: format!("invalid JSON: {e}") };
            return (err.exit_code(), err.to_json());
        }
    };
    match handle(command, &request) {
        Ok(v) => (0, v),
        Err(e) => (e.exit_code(), e.to_json()),
    }
}

/// Serialized output, with a trailing newline.
pub fn render(value: &Value, pretty: bool) -> String {
    let mut s = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) }
        .expect("JSON values serialize");
    s.push('\n');
    s
}
