//! Report envelope, error objects and exit codes.

use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "hypermoment.report/1";

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// A check whose body may fail with an error, which counts as a failure.
    pub fn from_result(name: impl Into<String>, r: Result<String, String>) -> Self {
        match r {
            Ok(detail) => Check::new(name, true, detail),
            Err(detail) => Check::new(name, false, detail),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, result: Value) -> Self {
        Report {
            command,
            inputs,
            result,
            checks: Vec::new(),
        }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| !c.passed)
    }

    pub fn status(&self) -> &'static str {
        if self.checks.is_empty() {
            "ok"
        } else if self.failed() {
            "fail"
        } else {
            "pass"
        }
    }

    pub fn sorted_checks(&self) -> Vec<&Check> {
        let mut checks: Vec<&Check> = self.checks.iter().collect();
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        checks
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .sorted_checks()
            .into_iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": if c.passed { "pass" } else { "fail" },
                    "detail": c.detail,
                })
            })
            .collect();
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "checks": checks,
            "status": self.status(),
        })
    }

    pub fn envelope(&self, wall_time_ms: u128) -> Value {
        let mut env = Map::new();
        env.insert("report".into(), self.to_json());
        env.insert("wall_time_ms".into(), json!(wall_time_ms));
        Value::Object(env)
    }
}

/// Everything that can stop a command before it produces a report.
#[derive(Debug)]
pub enum Failure {
    Core(hypermoment::Error),
    /// Unreadable files and malformed JSON.
    Input(String),
}

impl From<hypermoment::Error> for Failure {
    fn from(e: hypermoment::Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn kind(&self) -> &'static str {
        use hypermoment::Error as E;
        match self {
            Failure::Input(_) => "input",
            Failure::Core(e) => match e {
                E::BadUniformity(_) => "bad_uniformity",
                E::EmptyEdgeList => "empty_edge_list",
                E::WrongEdgeSize { .. } => "wrong_edge_size",
                E::DuplicateEdge(_) => "duplicate_edge",
                E::VertexOutOfRange { .. } => "vertex_out_of_range",
                E::IsolatedVertex(_) => "isolated_vertex",
                E::Parse(_) => "parse",
                E::NotLinear => "not_linear",
                E::Unreachable(..) => "unreachable",
                E::InvalidFamily(_) => "invalid_family",
                E::WrongClass { .. } => "wrong_class",
                E::OutOfScope(_) => "out_of_scope",
                E::MixedUniformity(..) => "mixed_uniformity",
                E::BoundExceeded(_) => "bound_exceeded",
                E::Precondition(_) => "precondition",
                E::Inconsistent(_) => "inconsistent",
            },
        }
    }

    pub fn exit_code(&self) -> u8 {
        use hypermoment::Error as E;
        match self {
            Failure::Input(_) => EXIT_INVALID_INPUT,
            Failure::Core(e) if e.is_invalid_input() => EXIT_INVALID_INPUT,
            Failure::Core(E::InvalidFamily(_) | E::MixedUniformity(..)) => EXIT_INVALID_INPUT,
            Failure::Core(E::Inconsistent(_)) => EXIT_CHECK_FAILED,
            Failure::Core(_) => EXIT_PRECONDITION,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Input(s) => s.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.message() } })
    }
}
