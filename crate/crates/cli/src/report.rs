use std::collections::BTreeMap;

use serde::Serialize;

/// Process exit status. Depends only on the verdict, never on timing or
/// formatting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exit {
    Ok,
    PropertyFailed,
    MalformedInput,
    Indeterminate,
}

impl Exit {
    pub fn code(self) -> i32 {
        match self {
            Exit::Ok => 0,
            Exit::PropertyFailed => 1,
            Exit::MalformedInput => 2,
            Exit::Indeterminate => 3,
        }
    }

    /// The more severe of two statuses; a definite failure outranks an
    /// undecided verdict.
    pub fn worst(self, other: Exit) -> Exit {
        let rank = |e: Exit| match e {
            Exit::Ok => 0,
            Exit::Indeterminate => 1,
            Exit::PropertyFailed => 2,
            Exit::MalformedInput => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

/// A command result: what ran, on what, and what came out.
#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub command: &'static str,
    pub args: BTreeMap<String, String>,
    pub status: Exit,
    pub exit: i32,
    #[serde(flatten)]
    pub body: T,
    /// Wall-clock microseconds; omitted with `--no-timing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, args: BTreeMap<String, String>, body: T, status: Exit) -> Self {
        Self {
            command,
            args,
            status,
            exit: status.code(),
            body,
            elapsed_us: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report bodies are plain data");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub error: String,
}
