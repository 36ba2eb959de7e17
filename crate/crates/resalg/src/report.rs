//! Check verdicts with explicit witnesses.
//!
//! Every universally-quantified check in this crate answers with a
//! [`CheckReport`]: a verdict plus, on failure, the lexicographically least
//! witness tuple found by the scan. Witness parts are labeled carrier
//! indices in quantifier order, so reports are deterministic and directly
//! comparable in tests.

use serde::Serialize;
use std::fmt;

/// A labeled witness tuple, e.g. `a=3 b=1 c=2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub parts: Vec<(String, usize)>,
}

impl Witness {
    pub fn of(parts: &[(&str, usize)]) -> Self {
        Witness {
            parts: parts.iter().map(|(n, v)| (n.to_string(), *v)).collect(),
        }
    }

    /// Renders the witness with a custom element namer.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        self.parts
            .iter()
            .map(|(label, idx)| format!("{}={}", label, name(*idx)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| i.to_string()))
    }
}

/// Verdict of one check, with a witness when the check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// Name of the check, e.g. `"distributivity"`.
    pub check: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            holds: true,
            witness: None,
        }
    }

    pub fn fail(check: &str, witness: Witness) -> Self {
        CheckReport {
            check: check.to_string(),
            holds: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            write!(f, "{}: pass", self.check)
        } else {
            match &self.witness {
                Some(w) => write!(f, "{}: FAIL at {}", self.check, w),
                None => write!(f, "{}: FAIL", self.check),
            }
        }
    }
}
