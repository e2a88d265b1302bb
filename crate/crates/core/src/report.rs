//! Pass/fail records produced by the verifiers.

use serde::{Deserialize, Serialize};

use crate::symmetric::ChernCombo;

/// One checked identity `lhs == rhs` at complex dimension `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub n: u32,
    pub identity: String,
    pub pass: bool,
    pub lhs: ChernCombo,
    pub rhs: ChernCombo,
}

impl IdentityCheck {
    pub fn compare(n: u32, identity: impl Into<String>, lhs: ChernCombo, rhs: ChernCombo) -> Self {
        IdentityCheck {
            n,
            identity: identity.into(),
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

pub fn all_pass(checks: &[IdentityCheck]) -> bool {
    checks.iter().all(|c| c.pass)
}
