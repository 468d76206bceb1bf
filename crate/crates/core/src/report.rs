use alloc::string::{String, ToString};
use core::fmt;

/// Outcome of checking one exact identity `lhs == rhs`.
///
/// Both sides are kept in canonical printed form when the identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub claim: String,
    pub holds: bool,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl IdentityReport {
    pub fn compare<T: PartialEq + fmt::Display>(claim: &str, lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Self::pass(claim)
        } else {
            IdentityReport {
                claim: claim.to_string(),
                holds: false,
                lhs: Some(lhs.to_string()),
                rhs: Some(rhs.to_string()),
            }
        }
    }

    pub fn pass(claim: &str) -> Self {
        IdentityReport { claim: claim.to_string(), holds: true, lhs: None, rhs: None }
    }

    pub fn fail(claim: &str, lhs: String, rhs: String) -> Self {
        IdentityReport { claim: claim.to_string(), holds: false, lhs: Some(lhs), rhs: Some(rhs) }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "pass" } else { "fail" };
        write!(f, "{}: {}", self.claim, status)
    }
}
