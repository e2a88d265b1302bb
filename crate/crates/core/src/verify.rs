//! Runs the identity verifiers over a range of dimensions.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::genera::{verify_libgober_wood, verify_theorem_mr, GeneraError};
use crate::report::IdentityCheck;
use crate::symmetric::verify_lemma23;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Lemma23,
    TheoremMr,
    LibgoberWood,
}

impl Target {
    pub const ALL: [Target; 3] = [Target::Lemma23, Target::TheoremMr, Target::LibgoberWood];

    pub fn name(self) -> &'static str {
        match self {
            Target::Lemma23 => "lemma23",
            Target::TheoremMr => "theorem-mr",
            Target::LibgoberWood => "libgober-wood",
        }
    }

    /// Checks at one dimension (`n ≥ 2`).
    pub fn run(self, n: usize) -> Result<Vec<IdentityCheck>, GeneraError> {
        if n < 2 {
            return Err(GeneraError::DimensionTooSmall { n, min: 2 });
        }
        match self {
            Target::Lemma23 => Ok(verify_lemma23(n)?),
            Target::TheoremMr => verify_theorem_mr(n),
            Target::LibgoberWood => verify_libgober_wood(n),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown target {s:?}"))
    }
}

/// All checks of one target at one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionReport {
    pub target: Target,
    pub n: u32,
    pub checks: Vec<IdentityCheck>,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every `(n, target)` job in parallel; reports come back ordered by
/// `n`, then by target in the order given.
pub fn verify_range(
    targets: &[Target],
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<Vec<DimensionReport>, GeneraError> {
    let jobs: Vec<(usize, Target)> = n_range
        .flat_map(|n| targets.iter().map(move |&t| (n, t)))
        .collect();
    jobs.into_par_iter()
        .map(|(n, target)| {
            Ok(DimensionReport {
                target,
                n: n as u32,
                checks: target.run(n)?,
            })
        })
        .collect()
}
