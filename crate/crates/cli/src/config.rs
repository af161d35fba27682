use std::path::PathBuf;

use nchilb_core::motives::{Caps, Route};

use crate::format::Format;
use crate::CliError;

/// Settings shared by every subcommand after argument parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub m: u32,
    pub dmax: usize,
    /// `None` selects every route.
    pub routes: Option<Vec<Route>>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub caps: Caps,
    pub seed: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.m == 0 {
            return Err(CliError::Usage("--m must be at least 1".into()));
        }
        if self.caps.max_trees == 0 || self.caps.max_permutations == 0 {
            return Err(CliError::Usage("caps must be positive".into()));
        }
        Ok(())
    }
}

/// Parses `all` or a comma-separated list of route labels.
pub fn parse_routes(spec: &[String]) -> Result<Option<Vec<Route>>, CliError> {
    if spec.is_empty() || spec.iter().any(|s| s == "all") {
        return Ok(None);
    }
    spec.iter()
        .map(|s| Route::parse(s).ok_or_else(|| CliError::Usage(format!("unknown route {s:?}"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}
