use serde::Serialize;

use crate::error::Result;

/// Sweep bounds: every `Λ` with `m ≤ m_max` and `|Λ| ≤ d_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub m_max: usize,
    pub d_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { m_max: 2, d_max: 4 }
    }
}

impl Bounds {
    /// `(m, d)` pairs within bounds.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..=self.m_max).flat_map(move |m| (0..=self.d_max).map(move |d| (m, d)))
    }

    pub fn cli_flags(&self) -> String {
        format!("--m-max {} --d-max {}", self.m_max, self.d_max)
    }
}

/// A failing instance with enough data to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance: String,
    pub detail: String,
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<Witness>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub bounds: Bounds,
    pub suites: Vec<SuiteResult>,
}

impl VerificationReport {
    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn all_pass(&self) -> bool {
        self.failure_count() == 0
    }
}

/// Accumulates instances and failures for one suite.
pub(crate) struct Suite {
    name: &'static str,
    reproduce: String,
    instances: usize,
    failures: Vec<Witness>,
}

impl Suite {
    pub(crate) fn new(name: &'static str, reproduce: impl Into<String>) -> Self {
        Suite { name, reproduce: reproduce.into(), instances: 0, failures: Vec::new() }
    }

    /// Records one instance; `outcome` yields `Ok(None)` on success and
    /// `Ok(Some(detail))` on failure. Errors count as failures.
    pub(crate) fn check(&mut self, instance: impl FnOnce() -> String, outcome: Result<Option<String>>) {
        self.instances += 1;
        let detail = match outcome {
            Ok(None) => return,
            Ok(Some(d)) => d,
            Err(e) => format!("error: {e}"),
        };
        self.failures.push(Witness { instance: instance(), detail, reproduce: self.reproduce.clone() });
    }

    /// Like [`Suite::check`] with its own reproduction command.
    pub(crate) fn check_with(&mut self, instance: String, reproduce: String, outcome: Result<Option<String>>) {
        self.instances += 1;
        let detail = match outcome {
            Ok(None) => return,
            Ok(Some(d)) => d,
            Err(e) => format!("error: {e}"),
        };
        self.failures.push(Witness { instance, detail, reproduce });
    }

    pub(crate) fn finish(self) -> SuiteResult {
        SuiteResult { name: self.name.to_string(), instances: self.instances, failures: self.failures }
    }
}

/// `Ok(None)` when `lhs == rhs`, otherwise both sides as the failure detail.
pub(crate) fn equal<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(format!("lhs = {lhs}; rhs = {rhs}"))
    }
}
