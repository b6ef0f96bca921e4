//! Deciding avoidability.
//!
//! Two engines are provided:
//!
//! * [`decide_exact`] walks the factor-window graph, whose nodes are the total
//!   words of length `L - 1` (`L` the longest word of the set). A directed
//!   cycle is exactly a periodic avoiding word, so the answer is exact
//!   whenever the graph fits under the node cap.
//! * [`decide_bounded_period`] searches for an avoiding word of each period
//!   `1..=P` in turn. It can only ever prove avoidability.
//!
//! Every [`Verdict::Avoidable`] carries a [`Certificate`] that was checked
//! against the set when it was built.

use alloc::string::String;
use core::fmt;

use crate::error::Result;
use crate::periodic::PeriodicWord;
use crate::set::WordSet;

mod period;
mod window;

pub use period::{decide_bounded_period, find_avoider_with_period};
pub use window::{decide_exact, window_nodes};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AvoidMethod {
    WindowGraph,
    PeriodSearch,
    /// Built from a named pattern family or construction.
    Pattern(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnavoidMethod {
    WindowGraph,
    /// The set contains the empty word or an all-hole word.
    Trivial,
    Theorem(&'static str),
}

/// A periodic word known to avoid a particular set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    word: PeriodicWord,
    method: AvoidMethod,
}

impl Certificate {
    /// Checks `word` against `x`; the only way to obtain a certificate.
    pub fn verify(x: &WordSet, word: PeriodicWord, method: AvoidMethod) -> Result<Self> {
        word.certify(x)?;
        Ok(Certificate { word, method })
    }

    pub fn word(&self) -> &PeriodicWord {
        &self.word
    }

    pub fn method(&self) -> &AvoidMethod {
        &self.method
    }

    pub fn period(&self) -> usize {
        self.word.period()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Avoidable(Certificate),
    Unavoidable(UnavoidMethod),
    /// No avoiding word with period at most the bound.
    Unknown { period_bound: usize },
}

impl Verdict {
    pub fn is_avoidable(&self) -> bool {
        matches!(self, Verdict::Avoidable(_))
    }

    pub fn is_unavoidable(&self) -> bool {
        matches!(self, Verdict::Unavoidable(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Avoidable(c) => Some(c),
            _ => None,
        }
    }

    /// `"Avoidable"`, `"Unavoidable"` or `"Unknown"`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Avoidable(_) => "Avoidable",
            Verdict::Unavoidable(_) => "Unavoidable",
            Verdict::Unknown { .. } => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Avoidable(c) => write!(f, "Avoidable period {}: {}", c.period(), c.word()),
            Verdict::Unavoidable(UnavoidMethod::WindowGraph) => {
                f.write_str("Unavoidable (window-graph)")
            }
            Verdict::Unavoidable(UnavoidMethod::Trivial) => f.write_str("Unavoidable (trivial)"),
            Verdict::Unavoidable(UnavoidMethod::Theorem(t)) => write!(f, "Unavoidable ({t})"),
            Verdict::Unknown { period_bound } => {
                write!(f, "Unknown (no avoider with period <= {period_bound})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowGraphConfig {
    /// Largest `k^(L-1)` the exact decider accepts.
    pub max_nodes: u64,
}

impl WindowGraphConfig {
    pub const DEFAULT_MAX_NODES: u64 = 1 << 24;

    pub fn new(max_nodes: u64) -> Self {
        WindowGraphConfig { max_nodes }
    }

    pub fn fits(&self, x: &WordSet) -> bool {
        window::window_fits(x, self.max_nodes)
    }
}

impl Default for WindowGraphConfig {
    fn default() -> Self {
        WindowGraphConfig {
            max_nodes: Self::DEFAULT_MAX_NODES,
        }
    }
}

/// Exact when the window graph fits the cap, bounded-period search otherwise.
///
/// `Unavoidable` is only ever reported by the exact path (or for trivial sets).
pub fn decide(x: &WordSet, max_period: usize, cfg: &WindowGraphConfig) -> Verdict {
    if x.is_trivial() {
        return Verdict::Unavoidable(UnavoidMethod::Trivial);
    }
    if cfg.fits(x) {
        if let Ok(v) = decide_exact(x, cfg) {
            return shorten(x, v);
        }
    }
    decide_bounded_period(x, max_period)
}

/// Replaces a window-graph cycle by the search's shortest-period avoider
/// when one is cheap to find.
fn shorten(x: &WordSet, v: Verdict) -> Verdict {
    if let Verdict::Avoidable(c) = &v {
        let bound = c.period().min(2 * x.max_len().max(1));
        let shorter = decide_bounded_period(x, bound);
        if shorter.is_avoidable() {
            return shorter;
        }
    }
    v
}
