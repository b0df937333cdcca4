//! Clamp diagnostics.
//!
//! Every one-sided clamp in the crate records itself here instead of silently
//! rewriting values. Counts only move when a clamp actually changed a value,
//! so a nonzero count after a campaign pinpoints where round-off (or a bad
//! input) was absorbed.

use std::sync::atomic::{AtomicU64, Ordering};

/// Clamp sites, one counter each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClampEvent {
    /// Purity pulled back into `[1/2, 1]`.
    Purity,
    /// Squared overlap pulled back into `[0, 1]`.
    Overlap,
    /// Coherence radicand pulled up to `0` or down to `1`.
    Radicand,
    /// Fidelity pulled back into `[0, 1]`.
    Fidelity,
    /// Negative PSD eigenvalue within tolerance pulled up to `0`.
    Eigenvalue,
    /// Incompatibility pulled up to `1/2` or down to `1`.
    Incompatibility,
    /// Mixedness pulled back into `[0, 1]`.
    Mixedness,
    /// Discrimination error probability pulled back into `[0, 1/2]`.
    ErrorProbability,
}

const SITES: usize = 8;

static COUNTS: [AtomicU64; SITES] = [
    AtomicU64::new(0),
    AtomicU64::new(0),
    AtomicU64::new(0),
    AtomicU64::new(0),
    AtomicU64::new(0),
    AtomicU64::new(0),
    AtomicU64::new(0),
    AtomicU64::new(0),
];

impl ClampEvent {
    fn index(self) -> usize {
        match self {
            ClampEvent::Purity => 0,
            ClampEvent::Overlap => 1,
            ClampEvent::Radicand => 2,
            ClampEvent::Fidelity => 3,
            ClampEvent::Eigenvalue => 4,
            ClampEvent::Incompatibility => 5,
            ClampEvent::Mixedness => 6,
            ClampEvent::ErrorProbability => 7,
        }
    }
}

/// Records one clamp at `site`.
pub fn record(site: ClampEvent) {
    COUNTS[site.index()].fetch_add(1, Ordering::Relaxed);
}

/// Number of clamps recorded at `site` since the last reset.
pub fn count(site: ClampEvent) -> u64 {
    COUNTS[site.index()].load(Ordering::Relaxed)
}

/// Total clamps across all sites.
pub fn total() -> u64 {
    COUNTS.iter().map(|c| c.load(Ordering::Relaxed)).sum()
}

/// Zeroes all counters. Tests use this to assert that a code path clamps
/// (or does not clamp) at a specific site.
pub fn reset() {
    for c in &COUNTS {
        c.store(0, Ordering::Relaxed);
    }
}
