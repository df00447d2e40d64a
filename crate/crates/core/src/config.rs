//! Process-wide size bounds. The CLI may raise or lower them once at startup.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{KlmovError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// n in partitions_of.
    Partitions,
    /// ||mu|| for splittings.
    Splittings,
    /// r * ||A|| for cabling constants.
    Ctilde,
    /// ||mu|| for partition-function coefficients.
    Series,
    /// N for the explicit R-matrix.
    RMatrix,
}

static PARTITIONS: AtomicUsize = AtomicUsize::new(20);
static SPLITTINGS: AtomicUsize = AtomicUsize::new(8);
static CTILDE: AtomicUsize = AtomicUsize::new(12);
static SERIES: AtomicUsize = AtomicUsize::new(6);
static RMATRIX: AtomicUsize = AtomicUsize::new(4);

fn slot(b: Bound) -> &'static AtomicUsize {
    match b {
        Bound::Partitions => &PARTITIONS,
        Bound::Splittings => &SPLITTINGS,
        Bound::Ctilde => &CTILDE,
        Bound::Series => &SERIES,
        Bound::RMatrix => &RMATRIX,
    }
}

fn name(b: Bound) -> &'static str {
    match b {
        Bound::Partitions => "partition size",
        Bound::Splittings => "splitting size",
        Bound::Ctilde => "r times color size",
        Bound::Series => "series index size",
        Bound::RMatrix => "rank N",
    }
}

pub fn get(b: Bound) -> usize {
    slot(b).load(Ordering::Relaxed)
}

pub fn set(b: Bound, value: usize) {
    assert!(value > 0, "bounds must be positive");
    slot(b).store(value, Ordering::Relaxed);
}

pub fn check(b: Bound, value: usize) -> Result<()> {
    let bound = get(b);
    if value > bound {
        return Err(KlmovError::BoundExceeded { what: name(b), value, bound });
    }
    Ok(())
}
