//! Threaded geodesic enumeration.
//!
//! The three subtrees below the root triangle share no curves, so each is
//! expanded on its own thread and the results merged through the same
//! deduplicate-and-sort step as the serial enumerator.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use mcshane_core::markoff::{expand_branch, finalize_records, prepare_seed, root_records};
use mcshane_core::{BoundarySpec, GeodesicRecord, Result, TraceTriple};

/// Environment variable capping the worker count.
pub const THREADS_VAR: &str = "MCSHANE_THREADS";

/// Parses a `MCSHANE_THREADS` value: a positive integer.
pub fn parse_threads(value: &str) -> std::result::Result<usize, String> {
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!(
            "{THREADS_VAR} must be a positive integer, got {value:?}"
        )),
    }
}

/// Worker count from the environment, defaulting to the available parallelism.
pub fn threads_from_env() -> std::result::Result<usize, String> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => parse_threads(&v),
        Err(std::env::VarError::NotPresent) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(format!("{THREADS_VAR} is not valid unicode"))
        }
    }
}

/// Same output as `markoff::enumerate_geodesics`, using up to `threads` workers.
pub fn enumerate(
    b: &BoundarySpec,
    cutoff: f64,
    seed: Option<TraceTriple>,
    threads: usize,
) -> Result<Vec<GeodesicRecord>> {
    let seed = prepare_seed(b, seed)?;
    let mut records = root_records(&seed, cutoff)?;
    let workers = threads.clamp(1, 3);
    if workers == 1 {
        for slot in 0..3 {
            records.extend(expand_branch(&seed, slot, cutoff)?);
        }
        return Ok(finalize_records(records));
    }
    let next = AtomicUsize::new(0);
    let branches: Mutex<Vec<(usize, Result<Vec<GeodesicRecord>>)>> = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let slot = next.fetch_add(1, Ordering::Relaxed);
                if slot >= 3 {
                    break;
                }
                let out = expand_branch(&seed, slot, cutoff);
                branches
                    .lock()
                    .expect("no worker panics while holding the lock")
                    .push((slot, out));
            });
        }
    });
    let mut branches = branches.into_inner().expect("workers have finished");
    // report the first failing branch by slot, whatever the schedule
    branches.sort_by_key(|(slot, _)| *slot);
    for (_, out) in branches {
        records.extend(out?);
    }
    Ok(finalize_records(records))
}
