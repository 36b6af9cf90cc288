//! Step-synchronous data-parallel execution.
//!
//! An [`Engine`] runs one *step* at a time: a per-element update over a domain
//! `0..len`, followed by a global barrier. Element updates read state that was
//! fixed before the step and write shared state only through [`Slots`], whose
//! combining writes (min, max, or a private slot per element) give the same
//! result under every interleaving. Outputs and step counts are therefore
//! identical for any worker count.
//!
//! The step counter is the proxy for kernel launches: it counts barriers, not
//! element updates. Element updates are tallied separately as `work`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Duration;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use serde::{Deserialize, Serialize};

/// Empty slot marker; the identity of min-combine.
pub const NIL: u64 = u64::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StepReport {
    /// Global barriers executed.
    pub steps: u64,
    /// Element updates performed across all steps.
    pub work: u64,
    pub wall_time: Duration,
}

pub struct Engine {
    pool: Option<ThreadPool>,
    steps: u64,
    work: u64,
    fused: u32,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("workers", &self.workers())
            .field("steps", &self.steps)
            .field("work", &self.work)
            .finish()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Self::sequential()
    }
}

impl Engine {
    pub fn sequential() -> Self {
        Self { pool: None, steps: 0, work: 0, fused: 0 }
    }

    /// An engine running element updates on `workers` threads. One worker runs
    /// them in index order on the calling thread.
    pub fn new(workers: usize) -> Self {
        if workers <= 1 {
            return Self::sequential();
        }
        let pool = ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("failed to start worker pool");
        Self { pool: Some(pool), ..Self::sequential() }
    }

    pub fn workers(&self) -> usize {
        self.pool.as_ref().map_or(1, |p| p.current_num_threads())
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn report(&self, wall_time: Duration) -> StepReport {
        StepReport { steps: self.steps, work: self.work, wall_time }
    }

    fn barrier(&mut self, domain: usize) {
        self.work += domain as u64;
        if self.fused == 0 {
            self.steps += 1;
        }
    }

    /// Runs `update(i)` for every `i` in `0..domain`, then one barrier.
    pub fn step<F>(&mut self, domain: usize, update: F)
    where
        F: Fn(usize) + Sync + Send,
    {
        match &self.pool {
            Some(pool) => pool.install(|| (0..domain).into_par_iter().for_each(&update)),
            None => (0..domain).for_each(&update),
        }
        self.barrier(domain);
    }

    /// A step whose element `i` writes only its private output slot `i`.
    pub fn map<T, F>(&mut self, domain: usize, update: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        let out = match &self.pool {
            Some(pool) => pool.install(|| (0..domain).into_par_iter().map(&update).collect()),
            None => (0..domain).map(&update).collect(),
        };
        self.barrier(domain);
        out
    }

    /// Runs several dependent sub-steps inside a single barrier, the way one
    /// kernel performs a fixed number of rounds per thread before returning.
    /// Work is still counted per sub-step.
    pub fn fused<R>(&mut self, body: impl FnOnce(&mut Engine) -> R) -> R {
        self.fused += 1;
        let out = body(self);
        self.fused -= 1;
        if self.fused == 0 {
            self.steps += 1;
        }
        out
    }

    /// Accounts for a stage executed outside the engine (e.g. a device sort)
    /// at its modeled step and work cost.
    pub fn charge(&mut self, steps: u64, work: u64) {
        self.work += work;
        if self.fused == 0 {
            self.steps += steps;
        }
    }
}

/// Shared array written during a step through order-independent operations.
pub struct Slots(Vec<AtomicU64>);

impl Slots {
    pub fn new(len: usize, init: u64) -> Self {
        Self((0..len).map(|_| AtomicU64::new(init)).collect())
    }

    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        Self(values.into_iter().map(AtomicU64::new).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i].load(Ordering::Relaxed)
    }

    /// Plain write; only valid when `i` has a single writer in the step.
    pub fn set(&self, i: usize, value: u64) {
        self.0[i].store(value, Ordering::Relaxed);
    }

    /// Returns true if `value` lowered the slot.
    pub fn min(&self, i: usize, value: u64) -> bool {
        self.0[i].fetch_min(value, Ordering::Relaxed) > value
    }

    /// Returns true if `value` raised the slot.
    pub fn max(&self, i: usize, value: u64) -> bool {
        self.0[i].fetch_max(value, Ordering::Relaxed) < value
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0.into_iter().map(AtomicU64::into_inner).collect()
    }
}

/// Write-once boolean.
#[derive(Default)]
pub struct Flag(AtomicBool);

impl Flag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn raise(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_raised(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Packs two 32-bit quantities so that `u64` order is lexicographic order.
pub fn pack(hi: usize, lo: usize) -> u64 {
    debug_assert!(hi < u32::MAX as usize && lo < u32::MAX as usize);
    ((hi as u64) << 32) | lo as u64
}

pub fn unpack(packed: u64) -> (usize, usize) {
    ((packed >> 32) as usize, (packed & 0xffff_ffff) as usize)
}

/// `Some(x)` for any value other than [`NIL`].
pub fn slot(value: u64) -> Option<usize> {
    (value != NIL).then_some(value as usize)
}
