//! Logical work accounting.
//!
//! Operators report elementary steps (edge scans, vertex visits) to a
//! thread-local counter. The exploration driver reads it in logical-cost mode
//! so that its interleaving decisions are reproducible.

use std::cell::Cell;

thread_local! {
    static UNITS: Cell<u64> = const { Cell::new(0) };
}

/// Records `n` units of work on the current thread.
#[inline]
pub fn tally(n: u64) {
    UNITS.with(|u| u.set(u.get().wrapping_add(n)));
}

/// Units recorded on this thread so far.
pub fn current() -> u64 {
    UNITS.with(Cell::get)
}

/// Runs `f` and returns its result with the units it recorded.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = current();
    let out = f();
    (out, current().wrapping_sub(before))
}
