//! Shared worker pool, sized by `RADEMACHER_TAILS_THREADS` (0 or unset = auto).

use std::sync::OnceLock;

use rayon::{ThreadPool, ThreadPoolBuilder};

pub const THREADS_ENV: &str = "RADEMACHER_TAILS_THREADS";

/// Requested worker count; 0 means one per available core.
pub fn requested_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        ThreadPoolBuilder::new()
            .num_threads(requested_threads())
            .thread_name(|i| format!("rt-worker-{i}"))
            .build()
            .expect("thread pool")
    })
}

/// Run `f` inside a dedicated pool of exactly `n` workers (tests of schedule independence).
pub fn with_threads<R: Send>(n: usize, f: impl FnOnce() -> R + Send) -> R {
    ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("thread pool")
        .install(f)
}
