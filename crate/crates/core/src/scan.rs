//! Deterministic grid scans over `t_k = start + k·step`.
//!
//! All searches in this crate reduce to three primitives: first grid index
//! satisfying a predicate, grid argmax of a function, and maximal runs of a
//! predicate. With the `parallel` feature the index space is partitioned
//! across a rayon pool; results are merged so that the reported hit is the
//! minimal-index one and argmax ties break toward the smaller index, which
//! makes the parallel and sequential paths return identical answers.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Uniform grid `t_k = start + k·step`.
#[derive(Debug, Clone, Copy)]
pub struct Grid {
    pub start: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(start: f64, step: f64) -> Self {
        debug_assert!(step > 0.0 && step.is_finite());
        Grid { start, step }
    }

    #[inline]
    pub fn t(&self, k: u64) -> f64 {
        self.start + k as f64 * self.step
    }
}

/// Smallest k in `0..count` with `pred(t_k)`, or None.
pub fn first_hit<F>(grid: Grid, count: u64, pred: F) -> Option<(u64, f64)>
where
    F: Fn(f64) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        first_hit_par(grid, count, pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_hit_seq(grid, count, pred)
    }
}

pub fn first_hit_seq<F>(grid: Grid, count: u64, pred: F) -> Option<(u64, f64)>
where
    F: Fn(f64) -> bool,
{
    (0..count).find_map(|k| {
        let t = grid.t(k);
        pred(t).then_some((k, t))
    })
}

#[cfg(feature = "parallel")]
pub fn first_hit_par<F>(grid: Grid, count: u64, pred: F) -> Option<(u64, f64)>
where
    F: Fn(f64) -> bool + Sync,
{
    // Doubling blocks keep the common case (an early hit) from paying for
    // the whole range; find_first keeps the minimal-k contract within a block.
    let mut lo = 0u64;
    let mut block = 1u64 << 16;
    while lo < count {
        let hi = count.min(lo.saturating_add(block));
        let hit = (lo..hi)
            .into_par_iter()
            .find_first(|&k| pred(grid.t(k)))
            .map(|k| (k, grid.t(k)));
        if hit.is_some() {
            return hit;
        }
        lo = hi;
        block = block.saturating_mul(2);
    }
    None
}

/// Grid argmax of `f` over `0..count`; ties break to the smaller index.
/// Returns `(k, t_k, f(t_k))`.
pub fn argmax<F>(grid: Grid, count: u64, f: F) -> Option<(u64, f64, f64)>
where
    F: Fn(f64) -> f64 + Sync,
{
    #[cfg(feature = "parallel")]
    {
        argmax_par(grid, count, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        argmax_seq(grid, count, f)
    }
}

pub fn argmax_seq<F>(grid: Grid, count: u64, f: F) -> Option<(u64, f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let mut best: Option<(u64, f64)> = None;
    for k in 0..count {
        let v = f(grid.t(k));
        match best {
            Some((_, bv)) if bv >= v => {}
            _ => best = Some((k, v)),
        }
    }
    best.map(|(k, v)| (k, grid.t(k), v))
}

#[cfg(feature = "parallel")]
pub fn argmax_par<F>(grid: Grid, count: u64, f: F) -> Option<(u64, f64, f64)>
where
    F: Fn(f64) -> f64 + Sync,
{
    (0..count)
        .into_par_iter()
        .map(|k| (k, f(grid.t(k))))
        .reduce_with(|a, b| {
            // strictly-greater wins; on equal values keep the smaller index
            if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
                b
            } else {
                a
            }
        })
        .map(|(k, v)| (k, grid.t(k), v))
}

/// Maximal runs of consecutive grid indices where `pred` holds, as inclusive
/// index pairs. Predicate evaluation is parallel; run stitching is linear.
pub fn true_runs<F>(grid: Grid, count: u64, pred: F) -> Vec<(u64, u64)>
where
    F: Fn(f64) -> bool + Sync,
{
    let flags = eval_flags(grid, count, &pred);
    let mut runs = Vec::new();
    let mut open: Option<u64> = None;
    for (k, &ok) in flags.iter().enumerate() {
        match (ok, open) {
            (true, None) => open = Some(k as u64),
            (false, Some(s)) => {
                runs.push((s, k as u64 - 1));
                open = None;
            }
            _ => {}
        }
    }
    if let Some(s) = open {
        runs.push((s, count - 1));
    }
    runs
}

fn eval_flags<F>(grid: Grid, count: u64, pred: &F) -> Vec<bool>
where
    F: Fn(f64) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().map(|k| pred(grid.t(k))).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(|k| pred(grid.t(k))).collect()
    }
}

/// Deterministic chunked sum: partial sums over fixed-size chunks are
/// computed (in parallel when enabled) and then folded in chunk order, so
/// the grouping of floating-point additions never depends on thread count.
pub fn chunked_sum<F>(count: u64, term: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    const CHUNK: u64 = 4096;
    let n_chunks = count.div_ceil(CHUNK);
    let partial = |c: u64| -> f64 {
        let lo = c * CHUNK;
        let hi = count.min(lo + CHUNK);
        (lo..hi).map(&term).sum()
    };
    #[cfg(feature = "parallel")]
    {
        (0..n_chunks)
            .into_par_iter()
            .map(partial)
            .collect::<Vec<_>>()
            .into_iter()
            .sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n_chunks).map(partial).sum()
    }
}
