//! Splitting an enumeration over worker threads.

use std::num::NonZeroUsize;
use std::thread;

use boolspec_core::verify::{ClassTally, Enumeration, PropositionReport};
use boolspec_core::Result;

/// `requested`, or the available parallelism for 0.
pub fn resolve_workers(requested: usize) -> usize {
    match requested {
        0 => thread::available_parallelism().map_or(1, NonZeroUsize::get),
        w => w,
    }
}

/// Same report as [`Enumeration::run`], for any worker count.
pub fn run(e: &Enumeration, workers: usize) -> Result<PropositionReport> {
    let total = e.function_count();
    let workers = (workers.max(1) as u64).min(total);
    if workers <= 1 {
        return e.run();
    }
    let chunk = total.div_ceil(workers);
    let tallies: Vec<ClassTally> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = w * chunk..((w + 1) * chunk).min(total);
                s.spawn(move || e.scan(range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut merged = ClassTally::default();
    for t in tallies {
        merged.merge(t);
    }
    e.finish(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use boolspec_core::ProductDistribution;

    #[test]
    fn worker_counts_agree() {
        let e = Enumeration::uniform(3, 1).unwrap();
        let single = e.run().unwrap();
        for w in [1, 2, 3, 7, 64, 1000] {
            assert_eq!(run(&e, w).unwrap(), single);
        }
        let d = ProductDistribution::new(vec![-0.4, 0.2, 0.6]).unwrap();
        let e = Enumeration::product(3, 2, d).unwrap();
        assert_eq!(run(&e, 5).unwrap(), e.run().unwrap());
    }
}
