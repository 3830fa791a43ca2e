//! Parallel sup-reduction over deterministic sample streams.
//!
//! Scans map a sample index to a defect and keep the maximum. The reduction
//! is an associative max with "lowest index wins" on ties, so the winner is
//! the same for any partitioning of the index range across workers. Witness
//! construction happens afterwards by regenerating the winning sample from
//! its index, which keeps the hot loop allocation-light.

use crate::error::Result;
use rayon::prelude::*;

/// One sample's defect measurement.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Measured {
    /// Scale-normalized defect; what verdicts compare to thresholds.
    pub normalized: f64,
    /// Raw defect at the same sample.
    pub raw: f64,
}

impl Measured {
    pub fn absolute(value: f64) -> Self {
        Measured {
            normalized: value,
            raw: value,
        }
    }
}

/// Evaluates `measure` at every index in `0..n` and returns the sample with
/// the largest normalized defect, together with its index.
pub(crate) fn sup_scan<F>(n: u64, measure: F) -> Result<(Measured, u64)>
where
    F: Fn(u64) -> Result<Measured> + Sync,
{
    debug_assert!(n > 0, "scan over an empty index range");
    let best = (0..n)
        .into_par_iter()
        .map(|i| measure(i).map(|m| (m, i)))
        .try_reduce(sup_identity, |a, b| Ok(pick(a, b)))?;
    Ok(best)
}

/// Identity element of the sup reduction: loses to any real sample.
pub(crate) fn sup_identity() -> (Measured, u64) {
    (
        Measured {
            normalized: f64::NEG_INFINITY,
            raw: f64::NEG_INFINITY,
        },
        u64::MAX,
    )
}

/// Larger normalized defect wins; exact ties go to the lower sample index so
/// the result does not depend on reduction order.
pub(crate) fn pick(a: (Measured, u64), b: (Measured, u64)) -> (Measured, u64) {
    if b.0.normalized > a.0.normalized || (b.0.normalized == a.0.normalized && b.1 < a.1) {
        b
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_the_maximum_and_its_index() {
        let (m, i) = sup_scan(1000, |i| {
            Ok(Measured::absolute(if i == 637 { 2.0 } else { 1.0 / (i + 1) as f64 }))
        })
        .unwrap();
        assert_eq!(i, 637);
        assert_eq!(m.normalized, 2.0);
    }

    #[test]
    fn ties_resolve_to_the_lowest_index() {
        let (_, i) = sup_scan(100, |_| Ok(Measured::absolute(1.0))).unwrap();
        assert_eq!(i, 0);
    }

    #[test]
    fn result_is_identical_across_thread_counts() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                sup_scan(10_000, |i| {
                    // deterministic pseudo-defects with plenty of ties
                    Ok(Measured::absolute(((i * 2654435761) % 1000) as f64))
                })
                .unwrap()
            })
        };
        let (m1, i1) = run(1);
        let (m8, i8) = run(8);
        assert_eq!(i1, i8);
        assert_eq!(m1.normalized, m8.normalized);
    }
}
