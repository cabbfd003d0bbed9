/// A finite element source that can be swept over any index sub-range.
///
/// Implementations must visit elements of `scan(start, end)` in index order;
/// all determinism guarantees of [`parallel_fold`] rest on that plus the
/// exactness of the accumulator merges.
pub trait Splittable: Sync {
    type Elem;

    fn len(&self) -> u64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn scan(&self, start: u64, end: u64, visit: &mut dyn FnMut(&Self::Elem));
}

/// Commutative monoid used to merge per-chunk accumulators. Merges must be
/// exact (integer maps, sets, rationals), so the fold result is identical
/// for every partitioning of the range and every merge order.
pub trait Monoid: Sized + Send {
    fn empty() -> Self;
    fn merge(&mut self, other: Self);
}

impl Monoid for () {
    fn empty() {}
    fn merge(&mut self, _other: ()) {}
}

impl<A: Monoid, B: Monoid> Monoid for (A, B) {
    fn empty() -> Self {
        (A::empty(), B::empty())
    }
    fn merge(&mut self, other: Self) {
        self.0.merge(other.0);
        self.1.merge(other.1);
    }
}

impl<A: Monoid, B: Monoid, C: Monoid> Monoid for (A, B, C) {
    fn empty() -> Self {
        (A::empty(), B::empty(), C::empty())
    }
    fn merge(&mut self, other: Self) {
        self.0.merge(other.0);
        self.1.merge(other.1);
        self.2.merge(other.2);
    }
}

impl<A: Monoid, B: Monoid, C: Monoid, D: Monoid> Monoid for (A, B, C, D) {
    fn empty() -> Self {
        (A::empty(), B::empty(), C::empty(), D::empty())
    }
    fn merge(&mut self, other: Self) {
        self.0.merge(other.0);
        self.1.merge(other.1);
        self.2.merge(other.2);
        self.3.merge(other.3);
    }
}

/// Chunk size as a pure function of the range length, so the partitioning
/// (and therefore every per-chunk accumulator) is independent of the worker
/// count.
fn chunk_size(len: u64) -> u64 {
    (len / 64).clamp(1 << 13, 1 << 20).min(len.max(1))
}

/// Folds `step` over the whole source and merges the per-chunk accumulators.
///
/// The result is bit-identical at any worker count, including the
/// sequential build without the `parallel` feature.
pub fn parallel_fold<S, A, F>(source: &S, step: F) -> A
where
    S: Splittable + ?Sized,
    A: Monoid,
    F: Fn(&mut A, &S::Elem) + Sync,
{
    let len = source.len();
    if len == 0 {
        return A::empty();
    }
    let chunk = chunk_size(len);
    let chunks = len.div_ceil(chunk);

    let fold_chunk = |c: u64| {
        let start = c * chunk;
        let end = (start + chunk).min(len);
        let mut acc = A::empty();
        source.scan(start, end, &mut |elem| step(&mut acc, elem));
        acc
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..chunks)
            .into_par_iter()
            .map(fold_chunk)
            .reduce(A::empty, |mut a, b| {
                a.merge(b);
                a
            })
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut acc = A::empty();
        for c in 0..chunks {
            acc.merge(fold_chunk(c));
        }
        acc
    }
}

/// Runs `job` on a dedicated pool of `threads` workers. On a sequential
/// build the thread count is ignored and the job runs in place.
pub fn run_with_threads<R: Send>(threads: usize, job: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool construction")
            .install(job)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        job()
    }
}

/// Worker count: the `COXSTAT_THREADS` environment variable when set,
/// otherwise the available parallelism (1 on sequential builds).
pub fn thread_count() -> usize {
    if let Ok(v) = std::env::var("COXSTAT_THREADS") {
        if let Ok(t) = v.trim().parse::<usize>() {
            if t > 0 {
                return t;
            }
        }
    }
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::GroupUniverse;

    struct Count(u64);

    impl Monoid for Count {
        fn empty() -> Self {
            Count(0)
        }
        fn merge(&mut self, other: Self) {
            self.0 += other.0;
        }
    }

    #[test]
    fn count_fold_gives_group_order() {
        let u = GroupUniverse::new("B:4".parse().unwrap()).unwrap();
        let Count(total) = parallel_fold(&u, |acc: &mut Count, _| acc.0 += 1);
        assert_eq!(total, 384);
    }

    #[test]
    fn fold_is_identical_across_worker_counts() {
        let u = GroupUniverse::new("A:7".parse().unwrap()).unwrap();
        let run = || {
            let Count(c) = parallel_fold(&u, |acc: &mut Count, w| {
                acc.0 += w.length() * 3 + 1;
            });
            c
        };
        let reference = run_with_threads(1, run);
        for threads in [2, 4, 8] {
            assert_eq!(run_with_threads(threads, run), reference);
        }
    }
}
