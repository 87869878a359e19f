use crate::{cayley_hamilton_residual, lawton_residual, random_unimodular, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Samples per shard. Shard i draws from stream i of the seeded generator, so
/// results do not depend on the number of worker threads.
pub const SHARD_SIZE: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct SelftestReport {
    pub samples: usize,
    pub seed: u64,
    pub max_lawton_residual: f64,
    pub max_cayley_hamilton: f64,
    pub rejected_draws: u64,
    pub tolerances: Tolerances,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.max_lawton_residual <= self.tolerances.random_relative
            && self.max_cayley_hamilton <= self.tolerances.cayley_hamilton
    }
}

#[derive(Default, Clone, Copy)]
struct ShardResult {
    lawton: f64,
    cayley: f64,
    rejected: u64,
}

fn run_shard(seed: u64, shard: usize, count: usize) -> ShardResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard as u64);
    let mut out = ShardResult::default();
    for _ in 0..count {
        let (a, ra) = random_unimodular(&mut rng);
        let (b, rb) = random_unimodular(&mut rng);
        out.rejected += u64::from(ra + rb);
        out.lawton = out.lawton.max(lawton_residual(&a, &b));
        out.cayley = out.cayley.max(cayley_hamilton_residual(&a)).max(cayley_hamilton_residual(&b));
    }
    out
}

/// Checks τ² − Pτ + Q = 0 and Cayley–Hamilton on `samples` random pairs.
pub fn run_selftest(samples: usize, seed: u64, tolerances: Tolerances, workers: usize) -> SelftestReport {
    let shards = samples.div_ceil(SHARD_SIZE);
    let size = |i: usize| SHARD_SIZE.min(samples - i * SHARD_SIZE);
    let workers = workers.clamp(1, shards.max(1));
    let mut results = vec![ShardResult::default(); shards];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..shards).step_by(workers).map(|i| (i, run_shard(seed, i, size(i)))).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("selftest worker panicked") {
                results[i] = r;
            }
        }
    });
    SelftestReport {
        samples,
        seed,
        max_lawton_residual: results.iter().map(|r| r.lawton).fold(0.0, f64::max),
        max_cayley_hamilton: results.iter().map(|r| r.cayley).fold(0.0, f64::max),
        rejected_draws: results.iter().map(|r| r.rejected).sum(),
        tolerances,
    }
}
