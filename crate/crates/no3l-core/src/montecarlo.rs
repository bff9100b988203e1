//! Monte Carlo stress tests of the independence assumption.
//!
//! The heuristic treats all collinearity events inside a random kn-point
//! subset as independent. Nobody has proved that, and it has been publicly
//! doubted; these samplers measure what actually happens. Uniform random
//! subsets are drawn by a partial Fisher–Yates over a reusable index array
//! (O(subset_size) per sample after O(n²) setup, with swap rollback),
//! survival is tested with the early-exit collinear scan, and the observed
//! log-survival is compared against the analytic prediction. The gap's sign
//! and size are reported as data with error bars — no expected value is
//! asserted anywhere, because none is known.
//!
//! Every trial records its seed, worker count, and the RNG algorithm;
//! identical (n, k, samples, seed, workers) replays identical tallies.
//! Worker w derives its stream from `seed + w`, and samples are split as
//! evenly as possible with the remainder going to the lowest-numbered
//! workers.

use alloc::vec::Vec;
use core::fmt;

use crate::census::{self, CensusError};
use crate::grid::{collinear, CollinearScan, GridPoint, GridSize};
use crate::heuristic::{self, HeuristicError};
use crate::math;
use crate::rng::Rng;

/// Tallies and provenance of one Monte Carlo trial.
#[derive(Clone, Copy, Debug)]
pub struct TrialSummary {
    pub n: GridSize,
    pub k: f64,
    /// round(k·n) points per sampled subset (3 for triple trials).
    pub subset_size: u32,
    pub samples: u64,
    /// Samples where the trial's event occurred: "no three in line" for
    /// survival trials, "the triple is collinear" for triple trials.
    pub survivors: u64,
    pub p_hat: f64,
    /// Binomial standard error √(p̂(1−p̂)/samples).
    pub stderr: f64,
    /// Natural log of the analytic prediction for the event probability:
    /// the independence survival log for survival trials, ln(t_n/C(n², 3))
    /// for triple trials.
    pub predicted_log: f64,
    pub seed: u64,
    pub workers: usize,
}

impl TrialSummary {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        n: GridSize,
        k: f64,
        subset_size: u32,
        samples: u64,
        survivors: u64,
        predicted_log: f64,
        seed: u64,
        workers: usize,
    ) -> Self {
        let p_hat = survivors as f64 / samples as f64;
        TrialSummary {
            n,
            k,
            subset_size,
            samples,
            survivors,
            p_hat,
            stderr: math::sqrt(p_hat * (1.0 - p_hat) / samples as f64),
            predicted_log,
            seed,
            workers,
        }
    }
}

/// Observed-minus-predicted log survival.
#[derive(Clone, Copy, Debug)]
pub struct IndependenceGap {
    pub summary: TrialSummary,
    pub outcome: GapOutcome,
}

#[derive(Clone, Copy, Debug)]
pub enum GapOutcome {
    /// ln(p̂) − predicted_log, with the delta-method error bar stderr/p̂.
    /// Positive means survival exceeded the independence prediction.
    Measured { gap: f64, stderr: f64 },
    /// Every sample contained a collinear triple, so ln(p̂) is −∞ and the
    /// gap can only be bounded from above (rule of three: p < 3/samples at
    /// 95% confidence).
    AllSamplesDied { gap_upper_bound: f64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum McError {
    ZeroSamples,
    Heuristic(HeuristicError),
    Census(CensusError),
}

impl From<HeuristicError> for McError {
    fn from(e: HeuristicError) -> Self {
        McError::Heuristic(e)
    }
}

impl From<CensusError> for McError {
    fn from(e: CensusError) -> Self {
        McError::Census(e)
    }
}

impl fmt::Display for McError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McError::ZeroSamples => write!(f, "sample count must be positive"),
            McError::Heuristic(e) => write!(f, "{e}"),
            McError::Census(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for McError {}

/// Uniform m-subsets of `0..count` by partial Fisher–Yates with rollback:
/// each draw starts from the identity array, so inclusion is exactly
/// uniform, and undoing the swaps in reverse restores it in O(m).
struct SubsetSampler {
    indices: Vec<u64>,
    swaps: Vec<usize>,
}

impl SubsetSampler {
    fn new(count: u64) -> Self {
        SubsetSampler {
            indices: (0..count).collect(),
            swaps: Vec::new(),
        }
    }

    fn draw(&mut self, m: usize, rng: &mut Rng) -> &[u64] {
        debug_assert!(self.swaps.is_empty());
        let len = self.indices.len();
        for i in 0..m {
            let j = i + rng.below((len - i) as u64) as usize;
            self.indices.swap(i, j);
            self.swaps.push(j);
        }
        &self.indices[..m]
    }

    fn rollback(&mut self) {
        for i in (0..self.swaps.len()).rev() {
            let j = self.swaps[i];
            self.indices.swap(i, j);
        }
        self.swaps.clear();
    }
}

/// Survivors among `samples` uniform subsets of size m on one RNG stream.
fn survival_worker(n: GridSize, m: usize, samples: u64, stream_seed: u64) -> u64 {
    let mut rng = Rng::from_seed(stream_seed);
    let mut sampler = SubsetSampler::new(n.point_count());
    let mut scan = CollinearScan::new();
    let mut points: Vec<GridPoint> = Vec::with_capacity(m);
    let mut survivors = 0;
    for _ in 0..samples {
        points.clear();
        points.extend(sampler.draw(m, &mut rng).iter().map(|&i| n.point_at(i)));
        if scan.first_triple(&points).is_none() {
            survivors += 1;
        }
        sampler.rollback();
    }
    survivors
}

/// Collinear hits among `samples` uniform distinct triples on one stream.
fn triple_worker(n: GridSize, samples: u64, stream_seed: u64) -> u64 {
    let mut rng = Rng::from_seed(stream_seed);
    let mut sampler = SubsetSampler::new(n.point_count());
    let mut hits = 0;
    for _ in 0..samples {
        let idx = sampler.draw(3, &mut rng);
        let (a, b, c) = (n.point_at(idx[0]), n.point_at(idx[1]), n.point_at(idx[2]));
        if collinear(a, b, c) {
            hits += 1;
        }
        sampler.rollback();
    }
    hits
}

/// Samples per worker: as even as possible, remainder to the first workers.
fn share(samples: u64, workers: usize, w: usize) -> u64 {
    let base = samples / workers as u64;
    base + u64::from((w as u64) < samples % workers as u64)
}

/// Draws `samples` uniform random subsets of round(k·n) grid points and
/// tallies how many contain no three in line. Deterministic given the seed.
pub fn sample_survival(
    n: GridSize,
    k: f64,
    samples: u64,
    seed: u64,
) -> Result<TrialSummary, McError> {
    sample_survival_workers(n, k, samples, seed, 1)
}

fn sample_survival_workers(
    n: GridSize,
    k: f64,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<TrialSummary, McError> {
    if samples == 0 {
        return Err(McError::ZeroSamples);
    }
    let m = heuristic::subset_size(n, k)?;
    let predicted_log = heuristic::survival_log(n, k);
    let survivors: u64 = (0..workers)
        .map(|w| {
            survival_worker(
                n,
                m as usize,
                share(samples, workers, w),
                seed.wrapping_add(w as u64),
            )
        })
        .sum();
    Ok(TrialSummary::assemble(
        n,
        k,
        m as u32,
        samples,
        survivors,
        predicted_log,
        seed,
        workers,
    ))
}

/// Threaded [`sample_survival`]: worker w runs the stream `seed + w`.
/// Reproducible for a fixed (seed, worker count) pair.
#[cfg(feature = "std")]
pub fn sample_survival_threaded(
    n: GridSize,
    k: f64,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<TrialSummary, McError> {
    let workers = workers.max(1);
    if workers == 1 {
        return sample_survival_workers(n, k, samples, seed, 1);
    }
    if samples == 0 {
        return Err(McError::ZeroSamples);
    }
    let m = heuristic::subset_size(n, k)?;
    let predicted_log = heuristic::survival_log(n, k);
    let survivors: u64 = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let quota = share(samples, workers, w);
                let stream = seed.wrapping_add(w as u64);
                scope.spawn(move || survival_worker(n, m as usize, quota, stream))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("survival worker panicked"))
            .sum()
    });
    Ok(TrialSummary::assemble(
        n,
        k,
        m as u32,
        samples,
        survivors,
        predicted_log,
        seed,
        workers,
    ))
}

/// Samples uniform random distinct triples and tallies collinear ones;
/// p̂ estimates t_n/C(n², 3). The summary's `k` is 3/n so that
/// round(k·n) = 3 names the same subset-size family.
pub fn sample_triple_collinearity(
    n: GridSize,
    samples: u64,
    seed: u64,
) -> Result<TrialSummary, McError> {
    sample_triples_workers(n, samples, seed, 1)
}

fn sample_triples_workers(
    n: GridSize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<TrialSummary, McError> {
    if samples == 0 {
        return Err(McError::ZeroSamples);
    }
    if n.get() < 2 {
        return Err(McError::Heuristic(HeuristicError::SideTooSmall {
            n: n.get(),
            min: 2,
        }));
    }
    let predicted_log = triple_predicted_log(n)?;
    let hits: u64 = (0..workers)
        .map(|w| triple_worker(n, share(samples, workers, w), seed.wrapping_add(w as u64)))
        .sum();
    Ok(TrialSummary::assemble(
        n,
        3.0 / n.get() as f64,
        3,
        samples,
        hits,
        predicted_log,
        seed,
        workers,
    ))
}

/// Threaded [`sample_triple_collinearity`] with the `seed + w` stream rule.
#[cfg(feature = "std")]
pub fn sample_triple_collinearity_threaded(
    n: GridSize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<TrialSummary, McError> {
    let workers = workers.max(1);
    if workers == 1 {
        return sample_triples_workers(n, samples, seed, 1);
    }
    if samples == 0 {
        return Err(McError::ZeroSamples);
    }
    if n.get() < 2 {
        return Err(McError::Heuristic(HeuristicError::SideTooSmall {
            n: n.get(),
            min: 2,
        }));
    }
    let predicted_log = triple_predicted_log(n)?;
    let hits: u64 = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let quota = share(samples, workers, w);
                let stream = seed.wrapping_add(w as u64);
                scope.spawn(move || triple_worker(n, quota, stream))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("triple worker panicked"))
            .sum()
    });
    Ok(TrialSummary::assemble(
        n,
        3.0 / n.get() as f64,
        3,
        samples,
        hits,
        predicted_log,
        seed,
        workers,
    ))
}

/// ln(t_n/C(n², 3)) from the exact census (−∞ when t_n = 0).
fn triple_predicted_log(n: GridSize) -> Result<f64, McError> {
    let t = census::count_triples_fast(n)?;
    let total = census::max_triple_count(n).ok_or(McError::Census(CensusError::Overflow))?;
    Ok(math::ln(t.value() as f64 / total as f64))
}

/// Measures ln(observed survival) − survival_log(n, k), the log-scale
/// discrepancy between the Monte Carlo survival rate and the independence
/// prediction.
pub fn independence_gap(
    n: GridSize,
    k: f64,
    samples: u64,
    seed: u64,
) -> Result<IndependenceGap, McError> {
    let summary = sample_survival(n, k, samples, seed)?;
    Ok(gap_from_summary(summary))
}

/// Threaded [`independence_gap`].
#[cfg(feature = "std")]
pub fn independence_gap_threaded(
    n: GridSize,
    k: f64,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<IndependenceGap, McError> {
    let summary = sample_survival_threaded(n, k, samples, seed, workers)?;
    Ok(gap_from_summary(summary))
}

fn gap_from_summary(summary: TrialSummary) -> IndependenceGap {
    let outcome = if summary.survivors == 0 {
        GapOutcome::AllSamplesDied {
            gap_upper_bound: math::ln(3.0 / summary.samples as f64) - summary.predicted_log,
        }
    } else {
        GapOutcome::Measured {
            gap: math::ln(summary.p_hat) - summary.predicted_log,
            stderr: summary.stderr / summary.p_hat,
        }
    };
    IndependenceGap { summary, outcome }
}
