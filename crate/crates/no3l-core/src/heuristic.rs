//! The probabilistic estimate chain for the number of no-three-in-line
//! solutions, evaluated numerically in log-space.
//!
//! For a random kn-point subset of the n×n grid, treating the C(kn, 3)
//! "this triple is collinear" events as independent gives a survival
//! probability of exp(−3k³·n·ln n/π² + O(n)), and multiplying by C(n², kn)
//! subsets gives a solution-count estimate whose logarithm is
//! (k − 3k³/π²)·n·ln n + O(n). The coefficient k − 3k³/π² is the corrected
//! leading exponent; the historically published derivation had 2 − 3k³/π²
//! instead, which coincides with it exactly at k = 2 — the error is
//! invisible right at the pigeonhole density. The positive roots of the two
//! variants are the two conjectured constants: π/√3 ≈ 1.813799 (corrected)
//! and (2π²/3)^{1/3} ≈ 1.873856 (original).
//!
//! Everything here is carried in logarithms: raw survival probabilities
//! underflow f64 past n ≈ 200 at k near 2. Binomials go through exact
//! log-gamma, not Stirling, so results are reproducible to machine
//! precision; the O(n) slack of the derivation is always reported as an
//! explicit ± bracket and never folded into a point value.

use core::f64::consts::{LN_10, PI};
use core::fmt;

use crate::census::{self, CensusError};
use crate::grid::GridSize;
use crate::math::{self, ln_choose};

/// Default constant C for the ±C·n slack bracket.
pub const DEFAULT_SLACK_CONSTANT: f64 = 1.0;

/// The conjectured density constants: each is the positive root of its
/// exponent variant.
#[derive(Clone, Copy, Debug)]
pub struct ConjectureConstants {
    /// π/√3, root of k − 3k³/π².
    pub k_corrected: f64,
    /// (2π²/3)^{1/3}, root of 2 − 3k³/π².
    pub k_original: f64,
}

pub fn conjecture_constants() -> ConjectureConstants {
    ConjectureConstants {
        k_corrected: PI / math::sqrt(3.0),
        k_original: math::cbrt(2.0 * PI * PI / 3.0),
    }
}

#[inline]
fn three_k_cubed_over_pi_sq(k: f64) -> f64 {
    3.0 * (k * k * k) / (PI * PI)
}

/// Corrected leading exponent of n in the solution-count estimate.
#[inline]
pub fn exponent_corrected(k: f64) -> f64 {
    k - three_k_cubed_over_pi_sq(k)
}

/// The erroneous published variant, in the same exponent-of-n convention.
#[inline]
pub fn exponent_erroneous(k: f64) -> f64 {
    2.0 - three_k_cubed_over_pi_sq(k)
}

/// Both exponent variants side by side. They share the 3k³/π² term
/// bit-for-bit, so their difference is exactly k − 2 and they coincide
/// exactly at k = 2.
#[derive(Clone, Copy, Debug)]
pub struct ExponentComparison {
    pub corrected: f64,
    pub erroneous: f64,
}

pub fn exponent_comparison(k: f64) -> ExponentComparison {
    ExponentComparison {
        corrected: exponent_corrected(k),
        erroneous: exponent_erroneous(k),
    }
}

/// ln of the independence survival probability: −3k³·n·ln(n)/π².
///
/// The O(n) slack of the derivation is *not* included; pair this with
/// [`survival_slack_log`] for the ±C·n bracket. Meaningful for n ≥ 2 and
/// k > 0 with kn ≥ 3 (fewer than three points cannot lose).
pub fn survival_log(n: GridSize, k: f64) -> f64 {
    debug_assert!(n.get() >= 2 && k > 0.0);
    let nf = n.get() as f64;
    -three_k_cubed_over_pi_sq(k) * nf * math::ln(nf)
}

/// Half-width of the ±C·n slack bracket in log-space.
pub fn survival_slack_log(n: GridSize, slack_constant: f64) -> f64 {
    slack_constant * n.get() as f64
}

/// Probability that three uniformly chosen distinct grid points are
/// collinear: exactly t_n/C(n², 3), and its 18·ln n/(π²·n²) asymptotic.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct TripleProbability {
    pub exact: f64,
    pub asymptotic: f64,
}

pub fn triple_probability(n: GridSize) -> Result<TripleProbability, HeuristicError> {
    if n.get() < 2 {
        return Err(HeuristicError::SideTooSmall { n: n.get(), min: 2 });
    }
    let t = census::count_triples_fast(n)?;
    let total = census::max_triple_count(n).ok_or(HeuristicError::Census(CensusError::Overflow))?;
    let nf = n.get() as f64;
    Ok(TripleProbability {
        exact: t.value() as f64 / total as f64,
        asymptotic: 18.0 * math::ln(nf) / (PI * PI * nf * nf),
    })
}

/// The solution-count estimate at (n, k), in log₁₀, together with the
/// coefficient of n·ln n in its natural log.
#[derive(Clone, Copy, Debug)]
pub struct SolutionCountEstimate {
    /// log₁₀ of C(n², round(kn)) · exp(survival_log), via exact log-gamma.
    pub count_log10: f64,
    /// k − 3k³/π², the corrected leading exponent.
    pub leading_exponent: f64,
}

pub fn estimate_solution_count(
    n: GridSize,
    k: f64,
) -> Result<SolutionCountEstimate, HeuristicError> {
    let m = subset_size(n, k)?;
    let ln_count = ln_choose(n.point_count(), m) + survival_log(n, k);
    Ok(SolutionCountEstimate {
        count_log10: ln_count / LN_10,
        leading_exponent: exponent_corrected(k),
    })
}

/// round(kn), validated into [3, n²].
pub fn subset_size(n: GridSize, k: f64) -> Result<u64, HeuristicError> {
    let m = math::round(k * n.get() as f64);
    let max = n.point_count();
    if !(m >= 3.0 && m <= max as f64) {
        return Err(HeuristicError::SubsetSizeOutOfRange {
            subset_size: m as i64,
            min: 3,
            max,
        });
    }
    Ok(m as u64)
}

/// Every quantity of the heuristic chain at one (n, k), log-space
/// throughout, with the O(n) slack as explicit ± half-widths.
#[derive(Clone, Copy, Debug)]
pub struct EstimateReport {
    pub n: GridSize,
    pub k: f64,
    /// t_n / C(n², 3), exact census over exact binomial.
    pub p_triple_exact: f64,
    /// 18·ln n/(π²·n²).
    pub p_triple_asym: f64,
    /// −3k³·n·ln n/π².
    pub survival_log: f64,
    /// ±C·n bracket half-width for `survival_log`.
    pub survival_slack_log: f64,
    /// log₁₀ of the solution-count estimate.
    pub count_log10: f64,
    /// The same ±C·n bracket, in log₁₀ units.
    pub count_log10_slack: f64,
    pub exponent_corrected: f64,
    pub exponent_erroneous: f64,
}

pub fn estimate_report(
    n: GridSize,
    k: f64,
    slack_constant: f64,
) -> Result<EstimateReport, HeuristicError> {
    let prob = triple_probability(n)?;
    let estimate = estimate_solution_count(n, k)?;
    let slack = survival_slack_log(n, slack_constant);
    let exponents = exponent_comparison(k);
    Ok(EstimateReport {
        n,
        k,
        p_triple_exact: prob.exact,
        p_triple_asym: prob.asymptotic,
        survival_log: survival_log(n, k),
        survival_slack_log: slack,
        count_log10: estimate.count_log10,
        count_log10_slack: slack / LN_10,
        exponent_corrected: exponents.corrected,
        exponent_erroneous: exponents.erroneous,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeuristicError {
    SideTooSmall { n: u32, min: u32 },
    SubsetSizeOutOfRange { subset_size: i64, min: u64, max: u64 },
    Census(CensusError),
}

impl From<CensusError> for HeuristicError {
    fn from(e: CensusError) -> Self {
        HeuristicError::Census(e)
    }
}

impl fmt::Display for HeuristicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeuristicError::SideTooSmall { n, min } => {
                write!(f, "grid side {n} too small, need at least {min}")
            }
            HeuristicError::SubsetSizeOutOfRange {
                subset_size,
                min,
                max,
            } => write!(
                f,
                "subset size round(k·n) = {subset_size} outside [{min}, {max}]"
            ),
            HeuristicError::Census(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HeuristicError {}
