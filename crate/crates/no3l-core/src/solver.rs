//! Exact maximum no-three-in-line search.
//!
//! The search walks columns left to right, committing 0, 1, or 2 points per
//! column (three in a column would already be three in line). Whenever a
//! point is placed, every grid cell on a line through it and any previously
//! chosen point becomes forbidden; the markings are undone through a trail
//! stack on backtrack, so each node costs time proportional to what it
//! changed. Branches inside a column are ordered greedily toward the
//! pigeonhole bound 2n: two-point choices in lexicographic (row₁, row₂)
//! order first, then single points, then the empty column.
//!
//! The same engine runs three ways: chasing a target size (stop at first
//! witness), proving optimality (exhaust the tree), and counting every
//! subset of the maximum size (exhaust without symmetry breaking, so counts
//! are raw labeled counts).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::grid::{GridPoint, GridSize, PointSet};
use crate::math::gcd;

/// Largest n for exhaustive maximum-solution counting by default.
pub const DEFAULT_EXHAUSTIVE_CAP: u32 = 5;

/// Default wall-clock budget when chasing the 2n target.
pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Abort after this many search nodes. With several threads the budget
    /// is split evenly across workers.
    pub node_budget: Option<u64>,
    /// Abort after this much wall time. Enforced by the [`solve`] driver;
    /// the `no_std` engine has no clock and relies on its stop callback.
    pub time_budget: Option<Duration>,
    /// Stop as soon as a set of at least this size is found.
    pub target_size: Option<u32>,
    /// Allow running with no budget and no target: exhaust the tree.
    pub prove_optimal: bool,
    /// Restrict the first column to canonical choices under the vertical
    /// flip y ↦ n−1−y. Sound for sizes and optimality proofs, not for
    /// solution counting.
    pub symmetry_breaking: bool,
    pub thread_count: usize,
}

impl SolverConfig {
    /// The documented default: chase the pigeonhole target 2n under a
    /// 60-second budget, with symmetry breaking on.
    pub fn chase_full_target(n: GridSize) -> Self {
        SolverConfig {
            node_budget: None,
            time_budget: Some(DEFAULT_TIME_BUDGET),
            target_size: Some(2 * n.get()),
            prove_optimal: false,
            symmetry_breaking: true,
            thread_count: 1,
        }
    }

    /// Exhaust the search tree and prove f_n. Exponential — small n only.
    pub fn prove_optimality() -> Self {
        SolverConfig {
            node_budget: None,
            time_budget: None,
            target_size: None,
            prove_optimal: true,
            symmetry_breaking: true,
            thread_count: 1,
        }
    }

    fn validate(&self) -> Result<(), SolverError> {
        if self.thread_count == 0 {
            return Err(SolverError::InvalidConfig("thread_count must be at least 1"));
        }
        if !self.prove_optimal
            && self.node_budget.is_none()
            && self.time_budget.is_none()
            && self.target_size.is_none()
        {
            return Err(SolverError::InvalidConfig(
                "set a node budget, time budget, or target size, or request prove_optimal",
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SolverResult {
    pub n: GridSize,
    pub best_size: u32,
    pub witness: PointSet,
    /// True iff the search tree was exhausted (neither a budget abort nor
    /// an early stop at the target size).
    ///
    /// Without a target this certifies `best_size` is the maximum. With a
    /// target it certifies no set of the target size exists: subtrees that
    /// provably cannot reach the target are pruned, so `best_size` is then
    /// only the largest set the directed search happened to complete.
    pub proven_optimal: bool,
    pub nodes_explored: u64,
    /// Wall time, filled in by the [`solve`] driver; zero when the engine
    /// runs without a clock.
    pub elapsed: Duration,
}

/// Exhaustive count of maximum no-three-in-line sets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MaximumSolutions {
    pub n: GridSize,
    /// f_n, proven by exhausting the search tree.
    pub best_size: u32,
    /// Number of distinct subsets of size f_n with no three in line. Raw
    /// labeled count: symmetric solutions are not identified.
    pub solutions: u64,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolverError {
    InvalidConfig(&'static str),
    AboveExhaustiveCap { n: u32, cap: u32 },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::InvalidConfig(msg) => write!(f, "invalid solver config: {msg}"),
            SolverError::AboveExhaustiveCap { n, cap } => {
                write!(f, "exhaustive solution count refused: n = {n} exceeds cap {cap}")
            }
        }
    }
}

impl core::error::Error for SolverError {}

/// What the engine should do with complete assignments.
enum Mode {
    /// Track the best set; optionally stop once `target` is reached.
    Maximize { target: Option<u32> },
    /// Count complete assignments of exactly this size.
    Count { size: u32 },
}

struct Search<'a> {
    n: u32,
    mode: Mode,
    symmetry_breaking: bool,
    node_budget: u64,
    /// Cells with a positive count lie on a line through two chosen points.
    forbidden: Vec<u32>,
    row_count: Vec<u8>,
    chosen: Vec<GridPoint>,
    trail: Vec<usize>,
    best: Vec<GridPoint>,
    solution_count: u64,
    nodes: u64,
    aborted: bool,
    target_reached: bool,
    stop: &'a mut dyn FnMut() -> bool,
    /// Sound lower bound on the global best size, for pruning. Parallel
    /// drivers refresh it from the shared monotone maximum.
    prune_floor: u32,
}

impl<'a> Search<'a> {
    fn new(n: GridSize, mode: Mode, cfg: &SolverConfig, stop: &'a mut dyn FnMut() -> bool) -> Self {
        let side = n.get();
        let cells = n.point_count() as usize;
        Search {
            n: side,
            mode,
            symmetry_breaking: cfg.symmetry_breaking,
            node_budget: cfg.node_budget.unwrap_or(u64::MAX),
            forbidden: vec![0; cells],
            row_count: vec![0; side as usize],
            chosen: Vec::with_capacity(2 * side as usize),
            trail: Vec::new(),
            best: Vec::new(),
            solution_count: 0,
            nodes: 0,
            aborted: false,
            target_reached: false,
            stop,
            prune_floor: 0,
        }
    }

    #[inline]
    fn cell(&self, x: u32, y: u32) -> usize {
        x as usize * self.n as usize + y as usize
    }

    #[inline]
    fn placeable(&self, x: u32, y: u32) -> bool {
        self.forbidden[self.cell(x, y)] == 0 && self.row_count[y as usize] < 2
    }

    /// Forbid every grid cell on the line through `p` and `q`, other than
    /// the two points themselves. Same-column pairs are skipped: the search
    /// never returns to a finished column, so the vertical line is moot.
    fn mark_line(&mut self, p: GridPoint, q: GridPoint) {
        let dx = i64::from(q.x) - i64::from(p.x);
        let dy = i64::from(q.y) - i64::from(p.y);
        let g = gcd(dx.unsigned_abs(), dy.unsigned_abs()) as i64;
        let (sx, sy) = (dx / g, dy / g);
        let side = i64::from(self.n);
        for dir in [1i64, -1] {
            let mut t = dir;
            loop {
                let x = i64::from(p.x) + t * sx;
                let y = i64::from(p.y) + t * sy;
                if x < 0 || x >= side || y < 0 || y >= side {
                    break;
                }
                if t != g {
                    let idx = x as usize * self.n as usize + y as usize;
                    self.forbidden[idx] += 1;
                    self.trail.push(idx);
                }
                t += dir;
            }
        }
    }

    fn place(&mut self, x: u32, y: u32) -> usize {
        let snapshot = self.trail.len();
        let p = GridPoint::new(x, y);
        self.row_count[y as usize] += 1;
        for i in 0..self.chosen.len() {
            let q = self.chosen[i];
            if q.x != x {
                self.mark_line(p, q);
            }
        }
        self.chosen.push(p);
        snapshot
    }

    fn unplace(&mut self, snapshot: usize) {
        let p = self.chosen.pop().expect("unplace without place");
        self.row_count[p.y as usize] -= 1;
        while self.trail.len() > snapshot {
            let idx = self.trail.pop().expect("trail underflow");
            self.forbidden[idx] -= 1;
        }
    }

    #[inline]
    fn halt(&self) -> bool {
        self.aborted || self.target_reached
    }

    fn abort(&mut self) {
        self.aborted = true;
        // The partial assignment is itself a valid set; keep it if it beats
        // the best complete one seen so far.
        if matches!(self.mode, Mode::Maximize { .. }) && self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
    }

    fn record_leaf(&mut self) {
        match self.mode {
            Mode::Maximize { target } => {
                if self.chosen.len() > self.best.len() {
                    self.best = self.chosen.clone();
                }
                if let Some(t) = target {
                    if self.best.len() as u32 >= t {
                        self.target_reached = true;
                    }
                }
            }
            Mode::Count { size } => {
                if self.chosen.len() as u32 == size {
                    self.solution_count += 1;
                }
            }
        }
    }

    fn descend(&mut self, col: u32) {
        self.nodes += 1;
        if self.nodes >= self.node_budget || (self.nodes & 0x3FF == 0 && (self.stop)()) {
            self.abort();
            return;
        }
        if col == self.n {
            self.record_leaf();
            return;
        }

        // Capacity prune: even two points in every remaining column cannot
        // make this subtree worth exploring.
        let potential = self.chosen.len() as u32 + 2 * (self.n - col);
        match self.mode {
            Mode::Maximize { target } => {
                let needed = match target {
                    // A subtree that can only tie the floor is still prunable.
                    None => self.prune_floor.max(self.best.len() as u32) + 1,
                    Some(t) => t,
                };
                if potential < needed {
                    return;
                }
            }
            Mode::Count { size } => {
                if potential < size {
                    return;
                }
            }
        }

        let first_col = col == 0 && self.symmetry_breaking;
        let m = self.n - 1;

        // Two points, (row₁, row₂) lexicographic.
        for r1 in 0..self.n {
            if !self.placeable(col, r1) {
                continue;
            }
            for r2 in r1 + 1..self.n {
                // Canonical under the vertical flip: {r1, r2} maps to
                // {m−r2, m−r1}, compare lexicographically.
                if first_col && (m - r2, m - r1) < (r1, r2) {
                    continue;
                }
                if !self.placeable(col, r2) {
                    continue;
                }
                // Lines created by placing r1 cannot strike another cell of
                // this column, so r2 needs no re-check after the first
                // placement.
                let snap1 = self.place(col, r1);
                let snap2 = self.place(col, r2);
                self.descend(col + 1);
                self.unplace(snap2);
                self.unplace(snap1);
                if self.halt() {
                    return;
                }
            }
        }

        // One point.
        for r in 0..self.n {
            if first_col && m - r < r {
                continue;
            }
            if !self.placeable(col, r) {
                continue;
            }
            let snap = self.place(col, r);
            self.descend(col + 1);
            self.unplace(snap);
            if self.halt() {
                return;
            }
        }

        // Empty column.
        self.descend(col + 1);
    }
}

/// Single-threaded search engine, usable without `std`. `stop` is polled
/// every 1024 nodes; return `true` from it to abort (that is how time
/// budgets reach the engine). `elapsed` in the result is zero — drivers
/// with a clock fill it in.
pub fn solve_with_stop(
    n: GridSize,
    cfg: &SolverConfig,
    stop: &mut dyn FnMut() -> bool,
) -> Result<SolverResult, SolverError> {
    cfg.validate()?;
    let mode = Mode::Maximize {
        target: cfg.target_size,
    };
    let mut search = Search::new(n, mode, cfg, stop);
    search.descend(0);
    let best_size = search.best.len() as u32;
    let witness = PointSet::from_points(n, search.best.iter().copied())
        .expect("search invariants keep the witness in-grid and duplicate-free");
    Ok(SolverResult {
        n,
        best_size,
        witness,
        proven_optimal: !search.aborted && !search.target_reached,
        nodes_explored: search.nodes,
        elapsed: Duration::ZERO,
    })
}

/// Full solver driver: enforces the wall-clock budget, splits the first
/// column across `thread_count` workers, and measures elapsed time.
///
/// The returned `best_size` does not depend on the thread count when the
/// tree is exhausted; node counts (and the specific witness) may differ
/// once budgets or early target stops are in play.
#[cfg(feature = "std")]
pub fn solve(n: GridSize, cfg: &SolverConfig) -> Result<SolverResult, SolverError> {
    cfg.validate()?;
    let started = std::time::Instant::now();
    let deadline = cfg.time_budget.map(|b| started + b);
    let mut result = if cfg.thread_count <= 1 {
        let mut stop = || deadline.is_some_and(|d| std::time::Instant::now() >= d);
        solve_with_stop(n, cfg, &mut stop)?
    } else {
        solve_parallel(n, cfg, deadline)?
    };
    result.elapsed = started.elapsed();
    Ok(result)
}

#[cfg(feature = "std")]
fn solve_parallel(
    n: GridSize,
    cfg: &SolverConfig,
    deadline: Option<std::time::Instant>,
) -> Result<SolverResult, SolverError> {
    use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, AtomicUsize, Ordering};
    use std::sync::Mutex;

    /// A first-column commitment handed to a worker.
    #[derive(Clone, Copy)]
    enum Root {
        Two(u32, u32),
        One(u32),
        Empty,
    }

    let side = n.get();
    let m = side - 1;
    let mut roots = Vec::new();
    for r1 in 0..side {
        for r2 in r1 + 1..side {
            if cfg.symmetry_breaking && (m - r2, m - r1) < (r1, r2) {
                continue;
            }
            roots.push(Root::Two(r1, r2));
        }
    }
    for r in 0..side {
        if cfg.symmetry_breaking && m - r < r {
            continue;
        }
        roots.push(Root::One(r));
    }
    roots.push(Root::Empty);

    let workers = cfg.thread_count.min(roots.len());
    let next_root = AtomicUsize::new(0);
    let best_len = AtomicU32::new(0);
    let best_set: Mutex<Vec<GridPoint>> = Mutex::new(Vec::new());
    let stop_all = AtomicBool::new(false);
    let total_nodes = AtomicU64::new(0);
    let any_aborted = AtomicBool::new(false);
    let any_target = AtomicBool::new(false);
    let per_worker_budget = cfg.node_budget.map(|b| (b / workers as u64).max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let worker_cfg = SolverConfig {
                    node_budget: per_worker_budget,
                    ..cfg.clone()
                };
                let mut stop = || {
                    stop_all.load(Ordering::Relaxed)
                        || deadline.is_some_and(|d| std::time::Instant::now() >= d)
                };
                let mode = Mode::Maximize {
                    target: cfg.target_size,
                };
                let mut search = Search::new(n, mode, &worker_cfg, &mut stop);
                loop {
                    let idx = next_root.fetch_add(1, Ordering::Relaxed);
                    if idx >= roots.len() || search.halt() {
                        break;
                    }
                    search.prune_floor = best_len.load(Ordering::Relaxed);
                    match roots[idx] {
                        Root::Two(r1, r2) => {
                            if search.placeable(0, r1) && search.placeable(0, r2) {
                                let s1 = search.place(0, r1);
                                let s2 = search.place(0, r2);
                                search.descend(1);
                                search.unplace(s2);
                                search.unplace(s1);
                            }
                        }
                        Root::One(r) => {
                            let s = search.place(0, r);
                            search.descend(1);
                            search.unplace(s);
                        }
                        Root::Empty => search.descend(1),
                    }
                    // Publish improvements as a monotone maximum.
                    let local = search.best.len() as u32;
                    if local > best_len.load(Ordering::Relaxed) {
                        let mut guard = best_set.lock().expect("best lock poisoned");
                        if local > guard.len() as u32 {
                            *guard = search.best.clone();
                            best_len.store(local, Ordering::Relaxed);
                        }
                    }
                    if search.target_reached {
                        any_target.store(true, Ordering::Relaxed);
                        stop_all.store(true, Ordering::Relaxed);
                    }
                }
                if search.aborted {
                    any_aborted.store(true, Ordering::Relaxed);
                }
                total_nodes.fetch_add(search.nodes, Ordering::Relaxed);
            });
        }
    });

    let best = best_set.into_inner().expect("best lock poisoned");
    let witness = PointSet::from_points(n, best.iter().copied())
        .expect("search invariants keep the witness in-grid and duplicate-free");
    Ok(SolverResult {
        n,
        best_size: witness.len() as u32,
        witness,
        proven_optimal: !any_aborted.into_inner() && !any_target.into_inner(),
        nodes_explored: total_nodes.into_inner(),
        elapsed: Duration::ZERO,
    })
}

/// Exhaustively counts the subsets of size f_n with no three in line, with
/// the default cap of [`DEFAULT_EXHAUSTIVE_CAP`].
pub fn count_maximum_solutions(n: GridSize) -> Result<MaximumSolutions, SolverError> {
    count_maximum_solutions_with_cap(n, DEFAULT_EXHAUSTIVE_CAP)
}

/// As [`count_maximum_solutions`] with an explicit cap. Two exhaustive
/// passes: prove f_n (symmetry breaking is sound for the size), then count
/// complete assignments of exactly that size with symmetry breaking off, so
/// the count is over raw labeled subsets.
pub fn count_maximum_solutions_with_cap(
    n: GridSize,
    cap: u32,
) -> Result<MaximumSolutions, SolverError> {
    if n.get() > cap {
        return Err(SolverError::AboveExhaustiveCap { n: n.get(), cap });
    }
    let prove_cfg = SolverConfig::prove_optimality();
    let mut never = || false;
    let proof = solve_with_stop(n, &prove_cfg, &mut never)?;
    debug_assert!(proof.proven_optimal);

    let count_cfg = SolverConfig {
        symmetry_breaking: false,
        ..SolverConfig::prove_optimality()
    };
    let mut never = || false;
    let mut search = Search::new(
        n,
        Mode::Count {
            size: proof.best_size,
        },
        &count_cfg,
        &mut never,
    );
    search.descend(0);
    debug_assert!(!search.aborted);
    Ok(MaximumSolutions {
        n,
        best_size: proof.best_size,
        solutions: search.solution_count,
        nodes_explored: proof.nodes_explored + search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{collinear, is_no3l};

    fn size(n: u32) -> GridSize {
        GridSize::new(n).unwrap()
    }

    fn run(n: u32, cfg: &SolverConfig) -> SolverResult {
        let mut never = || false;
        solve_with_stop(size(n), cfg, &mut never).unwrap()
    }

    /// Oracle: all size-k subsets of the n×n grid with no three in line,
    /// by direct enumeration — independent of the search engine.
    fn naive_count(n: u32, k: usize) -> u64 {
        let sz = size(n);
        let pts: Vec<GridPoint> = (0..sz.point_count()).map(|i| sz.point_at(i)).collect();
        let mut count = 0;
        let mut combo: Vec<usize> = (0..k).collect();
        if k > pts.len() {
            return 0;
        }
        loop {
            let ok = {
                let mut good = true;
                'scan: for a in 0..k {
                    for b in a + 1..k {
                        for c in b + 1..k {
                            if collinear(pts[combo[a]], pts[combo[b]], pts[combo[c]]) {
                                good = false;
                                break 'scan;
                            }
                        }
                    }
                }
                good
            };
            if ok {
                count += 1;
            }
            // Next lexicographic combination.
            let mut i = k;
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                if combo[i] != i + pts.len() - k {
                    break;
                }
            }
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }

    #[test]
    fn whole_grid_optimal_at_two() {
        let result = run(2, &SolverConfig::prove_optimality());
        assert_eq!(result.best_size, 4);
        assert!(result.proven_optimal);
        assert_eq!(result.witness.len(), 4);
        assert!(is_no3l(&result.witness));
    }

    #[test]
    fn full_target_reached_small() {
        for n in 2u32..=7 {
            let cfg = SolverConfig::chase_full_target(size(n));
            let result = run(n, &cfg);
            assert_eq!(result.best_size, 2 * n, "f_{n} = 2n should be attained");
            assert!(is_no3l(&result.witness), "witness must verify for n = {n}");
            assert!(result.witness.max_column_occupancy() <= 2);
            assert!(result.witness.max_row_occupancy() <= 2);
            assert!(!result.proven_optimal, "target stop is not an exhaustion");
        }
    }

    #[test]
    fn single_cell_grid() {
        let result = run(1, &SolverConfig::chase_full_target(size(1)));
        // Target 2 is unreachable on one cell; the tree exhausts instead.
        assert_eq!(result.best_size, 1);
        assert!(result.proven_optimal);
    }

    #[test]
    fn budget_abort_returns_best_so_far() {
        let cfg = SolverConfig {
            node_budget: Some(3),
            ..SolverConfig::prove_optimality()
        };
        let result = run(5, &cfg);
        assert!(!result.proven_optimal);
        assert!(result.nodes_explored <= 4);
        assert!(is_no3l(&result.witness));
    }

    #[test]
    fn determinism_single_thread() {
        let cfg = SolverConfig {
            node_budget: Some(50_000),
            ..SolverConfig::prove_optimality()
        };
        let a = run(6, &cfg);
        let b = run(6, &cfg);
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.best_size, b.best_size);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn invalid_configs_rejected() {
        let no_stop = SolverConfig {
            node_budget: None,
            time_budget: None,
            target_size: None,
            prove_optimal: false,
            symmetry_breaking: true,
            thread_count: 1,
        };
        assert!(matches!(
            run_checked(3, &no_stop),
            Err(SolverError::InvalidConfig(_))
        ));
        let zero_threads = SolverConfig {
            thread_count: 0,
            ..SolverConfig::prove_optimality()
        };
        assert!(matches!(
            run_checked(3, &zero_threads),
            Err(SolverError::InvalidConfig(_))
        ));
    }

    fn run_checked(n: u32, cfg: &SolverConfig) -> Result<SolverResult, SolverError> {
        let mut never = || false;
        solve_with_stop(size(n), cfg, &mut never)
    }

    #[test]
    fn symmetry_breaking_preserves_best_size() {
        for n in 2u32..=5 {
            let with = run(n, &SolverConfig::prove_optimality());
            let without = run(
                n,
                &SolverConfig {
                    symmetry_breaking: false,
                    ..SolverConfig::prove_optimality()
                },
            );
            assert_eq!(with.best_size, without.best_size, "n = {n}");
            assert!(with.proven_optimal && without.proven_optimal);
            assert!(with.nodes_explored <= without.nodes_explored);
        }
    }

    #[test]
    fn maximum_solution_counts_match_naive_oracle() {
        // n = 2: only the full grid. n = 3: the two diagonal-complement
        // sets. Then 11 and 32 labeled solutions; the n = 5 oracle scans
        // all C(25,10) = 3,268,760 subsets and still takes well under a
        // second thanks to the early exit.
        for (n, expected) in [(2u32, 1u64), (3, 2), (4, 11), (5, 32)] {
            let counted = count_maximum_solutions(size(n)).unwrap();
            assert_eq!(counted.best_size, 2 * n);
            assert_eq!(counted.solutions, expected, "frozen count at n = {n}");
            assert_eq!(
                counted.solutions,
                naive_count(n, 2 * n as usize),
                "naive oracle at n = {n}"
            );
        }
    }

    #[test]
    fn exhaustive_cap_enforced() {
        assert_eq!(
            count_maximum_solutions(size(6)),
            Err(SolverError::AboveExhaustiveCap { n: 6, cap: 5 })
        );
        assert!(count_maximum_solutions_with_cap(size(6), 6).is_ok());
    }

    #[cfg(feature = "std")]
    mod std_driver {
        use super::*;

        #[test]
        fn elapsed_is_measured() {
            let result = solve(size(4), &SolverConfig::chase_full_target(size(4))).unwrap();
            assert_eq!(result.best_size, 8);
            assert!(result.elapsed > Duration::ZERO);
        }

        #[test]
        fn best_size_independent_of_thread_count() {
            for threads in [1usize, 2, 4] {
                let cfg = SolverConfig {
                    thread_count: threads,
                    ..SolverConfig::prove_optimality()
                };
                let result = solve(size(5), &cfg).unwrap();
                assert_eq!(result.best_size, 10, "threads = {threads}");
                assert!(result.proven_optimal);
                assert!(is_no3l(&result.witness));
            }
        }

        #[test]
        fn threaded_target_chase() {
            let cfg = SolverConfig {
                thread_count: 3,
                ..SolverConfig::chase_full_target(size(6))
            };
            let result = solve(size(6), &cfg).unwrap();
            assert_eq!(result.best_size, 12);
            assert!(is_no3l(&result.witness));
        }

        #[test]
        fn time_budget_zero_aborts_immediately() {
            let cfg = SolverConfig {
                time_budget: Some(Duration::ZERO),
                target_size: None,
                prove_optimal: false,
                node_budget: None,
                symmetry_breaking: true,
                thread_count: 1,
            };
            let result = solve(size(10), &cfg).unwrap();
            assert!(!result.proven_optimal);
        }
    }
}
