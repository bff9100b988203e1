//! The n×n lattice grid: points, point sets with occupancy bookkeeping, and
//! the collinearity predicate.
//!
//! Coordinates run over the half-open range `0 ≤ x, y < n`, giving the grid
//! exactly n² points. All predicates are pure integer arithmetic; the side
//! length is capped at 2³⁰ so that every cross product fits in `i64` (see
//! [`GridSize::MAX_SIDE`]).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::math::gcd;

/// Side length of a grid. Valid range: `1 ..= MAX_SIDE`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GridSize(u32);

impl GridSize {
    /// Largest supported side length, 2³⁰.
    ///
    /// Collinearity works on `i64` cross products: coordinate differences
    /// stay below 2³⁰ in magnitude, each product below 2⁶⁰, and their
    /// difference needs at most 62 bits including sign — 2·30 + 2 bits of
    /// headroom, so no overflow is possible for points of a valid grid.
    pub const MAX_SIDE: u32 = 1 << 30;

    pub fn new(n: u32) -> Result<Self, GridError> {
        if n == 0 || n > Self::MAX_SIDE {
            return Err(GridError::SideOutOfRange { n });
        }
        Ok(GridSize(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of points in the grid, n².
    #[inline]
    pub fn point_count(self) -> u64 {
        u64::from(self.0) * u64::from(self.0)
    }

    #[inline]
    pub fn contains(self, p: GridPoint) -> bool {
        p.x < self.0 && p.y < self.0
    }

    /// Point at a row-major index in `[0, n²)`: index = y·n + x.
    #[inline]
    pub fn point_at(self, index: u64) -> GridPoint {
        debug_assert!(index < self.point_count());
        let n = u64::from(self.0);
        GridPoint::new((index % n) as u32, (index / n) as u32)
    }
}

impl fmt::Display for GridSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A lattice point. Membership in a particular grid is checked wherever a
/// `GridSize` is in play; the point itself is plain data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GridPoint {
    pub x: u32,
    pub y: u32,
}

impl GridPoint {
    #[inline]
    pub fn new(x: u32, y: u32) -> Self {
        GridPoint { x, y }
    }

    /// Row-major sort key: by row, then by column.
    #[inline]
    fn key(self) -> (u32, u32) {
        (self.y, self.x)
    }
}

impl PartialOrd for GridPoint {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GridPoint {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// True iff the three points lie on one line: the cross product
/// (b−a) × (c−a) vanishes. Degenerate triples (any repeated point) count as
/// collinear; callers that mean "three in line" must feed distinct points.
#[inline]
pub fn collinear(a: GridPoint, b: GridPoint, c: GridPoint) -> bool {
    let abx = i64::from(b.x) - i64::from(a.x);
    let aby = i64::from(b.y) - i64::from(a.y);
    let acx = i64::from(c.x) - i64::from(a.x);
    let acy = i64::from(c.y) - i64::from(a.y);
    abx * acy - aby * acx == 0
}

/// Number of lattice points strictly between `a` and `b` on their segment:
/// gcd(|Δx|, |Δy|) − 1. Errors on `a = b`, where the segment degenerates.
pub fn interior_count(a: GridPoint, b: GridPoint) -> Result<u64, GridError> {
    if a == b {
        return Err(GridError::CoincidentPoints);
    }
    let dx = u64::from(a.x.abs_diff(b.x));
    let dy = u64::from(a.y.abs_diff(b.y));
    Ok(gcd(dx, dy) - 1)
}

/// Scratch-reusing scanner for the first collinear triple in a point list.
///
/// For each point in slice order it canonicalises the primitive directions
/// toward all earlier points and looks for a duplicate: two earlier points
/// in the same direction from the pivot are collinear with it. O(s² log s)
/// over the whole slice instead of the O(s³) triple scan, and it exits on
/// the first hit, which is what the Monte Carlo survival loop needs.
#[derive(Default)]
pub(crate) struct CollinearScan {
    dirs: Vec<(i64, i64, u32)>,
}

impl CollinearScan {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Indices `[j1, j2, i]` (j1 < j2 < i) of the first collinear triple in
    /// scan order, or `None`. Points must be pairwise distinct.
    pub(crate) fn first_triple(&mut self, pts: &[GridPoint]) -> Option<[usize; 3]> {
        for i in 2..pts.len() {
            let p = pts[i];
            self.dirs.clear();
            for (j, q) in pts[..i].iter().enumerate() {
                let mut dx = i64::from(q.x) - i64::from(p.x);
                let mut dy = i64::from(q.y) - i64::from(p.y);
                debug_assert!(dx != 0 || dy != 0, "duplicate point in collinear scan");
                let g = gcd(dx.unsigned_abs(), dy.unsigned_abs()) as i64;
                dx /= g;
                dy /= g;
                if dx < 0 || (dx == 0 && dy < 0) {
                    dx = -dx;
                    dy = -dy;
                }
                self.dirs.push((dx, dy, j as u32));
            }
            self.dirs.sort_unstable();
            for w in self.dirs.windows(2) {
                if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                    return Some([w[0].2 as usize, w[1].2 as usize, i]);
                }
            }
        }
        None
    }
}

/// A subset of the grid with per-column and per-row occupancy counts.
///
/// Members are kept sorted in row-major order and are always in-grid and
/// duplicate-free — construction enforces both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    size: GridSize,
    members: Vec<GridPoint>,
    column_counts: BTreeMap<u32, u32>,
    row_counts: BTreeMap<u32, u32>,
}

impl PointSet {
    pub fn new(size: GridSize) -> Self {
        PointSet {
            size,
            members: Vec::new(),
            column_counts: BTreeMap::new(),
            row_counts: BTreeMap::new(),
        }
    }

    pub fn from_points(
        size: GridSize,
        points: impl IntoIterator<Item = GridPoint>,
    ) -> Result<Self, GridError> {
        let mut set = PointSet::new(size);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, p: GridPoint) -> Result<(), GridError> {
        if !self.size.contains(p) {
            return Err(GridError::OutOfGrid {
                point: p,
                n: self.size.get(),
            });
        }
        match self.members.binary_search(&p) {
            Ok(_) => Err(GridError::DuplicatePoint { point: p }),
            Err(pos) => {
                self.members.insert(pos, p);
                *self.column_counts.entry(p.x).or_insert(0) += 1;
                *self.row_counts.entry(p.y).or_insert(0) += 1;
                Ok(())
            }
        }
    }

    #[inline]
    pub fn size(&self) -> GridSize {
        self.size
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in row-major order.
    #[inline]
    pub fn points(&self) -> &[GridPoint] {
        &self.members
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    pub fn column_count(&self, x: u32) -> u32 {
        self.column_counts.get(&x).copied().unwrap_or(0)
    }

    pub fn row_count(&self, y: u32) -> u32 {
        self.row_counts.get(&y).copied().unwrap_or(0)
    }

    pub fn max_column_occupancy(&self) -> u32 {
        self.column_counts.values().copied().max().unwrap_or(0)
    }

    pub fn max_row_occupancy(&self) -> u32 {
        self.row_counts.values().copied().max().unwrap_or(0)
    }

    /// Serialises as the witness text format: a `n <side>` header line, then
    /// one `x y` line per member in row-major order, each line terminated by
    /// a newline. Parsing this back yields an identical set, and
    /// re-serialising reproduces the bytes exactly.
    pub fn to_witness_string(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.size.get());
        for p in &self.members {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
        out
    }

    /// Parses the witness text format. Point order in the input is free —
    /// members are kept sorted — but every point must be in-grid and unique.
    pub fn parse_witness(input: &str) -> Result<Self, WitnessParseError> {
        let mut lines = input.lines().enumerate();
        let (_, header) = lines.next().ok_or(WitnessParseError {
            line: 1,
            kind: WitnessErrorKind::MissingHeader,
        })?;
        let bad_header = || WitnessParseError {
            line: 1,
            kind: WitnessErrorKind::BadHeader,
        };
        let n: u32 = header
            .strip_prefix("n ")
            .ok_or_else(bad_header)?
            .trim()
            .parse()
            .map_err(|_| bad_header())?;
        let size = GridSize::new(n).map_err(|e| WitnessParseError {
            line: 1,
            kind: WitnessErrorKind::Grid(e),
        })?;
        let mut set = PointSet::new(size);
        for (idx, line) in lines {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split_ascii_whitespace();
            let parse_coord = |field: Option<&str>| -> Result<u32, WitnessParseError> {
                field
                    .and_then(|f| f.parse().ok())
                    .ok_or(WitnessParseError {
                        line: line_no,
                        kind: WitnessErrorKind::BadPoint,
                    })
            };
            let x = parse_coord(fields.next())?;
            let y = parse_coord(fields.next())?;
            if fields.next().is_some() {
                return Err(WitnessParseError {
                    line: line_no,
                    kind: WitnessErrorKind::BadPoint,
                });
            }
            set.insert(GridPoint::new(x, y))
                .map_err(|e| WitnessParseError {
                    line: line_no,
                    kind: WitnessErrorKind::Grid(e),
                })?;
        }
        Ok(set)
    }
}

/// True iff no three distinct members of the set are collinear.
///
/// Uses the direction-bucketing scan; agrees with the naive all-triples
/// definition (tested exhaustively over every subset of the 3×3 grid).
pub fn is_no3l(set: &PointSet) -> bool {
    find_collinear_triple(set).is_none()
}

/// The first collinear triple of distinct members in deterministic scan
/// order (row-major pivot order), or `None` if the set has no three in line.
pub fn find_collinear_triple(set: &PointSet) -> Option<[GridPoint; 3]> {
    let pts = set.points();
    let [a, b, c] = CollinearScan::new().first_triple(pts)?;
    Some([pts[a], pts[b], pts[c]])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GridError {
    SideOutOfRange { n: u32 },
    OutOfGrid { point: GridPoint, n: u32 },
    DuplicatePoint { point: GridPoint },
    CoincidentPoints,
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::SideOutOfRange { n } => write!(
                f,
                "grid side {n} out of range (must be 1..={})",
                GridSize::MAX_SIDE
            ),
            GridError::OutOfGrid { point, n } => {
                write!(f, "point {point} lies outside the {n}x{n} grid")
            }
            GridError::DuplicatePoint { point } => write!(f, "duplicate point {point}"),
            GridError::CoincidentPoints => write!(f, "points coincide"),
        }
    }
}

impl core::error::Error for GridError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WitnessParseError {
    pub line: usize,
    pub kind: WitnessErrorKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessErrorKind {
    MissingHeader,
    BadHeader,
    BadPoint,
    Grid(GridError),
}

impl fmt::Display for WitnessParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            WitnessErrorKind::MissingHeader => write!(f, "empty input, expected `n <side>` header"),
            WitnessErrorKind::BadHeader => write!(f, "malformed header, expected `n <side>`"),
            WitnessErrorKind::BadPoint => write!(f, "malformed point, expected `x y`"),
            WitnessErrorKind::Grid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for WitnessParseError {}
