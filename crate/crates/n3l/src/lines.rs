//! Enumeration of every maximal grid line containing at least three cells.
//!
//! Each such line yields one "at most 2 placed points" constraint; the
//! table built here is the constraint set shared by the exact solver, the
//! greedy saturator and the RL environment. Lines are stored as maximal
//! cell sets rather than as collinear triples, so an `n x n` grid has
//! `O(n^3)` constraints instead of `O(n^3)` triples each re-derived.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::grid::Point;

/// A grid line in canonical form: `a*x + b*y + c = 0` over `(x, y) =
/// (row, col)`, with `gcd(|a|, |b|, |c|) = 1` and `a > 0`, or `a = 0` and
/// `b > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Canonical key of the unique line through two distinct points.
///
/// Panics if the points coincide.
pub fn line_through(p1: Point, p2: Point) -> LineKey {
    assert!(p1 != p2, "line_through requires distinct points, got {p1} twice");
    let (x1, y1) = (i64::from(p1.row), i64::from(p1.col));
    let (x2, y2) = (i64::from(p2.row), i64::from(p2.col));
    let mut a = y2 - y1;
    let mut b = x1 - x2;
    let mut c = -(a * x1 + b * y1);
    let g = gcd(gcd(a, b), c);
    debug_assert!(g > 0);
    a /= g;
    b /= g;
    c /= g;
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    LineKey { a, b, c }
}

impl LineKey {
    /// Whether `p` satisfies the line equation exactly.
    pub fn contains(&self, p: Point) -> bool {
        self.a * i64::from(p.row) + self.b * i64::from(p.col) + self.c == 0
    }
}

/// One line constraint: a canonical key plus the full sorted list of grid
/// cells on the line (always at least three).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineConstraint {
    pub key: LineKey,
    pub cells: Vec<Point>,
}

/// All maximal lines of an `n x n` grid with at least three cells, plus a
/// dense cell-to-lines index for solver and greedy hot loops.
///
/// Immutable after construction; shareable across threads.
#[derive(Debug, Clone)]
pub struct LineTable {
    n: usize,
    lines: Vec<LineConstraint>,
    cell_to_lines: Vec<Vec<u32>>,
}

/// Enumerate the constraint set of an `n x n` grid by grouping all cell
/// pairs under their canonical line key and keeping lines with three or
/// more cells. `O(n^4)` pair enumeration, fine at the grid sizes this
/// crate targets.
pub fn build_line_table(n: usize) -> LineTable {
    assert!(n >= 1, "grid side must be at least 1");
    let mut groups: HashMap<LineKey, Vec<Point>> = HashMap::new();
    let cells: Vec<Point> = (0..n as i32)
        .flat_map(|row| (0..n as i32).map(move |col| Point::new(row, col)))
        .collect();
    for (i, &p) in cells.iter().enumerate() {
        for &q in &cells[i + 1..] {
            let key = line_through(p, q);
            let members = groups.entry(key).or_default();
            for cell in [p, q] {
                if !members.contains(&cell) {
                    members.push(cell);
                }
            }
        }
    }

    let mut lines: Vec<LineConstraint> = groups
        .into_iter()
        .filter(|(_, cells)| cells.len() >= 3)
        .map(|(key, mut cells)| {
            cells.sort_unstable();
            LineConstraint { key, cells }
        })
        .collect();
    lines.sort_unstable_by_key(|line| line.key);

    let mut cell_to_lines = vec![Vec::new(); n * n];
    for (index, line) in lines.iter().enumerate() {
        for p in &line.cells {
            cell_to_lines[p.row as usize * n + p.col as usize].push(index as u32);
        }
    }
    LineTable { n, lines, cell_to_lines }
}

impl LineTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lines(&self) -> &[LineConstraint] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Indices of the lines containing `p`.
    ///
    /// Panics if `p` is out of bounds.
    pub fn lines_hit(&self, p: Point) -> &[u32] {
        assert!(p.in_bounds(self.n), "{p} out of bounds for a {0}x{0} grid", self.n);
        &self.cell_to_lines[p.row as usize * self.n + p.col as usize]
    }

    /// Debug dump, one line per constraint: `a b c : (r,c) (r,c) ...`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            write!(out, "{} {} {} :", line.key.a, line.key.b, line.key.c).unwrap();
            for p in &line.cells {
                write!(out, " ({},{})", p.row, p.col).unwrap();
            }
            out.push('\n');
        }
        out
    }
}
