//! Grid geometry: points, configurations, the collinearity predicate, the
//! dihedral symmetry group of the square, and the token encoding shared by
//! every other module.
//!
//! All geometry is exact integer arithmetic. A [`GridConfig`] is allowed to
//! hold collinear triples (the RL environment places them deliberately);
//! validity is a predicate, not a construction invariant.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

/// A cell of an `n x n` grid. Row 0 is the top row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub row: i32,
    pub col: i32,
}

impl Point {
    pub fn new(row: i32, col: i32) -> Self {
        Point { row, col }
    }

    pub fn in_bounds(&self, n: usize) -> bool {
        let n = n as i32;
        (0..n).contains(&self.row) && (0..n).contains(&self.col)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// True iff the three distinct points lie on a common straight line.
///
/// Uses the integer cross product
/// `(r2-r1)(c3-c1) - (r3-r1)(c2-c1) == 0`; no floating point anywhere.
///
/// Panics if two of the arguments coincide.
pub fn collinear(p1: Point, p2: Point, p3: Point) -> bool {
    assert!(
        p1 != p2 && p1 != p3 && p2 != p3,
        "collinear requires three distinct points, got {p1}, {p2}, {p3}"
    );
    let (r1, c1) = (i64::from(p1.row), i64::from(p1.col));
    let (r2, c2) = (i64::from(p2.row), i64::from(p2.col));
    let (r3, c3) = (i64::from(p3.row), i64::from(p3.col));
    (r2 - r1) * (c3 - c1) == (r3 - r1) * (c2 - c1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("point ({row}, {col}) out of bounds for a {n}x{n} grid")]
    OutOfBounds { row: i32, col: i32, n: usize },
    #[error("duplicate point ({row}, {col})")]
    DuplicatePoint { row: i32, col: i32 },
    #[error("token {token} at index {index} out of range for a {n}x{n} grid")]
    TokenOutOfRange { index: usize, token: u32, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A set of placed points on an `n x n` grid, in insertion order, with a
/// derived occupancy mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridConfig {
    n: usize,
    points: Vec<Point>,
    occupied: Vec<bool>,
}

impl GridConfig {
    /// An empty configuration on an `n x n` grid.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "grid side must be at least 1");
        GridConfig {
            n,
            points: Vec::new(),
            occupied: vec![false; n * n],
        }
    }

    /// Build a configuration from a point list, rejecting out-of-bounds
    /// and duplicate points.
    pub fn from_points(n: usize, points: impl IntoIterator<Item = Point>) -> Result<Self, GridError> {
        let mut config = GridConfig::new(n);
        for p in points {
            config.add_point(p)?;
        }
        Ok(config)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Placed points in insertion order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, p: Point) -> bool {
        p.in_bounds(self.n) && self.occupied[self.cell_index(p)]
    }

    fn cell_index(&self, p: Point) -> usize {
        p.row as usize * self.n + p.col as usize
    }

    /// Add a point; the configuration may become invalid (collinear
    /// triples are allowed), but duplicates and out-of-bounds are not.
    pub fn add_point(&mut self, p: Point) -> Result<(), GridError> {
        if !p.in_bounds(self.n) {
            return Err(GridError::OutOfBounds { row: p.row, col: p.col, n: self.n });
        }
        let idx = self.cell_index(p);
        if self.occupied[idx] {
            return Err(GridError::DuplicatePoint { row: p.row, col: p.col });
        }
        self.occupied[idx] = true;
        self.points.push(p);
        Ok(())
    }

    /// True iff no three placed points are collinear.
    pub fn is_valid(&self) -> bool {
        let pts = &self.points;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for k in j + 1..pts.len() {
                    if collinear(pts[i], pts[j], pts[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of collinear triples among the placed points, each unordered
    /// triple counted once.
    pub fn violation_count(&self) -> usize {
        let pts = &self.points;
        let mut count = 0;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for k in j + 1..pts.len() {
                    if collinear(pts[i], pts[j], pts[k]) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Token encoding `t = row * n + col`, in insertion order.
    pub fn encode(&self) -> TokenSeq {
        let n = self.n as u32;
        TokenSeq {
            n: self.n,
            tokens: self.points.iter().map(|p| p.row as u32 * n + p.col as u32).collect(),
        }
    }

    /// Image of the point set under the rigid motion `s`. Point count and
    /// validity are preserved.
    pub fn apply_symmetry(&self, s: Symmetry) -> GridConfig {
        let mut out = GridConfig::new(self.n);
        for &p in &self.points {
            out.add_point(s.apply_point(self.n, p)).expect("symmetry image stays in bounds");
        }
        out
    }

    /// Lexicographically smallest sorted token list over the 8 symmetry
    /// images. Configurations that are equal as point sets canonicalize
    /// identically regardless of placement history.
    pub fn canonical_form(&self) -> TokenSeq {
        let mut best: Option<Vec<u32>> = None;
        for s in Symmetry::all() {
            let mut tokens = self.apply_symmetry(s).encode().tokens;
            tokens.sort_unstable();
            match &best {
                Some(b) if *b <= tokens => {}
                _ => best = Some(tokens),
            }
        }
        TokenSeq { n: self.n, tokens: best.unwrap_or_default() }
    }

    /// Grid text format: first line `n=<int>`, then one `row col` pair per
    /// line. Blank lines and `#` comments are ignored.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n={}", self.n).unwrap();
        for p in &self.points {
            writeln!(out, "{} {}", p.row, p.col).unwrap();
        }
        out
    }

    /// Parse the text format produced by [`GridConfig::to_text`].
    pub fn from_text(text: &str) -> Result<Self, GridError> {
        let mut config: Option<GridConfig> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            match &mut config {
                None => {
                    let n = line
                        .strip_prefix("n=")
                        .and_then(|v| v.trim().parse::<usize>().ok())
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| GridError::Parse {
                            line: lineno,
                            msg: format!("expected header `n=<int>`, got `{line}`"),
                        })?;
                    config = Some(GridConfig::new(n));
                }
                Some(config) => {
                    let mut fields = line.split_whitespace();
                    let (row, col) = match (fields.next(), fields.next(), fields.next()) {
                        (Some(r), Some(c), None) => {
                            let parse = |v: &str| {
                                v.parse::<i32>().map_err(|_| GridError::Parse {
                                    line: lineno,
                                    msg: format!("expected integer coordinate, got `{v}`"),
                                })
                            };
                            (parse(r)?, parse(c)?)
                        }
                        _ => {
                            return Err(GridError::Parse {
                                line: lineno,
                                msg: format!("expected `row col`, got `{line}`"),
                            })
                        }
                    };
                    config.add_point(Point::new(row, col)).map_err(|e| GridError::Parse {
                        line: lineno,
                        msg: e.to_string(),
                    })?;
                }
            }
        }
        config.ok_or_else(|| GridError::Parse { line: 0, msg: "missing `n=<int>` header".into() })
    }
}

/// A token sequence over the `n x n` cell vocabulary, `t = row * n + col`.
///
/// Model contexts prepend the start/end delimiter [`TokenSeq::delimiter`]
/// (id `n*n`); sequences held here carry grid tokens only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenSeq {
    n: usize,
    tokens: Vec<u32>,
}

impl TokenSeq {
    pub fn new(n: usize, tokens: Vec<u32>) -> Self {
        TokenSeq { n, tokens }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tokens(&self) -> &[u32] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// The start/end token id for grids of side `n`.
    pub fn delimiter(n: usize) -> u32 {
        (n * n) as u32
    }

    /// Decode to a configuration. Duplicate tokens are dropped (first
    /// occurrence wins); an out-of-range token is an error naming its index.
    pub fn decode(&self) -> Result<GridConfig, GridError> {
        let n = self.n;
        let limit = (n * n) as u32;
        let mut config = GridConfig::new(n);
        for (index, &token) in self.tokens.iter().enumerate() {
            if token >= limit {
                return Err(GridError::TokenOutOfRange { index, token, n });
            }
            let p = Point::new((token / n as u32) as i32, (token % n as u32) as i32);
            match config.add_point(p) {
                Ok(()) => {}
                Err(GridError::DuplicatePoint { .. }) => {} // first occurrence wins
                Err(e) => return Err(e),
            }
        }
        Ok(config)
    }
}

/// Quarter-turn rotations, counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rotation {
    R0,
    R90,
    R180,
    R270,
}

impl Rotation {
    pub fn all() -> [Rotation; 4] {
        [Rotation::R0, Rotation::R90, Rotation::R180, Rotation::R270]
    }

    fn quarter_turns(self) -> u8 {
        match self {
            Rotation::R0 => 0,
            Rotation::R90 => 1,
            Rotation::R180 => 2,
            Rotation::R270 => 3,
        }
    }

    fn from_quarter_turns(turns: u8) -> Rotation {
        match turns % 4 {
            0 => Rotation::R0,
            1 => Rotation::R90,
            2 => Rotation::R180,
            _ => Rotation::R270,
        }
    }
}

/// An element of the dihedral group of the square: an optional reflection
/// followed by a rotation.
///
/// Conventions: 90 degrees counter-clockwise maps `(r, c)` to
/// `(c, n-1-r)`; the reflection maps `(r, c)` to `(r, n-1-c)` and is
/// applied before the rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub rotation: Rotation,
    pub reflected: bool,
}

impl Symmetry {
    pub fn identity() -> Self {
        Symmetry { rotation: Rotation::R0, reflected: false }
    }

    /// The 8 group elements.
    pub fn all() -> impl Iterator<Item = Symmetry> {
        Rotation::all().into_iter().flat_map(|rotation| {
            [false, true].into_iter().map(move |reflected| Symmetry { rotation, reflected })
        })
    }

    /// Image of `p` on an `n x n` grid.
    pub fn apply_point(&self, n: usize, p: Point) -> Point {
        let m = n as i32 - 1;
        let mut p = if self.reflected { Point::new(p.row, m - p.col) } else { p };
        for _ in 0..self.rotation.quarter_turns() {
            p = Point::new(p.col, m - p.row);
        }
        p
    }

    // Internal normal form: optional row/col transpose, then optional flips
    // of each coordinate. Composition is plain boolean algebra there.
    fn to_swap_flips(self) -> (bool, bool, bool) {
        let refl = (false, false, self.reflected);
        let mut cur = refl;
        for _ in 0..self.rotation.quarter_turns() {
            // rot90 = (swap, then flip col); compose rot90 after cur
            let (swap, fr, fc) = cur;
            cur = (!swap, fc, !fr);
        }
        cur
    }

    fn from_swap_flips(target: (bool, bool, bool)) -> Symmetry {
        Symmetry::all()
            .find(|s| s.to_swap_flips() == target)
            .expect("every swap/flip triple is one of the 8 elements")
    }

    /// Group composition: `self.compose(other)` applies `other` first.
    pub fn compose(&self, other: Symmetry) -> Symmetry {
        let (s1, fr1, fc1) = self.to_swap_flips();
        let (s2, fr2, fc2) = other.to_swap_flips();
        let combined = if s1 {
            (s1 ^ s2, fr1 ^ fc2, fc1 ^ fr2)
        } else {
            (s1 ^ s2, fr1 ^ fr2, fc1 ^ fc2)
        };
        Symmetry::from_swap_flips(combined)
    }

    pub fn inverse(&self) -> Symmetry {
        let turns = self.rotation.quarter_turns();
        if self.reflected {
            // reflections are involutions
            *self
        } else {
            Symmetry { rotation: Rotation::from_quarter_turns((4 - turns) % 4), reflected: false }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(row: i32, col: i32) -> Point {
        Point::new(row, col)
    }

    #[test]
    fn collinear_basic_cases() {
        assert!(collinear(p(0, 0), p(1, 1), p(2, 2)));
        assert!(!collinear(p(0, 0), p(1, 2), p(2, 3)));
        assert!(collinear(p(0, 0), p(2, 1), p(4, 2)));
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn collinear_rejects_duplicates() {
        collinear(p(0, 0), p(0, 0), p(1, 1));
    }

    #[test]
    fn collinear_is_permutation_symmetric() {
        // exhaust all 6 argument orders over a batch of random triples
        let mut state = 0x12345u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 17) as i32
        };
        for _ in 0..200 {
            let (a, b, c) = (p(next(), next()), p(next(), next()), p(next(), next()));
            if a == b || a == c || b == c {
                continue;
            }
            let expected = collinear(a, b, c);
            for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                assert_eq!(collinear(x, y, z), expected);
            }
        }
    }

    #[test]
    fn validity_and_violations() {
        let empty = GridConfig::new(5);
        assert!(empty.is_valid());
        assert_eq!(empty.violation_count(), 0);

        let diag = GridConfig::from_points(3, [p(0, 0), p(1, 1), p(2, 2)]).unwrap();
        assert!(!diag.is_valid());
        assert_eq!(diag.violation_count(), 1);

        let row4 = GridConfig::from_points(5, [p(0, 0), p(0, 1), p(0, 2), p(0, 3)]).unwrap();
        assert_eq!(row4.violation_count(), 4); // C(4,3) triples on one row
    }

    #[test]
    fn add_point_rejects_bounds_and_duplicates() {
        let mut config = GridConfig::new(3);
        assert_eq!(
            config.add_point(p(3, 0)),
            Err(GridError::OutOfBounds { row: 3, col: 0, n: 3 })
        );
        config.add_point(p(1, 2)).unwrap();
        assert_eq!(config.add_point(p(1, 2)), Err(GridError::DuplicatePoint { row: 1, col: 2 }));
    }

    #[test]
    fn token_encoding() {
        let config = GridConfig::from_points(5, [p(1, 2)]).unwrap();
        assert_eq!(config.encode().tokens(), &[7]);

        let seq = TokenSeq::new(10, vec![99]);
        assert_eq!(seq.decode().unwrap().points(), &[p(9, 9)]);

        let seq = TokenSeq::new(3, vec![4, 4, 1]);
        assert_eq!(seq.decode().unwrap().points(), &[p(1, 1), p(0, 1)]);
    }

    #[test]
    fn decode_names_offending_index() {
        let seq = TokenSeq::new(3, vec![0, 9]);
        assert_eq!(
            seq.decode().unwrap_err(),
            GridError::TokenOutOfRange { index: 1, token: 9, n: 3 }
        );
    }

    #[test]
    fn symmetry_on_points() {
        let id = Symmetry::identity();
        assert_eq!(id.apply_point(3, p(0, 1)), p(0, 1));

        let r90 = Symmetry { rotation: Rotation::R90, reflected: false };
        assert_eq!(r90.apply_point(3, p(0, 1)), p(1, 2));

        let config = GridConfig::from_points(4, [p(0, 1), p(2, 3), p(3, 0)]).unwrap();
        for s in Symmetry::all() {
            let image = config.apply_symmetry(s);
            assert_eq!(image.len(), config.len());
            assert_eq!(image.violation_count(), config.violation_count());
            // inverse undoes the motion
            let back = image.apply_symmetry(s.inverse());
            let mut orig: Vec<_> = config.points().to_vec();
            let mut round: Vec<_> = back.points().to_vec();
            orig.sort();
            round.sort();
            assert_eq!(orig, round);
        }
    }

    #[test]
    fn group_is_closed_and_inverses_hold() {
        let elements: Vec<_> = Symmetry::all().collect();
        assert_eq!(elements.len(), 8);
        for &a in &elements {
            assert_eq!(a.compose(a.inverse()), Symmetry::identity());
            for &b in &elements {
                let c = a.compose(b);
                // composition must act like b then a on every cell
                for n in [2usize, 3, 5] {
                    for row in 0..n as i32 {
                        for col in 0..n as i32 {
                            let q = p(row, col);
                            assert_eq!(c.apply_point(n, q), a.apply_point(n, b.apply_point(n, q)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        // single point (0,1) on 3x3: orbit tokens are {1,3,5,7}, minimum [1]
        let config = GridConfig::from_points(3, [p(0, 1)]).unwrap();
        let orbit: std::collections::BTreeSet<u32> = Symmetry::all()
            .map(|s| config.apply_symmetry(s).encode().tokens()[0])
            .collect();
        assert_eq!(orbit.into_iter().collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert_eq!(config.canonical_form().tokens(), &[1]);

        // all four corners of a 3x3 grid are fixed by the whole group
        let corners = GridConfig::from_points(3, [p(0, 0), p(0, 2), p(2, 0), p(2, 2)]).unwrap();
        assert_eq!(corners.canonical_form().tokens(), &[0, 2, 6, 8]);
    }

    #[test]
    fn text_format_round_trip() {
        let config = GridConfig::from_points(5, [p(0, 0), p(4, 3)]).unwrap();
        let text = config.to_text();
        assert_eq!(GridConfig::from_text(&text).unwrap(), config);

        let commented = "# certificate\nn=5\n0 0 # corner\n\n4 3\n";
        assert_eq!(GridConfig::from_text(commented).unwrap(), config);

        let err = GridConfig::from_text("n=5\n0 0\n0 0\n").unwrap_err();
        assert!(matches!(err, GridError::Parse { line: 3, .. }), "{err}");
    }

    fn arb_config(n: usize, max_points: usize) -> impl Strategy<Value = GridConfig> {
        proptest::collection::vec(0..(n * n) as u32, 0..=max_points).prop_map(move |tokens| {
            TokenSeq::new(n, tokens).decode().unwrap()
        })
    }

    proptest! {
        #[test]
        fn decode_encode_round_trips(config in arb_config(6, 12)) {
            let back = config.encode().decode().unwrap();
            prop_assert_eq!(back.points(), config.points());
        }

        #[test]
        fn violations_invariant_under_symmetry(config in arb_config(6, 10)) {
            let expected = config.violation_count();
            for s in Symmetry::all() {
                prop_assert_eq!(config.apply_symmetry(s).violation_count(), expected);
            }
        }

        #[test]
        fn canonical_form_is_orbit_invariant(config in arb_config(5, 8)) {
            let canon = config.canonical_form();
            for s in Symmetry::all() {
                prop_assert_eq!(config.apply_symmetry(s).canonical_form(), canon.clone());
            }
        }
    }
}
