//! Finitely generated closed (downward-closed) regions of the poset Z².

use std::fmt;

/// A point of Z². The first coordinate is the algebraic filtration level,
/// the second the Alexander filtration level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub i: i64,
    pub j: i64,
}

impl Point {
    pub const fn new(i: i64, j: i64) -> Self {
        Point { i, j }
    }

    /// The product partial order: `(i,j) <= (k,l)` iff `i <= k` and `j <= l`.
    pub fn is_below(self, other: Point) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn transpose(self) -> Point {
        Point::new(self.j, self.i)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl From<(i64, i64)> for Point {
    fn from((i, j): (i64, i64)) -> Self {
        Point::new(i, j)
    }
}

/// A union of quadrants `R_(k,l) = {(i,j) : i <= k, j <= l}`, stored by its
/// maximal corners.
///
/// Corners form an antichain sorted by `i` strictly ascending (hence `j`
/// strictly descending), so two regions are equal iff their corner lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedRegion {
    corners: Vec<Point>,
}

impl ClosedRegion {
    /// The quadrant `R_(k,l)`.
    pub fn quadrant(k: i64, l: i64) -> Self {
        ClosedRegion {
            corners: vec![Point::new(k, l)],
        }
    }

    /// The smallest closed region containing every point of `points`.
    ///
    /// # Panics
    /// If `points` is empty: the empty region is never the region of a chain.
    pub fn closure(points: impl IntoIterator<Item = Point>) -> Self {
        let mut pts: Vec<Point> = points.into_iter().collect();
        assert!(!pts.is_empty(), "closure of an empty point set");
        // Sweep from the right; keep a point iff it is strictly higher than all to its right.
        pts.sort_unstable_by(|a, b| b.i.cmp(&a.i).then(b.j.cmp(&a.j)));
        let mut corners = Vec::new();
        let mut best_j = i64::MIN;
        for p in pts {
            if p.j > best_j {
                if corners.last().is_some_and(|q: &Point| q.i == p.i) {
                    continue;
                }
                corners.push(p);
                best_j = p.j;
            }
        }
        corners.reverse();
        ClosedRegion { corners }
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    pub fn contains(&self, p: Point) -> bool {
        self.corners.iter().any(|c| p.is_below(*c))
    }

    /// `self ⊂ other` as subsets of Z².
    pub fn is_subset(&self, other: &ClosedRegion) -> bool {
        self.corners.iter().all(|&c| other.contains(c))
    }

    pub fn transpose(&self) -> ClosedRegion {
        ClosedRegion::closure(self.corners.iter().map(|p| p.transpose()))
    }

    pub fn union(&self, other: &ClosedRegion) -> ClosedRegion {
        ClosedRegion::closure(self.corners.iter().chain(&other.corners).copied())
    }
}

impl fmt::Display for ClosedRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, c) in self.corners.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

pub fn closure(points: impl IntoIterator<Item = Point>) -> ClosedRegion {
    ClosedRegion::closure(points)
}

pub fn subset(r: &ClosedRegion, s: &ClosedRegion) -> bool {
    r.is_subset(s)
}

/// The ⊂-minimal members of `regions`, deduplicated and sorted.
pub fn minimalize<'a>(regions: impl IntoIterator<Item = &'a ClosedRegion>) -> Vec<ClosedRegion> {
    let mut all: Vec<ClosedRegion> = regions.into_iter().cloned().collect();
    all.sort();
    all.dedup();
    all.iter()
        .filter(|r| !all.iter().any(|s| s != *r && s.is_subset(r)))
        .cloned()
        .collect()
}

/// Renders a set of regions as `{ R1, R2, ... }`.
pub fn format_region_set(regions: &[ClosedRegion]) -> String {
    let mut sorted = regions.to_vec();
    sorted.sort();
    let parts: Vec<String> = sorted.iter().map(ToString::to_string).collect();
    format!("{{ {} }}", parts.join(", "))
}
