//! Integer points, rational points, finite point sets and coordinate boxes.
//!
//! Coordinates are arbitrary-precision integers. Indices are zero-based in the
//! API; [`IndexPair`] and index-set displays print them one-based.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = BigRational;

/// A vector in `Z^n`. Ordering is lexicographic on coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Int>);

/// Builds a [`Point`] from integer literals.
#[macro_export]
macro_rules! point {
    ($($x:expr),* $(,)?) => {
        $crate::Point::from_i64s(&[$($x as i64),*])
    };
}

impl Point {
    pub fn new(coords: Vec<Int>) -> Self {
        Point(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.0
    }

    pub fn coord(&self, k: usize) -> &Int {
        &self.0[k]
    }

    /// Restriction to `indices`, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Point {
        Point(indices.iter().map(|&k| self.0[k].clone()).collect())
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(self.0.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Chebyshev distance `max_k |x_k - y_k|`.
    pub fn linf_distance(&self, other: &Point) -> Int {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).max().unwrap_or_else(Int::zero)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn serialize_int<S: Serializer>(v: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(small) => s.serialize_i64(small),
        None => {
            let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
            n.serialize(s)
        }
    }
}

struct IntRef<'a>(&'a Int);

impl Serialize for IntRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_int(self.0, s)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(IntRef))
    }
}

/// A vector of exact rationals. `BigRational` keeps every entry reduced with a
/// positive denominator, so derived equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    /// `(x + y) / 2`.
    pub fn midpoint(x: &Point, y: &Point) -> Self {
        let two = Int::from(2);
        RationalPoint(x.coords().iter().zip(y.coords()).map(|(a, b)| Rational::new(a + b, two.clone())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite, deduplicated set of points of a common dimension.
///
/// Points are kept sorted, so iteration order is lexicographic and membership
/// is a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(PointSet { dim, points: Vec::new() })
    }

    pub fn from_points<I>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut collected = Vec::new();
        for (row, p) in points.into_iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { row, expected: dim, found: p.dim() });
            }
            collected.push(p);
        }
        Ok(Self::from_sorted_unchecked(dim, collected))
    }

    pub fn from_rows<I, R>(dim: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[i64]>,
    {
        Self::from_points(dim, rows.into_iter().map(|r| Point::from_i64s(r.as_ref())))
    }

    /// Caller guarantees every point has length `dim`.
    pub(crate) fn from_sorted_unchecked(dim: usize, mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointSet { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.dim == other.dim && self.points.iter().all(|p| other.contains(p))
    }

    /// Points of `self` that are not in `other`, in lexicographic order.
    pub fn difference<'a>(&'a self, other: &'a PointSet) -> impl Iterator<Item = &'a Point> + 'a {
        self.points.iter().filter(move |p| !other.contains(p))
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { row: 0, expected: self.dim, found: other.dim });
        }
        let mut all = self.points.clone();
        all.extend(other.points.iter().cloned());
        Ok(Self::from_sorted_unchecked(self.dim, all))
    }

    /// Image of the set under a map that preserves dimension.
    pub fn map<F>(&self, f: F) -> Result<PointSet>
    where
        F: FnMut(&Point) -> Point,
    {
        PointSet::from_points(self.dim, self.points.iter().map(f))
    }

    pub fn bounding_box(&self) -> Result<BoundingBox> {
        let first = self.points.first().ok_or(Error::Empty("bounding_box"))?;
        let mut lower = first.0.clone();
        let mut upper = first.0.clone();
        for p in &self.points[1..] {
            for (k, c) in p.0.iter().enumerate() {
                if *c < lower[k] {
                    lower[k] = c.clone();
                }
                if *c > upper[k] {
                    upper[k] = c.clone();
                }
            }
        }
        Ok(BoundingBox { lower: Point(lower), upper: Point(upper) })
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PointSet", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("points", &self.points)?;
        st.end()
    }
}

/// `point_set_from_rows` under its descriptive name.
pub fn point_set_from_rows<I, R>(dim: usize, rows: I) -> Result<PointSet>
where
    I: IntoIterator<Item = R>,
    R: AsRef<[i64]>,
{
    PointSet::from_rows(dim, rows)
}

/// Componentwise minimum and maximum of a nonempty set.
pub fn bounding_box(s: &PointSet) -> Result<BoundingBox> {
    s.bounding_box()
}

/// A closed integer box `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundingBox {
    pub lower: Point,
    pub upper: Point,
}

impl BoundingBox {
    pub fn new(lower: Point, upper: Point) -> Result<Self> {
        if lower.dim() != upper.dim() {
            return Err(Error::DimensionMismatch { row: 1, expected: lower.dim(), found: upper.dim() });
        }
        if lower.dim() == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(BoundingBox { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.0.iter().zip(&self.upper.0).any(|(l, u)| l > u)
    }

    /// Number of integer points in the box.
    pub fn volume(&self) -> Int {
        if self.is_empty() {
            return Int::zero();
        }
        self.lower.0.iter().zip(&self.upper.0).map(|(l, u)| u - l + Int::one()).product()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && p.0.iter().zip(self.lower.0.iter().zip(&self.upper.0)).all(|(c, (l, u))| l <= c && c <= u)
    }

    /// The box grown by `pad` on every side.
    pub fn padded(&self, pad: i64) -> BoundingBox {
        let pad = Int::from(pad);
        BoundingBox { lower: Point(self.lower.0.iter().map(|c| c - &pad).collect()), upper: Point(self.upper.0.iter().map(|c| c + &pad).collect()) }
    }

    /// Smallest box containing both.
    pub fn hull(&self, other: &BoundingBox) -> BoundingBox {
        BoundingBox {
            lower: Point(self.lower.0.iter().zip(&other.lower.0).map(|(a, b)| a.min(b).clone()).collect()),
            upper: Point(self.upper.0.iter().zip(&other.upper.0).map(|(a, b)| a.max(b).clone()).collect()),
        }
    }

    /// All integer points of the box in lexicographic order. Callers are
    /// responsible for checking [`volume`](Self::volume) first.
    pub fn points(&self) -> BoxPoints<'_> {
        BoxPoints { bbox: self, next: if self.is_empty() { None } else { Some(self.lower.0.clone()) } }
    }

    /// Parses `"l1:u1,l2:u2,..."`.
    pub fn parse(text: &str) -> Result<BoundingBox> {
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for part in text.split(',') {
            let (l, u) = part.trim().split_once(':').ok_or_else(|| Error::Parse(format!("box component `{part}` is not of the form l:u")))?;
            lower.push(parse_int(l)?);
            upper.push(parse_int(u)?);
        }
        BoundingBox::new(Point(lower), Point(upper))
    }
}

impl fmt::Display for BoundingBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (l, u)) in self.lower.0.iter().zip(&self.upper.0).enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}:{u}")?;
        }
        Ok(())
    }
}

pub struct BoxPoints<'a> {
    bbox: &'a BoundingBox,
    next: Option<Vec<Int>>,
}

impl Iterator for BoxPoints<'_> {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if succ[k] < self.bbox.upper.0[k] {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = self.bbox.lower.0[k].clone();
        }
        Some(Point(current))
    }
}

pub(crate) fn parse_int(s: &str) -> Result<Int> {
    s.trim().parse::<Int>().map_err(|e| Error::Parse(format!("`{s}`: {e}")))
}

/// A coordinate pair `i < j` (zero-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    i: usize,
    j: usize,
}

impl IndexPair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i < j {
            Ok(IndexPair { i, j })
        } else {
            Err(Error::InvalidIndices(format!("pair ({i}, {j}) is not strictly increasing")))
        }
    }

    pub fn first(self) -> usize {
        self.i
    }

    pub fn second(self) -> usize {
        self.j
    }

    pub fn as_indices(self) -> [usize; 2] {
        [self.i, self.j]
    }

    /// All pairs over `0..dim` in lexicographic order.
    pub fn all(dim: usize) -> impl Iterator<Item = IndexPair> {
        (0..dim).flat_map(move |i| (i + 1..dim).map(move |j| IndexPair { i, j }))
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i + 1, self.j + 1)
    }
}

impl Serialize for IndexPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq([self.i + 1, self.j + 1])
    }
}

/// One-based rendering of a zero-based index set, e.g. `{1,2,3}`.
pub fn format_indices(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|k| (k + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
