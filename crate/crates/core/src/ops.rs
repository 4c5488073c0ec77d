//! Operations over `Z` applied componentwise, and closedness checks.
//!
//! Every check enumerates argument tuples with repetition in lexicographic
//! order over the sorted points of the set, so a reported witness is the
//! lexicographically smallest violating tuple.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::point::{serialize_int, IndexPair, Int, Point, PointSet};
use crate::tuples::{has_repeat, is_non_decreasing, Odometer};
use crate::verdict::Verdict;

pub fn median_op(a: &Int, b: &Int, c: &Int) -> Int {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if c <= lo {
        lo.clone()
    } else if c >= hi {
        hi.clone()
    } else {
        c.clone()
    }
}

/// Directed discrete midpoint: the average rounded toward the first argument.
pub fn mu_op(a: &Int, b: &Int) -> Int {
    if a >= b {
        ceil_mid(a, b)
    } else {
        floor_mid(a, b)
    }
}

pub fn ceil_mid(a: &Int, b: &Int) -> Int {
    (a + b).div_ceil(&Int::from(2))
}

pub fn floor_mid(a: &Int, b: &Int) -> Int {
    (a + b).div_floor(&Int::from(2))
}

/// Partial majority: the repeated value, undefined when all three differ.
pub fn maj_p_eval(a: &Int, b: &Int, c: &Int) -> Option<Int> {
    if a == b || a == c {
        Some(a.clone())
    } else if b == c {
        Some(b.clone())
    } else {
        None
    }
}

/// Position of the pair `{p, q}` (zero-based, `p < q`) in the lexicographic
/// order of two-element subsets of `0..k`.
pub fn pair_position(k: usize, p: usize, q: usize) -> usize {
    p * (2 * k - p - 1) / 2 + (q - p - 1)
}

/// `f^(k)` on arguments listed in the lexicographic order of two-element
/// subsets of `0..k`. Defined iff some element `l` has all of its pairs
/// carrying one common value `d`; that `d` is then the result.
pub fn fk_eval_slice(k: usize, args: &[Int]) -> Option<Int> {
    debug_assert_eq!(args.len(), k * (k - 1) / 2);
    (0..k).find_map(|l| {
        let mut star = (0..k).filter(|&m| m != l).map(|m| {
            let (p, q) = if l < m { (l, m) } else { (m, l) };
            &args[pair_position(k, p, q)]
        });
        let d = star.next()?;
        star.all(|v| v == d).then(|| d.clone())
    })
}

/// `f^(k)` on arguments keyed by index pair. The key set must be exactly the
/// two-element subsets of `0..k`.
pub fn fk_eval(k: usize, args: &BTreeMap<IndexPair, Int>) -> Result<Option<Int>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("f^(k) needs k >= 2, got {k}")));
    }
    let expected: Vec<IndexPair> = IndexPair::all(k).collect();
    if args.len() != expected.len() || !expected.iter().all(|p| args.contains_key(p)) {
        return Err(Error::InvalidIndices(format!("f^({k}) expects exactly the {} pairs over 1..={k}", expected.len())));
    }
    // BTreeMap iteration order is the canonical lexicographic pair order.
    let ordered: Vec<Int> = args.values().cloned().collect();
    Ok(fk_eval_slice(k, &ordered))
}

pub type OpFn = fn(&[&Int]) -> Int;

/// A total operation `Z^arity -> Z`.
#[derive(Clone, Copy)]
pub struct TotalOp {
    pub name: &'static str,
    pub arity: usize,
    /// Output always lies within `[min, max]` of the arguments.
    pub bounded: bool,
    /// Invariant under permutation of the arguments.
    pub symmetric: bool,
    /// Returns `x` whenever at least two of its three arguments equal `x`.
    pub majority: bool,
    pub eval: OpFn,
}

impl TotalOp {
    pub const MEDIAN: TotalOp =
        TotalOp { name: "median", arity: 3, bounded: true, symmetric: true, majority: true, eval: |a| median_op(a[0], a[1], a[2]) };
    pub const MU: TotalOp = TotalOp { name: "mu", arity: 2, bounded: true, symmetric: false, majority: false, eval: |a| mu_op(a[0], a[1]) };
    pub const CEIL_MID: TotalOp =
        TotalOp { name: "ceil-mid", arity: 2, bounded: true, symmetric: true, majority: false, eval: |a| ceil_mid(a[0], a[1]) };
    pub const FLOOR_MID: TotalOp =
        TotalOp { name: "floor-mid", arity: 2, bounded: true, symmetric: true, majority: false, eval: |a| floor_mid(a[0], a[1]) };
    pub const MIN3: TotalOp = TotalOp {
        name: "min3",
        arity: 3,
        bounded: true,
        symmetric: true,
        majority: false,
        eval: |a| a.iter().copied().min().cloned().unwrap_or_else(Int::zero),
    };
    pub const MAX3: TotalOp = TotalOp {
        name: "max3",
        arity: 3,
        bounded: true,
        symmetric: true,
        majority: false,
        eval: |a| a.iter().copied().max().cloned().unwrap_or_else(Int::zero),
    };

    pub const BUILTINS: [TotalOp; 6] = [Self::MEDIAN, Self::MU, Self::CEIL_MID, Self::FLOOR_MID, Self::MIN3, Self::MAX3];

    pub fn by_name(name: &str) -> Option<TotalOp> {
        Self::BUILTINS.iter().copied().find(|op| op.name == name)
    }

    pub fn apply(&self, args: &[&Int]) -> Int {
        (self.eval)(args)
    }
}

impl fmt::Debug for TotalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalOp({})", self.name)
    }
}

impl PartialEq for TotalOp {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.arity == other.arity
    }
}

impl Eq for TotalOp {}

/// A partial operation; `None` is the undefined result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartialOp {
    MajP,
    /// `f^(k)`, of arity `k(k-1)/2`.
    Fk(usize),
}

impl PartialOp {
    pub fn arity(self) -> usize {
        match self {
            PartialOp::MajP => 3,
            PartialOp::Fk(k) => k * (k - 1) / 2,
        }
    }

    pub fn name(self) -> String {
        match self {
            PartialOp::MajP => "maj-p".to_string(),
            PartialOp::Fk(k) => format!("fk:{k}"),
        }
    }

    pub fn parse(name: &str) -> Result<PartialOp> {
        if name == "maj-p" {
            return Ok(PartialOp::MajP);
        }
        if let Some(k) = name.strip_prefix("fk:") {
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad k in `{name}`")))?;
            if k < 2 {
                return Err(Error::InvalidArgument(format!("f^(k) needs k >= 2, got {k}")));
            }
            return Ok(PartialOp::Fk(k));
        }
        Err(Error::Parse(format!("unknown partial operation `{name}`")))
    }

    pub fn eval(self, args: &[&Int]) -> Option<Int> {
        match self {
            PartialOp::MajP => maj_p_eval(args[0], args[1], args[2]),
            PartialOp::Fk(k) => {
                let owned: Vec<Int> = args.iter().map(|&a| a.clone()).collect();
                fk_eval_slice(k, &owned)
            }
        }
    }
}

/// One total operation per coordinate, all of the same arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateFamily {
    ops: Vec<TotalOp>,
}

impl CoordinateFamily {
    pub fn new(ops: Vec<TotalOp>) -> Result<Self> {
        let first = ops.first().ok_or(Error::ZeroDimension)?;
        if let Some(bad) = ops.iter().find(|op| op.arity != first.arity) {
            return Err(Error::ArityMismatch { op: bad.name.to_string(), expected: first.arity, found: bad.arity });
        }
        Ok(CoordinateFamily { ops })
    }

    pub fn uniform(op: TotalOp, dim: usize) -> Result<Self> {
        Self::new(vec![op; dim])
    }

    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    pub fn arity(&self) -> usize {
        self.ops[0].arity
    }

    pub fn ops(&self) -> &[TotalOp] {
        &self.ops
    }

    pub fn name(&self) -> String {
        let names: Vec<&str> = self.ops.iter().map(|op| op.name).collect();
        format!("family({})", names.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessReason {
    /// The image is fully defined and not a member of the set.
    NotInSet,
    /// No member agrees with the image on its defined coordinates.
    NoAgreeingMember,
}

/// A violating argument tuple together with its componentwise image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub op: String,
    pub inputs: Vec<Point>,
    /// Per-coordinate image; `None` where a partial operation is undefined.
    pub produced: Vec<Option<Int>>,
    pub reason: WitnessReason,
}

impl Witness {
    /// The image as a point, when every coordinate is defined.
    pub fn image(&self) -> Option<Point> {
        self.produced.iter().cloned().collect::<Option<Vec<Int>>>().map(Point::new)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.op)?;
        for (k, p) in self.inputs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ") = (")?;
        for (k, c) in self.produced.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match c {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "*")?,
            }
        }
        let why = match self.reason {
            WitnessReason::NotInSet => "not in set",
            WitnessReason::NoAgreeingMember => "no agreeing member",
        };
        write!(f, ") {why}")
    }
}

struct MaybeInt<'a>(&'a Option<Int>);

impl Serialize for MaybeInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Some(v) => serialize_int(v, s),
            None => s.serialize_none(),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Witness", 4)?;
        st.serialize_field("op", &self.op)?;
        st.serialize_field("inputs", &self.inputs)?;
        st.serialize_field("produced", &self.produced.iter().map(MaybeInt).collect::<Vec<_>>())?;
        st.serialize_field("reason", &self.reason)?;
        st.end()
    }
}

pub fn apply_componentwise(op: &TotalOp, args: &[&Point]) -> Result<Point> {
    if args.len() != op.arity {
        return Err(Error::ArityMismatch { op: op.name.to_string(), expected: op.arity, found: args.len() });
    }
    let dim = args.first().map_or(0, |p| p.dim());
    if let Some((row, p)) = args.iter().enumerate().find(|(_, p)| p.dim() != dim) {
        return Err(Error::DimensionMismatch { row, expected: dim, found: p.dim() });
    }
    Ok(image(op, args))
}

pub(crate) fn image(op: &TotalOp, args: &[&Point]) -> Point {
    let dim = args[0].dim();
    let mut column: Vec<&Int> = Vec::with_capacity(args.len());
    let coords = (0..dim)
        .map(|k| {
            column.clear();
            column.extend(args.iter().map(|p| p.coord(k)));
            op.apply(&column)
        })
        .collect();
    Point::new(coords)
}

fn partial_image(op: PartialOp, args: &[&Point]) -> Vec<Option<Int>> {
    let dim = args[0].dim();
    let mut column: Vec<&Int> = Vec::with_capacity(args.len());
    (0..dim)
        .map(|k| {
            column.clear();
            column.extend(args.iter().map(|p| p.coord(k)));
            op.eval(&column)
        })
        .collect()
}

fn gather<'a>(s: &'a PointSet, t: &[usize]) -> Vec<&'a Point> {
    t.iter().map(|&i| &s.points()[i]).collect()
}

/// Whether every tuple of members (with repetition) maps into `s`.
pub fn is_closed(s: &PointSet, op: &TotalOp) -> Verdict<Witness> {
    let mut odo = Odometer::uniform(s.len(), op.arity);
    while let Some(t) = odo.next_tuple() {
        // Permutations of a violating tuple violate too, and the sorted one
        // comes first; tuples with a repeat are fixed by a majority operation.
        if op.symmetric && !is_non_decreasing(t) {
            continue;
        }
        if op.majority && has_repeat(t) {
            continue;
        }
        let args = gather(s, t);
        let img = image(op, &args);
        if !s.contains(&img) {
            return Verdict::fail(Witness {
                op: op.name.to_string(),
                inputs: args.into_iter().cloned().collect(),
                produced: img.into_coords().into_iter().map(Some).collect(),
                reason: WitnessReason::NotInSet,
            });
        }
    }
    Verdict::pass()
}

/// Closedness under every operation in `ops`; the first failing one is reported.
pub fn is_closed_all(s: &PointSet, ops: &[TotalOp]) -> Verdict<Witness> {
    for op in ops {
        let v = is_closed(s, op);
        if !v.holds {
            return v;
        }
    }
    Verdict::pass()
}

/// Images of tuples on which `op` is defined at every coordinate stay in `s`.
pub fn is_weakly_closed(s: &PointSet, op: PartialOp) -> Verdict<Witness> {
    let mut odo = Odometer::uniform(s.len(), op.arity());
    while let Some(t) = odo.next_tuple() {
        let args = gather(s, t);
        let produced = partial_image(op, &args);
        if produced.iter().any(Option::is_none) {
            continue;
        }
        let img = Point::new(produced.iter().cloned().map(Option::unwrap).collect());
        if !s.contains(&img) {
            return Verdict::fail(Witness { op: op.name(), inputs: args.into_iter().cloned().collect(), produced, reason: WitnessReason::NotInSet });
        }
    }
    Verdict::pass()
}

/// For every tuple some member agrees with the image wherever it is defined.
pub fn is_strongly_closed(s: &PointSet, op: PartialOp) -> Verdict<Witness> {
    let mut odo = Odometer::uniform(s.len(), op.arity());
    while let Some(t) = odo.next_tuple() {
        let args = gather(s, t);
        let produced = partial_image(op, &args);
        let agrees = |x: &Point| produced.iter().zip(x.coords()).all(|(want, have)| want.as_ref().is_none_or(|w| w == have));
        let found = if produced.iter().all(Option::is_some) {
            s.contains(&Point::new(produced.iter().cloned().map(Option::unwrap).collect()))
        } else {
            s.iter().any(agrees)
        };
        if !found {
            return Verdict::fail(Witness {
                op: op.name(),
                inputs: args.into_iter().cloned().collect(),
                produced,
                reason: WitnessReason::NoAgreeingMember,
            });
        }
    }
    Verdict::pass()
}

/// Closedness under a per-coordinate family `(f_i)`.
pub fn is_closed_family(s: &PointSet, fam: &CoordinateFamily) -> Result<Verdict<Witness>> {
    if fam.dim() != s.dim() {
        return Err(Error::DimensionMismatch { row: 0, expected: s.dim(), found: fam.dim() });
    }
    let mut odo = Odometer::uniform(s.len(), fam.arity());
    let mut column: Vec<&Int> = Vec::with_capacity(fam.arity());
    while let Some(t) = odo.next_tuple() {
        let args = gather(s, t);
        let coords: Vec<Int> = fam
            .ops()
            .iter()
            .enumerate()
            .map(|(k, op)| {
                column.clear();
                column.extend(args.iter().map(|p| p.coord(k)));
                op.apply(&column)
            })
            .collect();
        let img = Point::new(coords);
        if !s.contains(&img) {
            return Ok(Verdict::fail(Witness {
                op: fam.name(),
                inputs: args.into_iter().cloned().collect(),
                produced: img.into_coords().into_iter().map(Some).collect(),
                reason: WitnessReason::NotInSet,
            }));
        }
    }
    Ok(Verdict::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point;

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    fn set(dim: usize, rows: &[&[i64]]) -> PointSet {
        PointSet::from_rows(dim, rows.iter().copied()).unwrap()
    }

    #[test]
    fn median_examples() {
        assert_eq!(median_op(&i(0), &i(2), &i(1)), i(1));
        assert_eq!(median_op(&i(7), &i(7), &i(-3)), i(7));
        let args = [&point![0, 0, 0], &point![1, 1, 2], &point![2, 1, 2]];
        assert_eq!(apply_componentwise(&TotalOp::MEDIAN, &args).unwrap(), point![1, 1, 2]);
        let args = [&point![0, 0, 0], &point![1, 1, 2], &point![1, 2, 2]];
        assert_eq!(apply_componentwise(&TotalOp::MEDIAN, &args).unwrap(), point![1, 1, 2]);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_op(&i(2), &i(0)), i(1));
        assert_eq!(mu_op(&i(0), &i(1)), i(0));
        assert_eq!(mu_op(&i(-4), &i(-4)), i(-4));
        let args = [&point![2, 0], &point![0, 1]];
        assert_eq!(apply_componentwise(&TotalOp::MU, &args).unwrap(), point![1, 0]);
        let args = [&point![-1, 1, 1], &point![1, 0, 0]];
        assert_eq!(apply_componentwise(&TotalOp::MU, &args).unwrap(), point![0, 1, 1]);
    }

    #[test]
    fn rounded_midpoints() {
        assert_eq!((ceil_mid(&i(0), &i(3)), floor_mid(&i(0), &i(3))), (i(2), i(1)));
        assert_eq!((ceil_mid(&i(2), &i(2)), floor_mid(&i(2), &i(2))), (i(2), i(2)));
        // -1/2 rounds up to 0 and down to -1
        assert_eq!((ceil_mid(&i(-1), &i(0)), floor_mid(&i(-1), &i(0))), (i(0), i(-1)));
    }

    #[test]
    fn partial_majority() {
        assert_eq!(maj_p_eval(&i(5), &i(5), &i(9)), Some(i(5)));
        assert_eq!(maj_p_eval(&i(1), &i(2), &i(3)), None);
        assert_eq!(maj_p_eval(&i(4), &i(9), &i(4)), Some(i(4)));
        assert_eq!(maj_p_eval(&i(9), &i(4), &i(4)), Some(i(4)));
    }

    fn pairs(vals: &[(usize, usize, i64)]) -> BTreeMap<IndexPair, Int> {
        vals.iter().map(|&(p, q, v)| (IndexPair::new(p - 1, q - 1).unwrap(), i(v))).collect()
    }

    #[test]
    fn fk_examples() {
        let a = pairs(&[(1, 2, 7), (1, 3, 7), (2, 3, 9)]);
        assert_eq!(fk_eval(3, &a).unwrap(), Some(i(7)));
        let a = pairs(&[(1, 2, 1), (1, 3, 2), (2, 3, 3)]);
        assert_eq!(fk_eval(3, &a).unwrap(), None);
        // the star of element 2 is {12, 23, 24}
        let a = pairs(&[(1, 2, 0), (1, 3, 5), (1, 4, 6), (2, 3, 0), (2, 4, 0), (3, 4, 7)]);
        assert_eq!(fk_eval(4, &a).unwrap(), Some(i(0)));
        let short = pairs(&[(1, 2, 1), (1, 3, 1)]);
        assert!(fk_eval(3, &short).is_err());
        assert!(fk_eval(3, &pairs(&[(1, 2, 0), (1, 3, 0), (1, 4, 0)])).is_err());
    }

    #[test]
    fn fk_star_brute_force() {
        // enumerate every assignment of {0,1,2} to the six pairs of [4] and
        // compare against a direct reading of the star condition
        let k = 4;
        let all: Vec<IndexPair> = IndexPair::all(k).collect();
        for code in 0..3usize.pow(6) {
            let mut c = code;
            let vals: Vec<Int> = (0..6)
                .map(|_| {
                    let v = c % 3;
                    c /= 3;
                    i(v as i64)
                })
                .collect();
            let mut expected = None;
            for l in 0..k {
                let star: Vec<&Int> = all.iter().zip(&vals).filter(|(p, _)| p.first() == l || p.second() == l).map(|(_, v)| v).collect();
                if star.iter().all(|v| *v == star[0]) {
                    expected = Some(star[0].clone());
                    break;
                }
            }
            assert_eq!(fk_eval_slice(k, &vals), expected);
        }
    }

    #[test]
    fn arity_and_dim_errors() {
        assert!(apply_componentwise(&TotalOp::MU, &[&point![1, 2]]).is_err());
        assert!(apply_componentwise(&TotalOp::MU, &[&point![1, 2], &point![1]]).is_err());
        assert!(CoordinateFamily::new(vec![TotalOp::MU, TotalOp::MEDIAN]).is_err());
    }

    #[test]
    fn tvpi_polytope_is_not_mu_closed() {
        let s = set(2, &[&[0, 1], &[0, 2], &[1, 1], &[1, 2], &[2, 0], &[2, 1], &[2, 2]]);
        let v = is_closed(&s, &TotalOp::MU);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.inputs, vec![point![2, 0], point![0, 1]]);
        assert_eq!(w.image(), Some(point![1, 0]));
    }

    #[test]
    fn median_closed_example() {
        let s = set(3, &[&[0, 0, 0], &[1, 1, 2], &[2, 1, 2], &[1, 2, 2]]);
        assert!(is_closed(&s, &TotalOp::MEDIAN).holds);
        let singleton = set(2, &[&[3, -1]]);
        for op in TotalOp::BUILTINS {
            assert!(is_closed(&singleton, &op).holds, "{}", op.name);
        }
        assert!(is_closed(&PointSet::empty(2).unwrap(), &TotalOp::MU).holds);
    }

    #[test]
    fn symmetric_shortcut_reports_smallest_tuple() {
        let s = set(1, &[&[0], &[2], &[5]]);
        let full = {
            // plain enumeration without shortcuts
            let mut odo = Odometer::uniform(s.len(), 2);
            let mut first = None;
            while let Some(t) = odo.next_tuple() {
                let args = gather(&s, t);
                if !s.contains(&image(&TotalOp::CEIL_MID, &args)) {
                    first = Some(args.into_iter().cloned().collect::<Vec<_>>());
                    break;
                }
            }
            first
        };
        let v = is_closed(&s, &TotalOp::CEIL_MID);
        assert_eq!(v.witness.map(|w| w.inputs), full);
    }

    #[test]
    fn weak_majority() {
        let s = set(3, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let v = is_weakly_closed(&s, PartialOp::MajP);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.image(), Some(point![0, 0, 0]));
        assert_eq!(w.inputs, vec![point![0, 0, 1], point![0, 1, 0], point![1, 0, 0]]);

        let s = set(4, &[&[0, 0, 1, 2], &[0, 1, 0, 3], &[1, 0, 0, 4]]);
        assert!(is_weakly_closed(&s, PartialOp::MajP).holds);
    }

    #[test]
    fn strong_majority() {
        let s = set(3, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let v = is_strongly_closed(&s, PartialOp::MajP);
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().reason, WitnessReason::NoAgreeingMember);

        let square = set(2, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        assert!(is_strongly_closed(&square, PartialOp::MajP).holds);
        assert!(is_strongly_closed(&set(3, &[&[1, 2, 3]]), PartialOp::MajP).holds);
        assert!(is_strongly_closed(&set(3, &[&[1, 2, 3]]), PartialOp::Fk(3)).holds);
    }

    #[test]
    fn families() {
        let s = set(3, &[&[0, 0, 0], &[1, 1, 2], &[2, 1, 2], &[1, 2, 2]]);
        let fam = CoordinateFamily::uniform(TotalOp::MEDIAN, 3).unwrap();
        assert_eq!(is_closed_family(&s, &fam).unwrap().holds, is_closed(&s, &TotalOp::MEDIAN).holds);

        let s = set(2, &[&[0, 0], &[1, 1]]);
        let fam = CoordinateFamily::new(vec![TotalOp::MIN3, TotalOp::MAX3]).unwrap();
        let v = is_closed_family(&s, &fam).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.inputs, vec![point![0, 0], point![0, 0], point![1, 1]]);
        assert_eq!(w.image(), Some(point![0, 1]));

        assert!(is_closed_family(&s, &CoordinateFamily::uniform(TotalOp::MU, 3).unwrap()).is_err());
        let single = set(2, &[&[4, 4]]);
        assert!(is_closed_family(&single, &fam).unwrap().holds);
    }

    #[test]
    fn partial_op_names_round_trip() {
        for op in [PartialOp::MajP, PartialOp::Fk(2), PartialOp::Fk(5)] {
            assert_eq!(PartialOp::parse(&op.name()).unwrap(), op);
        }
        assert!(PartialOp::parse("fk:1").is_err());
        assert!(PartialOp::parse("median").is_err());
        assert_eq!(TotalOp::by_name("ceil-mid"), Some(TotalOp::CEIL_MID));
        assert_eq!(PartialOp::Fk(4).arity(), 6);
    }
}
