//! Integer neighborhoods, convex-hull membership, and the discrete convexity
//! notions built on them.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::check_budget;
use crate::error::{Error, Result};
use crate::geometry::{hull_rows, P2};
use crate::point::{Int, Point, PointSet, Rational, RationalPoint};
use crate::verdict::Verdict;

/// `N(x) = { z in Z^n : |z_j - x_j| < 1 for all j }`.
pub fn integer_neighborhood(x: &RationalPoint) -> PointSet {
    let choices: Vec<Vec<Int>> =
        x.coords().iter().map(|c| if c.is_integer() { vec![c.to_integer()] } else { vec![c.floor().to_integer(), c.ceil().to_integer()] }).collect();
    let mut out: Vec<Vec<Int>> = vec![Vec::new()];
    for opts in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    PointSet::from_sorted_unchecked(x.dim(), out.into_iter().map(Point::new).collect())
}

/// Is `target` a convex combination of `generators`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullQuery {
    pub target: RationalPoint,
    pub generators: PointSet,
}

impl HullQuery {
    pub fn new(target: RationalPoint, generators: PointSet) -> Result<Self> {
        if target.dim() != generators.dim() {
            return Err(Error::DimensionMismatch { row: 0, expected: generators.dim(), found: target.dim() });
        }
        Ok(HullQuery { target, generators })
    }
}

/// Decides hull membership by exact phase-one simplex on
/// `sum λ_i g_i = t, sum λ_i = 1, λ >= 0`.
pub fn in_convex_hull(q: &HullQuery) -> Result<bool> {
    if q.target.dim() != q.generators.dim() {
        return Err(Error::DimensionMismatch { row: 0, expected: q.generators.dim(), found: q.target.dim() });
    }
    if q.generators.is_empty() {
        return Err(Error::Empty("in_convex_hull"));
    }
    let gens = q.generators.points();
    let t = q.target.coords();
    // quick rejection outside the bounding box
    for (k, tk) in t.iter().enumerate() {
        let lo = gens.iter().map(|g| g.coord(k)).min().expect("nonempty");
        let hi = gens.iter().map(|g| g.coord(k)).max().expect("nonempty");
        if *tk < Rational::from_integer(lo.clone()) || *tk > Rational::from_integer(hi.clone()) {
            return Ok(false);
        }
    }
    let mut a: Vec<Vec<Rational>> = (0..t.len()).map(|k| gens.iter().map(|g| Rational::from_integer(g.coord(k).clone())).collect()).collect();
    a.push(vec![Rational::one(); gens.len()]);
    let mut b: Vec<Rational> = t.to_vec();
    b.push(Rational::one());
    Ok(feasible(a, b))
}

/// Whether `A λ = b, λ >= 0` has a solution.
fn feasible(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> bool {
    let m = a.len();
    let n = a[0].len();
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        if rhs.is_negative() {
            row.iter_mut().for_each(|v| *v = -v.clone());
            *rhs = -rhs.clone();
        }
    }
    // tableau columns: n structural, m artificial
    let width = n + m;
    let mut tab: Vec<Vec<Rational>> = a
        .into_iter()
        .enumerate()
        .map(|(r, mut row)| {
            row.extend((0..m).map(|k| if k == r { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..width).collect();
    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<Rational> =
        (0..width).map(|c| if c < n { -tab.iter().map(|row| &row[c]).fold(Rational::zero(), |acc, v| acc + v) } else { Rational::zero() }).collect();
    let mut value: Rational = -b.iter().fold(Rational::zero(), |acc, v| acc + v);
    // Bland: smallest index with negative reduced cost
    while let Some(enter) = (0..width).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = &b[r] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // unbounded phase-one objective cannot happen; it is bounded below by 0
            break;
        };
        let piv = tab[pr][enter].clone();
        tab[pr].iter_mut().for_each(|v| *v /= &piv);
        b[pr] /= &piv;
        let pivot_row = tab[pr].clone();
        let pivot_rhs = b[pr].clone();
        for r in 0..m {
            if r != pr && !tab[r][enter].is_zero() {
                let f = tab[r][enter].clone();
                for (v, p) in tab[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
                b[r] -= &f * &pivot_rhs;
            }
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
        value -= &f * &pivot_rhs;
        basis[pr] = enter;
    }
    value.is_zero()
}

/// Two members and the offending neighborhood point or midpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: Point,
    pub y: Point,
    #[serde(serialize_with = "serialize_rational_point")]
    pub midpoint: RationalPoint,
    /// A point of `N(midpoint)` outside the set, when that is the failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<Point>,
}

fn serialize_rational_point<S: serde::Serializer>(p: &RationalPoint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.coords().iter().map(|c| if c.is_integer() { c.to_integer().to_string() } else { format!("{}/{}", c.numer(), c.denom()) }))
}

/// For all `x, y` in `s`, `N((x+y)/2)` is contained in `s`.
pub fn is_midpoint_neighbor_closed(s: &PointSet) -> Verdict<PairWitness> {
    let pts = s.points();
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[i + 1..] {
            let mid = RationalPoint::midpoint(x, y);
            if let Some(missing) = integer_neighborhood(&mid).iter().find(|z| !s.contains(z)) {
                return Verdict::fail(PairWitness { x: x.clone(), y: y.clone(), midpoint: mid, missing: Some(missing.clone()) });
            }
        }
    }
    Verdict::pass()
}

/// For all `x, y` in `s` with `||x - y||_inf >= 2`, the midpoint lies in the
/// convex hull of `s ∩ N((x+y)/2)`.
pub fn is_integrally_convex(s: &PointSet) -> Verdict<PairWitness> {
    let pts = s.points();
    let two = Int::from(2);
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[i + 1..] {
            if x.linf_distance(y) < two {
                continue;
            }
            let mid = RationalPoint::midpoint(x, y);
            let near: Vec<Point> = integer_neighborhood(&mid).iter().filter(|z| s.contains(z)).cloned().collect();
            let inside = !near.is_empty() && {
                let gens = PointSet::from_sorted_unchecked(s.dim(), near);
                in_convex_hull(&HullQuery { target: mid.clone(), generators: gens }).expect("dims match")
            };
            if !inside {
                return Verdict::fail(PairWitness { x: x.clone(), y: y.clone(), midpoint: mid, missing: None });
            }
        }
    }
    Verdict::pass()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    /// The smallest integer point of the hull that is not in the set.
    pub hole: Point,
}

/// Every integer point of `conv(s)` lies in `s`.
pub fn is_hole_free(s: &PointSet) -> Result<Verdict<HoleWitness>> {
    if s.is_empty() {
        return Ok(Verdict::pass());
    }
    let bbox = s.bounding_box()?;
    check_budget(&bbox.volume())?;
    if s.dim() == 2 {
        let pts: Vec<P2> = s.iter().map(|p| (p.coord(0).clone(), p.coord(1).clone())).collect();
        let rows = hull_rows(&pts);
        let hole = bbox.points().find(|p| !s.contains(p) && rows.iter().all(|r| r.holds(p.coord(0), p.coord(1))));
        return Ok(Verdict::from_witness(hole.map(|hole| HoleWitness { hole })));
    }
    for p in bbox.points() {
        if s.contains(&p) {
            continue;
        }
        let q = HullQuery { target: p.to_rational(), generators: s.clone() };
        if in_convex_hull(&q)? {
            return Ok(Verdict::fail(HoleWitness { hole: p }));
        }
    }
    Ok(Verdict::pass())
}
