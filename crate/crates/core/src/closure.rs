//! Closures of finite sets: fixpoints under operations and the smallest
//! SVPI, DC, UTVPI and TVPI representable supersets.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::check_budget;
use crate::decomp::{join, project};
use crate::error::{Error, Result};
use crate::geometry::{hull_lattice_points, P2};
use crate::ops::{image, TotalOp};
use crate::point::{IndexPair, Point, PointSet};
use crate::representation::{integer_solutions, synthesize_system};
use crate::system::SystemClass;
use crate::tuples::{for_each_sorted_touching, for_each_touching, has_repeat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub closed_set: PointSet,
    /// Number of sweeps, including the final one that added nothing.
    pub iterations: usize,
    pub generators_added: usize,
}

/// Least superset of `s` closed under every operation in `ops`.
///
/// Each sweep only evaluates tuples that involve a point found in the previous
/// sweep. A generated point outside the bounding box of `s` aborts with
/// [`Error::Unbounded`].
pub fn closure_under(s: &PointSet, ops: &[TotalOp]) -> Result<ClosureResult> {
    if s.is_empty() {
        return Err(Error::Empty("closure_under"));
    }
    let bbox = s.bounding_box()?;
    let mut pts: Vec<Point> = s.points().to_vec();
    let mut seen: HashSet<Point> = pts.iter().cloned().collect();
    let mut fresh = 0;
    let mut iterations = 0;
    loop {
        iterations += 1;
        let len = pts.len();
        let mut added: Vec<Point> = Vec::new();
        let mut escaped: Option<(String, Point)> = None;
        for op in ops {
            let mut visit = |t: &[usize]| {
                if op.majority && has_repeat(t) {
                    return true;
                }
                let args: Vec<&Point> = t.iter().map(|&i| &pts[i]).collect();
                let img = image(op, &args);
                if !bbox.contains(&img) {
                    escaped = Some((op.name.to_string(), img));
                    return false;
                }
                if seen.insert(img.clone()) {
                    added.push(img);
                }
                true
            };
            if op.symmetric {
                for_each_sorted_touching(len, fresh, op.arity, &mut visit);
            } else {
                for_each_touching(len, fresh, op.arity, &mut visit);
            }
            if let Some((op, p)) = escaped.take() {
                return Err(Error::Unbounded { op, point: p.to_string() });
            }
        }
        if added.is_empty() {
            break;
        }
        fresh = len;
        pts.extend(added);
    }
    let generators_added = pts.len() - s.len();
    Ok(ClosureResult { closed_set: PointSet::from_sorted_unchecked(s.dim(), pts), iterations, generators_added })
}

/// The integer box spanned by `s`.
pub fn svpi_closure(s: &PointSet) -> Result<PointSet> {
    let bbox = s.bounding_box()?;
    check_budget(&bbox.volume())?;
    Ok(PointSet::from_sorted_unchecked(s.dim(), bbox.points().collect()))
}

fn direction_closure(s: &PointSet, class: SystemClass, what: &'static str) -> Result<PointSet> {
    if s.is_empty() {
        return Err(Error::Empty(what));
    }
    let sys = synthesize_system(s, class)?;
    integer_solutions(&sys, &s.bounding_box()?)
}

/// Integer points satisfying every tightest difference bound `x_i - x_j >= m`.
pub fn dc_closure(s: &PointSet) -> Result<PointSet> {
    direction_closure(s, SystemClass::Dc, "dc_closure")
}

/// Integer points satisfying every tightest `±x_i ± x_j >= m`.
pub fn utvpi_closure(s: &PointSet) -> Result<PointSet> {
    direction_closure(s, SystemClass::Utvpi, "utvpi_closure")
}

/// Integer points of the convex hull of a planar set.
pub fn pairwise_integer_hull(s2: &PointSet) -> Result<PointSet> {
    if s2.dim() != 2 {
        return Err(Error::InvalidArgument(format!("pairwise_integer_hull needs dimension 2, got {}", s2.dim())));
    }
    if s2.is_empty() {
        return Err(Error::Empty("pairwise_integer_hull"));
    }
    let bbox = s2.bounding_box()?;
    check_budget(&bbox.volume())?;
    let pts: Vec<P2> = s2.iter().map(|p| (p.coord(0).clone(), p.coord(1).clone())).collect();
    let hull = hull_lattice_points(&pts).into_iter().map(|(x, y)| Point::new(vec![x, y])).collect();
    Ok(PointSet::from_sorted_unchecked(2, hull))
}

/// Join of the integer hulls of all pairwise projections.
pub fn tvpi_closure(s: &PointSet) -> Result<PointSet> {
    if s.dim() < 2 {
        return Err(Error::DimensionTooSmall { what: "tvpi_closure", required: 2, found: s.dim() });
    }
    if s.is_empty() {
        return Err(Error::Empty("tvpi_closure"));
    }
    let mut parts = BTreeMap::new();
    for pair in IndexPair::all(s.dim()) {
        parts.insert(pair, pairwise_integer_hull(&project(s, &pair.as_indices())?)?);
    }
    join(&parts, s.dim(), None)
}
