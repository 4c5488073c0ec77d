//! Projections, joins of planar relations, 2-decomposability and its
//! hereditary and partial-operation characterizations.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::closure::{closure_under, pairwise_integer_hull};
use crate::error::{Error, Result};
use crate::ops::{is_strongly_closed, is_weakly_closed, PartialOp, TotalOp, Witness};
use crate::point::{format_indices, BoundingBox, IndexPair, Int, Point, PointSet};
use crate::tuples::subsets_by_size;
use crate::verdict::Verdict;
use crate::{check_budget, enumeration_budget};

/// Restriction of every point to `indices` (zero-based, strictly increasing).
pub fn project(s: &PointSet, indices: &[usize]) -> Result<PointSet> {
    if indices.is_empty() {
        return Err(Error::InvalidIndices("empty index set".into()));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidIndices(format!("{} is not strictly increasing", format_indices(indices))));
    }
    if let Some(&bad) = indices.iter().find(|&&k| k >= s.dim()) {
        return Err(Error::InvalidIndices(format!("index {} exceeds dimension {}", bad + 1, s.dim())));
    }
    Ok(PointSet::from_sorted_unchecked(indices.len(), s.iter().map(|p| p.restrict(indices)).collect()))
}

/// All points of `Z^dim` (inside `bbox`) whose every pairwise projection lies
/// in the corresponding part. Without `bbox`, the box spanned by the parts is
/// used; any point of the join lies in it.
pub fn join(parts: &BTreeMap<IndexPair, PointSet>, dim: usize, bbox: Option<&BoundingBox>) -> Result<PointSet> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { what: "join", required: 2, found: dim });
    }
    for pair in IndexPair::all(dim) {
        let part = parts.get(&pair).ok_or_else(|| Error::InvalidIndices(format!("missing part for pair {pair}")))?;
        if part.dim() != 2 {
            return Err(Error::InvalidArgument(format!("part {pair} has dimension {}, expected 2", part.dim())));
        }
        if part.is_empty() {
            return PointSet::empty(dim);
        }
    }
    if let Some(extra) = parts.keys().find(|p| p.second() >= dim) {
        return Err(Error::InvalidIndices(format!("pair {extra} exceeds dimension {dim}")));
    }
    if let Some(b) = bbox {
        if b.dim() != dim {
            return Err(Error::DimensionMismatch { row: 0, expected: dim, found: b.dim() });
        }
    }
    let search = JoinSearch::new(parts, dim, bbox);
    let mut out = Vec::new();
    let mut x = Vec::with_capacity(dim);
    search.extend(&mut x, &mut out)?;
    Ok(PointSet::from_sorted_unchecked(dim, out))
}

struct JoinSearch<'a> {
    dim: usize,
    parts: Vec<Vec<Option<&'a PointSet>>>,
    /// For each coordinate `k >= 1`: value of `x_0` -> admissible values of `x_k`.
    from_first: Vec<BTreeMap<Int, Vec<Int>>>,
    first_values: BTreeSet<Int>,
    bbox: Option<&'a BoundingBox>,
}

impl<'a> JoinSearch<'a> {
    fn new(parts: &'a BTreeMap<IndexPair, PointSet>, dim: usize, bbox: Option<&'a BoundingBox>) -> Self {
        let mut table = vec![vec![None; dim]; dim];
        for (pair, part) in parts {
            table[pair.first()][pair.second()] = Some(part);
        }
        let mut from_first: Vec<BTreeMap<Int, Vec<Int>>> = vec![BTreeMap::new(); dim];
        for (k, adj) in from_first.iter_mut().enumerate().skip(1) {
            for p in table[0][k].expect("validated").iter() {
                adj.entry(p.coord(0).clone()).or_default().push(p.coord(1).clone());
            }
        }
        // x_0 must occur as a first coordinate in every part {0, k}
        let mut first_values: BTreeSet<Int> = from_first[1].keys().cloned().collect();
        for adj in &from_first[2..] {
            first_values.retain(|v| adj.contains_key(v));
        }
        JoinSearch { dim, parts: table, from_first, first_values, bbox }
    }

    fn in_box(&self, k: usize, v: &Int) -> bool {
        self.bbox.is_none_or(|b| b.lower.coord(k) <= v && v <= b.upper.coord(k))
    }

    fn extend(&self, x: &mut Vec<Int>, out: &mut Vec<Point>) -> Result<()> {
        let k = x.len();
        if k == self.dim {
            out.push(Point::new(x.clone()));
            if out.len() as u64 > enumeration_budget() {
                return Err(Error::BudgetExceeded { needed: format!("more than {}", out.len()), budget: enumeration_budget() });
            }
            return Ok(());
        }
        let candidates: Vec<Int> = if k == 0 {
            self.first_values.iter().filter(|v| self.in_box(0, v)).cloned().collect()
        } else {
            let Some(vals) = self.from_first[k].get(&x[0]) else {
                return Ok(());
            };
            vals.iter()
                .filter(|v| self.in_box(k, v))
                .filter(|v| {
                    (1..k).all(|j| {
                        let part = self.parts[j][k].expect("validated");
                        part.contains(&Point::new(vec![x[j].clone(), (*v).clone()]))
                    })
                })
                .cloned()
                .collect()
        };
        for v in candidates {
            x.push(v);
            self.extend(x, out)?;
            x.pop();
        }
        Ok(())
    }
}

/// Pairwise projections of `s`, keyed by pair.
pub fn pairwise_projections(s: &PointSet) -> Result<BTreeMap<IndexPair, PointSet>> {
    IndexPair::all(s.dim()).map(|pair| Ok((pair, project(s, &pair.as_indices())?))).collect()
}

/// Outcome of a 2-decomposability check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompReport {
    pub decomposable: bool,
    /// Smallest point of the join of projections that is missing from the set.
    pub missing_point: Option<Point>,
    #[serde(serialize_with = "serialize_projections")]
    pub projections: BTreeMap<IndexPair, PointSet>,
}

fn serialize_projections<S: serde::Serializer>(m: &BTreeMap<IndexPair, PointSet>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
}

/// Whether `s` equals the join of its pairwise projections.
pub fn is_2_decomposable(s: &PointSet) -> Result<DecompReport> {
    if s.dim() < 2 {
        return Err(Error::DimensionTooSmall { what: "2-decomposability", required: 2, found: s.dim() });
    }
    let projections = pairwise_projections(s)?;
    let joined = join(&projections, s.dim(), None)?;
    let missing_point = joined.difference(s).next().cloned();
    Ok(DecompReport { decomposable: missing_point.is_none(), missing_point, projections })
}

/// Planar closure applied to each pairwise projection before joining.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClosure {
    Mu,
    Gh,
    Median,
    Hull,
}

impl PairClosure {
    pub fn name(self) -> &'static str {
        match self {
            PairClosure::Mu => "mu",
            PairClosure::Gh => "gh",
            PairClosure::Median => "median",
            PairClosure::Hull => "hull",
        }
    }

    pub fn parse(name: &str) -> Result<PairClosure> {
        match name {
            "mu" => Ok(PairClosure::Mu),
            "gh" => Ok(PairClosure::Gh),
            "median" => Ok(PairClosure::Median),
            "hull" => Ok(PairClosure::Hull),
            _ => Err(Error::Parse(format!("unknown pair closure `{name}`"))),
        }
    }

    fn apply(self, s2: &PointSet) -> Result<PointSet> {
        let ops: &[TotalOp] = match self {
            PairClosure::Mu => &[TotalOp::MU],
            PairClosure::Gh => &[TotalOp::CEIL_MID, TotalOp::FLOOR_MID],
            PairClosure::Median => &[TotalOp::MEDIAN],
            PairClosure::Hull => return pairwise_integer_hull(s2),
        };
        Ok(closure_under(s2, ops)?.closed_set)
    }
}

/// Join over all pairs of the chosen closure of each pairwise projection.
pub fn join_of_closures(s: &PointSet, kind: PairClosure) -> Result<PointSet> {
    if s.dim() < 2 {
        return Err(Error::DimensionTooSmall { what: "join_of_closures", required: 2, found: s.dim() });
    }
    if s.is_empty() {
        return PointSet::empty(s.dim());
    }
    let mut parts = BTreeMap::new();
    for (pair, proj) in pairwise_projections(s)? {
        parts.insert(pair, kind.apply(&proj)?);
    }
    join(&parts, s.dim(), None)
}

/// Predicates whose hereditary versions are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HereditaryPredicate {
    TwoDecomposable,
    WeakMajP,
    StrongMajP,
}

impl HereditaryPredicate {
    pub fn name(self) -> &'static str {
        match self {
            HereditaryPredicate::TwoDecomposable => "2-decomposable",
            HereditaryPredicate::WeakMajP => "weak-maj-p",
            HereditaryPredicate::StrongMajP => "strong-maj-p",
        }
    }

    pub fn parse(name: &str) -> Result<HereditaryPredicate> {
        match name {
            "2-decomposable" => Ok(HereditaryPredicate::TwoDecomposable),
            "weak-maj-p" => Ok(HereditaryPredicate::WeakMajP),
            "strong-maj-p" => Ok(HereditaryPredicate::StrongMajP),
            _ => Err(Error::Parse(format!("unknown hereditary predicate `{name}`"))),
        }
    }
}

/// Why a projection failed a hereditary check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProjectionFailure {
    MissingPoint { point: Point },
    Operation { witness: Witness },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HereditaryWitness {
    /// Zero-based index set of the failing projection.
    pub indices: Vec<usize>,
    pub failure: ProjectionFailure,
}

/// Checks `pred` on every projection to at least two coordinates, smaller
/// index sets first. The full index set is included.
pub fn hereditary_check(s: &PointSet, pred: HereditaryPredicate) -> Result<Verdict<HereditaryWitness>> {
    for indices in subsets_by_size(s.dim(), 2) {
        let proj = project(s, &indices)?;
        let failure = match pred {
            HereditaryPredicate::TwoDecomposable => is_2_decomposable(&proj)?.missing_point.map(|point| ProjectionFailure::MissingPoint { point }),
            HereditaryPredicate::WeakMajP => is_weakly_closed(&proj, PartialOp::MajP).witness.map(|witness| ProjectionFailure::Operation { witness }),
            HereditaryPredicate::StrongMajP => {
                is_strongly_closed(&proj, PartialOp::MajP).witness.map(|witness| ProjectionFailure::Operation { witness })
            }
        };
        if let Some(failure) = failure {
            return Ok(Verdict::fail(HereditaryWitness { indices, failure }));
        }
    }
    Ok(Verdict::pass())
}

/// Weak closedness under `f^(k)` for every `2 <= k <= k_max`.
///
/// Requires `k_max >= dim`: weak closedness under `f^(dim)` alone already
/// forces 2-decomposability, so the biconditional is decided with that cap.
/// Each `k` enumerates `|S|^(k(k-1)/2)` tuples, checked against the budget.
pub fn is_weakly_f_closed(s: &PointSet, k_max: usize) -> Result<Verdict<Witness>> {
    let n = s.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { what: "weak F-closedness", required: 2, found: n });
    }
    if k_max < n {
        return Err(Error::InvalidArgument(format!("k_max = {k_max} is below the dimension {n}")));
    }
    for k in 2..=k_max {
        let arity = (k * (k - 1) / 2) as u32;
        check_budget(&Int::from(s.len()).pow(arity))?;
    }
    for k in 2..=k_max {
        let v = is_weakly_closed(s, PartialOp::Fk(k));
        if !v.holds {
            return Ok(v);
        }
    }
    Ok(Verdict::pass())
}
