//! Full property profile of a set, with certificates and a consistency check
//! of the implications that relate the properties.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::convexity::{is_hole_free, is_integrally_convex, is_midpoint_neighbor_closed, PairWitness};
use crate::decomp::{is_2_decomposable, HereditaryWitness};
use crate::error::{Error, Result};
use crate::ops::{is_closed, is_closed_all, is_strongly_closed, is_weakly_closed, PartialOp, TotalOp, Witness};
use crate::point::{Point, PointSet};
use crate::representation::is_representable;
use crate::system::{LinearSystem, SystemClass};
use crate::verdict::Verdict;

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// An argument tuple whose image violates closedness.
    Operation(Witness),
    /// A pair of members violating a midpoint condition.
    Pair(PairWitness),
    /// An integer point of a closure or hull missing from the set.
    Hole {
        point: Point,
    },
    /// A point of the join of pairwise projections missing from the set.
    Missing {
        point: Point,
    },
    Hereditary(HereditaryWitness),
    /// A system whose integer solutions are exactly the set.
    System {
        system: LinearSystem,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    MidpointNeighbor,
    GhClosed,
    MuClosed,
    IntegrallyConvex,
    HoleFree,
    MedianClosed,
    TwoDecomposable,
    WeakMajP,
    StrongMajP,
    ReprSvpi,
    ReprDc,
    ReprUtvpi,
    ReprTvpi,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::MidpointNeighbor,
        Property::GhClosed,
        Property::MuClosed,
        Property::IntegrallyConvex,
        Property::HoleFree,
        Property::MedianClosed,
        Property::TwoDecomposable,
        Property::WeakMajP,
        Property::StrongMajP,
        Property::ReprSvpi,
        Property::ReprDc,
        Property::ReprUtvpi,
        Property::ReprTvpi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::MidpointNeighbor => "midpoint-neighbor",
            Property::GhClosed => "gh-closed",
            Property::MuClosed => "mu-closed",
            Property::IntegrallyConvex => "integrally-convex",
            Property::HoleFree => "hole-free",
            Property::MedianClosed => "median-closed",
            Property::TwoDecomposable => "2-decomposable",
            Property::WeakMajP => "weak-maj-p",
            Property::StrongMajP => "strong-maj-p",
            Property::ReprSvpi => "repr-svpi",
            Property::ReprDc => "repr-dc",
            Property::ReprUtvpi => "repr-utvpi",
            Property::ReprTvpi => "repr-tvpi",
        }
    }

    /// Whether the property is defined for sets of this dimension.
    pub fn applies_to(self, dim: usize) -> bool {
        self != Property::TwoDecomposable || dim >= 2
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::Parse(format!("unknown property `{s}`")))
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn from_op(v: Verdict<Witness>) -> (bool, Option<Certificate>) {
    (v.holds, v.witness.map(Certificate::Operation))
}

fn from_pair(v: Verdict<PairWitness>) -> (bool, Option<Certificate>) {
    (v.holds, v.witness.map(Certificate::Pair))
}

/// Decides one property. Failures carry a witness; representability
/// successes carry the synthesized system.
pub fn evaluate(s: &PointSet, prop: Property) -> Result<(bool, Option<Certificate>)> {
    let repr = |class| -> Result<(bool, Option<Certificate>)> {
        let cert = is_representable(s, class)?;
        let evidence = match (cert.system, cert.hole) {
            (Some(system), _) => Some(Certificate::System { system }),
            (None, Some(point)) => Some(Certificate::Hole { point }),
            (None, None) => None,
        };
        Ok((cert.representable, evidence))
    };
    Ok(match prop {
        Property::MidpointNeighbor => from_pair(is_midpoint_neighbor_closed(s)),
        Property::GhClosed => from_op(is_closed_all(s, &[TotalOp::CEIL_MID, TotalOp::FLOOR_MID])),
        Property::MuClosed => from_op(is_closed(s, &TotalOp::MU)),
        Property::IntegrallyConvex => from_pair(is_integrally_convex(s)),
        Property::HoleFree => {
            if s.is_empty() {
                (true, None)
            } else {
                let v = is_hole_free(s)?;
                (v.holds, v.witness.map(|w| Certificate::Hole { point: w.hole }))
            }
        }
        Property::MedianClosed => from_op(is_closed(s, &TotalOp::MEDIAN)),
        Property::TwoDecomposable => {
            let r = is_2_decomposable(s)?;
            (r.decomposable, r.missing_point.map(|point| Certificate::Missing { point }))
        }
        Property::WeakMajP => from_op(is_weakly_closed(s, PartialOp::MajP)),
        Property::StrongMajP => from_op(is_strongly_closed(s, PartialOp::MajP)),
        Property::ReprSvpi => repr(SystemClass::Svpi)?,
        Property::ReprDc => repr(SystemClass::Dc)?,
        Property::ReprUtvpi => repr(SystemClass::Utvpi)?,
        Property::ReprTvpi => repr(SystemClass::Tvpi)?,
    })
}

/// `premises` jointly imply `conclusion`.
pub struct Arrow {
    pub premises: &'static [Property],
    pub conclusion: Property,
    /// Holds only for planar sets.
    pub planar_only: bool,
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.premises.iter().map(|p| p.name()).collect();
        write!(f, "{} => {}", names.join(" & "), self.conclusion)
    }
}

const fn arrow(premises: &'static [Property], conclusion: Property) -> Arrow {
    Arrow { premises, conclusion, planar_only: false }
}

const fn planar(premises: &'static [Property], conclusion: Property) -> Arrow {
    Arrow { premises, conclusion, planar_only: true }
}

use Property::*;

/// Implications between the reported properties.
pub const ARROWS: &[Arrow] = &[
    arrow(&[ReprSvpi], ReprDc),
    arrow(&[ReprDc], ReprUtvpi),
    arrow(&[ReprUtvpi], ReprTvpi),
    arrow(&[ReprSvpi], MidpointNeighbor),
    arrow(&[MidpointNeighbor], ReprSvpi),
    arrow(&[ReprDc], GhClosed),
    arrow(&[GhClosed], ReprDc),
    arrow(&[ReprUtvpi], MedianClosed),
    arrow(&[ReprUtvpi], MuClosed),
    arrow(&[MedianClosed, MuClosed], ReprUtvpi),
    arrow(&[ReprUtvpi], IntegrallyConvex),
    arrow(&[ReprUtvpi], TwoDecomposable),
    arrow(&[IntegrallyConvex, TwoDecomposable], ReprUtvpi),
    arrow(&[MuClosed], IntegrallyConvex),
    arrow(&[ReprTvpi], MedianClosed),
    arrow(&[ReprTvpi], HoleFree),
    arrow(&[MedianClosed], StrongMajP),
    arrow(&[StrongMajP], TwoDecomposable),
    arrow(&[TwoDecomposable], WeakMajP),
    planar(&[MidpointNeighbor], GhClosed),
    planar(&[GhClosed], MuClosed),
    planar(&[MuClosed], IntegrallyConvex),
    planar(&[IntegrallyConvex], MuClosed),
    planar(&[IntegrallyConvex], HoleFree),
    planar(&[HoleFree], MedianClosed),
    planar(&[IntegrallyConvex], ReprUtvpi),
    planar(&[ReprUtvpi], IntegrallyConvex),
];

/// Arrows that apply in `dim` and fail under `verdicts`. Arrows mentioning a
/// property without a verdict are skipped.
pub fn violated_arrows(verdicts: &BTreeMap<Property, bool>, dim: usize) -> Vec<String> {
    ARROWS
        .iter()
        .filter(|a| !a.planar_only || dim == 2)
        .filter(|a| {
            let premises: Option<Vec<bool>> = a.premises.iter().map(|p| verdicts.get(p).copied()).collect();
            match (premises, verdicts.get(&a.conclusion)) {
                (Some(ps), Some(&c)) => ps.iter().all(|&b| b) && !c,
                _ => false,
            }
        })
        .map(|a| a.to_string())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub dim: usize,
    pub size: usize,
    pub verdicts: BTreeMap<Property, bool>,
    pub certificates: BTreeMap<Property, Certificate>,
    /// Violated implications; always empty for a correct implementation.
    pub consistency: Vec<String>,
    pub notes: Vec<String>,
}

impl ClassReport {
    pub fn verdict(&self, prop: Property) -> Option<bool> {
        self.verdicts.get(&prop).copied()
    }
}

/// Runs every check on `s`.
pub fn classify(s: &PointSet) -> Result<ClassReport> {
    if s.is_empty() {
        return Err(Error::Empty("classify"));
    }
    let mut verdicts = BTreeMap::new();
    let mut certificates = BTreeMap::new();
    let mut notes = vec!["closure under an arbitrary majority operation is not decided; median-closedness and the \
         join-of-closures characterizations are reported instead"
        .to_string()];
    for prop in Property::ALL {
        if !prop.applies_to(s.dim()) {
            notes.push(format!("{prop} needs dimension at least 2"));
            continue;
        }
        let (holds, cert) = evaluate(s, prop)?;
        verdicts.insert(prop, holds);
        if let Some(c) = cert {
            certificates.insert(prop, c);
        }
    }
    let consistency = violated_arrows(&verdicts, s.dim());
    Ok(ClassReport { dim: s.dim(), size: s.len(), verdicts, certificates, consistency, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point;

    fn set(dim: usize, rows: &[&[i64]]) -> PointSet {
        PointSet::from_rows(dim, rows.iter().copied()).unwrap()
    }

    #[test]
    fn median_closed_but_not_tvpi() {
        let r = classify(&set(3, &[&[0, 0, 0], &[1, 1, 2], &[2, 1, 2], &[1, 2, 2]])).unwrap();
        assert_eq!(r.verdict(MedianClosed), Some(true));
        assert_eq!(r.verdict(ReprTvpi), Some(false));
        assert_eq!(r.verdict(TwoDecomposable), Some(true));
        assert_eq!(r.certificates[&ReprTvpi], Certificate::Hole { point: point![1, 1, 1] });
        assert!(r.consistency.is_empty(), "{:?}", r.consistency);
    }

    #[test]
    fn integrally_convex_but_not_mu_closed() {
        let r = classify(&set(3, &[&[-1, 1, 1], &[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap();
        assert_eq!(r.verdict(IntegrallyConvex), Some(true));
        assert_eq!(r.verdict(MuClosed), Some(false));
        assert_eq!(r.verdict(ReprUtvpi), Some(false));
        assert!(r.consistency.is_empty(), "{:?}", r.consistency);
    }

    #[test]
    fn full_box_has_every_property() {
        let b = crate::BoundingBox::parse("0:2,0:2").unwrap();
        let r = classify(&PointSet::from_points(2, b.points()).unwrap()).unwrap();
        assert!(r.verdicts.values().all(|&v| v), "{:?}", r.verdicts);
        assert_eq!(r.verdicts.len(), Property::ALL.len());
        assert!(matches!(r.certificates[&ReprSvpi], Certificate::System { .. }));
    }

    #[test]
    fn one_dimensional_sets_skip_decomposability() {
        let r = classify(&set(1, &[&[0], &[2]])).unwrap();
        assert_eq!(r.verdict(TwoDecomposable), None);
        assert_eq!(r.verdict(HoleFree), Some(false));
        assert!(r.consistency.is_empty());
    }

    #[test]
    fn arrows_detect_contradictions() {
        let mut v = BTreeMap::new();
        v.insert(MuClosed, true);
        v.insert(IntegrallyConvex, false);
        assert_eq!(violated_arrows(&v, 3), vec!["mu-closed => integrally-convex".to_string()]);
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
    }
}
