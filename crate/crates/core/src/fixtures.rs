//! Worked examples bundled as JSON data, with the claims each one must satisfy.

use serde::Serialize;
use serde_json::Value;

use crate::classify::Property;
use crate::convexity::{is_hole_free, is_integrally_convex};
use crate::decomp::{is_2_decomposable, project};
use crate::error::{Error, Result};
use crate::io::{point_set_from_value, system_from_value};
use crate::ops::{is_closed, TotalOp};
use crate::point::{BoundingBox, Point, PointSet};
use crate::representation::{integer_solutions, is_representable};
use crate::system::{LinearSystem, SystemClass};

const SOURCES: &[(&str, &str)] = &[
    ("hole-free-not-hereditary", include_str!("../fixtures/hole-free-not-hereditary.json")),
    ("intconv-not-mu", include_str!("../fixtures/intconv-not-mu.json")),
    ("median-not-tvpi", include_str!("../fixtures/median-not-tvpi.json")),
    ("proj-breaks-decomp", include_str!("../fixtures/proj-breaks-decomp.json")),
    ("tvpi-not-mu", include_str!("../fixtures/tvpi-not-mu.json")),
];

/// One bundled example.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub set: PointSet,
    pub system: Option<LinearSystem>,
    pub bbox: Option<BoundingBox>,
    /// Zero-based coordinates of a projection the example is about.
    pub projection: Option<Vec<usize>>,
}

pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

pub fn load(name: &str) -> Result<Fixture> {
    let (name, text) = SOURCES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::InvalidArgument(format!("unknown fixture `{name}`")))?;
    let v: Value = serde_json::from_str(text)?;
    let set = point_set_from_value(v.get("set").ok_or_else(|| Error::Parse(format!("{name}: no set")))?)?;
    let system = v.get("system").map(system_from_value).transpose()?;
    let bbox = v
        .get("box")
        .map(|b| b.as_str().ok_or_else(|| Error::Parse(format!("{name}: box must be a string"))).and_then(BoundingBox::parse))
        .transpose()?;
    let projection = v
        .get("projection")
        .map(|p| {
            p.as_array()
                .ok_or_else(|| Error::Parse(format!("{name}: projection must be an array")))?
                .iter()
                .map(|k| match k.as_u64() {
                    Some(k) if k >= 1 => Ok(k as usize - 1),
                    _ => Err(Error::Parse(format!("{name}: projection indices are one-based integers"))),
                })
                .collect::<Result<Vec<usize>>>()
        })
        .transpose()?;
    Ok(Fixture { name, set, system, bbox, projection })
}

/// One verified claim of a fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(claim: &str, passed: bool, observed: impl ToString) -> Check {
    Check { claim: claim.to_string(), passed, observed: observed.to_string() }
}

fn show(p: &Option<Point>) -> String {
    p.as_ref().map_or_else(|| "none".to_string(), Point::to_string)
}

fn needs<T>(v: Option<T>, name: &str, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("{name}: missing {what}")))
}

fn checks_for(f: &Fixture) -> Result<Vec<Check>> {
    let s = &f.set;
    let mut out = Vec::new();
    match f.name {
        "median-not-tvpi" => {
            let median = is_closed(s, &TotalOp::MEDIAN);
            out.push(check("median-closed", median.holds, median.holds));
            let tvpi = is_representable(s, SystemClass::Tvpi)?;
            out.push(check("not TVPI-representable", !tvpi.representable, tvpi.representable));
            out.push(check("TVPI hole is (1,1,1)", tvpi.hole == Some(crate::point![1, 1, 1]), show(&tvpi.hole)));
            let sys = needs(f.system.as_ref(), f.name, "system")?;
            let sol = integer_solutions(sys, needs(f.bbox.as_ref(), f.name, "box")?)?;
            out.push(check("system solutions over the box equal the set", sol == *s, &sol));
        }
        "tvpi-not-mu" => {
            let sys = needs(f.system.as_ref(), f.name, "system")?;
            let sol = integer_solutions(sys, needs(f.bbox.as_ref(), f.name, "box")?)?;
            out.push(check("system solutions equal the listed points", sol == *s, &sol));
            out.push(check("system is TVPI", sys.class() <= SystemClass::Tvpi && sys.is_well_tagged(), sys.class()));
            let mu = is_closed(s, &TotalOp::MU);
            let w = mu.witness.as_ref();
            out.push(check("not mu-closed", !mu.holds, mu.holds));
            out.push(check(
                "witness (2,0),(0,1) -> (1,0)",
                w.is_some_and(|w| w.inputs == [crate::point![2, 0], crate::point![0, 1]] && w.image() == Some(crate::point![1, 0])),
                w.map_or("none".to_string(), |w| w.to_string()),
            ));
        }
        "intconv-not-mu" => {
            let ic = is_integrally_convex(s);
            out.push(check("integrally convex", ic.holds, ic.holds));
            let mu = is_closed(s, &TotalOp::MU);
            let image = mu.witness.as_ref().and_then(|w| w.image());
            out.push(check("not mu-closed", !mu.holds, mu.holds));
            out.push(check("witness image (0,1,1)", image == Some(crate::point![0, 1, 1]), show(&image)));
            let utvpi = is_representable(s, SystemClass::Utvpi)?;
            out.push(check("not UTVPI-representable", !utvpi.representable, utvpi.representable));
        }
        "proj-breaks-decomp" => {
            let full = is_2_decomposable(s)?;
            out.push(check("set is 2-decomposable", full.decomposable, full.decomposable));
            let proj = project(s, needs(f.projection.as_deref(), f.name, "projection")?)?;
            let r = is_2_decomposable(&proj)?;
            out.push(check("projection is not 2-decomposable", !r.decomposable, r.decomposable));
            out.push(check("missing point (0,0,0)", r.missing_point == Some(crate::point![0, 0, 0]), show(&r.missing_point)));
        }
        "hole-free-not-hereditary" => {
            let full = is_hole_free(s)?;
            out.push(check("set is hole-free", full.holds, full.holds));
            let proj = project(s, needs(f.projection.as_deref(), f.name, "projection")?)?;
            let r = is_hole_free(&proj)?;
            let hole = r.witness.map(|w| w.hole);
            out.push(check("projection is not hole-free", !r.holds, r.holds));
            out.push(check("hole (1,1)", hole == Some(crate::point![1, 1]), show(&hole)));
            let median = is_closed(&proj, &TotalOp::MEDIAN);
            out.push(check("projection is median-closed", median.holds, median.holds));
        }
        other => return Err(Error::InvalidArgument(format!("no claims recorded for `{other}`"))),
    }
    Ok(out)
}

/// Runs one fixture; load or evaluation errors count as a failed check.
pub fn run(name: &str) -> Result<FixtureOutcome> {
    let f = load(name)?;
    let checks = checks_for(&f).unwrap_or_else(|e| vec![check("evaluation", false, e)]);
    Ok(FixtureOutcome { name: f.name, passed: checks.iter().all(|c| c.passed), checks })
}

/// Every fixture, in name order.
pub fn run_all() -> Vec<FixtureOutcome> {
    names().into_iter().map(|n| run(n).expect("bundled fixtures load")).collect()
}

/// Properties a fixture's set is known to have or lack, for cross-checks.
pub fn expected_properties(name: &str) -> Vec<(Property, bool)> {
    match name {
        "median-not-tvpi" => vec![(Property::MedianClosed, true), (Property::ReprTvpi, false), (Property::TwoDecomposable, true)],
        "tvpi-not-mu" => vec![(Property::ReprTvpi, true), (Property::MuClosed, false)],
        "intconv-not-mu" => vec![(Property::IntegrallyConvex, true), (Property::MuClosed, false), (Property::ReprUtvpi, false)],
        "proj-breaks-decomp" => vec![(Property::TwoDecomposable, true)],
        "hole-free-not-hereditary" => vec![(Property::HoleFree, true)],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        let outcomes = run_all();
        assert_eq!(outcomes.len(), 5);
        for o in &outcomes {
            assert!(o.passed, "{}: {:?}", o.name, o.checks);
        }
        let names: Vec<&str> = outcomes.iter().map(|o| o.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn classify_agrees_with_fixtures() {
        for name in names() {
            let r = crate::classify::classify(&load(name).unwrap().set).unwrap();
            assert!(r.consistency.is_empty(), "{name}: {:?}", r.consistency);
            for (prop, want) in expected_properties(name) {
                assert_eq!(r.verdict(prop), Some(want), "{name}: {prop}");
            }
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(load("nope").is_err());
    }
}
