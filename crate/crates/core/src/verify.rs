//! Randomized checks of the equivalences and implications between the
//! properties, over seeded small instances.

use std::time::Instant;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::classify;
use crate::closure::{closure_under, dc_closure, svpi_closure, tvpi_closure, utvpi_closure};
use crate::convexity::{is_hole_free, is_integrally_convex, is_midpoint_neighbor_closed};
use crate::decomp::{
    hereditary_check, is_2_decomposable, is_weakly_f_closed, join, join_of_closures, pairwise_projections, project, HereditaryPredicate, PairClosure,
};
use crate::error::Result;
use crate::ops::{
    ceil_mid, floor_mid, is_closed, is_closed_all, is_closed_family, is_strongly_closed, is_weakly_closed, maj_p_eval, median_op, mu_op,
    CoordinateFamily, PartialOp, TotalOp,
};
use crate::oracle::{naive_closure, random_set, Regime};
use crate::point::{BoundingBox, IndexPair, Int, Point, PointSet};
use crate::representation::{class_closure, integer_solutions, is_representable, synthesize_system};
use crate::system::{Inequality, LinearSystem, SystemClass};

/// Deliberate defects for checking that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// `mu` always rounds the average up.
    MuCeil,
}

impl Fault {
    pub fn parse(name: &str) -> Option<Fault> {
        (name == "mu-ceil").then_some(Fault::MuCeil)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, trials: 200, fault: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checked: 0, violations: 0, first_violation: None, elapsed_ms: 0 }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

const MU_CEIL: TotalOp = TotalOp { name: "mu", arity: 2, bounded: true, symmetric: false, majority: false, eval: |a| ceil_mid(a[0], a[1]) };

struct Ctx {
    cfg: VerifyConfig,
    mu: TotalOp,
}

impl Ctx {
    fn mu_closed(&self, s: &PointSet) -> bool {
        is_closed(s, &self.mu).holds
    }

    fn sample(&self, suite: u64, trial: usize) -> PointSet {
        Regime::SMALL.sample(self.cfg.seed ^ (suite << 32), trial as u64)
    }

    fn sample_closed(&self, suite: u64, trial: usize, ops: &[TotalOp]) -> PointSet {
        Regime::SMALL.sample_with(self.cfg.seed ^ (suite << 32) ^ 0xC105ED, trial as u64, ops)
    }

    fn rng(&self, suite: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ (suite << 40) ^ 0x5EED)
    }
}

type Suite = dyn Fn(&Ctx) -> Result<SuiteReport>;

/// Runs every suite; `trials` instances each.
pub fn run_suites(cfg: VerifyConfig) -> Result<Vec<SuiteReport>> {
    let ctx = Ctx { cfg, mu: if cfg.fault == Some(Fault::MuCeil) { MU_CEIL } else { TotalOp::MU } };
    let suites: [&Suite; 18] = [
        &|c| Ok(scalar_identities(c)),
        &utvpi_equivalence,
        &svpi_equivalence,
        &dc_equivalence,
        &tvpi_equivalence,
        &median_join,
        &intconv_decomp,
        &small_seed_closures,
        &f_closedness,
        &partial_chain,
        &closure_laws,
        &planar_hierarchy,
        &round_trip,
        &classify_consistency,
        &symmetries,
        &cube_subsets,
        &projections_preserve,
        &utvpi_systems,
    ];
    suites
        .iter()
        .map(|suite| {
            let start = Instant::now();
            let mut r = suite(&ctx)?;
            r.elapsed_ms = start.elapsed().as_millis();
            Ok(r)
        })
        .collect()
}

fn scalar_identities(ctx: &Ctx) -> SuiteReport {
    let mut r = SuiteReport::new("scalar-identities");
    let mut rng = ctx.rng(1);
    for _ in 0..ctx.cfg.trials {
        let (x, y) = (Int::from(rng.gen_range(-50..=50)), Int::from(rng.gen_range(-50..=50)));
        let z = Int::from(rng.gen_range(-50..=50));
        let m = |a: &Int, b: &Int| ctx.mu.apply(&[a, b]);
        r.expect(m(&x, &y) + m(&y, &x) == &x + &y, || format!("mu({x},{y}) + mu({y},{x}) != {x} + {y}"));
        let mu = m(&x, &y);
        r.expect(x.clone().min(y.clone()) <= mu && mu <= x.clone().max(y.clone()), || format!("mu({x},{y}) out of range"));
        r.expect(floor_mid(&x, &y) <= mu && mu <= ceil_mid(&x, &y), || format!("mu({x},{y}) not between h and g"));
        for (a, b, c) in [(&x, &x, &y), (&x, &y, &x), (&y, &x, &x)] {
            r.expect(median_op(a, b, c) == x, || format!("median({a},{b},{c}) != {x}"));
        }
        if let Some(v) = maj_p_eval(&x, &y, &z) {
            r.expect(v == median_op(&x, &y, &z), || format!("maj_p({x},{y},{z}) disagrees with median"));
        }
        r.expect(mu_op(&x, &y) == if x >= y { (&x + &y).div_ceil(&Int::from(2)) } else { (&x + &y).div_floor(&Int::from(2)) }, || {
            format!("mu({x},{y}) does not round toward the first argument")
        });
    }
    r
}

fn utvpi_equivalence(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("utvpi-iff-median-and-mu");
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(2, t), ctx.sample_closed(2, t, &[TotalOp::MEDIAN, ctx.mu])] {
            let repr = is_representable(&s, SystemClass::Utvpi)?.representable;
            let closed = is_closed(&s, &TotalOp::MEDIAN).holds && ctx.mu_closed(&s);
            r.expect(repr == closed, || format!("{s}: UTVPI {repr}, median and mu closed {closed}"));
            let joined = join_of_closures(&s, PairClosure::Mu)? == s;
            r.expect(repr == joined, || format!("{s}: UTVPI {repr}, equals join of mu-closures {joined}"));
        }
    }
    Ok(r)
}

fn svpi_equivalence(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("svpi-iff-midpoint-neighbor");
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(3, t), svpi_closure(&ctx.sample(3, t))?] {
            let repr = is_representable(&s, SystemClass::Svpi)?.representable;
            let mnc = is_midpoint_neighbor_closed(&s).holds;
            r.expect(repr == mnc, || format!("{s}: SVPI {repr}, midpoint-neighbor-closed {mnc}"));
        }
    }
    Ok(r)
}

fn dc_equivalence(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("dc-iff-gh");
    let gh = [TotalOp::CEIL_MID, TotalOp::FLOOR_MID];
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(4, t), ctx.sample_closed(4, t, &gh)] {
            let repr = is_representable(&s, SystemClass::Dc)?.representable;
            let closed = is_closed_all(&s, &gh).holds;
            r.expect(repr == closed, || format!("{s}: DC {repr}, gh-closed {closed}"));
            let joined = join_of_closures(&s, PairClosure::Gh)? == s;
            r.expect(repr == joined, || format!("{s}: DC {repr}, equals join of gh-closures {joined}"));
        }
    }
    Ok(r)
}

fn tvpi_equivalence(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("tvpi-iff-pairwise-hulls");
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(5, t), tvpi_closure(&ctx.sample(5, t))?] {
            let repr = is_representable(&s, SystemClass::Tvpi)?.representable;
            let fixed = tvpi_closure(&s)? == s;
            r.expect(repr == fixed, || format!("{s}: TVPI {repr}, fixed by tvpi_closure {fixed}"));
            let hulls = join_of_closures(&s, PairClosure::Hull)? == s;
            r.expect(fixed == hulls, || format!("{s}: tvpi_closure and join of hulls disagree"));
            if repr {
                r.expect(is_closed(&s, &TotalOp::MEDIAN).holds, || format!("{s}: TVPI but not median-closed"));
                r.expect(is_hole_free(&s)?.holds, || format!("{s}: TVPI but has a hole"));
            }
        }
    }
    Ok(r)
}

fn median_join(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("median-iff-join-of-median-closures");
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(6, t), ctx.sample_closed(6, t, &[TotalOp::MEDIAN])] {
            let closed = is_closed(&s, &TotalOp::MEDIAN).holds;
            let joined = join_of_closures(&s, PairClosure::Median)? == s;
            r.expect(closed == joined, || format!("{s}: median-closed {closed}, equals join {joined}"));
        }
    }
    Ok(r)
}

fn intconv_decomp(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("utvpi-iff-intconv-and-decomposable");
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(7, t), ctx.sample_closed(7, t, &[ctx.mu])] {
            let repr = is_representable(&s, SystemClass::Utvpi)?.representable;
            let ic = is_integrally_convex(&s).holds;
            let dec = is_2_decomposable(&s)?.decomposable;
            r.expect(repr == (ic && dec), || format!("{s}: UTVPI {repr}, integrally convex {ic}, 2-decomposable {dec}"));
            if ctx.mu_closed(&s) {
                r.expect(ic, || format!("{s}: mu-closed but not integrally convex"));
            }
        }
    }
    Ok(r)
}

fn small_seed_closures(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("mu-closure-of-pairs-and-triples");
    let b = BoundingBox::parse("-6:6,-6:6").expect("literal box");
    for t in 0..ctx.cfg.trials {
        for size in [2, 3] {
            let s = random_set(2, &b, size, ctx.cfg.seed ^ 0x7A1 ^ ((t as u64) << 8) ^ size as u64)?;
            let mu = closure_under(&s, &[ctx.mu])?.closed_set;
            let ut = utvpi_closure(&s)?;
            r.expect(mu == ut, || format!("{s}: mu-closure {mu} != UTVPI closure {ut}"));
        }
    }
    Ok(r)
}

fn f_closedness(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("decomposable-iff-weakly-f-closed");
    let regime = Regime { max_size: 5, ..Regime::SMALL };
    for t in 0..ctx.cfg.trials {
        let s = regime.sample(ctx.cfg.seed ^ 0xF00, t as u64);
        let dec = is_2_decomposable(&s)?.decomposable;
        let weak = is_weakly_f_closed(&s, s.dim())?.holds;
        r.expect(dec == weak, || format!("{s}: 2-decomposable {dec}, weakly F-closed {weak}"));
    }
    Ok(r)
}

fn partial_chain(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("partial-majority-chain");
    for t in 0..ctx.cfg.trials {
        for s in [ctx.sample(9, t), ctx.sample_closed(9, t, &[TotalOp::MEDIAN])] {
            let median = is_closed(&s, &TotalOp::MEDIAN).holds;
            let family = is_closed_family(&s, &CoordinateFamily::uniform(TotalOp::MEDIAN, s.dim())?)?.holds;
            let strong = is_strongly_closed(&s, PartialOp::MajP).holds;
            let dec = is_2_decomposable(&s)?.decomposable;
            let weak = is_weakly_closed(&s, PartialOp::MajP).holds;
            let chain = [("median", median), ("family", family), ("strong maj-p", strong), ("2-decomposable", dec), ("weak maj-p", weak)];
            for w in chain.windows(2) {
                r.expect(!w[0].1 || w[1].1, || format!("{s}: {} holds but {} fails", w[0].0, w[1].0));
            }
            let h: Vec<bool> = [HereditaryPredicate::StrongMajP, HereditaryPredicate::TwoDecomposable, HereditaryPredicate::WeakMajP]
                .into_iter()
                .map(|p| hereditary_check(&s, p).map(|v| v.holds))
                .collect::<Result<_>>()?;
            r.expect(h[0] == h[1] && h[1] == h[2], || format!("{s}: hereditary verdicts differ {h:?}"));
        }
    }
    Ok(r)
}

/// Closure kinds whose operator laws are checked.
#[derive(Clone, Copy, Debug)]
enum Kind {
    Ops(&'static str),
    Svpi,
    Dc,
    Utvpi,
    Tvpi,
}

fn closure_laws(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("closure-operator-laws");
    let median = [TotalOp::MEDIAN];
    let gh = [TotalOp::CEIL_MID, TotalOp::FLOOR_MID];
    let mu = [ctx.mu];
    let kinds = [Kind::Ops("mu"), Kind::Ops("median"), Kind::Ops("gh"), Kind::Svpi, Kind::Dc, Kind::Utvpi, Kind::Tvpi];
    let ops_of = |name: &str| -> &[TotalOp] {
        match name {
            "mu" => &mu,
            "median" => &median,
            _ => &gh,
        }
    };
    let apply = |k: Kind, s: &PointSet| -> Result<PointSet> {
        match k {
            Kind::Ops(name) => Ok(closure_under(s, ops_of(name))?.closed_set),
            Kind::Svpi => svpi_closure(s),
            Kind::Dc => dc_closure(s),
            Kind::Utvpi => utvpi_closure(s),
            Kind::Tvpi => tvpi_closure(s),
        }
    };
    let mut rng = ctx.rng(11);
    for t in 0..ctx.cfg.trials {
        let s = ctx.sample(11, t);
        let bbox = s.bounding_box()?;
        let extra = random_set(s.dim(), &bbox, rng.gen_range(1..=3.min(bbox.volume().to_usize().unwrap_or(1))), rng.gen())?;
        let bigger = s.union(&extra)?;
        for k in kinds {
            let c = apply(k, &s)?;
            r.expect(s.is_subset(&c), || format!("{k:?} not extensive on {s}"));
            r.expect(apply(k, &c)? == c, || format!("{k:?} not idempotent on {s}"));
            r.expect(c.is_subset(&apply(k, &bigger)?), || format!("{k:?} not monotone on {s} within {bigger}"));
            if let Kind::Ops(name) = k {
                let naive = naive_closure(&s, ops_of(name), &bbox)?;
                r.expect(naive == c, || format!("{k:?}: naive closure disagrees on {s}"));
            }
        }
    }
    Ok(r)
}

fn planar_hierarchy(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("planar-hierarchy");
    for t in 0..ctx.cfg.trials {
        let s = Regime::PLANAR.sample(ctx.cfg.seed ^ 0x2D, t as u64);
        let chain = [
            ("midpoint-neighbor", is_midpoint_neighbor_closed(&s).holds),
            ("gh", is_closed_all(&s, &[TotalOp::CEIL_MID, TotalOp::FLOOR_MID]).holds),
            ("mu", ctx.mu_closed(&s)),
            ("integrally convex", is_integrally_convex(&s).holds),
            ("hole-free", is_hole_free(&s)?.holds),
            ("median", is_closed(&s, &TotalOp::MEDIAN).holds),
        ];
        for w in chain.windows(2) {
            r.expect(!w[0].1 || w[1].1, || format!("{s}: {} holds but {} fails", w[0].0, w[1].0));
        }
        r.expect(chain[2].1 == chain[3].1, || format!("{s}: mu-closed and integrally convex differ"));
        let utvpi = is_representable(&s, SystemClass::Utvpi)?.representable;
        r.expect(chain[3].1 == utvpi, || format!("{s}: integrally convex and UTVPI differ"));
    }
    Ok(r)
}

fn round_trip(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("synthesized-system-round-trip");
    for t in 0..ctx.cfg.trials {
        let s = ctx.sample(13, t);
        let padded = s.bounding_box()?.padded(1);
        for class in SystemClass::REPRESENTABLE {
            let sys = synthesize_system(&s, class)?;
            r.expect(sys.is_well_tagged() && sys.class() == class, || format!("{s}: {class} system mis-tagged"));
            let sol = integer_solutions(&sys, &padded)?;
            let closed = class_closure(&s, class)?;
            r.expect(sol == closed, || format!("{s}: {class} system solutions {sol} != closure {closed}"));
        }
    }
    Ok(r)
}

fn classify_consistency(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("classify-consistency");
    for t in 0..ctx.cfg.trials.div_ceil(4) {
        let s = ctx.sample(14, t);
        let report = classify(&s)?;
        r.expect(report.consistency.is_empty(), || format!("{s}: {:?}", report.consistency));
    }
    Ok(r)
}

/// Reflections, coordinate swaps and translations.
type Transform = Box<dyn Fn(&Point) -> Point>;

fn transforms(dim: usize, rng: &mut ChaCha8Rng) -> Vec<(String, Transform)> {
    let mut out: Vec<(String, Transform)> = Vec::new();
    let k = rng.gen_range(0..dim);
    out.push((
        format!("negate x{}", k + 1),
        Box::new(move |p: &Point| {
            let mut c = p.coords().to_vec();
            c[k] = -c[k].clone();
            Point::new(c)
        }),
    ));
    out.push((
        "swap x1,x2".into(),
        Box::new(|p: &Point| {
            let mut c = p.coords().to_vec();
            c.swap(0, 1);
            Point::new(c)
        }),
    ));
    out.push((
        "reflect in x1 = -x2".into(),
        Box::new(|p: &Point| {
            let mut c = p.coords().to_vec();
            let (a, b) = (c[0].clone(), c[1].clone());
            c[0] = -b;
            c[1] = -a;
            Point::new(c)
        }),
    ));
    let shift: Vec<Int> = (0..dim).map(|_| Int::from(rng.gen_range(-5..=5))).collect();
    out.push((
        format!("translate by {}", Point::new(shift.clone())),
        Box::new(move |p: &Point| Point::new(p.coords().iter().zip(&shift).map(|(a, b)| a + b).collect())),
    ));
    out
}

fn symmetries(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("symmetry-invariance");
    let mut rng = ctx.rng(15);
    for t in 0..ctx.cfg.trials {
        let s = ctx.sample(15, t);
        let base = (is_integrally_convex(&s).holds, ctx.mu_closed(&s), is_representable(&s, SystemClass::Utvpi)?.representable);
        for (name, f) in transforms(s.dim(), &mut rng) {
            let img = s.map(|p| f(p))?;
            let got = (is_integrally_convex(&img).holds, ctx.mu_closed(&img), is_representable(&img, SystemClass::Utvpi)?.representable);
            r.expect(base == got, || format!("{s} under {name}: {base:?} became {got:?}"));
        }
    }
    Ok(r)
}

fn cube_subsets(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("binary-cube-subsets");
    let mut rng = ctx.rng(16);
    for _ in 0..ctx.cfg.trials {
        let dim = rng.gen_range(2..=4);
        let b = BoundingBox::new(Point::from_i64s(&vec![0; dim]), Point::from_i64s(&vec![1; dim]))?;
        let s = random_set(dim, &b, rng.gen_range(1..=1usize << dim), rng.gen())?;
        r.expect(ctx.mu_closed(&s), || format!("{s}: binary set not mu-closed"));
        r.expect(is_integrally_convex(&s).holds, || format!("{s}: binary set not integrally convex"));
    }
    Ok(r)
}

fn projections_preserve(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("projection-and-join-preserve-closedness");
    let ops = [TotalOp::MEDIAN, ctx.mu, TotalOp::CEIL_MID, TotalOp::FLOOR_MID];
    for t in 0..ctx.cfg.trials {
        let op = ops[t % ops.len()];
        let s = ctx.sample_closed(17, t, &[op]);
        for (pair, proj) in pairwise_projections(&s)? {
            r.expect(is_closed(&proj, &op).holds, || format!("{s}: projection {pair} not {}-closed", op.name));
        }
        let bbox = s.bounding_box()?;
        let extra = random_set(s.dim(), &bbox, 1.max(s.len().min(3)), ctx.cfg.seed ^ t as u64)?;
        let u = s.union(&extra)?;
        let mut parts = std::collections::BTreeMap::new();
        for pair in IndexPair::all(s.dim()) {
            parts.insert(pair, closure_under(&project(&u, &pair.as_indices())?, &[op])?.closed_set);
        }
        let joined = join(&parts, s.dim(), None)?;
        r.expect(is_closed(&joined, &op).holds, || format!("join of {}-closed parts not closed", op.name));
    }
    Ok(r)
}

fn random_utvpi_system(dim: usize, rng: &mut ChaCha8Rng) -> Result<LinearSystem> {
    let dirs = crate::representation::directions(dim, SystemClass::Utvpi);
    let mut rows = Vec::new();
    for k in 0..dim {
        rows.push(Inequality::from_ints(&unit(dim, k, 1), -2, SystemClass::Utvpi));
        rows.push(Inequality::from_ints(&unit(dim, k, -1), -2, SystemClass::Utvpi));
    }
    for _ in 0..rng.gen_range(1..=4) {
        let c = &dirs[rng.gen_range(0..dirs.len())];
        rows.push(Inequality::from_ints(c, rng.gen_range(-3..=1), SystemClass::Utvpi));
    }
    LinearSystem::new(dim, rows)
}

fn unit(dim: usize, k: usize, v: i64) -> Vec<i64> {
    let mut c = vec![0; dim];
    c[k] = v;
    c
}

fn utvpi_systems(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("utvpi-solutions-are-closed");
    let mut rng = ctx.rng(18);
    for _ in 0..ctx.cfg.trials {
        let dim = rng.gen_range(1..=3);
        let sys = random_utvpi_system(dim, &mut rng)?;
        let b = BoundingBox::new(Point::from_i64s(&vec![-2; dim]), Point::from_i64s(&vec![2; dim]))?;
        let s = integer_solutions(&sys, &b)?;
        r.expect(ctx.mu_closed(&s), || format!("solutions of\n{sys}are not mu-closed"));
        r.expect(is_closed(&s, &TotalOp::MEDIAN).holds, || format!("solutions of\n{sys}are not median-closed"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_a_few_trials() {
        for rep in run_suites(VerifyConfig { seed: 3, trials: 8, fault: None }).unwrap() {
            assert!(rep.passed(), "{}: {:?}", rep.name, rep.first_violation);
            assert!(rep.checked > 0, "{}", rep.name);
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let reps = run_suites(VerifyConfig { seed: 3, trials: 20, fault: Some(Fault::MuCeil) }).unwrap();
        assert!(reps.iter().map(|r| r.violations).sum::<usize>() > 0);
    }
}
