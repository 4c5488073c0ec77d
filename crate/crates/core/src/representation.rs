//! Tightest SVPI/DC/UTVPI/TVPI systems for a point set, system evaluation,
//! integer solutions inside a box, and representability certificates.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::check_budget;
use crate::closure;
use crate::error::{Error, Result};
use crate::geometry::{hull_rows, P2};
use crate::point::{BoundingBox, IndexPair, Int, Point, PointSet, Rational};
use crate::system::{Inequality, LinearSystem, SystemClass};

/// Outcome of a representability check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReprCertificate {
    pub class: SystemClass,
    pub representable: bool,
    /// Present when representable; its integer solutions are exactly the set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<LinearSystem>,
    /// Present otherwise: the smallest point of the class closure missing from the set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hole: Option<Point>,
}

/// Integer direction vectors admissible for `class` (SVPI, DC or UTVPI).
pub fn directions(dim: usize, class: SystemClass) -> Vec<Vec<i64>> {
    let unit = |k: usize, v: i64| {
        let mut c = vec![0; dim];
        c[k] = v;
        c
    };
    let mut out: Vec<Vec<i64>> = Vec::new();
    for k in 0..dim {
        out.push(unit(k, 1));
        out.push(unit(k, -1));
    }
    let signs: &[(i64, i64)] = match class {
        SystemClass::Svpi => &[],
        SystemClass::Dc => &[(1, -1), (-1, 1)],
        _ => &[(1, 1), (1, -1), (-1, 1), (-1, -1)],
    };
    for pair in IndexPair::all(dim) {
        for &(a, b) in signs {
            let mut c = vec![0; dim];
            c[pair.first()] = a;
            c[pair.second()] = b;
            out.push(c);
        }
    }
    out
}

fn dot(c: &[i64], x: &Point) -> Int {
    c.iter().zip(x.coords()).filter(|(a, _)| **a != 0).map(|(a, v)| Int::from(*a) * v).sum()
}

/// The tightest system of `class` whose solutions contain `s`: one row per
/// admissible direction for SVPI/DC/UTVPI, and the lifted facets of every
/// pairwise hull for TVPI.
pub fn synthesize_system(s: &PointSet, class: SystemClass) -> Result<LinearSystem> {
    if s.is_empty() {
        return Err(Error::Empty("synthesize_system"));
    }
    let dim = s.dim();
    let rows = match class {
        SystemClass::General => {
            return Err(Error::InvalidArgument("GENERAL has no synthesis procedure".into()));
        }
        SystemClass::Tvpi if dim >= 2 => tvpi_rows(s),
        _ => {
            let dir_class = if class == SystemClass::Tvpi { SystemClass::Svpi } else { class };
            directions(dim, dir_class)
                .into_iter()
                .map(|c| {
                    let min = s.iter().map(|x| dot(&c, x)).min().expect("nonempty");
                    Inequality::new(c.iter().map(|&v| Rational::from_integer(Int::from(v))).collect(), Rational::from_integer(min), class)
                })
                .collect()
        }
    };
    LinearSystem::new(dim, rows)
}

fn tvpi_rows(s: &PointSet) -> Vec<Inequality> {
    let dim = s.dim();
    let mut rows: Vec<Inequality> = Vec::new();
    for pair in IndexPair::all(dim) {
        let [i, j] = pair.as_indices();
        let projected: Vec<P2> = s.iter().map(|x| (x.coord(i).clone(), x.coord(j).clone())).collect();
        for r in hull_rows(&projected) {
            let mut coeffs = vec![Rational::zero(); dim];
            coeffs[i] = Rational::from_integer(r.a);
            coeffs[j] = Rational::from_integer(r.b);
            let row = Inequality::new(coeffs, Rational::from_integer(r.c), SystemClass::Tvpi);
            if !rows.contains(&row) {
                rows.push(row);
            }
        }
    }
    rows
}

/// Whether `x` satisfies every row.
pub fn evaluate_system(sys: &LinearSystem, x: &Point) -> Result<bool> {
    if x.dim() != sys.dim() {
        return Err(Error::DimensionMismatch { row: 0, expected: sys.dim(), found: x.dim() });
    }
    Ok(sys.is_satisfied_by(x))
}

/// A row scaled to integer coefficients.
struct IntRow {
    coeffs: Vec<Int>,
    rhs: Int,
}

impl IntRow {
    fn from_inequality(r: &Inequality) -> IntRow {
        let lcm = r.coeffs.iter().chain(std::iter::once(&r.rhs)).fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |v: &Rational| (v * Rational::from_integer(lcm.clone())).to_integer();
        IntRow { coeffs: r.coeffs.iter().map(scale).collect(), rhs: scale(&r.rhs) }
    }
}

/// All integer points of `bbox` satisfying `sys`, in lexicographic order.
pub fn integer_solutions(sys: &LinearSystem, bbox: &BoundingBox) -> Result<PointSet> {
    let dim = sys.dim();
    if bbox.dim() != dim {
        return Err(Error::DimensionMismatch { row: 0, expected: dim, found: bbox.dim() });
    }
    if bbox.is_empty() {
        return PointSet::empty(dim);
    }
    check_budget(&bbox.volume())?;
    // rows keyed by their last nonzero coordinate, checked once that coordinate is fixed
    let mut by_last: Vec<Vec<IntRow>> = (0..dim).map(|_| Vec::new()).collect();
    for r in sys.rows() {
        let row = IntRow::from_inequality(r);
        match row.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(k) => by_last[k].push(row),
            None if row.rhs.is_positive() => return PointSet::empty(dim),
            None => {}
        }
    }
    let mut out = Vec::new();
    let mut x: Vec<Int> = Vec::with_capacity(dim);
    solve_from(0, &by_last, bbox, &mut x, &mut out);
    Ok(PointSet::from_sorted_unchecked(dim, out))
}

fn solve_from(k: usize, by_last: &[Vec<IntRow>], bbox: &BoundingBox, x: &mut Vec<Int>, out: &mut Vec<Point>) {
    if k == by_last.len() {
        out.push(Point::new(x.clone()));
        return;
    }
    let mut lo = bbox.lower.coord(k).clone();
    let mut hi = bbox.upper.coord(k).clone();
    for r in &by_last[k] {
        let fixed: Int = r.coeffs[..k].iter().zip(x.iter()).map(|(a, v)| a * v).sum();
        let rest = &r.rhs - fixed;
        let a = &r.coeffs[k];
        if a.is_positive() {
            lo = lo.max(rest.div_ceil(a));
        } else {
            hi = hi.min(rest.div_floor(a));
        }
        if lo > hi {
            return;
        }
    }
    let mut v = lo;
    while v <= hi {
        x.push(v.clone());
        solve_from(k + 1, by_last, bbox, x, out);
        x.pop();
        v += 1;
    }
}

/// Smallest superset of `s` representable in `class`.
pub fn class_closure(s: &PointSet, class: SystemClass) -> Result<PointSet> {
    match class {
        SystemClass::Svpi => closure::svpi_closure(s),
        SystemClass::Dc => closure::dc_closure(s),
        SystemClass::Utvpi => closure::utvpi_closure(s),
        SystemClass::Tvpi if s.dim() == 1 => closure::svpi_closure(s),
        SystemClass::Tvpi => closure::tvpi_closure(s),
        SystemClass::General => Err(Error::InvalidArgument("GENERAL has no closure procedure".into())),
    }
}

/// Decides `s = P ∩ Z^n` for some polyhedron `P` of `class`, by comparing `s`
/// with its class closure. The empty set is represented by `0 >= 1`.
pub fn is_representable(s: &PointSet, class: SystemClass) -> Result<ReprCertificate> {
    if class == SystemClass::General {
        return Err(Error::InvalidArgument("representability is decided for SVPI, DC, UTVPI and TVPI".into()));
    }
    if s.is_empty() {
        let row = Inequality::new(vec![Rational::zero(); s.dim()], Rational::one(), class);
        return Ok(ReprCertificate { class, representable: true, system: Some(LinearSystem::new(s.dim(), vec![row])?), hole: None });
    }
    let closed = class_closure(s, class)?;
    let hole = closed.difference(s).next().cloned();
    Ok(match hole {
        None => ReprCertificate { class, representable: true, system: Some(synthesize_system(s, class)?), hole: None },
        Some(h) => ReprCertificate { class, representable: false, system: None, hole: Some(h) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point;

    fn set(dim: usize, rows: &[&[i64]]) -> PointSet {
        PointSet::from_rows(dim, rows.iter().copied()).unwrap()
    }

    fn bx(text: &str) -> BoundingBox {
        BoundingBox::parse(text).unwrap()
    }

    fn example_system() -> LinearSystem {
        let g = SystemClass::General;
        LinearSystem::new(
            3,
            vec![
                Inequality::from_ints(&[2, 0, -1], 0, SystemClass::Tvpi),
                Inequality::from_ints(&[0, 2, -1], 0, SystemClass::Tvpi),
                Inequality::from_ints(&[-2, -2, 3], 0, g),
                Inequality::from_ints(&[0, 0, -1], -2, SystemClass::Svpi),
            ],
        )
        .unwrap()
    }

    #[test]
    fn direction_counts() {
        assert_eq!(directions(3, SystemClass::Svpi).len(), 6);
        assert_eq!(directions(3, SystemClass::Dc).len(), 6 + 6);
        assert_eq!(directions(3, SystemClass::Utvpi).len(), 2 * 9);
        for c in directions(4, SystemClass::Dc) {
            let r: Vec<Rational> = c.iter().map(|&v| Rational::from_integer(Int::from(v))).collect();
            assert!(SystemClass::Dc.admits(&r));
        }
    }

    #[test]
    fn example_system_solutions() {
        let sys = example_system();
        assert!(evaluate_system(&sys, &point![1, 1, 2]).unwrap());
        assert!(!evaluate_system(&sys, &point![1, 1, 1]).unwrap());
        assert!(evaluate_system(&LinearSystem::new(3, vec![]).unwrap(), &point![9, 9, 9]).unwrap());
        assert!(evaluate_system(&sys, &point![1, 1]).is_err());
        let got = integer_solutions(&sys, &bx("0:2,0:2,0:2")).unwrap();
        assert_eq!(got, set(3, &[&[0, 0, 0], &[1, 1, 2], &[2, 1, 2], &[1, 2, 2]]));
    }

    #[test]
    fn half_plane_solutions() {
        let sys = LinearSystem::new(2, vec![Inequality::from_ints(&[1, 2], 2, SystemClass::Tvpi)]).unwrap();
        let got = integer_solutions(&sys, &bx("0:2,0:2")).unwrap();
        let want = set(2, &[&[0, 1], &[0, 2], &[1, 1], &[1, 2], &[2, 0], &[2, 1], &[2, 2]]);
        assert_eq!(got, want);
    }

    #[test]
    fn infeasible_and_rational_rows() {
        let sys = LinearSystem::new(1, vec![Inequality::from_ints(&[1], 3, SystemClass::Svpi), Inequality::from_ints(&[-1], -2, SystemClass::Svpi)])
            .unwrap();
        assert!(integer_solutions(&sys, &bx("-5:5")).unwrap().is_empty());
        let half = Rational::new(Int::from(1), Int::from(2));
        let sys =
            LinearSystem::new(1, vec![Inequality::new(vec![half.clone()], half * Rational::from_integer(Int::from(3)), SystemClass::Tvpi)]).unwrap();
        // x/2 >= 3/2
        assert_eq!(integer_solutions(&sys, &bx("0:4")).unwrap(), set(1, &[&[3], &[4]]));
    }

    #[test]
    fn utvpi_synthesis_pins_diagonal() {
        let s = set(2, &[&[0, 0], &[2, 2]]);
        let sys = synthesize_system(&s, SystemClass::Utvpi).unwrap();
        assert_eq!(sys.rows().len(), 8);
        assert!(sys.is_well_tagged());
        let sol = integer_solutions(&sys, &bx("-1:3,-1:3")).unwrap();
        assert_eq!(sol, set(2, &[&[0, 0], &[1, 1], &[2, 2]]));
    }

    #[test]
    fn box_synthesis() {
        let s = BoundingBox::parse("0:2,0:1").unwrap();
        let s = PointSet::from_points(2, s.points()).unwrap();
        let sys = synthesize_system(&s, SystemClass::Svpi).unwrap();
        assert_eq!(sys.rows().len(), 4);
        assert!(is_representable(&s, SystemClass::Svpi).unwrap().representable);
    }

    #[test]
    fn tvpi_synthesis_for_example() {
        let s = set(3, &[&[0, 0, 0], &[1, 1, 2], &[2, 1, 2], &[1, 2, 2]]);
        let sys = synthesize_system(&s, SystemClass::Tvpi).unwrap();
        assert!(sys.is_well_tagged());
        assert!(s.iter().all(|x| sys.is_satisfied_by(x)));
        assert!(sys.is_satisfied_by(&point![1, 1, 1]));
        let cert = is_representable(&s, SystemClass::Tvpi).unwrap();
        assert!(!cert.representable);
        assert_eq!(cert.hole, Some(point![1, 1, 1]));
    }

    #[test]
    fn intconv_set_is_not_utvpi() {
        let s = set(3, &[&[-1, 1, 1], &[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let cert = is_representable(&s, SystemClass::Utvpi).unwrap();
        assert!(!cert.representable);
        let closure = class_closure(&s, SystemClass::Utvpi).unwrap();
        assert!(closure.contains(&point![0, 1, 1]));
        assert!(is_representable(&closure, SystemClass::Utvpi).unwrap().representable);
    }

    #[test]
    fn empty_set_is_representable() {
        let cert = is_representable(&PointSet::empty(2).unwrap(), SystemClass::Dc).unwrap();
        assert!(cert.representable);
        let sys = cert.system.unwrap();
        assert!(integer_solutions(&sys, &bx("0:3,0:3")).unwrap().is_empty());
    }
}
