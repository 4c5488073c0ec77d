//! Planar integer hulls: convex hull vertices, facet rows and lattice points.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::point::Int;

pub(crate) type P2 = (Int, Int);

/// A row `a*x + b*y >= c` with `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Row2 {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl Row2 {
    fn normalized(a: Int, b: Int, c: Int) -> Row2 {
        let g = a.gcd(&b);
        if g.is_zero() {
            return Row2 { a, b, c };
        }
        // c is a*x0 + b*y0 at a lattice point, so it divides exactly
        Row2 { a: a / &g, b: b / &g, c: c.div_ceil(&g) }
    }

    pub fn holds(&self, x: &Int, y: &Int) -> bool {
        &self.a * x + &self.b * y >= self.c
    }
}

fn cross(o: &P2, a: &P2, b: &P2) -> Int {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Hull vertices in counter-clockwise order without collinear points.
/// Degenerate inputs yield one vertex (a point) or two (a segment).
pub(crate) fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut pts: Vec<P2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Int::zero() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Int::zero() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// Inequalities whose common solution set is the hull of `points`.
pub(crate) fn hull_rows(points: &[P2]) -> Vec<Row2> {
    let hull = convex_hull(points);
    let one = Int::from(1);
    let zero = Int::zero();
    match hull.len() {
        0 => Vec::new(),
        1 => {
            let (x, y) = &hull[0];
            vec![
                Row2 { a: one.clone(), b: zero.clone(), c: x.clone() },
                Row2 { a: -&one, b: zero.clone(), c: -x },
                Row2 { a: zero.clone(), b: one.clone(), c: y.clone() },
                Row2 { a: zero, b: -&one, c: -y },
            ]
        }
        2 => {
            let (p, q) = (&hull[0], &hull[1]);
            let dx = &q.0 - &p.0;
            let dy = &q.1 - &p.1;
            let (na, nb) = (-&dy, dx.clone());
            let at = |a: &Int, b: &Int, r: &P2| a * &r.0 + b * &r.1;
            vec![
                Row2::normalized(na.clone(), nb.clone(), at(&na, &nb, p)),
                Row2::normalized(-&na, -&nb, -at(&na, &nb, p)),
                Row2::normalized(dx.clone(), dy.clone(), at(&dx, &dy, p)),
                Row2::normalized(-&dx, -&dy, -at(&dx, &dy, q)),
            ]
        }
        m => (0..m)
            .map(|k| {
                let p = &hull[k];
                let q = &hull[(k + 1) % m];
                // interior lies to the left of p -> q
                let a = &p.1 - &q.1;
                let b = &q.0 - &p.0;
                let c = &a * &p.0 + &b * &p.1;
                Row2::normalized(a, b, c)
            })
            .collect(),
    }
}

/// Lattice points satisfying all rows with `x` in `[x_lo, x_hi]`, sorted.
/// The rows must bound `y` for every column that admits a solution.
pub(crate) fn lattice_points(rows: &[Row2], x_lo: &Int, x_hi: &Int) -> Vec<P2> {
    let mut out = Vec::new();
    let mut x = x_lo.clone();
    while &x <= x_hi {
        let mut lo: Option<Int> = None;
        let mut hi: Option<Int> = None;
        let mut feasible = true;
        for r in rows {
            let rest = &r.c - &r.a * &x;
            if r.b.is_zero() {
                if rest.is_positive() {
                    feasible = false;
                    break;
                }
                continue;
            }
            if r.b.is_positive() {
                let v = rest.div_ceil(&r.b);
                if lo.as_ref().is_none_or(|l| v > *l) {
                    lo = Some(v);
                }
            } else {
                let v = rest.div_floor(&r.b);
                if hi.as_ref().is_none_or(|h| v < *h) {
                    hi = Some(v);
                }
            }
        }
        if feasible {
            if let (Some(mut y), Some(h)) = (lo, hi) {
                while y <= h {
                    out.push((x.clone(), y.clone()));
                    y += 1;
                }
            }
        }
        x += 1;
    }
    out
}

/// Lattice points of the convex hull of `points`, sorted.
pub(crate) fn hull_lattice_points(points: &[P2]) -> Vec<P2> {
    let Some(x_lo) = points.iter().map(|p| &p.0).min() else {
        return Vec::new();
    };
    let x_hi = points.iter().map(|p| &p.0).max().unwrap();
    lattice_points(&hull_rows(points), x_lo, x_hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> P2 {
        (Int::from(x), Int::from(y))
    }

    fn pts(v: &[(i64, i64)]) -> Vec<P2> {
        v.iter().map(|&(x, y)| p(x, y)).collect()
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let h = convex_hull(&pts(&[(0, 0), (2, 0), (1, 0), (1, 1), (0, 2), (2, 2)]));
        assert_eq!(h, pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]));
        assert_eq!(convex_hull(&pts(&[(0, 0), (1, 1), (2, 2)])), pts(&[(0, 0), (2, 2)]));
        assert_eq!(convex_hull(&pts(&[(3, 3), (3, 3)])), pts(&[(3, 3)]));
    }

    #[test]
    fn triangle_lattice_points() {
        let got = hull_lattice_points(&pts(&[(0, 0), (1, 2), (2, 2)]));
        assert_eq!(got, pts(&[(0, 0), (1, 1), (1, 2), (2, 2)]));
    }

    #[test]
    fn segments_and_points() {
        assert_eq!(hull_lattice_points(&pts(&[(0, 0), (2, 1)])), pts(&[(0, 0), (2, 1)]));
        assert_eq!(hull_lattice_points(&pts(&[(0, 0), (2, 2)])), pts(&[(0, 0), (1, 1), (2, 2)]));
        assert_eq!(hull_lattice_points(&pts(&[(0, -3), (0, 3)])).len(), 7);
        assert_eq!(hull_lattice_points(&pts(&[(5, -1)])), pts(&[(5, -1)]));
    }

    #[test]
    fn rows_are_primitive() {
        for r in hull_rows(&pts(&[(0, 0), (4, 2), (0, 6)])) {
            assert_eq!(r.a.gcd(&r.b), Int::from(1));
        }
    }
}
