//! Brute-force references and seeded random instances.
//!
//! Nothing here reuses the optimized enumeration in [`crate::closure`]; the
//! closure below applies every operation to every tuple until nothing changes.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closure::closure_under;
use crate::error::{Error, Result};
use crate::ops::TotalOp;
use crate::point::{BoundingBox, Int, Point, PointSet};

/// Saturates `s` under `ops` by repeated full passes over all tuples.
pub fn naive_closure(s: &PointSet, ops: &[TotalOp], bbox: &BoundingBox) -> Result<PointSet> {
    if bbox.dim() != s.dim() {
        return Err(Error::DimensionMismatch { row: 0, expected: s.dim(), found: bbox.dim() });
    }
    if let Some(p) = s.iter().find(|p| !bbox.contains(p)) {
        return Err(Error::InvalidArgument(format!("{p} lies outside the box {bbox}")));
    }
    let mut current: BTreeSet<Point> = s.iter().cloned().collect();
    loop {
        let pts: Vec<Point> = current.iter().cloned().collect();
        let mut next = current.clone();
        for op in ops {
            let total = pts.len().pow(op.arity as u32);
            for code in 0..total {
                // decode `code` in base |pts| into an argument tuple
                let mut c = code;
                let mut args: Vec<&Point> = Vec::with_capacity(op.arity);
                for _ in 0..op.arity {
                    args.push(&pts[c % pts.len()]);
                    c /= pts.len();
                }
                let coords: Vec<Int> = (0..s.dim())
                    .map(|k| {
                        let column: Vec<&Int> = args.iter().map(|p| &p.coords()[k]).collect();
                        (op.eval)(&column)
                    })
                    .collect();
                let img = Point::new(coords);
                if !bbox.contains(&img) {
                    return Err(Error::Unbounded { op: op.name.to_string(), point: img.to_string() });
                }
                next.insert(img);
            }
        }
        if next.len() == current.len() {
            return PointSet::from_points(s.dim(), current);
        }
        current = next;
    }
}

/// A uniformly random `size`-subset of the box, determined by `seed`.
pub fn random_set(dim: usize, bbox: &BoundingBox, size: usize, seed: u64) -> Result<PointSet> {
    if bbox.dim() != dim {
        return Err(Error::DimensionMismatch { row: 0, expected: dim, found: bbox.dim() });
    }
    let volume = bbox.volume();
    let vol = volume.to_usize().ok_or_else(|| Error::InvalidArgument(format!("box volume {volume} is too large to sample")))?;
    if size > vol {
        return Err(Error::InvalidArgument(format!("cannot draw {size} points from a box of {vol}")));
    }
    let sides: Vec<usize> = (0..dim).map(|k| (bbox.upper.coord(k) - bbox.lower.coord(k)).to_usize().expect("fits") + 1).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = sample(&mut rng, vol, size).into_iter().map(|mut idx| {
        let mut coords = vec![Int::from(0); dim];
        for k in (0..dim).rev() {
            coords[k] = bbox.lower.coord(k) + Int::from(idx % sides[k]);
            idx /= sides[k];
        }
        Point::new(coords)
    });
    PointSet::from_points(dim, points)
}

/// `closure_under(random_set(..), ops)`; with no operations the random set itself.
pub fn closed_random_set(dim: usize, bbox: &BoundingBox, size: usize, seed: u64, ops: &[TotalOp]) -> Result<PointSet> {
    let s = random_set(dim, bbox, size, seed)?;
    if ops.is_empty() || s.is_empty() {
        return Ok(s);
    }
    Ok(closure_under(&s, ops)?.closed_set)
}

/// Shape of the small random instances used by the property suites.
#[derive(Clone, Copy, Debug)]
pub struct Regime {
    pub dims: &'static [usize],
    /// Largest box side for `n = 2` and for `n >= 3`.
    pub max_side_2d: i64,
    pub max_side_3d: i64,
    pub max_size: usize,
}

impl Regime {
    pub const SMALL: Regime = Regime { dims: &[2, 3], max_side_2d: 6, max_side_3d: 4, max_size: 10 };
    pub const PLANAR: Regime = Regime { dims: &[2], max_side_2d: 6, max_side_3d: 4, max_size: 10 };

    /// A random box of the regime, offset from the origin.
    pub fn sample_box(&self, rng: &mut ChaCha8Rng) -> BoundingBox {
        let dim = self.dims[rng.gen_range(0..self.dims.len())];
        let max_side = if dim <= 2 { self.max_side_2d } else { self.max_side_3d };
        let mut lower = Vec::with_capacity(dim);
        let mut upper = Vec::with_capacity(dim);
        for _ in 0..dim {
            let lo: i64 = rng.gen_range(-3..=3);
            let side: i64 = rng.gen_range(2..=max_side);
            lower.push(lo);
            upper.push(lo + side - 1);
        }
        BoundingBox::new(Point::from_i64s(&lower), Point::from_i64s(&upper)).expect("equal dims")
    }

    /// A random set of the regime; `trial` selects the instance for `seed`.
    pub fn sample(&self, seed: u64, trial: u64) -> PointSet {
        self.sample_with(seed, trial, &[])
    }

    /// Like [`sample`](Self::sample), closed under `ops`.
    pub fn sample_with(&self, seed: u64, trial: u64, ops: &[TotalOp]) -> PointSet {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let bbox = self.sample_box(&mut rng);
        let vol = bbox.volume().to_usize().expect("small box");
        let size = rng.gen_range(1..=self.max_size.min(vol));
        closed_random_set(bbox.dim(), &bbox, size, rng.gen(), ops).expect("regime instances are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(text: &str) -> BoundingBox {
        BoundingBox::parse(text).unwrap()
    }

    #[test]
    fn naive_mu_closure() {
        let s = PointSet::from_rows(1, [[0], [3]]).unwrap();
        let got = naive_closure(&s, &[TotalOp::MU], &bx("0:3")).unwrap();
        assert_eq!(got.len(), 4);
        assert_eq!(got, closure_under(&s, &[TotalOp::MU]).unwrap().closed_set);
    }

    #[test]
    fn naive_closure_of_closed_set() {
        let s = PointSet::from_rows(3, [[0, 0, 0], [1, 1, 2], [2, 1, 2], [1, 2, 2]]).unwrap();
        assert_eq!(naive_closure(&s, &[TotalOp::MEDIAN], &s.bounding_box().unwrap()).unwrap(), s);
        assert!(naive_closure(&s, &[TotalOp::MEDIAN], &bx("0:1,0:1,0:1")).is_err());
    }

    #[test]
    fn random_sets_are_reproducible() {
        let b = bx("0:4,0:4");
        let a = random_set(2, &b, 5, 42).unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(a, random_set(2, &b, 5, 42).unwrap());
        assert!(a.iter().all(|p| b.contains(p)));
        assert_eq!(random_set(2, &b, 25, 7).unwrap().len(), 25);
        assert!(random_set(2, &b, 26, 7).is_err());
        assert!(random_set(3, &b, 2, 7).is_err());
    }

    #[test]
    fn closed_random_sets() {
        let b = bx("0:5,0:5");
        let s = closed_random_set(2, &b, 4, 3, &[TotalOp::MEDIAN, TotalOp::MU]).unwrap();
        assert!(crate::ops::is_closed(&s, &TotalOp::MU).holds);
        assert_eq!(closed_random_set(2, &b, 4, 3, &[]).unwrap(), random_set(2, &b, 4, 3).unwrap());
    }

    #[test]
    fn regime_samples_fit() {
        for trial in 0..50 {
            let s = Regime::SMALL.sample(1, trial);
            assert!((2..=3).contains(&s.dim()));
            assert!(!s.is_empty() && s.len() <= 10);
        }
    }
}
