//! Lattice points of dilates of a full-dimensional polytope in `Z^D`.
//!
//! Coordinates are fixed one at a time. The admissible range of `x_k` given
//! `x_1..x_{k-1}` is read off the facets of the projection onto the first `k`
//! coordinates, so every visited prefix extends to a real point of the
//! polytope and the scan never wanders outside it.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::polytope::hull::facets_full_dim;
use crate::{BigInt, Point};

/// Facets of every coordinate projection `pi_k(Q)`, `k = 1..=D`.
#[derive(Clone, Debug)]
pub(crate) struct ProjectionChain {
    levels: Vec<Vec<(Point, BigInt)>>,
}

impl ProjectionChain {
    pub(crate) fn new(vertices: &[Point]) -> Self {
        let dim = vertices.first().map_or(0, Vec::len);
        let levels = (1..=dim)
            .map(|k| {
                let mut proj: Vec<Point> = vertices.iter().map(|v| v[..k].to_vec()).collect();
                proj.sort();
                proj.dedup();
                facets_full_dim(&proj)
            })
            .collect();
        Self { levels }
    }

    pub(crate) fn dim(&self) -> usize {
        self.levels.len()
    }

    /// Facets of the polytope itself.
    pub(crate) fn facets(&self) -> &[(Point, BigInt)] {
        self.levels.last().map_or(&[], Vec::as_slice)
    }

    /// Integer range of `x_k` over the fibre of `pi_{k+1}(mQ)` above `prefix`.
    fn range(&self, k: usize, prefix: &[BigInt], m: u32) -> Option<(BigInt, BigInt)> {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for (a, b) in &self.levels[k] {
            let ak = &a[k];
            if ak.is_zero() {
                continue;
            }
            let mut rhs = b * m;
            for (ai, xi) in a[..k].iter().zip(prefix) {
                rhs -= ai * xi;
            }
            if ak.is_positive() {
                let t = rhs.div_floor(ak);
                if hi.as_ref().is_none_or(|h| t < *h) {
                    hi = Some(t);
                }
            } else {
                let t = -((-rhs).div_floor(ak));
                if lo.as_ref().is_none_or(|l| t > *l) {
                    lo = Some(t);
                }
            }
        }
        let (lo, hi) = (lo?, hi?);
        (lo <= hi).then_some((lo, hi))
    }

    /// `|mQ ∩ Z^D|`.
    pub(crate) fn count(&self, m: u32) -> u64 {
        if self.dim() == 0 || m == 0 {
            return 1;
        }
        let mut prefix = Vec::with_capacity(self.dim());
        self.count_rec(0, &mut prefix, m)
    }

    fn count_rec(&self, k: usize, prefix: &mut Vec<BigInt>, m: u32) -> u64 {
        let Some((lo, hi)) = self.range(k, prefix, m) else {
            return 0;
        };
        if k + 1 == self.dim() {
            return (hi - lo + 1u32).to_u64().expect("count fits in u64");
        }
        let mut total = 0;
        let mut x = lo;
        while x <= hi {
            prefix.push(x.clone());
            total += self.count_rec(k + 1, prefix, m);
            prefix.pop();
            x += 1u32;
        }
        total
    }

    /// The points of `mQ ∩ Z^D`, in lexicographic order.
    pub(crate) fn points(&self, m: u32) -> Vec<Point> {
        if self.dim() == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.dim());
        self.points_rec(0, &mut prefix, m, &mut out);
        out
    }

    fn points_rec(&self, k: usize, prefix: &mut Vec<BigInt>, m: u32, out: &mut Vec<Point>) {
        let Some((lo, hi)) = self.range(k, prefix, m) else {
            return;
        };
        let mut x = lo;
        while x <= hi {
            prefix.push(x.clone());
            if k + 1 == self.dim() {
                out.push(prefix.clone());
            } else {
                self.points_rec(k + 1, prefix, m, out);
            }
            prefix.pop();
            x += 1u32;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Point> {
        v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn square_and_triangle_counts() {
        let sq = ProjectionChain::new(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(sq.count(1), 4);
        assert_eq!(sq.count(2), 9);
        let tri = ProjectionChain::new(&pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(tri.count(2), 6);
        assert_eq!(tri.points(1), pts(&[&[0, 0], &[0, 1], &[1, 0]]));
    }

    #[test]
    fn skew_triangle() {
        // conv{(0,0),(2,1),(1,2)}: area 3/2, boundary 3, Pick gives 1 interior point
        let t = ProjectionChain::new(&pts(&[&[0, 0], &[2, 1], &[1, 2]]));
        assert_eq!(t.count(1), 4);
    }

    #[test]
    fn hexagon_dilates() {
        let h = ProjectionChain::new(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]]));
        for m in 0..5u32 {
            let m64 = u64::from(m);
            assert_eq!(h.count(m), 3 * m64 * m64 + 3 * m64 + 1);
        }
    }
}
