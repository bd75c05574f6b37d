//! Facets of a full-dimensional lattice polytope by double description.
//!
//! The facet normals of `conv(V)` in `R^D` are the extreme rays of the cone
//! `{y in R^{D+1} : <y, (v, 1)> >= 0 for all v in V}`. Rays are kept as
//! primitive integer vectors together with the set of constraints they make
//! tight; new rays are produced only from combinatorially adjacent pairs.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::solve::{inverse, make_primitive, primitive_integer};
use crate::linalg::{row_basis, Matrix};
use crate::{BigInt, Point};

/// Fixed-width bit set over constraint indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inequalities `<a, x> <= b` describing `conv(points)`, assumed to span
/// `R^D` affinely (`D = points[0].len()`). Non-extreme and repeated input
/// points are harmless. Output is sorted by `(normal, rhs)`.
pub(crate) fn facets_full_dim(points: &[Point]) -> Vec<(Point, BigInt)> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let dim = first.len();
    if dim == 0 {
        return Vec::new();
    }
    let n = dim + 1;
    let gens: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut g = p.clone();
            g.push(BigInt::from(1));
            g
        })
        .collect();
    let gm = Matrix::from_rows(gens.clone()).expect("uniform length");
    let init = row_basis(&gm);
    assert_eq!(init.len(), n, "points do not span the ambient space affinely");

    // rays of the simplicial starting cone are the columns of G0^{-1}
    let g0: Vec<Vec<BigRational>> = init
        .iter()
        .map(|&i| gens[i].iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let inv = inverse(&g0).expect("row basis is invertible");
    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let col: Vec<BigRational> = (0..n).map(|i| inv[i][j].clone()).collect();
            let mut zeros = Bits::new(gens.len());
            for (k, &gi) in init.iter().enumerate() {
                if k != j {
                    zeros.set(gi);
                }
            }
            Ray {
                v: primitive_integer(&col),
                zeros,
            }
        })
        .collect();

    let mut in_init = vec![false; gens.len()];
    for &i in &init {
        in_init[i] = true;
    }
    for (gi, g) in gens.iter().enumerate() {
        if in_init[gi] {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&r.v, g)).collect();
        if vals.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&vals) {
                if s.is_zero() {
                    r.zeros.set(gi);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if (common.count() as usize) + 2 < n {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !common.subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(yq, yp)| &vals[p] * yq - &vals[q] * yp)
                    .collect();
                let mut zeros = common;
                zeros.set(gi);
                fresh.push(Ray {
                    v: make_primitive(v),
                    zeros,
                });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, s) in rays.into_iter().zip(vals) {
            if s.is_negative() {
                continue;
            }
            if s.is_zero() {
                r.zeros.set(gi);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    let mut out: Vec<(Point, BigInt)> = rays
        .into_iter()
        .map(|r| {
            let mut v = r.v;
            let b = v.pop().expect("nonempty ray");
            (v.into_iter().map(|x| -x).collect(), b)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
