//! Test-only oracles. Deliberately naive: fixed-width integers, cofactor
//! expansion, bounding-box scans and exhaustive search.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use nefcert::{BigInt, IntMatrix, Point};
use num_integer::Integer;
use num_traits::ToPrimitive;

pub type Pt = Vec<i64>;

pub fn to_big(p: &[i64]) -> Point {
    p.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_small(p: &[BigInt]) -> Pt {
    p.iter().map(|x| x.to_i64().expect("small entry")).collect()
}

pub fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let c = rows.first().map_or(0, Vec::len);
    IntMatrix::from_i64(rows.len(), c, &rows.concat()).unwrap()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

/// All `k x k` minors.
pub fn minors(m: &[Vec<i64>], k: usize) -> Vec<i128> {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    for rows in (0..r).combinations(k) {
        for cols in (0..c).combinations(k) {
            let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
            out.push(det(&sub));
        }
    }
    out
}

/// Largest `k` with a nonzero `k x k` minor.
pub fn rank_by_minors(m: &[Vec<i64>]) -> usize {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    (1..=r.min(c)).rev().find(|&k| minors(m, k).iter().any(|&x| x != 0)).unwrap_or(0)
}

/// Full row rank with every nonzero maximal minor equal to the same absolute
/// value (the nonzero ones being plus or minus one after dividing the gcd is a
/// separate question).
pub fn unimodular_by_minors(m: &[Vec<i64>]) -> bool {
    let r = m.len();
    if rank_by_minors(m) != r {
        return false;
    }
    let vals: BTreeSet<i128> = minors(m, r).into_iter().filter(|&x| x != 0).map(i128::abs).collect();
    vals.len() == 1
}

pub fn minor_gcd(m: &[Vec<i64>]) -> i128 {
    minors(m, m.len()).into_iter().fold(0, |g, x| g.gcd(&x))
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets of a full-dimensional point set: every hyperplane through `d`
/// of the points that leaves all points on one side, as primitive
/// `(normal, rhs)` with `<normal, x> <= rhs`.
pub fn brute_force_facets(points: &[Pt]) -> BTreeSet<(Pt, i64)> {
    let d = points[0].len();
    let mut out = BTreeSet::new();
    for subset in points.iter().combinations(d) {
        let base = subset[0];
        let diffs: Vec<Vec<i64>> = subset[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        // normal_i = (-1)^i det(diffs without column i)
        let mut normal: Pt = (0..d)
            .map(|i| {
                let sub: Vec<Vec<i64>> = diffs
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect())
                    .collect();
                let s = if i % 2 == 0 { 1 } else { -1 };
                (s * det(&sub)) as i64
            })
            .collect();
        let g = normal.iter().fold(0i64, |g, x| g.gcd(x));
        if g == 0 {
            continue;
        }
        normal.iter_mut().for_each(|x| *x /= g);
        let rhs = dot(&normal, base);
        let vals: Vec<i64> = points.iter().map(|p| dot(&normal, p)).collect();
        if vals.iter().all(|&v| v <= rhs) {
            out.insert((normal, rhs));
        } else if vals.iter().all(|&v| v >= rhs) {
            out.insert((normal.iter().map(|x| -x).collect(), -rhs));
        }
    }
    out
}

/// Lattice points of `k * conv(points)` by scanning the bounding box against
/// the brute-force facets. Full-dimensional input only.
pub fn box_lattice_points(points: &[Pt], k: i64) -> Vec<Pt> {
    let d = points[0].len();
    let facets = brute_force_facets(points);
    let ranges: Vec<std::ops::RangeInclusive<i64>> = (0..d)
        .map(|i| {
            let lo = points.iter().map(|p| p[i]).min().unwrap() * k;
            let hi = points.iter().map(|p| p[i]).max().unwrap() * k;
            lo..=hi
        })
        .collect();
    let mut out: Vec<Pt> = ranges
        .into_iter()
        .multi_cartesian_product()
        .filter(|x| facets.iter().all(|(a, b)| dot(a, x) <= b * k))
        .collect();
    out.sort();
    out
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h*` of a full-dimensional polytope from box-scan Ehrhart counts:
/// `h*_j = sum_i (-1)^(j-i) C(d+1, j-i) L(i)`.
pub fn ehrhart_h_star(points: &[Pt]) -> Vec<u64> {
    let d = points[0].len() as i64;
    let counts: Vec<i64> = (0..=d).map(|k| box_lattice_points(points, k).len() as i64).collect();
    let mut h: Vec<u64> = (0..=d)
        .map(|j| {
            let v: i64 = (0..=j).map(|i| if (j - i) % 2 == 0 { 1 } else { -1 } * binom(d + 1, j - i) * counts[i as usize]).sum();
            u64::try_from(v).expect("h* is nonnegative")
        })
        .collect();
    while h.last() == Some(&0) {
        h.pop();
    }
    h
}

/// Number of distinct sums of `k` columns, repetition allowed: the Hilbert
/// function of `K[A]` in degree `k`.
pub fn sumset_count(columns: &[Pt], k: usize) -> usize {
    let mut cur: HashSet<Pt> = HashSet::from([vec![0; columns[0].len()]]);
    for _ in 0..k {
        cur = cur
            .iter()
            .flat_map(|s| columns.iter().map(move |c| s.iter().zip(c).map(|(a, b)| a + b).collect()))
            .collect();
    }
    cur.len()
}

/// Exponent vectors of total degree `k` in `n` variables.
pub fn monomials(n: usize, k: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=k)
        .flat_map(|e| {
            monomials(n - 1, k - e).into_iter().map(move |mut m| {
                m.insert(0, e);
                m
            })
        })
        .collect()
}

/// Degree-`k` monomials divisible by none of `leads`.
pub fn standard_monomial_count(leads: &[Vec<u32>], n: usize, k: u32) -> usize {
    monomials(n, k)
        .iter()
        .filter(|m| !leads.iter().any(|l| l.iter().zip(m.iter()).all(|(a, b)| a <= b)))
        .count()
}
