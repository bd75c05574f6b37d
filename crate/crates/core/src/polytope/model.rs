//! Affine lattice charts: a polytope in `Z^d` spanning a `D`-dimensional
//! affine subspace is modelled as a full-dimensional polytope in `Z^D`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::solve::inverse;
use crate::linalg::{hnf, kernel_lattice_basis, row_basis, Matrix};
use crate::{BigInt, IntMatrix, Point};

/// Invertible affine map between a lattice `base + span_Z(basis)` in `Z^d`
/// and `Z^D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChart {
    base: Point,
    basis: Vec<Point>,
    /// `D` ambient coordinates on which the basis restricts to an invertible block.
    chart_rows: Vec<usize>,
    chart_inv: Vec<Vec<BigRational>>,
    /// Primitive integer normals of the affine hull, with right-hand sides.
    equations: Vec<(Point, BigInt)>,
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Flips a vector so that its first nonzero entry is positive.
fn orient(mut v: Point) -> Point {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -x.clone();
        }
    }
    v
}

impl AffineChart {
    /// Chart onto `aff(points) ∩ Z^d`. Full-dimensional input gets the
    /// identity chart.
    pub fn affine_lattice(points: &[Point]) -> Self {
        let d = points[0].len();
        let base = points[0].clone();
        let diffs: Vec<Point> = points.iter().map(|p| sub(p, &base)).collect();
        let e = IntMatrix::from_rows(diffs).expect("uniform length");
        let normals: Vec<Point> = kernel_lattice_basis(&e).into_iter().map(orient).collect();
        if normals.is_empty() {
            return Self::from_basis(vec![BigInt::zero(); d], IntMatrix::identity(d).columns(), normals);
        }
        let y = IntMatrix::from_rows(normals.clone()).expect("uniform length");
        let basis: Vec<Point> = kernel_lattice_basis(&y).into_iter().map(orient).collect();
        Self::from_basis(base, basis, normals)
    }

    /// Chart onto the affine lattice generated by `points` themselves
    /// (`points[0] + span_Z(p - points[0])`), which may be a proper
    /// sublattice of `aff(points) ∩ Z^d`.
    pub fn generated_lattice(points: &[Point]) -> Self {
        let d = points[0].len();
        let base = points[0].clone();
        let diffs: Vec<Point> = points.iter().map(|p| sub(p, &base)).collect();
        let cols = IntMatrix::from_columns(d, &diffs).expect("uniform length");
        let h = hnf(&cols);
        let basis: Vec<Point> = (0..h.rank()).map(|j| h.hermite.column(j)).collect();
        let e = IntMatrix::from_rows(diffs).expect("uniform length");
        let normals: Vec<Point> = kernel_lattice_basis(&e).into_iter().map(orient).collect();
        Self::from_basis(base, basis, normals)
    }

    fn from_basis(base: Point, basis: Vec<Point>, normals: Vec<Point>) -> Self {
        let d = base.len();
        let dim = basis.len();
        let b = IntMatrix::from_columns(d, &basis).expect("uniform length");
        let chart_rows = row_basis(&b);
        let block: Vec<Vec<BigRational>> = chart_rows
            .iter()
            .map(|&i| (0..dim).map(|j| BigRational::from_integer(b[(i, j)].clone())).collect())
            .collect();
        let chart_inv = inverse(&block).expect("basis block is invertible");
        let equations = normals
            .into_iter()
            .map(|y| {
                let rhs = dot(&y, &base);
                (y, rhs)
            })
            .collect();
        Self {
            base,
            basis,
            chart_rows,
            chart_inv,
            equations,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn basis(&self) -> &[Point] {
        &self.basis
    }

    pub fn equations(&self) -> &[(Point, BigInt)] {
        &self.equations
    }

    /// Ambient coordinates forming an injective projection of the affine hull.
    pub fn chart_rows(&self) -> &[usize] {
        &self.chart_rows
    }

    /// Model coordinates of an ambient point, or `None` if it is not in the
    /// lattice.
    pub fn to_model(&self, x: &[BigInt]) -> Option<Point> {
        if self.equations.iter().any(|(y, r)| dot(y, x) != *r) {
            return None;
        }
        let rel = sub(x, &self.base);
        let mut c = Vec::with_capacity(self.dim());
        for row in &self.chart_inv {
            let v: BigRational = row
                .iter()
                .zip(&self.chart_rows)
                .map(|(m, &i)| m * BigRational::from_integer(rel[i].clone()))
                .sum();
            if !v.is_integer() {
                return None;
            }
            c.push(v.to_integer());
        }
        (self.from_model(&c) == x).then_some(c)
    }

    pub fn from_model(&self, c: &[BigInt]) -> Point {
        let mut x = self.base.clone();
        for (k, b) in c.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += k * bi;
            }
        }
        x
    }

    /// Model coordinates of `m * x` in the chart of the `m`-th dilate, whose
    /// base point is `m * base`.
    pub fn to_model_dilated(&self, x: &[BigInt], m: u32) -> Option<Point> {
        let mb: Point = self.base.iter().map(|b| b * m).collect();
        let shifted: Point = x.iter().zip(&mb).zip(&self.base).map(|((xi, mi), bi)| xi - mi + bi).collect();
        self.to_model(&shifted)
    }

    /// Inverse of [`Self::to_model_dilated`].
    pub fn from_model_dilated(&self, c: &[BigInt], m: u32) -> Point {
        let p = self.from_model(c);
        p.iter().zip(&self.base).map(|(pi, bi)| pi - bi + bi * m).collect()
    }

    /// Whether the map is the identity of `Z^d`.
    pub fn is_identity(&self) -> bool {
        self.dim() == self.ambient_dim()
            && self.base.iter().all(Zero::is_zero)
            && Matrix::from_columns(self.dim(), &self.basis).expect("square") == IntMatrix::identity(self.dim())
    }
}
