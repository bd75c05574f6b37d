//! Lattice polytopes: representations, lattice points, Ehrhart data, sums and
//! the predicate suite.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::lp::in_convex_hull;
use crate::linalg::{rank, smith_invariants};
use crate::poly::HStarPoly;
use crate::{BigInt, IntMatrix, Point};

mod enumerate;
mod hull;
mod model;

pub use model::AffineChart;

use enumerate::ProjectionChain;

/// Inequalities `<normal, x> <= rhs` and equations `<normal, x> = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub inequalities: Vec<(Point, BigInt)>,
    pub equations: Vec<(Point, BigInt)>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl HRep {
    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.equations.iter().all(|(a, b)| dot(a, x) == *b)
            && self.inequalities.iter().all(|(a, b)| dot(a, x) <= *b)
    }
}

/// Full-dimensional image of a polytope under an affine lattice chart.
#[derive(Clone, Debug)]
struct Model {
    chart: AffineChart,
    vertices: Vec<Point>,
    chain: ProjectionChain,
}

impl Model {
    fn new(chart: AffineChart, ambient_vertices: &[Point]) -> Self {
        let mut vertices: Vec<Point> = ambient_vertices
            .iter()
            .map(|v| chart.to_model(v).expect("vertex lies in the chart lattice"))
            .collect();
        vertices.sort();
        let chain = ProjectionChain::new(&vertices);
        Self { chart, vertices, chain }
    }

    fn dim(&self) -> usize {
        self.chart.dim()
    }

    fn h_star(&self) -> Result<HStarPoly> {
        let d = self.dim();
        let counts: Vec<BigInt> = (0..=d as u32).map(|m| BigInt::from(self.chain.count(m))).collect();
        let mut coeffs = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let mut h = BigInt::zero();
            let mut binom = BigInt::one();
            for j in 0..=i {
                let term = &binom * &counts[i - j];
                if j % 2 == 0 {
                    h += term;
                } else {
                    h -= term;
                }
                binom = binom * (d + 1 - j) / (j + 1);
            }
            if h.is_negative() {
                return Err(Error::InternalInconsistency(format!("h*_{i} = {h} is negative")));
            }
            coeffs.push(h.to_u64().expect("h* coefficient fits in u64"));
        }
        Ok(HStarPoly::new(coeffs))
    }

    fn interior_points(&self) -> Vec<Point> {
        let facets = self.chain.facets();
        self.chain
            .points(1)
            .into_iter()
            .filter(|p| facets.iter().all(|(a, b)| dot(a, p) < *b))
            .collect()
    }
}

/// A lattice polytope given by its vertices, with write-once caches.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    model: OnceLock<Model>,
    hrep: OnceLock<HRep>,
    lattice_points: OnceLock<Vec<Point>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Convex hull of `points`; extreme points are found by exact LP.
    pub fn from_points(points: &[Point]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyInput);
        };
        let d = first.len();
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(Error::DimensionMismatch(d, p.len()));
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let vertices: Vec<Point> = (0..pts.len())
            .filter(|&i| {
                let others: Vec<&[BigInt]> = pts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, q)| q.as_slice())
                    .collect();
                !in_convex_hull(&pts[i], &others)
            })
            .map(|i| pts[i].clone())
            .collect();
        Ok(Self::from_vertices(d, vertices))
    }

    /// `conv` of the columns of `m`.
    pub fn from_columns(m: &IntMatrix) -> Result<Self> {
        Self::from_points(&m.columns())
    }

    /// Caller guarantees the points are exactly the extreme points.
    fn from_vertices(ambient_dim: usize, mut vertices: Vec<Point>) -> Self {
        vertices.sort();
        Self {
            ambient_dim,
            vertices,
            model: OnceLock::new(),
            hrep: OnceLock::new(),
            lattice_points: OnceLock::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Extreme points, sorted lexicographically.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    fn model(&self) -> &Model {
        self.model
            .get_or_init(|| Model::new(AffineChart::affine_lattice(&self.vertices), &self.vertices))
    }

    pub fn dim(&self) -> usize {
        self.model().dim()
    }

    /// The chart onto `aff(P) ∩ Z^d` and the image of `P` in `Z^{dim P}`.
    pub fn full_dim_model(&self) -> (LatticePolytope, AffineChart) {
        let m = self.model();
        (Self::from_vertices(m.dim(), m.vertices.clone()), m.chart.clone())
    }

    /// Irredundant facets with primitive normals, plus the affine hull.
    pub fn facets(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            let m = self.model();
            let chart = &m.chart;
            let inequalities = if chart.dim() == self.ambient_dim {
                hull::facets_full_dim(&self.vertices)
            } else {
                let rows = chart.chart_rows();
                let proj: Vec<Point> = self
                    .vertices
                    .iter()
                    .map(|v| rows.iter().map(|&i| v[i].clone()).collect())
                    .collect();
                let mut lifted: Vec<(Point, BigInt)> = hull::facets_full_dim(&proj)
                    .into_iter()
                    .map(|(a, b)| {
                        let mut full = vec![BigInt::zero(); self.ambient_dim];
                        for (&i, x) in rows.iter().zip(a) {
                            full[i] = x;
                        }
                        (full, b)
                    })
                    .collect();
                lifted.sort();
                lifted
            };
            HRep {
                inequalities,
                equations: chart.equations().to_vec(),
            }
        })
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.facets().contains(x)
    }

    /// `P ∩ Z^d`, sorted lexicographically.
    pub fn lattice_points(&self) -> &[Point] {
        self.lattice_points.get_or_init(|| self.dilate_points(1))
    }

    /// `mP ∩ Z^d`, sorted lexicographically.
    pub fn dilate_points(&self, m: u32) -> Vec<Point> {
        let model = self.model();
        let mut pts: Vec<Point> = model
            .chain
            .points(m)
            .iter()
            .map(|c| model.chart.from_model_dilated(c, m))
            .collect();
        pts.sort();
        pts
    }

    /// `|mP ∩ Z^d|`.
    pub fn dilate_count(&self, m: u32) -> u64 {
        self.model().chain.count(m)
    }

    /// `h*(P, t)` with respect to the affine lattice `aff(P) ∩ Z^d`.
    pub fn h_star(&self) -> Result<HStarPoly> {
        self.model().h_star()
    }

    /// `h*(P, t)` with respect to the affine lattice generated by `P ∩ Z^d`.
    pub fn h_star_generated(&self) -> Result<HStarPoly> {
        let chart = AffineChart::generated_lattice(self.lattice_points());
        Model::new(chart, &self.vertices).h_star()
    }

    /// Image of `P` in the coordinates of the affine lattice generated by
    /// `P ∩ Z^d`; full-dimensional in `Z^{dim P}`.
    pub fn generated_lattice_model(&self) -> LatticePolytope {
        let chart = AffineChart::generated_lattice(self.lattice_points());
        let vertices: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| chart.to_model(v).expect("vertices are lattice points of P"))
            .collect();
        Self::from_vertices(chart.dim(), vertices)
    }

    /// Interior lattice points (relative to the affine hull).
    pub fn interior_lattice_points(&self) -> Vec<Point> {
        let m = self.model();
        m.interior_points().iter().map(|c| m.chart.from_model(c)).collect()
    }

    /// If `P - v` is reflexive for its unique interior lattice point `v`,
    /// returns `v`.
    pub fn reflexive_translation(&self) -> Option<Point> {
        let m = self.model();
        let interior = m.interior_points();
        let [v] = interior.as_slice() else {
            return None;
        };
        m.chain
            .facets()
            .iter()
            .all(|(a, b)| (b - dot(a, v)).is_one())
            .then(|| m.chart.from_model(v))
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive_translation().is_some()
    }

    /// `r` such that `h*` is palindromic of degree `dim + 1 - r`.
    pub fn gorenstein_index(&self) -> Result<Option<usize>> {
        let h = self.h_star()?;
        let deg = h.degree().expect("h*_0 = 1");
        Ok(h.is_palindromic().then(|| self.dim() + 1 - deg))
    }

    /// Facet-based detector: `rP` is a translate of a reflexive polytope.
    pub fn is_gorenstein_of_index(&self, r: u32) -> bool {
        r > 0 && self.dilate(r).is_reflexive()
    }

    pub fn dilate(&self, r: u32) -> LatticePolytope {
        Self::from_vertices(
            self.ambient_dim,
            self.vertices.iter().map(|v| v.iter().map(|x| x * r).collect()).collect(),
        )
    }

    /// Homogenized lattice points of the full-dimensional model generate
    /// `Z^{dim + 1}`.
    pub fn is_spanning(&self) -> bool {
        let m = self.model();
        let cols: Vec<Point> = m
            .chain
            .points(1)
            .into_iter()
            .map(|mut p| {
                p.push(BigInt::one());
                p
            })
            .collect();
        let mat = IntMatrix::from_columns(m.dim() + 1, &cols).expect("uniform length");
        let s = smith_invariants(&mat);
        s.rank() == m.dim() + 1 && s.all_one()
    }

    pub fn negate(&self) -> LatticePolytope {
        Self::from_vertices(
            self.ambient_dim,
            self.vertices.iter().map(|v| v.iter().map(|x| -x).collect()).collect(),
        )
    }

    pub fn translate(&self, t: &[BigInt]) -> LatticePolytope {
        Self::from_vertices(
            self.ambient_dim,
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(x, y)| x + y).collect()).collect(),
        )
    }
}

/// `P + Q`.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch(p.ambient_dim, q.ambient_dim));
    }
    let sums: Vec<Point> = p
        .vertices
        .iter()
        .flat_map(|u| q.vertices.iter().map(move |v| u.iter().zip(v).map(|(a, b)| a + b).collect()))
        .collect();
    LatticePolytope::from_points(&sums)
}

/// `conv({e_1} x P_1 ∪ ... ∪ {e_{r-1}} x P_{r-1} ∪ {0} x P_r)` in `Z^{r-1+d}`.
pub fn cayley_sum(ps: &[&LatticePolytope]) -> Result<LatticePolytope> {
    if ps.len() < 2 {
        return Err(Error::TooFewPolytopes);
    }
    let d = ps[0].ambient_dim;
    if let Some(p) = ps.iter().find(|p| p.ambient_dim != d) {
        return Err(Error::DimensionMismatch(d, p.ambient_dim));
    }
    let r = ps.len();
    let mut pts = Vec::new();
    for (i, p) in ps.iter().enumerate() {
        for v in &p.vertices {
            let mut x = vec![BigInt::zero(); r - 1];
            if i + 1 < r {
                x[i] = BigInt::one();
            }
            x.extend(v.iter().cloned());
            pts.push(x);
        }
    }
    Ok(LatticePolytope::from_vertices(r - 1 + d, pts))
}

/// `(P ∩ Z^d) + (Q ∩ Z^d) = (P + Q) ∩ Z^d`.
pub fn check_oda(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    let sum = minkowski_sum(p, q)?;
    let mut sums: HashSet<Point> = HashSet::new();
    for u in p.lattice_points() {
        for v in q.lattice_points() {
            sums.insert(u.iter().zip(v).map(|(a, b)| a + b).collect());
        }
    }
    let target = sum.lattice_points();
    debug_assert!(sums.iter().all(|s| target.binary_search(s).is_ok()));
    Ok(target.len() == sums.len() && target.iter().all(|t| sums.contains(t)))
}

/// First `(k, x)` with `x ∈ kP ∩ Z^d` not a sum of `k` lattice points of `P`,
/// for `2 <= k <= k_max`.
pub fn idp_counterexample(p: &LatticePolytope, k_max: u32) -> Option<(u32, Point)> {
    let base = p.lattice_points();
    let mut sums: HashSet<Point> = base.iter().cloned().collect();
    for k in 2..=k_max {
        let mut next = HashSet::with_capacity(sums.len() * 2);
        for s in &sums {
            for b in base {
                next.insert(s.iter().zip(b).map(|(x, y)| x + y).collect::<Point>());
            }
        }
        sums = next;
        if let Some(x) = p.dilate_points(k).into_iter().find(|x| !sums.contains(x)) {
            return Some((k, x));
        }
    }
    None
}

/// Bounded integer decomposition check up to `k_max`.
pub fn idp_check(p: &LatticePolytope, k_max: u32) -> bool {
    idp_counterexample(p, k_max).is_none()
}

/// Affinely independent points whose edge vectors generate the full lattice
/// of their linear span.
pub fn is_unimodular_simplex(points: &[Point]) -> bool {
    let Some(first) = points.first() else {
        return false;
    };
    let d = first.len();
    if points.iter().any(|p| p.len() != d) {
        return false;
    }
    let edges: Vec<Point> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    let m = IntMatrix::from_columns(d, &edges).expect("uniform length");
    rank(&m) == edges.len() && smith_invariants(&m).all_one()
}
