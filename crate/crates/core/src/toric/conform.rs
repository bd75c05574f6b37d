//! Structure checks for the reduced Gröbner bases of `I_{A±}` and of the
//! toric ideals of the Cayley sums `P_A * (-P_A)` and `P_{A_0} * (-P_{A_0})`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::config::{centrally_symmetric, Configuration, Var};
use crate::error::{Error, Result};
use crate::linalg::is_unimodular;
use crate::poly::HPoly;
use crate::polytope::LatticePolytope;
use crate::toric::binomial::{Binomial, TermOrder};
use crate::toric::buchberger::{buchberger_with, GbOptions, GroebnerBasis};
use crate::toric::complex::{
    h_polynomial, initial_ideal, stanley_reisner, triangulation_unimodular, MonomialIdeal, SimplicialComplex,
};
use crate::toric::ideal::toric_ideal;
use crate::{BigInt, IntMatrix, Point};

/// A binomial over named variables, independent of column order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NamedBinomial {
    pub plus: Vec<(Var, u32)>,
    pub minus: Vec<(Var, u32)>,
}

fn named_monomial(m: &[u32], vars: &[Var]) -> Vec<(Var, u32)> {
    let mut out: Vec<(Var, u32)> = m
        .iter()
        .zip(vars)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, &v)| (v, e))
        .collect();
    out.sort();
    out
}

impl NamedBinomial {
    pub fn from_binomial(b: &Binomial, vars: &[Var]) -> Self {
        Self {
            plus: named_monomial(&b.plus, vars),
            minus: named_monomial(&b.minus, vars),
        }
    }

    /// `a*b - c*d` over named variables.
    pub fn quadric(a: Var, b: Var, c: Var, d: Var) -> Self {
        let pair = |u: Var, v: Var| {
            if u == v {
                vec![(u, 2)]
            } else {
                let mut m = vec![(u, 1), (v, 1)];
                m.sort();
                m
            }
        };
        Self {
            plus: pair(a, b),
            minus: pair(c, d),
        }
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.plus.iter().chain(&self.minus).any(|&(u, _)| u == v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(|&(_, e)| e <= 1)
    }
}

fn fmt_monomial(m: &[(Var, u32)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if m.is_empty() {
        return f.write_str("1");
    }
    for (k, (v, e)) in m.iter().enumerate() {
        if k > 0 {
            f.write_str("*")?;
        }
        write!(f, "{v}")?;
        if *e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for NamedBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_monomial(&self.plus, f)?;
        f.write_str(" - ")?;
        fmt_monomial(&self.minus, f)
    }
}

/// One checked clause of a structure theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseCheck {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl ClauseCheck {
    fn new(id: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A reduced Gröbner basis over named variables plus the clause verdicts.
#[derive(Clone, Debug)]
pub struct Conformance {
    pub variables: Vec<Var>,
    /// Homogenized lattice point attached to each variable.
    pub points: Vec<Point>,
    pub basis: GroebnerBasis,
    /// Elements outside the theorem's explicit quadric block.
    pub g: BTreeSet<NamedBinomial>,
    pub clauses: Vec<ClauseCheck>,
}

impl Conformance {
    /// The number `s` of extra elements.
    pub fn s(&self) -> usize {
        self.g.len()
    }

    pub fn conforms(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    /// Turns the first failing clause into [`Error::ConformanceFailure`].
    pub fn into_result(self) -> Result<Self> {
        match self.clauses.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::ConformanceFailure {
                clause: c.id.clone(),
                element: c.detail.clone(),
            }),
            None => Ok(self),
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.variables.iter().map(ToString::to_string).collect()
    }

    pub fn named_elements(&self) -> Vec<NamedBinomial> {
        self.basis
            .elements
            .iter()
            .map(|b| NamedBinomial::from_binomial(b, &self.variables))
            .collect()
    }

    /// Sorted rendering, one element per line.
    pub fn dump(&self) -> Vec<String> {
        let mut v: Vec<String> = self.named_elements().iter().map(ToString::to_string).collect();
        v.sort();
        v
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(&self.basis)
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        stanley_reisner(&self.initial_ideal(), self.variables.len())
    }

    pub fn h_polynomial(&self) -> Result<HPoly> {
        h_polynomial(&self.complex()?)
    }

    pub fn triangulation_unimodular(&self) -> Result<bool> {
        Ok(triangulation_unimodular(&self.complex()?, &self.points))
    }
}

/// Sort key realising `z < x_0 < y_0 < x_1 < y_1 < ...`.
fn rank_key(v: Var) -> (usize, usize) {
    match v {
        Var::Z => (0, 0),
        Var::X(i) => (i + 1, 0),
        Var::Y(i) => (i + 1, 1),
    }
}

fn theorem_order(vars: &[Var]) -> TermOrder {
    let mut idx: Vec<usize> = (0..vars.len()).collect();
    idx.sort_by_key(|&i| rank_key(vars[i]));
    TermOrder::grevlex(idx).expect("a permutation")
}

fn reduced_toric_basis(points: &[Point], vars: &[Var]) -> Result<GroebnerBasis> {
    let rows = points.first().map_or(0, Vec::len);
    let m = IntMatrix::from_columns(rows, points)?;
    let gens = toric_ideal(&m)?;
    buchberger_with(&gens, &theorem_order(vars), &GbOptions::saturated())
}

fn require_unimodular(a: &Configuration) -> Result<()> {
    if is_unimodular(a.matrix()) {
        Ok(())
    } else {
        Err(Error::NotUnimodular)
    }
}

fn squarefree_clause(id: &str, basis: &GroebnerBasis) -> ClauseCheck {
    let lead_sf = basis.elements.iter().find(|b| b.plus.iter().any(|&e| e > 1));
    ClauseCheck::new(
        id,
        lead_sf.is_none(),
        lead_sf.map_or("initial ideal is squarefree".into(), |b| format!("leading term {:?} is not squarefree", b.plus)),
    )
}

/// `I_{A±}` under `z < x_1 < y_1 < ... < x_n < y_n`.
pub fn conform_pm(a: &Configuration) -> Result<Conformance> {
    require_unimodular(a)?;
    let cs = centrally_symmetric(a);
    let vars = cs.variables();
    let points = cs.full().columns();
    let basis = reduced_toric_basis(&points, &vars)?;
    let n = a.len();
    let named: Vec<NamedBinomial> = basis
        .elements
        .iter()
        .map(|b| NamedBinomial::from_binomial(b, &vars))
        .collect();
    let block: Vec<NamedBinomial> = (1..=n)
        .map(|i| NamedBinomial::quadric(Var::X(i), Var::Y(i), Var::Z, Var::Z))
        .collect();
    let missing: Vec<String> = block.iter().filter(|q| !named.contains(q)).map(ToString::to_string).collect();
    let g: BTreeSet<NamedBinomial> = named.iter().filter(|b| !block.contains(b)).cloned().collect();

    let with_z: Vec<String> = g.iter().filter(|b| b.mentions(Var::Z)).map(ToString::to_string).collect();
    let bad_lead: Vec<String> = g
        .iter()
        .filter(|b| b.plus.iter().any(|&(v, _)| v == Var::X(1) || v == Var::Y(1)))
        .map(ToString::to_string)
        .collect();
    let not_sf: Vec<String> = g.iter().filter(|b| !b.is_squarefree()).map(ToString::to_string).collect();
    let report = |v: &[String], ok: &str| if v.is_empty() { ok.to_string() } else { v.join("; ") };
    let clauses = vec![
        ClauseCheck::new("pm.quadrics", missing.is_empty(), report(&missing, "all x_i*y_i - z^2 present")),
        ClauseCheck::new("pm.no_z", with_z.is_empty(), report(&with_z, "no extra element involves z")),
        ClauseCheck::new(
            "pm.lead_avoids_x1_y1",
            bad_lead.is_empty(),
            report(&bad_lead, "extra leading terms avoid x1, y1"),
        ),
        ClauseCheck::new("pm.squarefree_g", not_sf.is_empty(), report(&not_sf, "extra elements are squarefree")),
        squarefree_clause("pm.initial_squarefree", &basis),
    ];
    Ok(Conformance {
        variables: vars,
        points,
        basis,
        g,
        clauses,
    })
}

fn lattice_points_are(p: &LatticePolytope, expected: usize, what: &str) -> Result<()> {
    if p.lattice_points().len() == expected {
        Ok(())
    } else {
        Err(Error::HypothesisFailed(format!(
            "{what} has {} lattice points, expected {expected}",
            p.lattice_points().len()
        )))
    }
}

fn g_sharing_clauses(
    prefix: &str,
    named: &[NamedBinomial],
    block: &[NamedBinomial],
    pm: &Conformance,
) -> (BTreeSet<NamedBinomial>, Vec<ClauseCheck>) {
    let missing: Vec<String> = block.iter().filter(|q| !named.contains(q)).map(ToString::to_string).collect();
    let g: BTreeSet<NamedBinomial> = named.iter().filter(|b| !block.contains(b)).cloned().collect();
    let extra: Vec<String> = g.difference(&pm.g).map(ToString::to_string).collect();
    let absent: Vec<String> = pm.g.difference(&g).map(|b| format!("missing {b}")).collect();
    let mut diff = extra;
    diff.extend(absent);
    let clauses = vec![
        ClauseCheck::new(
            &format!("{prefix}.quadrics"),
            missing.is_empty(),
            if missing.is_empty() { "quadric block present".into() } else { missing.join("; ") },
        ),
        ClauseCheck::new(
            &format!("{prefix}.g_shared"),
            diff.is_empty(),
            if diff.is_empty() { format!("same {} extra elements as I_A±", g.len()) } else { diff.join("; ") },
        ),
    ];
    (g, clauses)
}

fn cayley_point(top: bool, a: &[BigInt], sign: bool) -> Point {
    let mut p = vec![if top { BigInt::one() } else { BigInt::zero() }];
    p.extend(a.iter().map(|x| if sign { x.clone() } else { -x }));
    p.push(BigInt::one());
    p
}

/// Toric ideal of `P_A * (-P_A)` under `x_1 < y_1 < ... < x_n < y_n`.
pub fn conform_cayley(a: &Configuration) -> Result<Conformance> {
    let pm = conform_pm(a)?;
    conform_cayley_with(a, &pm)
}

/// As [`conform_cayley`], reusing an existing `I_{A±}` computation.
pub fn conform_cayley_with(a: &Configuration, pm: &Conformance) -> Result<Conformance> {
    require_unimodular(a)?;
    let n = a.len();
    lattice_points_are(&LatticePolytope::from_columns(a.matrix())?, n, "P_A")?;
    let cols = a.columns();
    let mut vars = Vec::with_capacity(2 * n);
    let mut points = Vec::with_capacity(2 * n);
    for (i, c) in cols.iter().enumerate() {
        vars.push(Var::X(i + 1));
        points.push(cayley_point(true, c, true));
    }
    for (i, c) in cols.iter().enumerate() {
        vars.push(Var::Y(i + 1));
        points.push(cayley_point(false, c, false));
    }
    let basis = reduced_toric_basis(&points, &vars)?;
    let named: Vec<NamedBinomial> = basis
        .elements
        .iter()
        .map(|b| NamedBinomial::from_binomial(b, &vars))
        .collect();
    let block: Vec<NamedBinomial> = (2..=n)
        .map(|i| NamedBinomial::quadric(Var::X(i), Var::Y(i), Var::X(1), Var::Y(1)))
        .collect();
    let (g, mut clauses) = g_sharing_clauses("cayley", &named, &block, pm);
    clauses.push(squarefree_clause("cayley.initial_squarefree", &basis));
    Ok(Conformance {
        variables: vars,
        points,
        basis,
        g,
        clauses,
    })
}

/// Toric ideal of `P_{A_0} * (-P_{A_0})` under `x_0 < y_0 < ... < x_n < y_n`.
pub fn conform_azero(a: &Configuration) -> Result<Conformance> {
    let pm = conform_pm(a)?;
    conform_azero_with(a, &pm)
}

/// As [`conform_azero`], reusing an existing `I_{A±}` computation.
pub fn conform_azero_with(a: &Configuration, pm: &Conformance) -> Result<Conformance> {
    require_unimodular(a)?;
    let n = a.len();
    let a0 = crate::config::append_origin(a);
    lattice_points_are(&LatticePolytope::from_columns(&a0)?, n + 1, "P_{A_0}")?;
    let mut cols = vec![vec![BigInt::zero(); a.dim()]];
    cols.extend(a.columns());
    let mut vars = Vec::with_capacity(2 * n + 2);
    let mut points = Vec::with_capacity(2 * n + 2);
    for (i, c) in cols.iter().enumerate() {
        vars.push(Var::X(i));
        points.push(cayley_point(true, c, true));
    }
    for (i, c) in cols.iter().enumerate() {
        vars.push(Var::Y(i));
        points.push(cayley_point(false, c, false));
    }
    let basis = reduced_toric_basis(&points, &vars)?;
    let named: Vec<NamedBinomial> = basis
        .elements
        .iter()
        .map(|b| NamedBinomial::from_binomial(b, &vars))
        .collect();
    let block: Vec<NamedBinomial> = (1..=n)
        .map(|i| NamedBinomial::quadric(Var::X(i), Var::Y(i), Var::X(0), Var::Y(0)))
        .collect();
    let (g, mut clauses) = g_sharing_clauses("azero", &named, &block, pm);
    clauses.push(squarefree_clause("azero.initial_squarefree", &basis));
    Ok(Conformance {
        variables: vars,
        points,
        basis,
        g,
        clauses,
    })
}
