//! End-to-end certification pipelines producing [`CertificateReport`]s.
//!
//! Hypotheses are checked first. If one fails the conclusions are not
//! evaluated and the verdict is `HYPOTHESIS_NOT_MET`; otherwise every clause
//! becomes its own report node and any failing node turns the verdict into
//! `DISCREPANCY`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::{append_origin, as_configuration, Configuration};
use crate::error::{Error, Result};
use crate::graphs::{
    disjoint_odd_cycles, edge_polytope_dim, redundant_row, reduced_edge_configuration, Graph, DEFAULT_CYCLE_CAP,
};
use crate::io::{format_graph, format_matrix};
use crate::linalg::{is_unimodular, minor_values, normalized_minor_values, rank};
use crate::poly::CoeffPoly;
use crate::polytope::{cayley_sum, check_oda, idp_check, minkowski_sum, LatticePolytope};
use crate::toric::{
    buchberger_with, conform_azero_with, conform_cayley_with, conform_pm, initial_ideal,
    stanley_reisner, toric_ideal_with, triangulation_unimodular, Conformance, GbOptions, TermOrder,
};
use crate::{IntMatrix, Point};

/// Schema version of [`CertificateReport`].
pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Confirmed,
    HypothesisNotMet,
    Discrepancy,
}

impl Verdict {
    /// Process exit code: 0, 2 or 3.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Confirmed => 0,
            Verdict::HypothesisNotMet => 2,
            Verdict::Discrepancy => 3,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::HypothesisNotMet => "HYPOTHESIS_NOT_MET",
            Verdict::Discrepancy => "DISCREPANCY",
        })
    }
}

/// `PARTIAL` only appears on supplementary sub-clauses and never blocks
/// `CONFIRMED`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Partial,
}

/// Exact data attached to a check: a single value or a list, always strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Datum {
    Text(String),
    List(Vec<String>),
}

impl From<String> for Datum {
    fn from(s: String) -> Self {
        Datum::Text(s)
    }
}

impl From<&str> for Datum {
    fn from(s: &str) -> Self {
        Datum::Text(s.to_string())
    }
}

impl From<usize> for Datum {
    fn from(n: usize) -> Self {
        Datum::Text(n.to_string())
    }
}

impl From<bool> for Datum {
    fn from(b: bool) -> Self {
        Datum::Text(b.to_string())
    }
}

impl From<&CoeffPoly> for Datum {
    fn from(h: &CoeffPoly) -> Self {
        Datum::List(h.coefficients().iter().map(ToString::to_string).collect())
    }
}

impl From<&Point> for Datum {
    fn from(p: &Point) -> Self {
        Datum::List(p.iter().map(ToString::to_string).collect())
    }
}

impl<T: ToString> From<Vec<T>> for Datum {
    fn from(v: Vec<T>) -> Self {
        Datum::List(v.iter().map(ToString::to_string).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    #[serde(default)]
    pub data: BTreeMap<String, Datum>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn datum(&self, key: &str) -> Option<&Datum> {
        self.data.get(key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    /// `matrix` or `graph`.
    pub kind: String,
    /// The instance in its text format.
    pub text: String,
    /// SHA-256 of `text`, lowercase hex.
    pub sha256: String,
}

impl Instance {
    pub fn matrix(m: &IntMatrix) -> Self {
        Self::new("matrix", format_matrix(m))
    }

    pub fn graph(g: &Graph) -> Self {
        Self::new("graph", format_graph(g))
    }

    fn new(kind: &str, text: String) -> Self {
        let sha256 = format!("{:x}", Sha256::digest(text.as_bytes()));
        Self {
            kind: kind.to_string(),
            text,
            sha256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub version: String,
    /// `main1`, `main2`, `corollary`, `edge` or `identities`.
    pub pipeline: String,
    pub instance: Instance,
    pub hypotheses: Vec<Check>,
    pub clauses: Vec<Check>,
    pub verdict: Verdict,
    /// Wall-clock milliseconds per stage; empty unless requested, so that
    /// reports stay byte-identical across runs.
    #[serde(default)]
    pub timings_ms: BTreeMap<String, String>,
}

impl CertificateReport {
    pub fn hypothesis(&self, id: &str) -> Option<&Check> {
        self.hypotheses.iter().find(|c| c.id == id)
    }

    pub fn clause(&self, id: &str) -> Option<&Check> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Bound for the supplementary IDP enumeration.
    pub k_max: u32,
    /// Check the nef-partition for every lattice point `a`, not just the first.
    pub all_translates: bool,
    pub cycle_cap: usize,
    /// S-pair budget for the Minkowski-sum toric ideal.
    pub sum_gb_budget: Option<usize>,
    pub timings: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            k_max: 2,
            all_translates: false,
            cycle_cap: DEFAULT_CYCLE_CAP,
            sum_gb_budget: Some(20_000),
            timings: false,
        }
    }
}

struct Builder {
    hypotheses: Vec<Check>,
    clauses: Vec<Check>,
    timings: BTreeMap<String, String>,
    record: bool,
}

fn check(id: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        id: id.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
        data: BTreeMap::new(),
    }
}

fn with(mut c: Check, key: &str, v: impl Into<Datum>) -> Check {
    c.data.insert(key.to_string(), v.into());
    c
}

fn failed(id: &str, e: &Error) -> Check {
    check(id, false, format!("computation failed: {e}"))
}

impl Builder {
    fn new(opts: &CertifyOptions) -> Self {
        Self {
            hypotheses: Vec::new(),
            clauses: Vec::new(),
            timings: BTreeMap::new(),
            record: opts.timings,
        }
    }

    fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        if self.record {
            let ms = t.elapsed().as_millis();
            let prev: u128 = self.timings.get(stage).and_then(|s| s.parse().ok()).unwrap_or(0);
            self.timings.insert(stage.to_string(), (prev + ms).to_string());
        }
        out
    }

    fn hyp(&mut self, c: Check) -> bool {
        let ok = c.passed();
        self.hypotheses.push(c);
        ok
    }

    fn clause(&mut self, c: Check) {
        self.clauses.push(c);
    }

    fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(Check::passed)
    }

    fn finish(self, pipeline: &str, instance: Instance) -> CertificateReport {
        let verdict = if !self.hypotheses_hold() {
            Verdict::HypothesisNotMet
        } else if self.clauses.iter().all(Check::passed) {
            Verdict::Confirmed
        } else {
            Verdict::Discrepancy
        };
        CertificateReport {
            version: REPORT_VERSION.to_string(),
            pipeline: pipeline.to_string(),
            instance,
            hypotheses: self.hypotheses,
            clauses: self.clauses,
            verdict,
            timings_ms: self.timings,
        }
    }
}

fn configuration_check(prefix: &str, m: &IntMatrix) -> (Check, Option<Configuration>) {
    let id = format!("{prefix}.configuration");
    match as_configuration(m) {
        Ok(a) => {
            let c = with(check(&id, true, "columns lie on <a_i, c> = 1"), "witness", a.witness().clone());
            (c, Some(a))
        }
        Err(e) => (check(&id, false, e.to_string()), None),
    }
}

fn unimodular_check(prefix: &str, a: &Configuration) -> Check {
    let m = a.matrix();
    let ok = is_unimodular(m);
    let detail = if ok {
        "full row rank, all nonzero maximal minors agree up to sign".to_string()
    } else if rank(m) != m.rows() {
        format!("rank {} < {} rows", rank(m), m.rows())
    } else {
        "nonzero maximal minors differ".to_string()
    };
    let c = with(check(&format!("{prefix}.unimodular"), ok, detail), "rank", rank(m));
    let c = with(c, "minor_values", minor_values(m));
    with(c, "normalized_minor_values", normalized_minor_values(m))
}

fn lattice_points_check(id: &str, p: &LatticePolytope, expected: &[Point]) -> Check {
    let pts = p.lattice_points();
    let extra: Vec<&Point> = pts.iter().filter(|x| !expected.contains(x)).collect();
    let ok = extra.is_empty() && pts.len() == expected.len();
    let detail = match extra.first() {
        Some(x) => format!("extra lattice point {}", render_point(x)),
        None if ok => format!("exactly the {} given points", expected.len()),
        None => "lattice point count differs".to_string(),
    };
    with(check(id, ok, detail), "lattice_points", pts.len())
}

fn spanning_check(id: &str, p: &LatticePolytope) -> Check {
    let ok = p.is_spanning();
    check(
        id,
        ok,
        if ok { "homogenized lattice points generate the lattice" } else { "homogenized lattice points generate a proper sublattice" },
    )
}

fn render_point(p: &[crate::BigInt]) -> String {
    let v: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", v.join(", "))
}

/// Which of the two constructions is being certified.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Flavor {
    Plain,
    WithOrigin,
}

impl Flavor {
    fn theorem(self) -> &'static str {
        match self {
            Flavor::Plain => "main1",
            Flavor::WithOrigin => "main2",
        }
    }

    fn polytope_name(self) -> &'static str {
        match self {
            Flavor::Plain => "P_A",
            Flavor::WithOrigin => "P_{A_0}",
        }
    }

    fn matrix(self, a: &Configuration) -> IntMatrix {
        match self {
            Flavor::Plain => a.matrix().clone(),
            Flavor::WithOrigin => append_origin(a),
        }
    }
}

/// Hypotheses of main1 / main2 on a certified configuration; returns `P`.
fn flavor_hypotheses(b: &mut Builder, a: &Configuration, fl: Flavor) -> Option<LatticePolytope> {
    let t = fl.theorem();
    b.hyp(unimodular_check(t, a));
    let m = fl.matrix(a);
    let p = match LatticePolytope::from_columns(&m) {
        Ok(p) => p,
        Err(e) => {
            b.hyp(failed(&format!("{t}.lattice_points"), &e));
            return None;
        }
    };
    let expected = m.columns();
    let c = b.timed("lattice_points", || lattice_points_check(&format!("{t}.lattice_points"), &p, &expected));
    b.hyp(c);
    let c = b.timed("spanning", || spanning_check(&format!("{t}.spanning"), &p));
    b.hyp(c);
    Some(p)
}

fn conformance_data(mut c: Check, conf: &Conformance) -> Check {
    c = with(c, "gb_size", conf.basis.len());
    c = with(c, "s", conf.s());
    with(c, "g", conf.g.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn conformance_check(id: &str, conf: &Conformance) -> Check {
    let bad: Vec<String> = conf.clauses.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.id, c.detail)).collect();
    let detail = if bad.is_empty() {
        format!("reduced Groebner basis has the stated form ({})", conf.clauses.iter().map(|c| c.id.as_str()).collect::<Vec<_>>().join(", "))
    } else {
        bad.join("; ")
    };
    conformance_data(check(id, bad.is_empty(), detail), conf)
}

/// Clauses (1)-(3) of main1 (`Plain`) or main2 (`WithOrigin`).
fn flavor_clauses(b: &mut Builder, a: &Configuration, p: &LatticePolytope, pm: &Conformance, fl: Flavor, opts: &CertifyOptions) {
    let t = fl.theorem();
    let neg = p.negate();

    // (1) Cayley sum: Gorenstein of index 2 with a regular unimodular triangulation
    let cay = cayley_sum(&[p, &neg]).expect("same ambient dimension");
    let hstar = b.timed("cayley_hstar", || cay.h_star());
    match (&hstar, &cay.gorenstein_index()) {
        (Ok(h), Ok(idx)) => {
            let c = check(
                &format!("{t}.1.gorenstein_index"),
                *idx == Some(2),
                match idx {
                    Some(r) => format!("h* palindromic of degree {}, index {r}", h.degree().unwrap_or(0)),
                    None => "h* is not palindromic".to_string(),
                },
            );
            let c = with(c, "h_star", h);
            let c = with(c, "dim", cay.dim());
            b.clause(with(c, "gorenstein_index", idx.map_or("none".to_string(), |r| r.to_string())));
        }
        (Err(e), _) | (_, Err(e)) => b.clause(failed(&format!("{t}.1.gorenstein_index"), e)),
    }
    let facet_route = b.timed("cayley_facets", || cay.dilate(2).reflexive_translation());
    let c = check(
        &format!("{t}.1.gorenstein_facets"),
        facet_route.is_some(),
        "2C minus its interior point has all facets at lattice distance 1",
    );
    let c = with(c, "facets", cay.facets().inequalities.len());
    b.clause(match &facet_route {
        Some(v) => with(c, "interior_point_of_2C", v),
        None => c,
    });

    let conf = b.timed("cayley_gb", || match fl {
        Flavor::Plain => conform_cayley_with(a, pm),
        Flavor::WithOrigin => conform_azero_with(a, pm),
    });
    let conf = match conf {
        Ok(c) => c,
        Err(e) => {
            b.clause(failed(&format!("{t}.1.cayley_gb"), &e));
            return;
        }
    };
    b.clause(conformance_check(&format!("{t}.1.cayley_gb"), &conf));
    let cayley_squarefree = conf.initial_ideal().is_squarefree();
    match (conf.complex(), conf.triangulation_unimodular()) {
        (Ok(k), Ok(uni)) => {
            let c = check(
                &format!("{t}.1.triangulation"),
                cayley_squarefree && uni,
                "regular by construction: squarefree initial ideal under the stated term order; every maximal simplex unimodular",
            );
            let c = with(c, "maximal_simplices", k.facets().len());
            b.clause(with(c, "regularity", "by-construction"));
        }
        (Err(e), _) | (_, Err(e)) => b.clause(failed(&format!("{t}.1.triangulation"), &e)),
    }
    match (&hstar, &conf.h_polynomial()) {
        (Ok(h), Ok(hk)) => {
            let c = check(&format!("{t}.1.h_chain"), h == hk, "h* of the Cayley sum equals h of its triangulation");
            let c = with(c, "h_star", h);
            b.clause(with(c, "h_triangulation", hk));
        }
        (Err(e), _) | (_, Err(e)) => b.clause(failed(&format!("{t}.1.h_chain"), e)),
    }

    // (2) Minkowski sum: reflexive with a regular unimodular triangulation
    let sum = match minkowski_sum(p, &neg) {
        Ok(s) => s,
        Err(e) => {
            b.clause(failed(&format!("{t}.2.reflexive"), &e));
            return;
        }
    };
    let translation = b.timed("sum_reflexive", || sum.reflexive_translation());
    let origin = vec![crate::BigInt::zero(); p.ambient_dim()];
    let mut c = check(
        &format!("{t}.2.reflexive"),
        translation.as_ref() == Some(&origin),
        match &translation {
            Some(v) if *v == origin => "unique interior point is the origin and every facet is at lattice distance 1".to_string(),
            Some(v) => format!("reflexive only after translating by {}", render_point(v)),
            None => "not reflexive".to_string(),
        },
    );
    c = with(c, "facets", sum.facets().inequalities.len());
    c = with(c, "lattice_points", sum.lattice_points().len());
    if let Ok(h) = b.timed("sum_hstar", || sum.h_star()) {
        c = with(c, "h_star", &h);
    }
    if let Some(v) = &translation {
        c = with(c, "translation", v);
    }
    b.clause(c);
    b.clause(check(
        &format!("{t}.2.triangulation_cayley_route"),
        cayley_squarefree,
        "squarefree initial ideal of the Cayley sum certifies a squarefree initial ideal of the sum",
    ));
    let direct = b.timed("sum_gb", || sum_triangulation(&sum, opts.sum_gb_budget));
    b.clause(match direct {
        Ok((true, size)) => with(
            check(&format!("{t}.2.triangulation_direct"), true, "squarefree initial ideal under the default order; unimodular"),
            "gb_size",
            size,
        ),
        Ok((false, size)) => with(
            partial(&format!("{t}.2.triangulation_direct"), "default order gives a non-squarefree or non-unimodular initial complex", cayley_squarefree),
            "gb_size",
            size,
        ),
        Err(e) => partial(&format!("{t}.2.triangulation_direct"), &format!("search stopped: {e}"), cayley_squarefree),
    });
    match fl {
        Flavor::Plain => nef_translates(b, p, &neg, opts),
        Flavor::WithOrigin => {
            let both = p.contains(&origin) && neg.contains(&origin);
            let c = check(
                "main2.2.nef_partition",
                both && translation.as_ref() == Some(&origin),
                "both summands contain the origin and their sum is reflexive",
            );
            b.clause(with(c, "summands", vec!["P_{A_0}", "-P_{A_0}"]));
        }
    }

    // (3) Oda's equation
    match b.timed("oda", || check_oda(p, &neg)) {
        Ok(ok) => b.clause(check(
            &format!("{t}.3.oda"),
            ok,
            format!("(P ∩ Z^d) + (-P ∩ Z^d) {} (P + (-P)) ∩ Z^d for P = {}", if ok { "=" } else { "!=" }, fl.polytope_name()),
        )),
        Err(e) => b.clause(failed(&format!("{t}.3.oda"), &e)),
    }
}

/// A supplementary check that could not be completed. Falls back to `FAIL`
/// when the main route failed as well.
fn partial(id: &str, detail: &str, fallback_ok: bool) -> Check {
    Check {
        id: id.to_string(),
        status: if fallback_ok { Status::Partial } else { Status::Fail },
        detail: detail.to_string(),
        data: BTreeMap::new(),
    }
}

/// GB of the toric ideal of `sum`'s lattice points under grevlex with the
/// origin smallest and the rest in standard order; returns (squarefree and
/// unimodular, basis size).
fn sum_triangulation(sum: &LatticePolytope, budget: Option<usize>) -> Result<(bool, usize)> {
    let pts: Vec<Point> = sum
        .lattice_points()
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(crate::BigInt::from(1));
            q
        })
        .collect();
    let n = pts.len();
    if n > 64 {
        return Err(Error::TooManyVariables(n));
    }
    let m = IntMatrix::from_columns(sum.ambient_dim() + 1, &pts)?;
    let gens = toric_ideal_with(&m, budget)?;
    let opts = GbOptions {
        max_pairs: budget,
        ..GbOptions::saturated()
    };
    let order = match sum.lattice_points().iter().position(|p| p.iter().all(Zero::is_zero)) {
        Some(o) => TermOrder::with_smallest(n, o),
        None => TermOrder::standard(n),
    };
    let gb = buchberger_with(&gens, &order, &opts)?;
    let ini = initial_ideal(&gb);
    if !ini.is_squarefree() {
        return Ok((false, gb.len()));
    }
    let k = stanley_reisner(&ini, n)?;
    Ok((triangulation_unimodular(&k, &pts), gb.len()))
}

fn nef_translates(b: &mut Builder, p: &LatticePolytope, neg: &LatticePolytope, opts: &CertifyOptions) {
    let pts = p.lattice_points();
    let chosen: Vec<&Point> = if opts.all_translates { pts.iter().collect() } else { pts.iter().take(1).collect() };
    let origin = vec![crate::BigInt::zero(); p.ambient_dim()];
    let mut bad = None;
    for a in &chosen {
        let minus_a: Point = a.iter().map(|x| -x).collect();
        let first = p.translate(&minus_a);
        let second = neg.translate(a);
        let ok = first.contains(&origin)
            && second.contains(&origin)
            && minkowski_sum(&first, &second).is_ok_and(|s| s.reflexive_translation().as_ref() == Some(&origin));
        if !ok {
            bad = Some(render_point(a));
            break;
        }
    }
    let c = check(
        "main1.2.nef_partition",
        bad.is_none(),
        match &bad {
            None => "(P - a) + (-P + a) is reflexive with both summands containing the origin".to_string(),
            Some(a) => format!("fails for a = {a}"),
        },
    );
    let c = with(c, "translates_checked", chosen.len());
    b.clause(match chosen.first() {
        Some(a) => with(c, "a", *a),
        None => c,
    });
}

fn pm_conformance(b: &mut Builder, a: &Configuration) -> Option<Conformance> {
    match b.timed("pm_gb", || conform_pm(a)) {
        Ok(pm) => Some(pm),
        Err(e) => {
            b.clause(failed("pm_gb", &e));
            None
        }
    }
}

/// Hypotheses, then clauses if they hold. `pm` caches the `I_{A±}` basis
/// between flavours.
fn run_flavor(b: &mut Builder, a: &Configuration, fl: Flavor, pm: &mut Option<Conformance>, opts: &CertifyOptions) {
    let Some(p) = flavor_hypotheses(b, a, fl) else {
        return;
    };
    if !b.hypotheses_hold() {
        return;
    }
    if pm.is_none() {
        *pm = pm_conformance(b, a);
    }
    if let Some(pm) = pm {
        flavor_clauses(b, a, &p, pm, fl, opts);
    }
}

/// Theorem main1 on `a`.
pub fn certify_main1(a: &Configuration, opts: &CertifyOptions) -> CertificateReport {
    let mut b = Builder::new(opts);
    b.hyp(configuration_check("main1", a.matrix()).0);
    run_flavor(&mut b, a, Flavor::Plain, &mut None, opts);
    b.finish("main1", Instance::matrix(a.matrix()))
}

/// Theorem main2 on `a` (with the origin appended).
pub fn certify_main2(a: &Configuration, opts: &CertifyOptions) -> CertificateReport {
    let mut b = Builder::new(opts);
    b.hyp(configuration_check("main2", a.matrix()).0);
    run_flavor(&mut b, a, Flavor::WithOrigin, &mut None, opts);
    b.finish("main2", Instance::matrix(a.matrix()))
}

fn corollary_into(b: &mut Builder, a: &Configuration) {
    b.hyp(unimodular_check("corollary", a));
    let (p, p0) = match (LatticePolytope::from_columns(a.matrix()), LatticePolytope::from_columns(&append_origin(a))) {
        (Ok(p), Ok(p0)) => (p, p0),
        (Err(e), _) | (_, Err(e)) => {
            b.hyp(failed("corollary.lattice_points", &e));
            return;
        }
    };
    let a0 = append_origin(a).columns();
    b.hyp(lattice_points_check("corollary.lattice_points", &p0, &a0));
    b.hyp(spanning_check("corollary.spanning_P_A", &p));
    b.hyp(spanning_check("corollary.spanning_P_A0", &p0));
    if !b.hypotheses_hold() {
        return;
    }
    let left = cayley_sum(&[&p0, &p0.negate()]).expect("same ambient dimension");
    let right = cayley_sum(&[&p, &p.negate()]).expect("same ambient dimension");
    match b.timed("corollary_hstar", || (left.h_star(), right.h_star())) {
        (Ok(hl), Ok(hr)) => {
            let rhs = hr.times_one_plus_t();
            let c = check(
                "corollary.one_plus_t",
                hl == rhs,
                format!("h*(P_A0 * -P_A0) = {hl}, (1+t) h*(P_A * -P_A) = {rhs}"),
            );
            let c = with(c, "h_star_A0", &hl);
            let c = with(c, "h_star_A", &hr);
            b.clause(with(c, "one_plus_t_times_h_star_A", &rhs));
        }
        (Err(e), _) | (_, Err(e)) => b.clause(failed("corollary.one_plus_t", &e)),
    }
}

/// The `(1+t)` identity between the two Cayley sums.
pub fn certify_corollary(a: &Configuration, opts: &CertifyOptions) -> CertificateReport {
    let mut b = Builder::new(opts);
    b.hyp(configuration_check("corollary", a.matrix()).0);
    corollary_into(&mut b, a);
    b.finish("corollary", Instance::matrix(a.matrix()))
}

/// The h-polynomial chain from the proof of main1: `h(pm) = (1+t) h(cayley)`,
/// `h(pm) = h*` of `conv(±a_i, 0)`, palindromic of degree `d`.
pub fn certify_proof_identities(a: &Configuration, opts: &CertifyOptions) -> CertificateReport {
    let mut b = Builder::new(opts);
    b.hyp(configuration_check("identities", a.matrix()).0);
    let Some(_) = flavor_hypotheses(&mut b, a, Flavor::Plain) else {
        return b.finish("identities", Instance::matrix(a.matrix()));
    };
    if !b.hypotheses_hold() {
        return b.finish("identities", Instance::matrix(a.matrix()));
    }
    let Some(pm) = pm_conformance(&mut b, a) else {
        return b.finish("identities", Instance::matrix(a.matrix()));
    };
    b.clause(conformance_check("identities.pm_gb", &pm));
    let cayley = match b.timed("cayley_gb", || conform_cayley_with(a, &pm)) {
        Ok(c) => c,
        Err(e) => {
            b.clause(failed("identities.cayley_gb", &e));
            return b.finish("identities", Instance::matrix(a.matrix()));
        }
    };
    let (h_pm, h_cay) = match (pm.h_polynomial(), cayley.h_polynomial()) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            b.clause(failed("identities.pm_vs_cayley", &e));
            return b.finish("identities", Instance::matrix(a.matrix()));
        }
    };
    let rhs = h_cay.times_one_plus_t();
    let c = check("identities.pm_vs_cayley", h_pm == rhs, format!("h(pm) = {h_pm}, (1+t) h(cayley) = {rhs}"));
    let c = with(c, "h_pm", &h_pm);
    b.clause(with(c, "h_cayley", &h_cay));

    let mut pts: Vec<Point> = Vec::with_capacity(2 * a.len() + 1);
    for col in a.columns() {
        pts.push(col.iter().map(|x| -x).collect());
        pts.push(col);
    }
    pts.push(vec![crate::BigInt::zero(); a.dim()]);
    match LatticePolytope::from_points(&pts).and_then(|q| Ok((q.h_star_generated()?, q))) {
        Ok((hq, q)) => {
            let c = check(
                "identities.pm_vs_hstar",
                hq == h_pm,
                format!("h* of conv(±a_i, 0) in the lattice of its points = {hq}"),
            );
            b.clause(with(c, "h_star", &hq));
            let c = check(
                "identities.idp_bounded",
                idp_check(&q.generated_lattice_model(), opts.k_max),
                "bounded integer decomposition check in the lattice generated by the points",
            );
            b.clause(with(c, "k_max", opts.k_max.to_string()));
        }
        Err(e) => b.clause(failed("identities.pm_vs_hstar", &e)),
    }
    let deg = h_pm.degree().unwrap_or(0);
    b.clause(with(
        check(
            "identities.palindromic_degree_d",
            h_pm.is_palindromic() && deg == a.dim(),
            format!("h(pm) has degree {deg} (d = {}) and is {}palindromic", a.dim(), if h_pm.is_palindromic() { "" } else { "not " }),
        ),
        "degree",
        deg,
    ));
    match pm.triangulation_unimodular() {
        Ok(uni) => b.clause(check(
            "identities.pm_triangulation",
            uni && pm.initial_ideal().is_squarefree(),
            "squarefree initial ideal of I_A± with unimodular simplices",
        )),
        Err(e) => b.clause(failed("identities.pm_triangulation", &e)),
    }
    b.finish("identities", Instance::matrix(a.matrix()))
}

/// Dispatch on a graph: edge1 when all odd cycles meet, plus edge2 and the
/// corollary when the graph is bipartite. Uses `A_G` with its redundant row
/// deleted for bipartite graphs.
pub fn certify_edge(g: &Graph, opts: &CertifyOptions) -> Result<CertificateReport> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut b = Builder::new(opts);
    let a = reduced_edge_configuration(g)?;
    let disjoint = disjoint_odd_cycles(g, opts.cycle_cap)?;
    let mut c = check(
        "edge1.odd_cycles_intersect",
        disjoint.is_none(),
        match &disjoint {
            None => "every two odd cycles share a vertex".to_string(),
            Some((c1, c2)) => format!("odd cycles on {c1:?} and {c2:?} are vertex-disjoint"),
        },
    );
    c = with(c, "bipartite", g.is_bipartite());
    c = with(c, "deleted_row", redundant_row(g).map_or("none".to_string(), |r| (r + 1).to_string()));
    b.hyp(c);
    let dim_formula = edge_polytope_dim(g)?;
    let p = LatticePolytope::from_columns(a.matrix())?;
    let c = check(
        "edge.dimension",
        p.dim() == dim_formula,
        format!("dim P_(A_G) = {} against the formula value {dim_formula}", p.dim()),
    );
    b.clause(c);

    b.hyp(configuration_check("edge1", a.matrix()).0);
    let mut pm = None;
    run_flavor(&mut b, &a, Flavor::Plain, &mut pm, opts);
    if g.is_bipartite() && b.hypotheses_hold() {
        run_flavor(&mut b, &a, Flavor::WithOrigin, &mut pm, opts);
        if b.hypotheses_hold() {
            corollary_into(&mut b, &a);
        }
    }
    Ok(b.finish("edge", Instance::graph(g)))
}

/// A pipeline on a raw matrix; a non-configuration yields `HYPOTHESIS_NOT_MET`.
pub fn certify_matrix(pipeline: Pipeline, m: &IntMatrix, opts: &CertifyOptions) -> CertificateReport {
    match as_configuration(m) {
        Ok(a) => match pipeline {
            Pipeline::Main1 => certify_main1(&a, opts),
            Pipeline::Main2 => certify_main2(&a, opts),
            Pipeline::Corollary => certify_corollary(&a, opts),
            Pipeline::Identities => certify_proof_identities(&a, opts),
        },
        Err(_) => {
            let mut b = Builder::new(opts);
            b.hyp(configuration_check(pipeline.name(), m).0);
            b.finish(pipeline.name(), Instance::matrix(m))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Main1,
    Main2,
    Corollary,
    Identities,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Main1 => "main1",
            Pipeline::Main2 => "main2",
            Pipeline::Corollary => "corollary",
            Pipeline::Identities => "identities",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::parse_family_spec;

    fn cfg(rows: usize, cols: usize, d: &[i64]) -> Configuration {
        as_configuration(&IntMatrix::from_i64(rows, cols, d).unwrap()).unwrap()
    }

    fn list(v: &[u64]) -> Datum {
        Datum::List(v.iter().map(ToString::to_string).collect())
    }

    #[test]
    fn main1_on_the_plane_simplex() {
        let r = certify_main1(&cfg(2, 2, &[1, 0, 0, 1]), &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::Confirmed, "{}", r.to_json());
        assert_eq!(r.clause("main1.1.gorenstein_index").unwrap().datum("h_star"), Some(&list(&[1, 1])));
        assert_eq!(r.clause("main1.3.oda").unwrap().status, Status::Pass);
    }

    #[test]
    fn main2_gives_the_hexagon() {
        let r = certify_main2(&cfg(2, 2, &[1, 0, 0, 1]), &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::Confirmed, "{}", r.to_json());
        assert_eq!(r.clause("main2.2.reflexive").unwrap().datum("h_star"), Some(&list(&[1, 4, 1])));
    }

    #[test]
    fn corollary_on_the_plane_simplex() {
        let r = certify_corollary(&cfg(2, 2, &[1, 0, 0, 1]), &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::Confirmed);
        let c = r.clause("corollary.one_plus_t").unwrap();
        assert_eq!(c.datum("h_star_A0"), Some(&list(&[1, 2, 1])));
        assert_eq!(c.datum("h_star_A"), Some(&list(&[1, 1])));
    }

    #[test]
    fn identities_small_cases() {
        let r = certify_proof_identities(&cfg(2, 2, &[1, 0, 0, 1]), &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::Confirmed, "{}", r.to_json());
        assert_eq!(r.clause("identities.pm_vs_cayley").unwrap().datum("h_pm"), Some(&list(&[1, 2, 1])));
        let r = certify_proof_identities(&cfg(1, 1, &[1]), &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::Confirmed, "{}", r.to_json());
        assert_eq!(r.clause("identities.pm_vs_cayley").unwrap().datum("h_pm"), Some(&list(&[1, 1])));
    }

    #[test]
    fn c3_fails_main2_spanning() {
        let a = cfg(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1]);
        let r = certify_main2(&a, &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
        assert_eq!(r.hypothesis("main2.spanning").unwrap().status, Status::Fail);
        assert!(r.clauses.is_empty());
    }

    #[test]
    fn non_configurations_are_hypothesis_failures() {
        let m = IntMatrix::from_i64(1, 2, &[1, 2]).unwrap();
        let r = certify_matrix(Pipeline::Main1, &m, &CertifyOptions::default());
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
        assert_eq!(r.verdict.exit_code(), 2);
    }

    #[test]
    fn bridged_triangles_negative_control() {
        let g = parse_family_spec("bridged_triangles").unwrap();
        let r = certify_edge(&g, &CertifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
        let u = r.hypothesis("main1.unimodular").unwrap();
        assert_eq!(u.status, Status::Fail);
        assert_eq!(u.datum("normalized_minor_values"), Some(&list(&[1, 2])));
    }

    #[test]
    fn reports_round_trip_and_are_deterministic() {
        let a = cfg(2, 2, &[1, 0, 0, 1]);
        let r = certify_main1(&a, &CertifyOptions::default());
        let json = r.to_json();
        assert_eq!(CertificateReport::from_json(&json).unwrap(), r);
        assert_eq!(certify_main1(&a, &CertifyOptions::default()).to_json(), json);
        assert!(r.timings_ms.is_empty());
    }
}
