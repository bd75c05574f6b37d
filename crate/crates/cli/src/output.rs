//! Serializable command outputs and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use nefcert::certify::{CertificateReport, Check, Datum};
use nefcert::config::as_configuration;
use nefcert::graphs::{disjoint_odd_cycles, edge_polytope_dim, reduced_edge_configuration, Graph};
use nefcert::linalg::{is_unimodular, maximal_minor_profile, minor_values, normalized_minor_values, rank};
use nefcert::toric::{ClauseCheck, Conformance};
use nefcert::{Error, IntMatrix, LatticePolytope};

use crate::Render;

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub configuration: bool,
    /// Rational `w` with `w^T A = (1,...,1)`, when one exists.
    pub witness: Option<Vec<String>>,
    pub unimodular: bool,
    /// Absolute nonzero maximal minors, column subsets in lexicographic order.
    pub minor_profile: Vec<String>,
    pub minor_values: Vec<String>,
    pub normalized_minor_values: Vec<String>,
}

impl AnalyzeOutput {
    pub fn new(m: &IntMatrix) -> Self {
        let witness = as_configuration(m).ok().map(|a| strings(a.witness()));
        Self {
            rows: m.rows(),
            cols: m.cols(),
            rank: rank(m),
            configuration: witness.is_some(),
            witness,
            unimodular: is_unimodular(m),
            minor_profile: strings(&maximal_minor_profile(m)),
            minor_values: strings(&minor_values(m)),
            normalized_minor_values: strings(&normalized_minor_values(m)),
        }
    }
}

impl Render for AnalyzeOutput {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "size: {} x {}", self.rows, self.cols);
        let _ = writeln!(s, "rank: {}", self.rank);
        let _ = writeln!(s, "configuration: {}", self.configuration);
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {}", w.join(" "));
        }
        let _ = writeln!(s, "unimodular: {}", self.unimodular);
        let _ = writeln!(s, "minor profile: {}", self.minor_profile.join(" "));
        let _ = writeln!(s, "minor values: {}", self.minor_values.join(" "));
        let _ = writeln!(s, "normalized minor values: {}", self.normalized_minor_values.join(" "));
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeOutput {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_star: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reflexive: Option<bool>,
    /// `None` inside means not Gorenstein.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gorenstein_index: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spanning: Option<bool>,
}

impl PolytopeOutput {
    pub fn new(p: &LatticePolytope, hstar: bool, reflexive: bool, gorenstein: bool, spanning: bool) -> nefcert::Result<Self> {
        Ok(Self {
            dim: p.dim(),
            h_star: if hstar { Some(p.h_star()?.coefficients().to_vec()) } else { None },
            reflexive: reflexive.then(|| p.is_reflexive()),
            gorenstein_index: if gorenstein { Some(p.gorenstein_index()?) } else { None },
            spanning: spanning.then(|| p.is_spanning()),
        })
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        if let Some(h) = &self.h_star {
            out.push(("h*", strings(h).join(" ")));
        }
        if let Some(r) = self.reflexive {
            out.push(("reflexive", r.to_string()));
        }
        if let Some(g) = self.gorenstein_index {
            out.push(("gorenstein index", g.map_or("none".to_string(), |r| r.to_string())));
        }
        if let Some(s) = self.spanning {
            out.push(("spanning", s.to_string()));
        }
        out
    }
}

impl Render for PolytopeOutput {
    /// A single requested value is printed bare.
    fn text(&self) -> String {
        match self.fields().as_slice() {
            [(_, v)] => format!("{v}\n"),
            fields => {
                let mut s = format!("dim: {}\n", self.dim);
                for (k, v) in fields {
                    let _ = writeln!(s, "{k}: {v}");
                }
                s
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbOutput {
    pub mode: String,
    pub variables: Vec<String>,
    /// The reduced Groebner basis, sorted.
    pub basis: Vec<String>,
    pub s: usize,
    /// Elements outside the explicit quadric block.
    pub g: Vec<String>,
    pub clauses: Vec<ClauseCheck>,
    pub conforms: bool,
    /// `h` of the initial complex, when the initial ideal is squarefree.
    pub h_polynomial: Option<Vec<u64>>,
}

impl GbOutput {
    pub fn new(mode: &str, c: &Conformance) -> nefcert::Result<Self> {
        let h_polynomial = match c.h_polynomial() {
            Ok(h) => Some(h.coefficients().to_vec()),
            Err(Error::NotSquarefree) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            mode: mode.to_string(),
            variables: c.names(),
            basis: c.dump(),
            s: c.s(),
            g: c.g.iter().map(ToString::to_string).collect(),
            clauses: c.clauses.clone(),
            conforms: c.conforms(),
            h_polynomial,
        })
    }
}

impl Render for GbOutput {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "mode: {}", self.mode);
        let _ = writeln!(s, "variables: {}", self.variables.join(" "));
        let _ = writeln!(s, "basis ({} elements):", self.basis.len());
        for b in &self.basis {
            let _ = writeln!(s, "  {b}");
        }
        let _ = writeln!(s, "s: {}", self.s);
        for g in &self.g {
            let _ = writeln!(s, "  g: {g}");
        }
        if let Some(h) = &self.h_polynomial {
            let _ = writeln!(s, "h: {}", strings(h).join(" "));
        }
        for c in &self.clauses {
            let _ = writeln!(s, "[{}] {} {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.detail);
        }
        let _ = writeln!(s, "conforms: {}", self.conforms);
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphOutput {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    pub bipartite: bool,
    /// `None` when the cycle budget ran out.
    pub odd_cycles_intersect: Option<bool>,
    pub disjoint_odd_cycles: Option<(Vec<usize>, Vec<usize>)>,
    pub edge_polytope_dim: Option<usize>,
    /// Unimodularity of the (row-reduced) edge configuration.
    pub unimodular: Option<bool>,
    pub canonical: Vec<(usize, usize)>,
}

impl GraphOutput {
    pub fn new(g: &Graph, cycle_cap: usize) -> Self {
        let disjoint = disjoint_odd_cycles(g, cycle_cap);
        Self {
            vertices: g.vertex_count(),
            edges: g.edges().to_vec(),
            connected: g.is_connected(),
            bipartite: g.is_bipartite(),
            odd_cycles_intersect: disjoint.as_ref().ok().map(Option::is_none),
            disjoint_odd_cycles: disjoint.ok().flatten(),
            edge_polytope_dim: edge_polytope_dim(g).ok(),
            unimodular: reduced_edge_configuration(g).ok().map(|a| is_unimodular(a.matrix())),
            canonical: g.canonical().edges().to_vec(),
        }
    }
}

fn opt<T: ToString>(v: &Option<T>, none: &str) -> String {
    v.as_ref().map_or(none.to_string(), ToString::to_string)
}

fn edge_list(e: &[(usize, usize)]) -> String {
    e.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

impl Render for GraphOutput {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "vertices: {}", self.vertices);
        let _ = writeln!(s, "edges: {}", edge_list(&self.edges));
        let _ = writeln!(s, "connected: {}", self.connected);
        let _ = writeln!(s, "bipartite: {}", self.bipartite);
        let _ = writeln!(s, "odd cycles pairwise intersect: {}", opt(&self.odd_cycles_intersect, "unknown (cycle budget exceeded)"));
        if let Some((c1, c2)) = &self.disjoint_odd_cycles {
            let _ = writeln!(s, "disjoint odd cycles: {} | {}", strings(c1).join(" "), strings(c2).join(" "));
        }
        let _ = writeln!(s, "edge polytope dimension: {}", opt(&self.edge_polytope_dim, "n/a"));
        let _ = writeln!(s, "unimodular: {}", opt(&self.unimodular, "n/a"));
        let _ = writeln!(s, "canonical: {}", edge_list(&self.canonical));
        s
    }
}

fn datum_text(d: &Datum) -> String {
    match d {
        Datum::Text(t) => t.clone(),
        Datum::List(v) => format!("[{}]", v.join(", ")),
    }
}

fn check_text(s: &mut String, c: &Check) {
    let status = serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    let _ = writeln!(s, "  [{status}] {}: {}", c.id, c.detail);
    for (k, v) in &c.data {
        let _ = writeln!(s, "      {k} = {}", datum_text(v));
    }
}

pub fn report_text(r: &CertificateReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pipeline: {}", r.pipeline);
    let _ = writeln!(s, "instance ({}, sha256 {}):", r.instance.kind, r.instance.sha256);
    for line in r.instance.text.lines() {
        let _ = writeln!(s, "  {line}");
    }
    let _ = writeln!(s, "hypotheses:");
    for c in &r.hypotheses {
        check_text(&mut s, c);
    }
    let _ = writeln!(s, "clauses:");
    for c in &r.clauses {
        check_text(&mut s, c);
    }
    for (k, v) in &r.timings_ms {
        let _ = writeln!(s, "time {k}: {v} ms");
    }
    let _ = writeln!(s, "verdict: {}", r.verdict);
    s
}
