//! The built-in instance family.

use crate::config::{as_configuration, Configuration};
use crate::graphs::{parse_family_spec, reduced_edge_configuration, Graph};
use crate::IntMatrix;

/// Graph shorthands of the built-in corpus, in a fixed order.
pub const GRAPH_SPECS: &[&str] = &[
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "path:3",
    "path:4",
    "path:5",
    "complete_bipartite:2,3",
    "complete_bipartite:3,3",
    "bowtie",
    "bridged_triangles",
];

/// Graphs whose edge configurations are unimodular and small enough for
/// every pipeline; the structure-theorem corpus.
pub const UNIMODULAR_GRAPH_SPECS: &[&str] = &[
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "path:3",
    "path:4",
    "path:5",
    "complete_bipartite:2,3",
    "bowtie",
];

/// File-name friendly form of a shorthand: `complete_bipartite:2,3` becomes
/// `complete_bipartite_2_3`.
pub fn slug(spec: &str) -> String {
    spec.replace([':', ','], "_")
}

pub fn graph(spec: &str) -> Graph {
    parse_family_spec(spec).expect("built-in shorthand")
}

pub fn graphs() -> Vec<(String, Graph)> {
    GRAPH_SPECS.iter().map(|s| (s.to_string(), graph(s))).collect()
}

/// The identity configuration in dimension `d`.
pub fn identity(d: usize) -> Configuration {
    as_configuration(&IntMatrix::identity(d)).expect("the identity is a configuration")
}

/// Named configurations for the structure theorems: identities for
/// `d = 1..4`, then `A_G` (row-reduced when bipartite) for
/// [`UNIMODULAR_GRAPH_SPECS`].
pub fn configurations() -> Vec<(String, Configuration)> {
    let mut out: Vec<(String, Configuration)> = (1..=4).map(|d| (format!("identity:{d}"), identity(d))).collect();
    for s in UNIMODULAR_GRAPH_SPECS {
        let a = reduced_edge_configuration(&graph(s)).expect("corpus graphs have edges");
        out.push((format!("A_G {s}"), a));
    }
    out
}
