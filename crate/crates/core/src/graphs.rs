//! Simple graphs, their edge configurations and the odd-cycle condition.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::config::{as_configuration, with_witness, Configuration};
use crate::error::{Error, Result};
use crate::{BigInt, IntMatrix};

/// Default budget for [`odd_cycles_pairwise_intersect`].
pub const DEFAULT_CYCLE_CAP: usize = 10_000;

/// Simple undirected graph on `1..=d`. Each edge is stored as `(min, max)`;
/// the edge list keeps its input order, which fixes the column order of
/// [`edge_configuration`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are 1-indexed, in either orientation.
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normal = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::BadParams(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > vertices || v > vertices {
                return Err(Error::BadParams(format!("edge {u} {v} outside 1..={vertices}")));
            }
            normal.push((u.min(v), u.max(v)));
        }
        let mut sorted = normal.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::BadParams(format!("repeated edge {} {}", w[0].0, w[0].1)));
        }
        Ok(Self {
            vertices,
            edges: normal,
        })
    }

    /// Same graph with the edge list sorted.
    pub fn sorted(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph {
            vertices: self.vertices,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// 0-indexed adjacency lists.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// 2-colouring by breadth-first search; `None` if some component has an
    /// odd cycle. Colour 0 goes to the smallest vertex of each component.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut colour: Vec<Option<u8>> = vec![None; self.vertices];
        for s in 0..self.vertices {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("queued vertices are coloured");
                for &v in &adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.expect("every vertex visited")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.vertices
    }

    /// Upper-triangle adjacency bits, row by row.
    fn code_under(&self, perm: &[usize]) -> u64 {
        let n = self.vertices;
        let mut adj = vec![0u64; n];
        for &(u, v) in &self.edges {
            let (a, b) = (perm[u - 1], perm[v - 1]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut code = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                code = (code << 1) | ((adj[i] >> j) & 1);
            }
        }
        code
    }

    /// Canonical relabelling: the largest adjacency code over all orderings
    /// that list vertices by non-increasing degree. Isomorphic graphs map to
    /// the same graph.
    pub fn canonical(&self) -> Graph {
        let n = self.vertices;
        let mut deg = vec![0usize; n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (_, group) in &(0..n).sorted_by_key(|&v| std::cmp::Reverse(deg[v])).chunk_by(|&v| deg[v]) {
            classes.push(group.collect());
        }
        let mut best: Option<(u64, Vec<usize>)> = None;
        let orderings = classes
            .iter()
            .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
            .multi_cartesian_product();
        for choice in orderings {
            let order: Vec<usize> = choice.into_iter().flatten().collect();
            let mut perm = vec![0usize; n];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            let code = self.code_under(&perm);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                best = Some((code, perm));
            }
        }
        let perm = match best {
            Some((_, p)) => p,
            None => (0..n).collect(),
        };
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (perm[u - 1] + 1, perm[v - 1] + 1)).collect();
        Graph::new(n, &edges).expect("relabelling keeps the graph simple").sorted()
    }
}

impl fmt::Display for Graph {
    /// The graph file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.vertices, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// `A_G`: columns `e_i + e_j` in edge order, witness `(1/2, ..., 1/2)`.
pub fn edge_configuration(g: &Graph) -> Result<Configuration> {
    if g.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let mut m = IntMatrix::zeros(g.vertices, g.edges.len());
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        m[(u - 1, k)] = BigInt::one();
        m[(v - 1, k)] = BigInt::one();
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    with_witness(&m, vec![half; g.vertices])
}

/// Row removed from `A_G` for a bipartite `g`: the last vertex `d`, which is
/// the last vertex of its colour class. `None` for non-bipartite graphs.
pub fn redundant_row(g: &Graph) -> Option<usize> {
    (g.is_bipartite() && g.vertices > 0).then(|| g.vertices - 1)
}

/// `A_G`, with [`redundant_row`] deleted when `g` is bipartite.
pub fn reduced_edge_configuration(g: &Graph) -> Result<Configuration> {
    let a = edge_configuration(g)?;
    match redundant_row(g) {
        Some(r) => as_configuration(&a.matrix().delete_row(r)),
        None => Ok(a),
    }
}

/// Vertex sets (bitmasks) of all simple odd cycles; each cycle is found once
/// from its smallest vertex in one direction.
fn odd_cycle_sets(g: &Graph, cap: usize) -> Result<BTreeSet<u64>> {
    let n = g.vertices;
    if n > 64 {
        return Err(Error::TooManyVariables(n));
    }
    let adj = g.adjacency();
    let mut sets = BTreeSet::new();
    let mut cycles = 0usize;
    for s in 0..n {
        let mut path = vec![s];
        let mut stack: Vec<usize> = vec![0];
        let mut on_path = 1u64 << s;
        while let Some(next) = stack.last_mut() {
            let u = *path.last().expect("path and stack have equal length");
            let Some(&v) = adj[u].get(*next) else {
                stack.pop();
                path.pop();
                on_path &= !(1 << u);
                continue;
            };
            *next += 1;
            if v == s && path.len() >= 3 && path[1] < u {
                cycles += 1;
                if cycles > cap {
                    return Err(Error::CycleBudgetExceeded(cap));
                }
                if path.len() % 2 == 1 {
                    sets.insert(on_path);
                }
            } else if v > s && on_path & (1 << v) == 0 {
                path.push(v);
                stack.push(0);
                on_path |= 1 << v;
            }
        }
    }
    Ok(sets)
}

/// True iff no two odd cycles are vertex-disjoint.
pub fn odd_cycles_pairwise_intersect(g: &Graph) -> Result<bool> {
    odd_cycles_pairwise_intersect_with(g, DEFAULT_CYCLE_CAP)
}

/// As [`odd_cycles_pairwise_intersect`] with an explicit budget on the number
/// of enumerated cycles.
pub fn odd_cycles_pairwise_intersect_with(g: &Graph, cap: usize) -> Result<bool> {
    if g.is_bipartite() {
        return Ok(true);
    }
    let sets: Vec<u64> = odd_cycle_sets(g, cap)?.into_iter().collect();
    Ok(sets.iter().tuple_combinations().all(|(a, b)| a & b != 0))
}

/// Two vertex-disjoint odd cycles, as sorted 1-indexed vertex lists.
pub fn disjoint_odd_cycles(g: &Graph, cap: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if g.is_bipartite() {
        return Ok(None);
    }
    let sets: Vec<u64> = odd_cycle_sets(g, cap)?.into_iter().collect();
    let unmask = |m: u64| (0..64).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect::<Vec<_>>();
    Ok(sets
        .iter()
        .tuple_combinations()
        .find(|(a, b)| *a & *b == 0)
        .map(|(a, b)| (unmask(*a), unmask(*b))))
}

/// `dim P_{A_G}`: `d - 2` for bipartite, `d - 1` otherwise.
pub fn edge_polytope_dim(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    Ok(if g.is_bipartite() { g.vertices - 2 } else { g.vertices - 1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Cycle,
    Path,
    CompleteBipartite,
    Bowtie,
    BridgedTriangles,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cycle" => Self::Cycle,
            "path" => Self::Path,
            "complete_bipartite" | "kbip" => Self::CompleteBipartite,
            "bowtie" => Self::Bowtie,
            "bridged_triangles" => Self::BridgedTriangles,
            _ => return Err(Error::BadParams(format!("unknown graph family '{s}'"))),
        })
    }
}

/// Named graphs. `cycle(n)`, `n >= 3`; `path(n)` on `n >= 2` vertices;
/// `complete_bipartite(a, b)`; `bowtie()` is two triangles sharing vertex 3;
/// `bridged_triangles()` is two triangles joined by the edge `3 4`.
pub fn family(kind: FamilyKind, params: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::BadParams(msg.to_string()));
    match (kind, params) {
        (FamilyKind::Cycle, &[n]) if n >= 3 => {
            let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
            Graph::new(n, &edges)
        }
        (FamilyKind::Cycle, _) => bad("cycle takes one length >= 3"),
        (FamilyKind::Path, &[n]) if n >= 2 => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges)
        }
        (FamilyKind::Path, _) => bad("path takes one vertex count >= 2"),
        (FamilyKind::CompleteBipartite, &[a, b]) if a >= 1 && b >= 1 => {
            let edges: Vec<_> = (1..=a).cartesian_product(a + 1..=a + b).collect();
            Graph::new(a + b, &edges)
        }
        (FamilyKind::CompleteBipartite, _) => bad("complete_bipartite takes two part sizes >= 1"),
        (FamilyKind::Bowtie, &[]) => Graph::new(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
        (FamilyKind::Bowtie, _) => bad("bowtie takes no parameters"),
        (FamilyKind::BridgedTriangles, &[]) => {
            Graph::new(6, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
        }
        (FamilyKind::BridgedTriangles, _) => bad("bridged_triangles takes no parameters"),
    }
}

/// Shorthand such as `cycle:4`, `path:3`, `complete_bipartite:2,3` or
/// `bowtie`.
pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let kind: FamilyKind = name.trim().parse()?;
    let params = args
        .split(',')
        .map(str::trim)
        .filter(|a| !a.is_empty())
        .map(|a| a.parse::<usize>().map_err(|_| Error::BadParams(format!("'{a}' is not a count"))))
        .collect::<Result<Vec<_>>>()?;
    family(kind, &params)
}

/// All connected graphs on `d` vertices up to isomorphism, in canonical
/// form, sorted. Built by attaching a new vertex to a nonempty neighbour set
/// of each graph on `d - 1` vertices; every connected graph has a vertex
/// whose removal keeps it connected, so nothing is missed.
pub fn connected_graphs(d: usize) -> Vec<Graph> {
    if d == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::new(1, &[]).expect("no edges")];
    for n in 2..=d {
        let mut next: HashSet<Graph> = HashSet::new();
        for g in &level {
            for nbrs in 1u64..(1 << (n - 1)) {
                let mut edges = g.edges.clone();
                edges.extend((0..n - 1).filter(|&i| nbrs >> i & 1 == 1).map(|i| (i + 1, n)));
                next.insert(Graph::new(n, &edges).expect("new edges are distinct").canonical());
            }
        }
        level = next.into_iter().collect();
        level.sort();
    }
    level
}
