//! Squarefree monomial ideals and their Stanley–Reisner complexes.

use std::collections::HashSet;

use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::{rank, smith_invariants};
use crate::poly::HPoly;
use crate::toric::binomial::{divides, Monomial};
use crate::toric::buchberger::GroebnerBasis;
use crate::{BigInt, IntMatrix, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only the minimal generators, sorted.
    pub fn new(gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Self { generators: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }
}

/// `in_<(I)` from a reduced basis: the leading terms are already minimal.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.leading_terms())
}

pub fn is_squarefree(i: &MonomialIdeal) -> bool {
    i.is_squarefree()
}

/// Simplicial complex on `0..n` given by its facets, each a sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

fn bits(face: &[usize]) -> u64 {
    face.iter().fold(0, |acc, &v| acc | (1 << v))
}

fn unbits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out.push(v);
        m &= m - 1;
    }
    out
}

impl SimplicialComplex {
    /// Drops non-maximal faces and sorts.
    pub fn from_facets(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVariables(n));
        }
        let mut masks: Vec<u64> = facets.iter().map(|f| bits(f)).collect();
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&g| g != f && f & !g == 0))
            .collect();
        let mut facets: Vec<Vec<usize>> = maximal.into_iter().map(unbits).collect();
        facets.sort();
        Ok(Self { n, facets })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Size of the largest facet.
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `f_{-1}, f_0, ..., f_{D-1}`: number of faces with `i` vertices at index `i`.
    pub fn face_counts(&self) -> Vec<u64> {
        let d = self.max_facet_size();
        let mut seen: HashSet<u64> = HashSet::new();
        seen.insert(0);
        for f in &self.facets {
            let m = bits(f);
            let mut sub = m;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        let mut counts = vec![0u64; d + 1];
        for s in seen {
            counts[s.count_ones() as usize] += 1;
        }
        counts
    }
}

/// Facets are the maximal subsets of `0..n` containing no generator's support.
pub fn stanley_reisner(i: &MonomialIdeal, n: usize) -> Result<SimplicialComplex> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if n > 64 {
        return Err(Error::TooManyVariables(n));
    }
    let nonfaces: Vec<u64> = i
        .generators()
        .iter()
        .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |a, (v, _)| a | (1 << v)))
        .collect();
    let mut facets = Vec::new();
    collect_facets(0, n, 0, &nonfaces, &mut facets);
    SimplicialComplex::from_facets(n, facets.into_iter().map(unbits).collect())
}

fn independent(face: u64, nonfaces: &[u64]) -> bool {
    nonfaces.iter().all(|&g| g & !face != 0)
}

fn collect_facets(v: usize, n: usize, face: u64, nonfaces: &[u64], out: &mut Vec<u64>) {
    if v == n {
        if (0..n).all(|u| face & (1 << u) != 0 || !independent(face | (1 << u), nonfaces)) {
            out.push(face);
        }
        return;
    }
    let with = face | (1 << v);
    if independent(with, nonfaces) {
        collect_facets(v + 1, n, with, nonfaces, out);
        // leaving v out only helps if some generator through v would be completed later
        let blockable = nonfaces.iter().any(|&g| g & (1 << v) != 0);
        if !blockable {
            return;
        }
    }
    collect_facets(v + 1, n, face, nonfaces, out);
}

/// `h_k = sum_i (-1)^{k-i} C(D-i, k-i) f_{i-1}` with `D` the largest facet size.
pub fn h_polynomial(k: &SimplicialComplex) -> Result<HPoly> {
    let f = k.face_counts();
    let d = k.max_facet_size();
    let binom = |n: usize, r: usize| -> BigInt {
        (0..r).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
    };
    let mut h = Vec::with_capacity(d + 1);
    for kk in 0..=d {
        let mut s = BigInt::from(0);
        for i in 0..=kk {
            let term = binom(d - i, kk - i) * f[i];
            if (kk - i) % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        let c = s
            .to_u64()
            .ok_or_else(|| Error::InternalInconsistency(format!("h_{kk} = {s} is negative")))?;
        h.push(c);
    }
    Ok(HPoly::new(h))
}

/// Every facet spans a simplex whose points generate the same lattice as
/// all of `points` (the lattice `ZA` of the configuration).
pub fn triangulation_unimodular(k: &SimplicialComplex, points: &[Point]) -> bool {
    let Some(first) = points.first() else {
        return k.facets().is_empty();
    };
    let d = first.len();
    let all = IntMatrix::from_columns(d, points).expect("uniform length");
    let r = rank(&all);
    let index = smith_invariants(&all).product();
    k.facets().iter().all(|f| {
        let cols: Vec<Point> = f.iter().map(|&v| points[v].clone()).collect();
        let m = IntMatrix::from_columns(d, &cols).expect("uniform length");
        f.len() == r && rank(&m) == r && smith_invariants(&m).product() == index
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Point> {
        v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn squarefree_checks() {
        assert!(MonomialIdeal::new(vec![vec![1, 1]]).is_squarefree());
        assert!(!MonomialIdeal::new(vec![vec![2, 0]]).is_squarefree());
        let i = MonomialIdeal::new(vec![vec![1, 1, 0], vec![1, 1, 1]]);
        assert_eq!(i.generators(), &[vec![1, 1, 0]]);
    }

    #[test]
    fn stanley_reisner_examples() {
        // variables x1 y1 x2 y2 z; ideal (x1*y1, x2*y2)
        let i = MonomialIdeal::new(vec![vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 0]]);
        let k = stanley_reisner(&i, 5).unwrap();
        assert_eq!(k.facets().len(), 4);
        assert!(k.facets().iter().all(|f| f.len() == 3 && f.contains(&4)));
        assert_eq!(k.face_counts(), vec![1, 5, 8, 4]);
        assert_eq!(h_polynomial(&k).unwrap(), vec![1, 2, 1].into());

        let zero = stanley_reisner(&MonomialIdeal::new(vec![]), 3).unwrap();
        assert_eq!(zero.facets(), &[vec![0, 1, 2]]);
        assert_eq!(h_polynomial(&zero).unwrap(), vec![1].into());

        let two = stanley_reisner(&MonomialIdeal::new(vec![vec![1, 1]]), 2).unwrap();
        assert_eq!(two.facets(), &[vec![0], vec![1]]);
        assert_eq!(h_polynomial(&two).unwrap(), vec![1, 1].into());

        assert_eq!(
            stanley_reisner(&MonomialIdeal::new(vec![vec![2]]), 1),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn unimodular_triangulations() {
        // cross-polytope points (±e1, ±e2, 0) homogenized
        let p = pts(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]]);
        let i = MonomialIdeal::new(vec![vec![1, 0, 1, 0, 0], vec![0, 1, 0, 1, 0]]);
        let k = stanley_reisner(&i, 5).unwrap();
        assert!(triangulation_unimodular(&k, &p));

        let q = pts(&[&[0, 0, 1], &[1, 0, 1], &[1, 2, 1], &[0, 1, 1]]);
        let bad = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2], vec![0, 2, 3]]).unwrap();
        assert!(!triangulation_unimodular(&bad, &q));

        let simplex = pts(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]);
        let whole = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(triangulation_unimodular(&whole, &simplex));
    }
}
