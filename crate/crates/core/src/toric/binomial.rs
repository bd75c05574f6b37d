//! Binomials `x^plus - x^minus` and graded reverse-lexicographic orders.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::BigInt;

pub type Monomial = Vec<u32>;

pub fn degree(m: &[u32]) -> u64 {
    m.iter().map(|&e| u64::from(e)).sum()
}

/// Bit `v` set iff `x_v` divides the monomial.
pub fn support_mask(m: &[u32]) -> u64 {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Self {
        assert_eq!(plus.len(), minus.len(), "exponent vectors of different length");
        Self { plus, minus }
    }

    /// `x^{u+} - x^{u-}` for an integer vector `u`.
    pub fn from_lattice_vector(u: &[BigInt]) -> Self {
        let part = |sign: bool| -> Monomial {
            u.iter()
                .map(|x| {
                    if x.is_positive() == sign && !x.is_zero() {
                        x.abs().to_u32().expect("exponent fits in u32")
                    } else {
                        0
                    }
                })
                .collect()
        };
        Self::new(part(true), part(false))
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn is_homogeneous(&self) -> bool {
        degree(&self.plus) == degree(&self.minus)
    }

    pub fn degree(&self) -> u64 {
        degree(&self.plus)
    }

    /// Divides out the common monomial factor.
    pub fn cancel_common(&mut self) {
        self.cancel_on(u64::MAX);
    }

    /// Divides out the common factor restricted to variables in `mask`.
    pub fn cancel_on(&mut self, mask: u64) {
        for (v, (a, b)) in self.plus.iter_mut().zip(self.minus.iter_mut()).enumerate() {
            if v < 64 && mask & (1 << v) != 0 {
                let c = (*a).min(*b);
                *a -= c;
                *b -= c;
            }
        }
    }

    /// Puts the larger monomial first.
    pub fn orient(&mut self, order: &TermOrder) {
        if order.cmp(&self.plus, &self.minus) == Ordering::Less {
            std::mem::swap(&mut self.plus, &mut self.minus);
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(|&e| e <= 1)
    }

    /// Renders as `x1*x3 - x2*x4` with `names[v]` for variable `v`.
    pub fn render(&self, names: &[String]) -> String {
        format!("{} - {}", render_monomial(&self.plus, names), render_monomial(&self.minus, names))
    }
}

pub fn render_monomial(m: &[u32], names: &[String]) -> String {
    let mut s = String::new();
    for (v, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&names[v]);
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Graded reverse-lexicographic order. `ranking` lists the variables from
/// smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    ranking: Vec<usize>,
}

impl TermOrder {
    pub fn grevlex(ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::BadParams(format!("{ranking:?} is not a permutation")));
            }
        }
        Ok(Self { ranking })
    }

    /// The usual `x_0 > x_1 > ... > x_{n-1}`.
    pub fn standard(n: usize) -> Self {
        Self {
            ranking: (0..n).rev().collect(),
        }
    }

    /// Makes `v` the smallest variable and keeps the standard order on the rest.
    pub fn with_smallest(n: usize, v: usize) -> Self {
        let mut ranking = vec![v];
        ranking.extend((0..n).rev().filter(|&u| u != v));
        Self { ranking }
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    /// Variables from smallest to largest.
    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match degree(a).cmp(&degree(b)) {
            Ordering::Equal => {}
            o => return o,
        }
        for &v in &self.ranking {
            if a[v] != b[v] {
                return if a[v] < b[v] { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn grevlex_comparisons() {
        // variables x1 x2 y1 y2 z, with z < x1 < y1 < x2 < y2
        let o = TermOrder::grevlex(vec![4, 0, 2, 1, 3]).unwrap();
        let x1y1 = vec![1, 0, 1, 0, 0];
        let zz = vec![0, 0, 0, 0, 2];
        assert_eq!(o.cmp(&x1y1, &zz), Ordering::Greater);
        // x1*x3 > x2*x4 under x1 > x2 > x3 > x4
        let s = TermOrder::standard(4);
        assert_eq!(s.cmp(&[1, 0, 1, 0], &[0, 1, 0, 1]), Ordering::Greater);
        assert_eq!(s.cmp(&[2, 0, 0, 0], &[0, 1, 0, 0]), Ordering::Greater);
        assert!(TermOrder::grevlex(vec![0, 0]).is_err());
    }

    #[test]
    fn rendering() {
        let b = Binomial::from_lattice_vector(&[1, -1, 1, -1].map(BigInt::from));
        assert_eq!(b.render(&names(&["x1", "x2", "x3", "x4"])), "x1*x3 - x2*x4");
        let c = Binomial::new(vec![1, 1, 0], vec![0, 0, 2]);
        assert_eq!(c.render(&names(&["x1", "y1", "z"])), "x1*y1 - z^2");
    }

    #[test]
    fn cancelling_common_factors() {
        let mut b = Binomial::new(vec![2, 1, 0], vec![1, 0, 2]);
        b.cancel_on(0b10);
        assert_eq!(b, Binomial::new(vec![2, 1, 0], vec![1, 0, 2]));
        b.cancel_common();
        assert_eq!(b, Binomial::new(vec![1, 1, 0], vec![0, 0, 2]));
        assert!(b.is_homogeneous());
    }
}
