//! Nonnegative integer coefficient vectors, low degree first.

use std::fmt;

use serde::Serialize;

/// A polynomial with nonnegative integer coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CoeffPoly {
    coefficients: Vec<u64>,
}

/// `h*(P, t)`.
pub type HStarPoly = CoeffPoly;
/// `h(K[A], t)` of a squarefree quotient.
pub type HPoly = CoeffPoly;

impl CoeffPoly {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }

    /// `(1 + t) * self`.
    pub fn times_one_plus_t(&self) -> Self {
        let c = &self.coefficients;
        let mut out = vec![0u64; c.len() + 1];
        for (i, &x) in c.iter().enumerate() {
            out[i] += x;
            out[i + 1] += x;
        }
        Self::new(out)
    }

    /// Sum of the coefficients (the normalized volume for an h*-vector).
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

impl From<Vec<u64>> for CoeffPoly {
    fn from(v: Vec<u64>) -> Self {
        Self::new(v)
    }
}

/// Space-separated coefficients, e.g. `1 4 1`.
impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coefficients {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Free-standing form of [`CoeffPoly::is_palindromic`].
pub fn palindromic(h: &CoeffPoly) -> bool {
    h.is_palindromic()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palindromes() {
        assert!(palindromic(&vec![1, 2, 1].into()));
        assert!(palindromic(&vec![1, 4, 1].into()));
        assert!(!palindromic(&vec![1, 2].into()));
        assert!(palindromic(&vec![1, 1, 0, 0].into()));
    }

    #[test]
    fn one_plus_t() {
        let h: CoeffPoly = vec![1, 1].into();
        assert_eq!(h.times_one_plus_t(), vec![1, 2, 1].into());
        assert_eq!(h.to_string(), "1 1");
        assert_eq!(CoeffPoly::new(vec![0, 0]).degree(), None);
    }
}
