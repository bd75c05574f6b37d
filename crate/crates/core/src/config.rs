//! Configurations and the matrix constructions built from them.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve_rational;
use crate::{BigInt, IntMatrix, Point, RatVector};

/// Integer matrix whose columns lie on an affine hyperplane missing the
/// origin, together with a witness `c` satisfying `<a_i, c> = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    matrix: IntMatrix,
    witness: RatVector,
}

impl Configuration {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn witness(&self) -> &RatVector {
        &self.witness
    }

    /// Number of rows `d`.
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of columns `n`.
    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.cols() == 0
    }

    pub fn columns(&self) -> Vec<Point> {
        self.matrix.columns()
    }

    /// Re-checks `<a_i, c> = 1` for every column.
    pub fn witness_holds(&self) -> bool {
        witness_holds(&self.matrix, &self.witness)
    }
}

fn witness_holds(m: &IntMatrix, c: &[BigRational]) -> bool {
    (0..m.cols()).all(|j| {
        let s = (0..m.rows()).fold(BigRational::zero(), |acc, i| {
            acc + BigRational::from_integer(m[(i, j)].clone()) * c[i].clone()
        });
        s.is_one()
    })
}

/// Certifies `m` as a configuration by solving `m^T c = 1` exactly.
pub fn as_configuration(m: &IntMatrix) -> Result<Configuration> {
    if m.cols() == 0 {
        return Err(Error::EmptyInput);
    }
    let cols = m.columns();
    for j in 0..cols.len() {
        for k in 0..j {
            if cols[j] == cols[k] {
                return Err(Error::RepeatedColumns(k, j));
            }
        }
    }
    let ones = vec![BigRational::one(); m.cols()];
    let witness = solve_rational(m, &ones).ok_or(Error::NotAConfiguration)?;
    if !witness_holds(m, &witness) {
        return Err(Error::InternalInconsistency("witness does not verify".into()));
    }
    Ok(Configuration {
        matrix: m.clone(),
        witness,
    })
}

/// Uses a caller-supplied witness, verified exactly.
pub fn with_witness(m: &IntMatrix, witness: RatVector) -> Result<Configuration> {
    if m.cols() == 0 {
        return Err(Error::EmptyInput);
    }
    if witness.len() != m.rows() {
        return Err(Error::DimensionMismatch(m.rows(), witness.len()));
    }
    if !witness_holds(m, &witness) {
        return Err(Error::NotAConfiguration);
    }
    Ok(Configuration {
        matrix: m.clone(),
        witness,
    })
}

/// Variable attached to a column of a centrally symmetric configuration or of
/// the Cayley constructions. Indices are 1-based as in the theorem statements;
/// `X(0)`/`Y(0)` are the origin variables of the origin-extended Cayley sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Var {
    X(usize),
    Y(usize),
    Z,
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Z => write!(f, "z"),
        }
    }
}

/// The configuration with columns `(a_i, 1)`, `(-a_i, 1)`, `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentrallySymmetric {
    base: Configuration,
    full: IntMatrix,
}

impl CentrallySymmetric {
    pub fn base(&self) -> &Configuration {
        &self.base
    }

    /// The `(d+1) x (2n+1)` matrix.
    pub fn full(&self) -> &IntMatrix {
        &self.full
    }

    /// Variable names bound to the columns of [`Self::full`]:
    /// `x_1..x_n, y_1..y_n, z`.
    pub fn variables(&self) -> Vec<Var> {
        let n = self.base.len();
        (1..=n)
            .map(Var::X)
            .chain((1..=n).map(Var::Y))
            .chain(std::iter::once(Var::Z))
            .collect()
    }

    /// `full` is itself a configuration with witness `(0, ..., 0, 1)`.
    pub fn as_configuration(&self) -> Configuration {
        let mut witness = vec![BigRational::zero(); self.full.rows()];
        *witness.last_mut().expect("at least one row") = BigRational::one();
        Configuration {
            matrix: self.full.clone(),
            witness,
        }
    }
}

pub fn centrally_symmetric(a: &Configuration) -> CentrallySymmetric {
    let (d, n) = (a.dim(), a.len());
    let mut full = IntMatrix::zeros(d + 1, 2 * n + 1);
    for j in 0..n {
        for i in 0..d {
            let v = a.matrix()[(i, j)].clone();
            full[(i, n + j)] = -v.clone();
            full[(i, j)] = v;
        }
    }
    for j in 0..=2 * n {
        full[(d, j)] = BigInt::one();
    }
    CentrallySymmetric {
        base: a.clone(),
        full,
    }
}

/// `(A, 0)`: deliberately a raw matrix, since the zero column breaks the
/// hyperplane condition.
pub fn append_origin(a: &Configuration) -> IntMatrix {
    a.matrix()
        .append_column(&vec![BigInt::zero(); a.dim()])
        .expect("column length matches")
}

/// Stacks a row of ones under the given points.
pub fn homogenize(points: &[Point]) -> Result<IntMatrix> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let d = first.len();
    for (j, p) in points.iter().enumerate() {
        if p.len() != d {
            return Err(Error::DimensionMismatch(d, p.len()));
        }
        if points[..j].contains(p) {
            return Err(Error::DuplicatePoint(j));
        }
    }
    let cols: Vec<Point> = points
        .iter()
        .map(|p| {
            let mut c = p.clone();
            c.push(BigInt::one());
            c
        })
        .collect();
    IntMatrix::from_columns(d + 1, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, is_unimodular, rank};

    fn m(rows: usize, cols: usize, d: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, d).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pt(v: &[i64]) -> Point {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn configuration_witnesses() {
        let c = as_configuration(&IntMatrix::identity(2)).unwrap();
        assert_eq!(c.witness(), &vec![q(1, 1), q(1, 1)]);
        let c3 = as_configuration(&m(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1])).unwrap();
        assert_eq!(c3.witness(), &vec![q(1, 2); 3]);
        assert_eq!(
            as_configuration(&m(1, 2, &[1, 2])),
            Err(Error::NotAConfiguration)
        );
        assert_eq!(
            as_configuration(&m(2, 3, &[1, 0, 1, 0, 1, 0])),
            Err(Error::RepeatedColumns(0, 2))
        );
        assert_eq!(as_configuration(&IntMatrix::zeros(2, 0)), Err(Error::EmptyInput));
    }

    #[test]
    fn centrally_symmetric_shapes() {
        let a = as_configuration(&IntMatrix::identity(2)).unwrap();
        let cs = centrally_symmetric(&a);
        assert_eq!(cs.full(), &m(3, 5, &[1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 1, 1, 1, 1, 1]));
        assert_eq!(
            cs.variables().iter().map(ToString::to_string).collect::<Vec<_>>(),
            vec!["x1", "x2", "y1", "y2", "z"]
        );
        let one = as_configuration(&m(1, 1, &[1])).unwrap();
        assert_eq!(centrally_symmetric(&one).full(), &m(2, 3, &[1, -1, 0, 1, 1, 1]));

        let c4 = as_configuration(&m(4, 4, &[1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1])).unwrap();
        let cs = centrally_symmetric(&c4);
        assert_eq!((cs.full().rows(), cs.full().cols()), (5, 9));
        // C4 has rank 3 in Z^4; after dropping the last row it is unimodular
        assert!(is_unimodular(&c4.matrix().delete_row(3)));
        assert!(cs.as_configuration().witness_holds());
    }

    #[test]
    fn origin_and_homogenization() {
        let a = as_configuration(&IntMatrix::identity(2)).unwrap();
        assert_eq!(append_origin(&a), m(2, 3, &[1, 0, 0, 0, 1, 0]));
        assert_eq!(homogenize(&[pt(&[0]), pt(&[1])]).unwrap(), m(2, 2, &[0, 1, 1, 1]));
        let tri = homogenize(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(determinant(&tri).abs(), BigInt::one());
        assert_eq!(homogenize(&[]), Err(Error::EmptyInput));
        assert_eq!(homogenize(&[pt(&[1]), pt(&[1])]), Err(Error::DuplicatePoint(1)));
    }

    #[test]
    fn homogenizing_a_configuration_keeps_rank() {
        let c3 = m(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1]);
        let h = homogenize(&c3.columns()).unwrap();
        assert_eq!(rank(&h), rank(&c3));
    }

    use num_traits::Signed;
}
