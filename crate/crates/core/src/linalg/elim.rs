//! Fraction-free elimination: rank, determinants, row bases and maximal minors.

use itertools::Itertools;

use crate::linalg::{Matrix, Scalar};

/// Bareiss elimination on a copy of `m`.
///
/// Returns the number of pivots and the original indices of the rows that
/// ended up as pivot rows, in pivot order. Those rows form a row basis.
fn bareiss<T: Scalar>(m: &Matrix<T>) -> (usize, Vec<usize>, Matrix<T>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut perm: Vec<usize> = (0..rows).collect();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        perm.swap(r, p);
        let piv = a[(r, c)].clone();
        for i in (r + 1)..rows {
            let lead = a[(i, c)].clone();
            for j in c..cols {
                let v = (piv.clone() * a[(i, j)].clone() - lead.clone() * a[(r, j)].clone())
                    / prev.clone();
                a[(i, j)] = v;
            }
        }
        prev = piv;
        r += 1;
    }
    perm.truncate(r);
    (r, perm, a)
}

/// Rank over the rationals.
pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    bareiss(m).0
}

/// Indices of a maximal linearly independent set of rows.
pub fn row_basis<T: Scalar>(m: &Matrix<T>) -> Vec<usize> {
    let mut idx = bareiss(m).1;
    idx.sort_unstable();
    idx
}

/// Determinant of a square matrix (Bareiss).
pub fn determinant<T: Scalar>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&i| !a[(i, k)].is_zero()) else {
                return T::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        let piv = a[(k, k)].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (piv.clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone())
                    / prev.clone();
                a[(i, j)] = v;
            }
        }
        prev = piv;
    }
    sign * a[(n - 1, n - 1)].clone()
}

/// Restricts `m` to a row basis so that its rank equals its row count.
pub fn restrict_to_row_basis<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let basis = row_basis(m);
    if basis.len() == m.rows() {
        m.clone()
    } else {
        m.select_rows(&basis)
    }
}

/// Absolute values of the nonzero maximal minors, with column subsets visited
/// in lexicographic order.
pub fn maximal_minor_profile<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let reduced = restrict_to_row_basis(m);
    let d = reduced.rows();
    if d == 0 {
        return Vec::new();
    }
    (0..reduced.cols())
        .combinations(d)
        .filter_map(|cols| {
            let det = determinant(&reduced.select_columns(&cols)).abs();
            (!det.is_zero()).then_some(det)
        })
        .collect()
}

/// Full row rank and all nonzero maximal minors equal up to sign.
pub fn is_unimodular<T: Scalar>(m: &Matrix<T>) -> bool {
    let d = m.rows();
    if rank(m) != d {
        return false;
    }
    let mut seen: Option<T> = None;
    for cols in (0..m.cols()).combinations(d) {
        let det = determinant(&m.select_columns(&cols)).abs();
        if det.is_zero() {
            continue;
        }
        match &seen {
            None => seen = Some(det),
            Some(v) if *v != det => return false,
            Some(_) => {}
        }
    }
    true
}

/// Greatest common divisor of all maximal minors (zero for the zero matrix).
pub fn max_minor_gcd<T: Scalar>(m: &Matrix<T>) -> T {
    maximal_minor_profile(m)
        .into_iter()
        .fold(T::zero(), |g, x| g.gcd(&x))
}

/// Distinct absolute values of the nonzero maximal minors, ascending.
pub fn minor_values<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let mut v = maximal_minor_profile(m);
    v.sort();
    v.dedup();
    v
}

/// [`minor_values`] divided by their gcd: the minors measured in the lattice
/// generated by the columns rather than in `Z^d`.
pub fn normalized_minor_values<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let v = minor_values(m);
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    v.into_iter().map(|x| x / g.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;

    fn m(rows: usize, cols: usize, d: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, d).unwrap()
    }

    fn c3() -> IntMatrix {
        m(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::identity(3)), 3);
        assert_eq!(rank(&c3()), 3);
        assert_eq!(rank(&IntMatrix::zeros(2, 4)), 0);
        assert_eq!(rank(&IntMatrix::zeros(0, 3)), 0);
        assert_eq!(rank(&IntMatrix::zeros(3, 0)), 0);
    }

    #[test]
    fn determinant_of_c3_is_two() {
        assert_eq!(determinant(&c3()), 2.into());
    }

    #[test]
    fn minor_profiles() {
        let one = num_bigint::BigInt::from(1);
        assert_eq!(maximal_minor_profile(&IntMatrix::identity(2)), vec![one.clone()]);
        assert_eq!(maximal_minor_profile(&c3()), vec![2.into()]);
        assert_eq!(
            maximal_minor_profile(&m(2, 3, &[1, 0, 1, 0, 1, 1])),
            vec![one.clone(), one.clone(), one]
        );
        assert!(maximal_minor_profile(&IntMatrix::zeros(2, 3)).is_empty());
    }

    #[test]
    fn unimodularity_examples() {
        assert!(is_unimodular(&IntMatrix::identity(4)));
        assert!(is_unimodular(&c3()));
        // rank deficient
        assert!(!is_unimodular(&m(2, 2, &[1, 1, 1, 1])));
        assert!(!is_unimodular(&m(2, 3, &[1, 0, 1, 0, 1, 2])));
    }

    #[test]
    fn row_basis_skips_dependent_rows() {
        let a = m(3, 2, &[1, 2, 2, 4, 0, 1]);
        assert_eq!(row_basis(&a), vec![0, 2]);
    }

    #[test]
    fn works_for_machine_integers() {
        let a = Matrix::<i64>::from_i64(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1]).unwrap();
        assert_eq!(determinant(&a), 2);
        assert!(is_unimodular(&a));
    }
}
