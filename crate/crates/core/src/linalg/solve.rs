//! Kernel lattices and exact rational linear systems.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::linalg::hnf::hnf;
use crate::linalg::{Matrix, Scalar};

/// Basis of the saturated lattice `{u in Z^n : m u = 0}`.
///
/// The trailing columns of the unimodular transform of the column Hermite
/// form span the full integer kernel, not a finite-index sublattice.
pub fn kernel_lattice_basis<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let f = hnf(m);
    let r = f.rank();
    (r..m.cols()).map(|j| f.transform.column(j)).collect()
}

/// Gaussian elimination on a dense rational system `a x = b`; returns one
/// solution (free variables set to zero) or `None` when inconsistent.
pub fn solve_dense<T: Scalar>(a: &[Vec<Ratio<T>>], b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Ratio<T>>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            for j in c..=cols {
                let v = aug[i][j].clone() - f.clone() * aug[r][j].clone();
                aug[i][j] = v;
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Ratio::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Some exact solution of `m^T x = b`, if one exists.
pub fn solve_rational<T: Scalar>(m: &Matrix<T>, b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    assert_eq!(b.len(), m.cols(), "right-hand side length");
    let system: Vec<Vec<Ratio<T>>> = (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| Ratio::from_integer(m[(i, j)].clone())).collect())
        .collect();
    solve_dense(&system, b)
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse<T: Scalar>(a: &[Vec<Ratio<T>>]) -> Option<Vec<Vec<Ratio<T>>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Ratio<T>>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..n {
            if i == c || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            for j in c..2 * n {
                let v = aug[i][j].clone() - f.clone() * aug[c][j].clone();
                aug[i][j] = v;
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer<T: Scalar>(v: &[Ratio<T>]) -> Vec<T> {
    let l = v
        .iter()
        .fold(T::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<T> = v
        .iter()
        .map(|x| x.numer().clone() * (l.clone() / x.denom().clone()))
        .collect();
    make_primitive(ints)
}

/// Divides an integer vector by the gcd of its entries (zero stays zero).
pub fn make_primitive<T: Scalar>(v: Vec<T>) -> Vec<T> {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / g.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn m(rows: usize, cols: usize, d: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, d).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_lattice_basis(&IntMatrix::identity(3)).is_empty());
        let k = kernel_lattice_basis(&m(1, 2, &[1, 1]));
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![1, -1] || v == vec![-1, 1]);
        // C4 edge columns e1+e2, e2+e3, e3+e4, e4+e1
        let c4 = m(4, 4, &[1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1]);
        let k = kernel_lattice_basis(&c4);
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![1, -1, 1, -1] || v == vec![-1, 1, -1, 1]);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 4y = 0 has kernel generated by (2,1), not (4,2)
        let k = kernel_lattice_basis(&m(1, 2, &[2, -4]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].iter().fold(BigInt::from(0), |g, x| num_integer::Integer::gcd(&g, x)), 1.into());
    }

    #[test]
    fn rational_solve_examples() {
        let ones = vec![q(1, 1); 3];
        assert_eq!(solve_rational(&IntMatrix::identity(3), &ones), Some(ones.clone()));
        let e = IntMatrix::identity(2);
        assert_eq!(solve_rational(&e, &[q(1, 1), q(1, 1)]), Some(vec![q(1, 1), q(1, 1)]));
        assert_eq!(solve_rational(&m(1, 2, &[1, 2]), &[q(1, 1), q(1, 1)]), None);
        let c3 = m(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1]);
        assert_eq!(solve_rational(&c3, &ones), Some(vec![q(1, 2); 3]));
    }

    #[test]
    fn inverse_and_primitive() {
        let a = vec![vec![q(2, 1), q(0, 1)], vec![q(1, 1), q(1, 1)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![q(1, 2), q(0, 1)], vec![q(-1, 2), q(1, 1)]]);
        assert!(inverse(&[vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).is_none());
        assert_eq!(
            primitive_integer(&[q(1, 2), q(-3, 4)]),
            vec![BigInt::from(2), BigInt::from(-3)]
        );
    }
}
