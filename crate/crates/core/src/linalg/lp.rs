//! Exact phase-one simplex: feasibility of `A x = b, x >= 0` over the rationals.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::linalg::Scalar;

/// Returns a feasible point of `{x >= 0 : a x = b}` or `None`.
///
/// Dense tableau with artificial variables and Bland's rule, so the method
/// terminates without cycling.
pub fn feasible_point<T: Scalar>(a: &[Vec<Ratio<T>>], b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let width = k + m + 1;
    let rhs = k + m;
    let mut tab: Vec<Vec<Ratio<T>>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: Vec<Ratio<T>> = vec![Ratio::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[k + i] = Ratio::from_integer(T::one());
        r[rhs] = if flip { -bi.clone() } else { bi.clone() };
        tab.push(r);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    let mut obj: Vec<Ratio<T>> = vec![Ratio::zero(); width];
    for r in &tab {
        for j in 0..k {
            obj[j] = obj[j].clone() - r[j].clone();
        }
        obj[rhs] = obj[rhs].clone() - r[rhs].clone();
    }

    while let Some(enter) = (0..k + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let ri = tab[i][rhs].clone() / tab[i][enter].clone();
                    let rl = tab[l][rhs].clone() / tab[l][enter].clone();
                    ri < rl || (ri == rl && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        // the phase-one objective is bounded below by zero
        let l = leave.expect("phase-one simplex cannot be unbounded");
        pivot(&mut tab, &mut obj, l, enter);
        basis[l] = enter;
    }

    if !obj[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Ratio::zero(); k];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < k {
            x[bv] = tab[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot<T: Scalar>(tab: &mut [Vec<Ratio<T>>], obj: &mut [Ratio<T>], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for x in tab[row].iter_mut() {
        *x = x.clone() * inv.clone();
    }
    let prow = tab[row].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, p) in r.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
    }
}

/// Whether `p` is a convex combination of `others`.
pub fn in_convex_hull<T: Scalar>(p: &[T], others: &[&[T]]) -> bool {
    if others.is_empty() {
        return false;
    }
    let d = p.len();
    let mut a: Vec<Vec<Ratio<T>>> = (0..d)
        .map(|i| others.iter().map(|q| Ratio::from_integer(q[i].clone())).collect())
        .collect();
    a.push(vec![Ratio::from_integer(T::one()); others.len()]);
    let mut b: Vec<Ratio<T>> = p.iter().map(|x| Ratio::from_integer(x.clone())).collect();
    b.push(Ratio::from_integer(T::one()));
    feasible_point(&a, &b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn feasible_and_infeasible_systems() {
        // x + y = 2, x - y = 0
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = feasible_point(&a, &[q(2), q(0)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        // x + y = -1 has no nonnegative solution
        assert!(feasible_point(&[vec![q(1), q(1)]], &[q(-1)]).is_none());
    }

    #[test]
    fn convex_hull_membership() {
        let pts: Vec<Vec<BigInt>> = [[0, 0], [2, 0], [0, 2]]
            .iter()
            .map(|p| p.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let refs: Vec<&[BigInt]> = pts.iter().map(Vec::as_slice).collect();
        let inside: Vec<BigInt> = vec![1.into(), 1.into()];
        let outside: Vec<BigInt> = vec![2.into(), 1.into()];
        assert!(in_convex_hull(&inside, &refs));
        assert!(!in_convex_hull(&outside, &refs));
    }
}
