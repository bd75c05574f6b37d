//! Column-style Hermite normal form and Smith invariants.

use num_traits::One;

use crate::linalg::{Matrix, Scalar};

/// Result of a column Hermite reduction `m * transform = hermite`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm<T> {
    pub hermite: Matrix<T>,
    pub transform: Matrix<T>,
    /// `(row, column)` of each pivot, top to bottom.
    pub pivots: Vec<(usize, usize)>,
}

impl<T: Scalar> HermiteForm<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn col_axpy<T: Scalar>(m: &mut Matrix<T>, dst: usize, src: usize, k: &T) {
    for i in 0..m.rows() {
        let v = m[(i, dst)].clone() - k.clone() * m[(i, src)].clone();
        m[(i, dst)] = v;
    }
}

fn col_negate<T: Scalar>(m: &mut Matrix<T>, c: usize) {
    for i in 0..m.rows() {
        let v = -m[(i, c)].clone();
        m[(i, c)] = v;
    }
}

/// Replace columns (a, b) by (s*a + t*b, u*a + v*b).
fn col_combine<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize, s: &T, t: &T, u: &T, v: &T) {
    for i in 0..m.rows() {
        let x = m[(i, a)].clone();
        let y = m[(i, b)].clone();
        m[(i, a)] = s.clone() * x.clone() + t.clone() * y.clone();
        m[(i, b)] = u.clone() * x + v.clone() * y;
    }
}

/// Column Hermite normal form with positive pivots and off-pivot entries of
/// each pivot row reduced into `[0, pivot)`. Pivot columns come first; the
/// trailing `cols - rank` columns of the result are zero.
pub fn hnf<T: Scalar>(m: &Matrix<T>) -> HermiteForm<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = Matrix::identity(cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for r in 0..rows {
        if k == cols {
            break;
        }
        // gcd-combine every column right of k into column k on row r
        for j in (k + 1)..cols {
            if h[(r, j)].is_zero() {
                continue;
            }
            let a = h[(r, k)].clone();
            let b = h[(r, j)].clone();
            let e = a.extended_gcd(&b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let u_ = -(b / g.clone());
            let v_ = a / g;
            col_combine(&mut h, k, j, &s, &t, &u_, &v_);
            col_combine(&mut u, k, j, &s, &t, &u_, &v_);
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            col_negate(&mut h, k);
            col_negate(&mut u, k);
        }
        let p = h[(r, k)].clone();
        for j in 0..k {
            let q = h[(r, j)].div_floor(&p);
            if !q.is_zero() {
                col_axpy(&mut h, j, k, &q);
                col_axpy(&mut u, j, k, &q);
            }
        }
        pivots.push((r, k));
        k += 1;
    }
    HermiteForm {
        hermite: h,
        transform: u,
        pivots,
    }
}

/// Smith invariants `d_1 | d_2 | ...` followed by zeros; length `min(rows, cols)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmithInvariants<T> {
    pub diagonal: Vec<T>,
}

impl<T: Scalar> SmithInvariants<T> {
    pub fn nonzero(&self) -> impl Iterator<Item = &T> {
        self.diagonal.iter().filter(|x| !x.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.nonzero().count()
    }

    pub fn all_one(&self) -> bool {
        self.nonzero().all(One::is_one)
    }

    /// Product of the nonzero invariants (the lattice index in its saturation).
    pub fn product(&self) -> T {
        self.nonzero().fold(T::one(), |acc, x| acc * x.clone())
    }
}

pub fn smith_invariants<T: Scalar>(m: &Matrix<T>) -> SmithInvariants<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            diag.resize(n, T::zero());
            break;
        };
        a.swap_rows(t, bi);
        a.swap_columns(t, bj);
        loop {
            let mut done = true;
            // clear column t
            for i in (t + 1)..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                for j in t..cols {
                    let v = a[(i, j)].clone() - q.clone() * a[(t, j)].clone();
                    a[(i, j)] = v;
                }
                if !a[(i, t)].is_zero() {
                    a.swap_rows(t, i);
                    done = false;
                }
            }
            // clear row t
            for j in (t + 1)..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_axpy(&mut a, j, t, &q);
                if !a[(t, j)].is_zero() {
                    a.swap_columns(t, j);
                    done = false;
                }
            }
            if !done {
                continue;
            }
            // enforce divisibility on the trailing block
            let p = a[(t, t)].clone();
            let bad = ((t + 1)..rows)
                .flat_map(|i| ((t + 1)..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[(t, j)].clone() + a[(i, j)].clone();
                        a[(t, j)] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[(t, t)].abs());
    }
    SmithInvariants { diagonal: diag }
}
