//! Toric ideals from kernel lattices by successive saturation.

use crate::error::Result;
use crate::linalg::kernel_lattice_basis;
use crate::toric::binomial::{Binomial, TermOrder};
use crate::toric::buchberger::{buchberger_with, GbOptions};
use crate::IntMatrix;

/// A generating set of the toric ideal `I_A` of the columns of `m`.
///
/// The lattice basis binomials generate an ideal whose saturation by the
/// product of all variables is `I_A`. Saturation is done one variable at a
/// time: under a reverse-lex order with `x_v` smallest, dividing every element
/// of the reduced basis by its largest power of `x_v` yields `I : x_v^∞`.
/// Variables absent from every generator are skipped. The columns must admit
/// a grading (a configuration, or a matrix with a row of ones), otherwise the
/// generators are inhomogeneous and the engine refuses them.
pub fn toric_ideal(m: &IntMatrix) -> Result<Vec<Binomial>> {
    toric_ideal_with(m, None)
}

/// As [`toric_ideal`], with an S-pair budget per saturation step.
pub fn toric_ideal_with(m: &IntMatrix, max_pairs: Option<usize>) -> Result<Vec<Binomial>> {
    let n = m.cols();
    let mut gens: Vec<Binomial> = kernel_lattice_basis(m)
        .iter()
        .map(|u| Binomial::from_lattice_vector(u))
        .collect();
    if gens.is_empty() {
        return Ok(gens);
    }
    let mut saturated = 0u64;
    for v in 0..n {
        if gens.iter().all(|g| g.plus[v] == 0 && g.minus[v] == 0) {
            saturated |= 1 << v;
            continue;
        }
        let order = TermOrder::with_smallest(n, v);
        let opts = GbOptions {
            cancel_mask: saturated,
            max_pairs,
        };
        let gb = buchberger_with(&gens, &order, &opts)?;
        gens = gb
            .elements
            .into_iter()
            .map(|mut g| {
                g.cancel_on(1 << v);
                g
            })
            .collect();
        saturated |= 1 << v;
    }
    for g in &mut gens {
        g.cancel_common();
    }
    gens.retain(|g| !g.is_zero());
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::buchberger::buchberger_reduced;

    fn m(rows: usize, cols: usize, d: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, d).unwrap()
    }

    #[test]
    fn trivial_kernels() {
        assert!(toric_ideal(&IntMatrix::identity(3)).unwrap().is_empty());
        let c3 = m(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1]);
        assert!(toric_ideal(&c3).unwrap().is_empty());
    }

    #[test]
    fn square_edge_ring() {
        let c4 = m(4, 4, &[1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1]);
        let g = toric_ideal(&c4).unwrap();
        let gb = buchberger_reduced(&g, &TermOrder::standard(4)).unwrap();
        assert_eq!(gb.elements, vec![Binomial::new(vec![1, 0, 1, 0], vec![0, 1, 0, 1])]);
    }

    #[test]
    fn twisted_cubic_needs_saturation() {
        // (s^3, s^2 t, s t^2, t^3): ideal generated by three quadrics
        let a = m(2, 4, &[3, 2, 1, 0, 0, 1, 2, 3]);
        let g = toric_ideal(&a).unwrap();
        let gb = buchberger_reduced(&g, &TermOrder::standard(4)).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.elements.iter().all(|b| b.degree() == 2));
    }
}
