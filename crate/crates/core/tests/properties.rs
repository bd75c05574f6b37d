mod common;

use std::collections::BTreeSet;

use common::*;
use nefcert::config::homogenize;
use nefcert::linalg::{determinant, is_unimodular, max_minor_gcd, rank};
use nefcert::polytope::LatticePolytope;
use nefcert::toric::{
    buchberger_reduced, h_polynomial, initial_ideal, is_reduced, satisfies_buchberger_criterion, stanley_reisner,
    toric_ideal, TermOrder,
};
use nefcert::BigInt;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn square_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-4i64..=4, n), n))
}

/// Distinct points spanning `R^d`.
fn full_dim_points(d: usize, max: usize) -> impl Strategy<Value = Vec<Pt>> {
    prop::collection::btree_set(prop::collection::vec(-2i64..=2, d), d + 1..=max)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>())
        .prop_filter("full-dimensional", move |pts| {
            let diffs: Vec<Vec<i64>> = pts[1..].iter().map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect()).collect();
            rank_by_minors(&transpose(&diffs)) == d
        })
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let c = m.first().map_or(0, Vec::len);
    (0..c).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

fn polytope(pts: &[Pt]) -> LatticePolytope {
    LatticePolytope::from_points(&pts.iter().map(|p| to_big(p)).collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_matches_minor_oracle(m in small_matrix()) {
        prop_assert_eq!(rank(&matrix(&m)), rank_by_minors(&m));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in square_matrix()) {
        prop_assert_eq!(determinant(&matrix(&m)), BigInt::from(det(&m)));
    }

    #[test]
    fn unimodularity_matches_minor_oracle(m in small_matrix()) {
        prop_assert_eq!(is_unimodular(&matrix(&m)), unimodular_by_minors(&m));
    }

    #[test]
    fn max_minor_gcd_matches_oracle(m in small_matrix()) {
        prop_assume!(rank_by_minors(&m) == m.len());
        prop_assert_eq!(max_minor_gcd(&matrix(&m)), BigInt::from(minor_gcd(&m)));
    }

    #[test]
    fn facets_match_brute_force_2d(pts in full_dim_points(2, 7)) {
        let p = polytope(&pts);
        let got: BTreeSet<(Pt, i64)> = p.facets().inequalities.iter()
            .map(|(a, b)| (to_small(a), b.to_string().parse().unwrap()))
            .collect();
        prop_assert_eq!(got, brute_force_facets(&pts));
    }

    #[test]
    fn facets_match_brute_force_3d(pts in full_dim_points(3, 7)) {
        let p = polytope(&pts);
        let got: BTreeSet<(Pt, i64)> = p.facets().inequalities.iter()
            .map(|(a, b)| (to_small(a), b.to_string().parse().unwrap()))
            .collect();
        prop_assert_eq!(got, brute_force_facets(&pts));
    }

    #[test]
    fn lattice_points_match_box_scan(pts in full_dim_points(3, 6)) {
        let p = polytope(&pts);
        let got: Vec<Pt> = p.lattice_points().iter().map(|x| to_small(x)).collect();
        prop_assert_eq!(got, box_lattice_points(&pts, 1));
        prop_assert_eq!(p.dilate_count(2) as usize, box_lattice_points(&pts, 2).len());
    }

    #[test]
    fn h_star_matches_ehrhart_counts(pts in full_dim_points(2, 6)) {
        let p = polytope(&pts);
        let h = p.h_star().unwrap();
        prop_assert_eq!(h.coefficients().to_vec(), ehrhart_h_star(&pts));
        // h*_0 = 1, h*_1 = |P ∩ Z^d| - d - 1
        prop_assert_eq!(h.coefficients()[0], 1);
        let h1 = h.coefficients().get(1).copied().unwrap_or(0);
        prop_assert_eq!(h1 as usize, p.lattice_points().len() - 3);
    }

    #[test]
    fn h_star_matches_ehrhart_counts_3d(pts in full_dim_points(3, 5)) {
        prop_assert_eq!(polytope(&pts).h_star().unwrap().coefficients().to_vec(), ehrhart_h_star(&pts));
    }

    #[test]
    fn h_star_is_lattice_invariant(pts in full_dim_points(2, 6), t in prop::collection::vec(-5i64..=5, 2)) {
        let p = polytope(&pts);
        let h = p.h_star().unwrap();
        prop_assert_eq!(&p.negate().h_star().unwrap(), &h);
        prop_assert_eq!(&p.translate(&to_big(&t)).h_star().unwrap(), &h);
    }

    #[test]
    fn reflexive_iff_dual_facets_at_height_one(pts in full_dim_points(2, 7)) {
        let p = polytope(&pts);
        let interior = p.interior_lattice_points();
        let expected = interior.len() == 1 && {
            let c = to_small(&interior[0]);
            brute_force_facets(&pts).iter().all(|(a, b)| b - a.iter().zip(&c).map(|(x, y)| x * y).sum::<i64>() == 1)
        };
        prop_assert_eq!(p.reflexive_translation().is_some(), expected);
    }
}

/// Distinct points of `[0,2]^2`, homogenized.
fn small_configuration() -> impl Strategy<Value = Vec<Pt>> {
    prop::collection::btree_set(prop::collection::vec(0i64..=2, 2), 3..=6).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn toric_groebner_basis_is_correct(pts in small_configuration()) {
        let m = homogenize(&pts.iter().map(|p| to_big(p)).collect::<Vec<_>>()).unwrap();
        let n = m.cols();
        let cols: Vec<Pt> = (0..n).map(|j| to_small(&m.column(j))).collect();
        let gb = buchberger_reduced(&toric_ideal(&m).unwrap(), &TermOrder::standard(n)).unwrap();
        prop_assert!(is_reduced(&gb));
        prop_assert!(satisfies_buchberger_criterion(&gb));
        for b in &gb.elements {
            prop_assert!(b.is_homogeneous());
            let diff: Vec<i64> = b.plus.iter().zip(&b.minus).map(|(&p, &q)| p as i64 - q as i64).collect();
            for r in 0..m.rows() {
                prop_assert_eq!(cols.iter().zip(&diff).map(|(c, e)| c[r] * e).sum::<i64>(), 0);
            }
        }
        // The standard monomials of degree k are a basis of K[A]_k.
        for k in 1..=3 {
            prop_assert_eq!(standard_monomial_count(&gb.leading_terms(), n, k), sumset_count(&cols, k as usize));
        }
        // A squarefree initial ideal is a unimodular triangulation; compare
        // with h* when the points are all of P ∩ Z^2, so that ZA is the
        // lattice generated by P ∩ Z^2.
        let ini = initial_ideal(&gb);
        let p = polytope(&pts);
        if ini.is_squarefree() && p.lattice_points().len() == pts.len() {
            let h = h_polynomial(&stanley_reisner(&ini, n).unwrap()).unwrap();
            prop_assert_eq!(h, p.h_star_generated().unwrap());
        }
    }
}
