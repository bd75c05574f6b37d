//! Binomial ideals: toric ideals, Buchberger, initial ideals, Stanley–Reisner
//! complexes and structure checks.

pub mod binomial;
pub mod buchberger;
pub mod complex;
pub mod conform;
pub mod ideal;

pub use binomial::{Binomial, Monomial, TermOrder};
pub use buchberger::{
    buchberger_reduced, buchberger_with, is_reduced, reduces_to_zero, satisfies_buchberger_criterion, GbOptions,
    GroebnerBasis,
};
pub use complex::{
    h_polynomial, initial_ideal, is_squarefree, stanley_reisner, triangulation_unimodular, MonomialIdeal,
    SimplicialComplex,
};
pub use conform::{
    conform_azero, conform_azero_with, conform_cayley, conform_cayley_with, conform_pm, ClauseCheck, Conformance,
    NamedBinomial,
};
pub use ideal::{toric_ideal, toric_ideal_with};
