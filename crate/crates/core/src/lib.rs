//! Weighted projective Reed-Muller codes over the weighted projective torus
//! `T(w_1, ..., w_s)` over GF(q).
//!
//! The crate builds the evaluation codes `C_T(d)`, computes their exact
//! parameters by brute force, and provides the closed forms they are checked
//! against: the lattice description of the vanishing ideal, the Hilbert
//! series and index of regularity, and dimension and minimum distance on the
//! one-dimensional torus `T(w_1, w_2)`.
//!
//! The exhaustive loops run on rayon when the default `parallel` feature is
//! enabled; every result is independent of the schedule.

pub mod arith;
pub mod binomial;
pub mod code;
pub mod error;
pub mod field;
pub mod guard;
pub mod hilbert;
pub mod linalg;
pub mod par;
pub mod semigroup;
pub mod torus;

pub use binomial::{
    in_defining_lattice, in_vanishing_ideal, is_homogeneous, scale_binomial,
    vanishes_on_affine_torus, weighted_degree, Binomial, ExponentVector,
};
pub use code::{
    build_code, code_parameters, dimension, dimension_formula_1d, distance_formula_1d, is_mds,
    max_zeros_bound_1d, minimum_distance_bruteforce, parameter_table, standard_form,
    CodeParameters, EvaluationCode, StandardForm, TableRow,
};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use hilbert::{
    hilbert_function, index_of_regularity, semigroup_hilbert_series, torus_hilbert_series,
    HilbertSeries, IntegerPolynomial,
};
pub use par::Execution;
pub use semigroup::{
    herzog_condition, herzog_condition_any_order, herzog_generators, HerzogGenerator,
    SemigroupData, WeightVector,
};
pub use torus::{lemma_point, monomials_of_degree, orbit_of, torus_points, TorusPoint};
