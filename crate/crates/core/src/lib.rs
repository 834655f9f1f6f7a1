//! Gröbner-basis tests for the arithmetically Cohen-Macaulay property of
//! projective monomial curves.
//!
//! Given `a_1, ..., a_n` with gcd one and `a_n` the largest entry, the crate
//! computes reduced bases of the toric ideal `I(a)`, of its homogenization,
//! of `(x_n, I(a))` and of the dual sequence's ideals, and evaluates every
//! combinatorial Cohen-Macaulay criterion on them. All coefficients are
//! `+1`/`-1`, so results are independent of the ground field.
//!
//! ```
//! use monocurve::{is_acm, Sequence};
//!
//! let report = is_acm(&Sequence::parse("6,7,9,10").unwrap()).unwrap();
//! assert!(report.verdict);
//! ```

pub mod apery;
pub mod binomial;
pub mod criteria;
pub mod error;
pub mod families;
pub mod groebner;
pub mod lattice;
pub mod monomial;
pub mod sequences;
pub mod toric;

pub use apery::{apery_set, cn_good, mu_values, phi, AperyTable, PhiIndex};
pub use binomial::{homogenize, normal_form, s_pair, PureDifference};
pub use criteria::{check_initial_bound, check_mk_bound, is_acm, is_acm_with, AcmReport, Analysis, Criteria};
pub use error::{Error, Result};
pub use groebner::{buchberger, interreduce, saturate_all_variables, GroebnerBasis};
pub use monomial::{deg_weighted, revlex_cmp, Monomial, OrderSpec, VarNames};
pub use sequences::{lattice_kernel_basis, sigma, LatticeVector, Sequence};
pub use toric::{
    gb_with_last_variable, initial_ideal, standard_monomials, toric_gb, toric_gb_from_matrix, Engine, Limits,
    MonomialIdeal, StandardMonomials,
};
