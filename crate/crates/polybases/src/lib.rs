//! Bases of the polynomial ring indexed by weak compositions, their tableau
//! models, and the positive change-of-basis combinatorics between them.
//!
//! The bases covered are the monomials, monomial and fundamental slide
//! polynomials, fundamental particles, Demazure atoms, quasi-key polynomials
//! and Demazure characters (key polynomials), together with the symmetric
//! Schur and quasisymmetric quasi-Schur polynomials. Every basis element is
//! materialized as an exact-integer sparse [`Polynomial`], usually by more
//! than one combinatorial description, so the descriptions can be
//! cross-checked against each other and against a brute-force triangular
//! expansion oracle.
//!
//! Module map:
//!
//! * [`composition`] — weak compositions, partitions, permutations, and the
//!   order/rewriting structure on them (dominance, refinement, left swaps,
//!   slide moves, Bruhat order).
//! * [`polynomial`] — sparse multivariate polynomials over the integers and
//!   the generic triangular change-of-basis engine.
//! * [`tableau`] — skyline diagrams, triple conditions, every semi-skyline
//!   and quasi-key tableau family, reverse SSYT, and destandardization.
//! * [`basis`] — constructors producing each basis element as a polynomial,
//!   with alternate methods retained for cross-checks, plus the stable-limit
//!   probe.
//! * [`expansion`] — the positivity poset on the bases, closed-form positive
//!   expansions along its relations, and the sweep harness that verifies
//!   positivity and exhibits negative witnesses off the poset.
//! * [`lr`] — skew skyline Littlewood-Richardson tableaux and the three
//!   rules for multiplying a basis element by a Schur polynomial.
//! * [`bijection`] — the column-filling and row-filling bijections between
//!   reverse SSYT, atom skyline fillings and column quasi-key tableaux.

pub mod basis;
pub mod bijection;
pub mod composition;
pub mod expansion;
pub mod lr;
pub mod polynomial;
pub mod tableau;

pub use basis::{schur_polynomial, quasi_schur_polynomial, BasisCache, BasisId, Method};
pub use composition::{Partition, Permutation, StrongComposition, WeakComposition};
pub use polynomial::{BasisExpansion, Polynomial};
pub use tableau::{Model, ReverseSsyt, SkylineFilling};

/// Errors produced by parsing, dispatch, and the data-driven operations.
///
/// Precondition violations on the pure order-theoretic predicates (length
/// mismatches in [`WeakComposition::dominates`] and friends) panic instead;
/// those are programmer errors, not input errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse {what}: {text:?}")]
    Parse { what: &'static str, text: String },
    #[error("unknown model id {0:?}")]
    UnknownModel(String),
    #[error("unknown basis id {0:?}")]
    UnknownBasis(String),
    #[error("method {method:?} is not available for basis {basis:?}")]
    UnknownMethod { basis: String, method: String },
    #[error("index {index} is inconsistent with basis {basis} in {nvars} variables")]
    InvalidIndex {
        basis: String,
        index: String,
        nvars: usize,
    },
    #[error("{from} does not expand positively in {to}; use the generic expansion")]
    NotAPosetRelation { from: String, to: String },
    #[error("swap destination row {0} is occupied or out of range")]
    SwapDestination(usize),
    #[error("swap source row {0} is empty")]
    SwapSourceEmpty(usize),
    #[error("basis generator broke the leading-term contract at {0}")]
    LeadingTermContract(String),
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
