//! Eigenvalue multiplicities, minimal polynomials and the theorem scans.

mod minpoly;
mod multiplicity;
mod verify;

pub use minpoly::{alt_minimal_polynomial, cyclotomic, minimal_polynomial, render_polynomial, RootSet};
pub use multiplicity::{
    alt_eig_multiplicities, alt_has_invariant_vector, alt_has_minus_one, eig_multiplicities,
    eig_multiplicities_naive, has_invariant_vector, has_minus_one, maj_count_kw, ramanujan_sum,
    MultiplicityVector, ROUNDING_TOLERANCE,
};
pub use verify::{
    assemble, evaluate, expected_at, plan, verify_theorem, CaseKey, Finding, Mismatch, MismatchKind,
    TheoremId, VerificationReport,
};
