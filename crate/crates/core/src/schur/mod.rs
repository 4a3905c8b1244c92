//! Schur-basis arithmetic, Littlewood–Richardson coefficients, induced
//! characters of cyclic subgroups and the Schur-positivity lemma checks.

mod induced;
mod lemmas;
mod lr;
mod tableau;
mod vector;

pub use induced::{choose_beta, cyclic_induced, f_mu, g_mu};
pub use lemmas::{
    lemma_lhs, verify_lemma, verify_lemma_family, verify_schur_inequality, LemmaId, LemmaParams, LemmaReport,
    LemmaVariant, DEFAULT_MAX_N,
};
pub use lr::{lr_coefficient, lr_positive, schur_product};
pub use tableau::{is_lattice_word, t_lambda_alpha, SkewTableau};
pub use vector::SchurVector;
