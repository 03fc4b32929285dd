//! Generalized `(q,t)`-Kostka coefficients `K_{ΩΛ}(q,t)`, their composition
//! form `K_{ωη}`, and sweeps over the relations and conjectures they satisfy.
mod conjectures;
mod identities;
mod relations;
mod report;
mod table;

pub use conjectures::{check_conjectures, ConjectureReport};
pub use identities::verify_identities;
pub use relations::verify_kostka_relations;
pub use report::{Bounds, SuiteResult, VerificationReport, Witness};
pub use table::{
    expand_mod_Lm, kostka_composition, kostka_table, kostka_table_in, plethystic_k_coeffs, KostkaEntry, KostkaTable,
};
