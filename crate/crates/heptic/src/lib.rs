//! Klein's order-168 action on the complex projective plane, built from first
//! principles: the group and its seven conics, the basic invariants F, Φ, Ψ,
//! X, the special degree-15 equivariant map h, the K-parametrized form family
//! h_K, and a dynamics-driven root finder for the heptic resolvents R_K.

pub mod calculus;
pub mod decompose;
pub mod derivation;
pub mod equivariants;
pub mod invariants;
pub mod error;
pub mod field;
pub mod goldens;
pub mod group;
pub mod matrix;
pub mod molien;
pub mod poly;
pub mod transition;

pub use error::{AlgebraError, DeriveError, GroupError, SolveError, TableError};
