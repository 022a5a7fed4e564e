//! Finite regular semigroups and three structures that each determine
//! them up to isomorphism: inductive groupoids, cross-connections of
//! normal categories, and the translations between the two.

pub mod biorder;
pub mod category;
pub mod corpus;
pub mod cxn;
pub mod cxn_from_ind;
pub mod dot;
pub mod echain;
pub mod ind_from_cxn;
pub mod inductive;
pub mod pipeline;
pub mod relation;
pub mod report;
pub mod semigroup;

pub use semigroup::{FiniteSemigroup, SemigroupError};
