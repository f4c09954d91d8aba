//! Finite groups as dense multiplication tables, with exact computation of
//! minimal right Engel sinks, γ_k-value sets and Fitting-type structure.
//!
//! Conventions: permutations compose left to right, `[a, b] = a⁻¹b⁻¹ab`,
//! `a^b = b⁻¹ab`, and commutators are left-normed, `[a, b, c] = [[a, b], c]`.

pub mod constructors;
pub mod engel;
pub mod error;
pub mod perm;
pub mod product;
pub mod set;
pub mod spec;
pub mod structure;
mod subgroup;
pub mod table;
pub mod verify;
pub mod word;

pub use constructors::FamilySpec;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use product::{direct_power, direct_product, semidirect_product, Quotient};
pub use set::ElementSet;
pub use spec::{GroupSource, GroupSpec};
pub use table::{close_generators, GroupTable, DEFAULT_ORDER_CAP, MAX_ORDER};
pub use word::Word;
