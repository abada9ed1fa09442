//! Exact arithmetic in prime fields and their extensions.

pub mod arith;
mod field;
mod poly;
mod ring;
mod subfield;

pub use field::{Elem, Field, DEFAULT_FIELD_CAP, LOG_TABLE_LIMIT};
pub use poly::Poly;
pub use ring::is_irreducible_by_trial_division;
pub use subfield::SubfieldEmbedding;
