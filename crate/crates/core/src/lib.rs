//! Narrow-sense Hermitian dual-containing constacyclic BCH codes of length
//! `n = (q^(2m) - 1)/(q + 1)` over `F_{q²}` for even `m >= 2`, and the quantum codes they give.
//!
//! [`formulas`] evaluates the closed forms for the defining-set size, [`cosets`] builds the
//! defining sets themselves, [`code_builder`] turns both into code parameters and generator
//! polynomials, and [`oracle`] cross-checks everything by brute force.

pub mod code_builder;
pub mod cosets;
pub mod error;
pub mod finite_field;
pub mod formulas;
pub mod oracle;
pub mod reference;
pub mod table;

pub use code_builder::{
    bch_bound_certificate, classical_params, generator_polynomial, quantum_params,
    ClassicalCodeParams, GeneratorPolynomial, QuantumCodeParams, Tower,
};
pub use cosets::{defining_set, is_dual_containing, make_frame, CodeFrame, DefiningSet};
pub use error::{Error, Result};
pub use formulas::{corollary_n, delta_max, script_n, FormulaReport};
