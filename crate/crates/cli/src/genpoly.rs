use serde::{Deserialize, Serialize};

use ccbch_core::code_builder::{generator_polynomial_for_set, Tower};
use ccbch_core::finite_field::{Elem, Field};
use ccbch_core::table::SCHEMA_VERSION;
use ccbch_core::{is_dual_containing, CodeFrame, DefiningSet, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerInfo {
    pub p: u64,
    pub degree: u32,
    pub order: u64,
    /// Lowest degree first.
    pub modulus: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfieldInfo {
    pub order: u64,
    pub modulus: Vec<u32>,
    /// The subfield generator is `β^step`.
    pub step: u64,
}

/// An element of `F_{q²}`: discrete log to the subfield generator and its `F_p` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub log: Option<u64>,
    pub vector: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenpolyRecord {
    pub schema_version: String,
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub delta: u64,
    pub tower: TowerInfo,
    pub subfield: SubfieldInfo,
    pub eta: ElementRecord,
    pub degree: usize,
    /// Lowest degree first.
    pub coefficients: Vec<ElementRecord>,
    pub dual_containing: bool,
    /// `x^n - η` leaves no remainder modulo `g`.
    pub remainder_zero: bool,
}

fn element(f: &Field, x: Elem) -> ElementRecord {
    ElementRecord {
        log: f.log(x),
        vector: f.coordinates(x),
    }
}

pub fn genpoly_record(frame: &CodeFrame, delta: u64, cap: u64) -> Result<GenpolyRecord> {
    let t = DefiningSet::new(frame, delta)?;
    let tower = Tower::with_cap(frame, cap)?;
    let g = generator_polynomial_for_set(&tower, &t)?;
    let small = g.field();
    let big = tower.big();
    Ok(GenpolyRecord {
        schema_version: SCHEMA_VERSION.to_string(),
        q: frame.q(),
        m: frame.m(),
        n: frame.n(),
        delta,
        tower: TowerInfo {
            p: big.characteristic(),
            degree: big.degree(),
            order: big.order(),
            modulus: big.modulus().to_vec(),
        },
        subfield: SubfieldInfo {
            order: small.order(),
            modulus: small.modulus().to_vec(),
            step: tower.embedding().step(),
        },
        eta: element(small, g.eta()),
        degree: g.degree(),
        coefficients: g.poly().coeffs().iter().map(|&c| element(small, c)).collect(),
        dual_containing: is_dual_containing(&t),
        remainder_zero: g.remainder_of_modulus()?.is_zero(),
    })
}
