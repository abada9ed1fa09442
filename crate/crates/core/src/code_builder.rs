//! Classical and quantum parameters, explicit generator polynomials, and the BCH-bound
//! certificate for the narrow-sense codes of a [`CodeFrame`].

use std::sync::Arc;

use serde::Serialize;

use crate::cosets::{defining_set, is_dual_containing, CodeFrame, CosetUnion, DefiningSet};
use crate::error::{Error, Result};
use crate::finite_field::{Elem, Field, Poly, SubfieldEmbedding, DEFAULT_FIELD_CAP};
use crate::formulas::{script_n, FormulaReport};

/// `[n, k, >= δ]` over `F_{q²}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalCodeParams {
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub k: u64,
    pub delta: u64,
    pub dual_containing: bool,
    pub defining_set_size: u64,
}

/// `[[n, k, >= δ]]_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantumCodeParams {
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub k: u64,
    pub delta: u64,
}

impl ClassicalCodeParams {
    fn assemble(frame: &CodeFrame, report: &FormulaReport, size: u64, dual: bool) -> Result<Self> {
        if size != report.script_n {
            return Err(Error::Internal(format!(
                "closed form gives {} but the defining set at delta = {} has {} elements",
                report.script_n, report.delta, size
            )));
        }
        if !dual {
            return Err(Error::Internal(format!(
                "defining set at delta = {} <= delta_max meets its -q image",
                report.delta
            )));
        }
        Ok(Self {
            q: frame.q(),
            m: frame.m(),
            n: frame.n(),
            k: frame.n() - size,
            delta: report.delta,
            dual_containing: dual,
            defining_set_size: size,
        })
    }

    /// Hermitian construction `[n, k] -> [[n, 2k - n]]`.
    pub fn quantum(&self) -> QuantumCodeParams {
        QuantumCodeParams {
            q: self.q,
            m: self.m,
            n: self.n,
            k: 2 * self.k - self.n,
            delta: self.delta,
        }
    }
}

impl std::fmt::Display for ClassicalCodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},≥{}]_{}", self.n, self.k, self.delta, self.q * self.q)
    }
}

impl std::fmt::Display for QuantumCodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},≥{}]]_{}", self.n, self.k, self.delta, self.q)
    }
}

/// Parameters of the dual-containing code with design distance `δ`, cross-checked against the
/// explicit defining set. Refuses `δ > δ^max`.
pub fn classical_params(frame: &CodeFrame, delta: u64) -> Result<ClassicalCodeParams> {
    let report = script_n(frame, delta)?;
    let t = defining_set(frame, delta)?;
    ClassicalCodeParams::assemble(frame, &report, t.len() as u64, is_dual_containing(&t))
}

pub fn quantum_params(frame: &CodeFrame, delta: u64) -> Result<QuantumCodeParams> {
    Ok(classical_params(frame, delta)?.quantum())
}

/// [`classical_params`] for every `δ` in `[lo, hi]`, growing one defining set incrementally.
pub fn classical_params_range(
    frame: &CodeFrame,
    lo: u64,
    hi: u64,
) -> Result<Vec<(FormulaReport, ClassicalCodeParams)>> {
    script_n(frame, lo)?;
    script_n(frame, hi)?;
    let mut union = CosetUnion::new(frame);
    while union.delta() < lo {
        union.advance();
    }
    let mut out = Vec::with_capacity((hi.saturating_sub(lo) + 1) as usize);
    for delta in lo..=hi {
        let report = script_n(frame, delta)?;
        let params =
            ClassicalCodeParams::assemble(frame, &report, union.size(), union.is_dual_containing())?;
        out.push((report, params));
        if delta < hi {
            union.advance();
        }
    }
    Ok(out)
}

/// Largest `Δ` such that `Δ - 1` cyclically consecutive root indices `i` have `1 + r i ∈ T`.
pub fn bch_bound_certificate(t: &DefiningSet) -> u64 {
    let frame = t.frame();
    let n = frame.n() as usize;
    let mut present = vec![false; n];
    for &e in t.elements() {
        present[((e - 1) / frame.r()) as usize] = true;
    }
    if present.iter().all(|&b| b) {
        return n as u64 + 1;
    }
    let start = present.iter().position(|&b| !b).unwrap_or(0);
    let (mut best, mut run) = (0usize, 0usize);
    for k in 1..=n {
        if present[(start + k) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best as u64 + 1
}

/// `F_{q^(2m)}` together with its subfield `F_{q²}`.
#[derive(Debug, Clone)]
pub struct Tower {
    frame: CodeFrame,
    big: Arc<Field>,
    embedding: SubfieldEmbedding,
}

impl Tower {
    pub fn new(frame: &CodeFrame) -> Result<Self> {
        Self::with_cap(frame, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(frame: &CodeFrame, cap: u64) -> Result<Self> {
        let big = Field::with_cap(frame.p(), 2 * frame.m() * frame.s(), cap)?;
        let embedding = big.subfield_embedding(frame.q() * frame.q())?;
        Ok(Self {
            frame: *frame,
            big: Arc::new(big),
            embedding,
        })
    }

    pub fn frame(&self) -> &CodeFrame {
        &self.frame
    }

    /// `F_{q^(2m)}`, whose generator is `β`.
    pub fn big(&self) -> &Field {
        &self.big
    }

    /// `F_{q²}`, whose generator maps to `β^((q^(2m)-1)/(q²-1))`.
    pub fn small(&self) -> &Field {
        self.embedding.small()
    }

    pub fn small_arc(&self) -> Arc<Field> {
        self.embedding.small_arc()
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }

    /// `η = β^n`, of order `q + 1`, as an element of `F_{q²}`.
    pub fn eta(&self) -> Result<Elem> {
        let b = self.big.gen_pow(self.frame.n());
        self.embedding
            .restrict(&self.big, b)?
            .ok_or(Error::Internal("beta^n is not in F_{q^2}".into()))
    }
}

/// Monic `g(x) = ∏_{j ∈ T} (x - β^j)` with coefficients in `F_{q²}`.
#[derive(Debug, Clone)]
pub struct GeneratorPolynomial {
    frame: CodeFrame,
    delta: u64,
    small: Arc<Field>,
    tower_modulus: Vec<u32>,
    eta: Elem,
    poly: Poly,
}

impl GeneratorPolynomial {
    pub fn frame(&self) -> &CodeFrame {
        &self.frame
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// The coefficient field `F_{q²}`.
    pub fn field(&self) -> &Field {
        &self.small
    }

    pub fn field_arc(&self) -> Arc<Field> {
        Arc::clone(&self.small)
    }

    /// Modulus of `F_{q^(2m)}` over `F_p`, lowest degree first.
    pub fn tower_modulus(&self) -> &[u32] {
        &self.tower_modulus
    }

    pub fn eta(&self) -> Elem {
        self.eta
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// `x^n - η`.
    pub fn modulus(&self) -> Poly {
        let f = &self.small;
        let mut c = vec![Elem::ZERO; self.frame.n() as usize + 1];
        c[0] = f.neg(self.eta);
        c[self.frame.n() as usize] = Elem::ONE;
        f.poly(c)
    }

    /// `(x^n - η) mod g`, computed without expanding `x^n`.
    pub fn remainder_of_modulus(&self) -> Result<Poly> {
        let f = &self.small;
        let xn = f.poly_x_pow_mod(self.frame.n(), &self.poly)?;
        f.poly_sub(&xn, &f.poly(vec![self.eta]))
            .and_then(|p| f.poly_rem(&p, &self.poly))
    }
}

pub fn generator_polynomial(frame: &CodeFrame, delta: u64) -> Result<GeneratorPolynomial> {
    generator_polynomial_in(&Tower::new(frame)?, delta)
}

pub fn generator_polynomial_in(tower: &Tower, delta: u64) -> Result<GeneratorPolynomial> {
    let t = defining_set(tower.frame(), delta)?;
    generator_polynomial_for_set(tower, &t)
}

/// Generator polynomial of an explicit defining set, which may lie past `δ^max`.
pub fn generator_polynomial_for_set(tower: &Tower, t: &DefiningSet) -> Result<GeneratorPolynomial> {
    let big = tower.big();
    // product of linear factors, highest coefficient last
    let mut acc = vec![Elem::ONE];
    for &j in t.elements() {
        let root = big.neg(big.gen_pow(j));
        acc.push(Elem::ZERO);
        for i in (1..acc.len()).rev() {
            acc[i] = big.add(acc[i - 1], big.mul(acc[i], root));
        }
        acc[0] = big.mul(acc[0], root);
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            tower
                .embedding()
                .restrict(big, c)?
                .ok_or(Error::Internal("generator coefficient outside F_{q^2}".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorPolynomial {
        frame: *tower.frame(),
        delta: t.delta(),
        small: tower.small_arc(),
        tower_modulus: big.modulus().to_vec(),
        eta: tower.eta()?,
        poly: tower.small().poly(coeffs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::make_frame;

    #[test]
    fn small_classical_examples() {
        let show = |q, m, d| classical_params(&make_frame(q, m).unwrap(), d).unwrap().to_string();
        assert_eq!(show(2, 2, 3), "[5,3,≥3]_4");
        assert_eq!(show(3, 2, 5), "[20,14,≥5]_9");
        assert_eq!(show(2, 4, 8), "[85,65,≥8]_4");
    }

    #[test]
    fn quantum_examples() {
        let show = |q, m, d| quantum_params(&make_frame(q, m).unwrap(), d).unwrap().to_string();
        assert_eq!(show(5, 2, 19), "[[104,40,≥19]]_5");
        assert_eq!(show(7, 2, 33), "[[300,180,≥33]]_7");
        assert_eq!(show(4, 2, 5), "[[51,39,≥5]]_4");
        assert!(matches!(
            quantum_params(&make_frame(5, 2).unwrap(), 20),
            Err(Error::DeltaOutOfRange { .. })
        ));
    }

    #[test]
    fn range_matches_pointwise() {
        let f = make_frame(4, 2).unwrap();
        let rows = classical_params_range(&f, 2, 11).unwrap();
        for (report, params) in rows {
            assert_eq!(params, classical_params(&f, report.delta).unwrap());
        }
        assert!(classical_params_range(&f, 2, 12).is_err());
    }

    #[test]
    fn certificates() {
        let f = make_frame(2, 2).unwrap();
        assert_eq!(bch_bound_certificate(&defining_set(&f, 3).unwrap()), 3);
        let f = make_frame(3, 2).unwrap();
        assert!(bch_bound_certificate(&defining_set(&f, 4).unwrap()) >= 4);
        let f = make_frame(5, 2).unwrap();
        assert!(bch_bound_certificate(&defining_set(&f, 19).unwrap()) >= 19);
    }

    #[test]
    fn generator_for_q2_m2() {
        let f = make_frame(2, 2).unwrap();
        let g = generator_polynomial(&f, 3).unwrap();
        assert_eq!(g.degree(), 2);
        assert!(g.poly().is_monic());
        assert!(g.remainder_of_modulus().unwrap().is_zero());
        assert_eq!(g.field().multiplicative_order(g.eta()), Some(3));
        let g2 = generator_polynomial(&f, 2).unwrap();
        assert_eq!(g2.poly().coeffs(), g.poly().coeffs());
    }

    #[test]
    fn generator_divides_by_long_division() {
        let f = make_frame(3, 2).unwrap();
        let g = generator_polynomial(&f, 4).unwrap();
        assert_eq!(g.degree(), 4);
        let (_, r) = g.field().poly_divmod(&g.modulus(), g.poly()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn tower_respects_cap() {
        let f = make_frame(3, 4).unwrap();
        assert!(matches!(
            Tower::with_cap(&f, 1 << 12),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
