use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use super::arith::{is_prime, prime_factors};
use super::ring::QuotientRing;
use crate::error::{Error, Result};

/// Largest field order accepted unless a caller raises the cap.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 26;

/// Fields up to this order get discrete-log tables.
pub const LOG_TABLE_LIMIT: u64 = 1 << 20;

static NEXT_FIELD_ID: AtomicU64 = AtomicU64::new(1);

/// A field element, packed as the base-`p` integer whose digits are its coordinates in
/// the polynomial basis `1, x, ..., x^(e-1)` of its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field `F_{p^e} = F_p[x]/(f)` for a monic primitive `f`; the residue of `x` is the
/// distinguished generator. Immutable once built.
#[derive(Debug, Clone)]
pub struct Field {
    id: u64,
    ring: QuotientRing,
    generator: u32,
    tables: Option<LogTables>,
}

impl Field {
    /// Builds `F_{p^e}` under the default capacity cap.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::with_cap(p, e, DEFAULT_FIELD_CAP)
    }

    /// Builds `F_{p^e}` with the lexicographically smallest monic primitive modulus: the one
    /// whose coefficient vector, read as base-`p` digits lowest degree first, is the smallest
    /// integer. For `e = 1` the generator is the smallest primitive root mod `p`.
    pub fn with_cap(p: u64, e: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::OutOfRange {
                what: "extension degree",
                value: 0,
                min: 1,
                max: 32,
            });
        }
        let limit = cap.min(u32::MAX as u64);
        let order = super::arith::checked_pow(p, e)
            .filter(|&o| o <= limit as u128)
            .ok_or(Error::CapacityExceeded {
                what: "field order",
                value: super::arith::checked_pow(p, e).unwrap_or(u128::MAX),
                limit: limit as u128,
            })? as u64;
        let p32 = p as u32;
        let factors = prime_factors(order - 1);

        let modulus = if e == 1 {
            let g = (1..p32)
                .find(|&g| {
                    let ring = QuotientRing::new(p32, vec![(p32 - g) % p32, 1]);
                    ring.x_is_primitive(&factors)
                })
                .unwrap_or(1);
            vec![(p32 - g) % p32, 1]
        } else {
            let digits = e as usize;
            (1..order)
                .filter(|low| low % p != 0)
                .map(|low| {
                    let mut coeffs: Vec<u32> = (0..digits)
                        .map(|i| ((low / p.pow(i as u32)) % p) as u32)
                        .collect();
                    coeffs.push(1);
                    coeffs
                })
                .find(|coeffs| QuotientRing::new(p32, coeffs.clone()).x_is_primitive(&factors))
                .ok_or_else(|| Error::Internal(format!("no primitive polynomial of degree {e} over F_{p}")))?
        };
        Ok(Self::from_ring(QuotientRing::new(p32, modulus)))
    }

    /// Builds the field defined by an explicit monic `modulus` (lowest degree first), which
    /// must be primitive: the residue of `x` becomes the generator.
    pub fn from_modulus(p: u64, modulus: &[u32], cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let e = modulus.len().saturating_sub(1) as u32;
        if e == 0 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c as u64 >= p) {
            return Err(Error::NotPrimitive { p: p as u32 });
        }
        let limit = cap.min(u32::MAX as u64);
        let order = super::arith::checked_pow(p, e).unwrap_or(u128::MAX);
        if order > limit as u128 {
            return Err(Error::CapacityExceeded {
                what: "field order",
                value: order,
                limit: limit as u128,
            });
        }
        let ring = QuotientRing::new(p as u32, modulus.to_vec());
        if !ring.x_is_primitive(&prime_factors(order as u64 - 1)) {
            return Err(Error::NotPrimitive { p: p as u32 });
        }
        Ok(Self::from_ring(ring))
    }

    fn from_ring(ring: QuotientRing) -> Self {
        let generator = ring.x();
        let order = ring.order();
        let tables = (order <= LOG_TABLE_LIMIT).then(|| {
            let n = (order - 1) as usize;
            let mut exp = Vec::with_capacity(n);
            let mut log = vec![0u32; order as usize];
            let mut cur = 1u32;
            for i in 0..n {
                exp.push(cur);
                log[cur as usize] = i as u32;
                cur = ring.mul_x(cur);
            }
            LogTables { exp, log }
        });
        Self {
            id: NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed),
            ring,
            generator,
            tables,
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.p() as u64
    }

    pub fn degree(&self) -> u32 {
        self.ring.degree() as u32
    }

    pub fn order(&self) -> u64 {
        self.ring.order()
    }

    /// Monic modulus, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        self.ring.modulus()
    }

    pub fn generator(&self) -> Elem {
        Elem(self.generator)
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn element(&self, index: u64) -> Result<Elem> {
        if index >= self.order() {
            return Err(Error::OutOfRange {
                what: "element index",
                value: index,
                min: 0,
                max: self.order() - 1,
            });
        }
        Ok(Elem(index as u32))
    }

    /// Coordinates over `F_p` in the basis `1, x, ..., x^(e-1)`.
    pub fn coordinates(&self, a: Elem) -> Vec<u32> {
        let mut out = vec![0u32; self.ring.degree()];
        self.ring.digits(a.0, &mut out);
        out
    }

    pub fn from_coordinates(&self, coords: &[u32]) -> Result<Elem> {
        if coords.len() != self.ring.degree() || coords.iter().any(|&c| c as u64 >= self.characteristic()) {
            return Err(Error::Internal("coordinate vector does not fit the field".into()));
        }
        Ok(Elem(self.ring.encode(coords)))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.ring.add(a.0, b.0))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.ring.sub(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.ring.neg(a.0))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    return Elem::ZERO;
                }
                let n = t.exp.len();
                let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[if s >= n { s - n } else { s }])
            }
            None => Elem(self.ring.mul(a.0, b.0)),
        }
    }

    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if exp == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = t.exp.len() as u128;
                let k = (t.log[a.0 as usize] as u128 * exp as u128) % n;
                Elem(t.exp[k as usize])
            }
            None => Elem(self.ring.pow(a.0, exp)),
        }
    }

    /// `g^k` for the distinguished generator `g`.
    pub fn gen_pow(&self, k: u64) -> Elem {
        let n = self.order() - 1;
        match &self.tables {
            Some(t) => Elem(t.exp[(k % n) as usize]),
            None => Elem(self.ring.pow(self.generator, k % n)),
        }
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// Absolute Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.characteristic())
    }

    /// Discrete logarithm to the base of the distinguished generator; `None` for zero.
    /// Table lookup when available, baby-step giant-step otherwise.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.is_zero() || a.0 as u64 >= self.order() {
            return None;
        }
        if let Some(t) = &self.tables {
            return Some(t.log[a.0 as usize] as u64);
        }
        let n = self.order() - 1;
        let step = (n as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = Elem::ONE;
        for j in 0..step {
            baby.entry(cur).or_insert(j);
            cur = self.mul(cur, self.generator());
        }
        let giant = self.inv(self.gen_pow(step))?;
        let mut gamma = a;
        for i in 0..=step {
            if let Some(&j) = baby.get(&gamma) {
                return Some((i * step + j) % n);
            }
            gamma = self.mul(gamma, giant);
        }
        None
    }

    /// Multiplicative order of a nonzero element, via the factorization of `order - 1`.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.order() - 1;
        for l in prime_factors(ord) {
            while ord.is_multiple_of(l) && self.pow(a, ord / l) == Elem::ONE {
                ord /= l;
            }
        }
        Some(ord)
    }

    /// Whether `x` lies in the subfield of order `small_order`, i.e. `x^small_order = x`.
    pub fn element_in_subfield(&self, x: Elem, small_order: u64) -> Result<bool> {
        self.subfield_degree(small_order)?;
        Ok(self.pow(x, small_order) == x)
    }

    /// Degree over `F_p` of the subfield of order `small_order`.
    pub(crate) fn subfield_degree(&self, small_order: u64) -> Result<u32> {
        let not_sub = Error::NotASubfield {
            small: small_order,
            big: self.order(),
        };
        let p = self.characteristic();
        let mut d = 0u32;
        let mut acc = 1u64;
        while acc < small_order {
            acc = acc.checked_mul(p).ok_or(not_sub.clone())?;
            d += 1;
        }
        if acc != small_order || d == 0 || !self.degree().is_multiple_of(d) {
            return Err(not_sub);
        }
        Ok(d)
    }

    pub(crate) fn check_same(&self, field_id: u64) -> Result<()> {
        if field_id == self.id {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exhaustive_order(f: &Field, a: Elem) -> u64 {
        let mut cur = a;
        let mut k = 1;
        while cur != Elem::ONE {
            cur = f.mul(cur, a);
            k += 1;
        }
        k
    }

    #[test]
    fn f2_has_generator_one() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.generator(), Elem::ONE);
        assert_eq!(f.multiplicative_order(f.generator()), Some(1));
    }

    #[test]
    fn f16_uses_x4_x_1() {
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(f.generator(), Elem(2));
        assert_eq!(exhaustive_order(&f, f.generator()), 15);
        // every nonzero element is a power of the generator
        let mut seen: Vec<u32> = (0..15).map(|k| f.gen_pow(k).0).collect();
        seen.sort_unstable();
        assert_eq!(seen, (1..16).collect::<Vec<_>>());
    }

    #[test]
    fn f81_generator_order_80() {
        let f = Field::new(3, 4).unwrap();
        assert_eq!(exhaustive_order(&f, f.generator()), 80);
        assert!(super::super::ring::is_irreducible_by_trial_division(3, f.modulus()));
    }

    #[test]
    fn prime_field_uses_smallest_primitive_root() {
        assert_eq!(Field::new(7, 1).unwrap().generator(), Elem(3));
        assert_eq!(Field::new(5, 1).unwrap().generator(), Elem(2));
        assert_eq!(Field::new(3, 1).unwrap().generator(), Elem(2));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(Field::new(4, 2).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::new(2, 27).unwrap_err(),
            Error::CapacityExceeded { .. }
        ));
        assert!(Field::with_cap(2, 27, 1 << 27).is_ok());
    }

    #[test]
    fn table_and_ring_paths_agree() {
        let tab = Field::new(3, 4).unwrap();
        let plain = Field::from_ring(QuotientRing::new(3, tab.modulus().to_vec()));
        assert!(tab.has_log_tables());
        for a in 0..81 {
            for b in (0..81).step_by(7) {
                assert_eq!(tab.mul(Elem(a), Elem(b)).0, plain.ring.mul(a, b));
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = Field::new(7, 8).unwrap();
        assert!(!f.has_log_tables());
        assert_eq!(f.order(), 5_764_801);
        assert_eq!(f.multiplicative_order(f.generator()), Some(5_764_800));
        let a = f.gen_pow(1_234_567);
        assert_eq!(f.log(a), Some(1_234_567));
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
    }

    #[test]
    fn subfield_membership() {
        let f = Field::new(2, 4).unwrap();
        assert!(f.element_in_subfield(Elem::ZERO, 4).unwrap());
        assert!(!f.element_in_subfield(f.generator(), 4).unwrap());
        assert!(f.element_in_subfield(f.gen_pow(5), 4).unwrap());
        let f8 = Field::new(2, 3).unwrap();
        assert!(matches!(
            f8.element_in_subfield(Elem::ONE, 4),
            Err(Error::NotASubfield { .. })
        ));
    }
}
