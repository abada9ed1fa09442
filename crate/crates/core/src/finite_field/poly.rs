use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Polynomial over a [`Field`], lowest degree first, with no trailing zeros.
/// Carries the id of its field; mixing fields is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field_id: u64,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn field_id(&self) -> u64 {
        self.field_id
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&Elem::ZERO) {
            self.coeffs.pop();
        }
        self
    }
}

impl Field {
    pub fn poly(&self, coeffs: Vec<Elem>) -> Poly {
        Poly {
            field_id: self.id(),
            coeffs,
        }
        .trimmed()
    }

    pub fn poly_zero(&self) -> Poly {
        self.poly(Vec::new())
    }

    /// `c * x^k`.
    pub fn monomial(&self, c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        self.poly(coeffs)
    }

    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.check_same(a.field_id)?;
        self.check_same(b.field_id)?;
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|i| self.add(a.coeff(i), b.coeff(i))).collect();
        Ok(self.poly(coeffs))
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.check_same(a.field_id)?;
        self.check_same(b.field_id)?;
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect();
        Ok(self.poly(coeffs))
    }

    pub fn poly_scale(&self, a: &Poly, c: Elem) -> Result<Poly> {
        self.check_same(a.field_id)?;
        Ok(self.poly(a.coeffs.iter().map(|&x| self.mul(x, c)).collect()))
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.check_same(a.field_id)?;
        self.check_same(b.field_id)?;
        if a.is_zero() || b.is_zero() {
            return Ok(self.poly_zero());
        }
        let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Ok(self.poly(out))
    }

    /// Returns `(quotient, remainder)` with `deg(remainder) < deg(divisor)`.
    pub fn poly_divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        self.check_same(a.field_id)?;
        self.check_same(b.field_id)?;
        let db = b.degree().ok_or(Error::DivisorZero)?;
        let lead_inv = self.inv(b.leading()).ok_or(Error::DivisorZero)?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((self.poly_zero(), a.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - db] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = self.sub(rem[idx], self.mul(c, bj));
            }
        }
        rem.truncate(db);
        Ok((self.poly(quot), self.poly(rem)))
    }

    pub fn poly_rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.poly_divmod(a, b)?.1)
    }

    /// Horner evaluation.
    pub fn poly_eval(&self, a: &Poly, x: Elem) -> Result<Elem> {
        self.check_same(a.field_id)?;
        Ok(a
            .coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.add(self.mul(acc, x), c)))
    }

    /// `x^k mod modulus` by square-and-multiply; never materializes `x^k`.
    pub fn poly_x_pow_mod(&self, k: u64, modulus: &Poly) -> Result<Poly> {
        self.check_same(modulus.field_id)?;
        if modulus.degree().ok_or(Error::DivisorZero)? == 0 {
            return Ok(self.poly_zero());
        }
        let x = self.monomial(Elem::ONE, 1);
        let mut acc = self.poly(vec![Elem::ONE]);
        for bit in (0..64 - k.leading_zeros()).rev() {
            acc = self.poly_rem(&self.poly_mul(&acc, &acc)?, modulus)?;
            if (k >> bit) & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &x)?, modulus)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, c: &[u32]) -> Poly {
        f.poly(c.iter().map(|&x| Elem(x)).collect())
    }

    #[test]
    fn square_of_x_plus_one_over_f2() {
        let f = Field::new(2, 1).unwrap();
        let a = p(&f, &[1, 1]);
        assert_eq!(f.poly_mul(&a, &a).unwrap(), p(&f, &[1, 0, 1]));
        assert_eq!(f.poly_eval(&p(&f, &[1, 0, 1]), Elem::ONE).unwrap(), Elem::ZERO);
    }

    #[test]
    fn divmod_over_f3() {
        let f = Field::new(3, 1).unwrap();
        // x^4 - 1 = (x^2 - 1)(x^2 + 1)
        let a = p(&f, &[2, 0, 0, 0, 1]);
        let b = p(&f, &[2, 0, 1]);
        let (q, r) = f.poly_divmod(&a, &b).unwrap();
        assert_eq!(q, p(&f, &[1, 0, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn errors() {
        let f = Field::new(3, 1).unwrap();
        let g = Field::new(3, 1).unwrap();
        let a = p(&f, &[1, 1]);
        assert_eq!(f.poly_divmod(&a, &f.poly_zero()), Err(Error::DivisorZero));
        assert_eq!(f.poly_mul(&a, &p(&g, &[1])), Err(Error::MixedFields));
    }

    #[test]
    fn x_pow_mod_matches_long_division() {
        let f = Field::new(3, 2).unwrap();
        let m = p(&f, &[1, 4, 0, 7, 1]);
        for k in [0u64, 1, 3, 4, 5, 17, 40] {
            let direct = f.poly_rem(&f.monomial(Elem::ONE, k as usize), &m).unwrap();
            assert_eq!(f.poly_x_pow_mod(k, &m).unwrap(), direct, "k = {k}");
        }
    }
}
