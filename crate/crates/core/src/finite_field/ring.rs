//! Arithmetic in `F_p[x]/(f)` for a monic `f`, on elements packed as base-`p` integers
//! (digit `i` is the coefficient of `x^i`).

const MAX_DEGREE: usize = 32;

#[derive(Debug, Clone)]
pub(crate) struct QuotientRing {
    p: u32,
    degree: usize,
    /// Monic, lowest degree first, length `degree + 1`.
    modulus: Vec<u32>,
    /// `p^i` for `0 <= i <= degree`.
    radix: Vec<u64>,
    /// Modulus as a bit mask, characteristic 2 only.
    mask: u64,
}

impl QuotientRing {
    /// `modulus` must be monic with `1 <= degree <= 32` and `p^degree < 2^32`.
    pub(crate) fn new(p: u32, modulus: Vec<u32>) -> Self {
        let degree = modulus.len() - 1;
        debug_assert!((1..=MAX_DEGREE).contains(&degree));
        debug_assert_eq!(modulus[degree], 1);
        let mut radix = Vec::with_capacity(degree + 1);
        let mut acc = 1u64;
        for _ in 0..=degree {
            radix.push(acc);
            acc = acc.saturating_mul(p as u64);
        }
        let mask = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |m, (i, &c)| m | ((c as u64) << i))
        } else {
            0
        };
        Self {
            p,
            degree,
            modulus,
            radix,
            mask,
        }
    }

    pub(crate) fn p(&self) -> u32 {
        self.p
    }

    pub(crate) fn degree(&self) -> usize {
        self.degree
    }

    pub(crate) fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub(crate) fn order(&self) -> u64 {
        self.radix[self.degree]
    }

    /// Residue class of `x`.
    pub(crate) fn x(&self) -> u32 {
        if self.degree == 1 {
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        }
    }

    pub(crate) fn digits(&self, mut a: u32, out: &mut [u32]) {
        for d in out.iter_mut().take(self.degree) {
            *d = a % self.p;
            a /= self.p;
        }
    }

    pub(crate) fn encode(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .take(self.degree)
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64) as u32
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        for i in 0..self.degree {
            let d = (a % p + b % p) % p;
            out += d as u64 * self.radix[i];
            a /= p;
            b /= p;
        }
        out as u32
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a;
        let mut out = 0u64;
        for i in 0..self.degree {
            let d = (p - a % p) % p;
            out += d as u64 * self.radix[i];
            a /= p;
        }
        out as u32
    }

    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if self.p == 2 {
            return self.mul_binary(a, b);
        }
        let e = self.degree;
        let p = self.p as u64;
        let mut da = [0u32; MAX_DEGREE];
        let mut db = [0u32; MAX_DEGREE];
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] += da[i] as u64 * db[j] as u64;
            }
        }
        for c in prod.iter_mut().take(2 * e - 1) {
            *c %= p;
        }
        for k in (e..=2 * e - 2).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            // x^k = x^(k-e) * x^e and x^e = -(f_0 + ... + f_{e-1} x^(e-1))
            for j in 0..e {
                let f = self.modulus[j] as u64;
                if f != 0 {
                    prod[k - e + j] = (prod[k - e + j] + c * (p - f)) % p;
                }
            }
            prod[k] = 0;
        }
        let mut out = 0u64;
        for i in (0..e).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }

    fn mul_binary(&self, a: u32, b: u32) -> u32 {
        let e = self.degree;
        let mut prod = 0u64;
        let mut bb = b;
        let mut shift = 0;
        while bb != 0 {
            if bb & 1 == 1 {
                prod ^= (a as u64) << shift;
            }
            bb >>= 1;
            shift += 1;
        }
        for bit in (e..=2 * e - 2).rev() {
            if (prod >> bit) & 1 == 1 {
                prod ^= self.mask << (bit - e);
            }
        }
        prod as u32
    }

    /// Multiplication by `x`, `O(degree)`.
    pub(crate) fn mul_x(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return self.mul(a, self.x());
        }
        let e = self.degree;
        if self.p == 2 {
            let shifted = (a as u64) << 1;
            let out = if (shifted >> e) & 1 == 1 {
                shifted ^ self.mask
            } else {
                shifted
            };
            return out as u32;
        }
        let p = self.p as u64;
        let top = a as u64 / self.radix[e - 1];
        let shifted = (a as u64 % self.radix[e - 1]) * p;
        if top == 0 {
            return shifted as u32;
        }
        let mut out = 0u64;
        let mut rest = shifted;
        for j in 0..e {
            let d = rest % p;
            rest /= p;
            let f = self.modulus[j] as u64;
            out += ((d + top * (p - f)) % p) * self.radix[j];
        }
        out as u32
    }

    pub(crate) fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Whether the residue of `x` has multiplicative order exactly `p^degree - 1`,
    /// given the distinct prime factors of that number.
    pub(crate) fn x_is_primitive(&self, order_factors: &[u64]) -> bool {
        let n = self.order() - 1;
        let x = self.x();
        if x == 0 || self.pow(x, n) != 1 {
            return false;
        }
        order_factors.iter().all(|&l| self.pow(x, n / l) != 1)
    }
}

/// Irreducibility of a monic polynomial over `F_p` by trial division against every monic
/// polynomial of degree `1..=deg/2`. Exponential in the degree; meant for checking small moduli.
pub fn is_irreducible_by_trial_division(p: u32, modulus: &[u32]) -> bool {
    let deg = modulus.len() - 1;
    let p64 = p as u64;
    for d in 1..=deg / 2 {
        let count = p64.pow(d as u32);
        for low in 0..count {
            let mut divisor: Vec<u32> = (0..d)
                .scan(low, |rest, _| {
                    let c = (*rest % p64) as u32;
                    *rest /= p64;
                    Some(c)
                })
                .collect();
            divisor.push(1);
            if remainder_is_zero(p, modulus, &divisor) {
                return false;
            }
        }
    }
    true
}

fn remainder_is_zero(p: u32, a: &[u32], monic: &[u32]) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let d = monic.len() - 1;
    for k in (d..r.len()).rev() {
        let c = r[k] % p;
        if c == 0 {
            continue;
        }
        for j in 0..=d {
            let idx = k - d + j;
            r[idx] = (r[idx] + c * (p - monic[j] as u64 % p)) % p;
        }
    }
    r.iter().take(d).all(|&c| c % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_mul_matches_schoolbook() {
        // F_16 with x^4 + x + 1: x^4 = x + 1
        let ring = QuotientRing::new(2, vec![1, 1, 0, 0, 1]);
        assert_eq!(ring.mul(0b1000, 0b0010), 0b0011);
        assert_eq!(ring.mul_x(0b1000), 0b0011);
        assert_eq!(ring.pow(2, 15), 1);
        assert_eq!(ring.pow(2, 5), 0b0110);
    }

    #[test]
    fn odd_mul_x_agrees_with_mul() {
        // x^2 + x + 2 over F_3
        let ring = QuotientRing::new(3, vec![2, 1, 1]);
        for a in 0..9 {
            assert_eq!(ring.mul_x(a), ring.mul(a, ring.x()));
        }
    }

    #[test]
    fn trial_division() {
        assert!(is_irreducible_by_trial_division(2, &[1, 1, 0, 0, 1]));
        assert!(!is_irreducible_by_trial_division(2, &[1, 0, 1])); // (x+1)^2
        assert!(!is_irreducible_by_trial_division(3, &[2, 0, 1])); // x^2 - 1
        assert!(is_irreducible_by_trial_division(3, &[1, 0, 1]));
    }
}
