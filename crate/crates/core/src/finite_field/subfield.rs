use std::collections::HashMap;
use std::sync::Arc;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

const CACHE_LIMIT: u64 = 1 << 16;

/// Injection of `F_{p^d}` into a field `F_{p^e}` with `d | e`.
///
/// The small field is realized with the minimal polynomial of `g^step` as its modulus, where
/// `g` is the big field's generator and `step = (p^e - 1)/(p^d - 1)`. The small field's own
/// generator (the residue of `x`) therefore maps to `g^step`, and `embed` is a ring map.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    big_id: u64,
    small: Arc<Field>,
    step: u64,
    images: Option<Vec<Elem>>,
    preimages: Option<HashMap<Elem, Elem>>,
}

impl Field {
    pub fn subfield_embedding(&self, small_order: u64) -> Result<SubfieldEmbedding> {
        let d = self.subfield_degree(small_order)?;
        let step = (self.order() - 1) / (small_order - 1);
        let gamma = self.gen_pow(step);
        let p = self.characteristic();

        // minimal polynomial of gamma over F_p: prod_{i<d} (X - gamma^(p^i))
        let mut minpoly = self.poly(vec![Elem::ONE]);
        let mut conj = gamma;
        for _ in 0..d {
            let factor = self.poly(vec![self.neg(conj), Elem::ONE]);
            minpoly = self.poly_mul(&minpoly, &factor)?;
            conj = self.pow(conj, p);
        }
        let coeffs: Vec<u32> = minpoly
            .coeffs()
            .iter()
            .map(|c| {
                if (c.0 as u64) < p {
                    Ok(c.0)
                } else {
                    Err(Error::Internal("minimal polynomial left the prime field".into()))
                }
            })
            .collect::<Result<_>>()?;
        let small = Arc::new(Field::from_modulus(p, &coeffs, small_order)?);

        let (images, preimages) = if small_order <= CACHE_LIMIT {
            let mut images = vec![Elem::ZERO; small_order as usize];
            let mut pre = HashMap::with_capacity(small_order as usize);
            pre.insert(Elem::ZERO, Elem::ZERO);
            for j in 0..small_order - 1 {
                let s = small.gen_pow(j);
                let b = self.gen_pow(step * j);
                images[s.0 as usize] = b;
                pre.insert(b, s);
            }
            (Some(images), Some(pre))
        } else {
            (None, None)
        };
        Ok(SubfieldEmbedding {
            big_id: self.id(),
            small,
            step,
            images,
            preimages,
        })
    }
}

impl SubfieldEmbedding {
    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn small_arc(&self) -> Arc<Field> {
        Arc::clone(&self.small)
    }

    /// Exponent `(|big| - 1)/(|small| - 1)` with `embed(generator) = g^step`.
    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn embed(&self, big: &Field, x: Elem) -> Result<Elem> {
        big.check_same(self.big_id)?;
        if let Some(images) = &self.images {
            return images
                .get(x.0 as usize)
                .copied()
                .ok_or(Error::Internal("element outside the subfield".into()));
        }
        Ok(match self.small.log(x) {
            None => Elem::ZERO,
            Some(j) => big.gen_pow(self.step * j),
        })
    }

    /// Preimage of `y`, or `None` when `y` is not in the image.
    pub fn restrict(&self, big: &Field, y: Elem) -> Result<Option<Elem>> {
        big.check_same(self.big_id)?;
        if let Some(pre) = &self.preimages {
            return Ok(pre.get(&y).copied());
        }
        if y.is_zero() {
            return Ok(Some(Elem::ZERO));
        }
        let l = big.log(y).ok_or(Error::Internal("discrete log failed".into()))?;
        Ok((l % self.step == 0).then(|| self.small.gen_pow(l / self.step)))
    }

    pub fn image(&self, big: &Field) -> Result<Vec<Elem>> {
        (0..self.small.order())
            .map(|i| self.embed(big, Elem(i as u32)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_in_f16() {
        let big = Field::new(2, 4).unwrap();
        let emb = big.subfield_embedding(4).unwrap();
        assert_eq!(emb.step(), 5);
        assert_eq!(emb.embed(&big, emb.small().generator()).unwrap(), big.gen_pow(5));
        let mut img = emb.image(&big).unwrap();
        img.sort();
        img.dedup();
        assert_eq!(img.len(), 4);
    }

    #[test]
    fn f9_in_f81_is_closed_and_homomorphic() {
        let big = Field::new(3, 4).unwrap();
        let emb = big.subfield_embedding(9).unwrap();
        assert_eq!(emb.embed(&big, emb.small().generator()).unwrap(), big.gen_pow(10));
        let small = emb.small();
        let img = emb.image(&big).unwrap();
        for a in 0..9u32 {
            for b in 0..9u32 {
                let (ea, eb) = (img[a as usize], img[b as usize]);
                assert!(img.contains(&big.add(ea, eb)));
                assert_eq!(
                    emb.embed(&big, small.add(Elem(a), Elem(b))).unwrap(),
                    big.add(ea, eb)
                );
                assert_eq!(
                    emb.embed(&big, small.mul(Elem(a), Elem(b))).unwrap(),
                    big.mul(ea, eb)
                );
            }
        }
    }

    #[test]
    fn not_a_subfield() {
        let f8 = Field::new(2, 3).unwrap();
        assert_eq!(
            f8.subfield_embedding(4).unwrap_err(),
            Error::NotASubfield { small: 4, big: 8 }
        );
        assert!(f8.subfield_embedding(6).is_err());
    }

    #[test]
    fn restrict_inverts_embed_without_cache() {
        let big = Field::new(2, 18).unwrap();
        let emb = big.subfield_embedding(1 << 18).unwrap();
        assert!(emb.images.is_none());
        let x = emb.small().gen_pow(1234);
        let y = emb.embed(&big, x).unwrap();
        assert_eq!(emb.restrict(&big, y).unwrap(), Some(x));
        let sub = big.subfield_embedding(1 << 9).unwrap();
        assert_eq!(sub.restrict(&big, big.generator()).unwrap(), None);
    }
}
