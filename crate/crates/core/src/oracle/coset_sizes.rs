use serde::Serialize;

use crate::cosets::{coset, CodeFrame};
use crate::error::Result;
use crate::finite_field::arith::checked_pow;
use crate::formulas::{i_star, scan_range_end};

/// Sizes `|C_(1+ri)|` for `0 <= i <= ⌊(q^(m+1) - 2)/(q + 1)⌋`.
#[derive(Debug, Clone, Serialize)]
pub struct CosetSizeReport {
    pub q: u64,
    pub m: u32,
    pub range_end: u64,
    pub i_star: u64,
    pub sizes: Vec<usize>,
    /// Indices whose coset is smaller than `m`.
    pub anomalies: Vec<u64>,
    /// `[i*]` for even `q > 2` when `i*` is in range, otherwise empty.
    pub expected_anomalies: Vec<u64>,
    /// Every size is `m` or `m/2`.
    pub dichotomy: bool,
    /// Solutions `i` of `(q+1) i ≡ -1 (mod q^m + 1)` with `0 <= i <= q^m`.
    pub congruence_solutions: Vec<u64>,
}

impl CosetSizeReport {
    pub fn passed(&self) -> bool {
        let congruence_ok = if self.q.is_multiple_of(2) {
            self.congruence_solutions == [self.i_star]
        } else {
            self.congruence_solutions.is_empty()
        };
        self.dichotomy && self.anomalies == self.expected_anomalies && congruence_ok
    }
}

pub fn coset_size_scan(frame: &CodeFrame) -> Result<CosetSizeReport> {
    let (q, m) = (frame.q(), frame.m());
    let end = scan_range_end(frame);
    let istar = i_star(frame)?;
    let mut sizes = Vec::with_capacity(end as usize + 1);
    for i in 0..=end {
        sizes.push(coset(frame, frame.root_index(i))?.size());
    }
    let full = m as usize;
    let dichotomy = sizes.iter().all(|&s| s == full || 2 * s == full);
    let anomalies = (0..=end).filter(|&i| sizes[i as usize] != full).collect();
    let expected_anomalies = if q % 2 == 0 && q > 2 && istar <= end {
        vec![istar]
    } else {
        Vec::new()
    };

    let modulus = checked_pow(q, m).expect("bounded by the frame") as u64 + 1;
    let target = modulus - 1;
    let congruence_solutions = (0..modulus)
        .filter(|&i| ((q as u128 + 1) * i as u128 % modulus as u128) as u64 == target)
        .collect();

    Ok(CosetSizeReport {
        q,
        m,
        range_end: end,
        i_star: istar,
        sizes,
        anomalies,
        expected_anomalies,
        dichotomy,
        congruence_solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::make_frame;

    #[test]
    fn q4_m2_has_the_half_coset_at_i_star() {
        let r = coset_size_scan(&make_frame(4, 2).unwrap()).unwrap();
        assert_eq!(r.anomalies, vec![10]);
        assert_eq!(r.sizes[10], 1);
        assert!(r.passed());
    }

    #[test]
    fn q5_m2_is_uniform() {
        let r = coset_size_scan(&make_frame(5, 2).unwrap()).unwrap();
        assert!(r.sizes.iter().all(|&s| s == 2));
        assert!(r.congruence_solutions.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn q2_m4_i_star_beyond_range() {
        let r = coset_size_scan(&make_frame(2, 4).unwrap()).unwrap();
        assert_eq!(r.range_end, 10);
        assert!(r.sizes.iter().all(|&s| s == 4));
        assert_eq!(r.congruence_solutions, vec![11]);
        assert!(r.passed());
    }
}
