//! Closed forms for the defining-set size `𝒩(q, m, δ)` and the quantities it depends on.

use serde::{Deserialize, Serialize};

use crate::cosets::CodeFrame;
use crate::error::{Error, Result};
use crate::finite_field::arith::checked_pow;

fn pow(q: u64, e: u32) -> i128 {
    checked_pow(q, e).expect("frame capacity bounds q^(2m)") as i128
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<i128> {
    if num % den != 0 {
        return Err(Error::Internal(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(num / den)
}

fn ceil_half(x: u64) -> i128 {
    x.div_ceil(2) as i128
}

/// Which closed form produced `δ^max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaMaxBranch {
    /// `m = 2` and `q >= 5`.
    ShortLargeQ,
    General,
}

impl DeltaMaxBranch {
    pub fn of(frame: &CodeFrame) -> Self {
        if frame.m() == 2 && frame.q() >= 5 {
            Self::ShortLargeQ
        } else {
            Self::General
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::ShortLargeQ => "m2q5+",
            Self::General => "general",
        }
    }
}

pub fn delta_max(frame: &CodeFrame) -> Result<u64> {
    let q = frame.q();
    let (qi, q2) = (q as i128, pow(q, 2));
    let v = match DeltaMaxBranch::of(frame) {
        DeltaMaxBranch::ShortLargeQ => {
            exact_div(pow(q, 3) - q2 + qi + 3, qi + 1, "delta_max numerator")? + 1
        }
        DeltaMaxBranch::General => {
            exact_div(pow(q, frame.m() + 1) - q2 + qi + 3, qi + 1, "delta_max numerator")?
        }
    };
    Ok(v as u64)
}

/// Index of the half-size coset candidate: `(⌈(q+1)/2⌉(q^m+1) - [q even])/(q+1)`.
pub fn i_star(frame: &CodeFrame) -> Result<u64> {
    let q = frame.q();
    let even = q.is_multiple_of(2) as i128;
    let num = ceil_half(q + 1) * (pow(q, frame.m()) + 1) - even;
    Ok(exact_div(num, q as i128 + 1, "i_star numerator")? as u64)
}

/// `(q^m - 1)/(q + 1)`.
pub fn half_gap(frame: &CodeFrame) -> Result<u64> {
    let q = frame.q();
    Ok(exact_div(pow(q, frame.m()) - 1, q as i128 + 1, "(q^m - 1)/(q + 1)")? as u64)
}

/// The two branch boundaries `i* + 2` and `i* + 2 + (q^m - 1)/(q + 1)`.
pub fn thresholds(frame: &CodeFrame) -> Result<(u64, u64)> {
    let t1 = i_star(frame)? + 2;
    Ok((t1, t1 + half_gap(frame)?))
}

/// `max(0, ⌊(δ - q - 1)/q²⌋ + 1)` with floor toward `-∞`.
pub fn n1(q: u64, delta: u64) -> u64 {
    let v = (delta as i128 - q as i128 - 1).div_euclid((q as i128) * (q as i128)) + 1;
    v.max(0) as u64
}

fn check_range(frame: &CodeFrame, delta: u64) -> Result<u64> {
    let dmax = delta_max(frame)?;
    if delta < 2 || delta > dmax {
        return Err(Error::DeltaOutOfRange {
            delta,
            min: 2,
            max: dmax,
        });
    }
    Ok(dmax)
}

/// `⌊(q+1)(δ-3)/(q^m-1) - ⌈(q+1)/2⌉⌋` past the second threshold when `q >= 5`, else 0.
pub fn n2(frame: &CodeFrame, delta: u64) -> Result<u64> {
    check_range(frame, delta)?;
    let q = frame.q();
    let (_, t2) = thresholds(frame)?;
    if q < 5 || delta < t2 {
        return Ok(0);
    }
    let den = pow(q, frame.m()) - 1;
    let num = (q as i128 + 1) * (delta as i128 - 3) - ceil_half(q + 1) * den;
    let v = num.div_euclid(den);
    if v < 0 {
        return Err(Error::Internal(format!("N2 is negative at delta = {delta}")));
    }
    Ok(v as u64)
}

/// Evaluation of `𝒩(q, m, δ)` together with every intermediate quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaReport {
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub delta: u64,
    pub delta_max: u64,
    pub delta_max_branch: DeltaMaxBranch,
    pub i_star: u64,
    pub n1: u64,
    pub n2: u64,
    /// The half-coset indicator: 1 when `q >= 4` is even and `i* <= δ - 2`.
    pub half: u64,
    /// Which of the three δ-intervals of the closed form applies.
    pub interval: u8,
    /// Specialized case 1 to 4.
    pub case: u8,
    pub script_n: u64,
}

impl FormulaReport {
    /// Comma-free label such as `m2q5+/b3/c4`.
    pub fn branch_label(&self) -> String {
        format!(
            "{}/b{}/c{}",
            self.delta_max_branch.label(),
            self.interval,
            self.case
        )
    }
}

fn case_of(frame: &CodeFrame) -> u8 {
    match (frame.q() <= 4, frame.m() == 2, frame.q() % 2 == 1) {
        (true, true, _) => 1,
        (true, false, _) => 2,
        (false, _, true) => 3,
        (false, _, false) => 4,
    }
}

/// `𝒩(q, m, δ)` by the three-interval closed form.
pub fn script_n(frame: &CodeFrame, delta: u64) -> Result<FormulaReport> {
    let dmax = check_range(frame, delta)?;
    let (q, m) = (frame.q(), frame.m() as i128);
    let istar = i_star(frame)?;
    let (t1, t2) = thresholds(frame)?;
    let interval = if delta < t1 {
        1
    } else if delta < t2 {
        2
    } else {
        3
    };
    let n1 = n1(q, delta);
    let n2 = n2(frame, delta)?;
    let half = (q % 2 == 0 && q >= 4 && istar + 2 <= delta) as u64;

    let base = delta as i128 - n1 as i128 - 1;
    let twice = match interval {
        1 => 2 * base * m,
        2 => (2 * base - half as i128) * m,
        _ => (2 * base - half as i128 - 2 * n2 as i128) * m,
    };
    let value = exact_div(twice, 2, "2 * script_n")?;
    if value < 0 || value > frame.n() as i128 {
        return Err(Error::Internal(format!("script_n = {value} out of [0, n]")));
    }
    Ok(FormulaReport {
        q,
        m: frame.m(),
        n: frame.n(),
        delta,
        delta_max: dmax,
        delta_max_branch: DeltaMaxBranch::of(frame),
        i_star: istar,
        n1,
        n2,
        half,
        interval,
        case: case_of(frame),
        script_n: value as u64,
    })
}

/// `𝒩(q, m, δ)` through the four specialized cases, written out separately from [`script_n`].
pub fn corollary_n(frame: &CodeFrame, delta: u64) -> Result<u64> {
    check_range(frame, delta)?;
    let (q, m) = (frame.q(), frame.m() as i128);
    let d = delta as i128;
    let a = n1(q, delta) as i128;
    let (t1, t2) = thresholds(frame)?;
    let late_n2 = || -> i128 {
        let den = pow(q, frame.m()) - 1;
        ((q as i128 + 1) * (d - 3)).div_euclid(den) - ceil_half(q + 1)
    };
    // doubled values
    let twice = match case_of(frame) {
        1 => 4 * (d - a - 1),
        2 => {
            if delta >= t1 && q == 4 {
                (2 * (d - a - 1) - 1) * m
            } else {
                2 * (d - a - 1) * m
            }
        }
        3 => {
            if delta < t2 {
                2 * (d - a - 1) * m
            } else {
                2 * (d - a - late_n2() - 1) * m
            }
        }
        _ => {
            if delta < t1 {
                2 * (d - a - 1) * m
            } else if delta < t2 {
                (2 * (d - a) - 3) * m
            } else {
                (2 * (d - a - late_n2()) - 3) * m
            }
        }
    };
    Ok(exact_div(twice, 2, "2 * corollary_n")? as u64)
}

/// Index `i0` whose root element `1 + r i0` lies in `T ∩ T^(-q)` once `δ = δ^max + 1`.
pub fn necessity_witness(frame: &CodeFrame) -> Result<u64> {
    let q = frame.q();
    let qi = q as i128;
    let num = match DeltaMaxBranch::of(frame) {
        DeltaMaxBranch::General => {
            pow(q, frame.m() + 1) - 3 * pow(q, frame.m() - 1) - 2
        }
        DeltaMaxBranch::ShortLargeQ => pow(q, 3) - pow(q, 2) - 4 * qi - 2,
    };
    Ok(exact_div(num, qi + 1, "witness numerator")? as u64)
}

/// Last root index whose coset size is pinned down, `⌊(q^(m+1) - 2)/(q + 1)⌋`.
pub fn scan_range_end(frame: &CodeFrame) -> u64 {
    ((pow(frame.q(), frame.m() + 1) - 2) / (frame.q() as i128 + 1)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::make_frame;

    fn f(q: u64, m: u32) -> CodeFrame {
        make_frame(q, m).unwrap()
    }

    #[test]
    fn delta_max_values() {
        let cases = [
            ((2, 2), 3),
            ((3, 2), 6),
            ((4, 2), 11),
            ((5, 2), 19),
            ((7, 2), 39),
            ((8, 2), 52),
            ((9, 2), 67),
            ((2, 4), 11),
            ((3, 4), 60),
            ((4, 4), 203),
            ((5, 4), 518),
            ((7, 4), 2096),
            ((8, 4), 3635),
            ((9, 4), 5898),
        ];
        for ((q, m), want) in cases {
            assert_eq!(delta_max(&f(q, m)).unwrap(), want, "q={q} m={m}");
        }
    }

    #[test]
    fn i_star_values() {
        assert_eq!(i_star(&f(4, 2)).unwrap(), 10);
        assert_eq!(i_star(&f(5, 2)).unwrap(), 13);
        assert_eq!(i_star(&f(2, 4)).unwrap(), 11);
        assert_eq!(i_star(&f(9, 2)).unwrap(), 41);
        assert_eq!(thresholds(&f(7, 2)).unwrap(), (27, 33));
        assert_eq!(thresholds(&f(5, 4)).unwrap(), (315, 419));
    }

    #[test]
    fn n1_floors_toward_negative_infinity() {
        assert_eq!(n1(3, 4), 1);
        assert_eq!(n1(2, 2), 0);
        assert_eq!(n1(5, 19), 1);
        assert_eq!(n1(2, 11), 3);
        assert_eq!(n1(7, 7), 0);
        assert_eq!(n1(7, 8), 1);
    }

    #[test]
    fn n2_values() {
        assert_eq!(n2(&f(5, 2), 19).unwrap(), 1);
        assert_eq!(n2(&f(9, 2), 67).unwrap(), 3);
        assert_eq!(n2(&f(5, 2), 18).unwrap(), 0);
        for d in 2..=6 {
            assert_eq!(n2(&f(3, 2), d).unwrap(), 0);
        }
        assert!(n2(&f(3, 2), 7).is_err());
    }

    #[test]
    fn script_n_values() {
        assert_eq!(script_n(&f(2, 2), 3).unwrap().script_n, 2);
        assert_eq!(script_n(&f(5, 2), 19).unwrap().script_n, 32);
        assert_eq!(script_n(&f(2, 4), 11).unwrap().script_n, 28);
        let r = script_n(&f(8, 2), 52).unwrap();
        assert_eq!((r.script_n, r.interval, r.case, r.half), (95, 3, 4, 1));
        assert_eq!(r.branch_label(), "m2q5+/b3/c4");
        assert_eq!(script_n(&f(2, 2), 3).unwrap().branch_label(), "general/b1/c1");
        assert!(matches!(
            script_n(&f(5, 2), 20),
            Err(Error::DeltaOutOfRange { delta: 20, min: 2, max: 19 })
        ));
        assert!(script_n(&f(5, 2), 1).is_err());
    }

    #[test]
    fn specialized_case_values() {
        assert_eq!(corollary_n(&f(3, 2), 6).unwrap(), 8);
        assert_eq!(corollary_n(&f(4, 2), 7).unwrap(), 10);
        assert_eq!(corollary_n(&f(8, 2), 52).unwrap(), 95);
    }

    #[test]
    fn half_coset_only_for_q4_m4_and_larger_even_q() {
        // i* = 10 > δmax - 2 = 9 for (4, 2)
        for d in 2..=11 {
            assert_eq!(script_n(&f(4, 2), d).unwrap().half, 0);
        }
        assert_eq!(script_n(&f(4, 4), 156).unwrap().half, 1);
        assert_eq!(script_n(&f(4, 4), 155).unwrap().half, 0);
        assert_eq!(script_n(&f(3, 4), 60).unwrap().half, 0);
    }

    #[test]
    fn witnesses() {
        assert_eq!(necessity_witness(&f(2, 2)).unwrap(), 0);
        assert_eq!(necessity_witness(&f(5, 2)).unwrap(), 13);
        assert_eq!(scan_range_end(&f(2, 4)), 10);
    }
}
