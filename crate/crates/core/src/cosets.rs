//! `q^2`-cyclotomic cosets modulo `nr = q^(2m) - 1` and narrow-sense defining sets
//! `T = C_1 ∪ C_(1+r) ∪ ... ∪ C_(1+r(δ-2))`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::arith::{checked_pow, mul_mod, prime_power};

/// Code length `n = (q^(2m) - 1)/(q + 1)` together with the quantities derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeFrame {
    q: u64,
    m: u32,
    p: u64,
    s: u32,
    r: u64,
    n: u64,
    nr: u64,
}

impl CodeFrame {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if m < 2 {
            return Err(Error::MTooSmall(m));
        }
        if m % 2 == 1 {
            return Err(Error::OddM(m));
        }
        let limit = 1u128 << 63;
        let full = checked_pow(q, 2 * m).unwrap_or(u128::MAX);
        if full > limit {
            return Err(Error::CapacityExceeded {
                what: "q^(2m) - 1",
                value: full.saturating_sub(1),
                limit,
            });
        }
        let nr = (full - 1) as u64;
        let r = q + 1;
        let frame = Self {
            q,
            m,
            p,
            s,
            r,
            n: nr / r,
            nr,
        };
        if frame.n * r != nr {
            return Err(Error::Internal(format!("q + 1 does not divide q^{} - 1", 2 * m)));
        }
        let ord = frame.order_of_q2();
        if ord != m as u64 {
            return Err(Error::Internal(format!(
                "multiplicative order of q^2 mod nr is {ord}, expected {m}"
            )));
        }
        Ok(frame)
    }

    fn order_of_q2(&self) -> u64 {
        let q2 = self.q * self.q;
        let mut x = q2 % self.nr;
        let mut k = 1;
        while x != 1 {
            x = mul_mod(x, q2, self.nr);
            k += 1;
        }
        k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Characteristic `p` with `q = p^s`.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Order of the shift constant, `r = q + 1`.
    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn nr(&self) -> u64 {
        self.nr
    }

    /// The `i`-th element `1 + r i` of the root index set `O`.
    pub fn root_index(&self, i: u64) -> u64 {
        ((1 + self.r as u128 * i as u128) % self.nr as u128) as u64
    }

    /// `(-q j) mod nr`.
    pub fn negate_q(&self, j: u64) -> u64 {
        let t = mul_mod(self.q, j, self.nr);
        if t == 0 {
            0
        } else {
            self.nr - t
        }
    }

    /// Inverse of [`CodeFrame::negate_q`]: `(-q^(-1) j) mod nr`, using `q^(-1) = q^(2m-1)`.
    pub fn negate_q_inverse(&self, j: u64) -> u64 {
        let qinv = crate::finite_field::arith::pow_mod(self.q, 2 * self.m as u64 - 1, self.nr);
        let t = mul_mod(qinv, j, self.nr);
        if t == 0 {
            0
        } else {
            self.nr - t
        }
    }
}

pub fn make_frame(q: u64, m: u32) -> Result<CodeFrame> {
    CodeFrame::new(q, m)
}

/// Orbit of a residue under multiplication by `q^2` modulo `nr`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicCoset {
    representative: u64,
    elements: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn representative(&self) -> u64 {
        self.representative
    }

    /// Sorted ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn leader(&self) -> u64 {
        self.elements[0]
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

pub fn coset(frame: &CodeFrame, s: u64) -> Result<CyclotomicCoset> {
    if s >= frame.nr {
        return Err(Error::OutOfRange {
            what: "coset representative",
            value: s,
            min: 0,
            max: frame.nr - 1,
        });
    }
    Ok(orbit(frame, s))
}

fn orbit(frame: &CodeFrame, s: u64) -> CyclotomicCoset {
    let q2 = frame.q * frame.q;
    let mut elements = vec![s];
    let mut x = mul_mod(s, q2, frame.nr);
    while x != s {
        elements.push(x);
        x = mul_mod(x, q2, frame.nr);
    }
    elements.sort_unstable();
    CyclotomicCoset {
        representative: s,
        elements,
    }
}

fn check_delta(frame: &CodeFrame, delta: u64) -> Result<()> {
    if delta < 2 || delta > frame.n {
        return Err(Error::DeltaOutOfRange {
            delta,
            min: 2,
            max: frame.n,
        });
    }
    Ok(())
}

/// Narrow-sense defining set for design distance `δ`.
#[derive(Debug, Clone, Serialize)]
pub struct DefiningSet {
    frame: CodeFrame,
    delta: u64,
    cosets: Vec<CyclotomicCoset>,
    elements: Vec<u64>,
    repeated: Vec<u64>,
}

impl DefiningSet {
    pub fn new(frame: &CodeFrame, delta: u64) -> Result<Self> {
        check_delta(frame, delta)?;
        let mut seen = HashSet::new();
        let mut cosets = Vec::new();
        let mut repeated = Vec::new();
        for i in 0..=delta - 2 {
            let s = frame.root_index(i);
            if seen.contains(&s) {
                repeated.push(i);
                continue;
            }
            let c = orbit(frame, s);
            seen.extend(c.elements.iter().copied());
            cosets.push(c);
        }
        let mut elements: Vec<u64> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self {
            frame: *frame,
            delta,
            cosets,
            elements,
            repeated,
        })
    }

    pub fn frame(&self) -> &CodeFrame {
        &self.frame
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Distinct cosets in order of first appearance.
    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.cosets
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Indices `i <= δ - 2` whose coset `C_(1+ri)` had already been collected.
    pub fn repeated_indices(&self) -> &[u64] {
        &self.repeated
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `T ∩ T^(-q)`, sorted.
    pub fn hermitian_overlap(&self) -> Vec<u64> {
        negate_q_image(self)
            .into_iter()
            .filter(|&x| self.contains(x))
            .collect()
    }
}

pub fn defining_set(frame: &CodeFrame, delta: u64) -> Result<DefiningSet> {
    DefiningSet::new(frame, delta)
}

/// `T^(-q) = {(-q j) mod nr : j ∈ T}`, sorted.
pub fn negate_q_image(t: &DefiningSet) -> Vec<u64> {
    let mut out: Vec<u64> = t.elements.iter().map(|&j| t.frame.negate_q(j)).collect();
    out.sort_unstable();
    out
}

/// Hermitian dual containment through the defining-set criterion `T ∩ T^(-q) = ∅`.
pub fn is_dual_containing(t: &DefiningSet) -> bool {
    t.elements
        .iter()
        .all(|&j| !t.contains(t.frame.negate_q(j)))
}

/// `|C_1 ∪ C_(1+r) ∪ ... ∪ C_(1+r(δ-2))|` by explicit set union.
pub fn union_size_direct(frame: &CodeFrame, delta: u64) -> Result<u64> {
    check_delta(frame, delta)?;
    let mut all = HashSet::new();
    for i in 0..=delta - 2 {
        all.extend(orbit(frame, frame.root_index(i)).elements);
    }
    Ok(all.len() as u64)
}

/// Defining sets for `δ = 2, 3, ...` built one coset at a time.
///
/// Tracks the union size, whether `T ∩ T^(-q)` is empty, and the longest cyclic run of
/// consecutive root indices `i` (elements `1 + r i`), which gives the BCH-bound certificate.
#[derive(Debug, Clone)]
pub struct CosetUnion {
    frame: CodeFrame,
    members: HashSet<u64>,
    next_index: u64,
    last_added: usize,
    overlapping: bool,
    run_end: HashMap<u64, u64>,
    run_start: HashMap<u64, u64>,
    longest_run: u64,
}

impl CosetUnion {
    /// Starts at `δ = 2`, i.e. with `T = C_1`.
    pub fn new(frame: &CodeFrame) -> Self {
        let mut u = Self {
            frame: *frame,
            members: HashSet::new(),
            next_index: 0,
            last_added: 0,
            overlapping: false,
            run_end: HashMap::new(),
            run_start: HashMap::new(),
            longest_run: 0,
        };
        u.advance();
        u
    }

    /// Current design distance.
    pub fn delta(&self) -> u64 {
        self.next_index + 1
    }

    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    /// Number of elements the last step added (0 when the coset was already present).
    pub fn last_added(&self) -> usize {
        self.last_added
    }

    pub fn is_dual_containing(&self) -> bool {
        !self.overlapping
    }

    /// Increments `δ` by one, adding `C_(1 + r(δ-1))`.
    pub fn advance(&mut self) {
        let s = self.frame.root_index(self.next_index);
        self.next_index += 1;
        if self.members.contains(&s) {
            self.last_added = 0;
            return;
        }
        let c = orbit(&self.frame, s);
        self.last_added = c.elements.len();
        for &x in &c.elements {
            self.members.insert(x);
            self.insert_run((x - 1) / self.frame.r);
        }
        for &x in &c.elements {
            if self.members.contains(&self.frame.negate_q(x))
                || self.members.contains(&self.frame.negate_q_inverse(x))
            {
                self.overlapping = true;
                break;
            }
        }
    }

    fn insert_run(&mut self, i: u64) {
        let start = if i > 0 {
            self.run_start.remove(&(i - 1)).unwrap_or(i)
        } else {
            i
        };
        let end = self.run_end.remove(&(i + 1)).unwrap_or(i);
        self.run_end.insert(start, end);
        self.run_start.insert(end, start);
        self.longest_run = self.longest_run.max(end - start + 1);
    }

    /// Largest `Δ` such that `Δ - 1` consecutive root indices (cyclically mod `n`) lie in `T`.
    pub fn certificate(&self) -> u64 {
        let n = self.frame.n;
        let mut best = self.longest_run;
        if let (Some(&head_end), Some(&tail_start)) =
            (self.run_end.get(&0), self.run_start.get(&(n - 1)))
        {
            if tail_start != 0 {
                best = best.max(head_end + 1 + (n - tail_start));
            }
        }
        best.min(n) + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames() {
        let f = make_frame(2, 2).unwrap();
        assert_eq!((f.n(), f.r(), f.nr()), (5, 3, 15));
        let f = make_frame(3, 2).unwrap();
        assert_eq!((f.n(), f.r(), f.nr()), (20, 4, 80));
        assert_eq!(make_frame(2, 3), Err(Error::OddM(3)));
        assert_eq!(make_frame(6, 2), Err(Error::NotPrimePower(6)));
        assert_eq!(make_frame(3, 0), Err(Error::MTooSmall(0)));
        assert!(matches!(make_frame(2, 32), Err(Error::CapacityExceeded { .. })));
        assert!(make_frame(2, 30).is_ok());
    }

    #[test]
    fn small_cosets() {
        let f = make_frame(2, 2).unwrap();
        assert_eq!(coset(&f, 1).unwrap().elements(), &[1, 4]);
        assert_eq!(coset(&f, 0).unwrap().elements(), &[0]);
        assert!(coset(&f, 15).is_err());
        let f = make_frame(3, 2).unwrap();
        let c = coset(&f, 1).unwrap();
        assert_eq!((c.elements(), c.size(), c.leader()), (&[1u64, 9][..], 2, 1));
    }

    #[test]
    fn defining_sets_and_negated_images() {
        let f = make_frame(2, 2).unwrap();
        let t = defining_set(&f, 3).unwrap();
        assert_eq!(t.elements(), &[1, 4]);
        assert_eq!(t.repeated_indices(), &[1]);
        assert_eq!(negate_q_image(&t), vec![7, 13]);
        assert!(is_dual_containing(&t));

        let f = make_frame(3, 2).unwrap();
        let t = defining_set(&f, 2).unwrap();
        assert_eq!(t.elements(), &[1, 9]);
        assert_eq!(negate_q_image(&t), vec![53, 77]);
        assert!(defining_set(&f, 1).is_err());
        assert!(defining_set(&f, 21).is_err());
    }

    #[test]
    fn dual_containment_examples() {
        let f = make_frame(5, 2).unwrap();
        assert!(is_dual_containing(&defining_set(&f, 19).unwrap()));
        let t = defining_set(&f, 20).unwrap();
        assert!(!is_dual_containing(&t));
        assert!(!t.hermitian_overlap().is_empty());
    }

    #[test]
    fn direct_union_sizes() {
        assert_eq!(union_size_direct(&make_frame(2, 2).unwrap(), 3).unwrap(), 2);
        assert_eq!(union_size_direct(&make_frame(3, 2).unwrap(), 4).unwrap(), 4);
        assert_eq!(union_size_direct(&make_frame(5, 2).unwrap(), 19).unwrap(), 32);
    }

    #[test]
    fn incremental_union_tracks_full_rebuild() {
        for (q, m) in [(2, 2), (3, 2), (4, 2), (2, 4), (5, 2)] {
            let f = make_frame(q, m).unwrap();
            let mut u = CosetUnion::new(&f);
            while u.delta() <= f.n().min(120) {
                let t = defining_set(&f, u.delta()).unwrap();
                assert_eq!(u.size(), t.len() as u64);
                assert_eq!(u.is_dual_containing(), is_dual_containing(&t));
                if u.delta() == f.n() {
                    break;
                }
                u.advance();
            }
        }
    }

    #[test]
    fn empty_set_negation() {
        let f = make_frame(2, 2).unwrap();
        let mut t = defining_set(&f, 2).unwrap();
        t.elements.clear();
        assert!(negate_q_image(&t).is_empty());
        assert!(is_dual_containing(&t));
    }
}
