use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::{Echelon, MatrixCode};
use crate::finite_field::{Elem, Field};

/// Default number of codewords the exhaustive search may enumerate.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum MinDistance {
    Exact(u64),
    /// No codeword of smaller weight exists.
    AtLeast(u64),
    Unknown,
}

impl MinDistance {
    /// Best proven lower bound.
    pub fn lower_bound(self) -> Option<u64> {
        match self {
            Self::Exact(d) | Self::AtLeast(d) => Some(d),
            Self::Unknown => None,
        }
    }
}

impl std::fmt::Display for MinDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Exact(d) => write!(f, "{d}"),
            Self::AtLeast(d) => write!(f, ">={d}"),
            Self::Unknown => f.write_str("unknown"),
        }
    }
}

fn weight(v: &[Elem]) -> u64 {
    v.iter().filter(|x| !x.is_zero()).count() as u64
}

/// Minimum weight over all nonzero codewords, enumerating every message when
/// `(q²)^k <= budget`. Messages are visited in modular Gray-code order, so consecutive
/// codewords differ by a multiple of one generator row; shards split on the top digit.
pub fn min_distance_exhaustive(c: &MatrixCode, budget: u64) -> MinDistance {
    let f = c.field();
    let qq = f.order();
    let k = c.k();
    let total = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(qq));
    match total {
        Some(t) if t <= budget && k > 0 => {}
        _ => return MinDistance::Unknown,
    }
    let walk = GrayWalk::new(c);
    let best = (0..qq as usize)
        .into_par_iter()
        .map(|a| {
            let mut best = u64::MAX;
            walk.shard(a, |word| {
                let w = weight(word);
                if w > 0 {
                    best = best.min(w);
                }
            });
            best
        })
        .min()
        .unwrap_or(u64::MAX);
    MinDistance::Exact(best)
}

struct GrayWalk<'a> {
    code: &'a MatrixCode,
    values: Vec<Elem>,
    // steps[j][v] = (values[v+1] - values[v]) * row_j
    steps: Vec<Vec<Vec<Elem>>>,
}

impl<'a> GrayWalk<'a> {
    fn new(code: &'a MatrixCode) -> Self {
        let f = code.field();
        let qq = f.order() as usize;
        let values: Vec<Elem> = (0..qq).map(|i| Elem(i as u32)).collect();
        let steps = code
            .rows()
            .iter()
            .map(|row| {
                (0..qq)
                    .map(|v| {
                        let d = f.sub(values[(v + 1) % qq], values[v]);
                        row.iter().map(|&x| f.mul(d, x)).collect()
                    })
                    .collect()
            })
            .collect();
        Self {
            code,
            values,
            steps,
        }
    }

    /// Visits every codeword whose top message digit is `values[a]`.
    fn shard(&self, a: usize, mut visit: impl FnMut(&[Elem])) {
        let f = self.code.field();
        let qq = f.order();
        let top = self.code.k() - 1;
        let mut word: Vec<Elem> = self.code.rows()[top]
            .iter()
            .map(|&x| f.mul(self.values[a], x))
            .collect();
        visit(&word);
        let mut digits = vec![0usize; top];
        for t in 1..qq.pow(top as u32) {
            let mut j = 0;
            let mut rest = t;
            while rest % qq == 0 {
                rest /= qq;
                j += 1;
            }
            let v = digits[j];
            for (x, &s) in word.iter_mut().zip(&self.steps[j][v]) {
                *x = f.add(*x, s);
            }
            digits[j] = (v + 1) % qq as usize;
            visit(&word);
        }
    }
}

/// Minimum distance as the least number of linearly dependent parity-check columns.
///
/// Searches column subsets of increasing size containing column 0, which suffices for codes
/// closed under the constacyclic shift. Returns `AtLeast` once `node_budget` subsets have been
/// examined without settling the current size.
pub fn min_distance_parity_search(c: &MatrixCode, node_budget: u64) -> MinDistance {
    let f = c.field();
    let h = c.parity_check();
    let n = c.n();
    if h.is_empty() {
        return MinDistance::Exact(1);
    }
    let cols: Vec<Vec<Elem>> = (0..n).map(|j| h.iter().map(|row| row[j]).collect()).collect();
    let singleton = h.len() as u64 + 1;
    let mut nodes = 0u64;
    for w in 1..=singleton {
        let mut basis = Echelon::new(f, &[]);
        match dependent_subset(f, &cols, &mut basis, 0, w as usize, &mut nodes, node_budget) {
            Some(true) => return MinDistance::Exact(w),
            Some(false) => {}
            None => return MinDistance::AtLeast(w),
        }
    }
    MinDistance::Exact(singleton)
}

/// `Some(true)` when some `size`-subset extending the current independent set (whose last
/// member precedes `from`) is dependent, `None` when the budget ran out.
fn dependent_subset(
    f: &Field,
    cols: &[Vec<Elem>],
    basis: &mut Echelon,
    from: usize,
    size: usize,
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    let depth = basis.rank();
    let range = if depth == 0 { 0..1 } else { from..cols.len() };
    for j in range {
        if cols.len() - j < size - depth {
            break;
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if depth + 1 == size {
            if basis.contains(f, &cols[j]) {
                return Some(true);
            }
            continue;
        }
        let mut next = basis.clone();
        if !next.insert(f, cols[j].clone()) {
            continue;
        }
        if dependent_subset(f, cols, &mut next, j + 1, size, nodes, budget)? {
            return Some(true);
        }
    }
    Some(false)
}
