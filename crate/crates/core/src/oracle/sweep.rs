use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::{defining_set, union_size_direct, CodeFrame, CosetUnion};
use crate::error::Result;
use crate::formulas::{corollary_n, delta_max, necessity_witness, script_n};

/// One design distance of a [`SweepReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub delta: u64,
    pub formula: u64,
    pub corollary: u64,
    /// `|T|` from a fresh explicit union.
    pub direct: u64,
    /// `|T|` from the incrementally grown union.
    pub incremental: u64,
    pub dual_containing: bool,
    pub certificate: u64,
}

impl SweepRow {
    pub fn counts_match(&self) -> bool {
        self.formula == self.direct
            && self.corollary == self.formula
            && self.incremental == self.direct
    }

    /// Name of the first failed check, if any.
    pub fn failure(&self) -> Option<&'static str> {
        if self.formula != self.direct {
            Some("closed form differs from direct union size")
        } else if self.corollary != self.formula {
            Some("specialized case differs from closed form")
        } else if self.incremental != self.direct {
            Some("incremental union differs from direct union")
        } else if !self.dual_containing {
            Some("defining set meets its -q image")
        } else if self.certificate < self.delta {
            Some("BCH certificate below design distance")
        } else {
            None
        }
    }
}

/// The row at `δ^max + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryRow {
    pub delta: u64,
    pub dual_containing: bool,
    pub overlap_size: u64,
    pub witness_index: u64,
    pub witness_element: u64,
    pub witness_in_overlap: bool,
}

impl BoundaryRow {
    pub fn failure(&self) -> Option<&'static str> {
        if self.dual_containing {
            Some("defining set past delta_max is still dual-containing")
        } else if !self.witness_in_overlap {
            Some("necessity witness is not in the overlap")
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub delta_max: u64,
    pub rows: Vec<SweepRow>,
    pub boundary: BoundaryRow,
}

impl SweepReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| r.failure().is_some()).count()
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    /// First failing `(δ, check)`.
    pub fn first_failure(&self) -> Option<(u64, &'static str)> {
        self.rows
            .iter()
            .find_map(|r| r.failure().map(|f| (r.delta, f)))
            .or_else(|| self.boundary.failure().map(|f| (self.boundary.delta, f)))
    }
}

/// Audits every `δ ∈ [2, δ^max]` and the necessity row `δ^max + 1`.
pub fn sweep(frame: &CodeFrame) -> Result<SweepReport> {
    let dmax = delta_max(frame)?;

    let mut union = CosetUnion::new(frame);
    let mut incremental = Vec::with_capacity(dmax as usize);
    loop {
        incremental.push((union.size(), union.is_dual_containing(), union.certificate()));
        if union.delta() == dmax {
            break;
        }
        union.advance();
    }

    let rows = (2..=dmax)
        .into_par_iter()
        .map(|delta| {
            let (inc, dual, cert) = incremental[(delta - 2) as usize];
            Ok(SweepRow {
                delta,
                formula: script_n(frame, delta)?.script_n,
                corollary: corollary_n(frame, delta)?,
                direct: union_size_direct(frame, delta)?,
                incremental: inc,
                dual_containing: dual,
                certificate: cert,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepReport {
        q: frame.q(),
        m: frame.m(),
        n: frame.n(),
        delta_max: dmax,
        rows,
        boundary: boundary_row(frame, dmax + 1)?,
    })
}

fn boundary_row(frame: &CodeFrame, delta: u64) -> Result<BoundaryRow> {
    let t = defining_set(frame, delta)?;
    let overlap = t.hermitian_overlap();
    let i0 = necessity_witness(frame)?;
    let e = frame.root_index(i0);
    let in_t = t.contains(e);
    let in_image = t.contains(frame.negate_q_inverse(e));
    Ok(BoundaryRow {
        delta,
        dual_containing: overlap.is_empty(),
        overlap_size: overlap.len() as u64,
        witness_index: i0,
        witness_element: e,
        witness_in_overlap: in_t && in_image && i0 <= delta - 2,
    })
}

/// [`sweep`] over several frames.
pub fn sweep_frames(frames: &[CodeFrame]) -> Result<Vec<SweepReport>> {
    frames.par_iter().map(sweep).collect()
}
