use std::fmt::{self, Write as _};

use clap::ValueEnum;
use serde::Serialize;

use ccbch_core::code_builder::{generator_polynomial_for_set, Tower};
use ccbch_core::oracle::{
    check_hermitian_dual_containing_matrix, coset_size_scan, matrix_from_generator,
    min_distance_exhaustive, min_distance_parity_search, sweep, BoundaryRow, MatrixCode,
    MinDistance, MATRIX_LENGTH_LIMIT,
};
use ccbch_core::reference::PUBLISHED;
use ccbch_core::table::{self, SCHEMA_VERSION};
use ccbch_core::{bch_bound_certificate, is_dual_containing, CodeFrame, DefiningSet, Error, Result};

/// Node budget of the parity-check column search run alongside the exhaustive search.
pub const PARITY_NODE_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Formulas,
    Matrix,
    Mindist,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Formulas => "formulas",
            Self::Matrix => "matrix",
            Self::Mindist => "mindist",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub delta: Option<u64>,
    pub check: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.delta {
            Some(d) => write!(f, "delta={d}: {}", self.check),
            None => f.write_str(&self.check),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetScan {
    pub range_end: u64,
    pub i_star: u64,
    pub anomalies: Vec<u64>,
    pub expected_anomalies: Vec<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaSection {
    pub delta_max: u64,
    pub rows: usize,
    pub mismatches: usize,
    pub boundary: BoundaryRow,
    pub coset_scan: CosetScan,
    pub published_checked: usize,
    /// Design distances of listed codes that were not reproduced.
    pub published_mismatches: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixRow {
    pub delta: u64,
    pub degree: usize,
    pub remainder_zero: bool,
    pub shift_closed: bool,
    pub matrix_dual_containing: bool,
    pub set_dual_containing: bool,
}

impl MatrixRow {
    pub fn failure(&self) -> Option<&'static str> {
        if !self.remainder_zero {
            Some("generator does not divide x^n - eta")
        } else if !self.shift_closed {
            Some("row space not closed under the constacyclic shift")
        } else if self.matrix_dual_containing != self.set_dual_containing {
            Some("matrix and defining-set dual-containment disagree")
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MindistRow {
    pub delta: u64,
    pub k: usize,
    pub certificate: u64,
    pub exhaustive: MinDistance,
    pub parity: MinDistance,
}

impl MindistRow {
    pub fn failure(&self) -> Option<&'static str> {
        let exact = |d: MinDistance| match d {
            MinDistance::Exact(v) => Some(v),
            _ => None,
        };
        if let Some(d) = exact(self.exhaustive) {
            if d < self.delta {
                return Some("exhaustive minimum distance below design distance");
            }
            if d < self.certificate {
                return Some("exhaustive minimum distance below BCH certificate");
            }
            if self.parity.lower_bound().is_some_and(|b| b > d) {
                return Some("parity search bound exceeds exhaustive minimum distance");
            }
            if exact(self.parity).is_some_and(|p| p != d) {
                return Some("parity search and exhaustive search disagree");
            }
        }
        if exact(self.parity).is_some_and(|p| p < self.delta) {
            return Some("parity search minimum distance below design distance");
        }
        None
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: String,
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub level: Level,
    pub formulas: FormulaSection,
    pub matrix: Option<Vec<MatrixRow>>,
    pub mindist: Option<Vec<MindistRow>>,
    /// Why the requested level could not run.
    pub skipped: Option<String>,
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub report: VerifyReport,
    pub skipped: Option<Error>,
}

impl VerifyOutcome {
    /// 1 on any failed check, 2 when a requested level was skipped, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.report.passed {
            crate::EXIT_VERIFY_FAILED
        } else if self.skipped.is_some() {
            crate::EXIT_USAGE
        } else {
            crate::EXIT_OK
        }
    }
}

fn formula_section(frame: &CodeFrame) -> Result<(FormulaSection, Option<Failure>)> {
    let report = sweep(frame)?;
    let scan = coset_size_scan(frame)?;
    let mut published_checked = 0;
    let mut published_mismatches = Vec::new();
    for p in PUBLISHED.iter().filter(|p| p.q == frame.q() && p.m == frame.m()) {
        published_checked += 1;
        let r = table::row(frame, p.delta)?;
        if (r.quantum.n, r.quantum.k) != (p.n, p.k) || !r.dual_containing {
            published_mismatches.push(p.delta);
        }
    }
    let failure = report
        .first_failure()
        .map(|(delta, check)| Failure {
            delta: Some(delta),
            check: check.to_string(),
        })
        .or_else(|| {
            (!scan.passed()).then(|| Failure {
                delta: None,
                check: "coset size dichotomy".to_string(),
            })
        })
        .or_else(|| {
            published_mismatches.first().map(|&d| Failure {
                delta: Some(d),
                check: "listed code not reproduced".to_string(),
            })
        });
    let section = FormulaSection {
        delta_max: report.delta_max,
        rows: report.rows.len(),
        mismatches: report.mismatches(),
        boundary: report.boundary.clone(),
        coset_scan: CosetScan {
            range_end: scan.range_end,
            i_star: scan.i_star,
            passed: scan.passed(),
            anomalies: scan.anomalies,
            expected_anomalies: scan.expected_anomalies,
        },
        published_checked,
        published_mismatches,
    };
    Ok((section, failure))
}

/// A defining set and the code it generates.
type Built = (DefiningSet, MatrixCode);

fn matrix_rows(
    frame: &CodeFrame,
    delta_max: u64,
    cap: u64,
    keep: bool,
) -> Result<(Vec<MatrixRow>, Vec<Built>)> {
    if frame.n() > MATRIX_LENGTH_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "code length for matrix checks",
            value: frame.n() as u128,
            limit: MATRIX_LENGTH_LIMIT as u128,
        });
    }
    let tower = Tower::with_cap(frame, cap)?;
    let mut rows = Vec::new();
    let mut kept = Vec::new();
    for delta in 2..=delta_max + 1 {
        let t = DefiningSet::new(frame, delta)?;
        let g = generator_polynomial_for_set(&tower, &t)?;
        let c = matrix_from_generator(&g)?;
        rows.push(MatrixRow {
            delta,
            degree: g.degree(),
            remainder_zero: g.remainder_of_modulus()?.is_zero(),
            shift_closed: c.is_shift_closed(),
            matrix_dual_containing: check_hermitian_dual_containing_matrix(&c),
            set_dual_containing: is_dual_containing(&t),
        });
        if keep && delta <= delta_max {
            kept.push((t, c));
        }
    }
    Ok((rows, kept))
}

fn mindist_rows(codes: &[Built], budget: u64) -> Vec<MindistRow> {
    codes
        .iter()
        .map(|(t, c)| MindistRow {
            delta: t.delta(),
            k: c.k(),
            certificate: bch_bound_certificate(t),
            exhaustive: min_distance_exhaustive(c, budget),
            parity: min_distance_parity_search(c, PARITY_NODE_BUDGET),
        })
        .collect()
}

/// Runs every level up to `level`. Capacity limits on the matrix levels are reported through
/// [`VerifyOutcome::skipped`] rather than as errors.
pub fn run_verify(frame: &CodeFrame, level: Level, budget: u64, cap: u64) -> Result<VerifyOutcome> {
    let (formulas, mut failure) = formula_section(frame)?;
    let mut matrix = None;
    let mut mindist = None;
    let mut skipped = None;

    if level >= Level::Matrix {
        match matrix_rows(frame, formulas.delta_max, cap, level >= Level::Mindist) {
            Ok((rows, codes)) => {
                failure = failure.or_else(|| {
                    rows.iter().find_map(|r| {
                        r.failure().map(|c| Failure {
                            delta: Some(r.delta),
                            check: c.to_string(),
                        })
                    })
                });
                matrix = Some(rows);
                if level >= Level::Mindist {
                    let rows = mindist_rows(&codes, budget);
                    failure = failure.or_else(|| {
                        rows.iter().find_map(|r| {
                            r.failure().map(|c| Failure {
                                delta: Some(r.delta),
                                check: c.to_string(),
                            })
                        })
                    });
                    mindist = Some(rows);
                }
            }
            Err(e @ Error::CapacityExceeded { .. }) => skipped = Some(e),
            Err(e) => return Err(e),
        }
    }

    let report = VerifyReport {
        schema_version: SCHEMA_VERSION.to_string(),
        q: frame.q(),
        m: frame.m(),
        n: frame.n(),
        level,
        formulas,
        matrix,
        mindist,
        skipped: skipped.as_ref().map(|e| e.to_string()),
        passed: failure.is_none(),
        first_failure: failure,
    };
    Ok(VerifyOutcome { report, skipped })
}

fn distance_text(d: MinDistance) -> String {
    match d {
        MinDistance::Exact(v) => format!("d={v}"),
        MinDistance::AtLeast(v) => format!("d>={v}"),
        MinDistance::Unknown => "d unknown".to_string(),
    }
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let f = &self.formulas;
        let b = &f.boundary;
        let _ = writeln!(s, "verify q={} m={} n={} level={}", self.q, self.m, self.n, self.level);
        let _ = writeln!(
            s,
            "formulas: {} rows (delta 2..={}), {} mismatches",
            f.rows, f.delta_max, f.mismatches
        );
        let _ = writeln!(
            s,
            "boundary: delta={} dual_containing={} overlap={} witness i0={} (element {}) in overlap: {}",
            b.delta, b.dual_containing, b.overlap_size, b.witness_index, b.witness_element, b.witness_in_overlap
        );
        let _ = writeln!(
            s,
            "coset sizes: i in 0..={}, smaller than m at {:?} (expected {:?}): {}",
            f.coset_scan.range_end,
            f.coset_scan.anomalies,
            f.coset_scan.expected_anomalies,
            if f.coset_scan.passed { "ok" } else { "FAIL" }
        );
        let _ = writeln!(
            s,
            "listed codes: {} checked, {} not reproduced",
            f.published_checked,
            f.published_mismatches.len()
        );
        if let Some(rows) = &self.matrix {
            let bad = rows.iter().filter(|r| r.failure().is_some()).count();
            let dual = rows.iter().filter(|r| r.matrix_dual_containing).count();
            let _ = writeln!(
                s,
                "matrix: {} codes (delta 2..={}), {} dual-containing, {} failures",
                rows.len(),
                f.delta_max + 1,
                dual,
                bad
            );
        }
        if let Some(rows) = &self.mindist {
            for r in rows {
                let _ = writeln!(
                    s,
                    "mindist: delta={} [{},{}] exhaustive {} parity search {} certificate={}",
                    r.delta,
                    self.n,
                    r.k,
                    distance_text(r.exhaustive),
                    distance_text(r.parity),
                    r.certificate
                );
            }
        }
        if let Some(why) = &self.skipped {
            let _ = writeln!(s, "skipped: {why}");
        }
        match &self.first_failure {
            None => {
                let _ = writeln!(s, "result: PASS");
            }
            Some(fail) => {
                let _ = writeln!(s, "result: FAIL at {fail}");
            }
        }
        s
    }
}
