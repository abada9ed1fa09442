use std::sync::Arc;

use crate::code_builder::GeneratorPolynomial;
use crate::error::{Error, Result};
use crate::finite_field::{Elem, Field};

/// Longest code the matrix-level checks accept.
pub const MATRIX_LENGTH_LIMIT: u64 = 512;

/// Generator matrix of a constacyclic code over `F_{q²}`.
#[derive(Debug, Clone)]
pub struct MatrixCode {
    field: Arc<Field>,
    q: u64,
    n: usize,
    eta: Elem,
    rows: Vec<Vec<Elem>>,
}

/// Row space in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, rows: &[Vec<Elem>]) -> Self {
        let mut e = Self {
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for r in rows {
            e.insert(field, r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, field: &Field, mut v: Vec<Elem>) -> Vec<Elem> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, field: &Field, v: &[Elem]) -> bool {
        self.reduce(field, v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, field: &Field, v: Vec<Elem>) -> bool {
        let mut v = self.reduce(field, v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = field.inv(v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn nullspace(&self, field: &Field, n: usize) -> Vec<Vec<Elem>> {
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Elem::ZERO; n];
                x[f] = Elem::ONE;
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = field.neg(row[f]);
                }
                x
            })
            .collect()
    }
}

/// Rows `x^i g(x)` for `0 <= i < k`.
pub fn matrix_from_generator(g: &GeneratorPolynomial) -> Result<MatrixCode> {
    let n = g.frame().n();
    if n > MATRIX_LENGTH_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "code length for matrix checks",
            value: n as u128,
            limit: MATRIX_LENGTH_LIMIT as u128,
        });
    }
    let n = n as usize;
    let deg = g.degree();
    if deg >= n {
        return Err(Error::OutOfRange {
            what: "code dimension",
            value: 0,
            min: 1,
            max: n as u64,
        });
    }
    let rows = (0..n - deg)
        .map(|i| {
            let mut row = vec![Elem::ZERO; n];
            row[i..=i + deg].copy_from_slice(g.poly().coeffs());
            row
        })
        .collect();
    Ok(MatrixCode {
        field: g.field_arc(),
        q: g.frame().q(),
        n,
        eta: g.eta(),
        rows,
    })
}

impl MatrixCode {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn eta(&self) -> Elem {
        self.eta
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::new(&self.field, &self.rows)
    }

    /// `x ↦ x^q` entrywise.
    pub fn conjugate(&self, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|&x| self.field.pow(x, self.q)).collect()
    }

    pub fn hermitian_inner(&self, u: &[Elem], v: &[Elem]) -> Elem {
        u.iter().zip(v).fold(Elem::ZERO, |acc, (&a, &b)| {
            self.field.add(acc, self.field.mul(a, self.field.pow(b, self.q)))
        })
    }

    /// Basis of the Hermitian dual `{u : Σ u_i v_i^q = 0 for all v in C}`.
    pub fn hermitian_dual_basis(&self) -> Vec<Vec<Elem>> {
        let conj: Vec<Vec<Elem>> = self.rows.iter().map(|r| self.conjugate(r)).collect();
        Echelon::new(&self.field, &conj).nullspace(&self.field, self.n)
    }

    /// Parity-check matrix: basis of the Euclidean dual.
    pub fn parity_check(&self) -> Vec<Vec<Elem>> {
        self.echelon().nullspace(&self.field, self.n)
    }

    /// `(η c_(n-1), c_0, ..., c_(n-2))`.
    pub fn shift(&self, c: &[Elem]) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.n);
        out.push(self.field.mul(self.eta, c[self.n - 1]));
        out.extend_from_slice(&c[..self.n - 1]);
        out
    }

    pub fn is_shift_closed(&self) -> bool {
        let e = self.echelon();
        self.rows
            .iter()
            .all(|r| e.contains(&self.field, &self.shift(r)))
    }
}

/// Whether the Hermitian dual lies inside the code, by explicit linear algebra.
pub fn check_hermitian_dual_containing_matrix(c: &MatrixCode) -> bool {
    let e = c.echelon();
    c.hermitian_dual_basis()
        .iter()
        .all(|u| e.contains(c.field(), u))
}
