//! Sparse exact matrices over the Gaussian rationals.
//!
//! Elimination is plain reduced-rational RREF; since RREF is unique the
//! reported rank and nullspace basis are reproducible across runs and
//! platforms. Nullspace basis vectors are ordered by ascending free column.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

type SparseVec = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl Matrix {
    pub fn new(cols: usize) -> Self {
        Matrix {
            cols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given as (column, value) entries. Duplicate columns are
    /// summed, zeros dropped.
    pub fn push_row(&mut self, entries: Vec<(usize, Scalar)>) {
        let mut merged: SparseVec = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column {} out of range {}", c, self.cols);
            let slot = merged.entry(c).or_insert_with(Scalar::zero);
            *slot += &v;
        }
        merged.retain(|_, v| !v.is_zero());
        self.rows.push(merged.into_iter().collect());
    }

    pub fn from_dense(rows: Vec<Vec<i64>>, cols: usize) -> Self {
        let mut m = Matrix::new(cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            m.push_row(
                row.into_iter()
                    .enumerate()
                    .map(|(c, v)| (c, Scalar::from_int(v)))
                    .collect(),
            );
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::new(n);
        for k in 0..n {
            m.push_row(vec![(k, Scalar::one())]);
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.rows
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (c, coef) in row {
                    acc += &(coef * &v[*c]);
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.accumulate().pivots.len()
    }

    /// Exact basis of `{v : self * v = 0}`; one vector per free column, in
    /// ascending column order. An empty matrix yields the full standard basis.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let rref = self.accumulate();
        let mut basis = Vec::new();
        let mut pivot_of_col: BTreeMap<usize, usize> = BTreeMap::new();
        for (idx, &p) in rref.pivots.iter().enumerate() {
            pivot_of_col.insert(p, idx);
        }
        for free in 0..self.cols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (idx, &p) in rref.pivots.iter().enumerate() {
                if let Some(coef) = rref.rows[idx].get(&free) {
                    v[p] = -coef;
                }
            }
            basis.push(v);
        }
        basis
    }

    fn accumulate(&self) -> RrefAccum {
        let mut acc = RrefAccum::new(self.cols);
        for row in &self.rows {
            acc.insert(row.iter().cloned().collect());
        }
        acc
    }
}

/// Incrementally maintained reduced row echelon basis. Also usable as a span
/// accumulator: `insert` reports whether the vector grew the span.
pub(crate) struct RrefAccum {
    #[allow(dead_code)]
    cols: usize,
    pub(crate) pivots: Vec<usize>,
    pub(crate) rows: Vec<SparseVec>,
}

impl RrefAccum {
    pub(crate) fn new(cols: usize) -> Self {
        RrefAccum {
            cols,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis and inserts the remainder if nonzero.
    /// Returns true when the span grew.
    pub(crate) fn insert(&mut self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        let Some((&lead, _)) = v.iter().next() else {
            return false;
        };
        let inv = v[&lead].checked_inv().expect("leading entry nonzero");
        for val in v.values_mut() {
            *val *= &inv;
        }
        // Keep existing rows fully reduced against the new pivot.
        for row in &mut self.rows {
            if let Some(coef) = row.get(&lead).cloned() {
                axpy(row, &coef, &v);
            }
        }
        let at = self.pivots.binary_search(&lead).unwrap_err();
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    /// True when `v` lies in the accumulated span.
    pub(crate) fn contains(&self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        v.is_empty()
    }

    fn reduce(&self, v: &mut SparseVec) {
        // Pivot rows contain no other pivot columns, so one ascending pass
        // over the pivots eliminates everything it can.
        for (idx, &p) in self.pivots.iter().enumerate() {
            if let Some(coef) = v.get(&p).cloned() {
                axpy(v, &coef, &self.rows[idx]);
            }
        }
    }
}

/// `target -= coef * src`, dropping entries that become zero.
fn axpy(target: &mut SparseVec, coef: &Scalar, src: &SparseVec) {
    for (c, val) in src {
        let entry = target.entry(*c).or_insert_with(Scalar::zero);
        *entry -= &(coef * val);
        if entry.is_zero() {
            target.remove(c);
        }
    }
}
