//! Exact sparse matrices over the scalar field.
//!
//! Generators of the threaded representation are weight-graded, so their
//! matrices hold very few entries even at dimension `2^n`. Entries live in a
//! `BTreeMap` keyed by `(row, col)`, which keeps every traversal (and the
//! JSON emission) deterministically ordered.

use crate::scalar::Scalar;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Wire form of a matrix: `{"n":…,"dim":…,"entries":[[row,col,text],…]}`
/// with entries sorted by `(row, col)` and scalars in canonical text form.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixJson {
    pub n: usize,
    pub dim: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SparseMat::zero(dim, dim);
        for idx in 0..dim {
            m.entries.insert((idx, idx), Scalar::one());
        }
        m
    }

    /// A 1x1 matrix holding one scalar.
    pub fn scalar(value: Scalar) -> Self {
        let mut m = SparseMat::zero(1, 1);
        m.set(0, 0, value);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Stores a value, dropping explicit zeros.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        debug_assert!(row < self.rows && col < self.cols);
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        let v = &self.get(row, col) + value;
        self.set(row, col, v);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn scale(&self, c: &Scalar) -> SparseMat {
        let mut out = SparseMat::zero(self.rows, self.cols);
        for ((r, k), v) in &self.entries {
            out.set(*r, *k, c * v);
        }
        out
    }

    pub fn add(&self, rhs: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for ((r, c), v) in &rhs.entries {
            out.add_to(*r, *c, v);
        }
        out
    }

    pub fn sub(&self, rhs: &SparseMat) -> SparseMat {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn mul(&self, rhs: &SparseMat) -> SparseMat {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for ((r, c), v) in &rhs.entries {
            by_row.entry(*r).or_default().push((*c, v));
        }
        let mut out = SparseMat::zero(self.rows, rhs.cols);
        for ((r, k), a) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (c, b) in row {
                    out.add_to(*r, *c, &(a * *b));
                }
            }
        }
        out
    }

    /// Kronecker product; `self` indexes the most significant block.
    pub fn kron(&self, rhs: &SparseMat) -> SparseMat {
        let mut out = SparseMat::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for ((r1, c1), a) in &self.entries {
            for ((r2, c2), b) in &rhs.entries {
                out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a * b);
            }
        }
        out
    }

    /// First entry where the two matrices differ, if any.
    pub fn first_difference(&self, rhs: &SparseMat) -> Option<(usize, usize, Scalar, Scalar)> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Some((0, 0, Scalar::zero(), Scalar::zero()));
        }
        let mut keys: Vec<(usize, usize)> = self.entries.keys().copied().collect();
        keys.extend(rhs.entries.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        for (r, c) in keys {
            let a = self.get(r, c);
            let b = rhs.get(r, c);
            if a != b {
                return Some((r, c, a, b));
            }
        }
        None
    }

    /// JSON in the shared matrix schema. `n` is the thread count (so the
    /// dimension is `2^n`); rectangular matrices report their row dimension.
    pub fn to_json(&self, n: usize) -> MatrixJson {
        MatrixJson {
            n,
            dim: self.rows,
            entries: self
                .entries
                .iter()
                .map(|((r, c), v)| (*r, *c, v.to_string()))
                .collect(),
        }
    }
}

impl fmt::Display for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for ((r, c), v) in &self.entries {
            writeln!(f, "  ({r}, {c}) = {v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_against_dense() {
        let mut a = SparseMat::zero(2, 2);
        a.set(0, 1, Scalar::from_int(2));
        a.set(1, 0, Scalar::from_int(3));
        let b = SparseMat::identity(2);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 2), Scalar::from_int(2));
        assert_eq!(k.get(1, 3), Scalar::from_int(2));
        assert_eq!(k.get(2, 0), Scalar::from_int(3));
        assert_eq!(k.get(3, 1), Scalar::from_int(3));
        assert_eq!(k.nnz(), 4);
    }

    #[test]
    fn mul_drops_cancelling_terms() {
        let mut a = SparseMat::zero(1, 2);
        a.set(0, 0, Scalar::one());
        a.set(0, 1, Scalar::one());
        let mut b = SparseMat::zero(2, 1);
        b.set(0, 0, Scalar::one());
        b.set(1, 0, -&Scalar::one());
        assert!(a.mul(&b).is_zero());
    }

    #[test]
    fn json_shape() {
        let m = SparseMat::scalar(Scalar::one());
        let j = serde_json::to_string(&m.to_json(0)).unwrap();
        assert_eq!(j, r#"{"n":0,"dim":1,"entries":[[0,0,"1"]]}"#);
    }
}
