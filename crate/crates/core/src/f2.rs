//! Linear algebra over the two-element field.
//!
//! [`FormalSum`] is a finite set of basis keys; a key is present iff its
//! coefficient is 1, so addition is symmetric difference. [`BitMatrix`]
//! carries dense rows of packed bits and is used for rank, kernel and
//! membership computations.

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

/// An F2-linear combination of basis keys.
///
/// Iteration follows the key order, so printing is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum<K: Ord> {
    terms: BTreeSet<K>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        Self { terms: BTreeSet::new() }
    }
}

impl<K: Ord> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(key: K) -> Self {
        let mut s = Self::zero();
        s.toggle(key);
        s
    }

    /// Adds `key` with coefficient 1.
    pub fn toggle(&mut self, key: K) {
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, K> {
        self.terms.iter()
    }

    pub fn first(&self) -> Option<&K> {
        self.terms.first()
    }

    /// Keeps the terms satisfying `keep`.
    pub fn retain(&mut self, keep: impl FnMut(&K) -> bool) {
        self.terms.retain(keep);
    }

    pub fn map<L: Ord>(&self, f: impl FnMut(&K) -> L) -> FormalSum<L> {
        self.iter().map(f).collect()
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    /// Symmetric difference of the term sets.
    pub fn sum(&self, other: &Self) -> Self {
        self.terms.symmetric_difference(&other.terms).cloned().collect()
    }
}

impl<K: Ord> FromIterator<K> for FormalSum<K> {
    /// Collects with mod-2 cancellation: a key seen twice vanishes.
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut s = Self::zero();
        for k in iter {
            s.toggle(k);
        }
        s
    }
}

impl<K: Ord> Extend<K> for FormalSum<K> {
    fn extend<I: IntoIterator<Item = K>>(&mut self, iter: I) {
        for k in iter {
            self.toggle(k);
        }
    }
}

impl<K: Ord> IntoIterator for FormalSum<K> {
    type Item = K;
    type IntoIter = btree_set::IntoIter<K>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a FormalSum<K> {
    type Item = &'a K;
    type IntoIter = btree_set::Iter<'a, K>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord> AddAssign for FormalSum<K> {
    fn add_assign(&mut self, rhs: Self) {
        self.extend(rhs);
    }
}

impl<K: Ord + Clone> AddAssign<&FormalSum<K>> for FormalSum<K> {
    fn add_assign(&mut self, rhs: &FormalSum<K>) {
        self.extend(rhs.iter().cloned());
    }
}

impl<K: Ord> Add for FormalSum<K> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.terms.iter()).finish()
    }
}

/// Dense vector over F2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    fn dot(&self, other: &Self) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVector({s})")
    }
}

/// Dense F2 matrix stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows: vec![BitVector::zeros(cols); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column {j} has wrong length");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.rows[r]
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_indices(self.rows(), (0..self.rows()).filter(|&r| self.get(r, c)))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let mut out = BitVector::zeros(self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form. Pivots are chosen at the leftmost
    /// remaining nonzero column, topmost available row. Returns the pivot
    /// columns in order.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for c in 0..self.cols {
            if next_row == self.rows() {
                break;
            }
            let Some(p) = (next_row..self.rows()).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.rows.swap(next_row, p);
            let pivot_row = self.rows[next_row].clone();
            for r in 0..self.rows() {
                if r != next_row && self.get(r, c) {
                    self.rows[r].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next_row += 1;
        }
        pivots
    }

    /// Rank and a kernel basis (one vector per free column).
    pub fn rank_and_kernel(&self) -> (usize, Vec<BitVector>) {
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (r, &pc) in pivots.iter().enumerate() {
                    if m.get(r, free) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect();
        (pivots.len(), kernel)
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Columns that are not in the span of the columns before them.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().reduce()
    }

    /// Coordinates `c` with `self * c = v` if `v` is in the column space.
    pub fn solve_membership(&self, v: &BitVector) -> Result<Option<BitVector>> {
        if v.len() != self.rows() {
            return Err(Error::DimensionMismatch { expected: self.rows(), got: v.len() });
        }
        let mut aug = Self::zeros(self.rows(), self.cols + 1);
        for r in 0..self.rows() {
            for c in self.rows[r].ones() {
                aug.set(r, c, true);
            }
            if v.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut sol = BitVector::zeros(self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            if aug.get(r, self.cols) {
                sol.set(pc, true);
            }
        }
        Ok(Some(sol))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows(), self.cols)?;
        for r in &self.rows {
            let s: String = (0..self.cols).map(|i| if r.get(i) { '1' } else { '.' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}
