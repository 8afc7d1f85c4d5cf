//! Bit vectors over GF(2) indexed by edge id.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const BITS: usize = 64;

/// A GF(2) vector over the edge set of a graph: bit `i` set means edge `i`
/// is present. Addition is symmetric difference.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeVector {
    len: usize,
    words: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthMismatch {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for LengthMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edge vector length mismatch: {} vs {}",
            self.left, self.right
        )
    }
}

impl EdgeVector {
    pub fn zero(len: usize) -> Self {
        EdgeVector {
            len,
            words: vec![0; len.div_ceil(BITS)],
        }
    }

    pub fn from_edge_ids(len: usize, ids: &[u32]) -> Self {
        let mut v = Self::zero(len);
        for &i in ids {
            v.set(i as usize, true);
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
        assert!(i < self.len);
        self.words[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % BITS);
        if value {
            self.words[i / BITS] |= mask;
        } else {
            self.words[i / BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of set bits (edges in the support).
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set bit, if any.
    pub fn lowest_set_bit(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// In-place symmetric difference.
    pub fn xor_assign(&mut self, other: &EdgeVector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Symmetric difference `(A ∪ B) \ (A ∩ B)`.
    pub fn sum(&self, other: &EdgeVector) -> Result<EdgeVector, LengthMismatch> {
        if self.len != other.len {
            return Err(LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Edge ids in the support, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * BITS + b)
                }
            })
        })
    }

    pub fn intersection_weight(&self, other: &EdgeVector) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeVector{{")?;
        for (k, e) in self.support().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Deterministic GF(2) elimination with pivots on the lowest set bit.
///
/// Rows are inserted one at a time; each keeps a companion combination
/// vector recording which inserted rows sum to it.
pub struct Eliminator {
    len: usize,
    /// (pivot bit, reduced row, combination over inserted rows)
    rows: Vec<(usize, EdgeVector, EdgeVector)>,
    inserted: usize,
    capacity: usize,
}

impl Eliminator {
    pub fn new(len: usize, capacity: usize) -> Self {
        Eliminator {
            len,
            rows: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    /// Reduce `v` against the current rows. Returns the residual and the
    /// combination of inserted rows that was subtracted.
    fn reduce(&self, v: &EdgeVector) -> (EdgeVector, EdgeVector) {
        let mut residual = v.clone();
        let mut combo = EdgeVector::zero(self.capacity);
        for (pivot, row, row_combo) in &self.rows {
            if residual.get(*pivot) {
                residual.xor_assign(row);
                combo.xor_assign(row_combo);
            }
        }
        (residual, combo)
    }

    /// Insert a row. Returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, v: &EdgeVector) -> bool {
        assert_eq!(v.len(), self.len);
        assert!(self.inserted < self.capacity);
        let (residual, mut combo) = self.reduce(v);
        combo.set(self.inserted, true);
        self.inserted += 1;
        match residual.lowest_set_bit() {
            Some(pivot) => {
                self.rows.push((pivot, residual, combo));
                // keep rows sorted by pivot so reduction is deterministic
                self.rows.sort_by_key(|(p, _, _)| *p);
                true
            }
            None => false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Express `target` as a sum of inserted rows, if it lies in their span.
    /// The result marks the inserted row indices to sum.
    pub fn represent(&self, target: &EdgeVector) -> Option<EdgeVector> {
        let (residual, combo) = self.reduce(target);
        residual.is_zero().then_some(combo)
    }
}

pub fn rank(vectors: &[EdgeVector], len: usize) -> usize {
    let mut elim = Eliminator::new(len, vectors.len().max(1));
    for v in vectors {
        elim.insert(v);
    }
    elim.rank()
}
