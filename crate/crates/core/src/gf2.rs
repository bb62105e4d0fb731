//! Linear algebra over GF(2): packed bit vectors, dense row reduction and
//! sparse column reduction for boundary matrices.

use std::collections::HashMap;

/// Packed bit vector of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Bits as a compact "0101" string.
    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

/// Row-reduced basis of a span, kept in echelon form keyed by pivot column.
#[derive(Clone, Debug)]
pub struct Basis {
    len: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Basis {
    pub fn new(len: usize) -> Self {
        Basis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduce `v` against the basis.
    pub fn reduce(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    /// Add `v` to the span; returns true when the rank grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        self.reduce(&mut v);
        let Some(p) = v.first_one() else {
            return false;
        };
        // Keep rows fully reduced so `reduce` is a single pass.
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Rows sorted by pivot, giving a canonical reduced echelon form.
    pub fn echelon(&self) -> Vec<BitVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    /// The combination of basis rows selected by `coeffs`.
    pub fn combination(&self, coeffs: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len);
        for i in coeffs.ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }
}

pub fn rank_of_rows(len: usize, rows: impl IntoIterator<Item = BitVec>) -> usize {
    let mut b = Basis::new(len);
    for r in rows {
        b.insert(r);
    }
    b.rank()
}

/// Rank of a sparse GF(2) matrix given by columns of row indices.
/// Uses standard lowest-one column reduction.
pub fn sparse_rank(columns: &[Vec<usize>]) -> usize {
    let mut low_owner: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut c: Vec<usize> = col.clone();
        c.sort_unstable();
        dedup_pairs(&mut c);
        while let Some(&low) = c.last() {
            match low_owner.get(&low) {
                Some(other) => c = sym_diff(&c, other),
                None => break,
            }
        }
        if let Some(&low) = c.last() {
            low_owner.insert(low, c);
            rank += 1;
        }
    }
    rank
}

fn dedup_pairs(c: &mut Vec<usize>) {
    let mut out = Vec::with_capacity(c.len());
    let mut i = 0;
    while i < c.len() {
        let mut j = i;
        while j < c.len() && c[j] == c[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(c[i]);
        }
        i = j;
    }
    *c = out;
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_rank_and_membership() {
        let mut b = Basis::new(4);
        assert!(b.insert(BitVec::from_bools(&[true, true, false, false])));
        assert!(b.insert(BitVec::from_bools(&[false, true, true, false])));
        assert!(!b.insert(BitVec::from_bools(&[true, false, true, false])));
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&BitVec::from_bools(&[true, false, true, false])));
        assert!(!b.contains(&BitVec::from_bools(&[false, false, false, true])));
    }

    #[test]
    fn sparse_rank_matches_dense() {
        // Boundary of a hollow triangle: columns are edges.
        let cols = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(sparse_rank(&cols), 2);
        let dense = cols.iter().map(|c| BitVec::from_indices(3, c.iter().copied()));
        assert_eq!(rank_of_rows(3, dense), 2);
        assert_eq!(sparse_rank(&[vec![1, 1]]), 0);
    }

    #[test]
    fn bit_iteration() {
        let v = BitVec::from_indices(130, [0, 64, 129]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.first_one(), Some(0));
    }
}
