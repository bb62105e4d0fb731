//! Exact integer elimination: Smith normal form invariants and rational rank.
//!
//! Both routines first try machine integers with checked arithmetic and rerun
//! on arbitrary-precision integers if anything overflows.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse integer matrix stored by rows; entries are (column, value), sorted, nonzero.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(n_rows: usize, n_cols: usize) -> Self {
        SparseMatrix {
            n_rows,
            n_cols,
            rows: vec![Vec::new(); n_rows],
        }
    }

    /// Builds from columns given as (row, value) lists.
    pub fn from_columns(n_rows: usize, columns: &[Vec<(usize, i64)>]) -> Self {
        let mut m = SparseMatrix::new(n_rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for &(r, v) in col {
                if v != 0 {
                    m.rows[r].push((c, v));
                }
            }
        }
        for row in &mut m.rows {
            row.sort_unstable_by_key(|e| e.0);
            merge_duplicates(row);
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

fn merge_duplicates(row: &mut Vec<(usize, i64)>) {
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(row.len());
    for &(c, v) in row.iter() {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    *row = out;
}

/// Integer type usable by the elimination routines.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn abs_key(&self) -> BigInt;
    /// Euclidean quotient with nonnegative remainder.
    fn div_floor(&self, o: &Self) -> Self;
    fn is_divisible_by(&self, o: &Self) -> bool;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn to_big(&self) -> BigInt;

    fn sub(&self, o: &Self) -> Option<Self> {
        self.add(&o.neg()?)
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn abs_key(&self) -> BigInt {
        BigInt::from(*self).abs()
    }
    fn div_floor(&self, o: &Self) -> Self {
        self.div_euclid(*o)
    }
    fn is_divisible_by(&self, o: &Self) -> bool {
        self.rem_euclid(*o) == 0
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn abs_key(&self) -> BigInt {
        self.abs()
    }
    fn div_floor(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        if r.is_negative() {
            if o.is_positive() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        }
    }
    fn is_divisible_by(&self, o: &Self) -> bool {
        Zero::is_zero(&(self % o))
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug)]
struct Overflow;

type Row<T> = Vec<(usize, T)>;

/// `a*x + b*y` on sparse rows.
fn combine<T: Scalar>(a: &T, x: &Row<T>, b: &T, y: &Row<T>) -> Result<Row<T>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a.mul(&x[i].1).ok_or(Overflow)?));
            i += 1;
        } else if take_y {
            out.push((y[j].0, b.mul(&y[j].1).ok_or(Overflow)?));
            j += 1;
        } else {
            let v = a
                .mul(&x[i].1)
                .ok_or(Overflow)?
                .add(&b.mul(&y[j].1).ok_or(Overflow)?)
                .ok_or(Overflow)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Sparse elimination state shared by both routines.
struct Eliminator<T: Scalar> {
    rows: Vec<Option<Row<T>>>,
    cols: Vec<HashSet<usize>>,
    heap: BinaryHeap<Reverse<(usize, usize)>>,
}

impl<T: Scalar> Eliminator<T> {
    fn new(m: &SparseMatrix) -> Self {
        let mut cols = vec![HashSet::new(); m.n_cols];
        let mut rows = Vec::with_capacity(m.n_rows);
        let mut heap = BinaryHeap::new();
        for (r, row) in m.rows.iter().enumerate() {
            for &(c, _) in row {
                cols[c].insert(r);
            }
            if !row.is_empty() {
                heap.push(Reverse((row.len(), r)));
            }
            rows.push(Some(row.iter().map(|&(c, v)| (c, T::from_i64(v))).collect()));
        }
        Eliminator { rows, cols, heap }
    }

    fn replace_row(&mut self, r: usize, new: Row<T>) {
        let old = self.rows[r].take().unwrap_or_default();
        for (c, _) in &old {
            self.cols[*c].remove(&r);
        }
        for (c, _) in &new {
            self.cols[*c].insert(r);
        }
        if !new.is_empty() {
            self.heap.push(Reverse((new.len(), r)));
        }
        self.rows[r] = Some(new);
    }

    fn remove_row(&mut self, r: usize) -> Row<T> {
        let row = self.rows[r].take().unwrap_or_default();
        for (c, _) in &row {
            self.cols[*c].remove(&r);
        }
        row
    }

    /// Pivot on (r, c): clear column c from all other rows using row r, then drop row r.
    /// With `fraction_free`, rows are scaled instead of requiring a unit pivot.
    fn pivot(&mut self, r: usize, c: usize, fraction_free: bool) -> Result<(), Overflow> {
        let prow = self.remove_row(r);
        let pval = prow.iter().find(|e| e.0 == c).unwrap().1.clone();
        let others: Vec<usize> = self.cols[c].iter().copied().collect();
        for i in others {
            let row = self.rows[i].as_ref().unwrap();
            let aic = row.iter().find(|e| e.0 == c).unwrap().1.clone();
            let new = if fraction_free {
                let g = pval.gcd(&aic);
                let a = pval.div_exact(&g);
                let b = aic.div_exact(&g).neg().ok_or(Overflow)?;
                let mut new = combine(&a, row, &b, &prow)?;
                let content = new.iter().fold(T::from_i64(0), |acc, e| acc.gcd(&e.1));
                if !content.is_zero() && !content.is_unit() {
                    for e in &mut new {
                        e.1 = e.1.div_exact(&content);
                    }
                }
                new
            } else {
                // Unit pivot: row_i -= (a_ic / p) * row_p, and 1/p = p.
                let f = aic.mul(&pval).ok_or(Overflow)?.neg().ok_or(Overflow)?;
                combine(&T::from_i64(1), row, &f, &prow)?
            };
            self.replace_row(i, new);
        }
        Ok(())
    }

    /// Next live row by length, skipping stale heap entries.
    fn pop_row(&mut self) -> Option<usize> {
        while let Some(Reverse((len, r))) = self.heap.pop() {
            if let Some(row) = &self.rows[r] {
                if row.len() == len && !row.is_empty() {
                    return Some(r);
                }
            }
        }
        None
    }

    fn remaining_rows(&mut self) -> Vec<Row<T>> {
        self.rows
            .iter_mut()
            .filter_map(|r| r.take())
            .filter(|r| !r.is_empty())
            .collect()
    }
}

/// Rank and nontrivial invariant factors (those other than 1) of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

pub fn smith_invariants(m: &SparseMatrix) -> SnfResult {
    match smith_with::<i64>(m) {
        Ok(r) => r,
        Err(Overflow) => smith_with::<BigInt>(m).expect("big integers do not overflow"),
    }
}

fn smith_with<T: Scalar>(m: &SparseMatrix) -> Result<SnfResult, Overflow> {
    let mut el = Eliminator::<T>::new(m);
    let mut units = 0usize;
    while let Some(r) = el.pop_row() {
        let row = el.rows[r].as_ref().unwrap();
        let best = row
            .iter()
            .filter(|e| e.1.is_unit())
            .min_by_key(|e| el.cols[e.0].len())
            .map(|e| e.0);
        match best {
            Some(c) => {
                el.pivot(r, c, false)?;
                units += 1;
            }
            // Rows without a unit wait for the dense phase unless a later
            // update pushes them back on the heap.
            None => {}
        }
    }
    let rest = el.remaining_rows();
    let diag = dense_smith::<T>(rest)?;
    let mut torsion: Vec<BigInt> = Vec::new();
    let mut rank = units;
    for d in diag {
        rank += 1;
        if !d.is_one() {
            torsion.push(d);
        }
    }
    torsion.sort();
    Ok(SnfResult { rank, torsion })
}

/// Smith normal form of a small dense remainder; returns the nonzero
/// invariant factors as positive integers.
fn dense_smith<T: Scalar>(rows: Vec<Row<T>>) -> Result<Vec<BigInt>, Overflow> {
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let mut col_ids: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    col_ids.sort_unstable();
    col_ids.dedup();
    let n_rows = rows.len();
    let n_cols = col_ids.len();
    let zero = T::from_i64(0);
    let mut a = vec![vec![zero.clone(); n_cols]; n_rows];
    for (i, row) in rows.iter().enumerate() {
        for (c, v) in row {
            let j = col_ids.binary_search(c).unwrap();
            a[i][j] = v.clone();
        }
    }
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < n_rows.min(n_cols) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs_key() < a[bi][bj].abs_key()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..n_rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..n_cols {
                    let v = a[i][j].sub(&q.mul(&a[t][j]).ok_or(Overflow)?).ok_or(Overflow)?;
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n_cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let v = row[j].sub(&q.mul(&row[t]).ok_or(Overflow)?).ok_or(Overflow)?;
                    row[j] = v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Enforce divisibility of the trailing block by the pivot.
                let bad = (t + 1..n_rows)
                    .flat_map(|i| (t + 1..n_cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_divisible_by(&p));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..n_cols {
                            let v = a[t][j].add(&a[i][j]).ok_or(Overflow)?;
                            a[t][j] = v;
                        }
                        continue;
                    }
                }
            }
            // Move the smallest nonzero entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..n_rows {
                if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs_key() < a[best.0][best.1].abs_key()) {
                    best = (i, t);
                }
            }
            for j in t..n_cols {
                if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs_key() < a[best.0][best.1].abs_key()) {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].to_big().abs());
        t += 1;
    }
    // Normalize the divisibility chain.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = Integer::gcd(&diag[i], &diag[j]);
            let l = Integer::lcm(&diag[i], &diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    Ok(diag)
}

/// Rank over the rationals by fraction-free sparse elimination.
pub fn rational_rank(m: &SparseMatrix) -> usize {
    match rational_rank_with::<i64>(m) {
        Ok(r) => r,
        Err(Overflow) => rational_rank_with::<BigInt>(m).expect("big integers do not overflow"),
    }
}

fn rational_rank_with<T: Scalar>(m: &SparseMatrix) -> Result<usize, Overflow> {
    let mut el = Eliminator::<T>::new(m);
    let mut rank = 0;
    while let Some(r) = el.pop_row() {
        let row = el.rows[r].as_ref().unwrap();
        let c = row
            .iter()
            .min_by_key(|e| (!e.1.is_unit(), el.cols[e.0].len()))
            .unwrap()
            .0;
        el.pivot(r, c, true)?;
        rank += 1;
    }
    Ok(rank)
}

/// Rank over GF(2).
pub fn mod2_rank(m: &SparseMatrix) -> usize {
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); m.n_cols];
    for (r, row) in m.rows.iter().enumerate() {
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                cols[c].push(r);
            }
        }
    }
    crate::gf2::sparse_rank(&cols)
}

/// Converts a small value for reporting.
pub fn to_u64(b: &BigInt) -> Option<u64> {
    b.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let n_cols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::new(rows.len(), n_cols);
        for (i, r) in rows.iter().enumerate() {
            m.rows[i] = r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j, v)).collect();
        }
        m
    }

    #[test]
    fn snf_small_cases() {
        let m = dense(&[&[2, 0], &[0, 3]]);
        assert_eq!(smith_invariants(&m), SnfResult { rank: 2, torsion: vec![BigInt::from(6)] });
        let m = dense(&[&[2, 4], &[4, 8]]);
        assert_eq!(smith_invariants(&m), SnfResult { rank: 1, torsion: vec![BigInt::from(2)] });
        let m = dense(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]);
        assert_eq!(smith_invariants(&m), SnfResult { rank: 2, torsion: vec![] });
        let m = dense(&[&[6, 4], &[4, 6]]);
        let r = smith_invariants(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.torsion, vec![BigInt::from(2), BigInt::from(10)]);
    }

    #[test]
    fn ranks_over_fields() {
        let m = dense(&[&[2, 0], &[0, 3]]);
        assert_eq!(rational_rank(&m), 2);
        assert_eq!(mod2_rank(&m), 1);
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rational_rank(&m), 2);
    }

    #[test]
    fn big_fallback_matches() {
        let big = i64::MAX / 2;
        let m = dense(&[&[big, 3], &[5, big]]);
        let r = smith_invariants(&m);
        let b = smith_with::<BigInt>(&m).unwrap();
        assert_eq!(r, b);
        assert_eq!(rational_rank(&m), 2);
    }
}
