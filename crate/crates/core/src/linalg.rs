//! Exact linear algebra over the rationals.
//!
//! Ranks are computed by sparse fraction-free Gaussian elimination on integer
//! rows. Every row is kept primitive (content 1), and pivots prefer unit
//! entries, so boundary matrices of simplicial complexes almost never leave the
//! `i64` range. If they do, the elimination restarts on `BigInt`.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse matrix stored by columns; each column is sorted by row index and holds
/// no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    cols: Vec<Vec<(usize, T)>>,
}

impl<T: Clone + Zero> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    /// Builds a matrix from columns. Entries are sorted and zeros dropped;
    /// repeated row indices are summed.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, T)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|(r, _)| *r);
                let mut out: Vec<(usize, T)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < nrows, "row index {r} out of range {nrows}");
                    match out.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv = lv.clone() + v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|(_, v)| !v.is_zero());
                out
            })
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, T)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[(usize, T)]> {
        self.cols.iter().map(Vec::as_slice)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.cols[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => self.cols[c][pos].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

impl<T> SparseMatrix<T>
where
    T: Clone + Zero + core::ops::Mul<Output = T>,
{
    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!(self.ncols(), rhs.nrows(), "incompatible shapes");
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: Vec<(usize, T)> = Vec::new();
                for (k, v) in col {
                    for (r, w) in &self.cols[*k] {
                        acc.push((*r, w.clone() * v.clone()));
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }
}

/// Exact rank over ℚ of a rational matrix.
pub fn rank_rational(m: &SparseMatrix<BigRational>) -> usize {
    let rows: Vec<Vec<(u32, BigInt)>> = m.columns().map(primitive_integer_row).collect();
    let small: Option<Vec<Vec<(u32, i64)>>> =
        rows.iter().map(|row| row.iter().map(|(c, v)| v.to_i64().map(|v| (*c, v))).collect()).collect();
    match small {
        Some(rows) => rank_integer_rows(rows),
        None => eliminate(rows).expect("BigInt elimination cannot overflow"),
    }
}

/// Exact rank over ℚ of an integer matrix.
pub fn rank_integer(m: &SparseMatrix<i64>) -> usize {
    rank_integer_rows(m.columns().map(|c| c.iter().map(|(r, v)| (*r as u32, *v)).collect()).collect())
}

/// Exact rank over ℚ of the matrix whose rows are the given sparse vectors.
///
/// Each row must be sorted by column index and free of zeros.
pub fn rank_integer_rows(rows: Vec<Vec<(u32, i64)>>) -> usize {
    match eliminate(rows.clone()) {
        Some(r) => r,
        None => {
            let big = rows.into_iter().map(|row| row.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect();
            eliminate(big).expect("BigInt elimination cannot overflow")
        }
    }
}

fn primitive_integer_row(col: &[(usize, BigRational)]) -> Vec<(u32, BigInt)> {
    let lcm = col.iter().fold(<BigInt as One>::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut row: Vec<(u32, BigInt)> = col.iter().map(|(r, v)| (*r as u32, v.numer() * (&lcm / v.denom()))).collect();
    let g = row.iter().fold(<BigInt as Zero>::zero(), |acc, (_, v)| Integer::gcd(&acc, v));
    if !Zero::is_zero(&g) && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// Integer arithmetic used by the eliminator. `None` signals overflow.
trait Coeff: Clone + PartialEq {
    fn is_unit(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// `a * x - b * y`
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn gcd(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn zero() -> Self;
    fn one() -> Self;
}

impl Coeff for i64 {
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
}

impl Coeff for BigInt {
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
}

/// Rank by sparse elimination with a Markowitz-style pivot order: shortest
/// row first, and within it a unit entry in the sparsest column.
fn eliminate<C: Coeff>(mut rows: Vec<Vec<(u32, C)>>) -> Option<usize> {
    let ncols = rows.iter().filter_map(|r| r.last()).map(|(c, _)| *c as usize + 1).max().unwrap_or(0);
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut heap = BinaryHeap::with_capacity(rows.len());
    let mut active = vec![true; rows.len()];
    for (i, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(i as u32);
        }
        heap.push(Reverse((row.len(), i)));
    }

    let mut rank = 0;
    let mut scratch: Vec<(u32, C)> = Vec::new();
    while let Some(Reverse((len, r))) = heap.pop() {
        if !active[r] || rows[r].len() != len {
            continue;
        }
        active[r] = false;
        if len == 0 {
            continue;
        }
        rank += 1;

        let pivot_row = core::mem::take(&mut rows[r]);
        let (pc, pv) = pivot_row
            .iter()
            .min_by_key(|(c, v)| (!v.is_unit(), col_rows[*c as usize].len()))
            .map(|(c, v)| (*c, v.clone()))
            .expect("nonempty row");

        let candidates = core::mem::take(&mut col_rows[pc as usize]);
        for s in candidates {
            let s = s as usize;
            if !active[s] {
                continue;
            }
            let b = match rows[s].binary_search_by_key(&pc, |(c, _)| *c) {
                Ok(pos) => rows[s][pos].1.clone(),
                Err(_) => continue,
            };
            // s <- a*s - b*r, or s - (b/a)*r when a is a unit
            let (alpha, beta) = if pv.is_unit() { (C::one(), b.mul(&pv)?) } else { (pv.clone(), b) };
            scratch.clear();
            let old = &rows[s];
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < pivot_row.len() {
                let ci = old.get(i).map(|e| e.0).unwrap_or(u32::MAX);
                let cj = pivot_row.get(j).map(|e| e.0).unwrap_or(u32::MAX);
                if ci < cj {
                    let v = alpha.mul(&old[i].1)?;
                    scratch.push((ci, v));
                    i += 1;
                } else if cj < ci {
                    let v = beta.mul(&pivot_row[j].1)?.neg()?;
                    scratch.push((cj, v));
                    col_rows[cj as usize].push(s as u32);
                    j += 1;
                } else {
                    let v = C::mul_sub(&alpha, &old[i].1, &beta, &pivot_row[j].1)?;
                    if !v.is_zero() {
                        scratch.push((ci, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            if scratch.iter().any(|(_, v)| !v.is_unit()) {
                let g = scratch.iter().fold(C::zero(), |acc, (_, v)| acc.gcd(v));
                if !g.is_zero() && !g.is_unit() {
                    for (_, v) in scratch.iter_mut() {
                        *v = v.div(&g);
                    }
                }
            }
            core::mem::swap(&mut rows[s], &mut scratch);
            if rows[s].is_empty() {
                active[s] = false;
            } else {
                heap.push(Reverse((rows[s].len(), s)));
            }
        }
    }
    Some(rank)
}

/// Reduced row echelon form of a dense rational matrix. Returns the pivot column
/// of each nonzero row, in order.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, target) in m.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let factor = target[col].clone();
                for (t, v) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                    *t -= &factor * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Kernel of a dense `nrows x ncols` rational matrix, as `(free_columns, basis)`.
///
/// Basis vector `t` is 1 at `free_columns[t]`, 0 at the other free columns, so
/// the coordinates of any kernel vector are its entries at the free columns.
pub fn kernel_basis(m: &[Vec<BigRational>], ncols: usize) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let mut work: Vec<Vec<BigRational>> = m.to_vec();
    let pivots = rref(&mut work);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work[r][f].clone();
            }
            v
        })
        .collect();
    (free, basis)
}
