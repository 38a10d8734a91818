//! Exact sparse linear algebra over the rationals.
//!
//! Everything in this crate is exact; vectors are sparse maps from a
//! coordinate index to a nonzero [`Q`].  The central piece is [`Echelon`],
//! an incremental row-echelon basis that records, for every reduced row, its
//! expression in terms of the vectors that were inserted, so that dependent
//! vectors come back with their coordinates in the selected basis.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Q = num_rational::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Sparse vector: coordinate index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

/// `y += a * x`, dropping coefficients that cancel.
pub fn axpy(y: &mut SparseVec, a: &Q, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (&i, v) in x {
        add_entry(y, i, a * v);
    }
}

/// `y[i] += value`, dropping the entry if it cancels.
pub fn add_entry<K: Ord>(y: &mut BTreeMap<K, Q>, i: K, value: Q) {
    if value.is_zero() {
        return;
    }
    match y.entry(i) {
        Entry::Vacant(e) => {
            e.insert(value);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn scaled(x: &SparseVec, a: &Q) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(&i, v)| (i, v * a)).collect()
}

pub fn unit_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Q::one());
    v
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut y = SparseVec::new();
        for (&j, v) in x {
            axpy(&mut y, v, &self.cols[j]);
        }
        y
    }

    /// `(row, col, value)` triplets in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(&i, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }
}

/// Result of inserting a vector into an [`Echelon`] basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector was independent and became basis vector `k`.
    Independent(usize),
    /// The vector equals the given combination of earlier basis vectors.
    Dependent(SparseVec),
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    vec: SparseVec,
    /// This row as a combination of the inserted basis vectors.
    comb: SparseVec,
}

/// Incremental echelon form with combination tracking.
///
/// Rows are stored in insertion order; row `k` vanishes on the pivots of rows
/// `0..k`, so one pass in insertion order fully reduces a vector.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut SparseVec) -> SparseVec {
        let mut comb = SparseVec::new();
        for row in &self.rows {
            let coeff = match v.get(&row.pivot) {
                Some(c) => c / &row.vec[&row.pivot],
                None => continue,
            };
            let neg = -coeff.clone();
            axpy(v, &neg, &row.vec);
            axpy(&mut comb, &coeff, &row.comb);
        }
        comb
    }

    /// Express `v` in the current basis without inserting it.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut w = v.clone();
        let comb = self.reduce(&mut w);
        if w.is_empty() {
            Some(comb)
        } else {
            None
        }
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insertion {
        let mut w = v.clone();
        let comb = self.reduce(&mut w);
        if w.is_empty() {
            return Insertion::Dependent(comb);
        }
        let k = self.rows.len();
        let pivot = *w.keys().next().expect("nonempty");
        let inv = Q::one() / &w[&pivot];
        let w = scaled(&w, &inv);
        // w_reduced = e_k - comb, rescaled with the row.
        let mut row_comb = scaled(&comb, &(-inv.clone()));
        add_entry(&mut row_comb, k, inv);
        self.rows.push(Row {
            pivot,
            vec: w,
            comb: row_comb,
        });
        Insertion::Independent(k)
    }
}

/// Exact rank of a family of sparse vectors.
pub fn rank<'a, I>(vectors: I) -> usize
where
    I: IntoIterator<Item = &'a SparseVec>,
{
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Inverse of a dense square matrix, `None` if singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// Largest integer `k` with `k <= x`.
pub fn floor_i64(x: &Q) -> i64 {
    use num_traits::ToPrimitive;
    x.floor().to_integer().to_i64().expect("floor fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, v)| (i, q(v))).collect()
    }

    #[test]
    fn echelon_reports_coordinates_of_dependent_vectors() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(&sv(&[(0, 1), (1, 2)])), Insertion::Independent(0));
        assert_eq!(e.insert(&sv(&[(1, 1), (2, 1)])), Insertion::Independent(1));
        // 2*v0 - 3*v1 = (2, 1, -3)
        match e.insert(&sv(&[(0, 2), (1, 1), (2, -3)])) {
            Insertion::Dependent(c) => assert_eq!(c, sv(&[(0, 2), (1, -3)])),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn zero_vector_is_dependent_on_anything() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(&SparseVec::new()), Insertion::Dependent(SparseVec::new()));
    }

    #[test]
    fn inverse_of_cartan_a2() {
        let m = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![qr(2, 3), qr(1, 3)], vec![qr(1, 3), qr(2, 3)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(floor_i64(&qr(-1, 3)), -1);
        assert_eq!(floor_i64(&qr(7, 3)), 2);
        assert_eq!(floor_i64(&q(-2)), -2);
    }
}
