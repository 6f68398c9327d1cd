//! Exact sparse linear algebra over the rationals.
//!
//! Elimination always pivots on the smallest column, then the smallest row
//! index, so every derived basis and particular solution is deterministic.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Sparse vector: index → nonzero entry.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn sparse_from_dense(dense: &[Scalar]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

/// `target += factor * source`, dropping cancelled entries.
fn axpy(target: &mut SparseVec, factor: &Scalar, source: &SparseVec) {
    for (&i, c) in source {
        let entry = target.entry(i).or_insert_with(Scalar::zero);
        *entry += factor * c;
        if entry.is_zero() {
            target.remove(&i);
        }
    }
}

fn scale_in_place(v: &mut SparseVec, factor: &Scalar) {
    for c in v.values_mut() {
        *c *= factor;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| sparse_from_dense(r)).collect(),
        }
    }

    /// Builds a `rows × columns.len()` matrix from sparse columns.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(&j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        if value.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, value);
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, c) in row {
                t.data[j].insert(i, c.clone());
            }
        }
        t
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.get(&j).map(|c| (i, c.clone())))
            .collect()
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (j, c) in row {
                if let Some(x) = v.get(j) {
                    acc += c * x;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

/// Reduced row-echelon form with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: SparseMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &SparseMatrix) -> Rref {
    let mut rows = m.data.clone();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].contains_key(&col)) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][&col].recip();
        scale_in_place(&mut rows[rank], &inv);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            if let Some(f) = row.get(&col).cloned() {
                axpy(row, &-f, &pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    Rref {
        matrix: SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            data: rows,
        },
        rank,
        pivots,
    }
}

/// A linear subspace of `ℚⁿ` held in canonical reduced echelon form.
///
/// Two subspaces are equal exactly when their representations are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(
            ambient,
            (0..ambient).map(|i| SparseVec::from([(i, Scalar::one())])),
        )
    }

    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let data: Vec<SparseVec> = vectors.into_iter().collect();
        debug_assert!(data.iter().all(|v| v.keys().all(|&i| i < ambient)));
        let m = SparseMatrix {
            rows: data.len(),
            cols: ambient,
            data,
        };
        let r = rref(&m);
        let mut basis = r.matrix.data;
        basis.truncate(r.rank);
        Self {
            ambient,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if let Some(f) = out.get(&p).cloned() {
                axpy(&mut out, &-f, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis.
    pub fn coordinates(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        if !self.contains(v) {
            return Err(Error::NotInSpace);
        }
        Ok(self
            .pivots
            .iter()
            .map(|p| v.get(p).cloned().unwrap_or_else(Scalar::zero))
            .collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::from_vectors(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }
}

/// `numerator / divisor` with canonical coset representatives.
///
/// Representatives are numerator vectors reduced modulo the divisor and
/// brought to echelon form, so they vanish on the divisor's pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    numerator: Subspace,
    divisor: Subspace,
    representatives: Subspace,
}

pub fn quotient(numerator: &Subspace, divisor: &Subspace) -> Result<QuotientSpace> {
    if numerator.ambient != divisor.ambient || !numerator.contains_subspace(divisor) {
        return Err(Error::NotSubspace);
    }
    let representatives = Subspace::from_vectors(
        numerator.ambient,
        numerator.basis.iter().map(|v| divisor.reduce(v)),
    );
    Ok(QuotientSpace {
        numerator: numerator.clone(),
        divisor: divisor.clone(),
        representatives,
    })
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn divisor(&self) -> &Subspace {
        &self.divisor
    }

    pub fn representatives(&self) -> &[SparseVec] {
        self.representatives.basis()
    }

    /// Coordinates of the coset of `v` relative to the representatives.
    pub fn coordinates(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        if !self.numerator.contains(v) {
            return Err(Error::NotInSpace);
        }
        self.representatives.coordinates(&self.divisor.reduce(v))
    }

    /// True when `v` lies in the divisor, i.e. its coset is zero.
    pub fn is_zero_class(&self, v: &SparseVec) -> bool {
        self.divisor.contains(v)
    }

    pub fn lift(&self, coords: &[Scalar]) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, rep) in coords.iter().zip(self.representatives()) {
            axpy(&mut out, c, rep);
        }
        out
    }
}

pub fn kernel_basis(m: &SparseMatrix) -> Subspace {
    let r = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = SparseVec::from([(f, Scalar::one())]);
        for (row, &p) in r.matrix.data.iter().zip(&r.pivots) {
            if let Some(c) = row.get(&f) {
                v.insert(p, -c);
            }
        }
        v
    });
    Subspace::from_vectors(m.cols, vectors)
}

pub fn image_basis(m: &SparseMatrix) -> Subspace {
    Subspace::from_vectors(m.rows, m.transpose().data)
}

/// Canonical particular solution of `m·x = target`: free variables are
/// zero. `None` when `target` is not in the image.
pub fn solve_in_image(m: &SparseMatrix, target: &SparseVec) -> Option<SparseVec> {
    let mut aug = m.clone();
    aug.cols += 1;
    for (&i, c) in target {
        aug.data[i].insert(m.cols, c.clone());
    }
    let r = rref(&aug);
    if r.pivots.last() == Some(&m.cols) {
        return None;
    }
    Some(
        r.matrix
            .data
            .iter()
            .zip(&r.pivots)
            .filter_map(|(row, &p)| row.get(&m.cols).map(|c| (p, c.clone())))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| scalar(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, c)| (i, scalar(c))).collect()
    }

    #[test]
    fn rref_small() {
        let id = SparseMatrix::identity(2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);

        let r = rref(&dense(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, [0]);
    }

    #[test]
    fn kernel_and_image_of_zero_map() {
        let z = SparseMatrix::zeros(3, 4);
        assert_eq!(kernel_basis(&z), Subspace::full(4));
        assert_eq!(image_basis(&z).dim(), 0);
    }

    #[test]
    fn quotient_edge_cases() {
        let a = Subspace::from_vectors(3, [v(&[(0, 1), (1, 1)]), v(&[(2, 5)])]);
        assert_eq!(quotient(&a, &a).unwrap().dim(), 0);
        assert_eq!(quotient(&a, &Subspace::zero(3)).unwrap().dim(), 2);
        let outside = Subspace::from_vectors(3, [v(&[(0, 1)])]);
        assert!(matches!(quotient(&a, &outside), Err(Error::NotSubspace)));
    }

    #[test]
    fn quotient_coordinates() {
        let num = Subspace::full(3);
        let div = Subspace::from_vectors(3, [v(&[(0, 1), (1, 1)])]);
        let q = quotient(&num, &div).unwrap();
        assert_eq!(q.dim(), 2);
        // e0 ≡ -e1 modulo the divisor.
        let c0 = q.coordinates(&v(&[(0, 1)])).unwrap();
        let c1 = q.coordinates(&v(&[(1, -1)])).unwrap();
        assert_eq!(c0, c1);
        assert!(q.is_zero_class(&v(&[(0, 2), (1, 2)])));
    }

    #[test]
    fn solve_examples() {
        let m = dense(&[&[1, 1, 0], &[0, 0, 1]]);
        let x = solve_in_image(&m, &v(&[(0, 3), (1, 2)])).unwrap();
        assert_eq!(x, v(&[(0, 3), (2, 2)]));
        assert_eq!(m.mul_vec(&x), v(&[(0, 3), (1, 2)]));
        assert_eq!(solve_in_image(&m, &SparseVec::new()), Some(SparseVec::new()));

        let singular = dense(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve_in_image(&singular, &v(&[(0, 1)])), None);
    }

    #[test]
    fn subspace_representation_is_canonical() {
        let a = Subspace::from_vectors(3, [v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 1)])]);
        let b = Subspace::from_vectors(
            3,
            [v(&[(0, 1), (1, 3), (2, 1)]), v(&[(0, 2), (1, 3), (2, -1)])],
        );
        assert_eq!(a, b);
    }
}
