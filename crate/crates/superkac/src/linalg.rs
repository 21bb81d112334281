//! Exact rational linear algebra.
//!
//! Sparse vectors and matrices over `Q`, incremental row-echelon spans,
//! kernels and linear solves.  All elimination is exact; "residual zero"
//! in the rest of the crate always means identically zero, never small.

use std::collections::HashMap;

use num::Zero;

use crate::scalar::{q_one, Q};

/// Sparse vector: strictly increasing indices, nonzero entries.
pub type SparseVec = Vec<(usize, Q)>;

pub fn sv_from_dense(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(i, q)| (i, q.clone()))
        .collect()
}

pub fn sv_to_dense(v: &SparseVec, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, q) in v {
        out[*i] = q.clone();
    }
    out
}

/// `a + c*b`, merging sorted index lists and dropping cancellations.
pub fn sv_axpy(a: &SparseVec, c: &Q, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_scale(a: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, q)| (*i, q * c)).collect()
}

pub fn sv_get(a: &SparseVec, idx: usize) -> Q {
    match a.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(p) => a[p].1.clone(),
        Err(_) => Q::zero(),
    }
}

/// Row-echelon span with unit leading coefficients, built incrementally.
///
/// Rows are kept reduced against earlier pivots on insertion; call
/// [`Rref::back_substitute`] to obtain the fully reduced form before
/// extracting kernels.
#[derive(Debug, Clone)]
pub struct Rref {
    ncols: usize,
    rows: Vec<SparseVec>,
    row_of_pivot: HashMap<usize, usize>,
    reduced: bool,
}

impl Rref {
    pub fn new(ncols: usize) -> Self {
        Rref {
            ncols,
            rows: Vec::new(),
            row_of_pivot: HashMap::new(),
            reduced: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.row_of_pivot.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    /// Reduce `v` against the current rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((lead, coeff)) = v.first().cloned() else {
                return v;
            };
            match self.row_of_pivot.get(&lead) {
                Some(&r) => {
                    let c = -coeff;
                    v = sv_axpy(&v, &c, &self.rows[r]);
                }
                None => return v,
            }
        }
    }

    /// Insert a row; returns true if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((lead, coeff)) = v.first().cloned() else {
            return false;
        };
        let inv = q_one() / coeff;
        let v = sv_scale(&v, &inv);
        self.row_of_pivot.insert(lead, self.rows.len());
        self.rows.push(v);
        self.reduced = false;
        true
    }

    pub fn insert_dense(&mut self, v: &[Q]) -> bool {
        self.insert(sv_from_dense(v))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn contains_dense(&self, v: &[Q]) -> bool {
        self.contains(&sv_from_dense(v))
    }

    /// Eliminate every pivot column from the rows above it.
    pub fn back_substitute(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<(usize, usize)> = self
            .row_of_pivot
            .iter()
            .map(|(&col, &row)| (col, row))
            .collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        for (col, row) in order {
            let pivot_row = self.rows[row].clone();
            for r in 0..self.rows.len() {
                if r == row {
                    continue;
                }
                let c = sv_get(&self.rows[r], col);
                if !c.is_zero() {
                    let neg = -c;
                    self.rows[r] = sv_axpy(&self.rows[r], &neg, &pivot_row);
                }
            }
        }
        self.reduced = true;
    }

    /// Basis of the right kernel of the matrix whose rows span this space.
    pub fn kernel_basis(&mut self) -> Vec<SparseVec> {
        self.back_substitute();
        let pivots = self.pivot_cols();
        let is_pivot: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot.contains(&free) {
                continue;
            }
            let mut vec: SparseVec = Vec::new();
            for (col, &row) in &self.row_of_pivot {
                let c = sv_get(&self.rows[row], free);
                if !c.is_zero() {
                    vec.push((*col, -c));
                }
            }
            vec.push((free, q_one()));
            vec.sort_by_key(|(i, _)| *i);
            basis.push(vec);
        }
        basis
    }
}

/// Solve `A x = b` for dense `A` (rows) and `b`; free variables are set to 0.
/// Returns `None` when the system is inconsistent.
pub fn solve_dense(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rref = Rref::new(ncols + 1);
    for (row, rhs) in a.iter().zip(b.iter()) {
        let mut v = sv_from_dense(row);
        if !rhs.is_zero() {
            v.push((ncols, rhs.clone()));
        }
        rref.insert(v);
    }
    if rref.row_of_pivot.contains_key(&ncols) {
        return None;
    }
    rref.back_substitute();
    // After full reduction the pivot row for `col` reads x_col + Σ_free c_j x_j = rhs,
    // so with free variables at zero, x_col is the augmented entry.
    let mut x = vec![Q::zero(); ncols];
    for (&col, &row) in &rref.row_of_pivot {
        x[col] = sv_get(&rref.rows[row], ncols);
    }
    Some(x)
}

/// Sparse matrix stored by columns: `cols[j]` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat {
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            nrows: n,
            cols: (0..n).map(|i| vec![(i, q_one())]).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&r, |(i, _)| *i) {
            Ok(p) => {
                if v.is_zero() {
                    col.remove(p);
                } else {
                    col[p].1 = v;
                }
            }
            Err(p) => {
                if !v.is_zero() {
                    col.insert(p, (r, v));
                }
            }
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        sv_get(&self.cols[c], r)
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Q) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    /// Matrix-vector product on a dense vector.
    pub fn apply_dense(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.ncols());
        let mut y = vec![Q::zero(); self.nrows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                y[*i] += a * xj;
            }
        }
        y
    }

    pub fn apply_sparse(&self, x: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (j, xj) in x {
            acc = sv_axpy(&acc, xj, &self.cols[*j]);
        }
        acc
    }

    /// `self * other`.
    pub fn compose(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols(), other.nrows);
        SparseMat {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply_sparse(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.nrows, other.nrows);
        assert_eq!(self.ncols(), other.ncols());
        SparseMat {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| sv_axpy(a, &q_one(), b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add(&other.scale(&-q_one()))
    }

    pub fn scale(&self, c: &Q) -> SparseMat {
        SparseMat {
            nrows: self.nrows,
            cols: self.cols.iter().map(|col| sv_scale(col, c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut out = SparseMat::zero(self.ncols(), self.nrows);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.cols[*i].push((j, v.clone()));
            }
        }
        for col in out.cols.iter_mut() {
            col.sort_by_key(|(i, _)| *i);
        }
        out
    }

    /// Entries as `(row, col, value)` triplets in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.push((*i, j, v.clone()));
            }
        }
        out
    }
}

/// Functional composed with an operator: `(f ∘ M)_j = Σ_r f_r M_{rj}`.
pub fn row_times_mat(f: &SparseVec, m: &SparseMat) -> SparseVec {
    let mut out: SparseVec = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        let mut dot = Q::zero();
        let (mut i, mut k) = (0, 0);
        while i < f.len() && k < col.len() {
            match f[i].0.cmp(&col[k].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => k += 1,
                std::cmp::Ordering::Equal => {
                    dot += &f[i].1 * &col[k].1;
                    i += 1;
                    k += 1;
                }
            }
        }
        if !dot.is_zero() {
            out.push((j, dot));
        }
    }
    out
}

/// The largest subspace `S ⊆ ker(constraints)` with `op(S) ⊆ S` for every
/// listed operator, returned as an [`Rref`] of constraint functionals whose
/// kernel is `S`.  Iterates `S ← S ∩ op⁻¹(S)` to a fixed point.
pub fn largest_invariant_in_kernel(
    dim: usize,
    constraints: &[SparseVec],
    ops: &[&SparseMat],
) -> Rref {
    let mut cons = Rref::new(dim);
    for c in constraints {
        cons.insert(c.clone());
    }
    loop {
        let mut grew = false;
        let current: Vec<SparseVec> = cons.rows().to_vec();
        for row in &current {
            for op in ops {
                let new_row = row_times_mat(row, op);
                if cons.insert(new_row) {
                    grew = true;
                }
            }
        }
        if !grew {
            return cons;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_int;

    fn qv(vals: &[i64]) -> Vec<Q> {
        vals.iter().map(|&v| q_int(v)).collect()
    }

    #[test]
    fn rref_rank_and_kernel() {
        let mut r = Rref::new(3);
        r.insert_dense(&qv(&[1, 2, 3]));
        r.insert_dense(&qv(&[2, 4, 6]));
        r.insert_dense(&qv(&[0, 1, 1]));
        assert_eq!(r.rank(), 2);
        let kernel = r.kernel_basis();
        assert_eq!(kernel.len(), 1);
        // check A k = 0
        let k = sv_to_dense(&kernel[0], 3);
        for row in [qv(&[1, 2, 3]), qv(&[0, 1, 1])] {
            let dot: Q = row.iter().zip(&k).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_small_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = vec![qv(&[1, 1]), qv(&[1, -1])];
        let x = solve_dense(&a, &qv(&[3, 1])).unwrap();
        assert_eq!(x, qv(&[2, 1]));
        // inconsistent
        let a = vec![qv(&[1, 1]), qv(&[2, 2])];
        assert!(solve_dense(&a, &qv(&[1, 3])).is_none());
    }

    #[test]
    fn sparse_mat_ops() {
        let mut m = SparseMat::zero(2, 2);
        m.set(0, 1, q_int(1));
        m.set(1, 0, q_int(2));
        let v = m.apply_dense(&qv(&[3, 4]));
        assert_eq!(v, qv(&[4, 6]));
        let m2 = m.compose(&m);
        assert_eq!(m2.get(0, 0), q_int(2));
        assert_eq!(m2.get(1, 1), q_int(2));
        assert!(m2.get(0, 1).is_zero());
        let t = m.transpose();
        assert_eq!(t.get(1, 0), q_int(1));
        assert_eq!(t.get(0, 1), q_int(2));
    }

    #[test]
    fn invariant_subspace() {
        // rotation-like nilpotent: e1 -> e2 -> 0; invariant subspaces: 0, <e2>, all.
        let mut n = SparseMat::zero(2, 2);
        n.set(1, 0, q_int(1));
        // constraint: first coordinate = 0 (kernel = <e2>)
        let cons = vec![vec![(0usize, q_int(1))]];
        let inv = largest_invariant_in_kernel(2, &cons, &[&n]);
        assert_eq!(inv.rank(), 1); // kernel <e2> is already invariant
                                   // constraint: second coordinate = 0 (kernel = <e1>, not invariant)
        let cons = vec![vec![(1usize, q_int(1))]];
        let inv = largest_invariant_in_kernel(2, &cons, &[&n]);
        assert_eq!(inv.rank(), 2); // only 0 is invariant inside <e1>
    }
}
