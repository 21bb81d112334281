//! Explicit supermatrix realization of `sl(m|n)`.
//!
//! Root vectors are elementary matrices `E_{ij}` in the (m+n)×(m+n)
//! supermatrix algebra (rows/columns below `m` are even, the rest odd),
//! Cartan elements are diagonal.  All structure constants derive from this
//! realization; in particular the signs of odd root vectors are the ones
//! the elementary matrices produce.  The even part carries a Chevalley
//! basis and `z` is the diagonal matrix singled out in [`z_vector`].

use std::collections::HashMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{solve_dense, SparseMat};
use crate::rootdata::{
    distinguished_borel, even_simple_coroots, positive_roots, root_weight,
    z_vector, AlgebraId, Family, Parity, Root, Weight,
};
use crate::scalar::{q_zero, Q};

/// Label of a basis element of `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// Root vector `x_α` for a positive root α.
    X(Root),
    /// Root vector `y_α` spanning `g_{−α}`, α positive.
    Y(Root),
    /// k-th even simple coroot (in `hprime` coordinate order).
    H(usize),
    /// The fixed basis element of the center of `g₀`.
    Z,
}

impl BasisLabel {
    pub fn parity(&self) -> Parity {
        match self {
            BasisLabel::X(r) | BasisLabel::Y(r) => r.parity,
            _ => Parity::Even,
        }
    }
}

/// The supermatrix model of `sl(m|n)` with its structure-constant table.
#[derive(Debug)]
pub struct MatrixSuperalgebra {
    pub id: AlgebraId,
    pub labels: Vec<BasisLabel>,
    pub matrices: Vec<SparseMat>,
    pub even_positive: Vec<Root>,
    pub odd_positive: Vec<Root>,
    index: HashMap<BasisLabel, usize>,
    /// `brackets[i][j]` expands `[b_i, b_j]` over the basis.
    pub brackets: Vec<Vec<Vec<(usize, Q)>>>,
    /// Weight of each basis element (root weight, or zero on the Cartan).
    pub weights: Vec<Weight>,
}

fn elementary(size: usize, i: usize, j: usize) -> SparseMat {
    let mut m = SparseMat::zero(size, size);
    m.set(i, j, crate::scalar::q_one());
    m
}

fn diagonal(entries: &[Q]) -> SparseMat {
    let mut m = SparseMat::zero(entries.len(), entries.len());
    for (i, v) in entries.iter().enumerate() {
        m.set(i, i, v.clone());
    }
    m
}

/// Positions `(i, j)` with `coords[i] = 1`, `coords[j] = −1`.
fn root_positions(root: &Root) -> Result<(usize, usize)> {
    let mut plus = None;
    let mut minus = None;
    for (k, &c) in root.coords.iter().enumerate() {
        match c {
            1 => plus = Some(k),
            -1 => minus = Some(k),
            0 => {}
            _ => {
                return Err(Error::Internal(
                    "sl roots have coordinates in {−1,0,1}".into(),
                ))
            }
        }
    }
    match (plus, minus) {
        (Some(i), Some(j)) => Ok((i, j)),
        _ => Err(Error::Internal("malformed sl root".into())),
    }
}

impl MatrixSuperalgebra {
    /// Build the supermatrix realization; only `sl` is supported.
    pub fn new(id: &AlgebraId) -> Result<Self> {
        id.validate()?;
        if id.family != Family::Sl {
            return Err(Error::Domain("matrix oracle supports sl only".into()));
        }
        let size = id.m + id.n;
        let borel = distinguished_borel(id)?;
        let (even_pos, odd_pos) = positive_roots(id, &borel);

        let mut labels = Vec::new();
        let mut matrices = Vec::new();
        for root in even_pos.iter().chain(odd_pos.iter()) {
            let (i, j) = root_positions(root)?;
            labels.push(BasisLabel::X(root.clone()));
            matrices.push(elementary(size, i, j));
            labels.push(BasisLabel::Y(root.clone()));
            matrices.push(elementary(size, j, i));
        }
        for (k, h) in even_simple_coroots(id).iter().enumerate() {
            labels.push(BasisLabel::H(k));
            matrices.push(diagonal(h));
        }
        labels.push(BasisLabel::Z);
        matrices.push(diagonal(&z_vector(id)));

        let expected_dim = size * size - 1;
        if labels.len() != expected_dim {
            return Err(Error::Internal(format!(
                "basis has {} elements, expected {}",
                labels.len(),
                expected_dim
            )));
        }

        let index: HashMap<BasisLabel, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let weights = labels
            .iter()
            .map(|l| match l {
                BasisLabel::X(r) => root_weight(id, r),
                BasisLabel::Y(r) => root_weight(id, &r.negate()),
                _ => Weight::zero(id),
            })
            .collect();

        let mut alg = MatrixSuperalgebra {
            id: *id,
            labels,
            matrices,
            even_positive: even_pos,
            odd_positive: odd_pos,
            index,
            brackets: Vec::new(),
            weights,
        };
        alg.compute_brackets()?;
        Ok(alg)
    }

    fn flatten(m: &SparseMat) -> Vec<Q> {
        let size = m.nrows;
        let mut v = vec![q_zero(); size * size];
        for (i, j, q) in m.triplets() {
            v[i * size + j] = q;
        }
        v
    }

    /// Expand a supermatrix over the basis; errors when outside the span.
    pub fn expand(&self, m: &SparseMat) -> Result<Vec<(usize, Q)>> {
        let size = m.nrows;
        let cols: Vec<Vec<Q>> = self.matrices.iter().map(Self::flatten).collect();
        let rows: Vec<Vec<Q>> = (0..size * size)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let target = Self::flatten(m);
        let sol = solve_dense(&rows, &target)
            .ok_or_else(|| Error::Internal("matrix outside the algebra span".into()))?;
        for r in 0..size * size {
            let lhs: Q = cols.iter().zip(&sol).map(|(c, s)| &c[r] * s).sum();
            if lhs != target[r] {
                return Err(Error::Internal("matrix outside the algebra span".into()));
            }
        }
        Ok(sol
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .collect())
    }

    /// Supercommutator of two basis elements as matrices.
    pub fn bracket_matrix(&self, i: usize, j: usize) -> SparseMat {
        let a = &self.matrices[i];
        let b = &self.matrices[j];
        let ab = a.compose(b);
        let ba = b.compose(a);
        if self.labels[i].parity() == Parity::Odd && self.labels[j].parity() == Parity::Odd {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    fn compute_brackets(&mut self) -> Result<()> {
        let dim = self.labels.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let m = self.bracket_matrix(i, j);
                if !m.is_zero() {
                    table[i][j] = self.expand(&m)?;
                }
            }
        }
        self.brackets = table;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, label: &BasisLabel) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{label:?} is not a basis label")))
    }

    pub fn idx_x(&self, root: &Root) -> Result<usize> {
        self.label_index(&BasisLabel::X(root.clone()))
    }

    pub fn idx_y(&self, root: &Root) -> Result<usize> {
        self.label_index(&BasisLabel::Y(root.clone()))
    }

    pub fn idx_z(&self) -> usize {
        self.dim() - 1
    }

    pub fn parity_of(&self, idx: usize) -> Parity {
        self.labels[idx].parity()
    }

    /// The root vector spanning `g_β` for an arbitrary root β (negative
    /// roots map to `y` of the positive partner).
    pub fn root_vector_index(&self, beta: &Root) -> Result<usize> {
        if let Ok(i) = self.idx_x(beta) {
            return Ok(i);
        }
        self.idx_y(&beta.negate())
    }

    /// τ: swaps `x_α ↔ y_α`, fixes the Cartan.
    pub fn tau(&self, idx: usize) -> usize {
        match &self.labels[idx] {
            BasisLabel::X(r) => self.idx_y(r).expect("paired label"),
            BasisLabel::Y(r) => self.idx_x(r).expect("paired label"),
            _ => idx,
        }
    }

    /// Indices of the even part `g₀`.
    pub fn g0_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.parity_of(i) == Parity::Even)
            .collect()
    }

    /// Indices of `g₁` (positive odd root vectors).
    pub fn g1_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| matches!(&self.labels[i], BasisLabel::X(r) if r.parity == Parity::Odd))
            .collect()
    }

    /// Indices of `g₋₁` (negative odd root vectors).
    pub fn gm1_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| matches!(&self.labels[i], BasisLabel::Y(r) if r.parity == Parity::Odd))
            .collect()
    }

    /// `h_α = [x_α, y_α]` expanded over the basis.
    pub fn coroot_expansion(&self, alpha: &Root) -> Result<Vec<(usize, Q)>> {
        let i = self.idx_x(alpha)?;
        let j = self.idx_y(alpha)?;
        Ok(self.brackets[i][j].clone())
    }

    /// Short printable name of a basis element.
    pub fn label_name(&self, idx: usize) -> String {
        match &self.labels[idx] {
            BasisLabel::X(r) => format!("x{:?}", r.coords),
            BasisLabel::Y(r) => format!("y{:?}", r.coords),
            BasisLabel::H(k) => format!("h{k}"),
            BasisLabel::Z => "z".to_string(),
        }
    }

    /// The even `m×m ⊕ n×n` blocks of a basis matrix (for `g₀′`-modules).
    pub fn even_blocks(&self, idx: usize) -> (SparseMat, SparseMat) {
        let m = self.id.m;
        let n = self.id.n;
        let full = &self.matrices[idx];
        let mut eps = SparseMat::zero(m, m);
        let mut delta = SparseMat::zero(n, n);
        for (i, j, v) in full.triplets() {
            if i < m && j < m {
                eps.set(i, j, v);
            } else if i >= m && j >= m {
                delta.set(i - m, j - m, v);
            }
        }
        (eps, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{all_roots, coroot_vector, eval_on_cartan, pairing};
    use crate::scalar::q_is_integer;

    #[test]
    fn dimensions_and_closure() {
        for id in [AlgebraId::sl(1, 2).unwrap(), AlgebraId::sl(2, 2).unwrap()] {
            let alg = MatrixSuperalgebra::new(&id).unwrap();
            let size = id.m + id.n;
            assert_eq!(alg.dim(), size * size - 1);
            // closure was verified during construction (expand succeeded);
            // spot-check supertrace zero on every basis matrix
            for m in &alg.matrices {
                let mut strace = q_zero();
                for i in 0..size {
                    let sign = if i < id.m { 1 } else { -1 };
                    strace += crate::scalar::q_int(sign) * m.get(i, i);
                }
                assert!(strace.is_zero());
            }
        }
        assert!(MatrixSuperalgebra::new(&AlgebraId::osp(2).unwrap()).is_err());
    }

    #[test]
    fn coroot_bracket_matches_root_data() {
        for id in [AlgebraId::sl(1, 2).unwrap(), AlgebraId::sl(2, 2).unwrap()] {
            let alg = MatrixSuperalgebra::new(&id).unwrap();
            let borel = distinguished_borel(&id).unwrap();
            let (even_pos, odd_pos) = positive_roots(&id, &borel);
            for alpha in even_pos.iter().chain(odd_pos.iter()) {
                let i = alg.idx_x(alpha).unwrap();
                let j = alg.idx_y(alpha).unwrap();
                let h = alg.bracket_matrix(i, j);
                let expected = diagonal(&coroot_vector(&id, alpha));
                assert_eq!(h, expected, "h_α mismatch for {:?}", alpha.coords);
            }
        }
    }

    #[test]
    fn cartan_action_matches_pairing() {
        // [h, x_β] = β(h) x_β for every root β and Cartan element h
        for id in [AlgebraId::sl(1, 2).unwrap(), AlgebraId::sl(2, 2).unwrap()] {
            let alg = MatrixSuperalgebra::new(&id).unwrap();
            for beta in all_roots(&id) {
                let bidx = alg.root_vector_index(&beta).unwrap();
                for alpha in all_roots(&id) {
                    // h_α as a matrix: bracket against x_β
                    let h = diagonal(&coroot_vector(&id, &alpha));
                    let x = &alg.matrices[bidx];
                    let lhs = h.compose(x).sub(&x.compose(&h));
                    let expected = x.scale(&pairing(&id, &beta, &alpha).unwrap());
                    assert_eq!(lhs, expected);
                }
            }
        }
    }

    #[test]
    fn z_is_central_in_g0_and_grades_g1() {
        for id in [AlgebraId::sl(1, 2).unwrap(), AlgebraId::sl(2, 2).unwrap()] {
            let alg = MatrixSuperalgebra::new(&id).unwrap();
            let z = alg.idx_z();
            for &i in &alg.g0_indices() {
                assert!(alg.bracket_matrix(z, i).is_zero());
            }
            let zvec = z_vector(&id);
            for beta in &alg.odd_positive {
                let i = alg.idx_x(beta).unwrap();
                let expected = alg.matrices[i].scale(&eval_on_cartan(&beta.coords, &zvec));
                assert_eq!(alg.bracket_matrix(z, i), expected);
            }
        }
    }

    #[test]
    fn chevalley_integrality_on_even_part() {
        let id = AlgebraId::sl(2, 3).unwrap();
        let alg = MatrixSuperalgebra::new(&id).unwrap();
        let evens = alg.g0_indices();
        for &i in &evens {
            if matches!(alg.labels[i], BasisLabel::Z) {
                continue;
            }
            for &j in &evens {
                if matches!(alg.labels[j], BasisLabel::Z) {
                    continue;
                }
                for (k, c) in &alg.brackets[i][j] {
                    if matches!(alg.labels[*k], BasisLabel::Z) {
                        continue;
                    }
                    assert!(q_is_integer(c), "non-integral structure constant");
                }
            }
        }
    }
}
