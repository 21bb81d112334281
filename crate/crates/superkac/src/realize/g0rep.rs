//! Explicit irreducible `g₀′`-modules for the oracle.
//!
//! For `sl(m|n)` the even semisimple part is `sl(m) ⊕ sl(n)` acting by the
//! diagonal blocks of the supermatrices.  An irreducible with dominant
//! label λ is realized as the cyclic span of the top vector inside a tensor
//! product of fundamental wedge powers `Λ^j(ℂ^k)`, one factor per unit of
//! each fundamental coordinate.  The resulting dimension is checked against
//! the Weyl dimension formula.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::charring::{irrep_dimension, G0IrrepLabel};
use crate::error::{Error, Result};
use crate::linalg::{Rref, SparseMat};
use crate::rootdata::Weight;
use crate::scalar::{q_int, q_one, q_zero, Q};

use super::superalgebra::{BasisLabel, MatrixSuperalgebra};

/// Basis of `Λ^j(ℂ^k)`: sorted j-subsets in lexicographic order.
fn wedge_basis(k: usize, j: usize) -> Vec<Vec<usize>> {
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, k: usize, j: usize) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for t in start..k {
            cur.push(t);
            rec(out, cur, t + 1, k, j);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), 0, k, j);
    out
}

/// One tensor factor: a fundamental wedge power with its weights.
struct WedgeFactor {
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// fw coordinates (length k−1) of each basis vector.
    weights: Vec<Vec<i64>>,
    top: usize,
}

impl WedgeFactor {
    fn new(k: usize, j: usize) -> Self {
        let subsets = wedge_basis(k, j);
        let index: HashMap<Vec<usize>, usize> = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        // weight of e_t is the t-th standard functional; fw_i = δ_{t,i} − δ_{t,i+1}
        let weights = subsets
            .iter()
            .map(|s| {
                (0..k - 1)
                    .map(|i| {
                        let a = s.contains(&i) as i64;
                        let b = s.contains(&(i + 1)) as i64;
                        a - b
                    })
                    .collect()
            })
            .collect();
        let top = index[&(0..j).collect::<Vec<usize>>()];
        WedgeFactor {
            subsets,
            index,
            weights,
            top,
        }
    }

    fn dim(&self) -> usize {
        self.subsets.len()
    }

    /// Action of a `k×k` matrix as a derivation on the wedge.
    fn action(&self, mat: &SparseMat) -> SparseMat {
        let mut out = SparseMat::zero(self.dim(), self.dim());
        for (col, subset) in self.subsets.iter().enumerate() {
            for (pos, &s) in subset.iter().enumerate() {
                // replace e_s by mat·e_s = Σ_t mat[t,s] e_t
                for (t, v) in mat.cols[s].clone() {
                    if t == s {
                        out.add_to(col, col, &v);
                        continue;
                    }
                    if subset.contains(&t) {
                        continue;
                    }
                    let mut new_subset = subset.clone();
                    new_subset[pos] = t;
                    // sort and count transpositions
                    let mut sign = 1i64;
                    let mut arr = new_subset.clone();
                    for a in 1..arr.len() {
                        let mut b = a;
                        while b > 0 && arr[b - 1] > arr[b] {
                            arr.swap(b - 1, b);
                            sign = -sign;
                            b -= 1;
                        }
                    }
                    let row = self.index[&arr];
                    out.add_to(row, col, &(v * q_int(sign)));
                }
            }
        }
        out
    }
}

/// Irreducible module of one `sl(k)` block.
struct BlockIrrep {
    factors: Vec<WedgeFactor>,
    /// carrier dimension strides for mixed-radix indexing
    strides: Vec<usize>,
    carrier_dim: usize,
    /// basis rows (carrier coordinates), fully reduced, with weights
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    row_weights: Vec<Vec<i64>>,
    hw_row: usize,
}

impl BlockIrrep {
    fn new(k: usize, lambda: &[i64]) -> Result<Self> {
        assert_eq!(lambda.len(), k - 1);
        let mut factors = Vec::new();
        for (idx, &mult) in lambda.iter().enumerate() {
            for _ in 0..mult {
                factors.push(WedgeFactor::new(k, idx + 1));
            }
        }
        if factors.is_empty() {
            // trivial module
            return Ok(BlockIrrep {
                factors,
                strides: Vec::new(),
                carrier_dim: 1,
                rows: vec![vec![q_one()]],
                pivots: vec![0],
                row_weights: vec![vec![0; k - 1]],
                hw_row: 0,
            });
        }
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len() - 1).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].dim();
        }
        let carrier_dim = strides[0] * factors[0].dim();

        let carrier_weight = |idx: usize| -> Vec<i64> {
            let mut w = vec![0i64; k - 1];
            let mut rest = idx;
            for (f, &st) in factors.iter().zip(&strides) {
                let pos = rest / st;
                rest %= st;
                for (i, v) in f.weights[pos].iter().enumerate() {
                    w[i] += v;
                }
            }
            w
        };

        // lowering operators for the simple roots: E_{i+1,i}
        let mut lowering = Vec::new();
        for i in 0..k - 1 {
            let mut e = SparseMat::zero(k, k);
            e.set(i + 1, i, q_one());
            lowering.push(e);
        }
        let carrier_ops: Vec<SparseMat> = lowering
            .iter()
            .map(|m| tensor_derivation(&factors, &strides, carrier_dim, m))
            .collect();

        // cyclic closure of the top vector, kept as per-weight reduced spans
        let top_idx: usize = factors
            .iter()
            .zip(&strides)
            .map(|(f, &st)| f.top * st)
            .sum();
        let mut blocks: BTreeMap<Vec<i64>, Rref> = BTreeMap::new();
        let mut queue: Vec<(Vec<i64>, Vec<Q>)> = Vec::new();
        let mut top_vec = vec![q_zero(); carrier_dim];
        top_vec[top_idx] = q_one();
        let top_w = carrier_weight(top_idx);
        blocks
            .entry(top_w.clone())
            .or_insert_with(|| Rref::new(carrier_dim))
            .insert_dense(&top_vec);
        queue.push((top_w.clone(), top_vec));
        while let Some((w, v)) = queue.pop() {
            for (i, op) in carrier_ops.iter().enumerate() {
                let img = op.apply_dense(&v);
                if img.iter().all(|q| q.is_zero()) {
                    continue;
                }
                // weight drops by the i-th simple root: fw -= cartan row i
                let mut nw = w.clone();
                for j in 0..k - 1 {
                    let cart = if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    };
                    nw[j] -= cart;
                }
                let rref = blocks
                    .entry(nw.clone())
                    .or_insert_with(|| Rref::new(carrier_dim));
                if rref.insert_dense(&img) {
                    queue.push((nw.clone(), img));
                }
            }
        }

        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        let mut row_weights = Vec::new();
        let mut hw_row = None;
        for (w, rref) in blocks.iter_mut() {
            rref.back_substitute();
            for r in rref.rows() {
                pivots.push(r[0].0);
                rows.push(crate::linalg::sv_to_dense(r, carrier_dim));
                row_weights.push(w.clone());
                if *w == top_w && hw_row.is_none() {
                    hw_row = Some(rows.len() - 1);
                }
            }
        }
        let hw_row =
            hw_row.ok_or_else(|| Error::Internal("top weight vanished from closure".into()))?;
        Ok(BlockIrrep {
            factors,
            strides,
            carrier_dim,
            rows,
            pivots,
            row_weights,
            hw_row,
        })
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of a carrier vector in the row basis.
    fn coords_of(&self, v: &[Q]) -> Result<Vec<Q>> {
        let mut residual = v.to_vec();
        let mut coords = vec![q_zero(); self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (k, rv) in row.iter().enumerate() {
                if !rv.is_zero() {
                    residual[k] = &residual[k] - &(&c * rv);
                }
            }
            coords[i] = c;
        }
        if residual.iter().any(|q| !q.is_zero()) {
            return Err(Error::Internal(
                "vector escaped the irreducible block span".into(),
            ));
        }
        Ok(coords)
    }

    /// Restrict the action of a `k×k` block matrix to the irrep basis.
    fn restricted_action(&self, mat: &SparseMat) -> Result<SparseMat> {
        if self.factors.is_empty() {
            return Ok(SparseMat::zero(1, 1));
        }
        let carrier = tensor_derivation(&self.factors, &self.strides, self.carrier_dim, mat);
        let mut out = SparseMat::zero(self.dim(), self.dim());
        for (col, row_vec) in self.rows.iter().enumerate() {
            let img = carrier.apply_dense(row_vec);
            for (r, c) in self.coords_of(&img)?.into_iter().enumerate() {
                if !c.is_zero() {
                    out.set(r, col, c);
                }
            }
        }
        Ok(out)
    }
}

/// Derivation action of a block matrix on a tensor product of wedge factors.
fn tensor_derivation(
    factors: &[WedgeFactor],
    strides: &[usize],
    carrier_dim: usize,
    mat: &SparseMat,
) -> SparseMat {
    let mut out = SparseMat::zero(carrier_dim, carrier_dim);
    let factor_actions: Vec<SparseMat> = factors.iter().map(|f| f.action(mat)).collect();
    for col in 0..carrier_dim {
        // decode mixed radix
        let mut rest = col;
        let digits: Vec<usize> = strides
            .iter()
            .map(|&st| {
                let d = rest / st;
                rest %= st;
                d
            })
            .collect();
        for (fi, fa) in factor_actions.iter().enumerate() {
            for (t, v) in &fa.cols[digits[fi]] {
                let mut row = 0usize;
                for (gi, &d) in digits.iter().enumerate() {
                    let dd = if gi == fi { *t } else { d };
                    row += dd * strides[gi];
                }
                out.add_to(row, col, v);
            }
        }
    }
    out
}

/// An explicit irreducible `g₀′`-module with action matrices for every even
/// basis element of the matrix superalgebra (`z` excluded; it acts through
/// the central functional of the module being built).
pub struct G0Rep {
    pub dim: usize,
    pub weights: Vec<Weight>,
    pub hw_index: usize,
    pub action: HashMap<usize, SparseMat>,
}

/// Build the irreducible `g₀′`-module with the given dominant label.
pub fn build_g0_irrep(alg: &MatrixSuperalgebra, vlabel: &G0IrrepLabel) -> Result<G0Rep> {
    let id = &alg.id;
    vlabel.check_dominant(id)?;
    let per_ideal = vlabel.per_ideal(id);
    // block sizes in ideal order: sl(m) (when m ≥ 2) then sl(n)
    let mut blocks: Vec<(usize, BlockIrrep)> = Vec::new();
    let mut idx = 0;
    if id.m >= 2 {
        blocks.push((0, BlockIrrep::new(id.m, &per_ideal[idx])?));
        idx += 1;
    }
    blocks.push((1, BlockIrrep::new(id.n, &per_ideal[idx])?));

    let dims: Vec<usize> = blocks.iter().map(|(_, b)| b.dim()).collect();
    let total: usize = dims.iter().product();
    let mut strides = vec![1usize; blocks.len()];
    for i in (0..blocks.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }

    // weights: concatenate per-ideal fw coordinates; z is set by Θ later
    let mut weights = Vec::with_capacity(total);
    for g in 0..total {
        let mut rest = g;
        let mut hprime: Vec<Q> = Vec::new();
        for ((_, b), &st) in blocks.iter().zip(&strides) {
            let d = rest / st;
            rest %= st;
            hprime.extend(b.row_weights[d].iter().map(|&v| q_int(v)));
        }
        weights.push(Weight {
            hprime,
            z: q_zero(),
        });
    }
    let hw_index: usize = blocks
        .iter()
        .zip(&strides)
        .map(|((_, b), &st)| b.hw_row * st)
        .sum();

    // action of each even superalgebra basis element
    let mut action = HashMap::new();
    for i in 0..alg.dim() {
        if matches!(alg.labels[i], BasisLabel::Z) {
            continue;
        }
        if alg.parity_of(i) != crate::rootdata::Parity::Even {
            continue;
        }
        let (eps_block, delta_block) = alg.even_blocks(i);
        let mut total_mat = SparseMat::zero(total, total);
        for (bi, (which, block)) in blocks.iter().enumerate() {
            let mat = if *which == 0 { &eps_block } else { &delta_block };
            let restricted = block.restricted_action(mat)?;
            // embed as I ⊗ … ⊗ restricted ⊗ … ⊗ I
            for col in 0..total {
                let mut rest = col;
                let digits: Vec<usize> = strides
                    .iter()
                    .map(|&st| {
                        let d = rest / st;
                        rest %= st;
                        d
                    })
                    .collect();
                for (t, v) in &restricted.cols[digits[bi]] {
                    let mut row = 0usize;
                    for (gi, &d) in digits.iter().enumerate() {
                        let dd = if gi == bi { *t } else { d };
                        row += dd * strides[gi];
                    }
                    total_mat.add_to(row, col, v);
                }
            }
        }
        action.insert(i, total_mat);
    }

    let rep = G0Rep {
        dim: total,
        weights,
        hw_index,
        action,
    };
    // cross-check against the Weyl dimension formula
    let expected = irrep_dimension(id, vlabel)?;
    if rep.dim as i64 != expected {
        return Err(Error::Internal(format!(
            "explicit irrep dimension {} disagrees with character dimension {}",
            rep.dim, expected
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::AlgebraId;

    fn label(id: &AlgebraId, fw: &[i64]) -> G0IrrepLabel {
        G0IrrepLabel::new(
            id,
            Weight {
                hprime: fw.iter().map(|&v| q_int(v)).collect(),
                z: q_zero(),
            },
        )
        .unwrap()
    }

    #[test]
    fn sl12_irreps() {
        let id = AlgebraId::sl(1, 2).unwrap();
        let alg = MatrixSuperalgebra::new(&id).unwrap();
        for (fw, dim) in [(vec![0i64], 1usize), (vec![1], 2), (vec![2], 3), (vec![3], 4)] {
            let rep = build_g0_irrep(&alg, &label(&id, &fw)).unwrap();
            assert_eq!(rep.dim, dim);
        }
    }

    #[test]
    fn sl22_irreps() {
        let id = AlgebraId::sl(2, 2).unwrap();
        let alg = MatrixSuperalgebra::new(&id).unwrap();
        for (fw, dim) in [
            (vec![0i64, 0i64], 1usize),
            (vec![1, 0], 2),
            (vec![0, 1], 2),
            (vec![1, 1], 4),
            (vec![2, 0], 3),
        ] {
            let rep = build_g0_irrep(&alg, &label(&id, &fw)).unwrap();
            assert_eq!(rep.dim, dim, "label {fw:?}");
        }
    }

    #[test]
    fn action_respects_brackets() {
        let id = AlgebraId::sl(1, 2).unwrap();
        let alg = MatrixSuperalgebra::new(&id).unwrap();
        let rep = build_g0_irrep(&alg, &label(&id, &[2])).unwrap();
        let evens: Vec<usize> = alg
            .g0_indices()
            .into_iter()
            .filter(|&i| !matches!(alg.labels[i], BasisLabel::Z))
            .collect();
        for &i in &evens {
            for &j in &evens {
                let ab = rep.action[&i].compose(&rep.action[&j]);
                let ba = rep.action[&j].compose(&rep.action[&i]);
                let mut expected = SparseMat::zero(rep.dim, rep.dim);
                for (k, c) in &alg.brackets[i][j] {
                    if matches!(alg.labels[*k], BasisLabel::Z) {
                        continue;
                    }
                    expected = expected.add(&rep.action[k].scale(c));
                }
                assert_eq!(ab.sub(&ba), expected);
            }
        }
    }

    #[test]
    fn hw_vector_is_annihilated_by_raising() {
        let id = AlgebraId::sl(2, 2).unwrap();
        let alg = MatrixSuperalgebra::new(&id).unwrap();
        let rep = build_g0_irrep(&alg, &label(&id, &[1, 1])).unwrap();
        let mut hw = vec![q_zero(); rep.dim];
        hw[rep.hw_index] = q_one();
        for root in &alg.even_positive {
            let xi = alg.idx_x(root).unwrap();
            let img = rep.action[&xi].apply_dense(&hw);
            assert!(img.iter().all(|q| q.is_zero()));
        }
        // weight of the hw vector equals the label
        assert_eq!(
            rep.weights[rep.hw_index].hprime,
            vec![q_one(), q_one()]
        );
    }
}
