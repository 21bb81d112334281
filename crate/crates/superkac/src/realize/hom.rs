//! Hom-space solver and the auxiliary `g₀[A]`-modules the extension
//! theorems reduce to.
//!
//! `hom_space` solves `φ∘ρ₁(u) = ρ₂(u)∘φ` over the chosen acting algebra
//! by exact linear algebra; intertwiners are weight-preserving, so the
//! unknowns are restricted to weight-matched matrix entries.  The modules
//! `Θ⊠V` and `g₋₁[k_Θ/mᴺ] ⊗ (Θ⊠V)` are materialized here for the Hom
//! spaces appearing on the right-hand side of the Ext¹ classification.

use std::collections::HashMap;
use std::sync::Arc;

use num::Zero;

use crate::charring::G0IrrepLabel;
use crate::coeffalg::{TruncatedAlgebra, ZFunctional};
use crate::error::{Error, Result};
use crate::linalg::{Rref, SparseMat, SparseVec};
use crate::rootdata::{root_weight, Parity, Weight};
use crate::scalar::{q_one, q_zero, Q};

use super::g0rep::build_g0_irrep;
use super::module::{ActingOn, ExplicitModule};
use super::superalgebra::MatrixSuperalgebra;

/// Solve for intertwiners `φ: M₁ → M₂` over `g[A/mᴺ]` or `g₀[A/mᴺ]`.
///
/// Both modules must share the ambient truncation.  Returns the dimension
/// and a basis of the solution space.
pub fn hom_space(
    m1: &ExplicitModule,
    m2: &ExplicitModule,
    over: ActingOn,
) -> Result<(usize, Vec<SparseMat>)> {
    if m1.ambient.r != m2.ambient.r || m1.ambient.order != m2.ambient.order {
        return Err(Error::Precondition(
            "hom solve needs modules over the same truncated algebra".into(),
        ));
    }
    let alg = &m1.alg;
    let evens: Vec<usize> = (0..alg.dim())
        .filter(|&g| alg.parity_of(g) == Parity::Even)
        .collect();
    let gens: Vec<usize> = match over {
        ActingOn::G0 => evens,
        ActingOn::G => (0..alg.dim()).collect(),
    };
    for &g in &gens {
        if !m1.has_action(g) || !m2.has_action(g) {
            return Err(Error::Precondition(
                "module does not carry the requested acting algebra".into(),
            ));
        }
    }

    // unknowns: weight-matched entries φ[r][c]
    let mut unknown_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut unknown_list: Vec<(usize, usize)> = Vec::new();
    for r in 0..m2.dim {
        for c in 0..m1.dim {
            if m2.weights[r] == m1.weights[c] {
                unknown_index.insert((r, c), unknown_list.len());
                unknown_list.push((r, c));
            }
        }
    }
    crate::caps::check_cochain_dim(unknown_list.len())?;

    let mut system = Rref::new(unknown_list.len());
    for &g in &gens {
        for mono in 0..m1.ambient.dim() {
            let a1 = m1.act_ambient(g, mono);
            let a2 = m2.act_ambient(g, mono);
            if a1.is_zero() && a2.is_zero() {
                continue;
            }
            let a2t = a2.transpose();
            // equation entries at (r, c): (φ a1 − a2 φ)[r][c] = 0
            for r in 0..m2.dim {
                for c in 0..m1.dim {
                    let mut row: Vec<(usize, Q)> = Vec::new();
                    for (k, v) in &a1.cols[c] {
                        if let Some(&u) = unknown_index.get(&(r, *k)) {
                            row.push((u, v.clone()));
                        }
                    }
                    for (k, v) in &a2t.cols[r] {
                        if let Some(&u) = unknown_index.get(&(*k, c)) {
                            row.push((u, -v.clone()));
                        }
                    }
                    if row.is_empty() {
                        continue;
                    }
                    row.sort_by_key(|(i, _)| *i);
                    // merge duplicates
                    let mut merged: SparseVec = Vec::new();
                    for (i, v) in row {
                        match merged.last_mut() {
                            Some((j, acc)) if *j == i => *acc += v,
                            _ => merged.push((i, v)),
                        }
                    }
                    merged.retain(|(_, v)| !v.is_zero());
                    system.insert(merged);
                }
            }
        }
    }

    let kernel = system.kernel_basis();
    let basis: Vec<SparseMat> = kernel
        .iter()
        .map(|vec| {
            let mut m = SparseMat::zero(m2.dim, m1.dim);
            for (u, v) in vec {
                let (r, c) = unknown_list[*u];
                m.set(r, c, v.clone());
            }
            m
        })
        .collect();
    Ok((basis.len(), basis))
}

/// The evaluation `g₀[A/mᴺ]`-module `Θ ⊠ V`: the semisimple part acts
/// through evaluation at the point, `z ⊗ a` by `Θ(z⊗a)`.
pub fn l_module(
    alg: &Arc<MatrixSuperalgebra>,
    ambient: &TruncatedAlgebra,
    theta: &ZFunctional,
    vlabel: &G0IrrepLabel,
) -> Result<ExplicitModule> {
    let rep = build_g0_irrep(alg, vlabel)?;
    let dim = rep.dim;
    let b_dim = ambient.dim();
    let mut action: HashMap<(usize, usize), SparseMat> = HashMap::new();
    for g in 0..alg.dim() {
        if alg.parity_of(g) != Parity::Even {
            continue;
        }
        for k in 0..b_dim {
            let mat = if g == alg.idx_z() {
                let t = theta.value(&ambient.basis[k]);
                SparseMat::identity(dim).scale(&t)
            } else if k == 0 {
                rep.action[&g].clone()
            } else {
                SparseMat::zero(dim, dim)
            };
            action.insert((g, k), mat);
        }
    }
    let weights: Vec<Weight> = rep
        .weights
        .iter()
        .map(|w| {
            let mut w = w.clone();
            w.z = theta.theta_z();
            w
        })
        .collect();
    let reduction: Vec<Vec<Q>> = (0..b_dim)
        .map(|m| {
            let mut v = vec![q_zero(); b_dim];
            v[m] = q_one();
            v
        })
        .collect();
    Ok(ExplicitModule {
        alg: Arc::clone(alg),
        ambient: ambient.clone(),
        quotient_monos: (0..b_dim).collect(),
        dim,
        parities: vec![Parity::Even; dim],
        weights,
        hw_index: Some(rep.hw_index),
        acting: ActingOn::G0,
        action,
        reduction,
        theta: Some(theta.clone()),
        vlabel: Some(vlabel.clone()),
    })
}

/// The `g₀[A/mᴺ]`-module `g₋₁[W] ⊗ L` for a multiplication-closed subspace
/// `W ⊆ A/mᴺ` (typically `k_Θ/mᴺ`), given by fully reduced rows.
pub fn g0_tensor_module(
    ambient: &TruncatedAlgebra,
    subspace_rows: &[Vec<Q>],
    subspace_pivots: &[usize],
    l: &ExplicitModule,
) -> Result<ExplicitModule> {
    let alg = &l.alg;
    let knum = subspace_rows.len();
    let vdim = l.dim;
    let q_odd = alg.odd_positive.len();
    let dim = q_odd * knum * vdim;
    crate::caps::check_module_dim(dim)?;

    let coords_in_subspace = |v: &[Q]| -> Result<Vec<Q>> {
        let mut residual = v.to_vec();
        let mut coords = vec![q_zero(); knum];
        for (j, (row, &p)) in subspace_rows.iter().zip(subspace_pivots).enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (t, rv) in row.iter().enumerate() {
                if !rv.is_zero() {
                    residual[t] = &residual[t] - &(&c * rv);
                }
            }
            coords[j] = c;
        }
        if residual.iter().any(|q| !q.is_zero()) {
            return Err(Error::Internal(
                "product left the multiplication-closed subspace".into(),
            ));
        }
        Ok(coords)
    };

    let index = |b: usize, j: usize, v: usize| (b * knum + j) * vdim + v;
    let y_idx: Vec<usize> = alg
        .odd_positive
        .iter()
        .map(|r| alg.idx_y(r))
        .collect::<Result<_>>()?;

    let mut action: HashMap<(usize, usize), SparseMat> = HashMap::new();
    for g in 0..alg.dim() {
        if alg.parity_of(g) != Parity::Even {
            continue;
        }
        for mono in 0..ambient.dim() {
            let mut mat = SparseMat::zero(dim, dim);
            for b in 0..q_odd {
                // bracket part: [g⊗T̄^mono, y_β⊗κ_j] = Σ c·y_{β'} ⊗ T̄^mono κ_j
                let bracket = &alg.brackets[g][y_idx[b]];
                for j in 0..knum {
                    let shifted = ambient.mul_vector_by_monomial(&subspace_rows[j], mono);
                    let coords = if shifted.iter().all(|q| q.is_zero()) {
                        vec![q_zero(); knum]
                    } else {
                        coords_in_subspace(&shifted)?
                    };
                    for v in 0..vdim {
                        let col = index(b, j, v);
                        for (lbl2, c2) in bracket {
                            let Some(b2) = y_idx.iter().position(|&y| y == *lbl2) else {
                                continue;
                            };
                            for (j2, cj) in coords.iter().enumerate() {
                                if cj.is_zero() {
                                    continue;
                                }
                                mat.add_to(index(b2, j2, v), col, &(c2 * cj));
                            }
                        }
                        // diagonal part: id ⊗ ρ_L(g⊗T̄^mono)
                        let lmat = l.act_ambient(g, mono);
                        for (r, c) in &lmat.cols[v] {
                            mat.add_to(index(b, j, *r), col, c);
                        }
                    }
                }
            }
            action.insert((g, mono), mat);
        }
    }

    let mut weights = Vec::with_capacity(dim);
    let mut parities = Vec::with_capacity(dim);
    for b in 0..q_odd {
        let shift = root_weight(&alg.id, &alg.odd_positive[b].negate());
        for _j in 0..knum {
            for v in 0..vdim {
                weights.push(l.weights[v].add(&shift));
                parities.push(Parity::Odd);
            }
        }
    }
    let reduction: Vec<Vec<Q>> = (0..ambient.dim())
        .map(|m| {
            let mut v = vec![q_zero(); ambient.dim()];
            v[m] = q_one();
            v
        })
        .collect();
    Ok(ExplicitModule {
        alg: Arc::clone(alg),
        ambient: ambient.clone(),
        quotient_monos: (0..ambient.dim()).collect(),
        dim,
        parities,
        weights,
        hw_index: None,
        acting: ActingOn::G0,
        action,
        reduction,
        theta: None,
        vlabel: None,
    })
}


/// The `g`-module `g ⊗ V` (adjoint tensor a given evaluation module), over
/// an order-1 ambient truncation.
pub fn adjoint_tensor_module(v: &ExplicitModule) -> Result<ExplicitModule> {
    if v.ambient.order != 1 {
        return Err(Error::Precondition(
            "adjoint tensor is built over an order-1 truncation".into(),
        ));
    }
    let alg = &v.alg;
    let gdim = alg.dim();
    let dim = gdim * v.dim;
    crate::caps::check_module_dim(dim)?;
    let index = |w: usize, m: usize| w * v.dim + m;
    let mut action: HashMap<(usize, usize), SparseMat> = HashMap::new();
    for u in 0..gdim {
        let mut mat = SparseMat::zero(dim, dim);
        let u_odd = alg.parity_of(u) == Parity::Odd;
        for w in 0..gdim {
            let sign = if u_odd && alg.parity_of(w) == Parity::Odd {
                crate::scalar::q_int(-1)
            } else {
                q_one()
            };
            for m in 0..v.dim {
                let col = index(w, m);
                // [u, w] ⊗ m
                for (w2, c) in &alg.brackets[u][w] {
                    mat.add_to(index(*w2, m), col, c);
                }
                // (−1)^{|u||w|} w ⊗ u·m
                for (m2, c) in &v.act(u, 0).cols[m] {
                    mat.add_to(index(w, *m2), col, &(&sign * c));
                }
            }
        }
        action.insert((u, 0), mat);
    }
    let mut weights = Vec::with_capacity(dim);
    let mut parities = Vec::with_capacity(dim);
    for w in 0..gdim {
        for m in 0..v.dim {
            weights.push(alg.weights[w].add(&v.weights[m]));
            parities.push(
                if (alg.parity_of(w) == Parity::Odd) ^ (v.parities[m] == Parity::Odd) {
                    Parity::Odd
                } else {
                    Parity::Even
                },
            );
        }
    }
    Ok(ExplicitModule {
        alg: Arc::clone(alg),
        ambient: v.ambient.clone(),
        quotient_monos: v.quotient_monos.clone(),
        dim,
        parities,
        weights,
        hw_index: None,
        acting: v.acting,
        action,
        reduction: v.reduction.clone(),
        theta: None,
        vlabel: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffalg::annihilator_ideal;
    use crate::realize::build_superalgebra;
    use crate::realize::module::build_kac_like;
    use crate::rootdata::AlgebraId;
    use crate::scalar::q_int;

    #[test]
    fn schur_on_irreducible() {
        let alg = build_superalgebra(&AlgebraId::sl(1, 2).unwrap()).unwrap();
        let theta =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module =
            build_kac_like(&alg, &trunc, &theta, &G0IrrepLabel::trivial(&alg.id)).unwrap();
        let (d, basis) = hom_space(&module, &module, ActingOn::G).unwrap();
        assert_eq!(d, 1);
        // the intertwiner is a scalar
        let m = &basis[0];
        let c = m.get(0, 0);
        assert_eq!(m, &SparseMat::identity(module.dim).scale(&c));
    }

    #[test]
    fn homs_separate_z_weights() {
        let alg = build_superalgebra(&AlgebraId::sl(1, 2).unwrap()).unwrap();
        let theta1 =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let theta2 = ZFunctional::from_entries(
            1,
            2,
            &[(vec![0], q_int(17)), (vec![1], q_int(1))],
        )
        .unwrap();
        let trunc = annihilator_ideal(&theta1).unwrap();
        let m1 = build_kac_like(&alg, &trunc, &theta1, &G0IrrepLabel::trivial(&alg.id)).unwrap();
        let m2 = build_kac_like(&alg, &trunc, &theta2, &G0IrrepLabel::trivial(&alg.id)).unwrap();
        let (d, _) = hom_space(&m1, &m2, ActingOn::G).unwrap();
        assert_eq!(d, 0);
    }

    #[test]
    fn dual_intertwiner_is_one_dimensional() {
        let alg = build_superalgebra(&AlgebraId::sl(1, 2).unwrap()).unwrap();
        let theta =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module =
            build_kac_like(&alg, &trunc, &theta, &G0IrrepLabel::trivial(&alg.id)).unwrap();
        let dual = module.dual();
        let (d, _) = hom_space(&dual, &module, ActingOn::G).unwrap();
        assert_eq!(d, 1);
    }
}
