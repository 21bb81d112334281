//! Submodule search, irreducibility, and the ⋆-certificate.
//!
//! Irreducibility of a Kac-like module is decided by a single closure: the
//! top Grassmann line `p ⊗ v⁺` lies in every nonzero submodule, so the
//! module is irreducible exactly when that line generates everything.  The
//! unique maximal proper submodule is accumulated from proper seed closures
//! and saturated with the largest invariant subspace avoiding the
//! highest-weight coordinate; the result is cross-checked against the
//! structural Ω ⊕ Z decomposition by the verification suites.

use num::Zero;

use crate::coeffalg::{annihilator_ideal, below_nhat, StarPartner, TruncatedAlgebra, ZFunctional};
use crate::error::{Error, Result};
use crate::linalg::{largest_invariant_in_kernel, sv_to_dense, Rref, SparseMat};
use crate::scalar::{q_one, q_zero, Q};
use serde::Serialize;

use super::module::ExplicitModule;

/// Result of a brute-force submodule search.
#[derive(Debug, Clone, Serialize)]
pub struct SubmoduleReport {
    pub is_irreducible: bool,
    pub maximal_submodule_dim: usize,
    pub omega_dim: usize,
    pub z_part_dim: usize,
}

/// Span of the submodule generated by the given seed vectors.
pub fn closure(module: &ExplicitModule, seeds: &[Vec<Q>]) -> Rref {
    let keys = module.generator_keys();
    let mats: Vec<&SparseMat> = keys.iter().map(|k| &module.action[k]).collect();
    let mut span = Rref::new(module.dim);
    let mut queue: Vec<crate::linalg::SparseVec> = Vec::new();
    for s in seeds {
        let v = crate::linalg::sv_from_dense(s);
        if span.insert(v) {
            queue.push(span.rows().last().unwrap().clone());
        }
    }
    while let Some(v) = queue.pop() {
        for mat in &mats {
            let img = mat.apply_sparse(&v);
            if span.insert(img) {
                queue.push(span.rows().last().unwrap().clone());
            }
        }
    }
    span
}

fn unit_vec(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![q_zero(); dim];
    v[i] = q_one();
    v
}

/// Index of the socle seed `p ⊗ v⁺` (full Grassmann mask over the
/// highest-weight vector of `V`).
fn socle_seed_index(module: &ExplicitModule) -> Result<usize> {
    let hw = module
        .hw_index
        .ok_or_else(|| Error::Precondition("module has no highest-weight data".into()))?;
    let q_odd = module.alg.odd_positive.len();
    let gen_count = q_odd * module.b_dim();
    let vdim = module.dim >> gen_count;
    let full_mask = (1usize << gen_count) - 1;
    Ok(full_mask * vdim + hw % vdim)
}

/// The unique maximal proper submodule; `None` when irreducible.
fn maximal_submodule(module: &ExplicitModule) -> Result<Option<Rref>> {
    let dim = module.dim;
    let socle = closure(module, &[unit_vec(dim, socle_seed_index(module)?)]);
    if socle.rank() == dim {
        return Ok(None);
    }
    let hw = module.hw_index.expect("socle seed required hw");
    let mut acc = Rref::new(dim);
    for row in socle.rows() {
        acc.insert(row.clone());
    }
    for i in 0..dim {
        if acc.contains_dense(&unit_vec(dim, i)) {
            continue;
        }
        let c = closure(module, &[unit_vec(dim, i)]);
        if c.rank() < dim {
            for row in c.rows() {
                acc.insert(row.clone());
            }
        }
    }
    // largest invariant subspace inside the hyperplane avoiding the
    // highest-weight coordinate
    let keys = module.generator_keys();
    let ops: Vec<&SparseMat> = keys.iter().map(|k| &module.action[k]).collect();
    let mut inv = largest_invariant_in_kernel(dim, &[vec![(hw, q_one())]], &ops);
    for row in inv.kernel_basis() {
        acc.insert(row);
    }
    let rows: Vec<Vec<Q>> = acc.rows().iter().map(|r| sv_to_dense(r, dim)).collect();
    let closed = closure(module, &rows);
    if closed.rank() == dim {
        return Err(Error::Internal(
            "maximal submodule accumulation reached the whole module".into(),
        ));
    }
    Ok(Some(closed))
}

/// Closure-based search: reports irreducibility (sound and complete for
/// Kac-like inputs via the socle line) and the maximal-submodule data with
/// its Ω / Z split.
pub fn submodule_search(module: &ExplicitModule) -> Result<SubmoduleReport> {
    let maximal = maximal_submodule(module)?;
    let is_irreducible = maximal.is_none();
    let maximal_dim = maximal.map_or(0, |m| m.rank());

    let (omega_dim, z_part_dim) = match (&module.theta, &module.vlabel) {
        (Some(theta), Some(vlabel)) if !is_irreducible => {
            if module.ambient.order == 1 {
                // classical Kac module: no Ω part, everything is Z
                (0, maximal_dim)
            } else if theta.is_zero() {
                // no annihilator structure to compare against
                (0, 0)
            } else {
                let k_alg = annihilator_at_order(theta, module.ambient.order)?;
                let d_k = k_alg.quotient_dim();
                let q_odd = module.alg.odd_positive.len();
                let vdim = crate::charring::irrep_dimension(&module.alg.id, vlabel)? as usize;
                let irr_dim = (1usize << (q_odd * d_k)) * vdim;
                let omega = module.dim - irr_dim;
                let z_part = if d_k == 1 {
                    let trunc = TruncatedAlgebra::new(theta.r, 1)?;
                    let theta1 = ZFunctional::from_entries(
                        theta.r,
                        1,
                        &[(vec![0; theta.r], theta.theta_z())],
                    )?;
                    let classical =
                        super::module::build_kac_like(&module.alg, &trunc, &theta1, vlabel)?;
                    submodule_search(&classical)?.maximal_submodule_dim
                } else {
                    0
                };
                (omega, z_part)
            }
        }
        _ => (0, 0),
    };

    Ok(SubmoduleReport {
        is_irreducible,
        maximal_submodule_dim: maximal_dim,
        omega_dim,
        z_part_dim,
    })
}

/// `k_Θ/mᴺ` inside `A/mᴺ` for an ambient order possibly above `theta.n`.
pub fn annihilator_at_order(theta: &ZFunctional, order: u32) -> Result<TruncatedAlgebra> {
    if order == theta.n {
        return annihilator_ideal(theta);
    }
    let widened = ZFunctional::new(theta.r, order, theta.values.clone())?;
    annihilator_ideal(&widened)
}

/// The irreducible quotient of a Kac-like module, as an explicit module.
pub fn irreducible_quotient(module: &ExplicitModule) -> Result<ExplicitModule> {
    let Some(mut maximal) = maximal_submodule(module)? else {
        return Ok(module.clone());
    };
    maximal.back_substitute();
    let mut rows: Vec<(usize, Vec<Q>)> = maximal
        .rows()
        .iter()
        .map(|r| (r[0].0, sv_to_dense(r, module.dim)))
        .collect();
    rows.sort_by_key(|(p, _)| *p);
    let pivots: Vec<usize> = rows.iter().map(|(p, _)| *p).collect();
    let dense: Vec<Vec<Q>> = rows.into_iter().map(|(_, r)| r).collect();
    module.quotient(&dense, &pivots)
}

/// Apply the ⋆-certificate: build the adapted top element `p` from the
/// monomials below `n̂`, apply `p` then `p^⋆` to the highest-weight line,
/// and return the coefficient of the highest-weight vector.  Nonzero
/// exactly when the module was built with `I = k_Θ`.
pub fn irreducibility_certificate(module: &ExplicitModule, partner: &StarPartner) -> Result<Q> {
    let theta = module
        .theta
        .as_ref()
        .ok_or_else(|| Error::Precondition("certificate needs a Kac-like module".into()))?;
    let hw = module
        .hw_index
        .ok_or_else(|| Error::Precondition("module has no highest-weight line".into()))?;
    let k_alg = annihilator_at_order(theta, module.ambient.order)?;
    // The certificate star-pairs the top element of Λ(g₋₁[A/I]).  Its
    // factors can all be chosen with exponents below n̂ only when
    // dim A/I = dim A/k_Θ (there are exactly dim A/k_Θ monomials below n̂
    // spanning modulo k_Θ); for I ⊊ k_Θ some factor falls outside and its
    // ⋆-image is the zero element, killing the whole product.
    if module.b_dim() > k_alg.quotient_dim() {
        return Ok(q_zero());
    }
    let below: Vec<usize> = k_alg
        .basis
        .iter()
        .enumerate()
        .filter(|(_, e)| below_nhat(e, &partner.nhat))
        .map(|(i, _)| i)
        .collect();
    // residues mod k_Θ must form a basis of A/k_Θ
    {
        let mut rref = Rref::new(k_alg.dim());
        for &mono in &below {
            let mut unit = vec![q_zero(); k_alg.dim()];
            unit[mono] = q_one();
            rref.insert_dense(&k_alg.reduce_mod_ideal(&unit));
        }
        if rref.rank() != k_alg.quotient_dim() {
            return Err(Error::Internal(
                "monomials below n̂ do not span A/k_Θ".into(),
            ));
        }
    }

    let amb = &module.ambient;
    let mono_coords: Vec<Vec<Q>> = below
        .iter()
        .map(|&i| {
            let exp = &k_alg.basis[i];
            let amb_idx = amb
                .monomial_index(exp)
                .ok_or_else(|| Error::Internal("monomial outside the ambient truncation".into()))?;
            Ok(module.reduction[amb_idx].clone())
        })
        .collect::<Result<_>>()?;
    let star_coords: Vec<Vec<Q>> = below
        .iter()
        .map(|&i| {
            let exp = &k_alg.basis[i];
            let comp: Vec<u32> = partner.nhat.iter().zip(exp).map(|(n, e)| n - e).collect();
            let amb_idx = amb
                .monomial_index(&comp)
                .ok_or_else(|| Error::Internal("⋆-complement outside the truncation".into()))?;
            Ok(module.reduction[amb_idx].clone())
        })
        .collect::<Result<_>>()?;

    // p = ∏_β ∏_i (y_β ⊗ T̄^i), factors ordered (β, i); rightmost acts first
    let mut vec = unit_vec(module.dim, hw);
    let mut factors: Vec<(usize, usize)> = Vec::new();
    for b in 0..module.alg.odd_positive.len() {
        for i in 0..below.len() {
            factors.push((b, i));
        }
    }
    for &(b, i) in factors.iter().rev() {
        let y = module.alg.idx_y(&module.alg.odd_positive[b])?;
        vec = apply_b_operator(module, y, &mono_coords[i], &vec);
    }
    if vec.iter().all(|q| q.is_zero()) {
        return Ok(q_zero());
    }
    // p^⋆ reverses the factor order, so the first factor of p acts first
    for &(b, i) in factors.iter() {
        let x = module.alg.idx_x(&module.alg.odd_positive[b])?;
        vec = apply_b_operator(module, x, &star_coords[i], &vec);
    }
    Ok(vec[hw].clone())
}

fn apply_b_operator(module: &ExplicitModule, g: usize, b: &[Q], vec: &[Q]) -> Vec<Q> {
    let mut out = vec![q_zero(); module.dim];
    for (k, c) in b.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let img = module.act(g, k).apply_dense(vec);
        for (r, v) in img.into_iter().enumerate() {
            if !v.is_zero() {
                out[r] = &out[r] + &(c * &v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::G0IrrepLabel;
    use crate::realize::build_superalgebra;
    use crate::realize::module::build_kac_like;
    use crate::rootdata::AlgebraId;
    use crate::scalar::q_int;

    #[test]
    fn irreducible_iff_annihilator() {
        let alg = build_superalgebra(&AlgebraId::sl(1, 2).unwrap()).unwrap();
        let vlabel = G0IrrepLabel::trivial(&alg.id);
        // Θ touching m with k_Θ = m²: module over A/k_Θ is irreducible
        let theta =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module = build_kac_like(&alg, &trunc, &theta, &vlabel).unwrap();
        let report = submodule_search(&module).unwrap();
        assert!(report.is_irreducible);
        assert_eq!(report.maximal_submodule_dim, 0);

        // same Θ over A/m³ (I = m³ ⊊ k_Θ = m²): reducible, max submodule
        // dim = 64 − 16 = 48 = Ω
        let theta3 =
            ZFunctional::from_entries(1, 3, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let base = TruncatedAlgebra::new(1, 3).unwrap();
        let trunc3 = base.with_ideal(&[]).unwrap();
        let module3 = build_kac_like(&alg, &trunc3, &theta3, &vlabel).unwrap();
        assert_eq!(module3.dim, 64);
        let report3 = submodule_search(&module3).unwrap();
        assert!(!report3.is_irreducible);
        assert_eq!(report3.maximal_submodule_dim, 48);
        assert_eq!(report3.omega_dim, 48);
        assert_eq!(report3.z_part_dim, 0);
    }

    #[test]
    fn certificate_nonzero_iff_annihilator() {
        let alg = build_superalgebra(&AlgebraId::sl(1, 2).unwrap()).unwrap();
        let vlabel = G0IrrepLabel::trivial(&alg.id);
        let theta =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module = build_kac_like(&alg, &trunc, &theta, &vlabel).unwrap();
        for partner in StarPartner::all(&theta).unwrap() {
            let scalar = irreducibility_certificate(&module, &partner).unwrap();
            assert!(!scalar.is_zero());
        }
        // over A/m³ with I = m³ ⊊ k_Θ: certificate must vanish
        let theta3 =
            ZFunctional::from_entries(1, 3, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let base = TruncatedAlgebra::new(1, 3).unwrap();
        let trunc3 = base.with_ideal(&[]).unwrap();
        let module3 = build_kac_like(&alg, &trunc3, &theta3, &vlabel).unwrap();
        for partner in StarPartner::all(&theta3).unwrap() {
            let scalar = irreducibility_certificate(&module3, &partner).unwrap();
            assert!(scalar.is_zero());
        }
    }

    #[test]
    fn classical_kac_typical_vs_atypical() {
        let alg = build_superalgebra(&AlgebraId::sl(1, 2).unwrap()).unwrap();
        let vlabel = G0IrrepLabel::trivial(&alg.id);
        let trunc = TruncatedAlgebra::new(1, 1).unwrap();
        // typical Θ(z): classical Kac module is irreducible
        let theta = ZFunctional::from_entries(1, 1, &[(vec![0], q_int(5))]).unwrap();
        let module = build_kac_like(&alg, &trunc, &theta, &vlabel).unwrap();
        assert!(submodule_search(&module).unwrap().is_irreducible);
        // Θ(z) = 0: the Kac module of the trivial V is reducible and the
        // trivial module is its quotient
        let theta0 = ZFunctional::from_entries(1, 1, &[]).unwrap();
        let module0 = build_kac_like(&alg, &trunc, &theta0, &vlabel).unwrap();
        let report = submodule_search(&module0).unwrap();
        assert!(!report.is_irreducible);
        assert_eq!(report.maximal_submodule_dim, 3);
        assert_eq!(report.z_part_dim, 3);
        let quot = irreducible_quotient(&module0).unwrap();
        assert_eq!(quot.dim, 1);
    }
}
