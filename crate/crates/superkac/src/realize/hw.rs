//! Highest-weight vectors with respect to arbitrary (odd-reflected) Borel
//! subalgebras, and tensor products across distinct points.
//!
//! A vector is `b_σ[A]`-singular when every simple root vector of the
//! reflected Borel, tensored with every coefficient monomial, kills it.
//! Singular vectors are found by an exact joint-kernel solve, and their
//! `h[A]`-weight functional is read off the Cartan action monomial by
//! monomial.

use std::collections::BTreeMap;

use num::Zero;

use crate::coeffalg::ExpTuple;
use crate::error::{Error, Result};
use crate::linalg::{sv_to_dense, Rref, SparseMat};
use crate::rootdata::{BorelChoice, Parity, Weight};
use crate::scalar::{q_zero, Q};

use super::module::ExplicitModule;

/// Values of a weight functional `ψ` on `h ⊗ T̄^e`, one [`Weight`] per
/// monomial (the `hprime` part lists values on the even simple coroots,
/// `z` the value on the central element).
pub type WeightFunctional = BTreeMap<ExpTuple, Weight>;

fn joint_kernel(dim: usize, mats: &[SparseMat]) -> Vec<Vec<Q>> {
    let mut rows = Rref::new(dim);
    for m in mats {
        let t = m.transpose();
        for col in &t.cols {
            rows.insert(col.clone());
        }
    }
    rows.kernel_basis()
        .into_iter()
        .map(|v| sv_to_dense(&v, dim))
        .collect()
}

fn eigenvalue_on(mat: &SparseMat, vec: &[Q]) -> Result<Q> {
    let img = mat.apply_dense(vec);
    // find the scalar from the first nonzero coordinate of vec
    let pos = vec
        .iter()
        .position(|q| !q.is_zero())
        .ok_or_else(|| Error::Internal("zero vector has no eigenvalue".into()))?;
    let lambda = &img[pos] / &vec[pos];
    for (a, b) in img.iter().zip(vec) {
        if a != &(&lambda * b) {
            return Err(Error::Domain(
                "candidate vector is not an h[A]-eigenvector".into(),
            ));
        }
    }
    Ok(lambda)
}

/// Search the module for a `b_σ[A]`-highest-weight vector and return it
/// with its weight functional.
pub fn highest_weight_vector(
    module: &ExplicitModule,
    borel: &BorelChoice,
) -> Result<(Vec<Q>, WeightFunctional)> {
    let alg = &module.alg;
    let mut annihilators = Vec::new();
    for gamma in &borel.simple_roots {
        let g = alg.root_vector_index(gamma)?;
        for mono in 0..module.ambient.dim() {
            annihilators.push(module.act_ambient(g, mono));
        }
    }
    let kernel = joint_kernel(module.dim, &annihilators);
    if kernel.is_empty() {
        return Err(Error::Domain(
            "no singular vector for the requested Borel".into(),
        ));
    }
    // on an irreducible module the singular space is a single line; verify
    // the eigen property and read the functional
    let vec = kernel[0].clone();
    let mut functional: WeightFunctional = BTreeMap::new();
    let rank = crate::rootdata::hprime_rank(&alg.id);
    for mono in 0..module.ambient.dim() {
        let exp = module.ambient.basis[mono].clone();
        let mut hprime = Vec::with_capacity(rank);
        for k in 0..rank {
            let h = alg.label_index(&super::superalgebra::BasisLabel::H(k))?;
            hprime.push(eigenvalue_on(&module.act_ambient(h, mono), &vec)?);
        }
        let z = eigenvalue_on(&module.act_ambient(alg.idx_z(), mono), &vec)?;
        let w = Weight { hprime, z };
        if !w.is_zero() {
            functional.insert(exp, w);
        }
    }
    Ok((vec, functional))
}

/// A tensor product of explicit modules supported at distinct points,
/// with the action generators of each factor extended by super-signed
/// identities on the other factors.
pub struct MultiModule {
    pub factors: Vec<ExplicitModule>,
    pub dim: usize,
    pub parities: Vec<Parity>,
    /// `(factor, g, ambient monomial) → matrix` on the product carrier.
    gens: Vec<((usize, usize, usize), SparseMat)>,
}

impl MultiModule {
    pub fn generator(&self, factor: usize, g: usize, mono: usize) -> Option<&SparseMat> {
        self.gens
            .iter()
            .find(|((f, gg, m), _)| *f == factor && *gg == g && *m == mono)
            .map(|(_, m)| m)
    }
}

/// Build the product module; factors act on their own tensor position with
/// the Koszul sign against the parities of the factors to their left.
pub fn tensor_product(factors: Vec<ExplicitModule>) -> Result<MultiModule> {
    if factors.is_empty() {
        return Err(Error::Precondition("empty tensor product".into()));
    }
    let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
    let total: usize = dims.iter().product();
    crate::caps::check_module_dim(total)?;
    let mut strides = vec![1usize; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let decode = |idx: usize| -> Vec<usize> {
        let mut rest = idx;
        strides
            .iter()
            .map(|&st| {
                let d = rest / st;
                rest %= st;
                d
            })
            .collect()
    };
    let mut parities = Vec::with_capacity(total);
    for idx in 0..total {
        let digits = decode(idx);
        let odd = digits
            .iter()
            .enumerate()
            .filter(|(f, &d)| factors[*f].parities[d] == Parity::Odd)
            .count();
        parities.push(if odd % 2 == 1 { Parity::Odd } else { Parity::Even });
    }

    let mut gens = Vec::new();
    for (f, factor) in factors.iter().enumerate() {
        let odd_action = |g: usize| factor.alg.parity_of(g) == Parity::Odd;
        for g in 0..factor.alg.dim() {
            if !factor.has_action(g) {
                continue;
            }
            for mono in 0..factor.ambient.dim() {
                let local = factor.act_ambient(g, mono);
                if local.is_zero() {
                    continue;
                }
                let mut mat = SparseMat::zero(total, total);
                for col in 0..total {
                    let digits = decode(col);
                    // Koszul sign against factors to the left
                    let mut sign = 1i64;
                    if odd_action(g) {
                        for (lf, &d) in digits.iter().enumerate().take(f) {
                            if factors[lf].parities[d] == Parity::Odd {
                                sign = -sign;
                            }
                        }
                    }
                    for (t, v) in &local.cols[digits[f]] {
                        let mut row = 0usize;
                        for (gf, &d) in digits.iter().enumerate() {
                            let dd = if gf == f { *t } else { d };
                            row += dd * strides[gf];
                        }
                        mat.add_to(row, col, &(v * crate::scalar::q_int(sign)));
                    }
                }
                gens.push(((f, g, mono), mat));
            }
        }
    }
    Ok(MultiModule {
        factors,
        dim: total,
        parities,
        gens,
    })
}

/// Highest-weight vector of a multi-point tensor module: annihilated by
/// the simple root vectors of the Borel over every point's coefficients;
/// the weight functional is reported per factor (per point).
pub fn multi_highest_weight_vector(
    multi: &MultiModule,
    borel: &BorelChoice,
) -> Result<(Vec<Q>, Vec<WeightFunctional>)> {
    let mut annihilators = Vec::new();
    for (f, factor) in multi.factors.iter().enumerate() {
        for gamma in &borel.simple_roots {
            let g = factor.alg.root_vector_index(gamma)?;
            for mono in 0..factor.ambient.dim() {
                if let Some(m) = multi.generator(f, g, mono) {
                    annihilators.push(m.clone());
                } else {
                    // zero generator: no constraint
                }
            }
        }
    }
    let kernel = joint_kernel(multi.dim, &annihilators);
    if kernel.is_empty() {
        return Err(Error::Domain(
            "no singular vector for the requested Borel".into(),
        ));
    }
    let vec = kernel[0].clone();
    let mut functionals = Vec::new();
    for (f, factor) in multi.factors.iter().enumerate() {
        let alg = &factor.alg;
        let rank = crate::rootdata::hprime_rank(&alg.id);
        let mut functional: WeightFunctional = BTreeMap::new();
        for mono in 0..factor.ambient.dim() {
            let exp = factor.ambient.basis[mono].clone();
            let mut hprime = Vec::with_capacity(rank);
            for k in 0..rank {
                let h = alg.label_index(&super::superalgebra::BasisLabel::H(k))?;
                let lambda = match multi.generator(f, h, mono) {
                    Some(m) => eigenvalue_on(m, &vec)?,
                    None => q_zero(),
                };
                hprime.push(lambda);
            }
            let z = match multi.generator(f, alg.idx_z(), mono) {
                Some(m) => eigenvalue_on(m, &vec)?,
                None => q_zero(),
            };
            let w = Weight { hprime, z };
            if !w.is_zero() {
                functional.insert(exp, w);
            }
        }
        functionals.push(functional);
    }
    Ok((vec, functionals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::G0IrrepLabel;
    use crate::coeffalg::{annihilator_ideal, ZFunctional};
    use crate::realize::build_superalgebra;
    use crate::realize::module::build_kac_like;
    use crate::rootdata::{distinguished_borel, AlgebraId};
    use crate::scalar::{q_int, q_one};

    #[test]
    fn distinguished_borel_recovers_defining_weight() {
        let id = AlgebraId::sl(1, 2).unwrap();
        let alg = build_superalgebra(&id).unwrap();
        let theta =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module =
            build_kac_like(&alg, &trunc, &theta, &G0IrrepLabel::trivial(&id)).unwrap();
        let borel = distinguished_borel(&id).unwrap();
        let (vec, functional) = highest_weight_vector(&module, &borel).unwrap();
        // the defining highest-weight line
        assert!(!vec[module.hw_index.unwrap()].is_zero());
        // ψ(z⊗1) = 3, ψ(z⊗t) = 1, hprime trivial at the constant monomial
        let w0 = &functional[&vec![0u32]];
        assert_eq!(w0.z, q_int(3));
        assert!(w0.hprime.iter().all(|q| q.is_zero()));
        let w1 = &functional[&vec![1u32]];
        assert_eq!(w1.z, q_one());
    }

    #[test]
    fn reflected_borel_shifts_weight_by_d_alpha() {
        let id = AlgebraId::sl(1, 2).unwrap();
        let alg = build_superalgebra(&id).unwrap();
        let theta =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module =
            build_kac_like(&alg, &trunc, &theta, &G0IrrepLabel::trivial(&id)).unwrap();
        let borel = distinguished_borel(&id).unwrap();
        let alpha = borel.simple_roots[0].clone();
        let reflected = crate::rootdata::odd_reflection(&id, &borel, &alpha).unwrap();
        let (_, functional) = highest_weight_vector(&module, &reflected).unwrap();
        // d = dim A/k_Θ = 2: the constant-monomial weight is ψ − 2α
        let w0 = &functional[&vec![0u32]];
        let alpha_w = crate::rootdata::root_weight(&id, &alpha);
        let expected_z = q_int(3) - q_int(2) * alpha_w.z;
        assert_eq!(w0.z, expected_z);
        let expected_h: Vec<Q> = alpha_w.hprime.iter().map(|c| -(c + c)).collect();
        assert_eq!(w0.hprime, expected_h);
        // monomials in m keep their ψ-values
        let w1 = &functional[&vec![1u32]];
        assert_eq!(w1.z, q_one());
        assert!(w1.hprime.iter().all(|q| q.is_zero()));
    }
}
