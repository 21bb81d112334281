//! Symbolic descriptors of finite-dimensional irreducible `g[A]`-modules.
//!
//! Every finite-dimensional irreducible is a tensor product of evaluation
//! factors and Kac-like factors at pairwise distinct maximal ideals; the
//! normal form here drops trivial factors and demotes a Kac-like factor
//! with `dim A/k_Θ = 1` to the evaluation module it actually is.
//! Irreducibility of a single Kac-like module over `A/I` is the exact
//! predicate `I = k_Θ`.  Highest-weight data transforms under chains of
//! odd reflections by subtracting `d_{ψ,m}(α₁+⋯+α_l) ⊗ ev_m` at every
//! support point, with `d_{ψ,m} = dim A/k_Θ` for the local `z`-functional.
//!
//! Descriptors are canonical up to the parity-change functor: the
//! highest-weight line is taken even.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::charring::{kac_like_character, FormalCharacter, G0IrrepLabel};
use crate::coeffalg::{
    annihilator_ideal, total_degree, ExpTuple, Point, TruncatedAlgebra, ZFunctional,
};
use crate::error::{Error, Result};
use crate::realize;
use crate::rootdata::{
    apply_reflection_chain, distinguished_borel, root_weight, AlgebraId, Family, Root, Weight,
};
use crate::scalar::{q_int, q_zero, Q};

/// One tensor factor of an irreducible module, at one point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalFactor {
    pub point: Point,
    #[serde(flatten)]
    pub kind: FactorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FactorKind {
    /// Evaluation module with a `g`-highest weight.
    Eval { hw: Weight },
    /// Kac-like module `K_{A/k_Θ}(Θ ⊠ V)`.
    Kac {
        theta: ZFunctional,
        vlabel: G0IrrepLabel,
    },
}

impl LocalFactor {
    /// The local `z`-functional: `Θ` for a Kac-like factor, `Θ(z)·ev` for
    /// an evaluation factor.
    pub fn z_functional(&self) -> Result<ZFunctional> {
        match &self.kind {
            FactorKind::Kac { theta, .. } => Ok(theta.clone()),
            FactorKind::Eval { hw } => ZFunctional::from_entries(
                self.point.r(),
                1,
                &[(vec![0; self.point.r()], hw.z.clone())],
            ),
        }
    }

    /// `Θ(z)`, the value on `z ⊗ 1`.
    pub fn theta_z(&self) -> Q {
        match &self.kind {
            FactorKind::Kac { theta, .. } => theta.theta_z(),
            FactorKind::Eval { hw } => hw.z.clone(),
        }
    }

    /// The `g₀′`-label of the factor.
    pub fn vlabel(&self, id: &AlgebraId) -> Result<G0IrrepLabel> {
        match &self.kind {
            FactorKind::Kac { vlabel, .. } => Ok(vlabel.clone()),
            FactorKind::Eval { hw } => G0IrrepLabel::new(
                id,
                Weight {
                    hprime: hw.hprime.clone(),
                    z: q_zero(),
                },
            ),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match &self.kind {
            FactorKind::Eval { hw } => hw.is_zero(),
            FactorKind::Kac { .. } => false,
        }
    }
}

/// A finite-dimensional irreducible `g[A]`-module in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ModuleDescriptor {
    pub factors: Vec<LocalFactor>,
}

/// Normalize a factor list: drop trivial evaluation factors, demote
/// Kac-like factors with `k_Θ = m` to evaluation factors, sort by point,
/// and reject repeated points.
pub fn normalize(id: &AlgebraId, factors: Vec<LocalFactor>) -> Result<ModuleDescriptor> {
    let mut out: Vec<LocalFactor> = Vec::new();
    for factor in factors {
        let factor = match factor.kind {
            FactorKind::Kac { theta, vlabel } => {
                vlabel.check_dominant(id)?;
                if theta.is_zero() || annihilator_ideal(&theta)?.quotient_dim() == 1 {
                    // A/k_Θ ≅ C: this is the evaluation module at the point
                    LocalFactor {
                        point: factor.point,
                        kind: FactorKind::Eval {
                            hw: Weight {
                                hprime: vlabel.hw.hprime.clone(),
                                z: theta.theta_z(),
                            },
                        },
                    }
                } else {
                    LocalFactor {
                        point: factor.point,
                        kind: FactorKind::Kac { theta, vlabel },
                    }
                }
            }
            eval => LocalFactor {
                point: factor.point,
                kind: eval,
            },
        };
        if !factor.is_trivial() {
            out.push(factor);
        }
    }
    out.sort_by(|a, b| a.point.cmp(&b.point));
    for pair in out.windows(2) {
        if pair[0].point == pair[1].point {
            return Err(Error::Domain(
                "factors must be at distinct maximal ideals".into(),
            ));
        }
    }
    Ok(ModuleDescriptor { factors: out })
}

/// The irreducibility criterion for a Kac-like module built over `A/I`:
/// true exactly when `I = k_Θ`.
pub fn is_irreducible_kac_like(theta: &ZFunctional, alg: &TruncatedAlgebra) -> Result<bool> {
    let ideal = alg.quotient_ideal.as_ref().ok_or_else(|| {
        Error::Precondition("the truncated algebra carries no ideal data".into())
    })?;
    if !theta.vanishes_on(alg, ideal) {
        return Err(Error::Domain(
            "Kac-like module not defined for this ideal: Θ(z⊗I) ≠ 0".into(),
        ));
    }
    let annihilator = realize::submodule::annihilator_at_order(theta, alg.order)?;
    let k_ideal = annihilator
        .quotient_ideal
        .as_ref()
        .expect("annihilator always carries ideal data");
    Ok(ideal == k_ideal)
}

/// Dimension, superdimension and (super)characters of a descriptor, as a
/// product over its factors.
pub fn dimension_and_characters(
    id: &AlgebraId,
    desc: &ModuleDescriptor,
) -> Result<(i64, i64, FormalCharacter, FormalCharacter)> {
    let mut ch = FormalCharacter::one(id);
    let mut sch = FormalCharacter::one(id);
    for factor in &desc.factors {
        let (fch, fsch) = factor_characters(id, factor)?;
        ch = ch.mul(&fch);
        sch = sch.mul(&fsch);
    }
    Ok((ch.dimension(), sch.dimension(), ch, sch))
}

fn factor_characters(
    id: &AlgebraId,
    factor: &LocalFactor,
) -> Result<(FormalCharacter, FormalCharacter)> {
    match &factor.kind {
        FactorKind::Kac { theta, vlabel } => {
            let d = annihilator_ideal(theta)?.quotient_dim() as u32;
            let label = vlabel.with_z(theta.theta_z());
            Ok((
                kac_like_character(id, &label, d, false)?,
                kac_like_character(id, &label, d, true)?,
            ))
        }
        FactorKind::Eval { hw } => {
            if hw.is_zero() {
                return Ok((FormalCharacter::one(id), FormalCharacter::one(id)));
            }
            if id.family != Family::Sl {
                return Err(Error::Domain(
                    "evaluation factor requires explicit realization (sl only)".into(),
                ));
            }
            // build the classical Kac module at the point and pass to its
            // irreducible quotient; typical weights recover the closed
            // Kac character, atypical ones need exactly this oracle route
            let alg = realize::build_superalgebra(id)?;
            let r = factor.point.r();
            let theta = ZFunctional::from_entries(r, 1, &[(vec![0; r], hw.z.clone())])?;
            let vlabel = G0IrrepLabel::new(
                id,
                Weight {
                    hprime: hw.hprime.clone(),
                    z: q_zero(),
                },
            )?;
            let trunc = TruncatedAlgebra::new(r, 1)?;
            let kac = realize::build_kac_like(&alg, &trunc, &theta, &vlabel)?;
            let simple = realize::irreducible_quotient(&kac)?;
            Ok((simple.character(false), simple.character(true)))
        }
    }
}

/// Highest-weight data of an irreducible module: the restriction of
/// `ψ ∈ h[A]*` to each support point, as per-monomial Cartan functionals.
#[derive(Debug, Clone, PartialEq)]
pub struct HighestWeightData {
    pub psi: BTreeMap<Point, BTreeMap<ExpTuple, Weight>>,
}

/// The support: points where ψ is not identically zero.
pub fn support(hw: &HighestWeightData) -> Vec<Point> {
    hw.psi
        .iter()
        .filter(|(_, values)| values.values().any(|w| !w.is_zero()))
        .map(|(p, _)| p.clone())
        .collect()
}

/// Highest-weight data of a descriptor with respect to the distinguished
/// Borel.
pub fn descriptor_highest_weight(
    id: &AlgebraId,
    desc: &ModuleDescriptor,
) -> Result<HighestWeightData> {
    let mut psi = BTreeMap::new();
    for factor in &desc.factors {
        let r = factor.point.r();
        let mut values: BTreeMap<ExpTuple, Weight> = BTreeMap::new();
        match &factor.kind {
            FactorKind::Eval { hw } => {
                if !hw.is_zero() {
                    values.insert(vec![0; r], hw.clone());
                }
            }
            FactorKind::Kac { theta, vlabel } => {
                for (exp, val) in &theta.values {
                    let hprime = if total_degree(exp) == 0 {
                        vlabel.hw.hprime.clone()
                    } else {
                        vec![q_zero(); crate::rootdata::hprime_rank(id)]
                    };
                    values.insert(
                        exp.clone(),
                        Weight {
                            hprime,
                            z: val.clone(),
                        },
                    );
                }
                // the constant slot may carry only the hprime part
                let zero_exp = vec![0; r];
                values.entry(zero_exp).or_insert_with(|| Weight {
                    hprime: vlabel.hw.hprime.clone(),
                    z: q_zero(),
                });
            }
        }
        psi.insert(factor.point.clone(), values);
    }
    Ok(HighestWeightData { psi })
}

/// `d_{ψ,m} = dim A/k_Θ` for the local `z`-functional at one point.
pub fn local_d(point_values: &BTreeMap<ExpTuple, Weight>) -> Result<u32> {
    let r = point_values
        .keys()
        .next()
        .map(|e| e.len())
        .unwrap_or(1);
    let entries: Vec<(ExpTuple, Q)> = point_values
        .iter()
        .map(|(e, w)| (e.clone(), w.z.clone()))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    let touches_m = entries.iter().any(|(e, _)| total_degree(e) >= 1);
    if !touches_m {
        // Θ(z⊗m) = 0: the annihilator is the maximal ideal itself
        return Ok(1);
    }
    let n = entries
        .iter()
        .map(|(e, _)| total_degree(e) + 1)
        .max()
        .unwrap();
    let theta = ZFunctional::from_entries(r, n, &entries)?;
    Ok(annihilator_ideal(&theta)?.quotient_dim() as u32)
}

/// Transform highest-weight data under a chain of odd reflections from the
/// distinguished Borel: `ψ ↦ ψ − Σ_j d_{ψ,m_j}(α₁+⋯+α_l) ⊗ ev_{m_j}`.
pub fn change_of_borel(
    id: &AlgebraId,
    hw: &HighestWeightData,
    chain: &[Root],
    borel: &crate::rootdata::BorelChoice,
) -> Result<HighestWeightData> {
    let distinguished = distinguished_borel(id)?;
    if borel.simple_roots != distinguished.simple_roots {
        return Err(Error::Precondition(
            "change of Borel starts from the distinguished Borel".into(),
        ));
    }
    // validates the chain step by step
    let _target = apply_reflection_chain(id, chain)?;
    let chain_sum = chain
        .iter()
        .map(|alpha| root_weight(id, alpha))
        .fold(Weight::zero(id), |acc, w| acc.add(&w));
    let mut psi = BTreeMap::new();
    for (point, values) in &hw.psi {
        let d = local_d(values)?;
        let mut new_values = values.clone();
        let zero_exp = vec![0; point.r()];
        let shift = chain_sum.scale(&q_int(d as i64));
        let current = new_values.entry(zero_exp.clone()).or_insert_with(|| Weight {
            hprime: vec![q_zero(); crate::rootdata::hprime_rank(id)],
            z: q_zero(),
        });
        *current = current.sub(&shift);
        if current.is_zero() {
            new_values.remove(&zero_exp);
        }
        psi.insert(point.clone(), new_values);
    }
    Ok(HighestWeightData { psi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_one;

    fn sl12() -> AlgebraId {
        AlgebraId::sl(1, 2).unwrap()
    }

    fn point(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| q_int(c)).collect()).unwrap()
    }

    fn kac_factor(p: &[i64], theta: ZFunctional, fw: &[i64]) -> LocalFactor {
        let id = sl12();
        LocalFactor {
            point: point(p),
            kind: FactorKind::Kac {
                theta,
                vlabel: G0IrrepLabel::new(
                    &id,
                    Weight {
                        hprime: fw.iter().map(|&v| q_int(v)).collect(),
                        z: q_zero(),
                    },
                )
                .unwrap(),
            },
        }
    }

    fn theta_d2() -> ZFunctional {
        ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let id = sl12();
        // empty list → trivial descriptor
        let desc = normalize(&id, vec![]).unwrap();
        assert!(desc.factors.is_empty());
        // a Kac-like factor with k_Θ = m demotes to an evaluation factor
        let theta_eval =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(5))]).unwrap();
        let desc = normalize(&id, vec![kac_factor(&[0], theta_eval, &[1])]).unwrap();
        assert_eq!(desc.factors.len(), 1);
        match &desc.factors[0].kind {
            FactorKind::Eval { hw } => {
                assert_eq!(hw.z, q_int(5));
                assert_eq!(hw.hprime, vec![q_one()]);
            }
            _ => panic!("expected demotion to an evaluation factor"),
        }
        // trivial evaluation factors are dropped
        let trivial = LocalFactor {
            point: point(&[0]),
            kind: FactorKind::Eval {
                hw: Weight::zero(&id),
            },
        };
        assert!(normalize(&id, vec![trivial]).unwrap().factors.is_empty());
        // repeated points are rejected
        let f1 = kac_factor(&[0], theta_d2(), &[0]);
        let f2 = kac_factor(&[0], theta_d2(), &[1]);
        assert!(normalize(&id, vec![f1.clone(), f2]).is_err());
        // idempotence
        let desc = normalize(&id, vec![f1]).unwrap();
        let desc2 = normalize(&id, desc.factors.clone()).unwrap();
        assert_eq!(desc, desc2);
    }

    #[test]
    fn irreducibility_predicate() {
        let theta = theta_d2();
        // I = k_Θ → true
        let alg = annihilator_ideal(&theta).unwrap();
        assert!(is_irreducible_kac_like(&theta, &alg).unwrap());
        // I = m³ ⊊ k_Θ (over A/m³) → false
        let theta3 =
            ZFunctional::from_entries(1, 3, &[(vec![0], q_int(3)), (vec![1], q_int(1))]).unwrap();
        let base = TruncatedAlgebra::new(1, 3).unwrap();
        let trunc = base.with_ideal(&[]).unwrap();
        assert!(!is_irreducible_kac_like(&theta3, &trunc).unwrap());
        // Θ(z⊗I) ≠ 0 → error
        let base = TruncatedAlgebra::new(1, 2).unwrap();
        let rows = base.power_ideal_rows(1);
        let bad = base.with_ideal(&rows).unwrap();
        assert!(is_irreducible_kac_like(&theta, &bad).is_err());
        // with Θ(z⊗t) = 0 (k_Θ = m), I = m² gives false
        let theta_m =
            ZFunctional::from_entries(1, 2, &[(vec![0], q_int(3))]).unwrap();
        let base = TruncatedAlgebra::new(1, 2).unwrap();
        let trunc_m2 = base.with_ideal(&[]).unwrap();
        assert!(!is_irreducible_kac_like(&theta_m, &trunc_m2).unwrap());
    }

    #[test]
    fn dimensions_multiply_over_factors() {
        let id = sl12();
        // single Kac-like factor: dim 16, sdim 0
        let desc = normalize(&id, vec![kac_factor(&[0], theta_d2(), &[0])]).unwrap();
        let (dim, sdim, ch, sch) = dimension_and_characters(&id, &desc).unwrap();
        assert_eq!(dim, 16);
        assert_eq!(sdim, 0);
        assert_eq!(ch.dimension(), 16);
        assert_eq!(sch.dimension(), 0);
        // two factors at distinct points multiply
        let f1 = kac_factor(&[0], theta_d2(), &[0]);
        let mut eval_hw = Weight::zero(&id);
        eval_hw.z = q_int(7); // typical evaluation factor
        let f2 = LocalFactor {
            point: point(&[1]),
            kind: FactorKind::Eval { hw: eval_hw },
        };
        let desc = normalize(&id, vec![f1, f2]).unwrap();
        let (dim, sdim, _, _) = dimension_and_characters(&id, &desc).unwrap();
        assert_eq!(dim, 16 * 4);
        assert_eq!(sdim, 0);
        // trivial descriptor: dim 1, sdim 1
        let trivial = ModuleDescriptor::default();
        let (dim, sdim, _, _) = dimension_and_characters(&id, &trivial).unwrap();
        assert_eq!(dim, 1);
        assert_eq!(sdim, 1);
    }

    #[test]
    fn atypical_evaluation_uses_the_oracle() {
        let id = sl12();
        let eval = |z: i64| LocalFactor {
            point: point(&[0]),
            kind: FactorKind::Eval {
                hw: Weight {
                    hprime: vec![q_one()],
                    z: q_int(z),
                },
            },
        };
        // z = −1 is atypical for the fundamental label: the irreducible
        // quotient of the 8-dimensional Kac module has dimension 3
        let desc = normalize(&id, vec![eval(-1)]).unwrap();
        let (dim, _, _, _) = dimension_and_characters(&id, &desc).unwrap();
        assert_eq!(dim, 3);
        // z = 0 is typical: the full Kac dimension 2^2·2 = 8 survives
        let desc = normalize(&id, vec![eval(0)]).unwrap();
        let (dim, _, _, _) = dimension_and_characters(&id, &desc).unwrap();
        assert_eq!(dim, 8);
    }

    #[test]
    fn support_and_hw_data() {
        let id = sl12();
        let desc = normalize(&id, vec![kac_factor(&[2], theta_d2(), &[1])]).unwrap();
        let hw = descriptor_highest_weight(&id, &desc).unwrap();
        let supp = support(&hw);
        assert_eq!(supp, vec![point(&[2])]);
        let values = &hw.psi[&point(&[2])];
        assert_eq!(values[&vec![0u32]].z, q_int(3));
        assert_eq!(values[&vec![0u32]].hprime, vec![q_one()]);
        assert_eq!(values[&vec![1u32]].z, q_one());
        // ψ = 0 → empty support
        let empty = descriptor_highest_weight(&id, &ModuleDescriptor::default()).unwrap();
        assert!(support(&empty).is_empty());
    }

    #[test]
    fn change_of_borel_examples() {
        let id = sl12();
        let borel = distinguished_borel(&id).unwrap();
        let alpha = borel.simple_roots[0].clone();
        // trivial module: unchanged
        let trivial = descriptor_highest_weight(&id, &ModuleDescriptor::default()).unwrap();
        let moved = change_of_borel(&id, &trivial, &[alpha.clone()], &borel).unwrap();
        assert_eq!(moved, trivial);
        // d = 2 Kac-like factor: ψ − 2α₁ ⊗ ev
        let desc = normalize(&id, vec![kac_factor(&[0], theta_d2(), &[0])]).unwrap();
        let hw = descriptor_highest_weight(&id, &desc).unwrap();
        let moved = change_of_borel(&id, &hw, &[alpha.clone()], &borel).unwrap();
        let w0 = &moved.psi[&point(&[0])][&vec![0u32]];
        let alpha_w = root_weight(&id, &alpha);
        assert_eq!(w0.z, q_int(3) - q_int(2) * &alpha_w.z);
        assert_eq!(
            w0.hprime,
            vec![-q_int(2) * &alpha_w.hprime[0]]
        );
        // d = 1 evaluation factor: ψ − α₁ ⊗ ev
        let eval = LocalFactor {
            point: point(&[0]),
            kind: FactorKind::Eval {
                hw: Weight {
                    hprime: vec![q_one()],
                    z: q_int(9),
                },
            },
        };
        let desc = normalize(&id, vec![eval]).unwrap();
        let hw = descriptor_highest_weight(&id, &desc).unwrap();
        let moved = change_of_borel(&id, &hw, &[alpha.clone()], &borel).unwrap();
        let w0 = &moved.psi[&point(&[0])][&vec![0u32]];
        assert_eq!(w0.z, q_int(9) - &alpha_w.z);
        // empty chain is the identity
        let same = change_of_borel(&id, &hw, &[], &borel).unwrap();
        assert_eq!(same, hw);
        // invalid chain is rejected
        let beta = borel.simple_roots[1].clone();
        assert!(change_of_borel(&id, &hw, &[beta], &borel).is_err());
    }
}
