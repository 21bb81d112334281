//! The cross-verification suite.
//!
//! Every formula the symbolic layers provide is checked here against the
//! matrix oracle at desk scale, with exact (tolerance-zero) comparisons:
//! dimension and character formulas, the irreducibility criterion and its
//! ⋆-certificate, maximal-submodule structure, commutation identities,
//! duality, the Ext¹ case dispatch against Koszul cohomology, extension
//! locality, change of Borel, and block consistency.  The `acceptance`
//! integration test and the CLI `verify` verb both drive [`all_checks`].

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

use crate::charring::{kac_like_character, G0IrrepLabel};
use crate::classify::{self, FactorKind, LocalFactor, ModuleDescriptor};
use crate::coeffalg::{
    annihilator_ideal, ideal_generated_by, Point, StarPartner, TruncatedAlgebra, ZFunctional,
};
use crate::error::{Error, Result};
use crate::extblocks::{self, ExtCase, NonVanishing, OraclePolicy};
use crate::realize::{
    self, submodule::annihilator_at_order, ActingOn, ExplicitModule, MatrixSuperalgebra,
};
use crate::rootdata::{
    distinguished_borel, odd_reflection, root_weight, AlgebraId, Root, Weight,
};
use crate::scalar::{q_frac, q_int, q_zero, Q};

/// One named check; returns a human-readable detail line on success.
pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<String>,
}

/// The ten acceptance criteria, in order.
pub fn criteria() -> Vec<Check> {
    vec![
        Check {
            name: "dimension formula",
            run: criterion_1_dimension_formula,
        },
        Check {
            name: "irreducibility criterion",
            run: criterion_2_irreducibility,
        },
        Check {
            name: "maximal submodule structure",
            run: criterion_3_maximal_submodule,
        },
        Check {
            name: "commutation relations",
            run: criterion_4_comm_rels,
        },
        Check {
            name: "duality",
            run: criterion_5_duality,
        },
        Check {
            name: "ext dispatch vs oracle",
            run: criterion_6_ext_dispatch,
        },
        Check {
            name: "extension locality",
            run: criterion_7_extension_locality,
        },
        Check {
            name: "change of Borel",
            run: criterion_8_change_of_borel,
        },
        Check {
            name: "block consistency",
            run: criterion_9_blocks,
        },
        Check {
            name: "character consistency",
            run: criterion_10_characters,
        },
    ]
}

/// Fast structural invariants, run before the acceptance criteria.
pub fn invariant_checks() -> Vec<Check> {
    vec![
        Check {
            name: "root counts and reflections",
            run: invariant_roots,
        },
        Check {
            name: "annihilator ideals",
            run: invariant_annihilator,
        },
        Check {
            name: "character ring",
            run: invariant_characters,
        },
        Check {
            name: "descriptor normal form",
            run: invariant_normalize,
        },
        Check {
            name: "koszul truncation monotonicity",
            run: invariant_koszul_monotone,
        },
        Check {
            name: "serialization round trips",
            run: invariant_serde_round_trip,
        },
    ]
}

/// Everything, invariants first.
pub fn all_checks() -> Vec<Check> {
    let mut checks = invariant_checks();
    checks.extend(criteria());
    checks
}

fn sl12() -> AlgebraId {
    AlgebraId::sl(1, 2).expect("valid")
}

fn sl22() -> AlgebraId {
    AlgebraId::sl(2, 2).expect("valid")
}

fn label(id: &AlgebraId, fw: &[i64]) -> G0IrrepLabel {
    G0IrrepLabel::new(
        id,
        Weight {
            hprime: fw.iter().map(|&v| q_int(v)).collect(),
            z: q_zero(),
        },
    )
    .expect("dominant")
}

fn theta_1var(n: u32, vals: &[Q]) -> ZFunctional {
    let entries: Vec<(Vec<u32>, Q)> = vals
        .iter()
        .enumerate()
        .map(|(i, v)| (vec![i as u32], v.clone()))
        .collect();
    ZFunctional::from_entries(1, n, &entries).expect("valid functional")
}

/// `V_A(Θ⊠V)` as an explicit `g[A/m^order]`-module.
fn v_module(
    alg: &Arc<MatrixSuperalgebra>,
    theta: &ZFunctional,
    vlabel: &G0IrrepLabel,
    order: u32,
) -> Result<ExplicitModule> {
    let trunc = annihilator_at_order(theta, order)?;
    realize::build_kac_like(alg, &trunc, theta, vlabel)
}

/// The irreducible evaluation module at a point, over `g[A/m^order]`.
fn eval_module(
    alg: &Arc<MatrixSuperalgebra>,
    z: &Q,
    fw: &[i64],
    order: u32,
) -> Result<ExplicitModule> {
    let theta = ZFunctional::from_entries(1, order.max(1), &[(vec![0], z.clone())])?;
    let trunc = annihilator_at_order(&theta, order)?;
    let kac = realize::build_kac_like(alg, &trunc, &theta, &label(&alg.id, fw))?;
    realize::irreducible_quotient(&kac)
}

// ---------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------

fn criterion_1_dimension_formula() -> Result<String> {
    let mut cases = 0usize;
    for id in [sl12(), sl22()] {
        let alg = realize::build_superalgebra(&id)?;
        let q_odd = id.dim_g_minus1() as u32;
        let labels: Vec<Vec<i64>> = match id.family {
            _ if id.m == 1 => vec![vec![0], vec![1], vec![2]],
            _ => vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![0, 2]],
        };
        for d in 1u32..=3 {
            // Θ with dim A/k_Θ = d: supported at the single exponent d−1
            let mut vals = vec![q_zero(); d as usize];
            vals[(d - 1) as usize] = q_int(1);
            let theta = theta_1var(d, &vals);
            let trunc = annihilator_ideal(&theta)?;
            if trunc.quotient_dim() != d as usize {
                return Err(Error::Internal(format!(
                    "test functional has dim A/k = {}, wanted {d}",
                    trunc.quotient_dim()
                )));
            }
            for fw in &labels {
                let vlabel = label(&id, fw);
                let vdim = crate::charring::irrep_dimension(&id, &vlabel)? as usize;
                if vdim > 3 {
                    continue;
                }
                let carrier = realize::build_kac_like_carrier(&alg, &trunc, &theta, &vlabel)?;
                let expected = (1usize << (q_odd * d)) * vdim;
                if carrier.dim != expected {
                    return Err(Error::Internal(format!(
                        "dim {} ≠ 2^({q_odd}·{d})·{vdim} = {expected}",
                        carrier.dim
                    )));
                }
                if q_odd * d >= 1 && carrier.sdim != 0 {
                    return Err(Error::Internal(format!(
                        "superdimension {} ≠ 0",
                        carrier.sdim
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "2^(dim g₋₁·d)·dim V and sdim 0 verified on {cases} modules"
    ))
}

/// The (Θ, I)-sweep shared by criteria 2, 5 and 10: modules over `A/I`
/// labeled with whether `I = k_Θ`.
fn sweep_modules() -> Result<Vec<(ExplicitModule, bool)>> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let cap = crate::caps::max_module_dim();
    let mut out = Vec::new();

    // r = 1 functionals
    let mut thetas: Vec<ZFunctional> = Vec::new();
    for theta0 in [0i64, 1, 3] {
        for t1 in [1i64, 2] {
            thetas.push(theta_1var(2, &[q_int(theta0), q_int(t1)]));
        }
    }
    for (a, b, c) in [(0i64, 0i64, 1i64), (1, 1, 1), (3, 0, 2)] {
        thetas.push(theta_1var(3, &[q_int(a), q_int(b), q_int(c)]));
    }
    for (a, b) in [(0i64, 1i64), (2, 1)] {
        thetas.push(theta_1var(3, &[q_int(a), q_int(b), q_zero()]));
    }
    // r = 2 functionals
    for theta0 in [0i64, 2] {
        for c in [0i64, 1, -1] {
            thetas.push(
                ZFunctional::from_entries(
                    2,
                    2,
                    &[
                        (vec![0, 0], q_int(theta0)),
                        (vec![1, 0], q_int(1)),
                        (vec![0, 1], q_int(c)),
                    ],
                )
                .expect("valid"),
            );
        }
    }

    let vlabel = G0IrrepLabel::trivial(&id);
    for theta in &thetas {
        // ambient orders: the functional's own order and one above
        for order in [theta.n, theta.n + 1] {
            let k_alg = annihilator_at_order(theta, order)?;
            let d_k = k_alg.quotient_dim();
            let q_odd = id.dim_g_minus1();
            // irreducible instance I = k_Θ
            if (1usize << (q_odd * d_k)) <= cap {
                let module = realize::build_kac_like(&alg, &k_alg, theta, &vlabel)?;
                out.push((module, true));
            }
            // reducible instance I = m^order (when strictly below k_Θ)
            let base = TruncatedAlgebra::new(theta.r, order)?;
            let full = base.with_ideal(&[])?;
            let d_full = full.quotient_dim();
            if d_full > d_k && (1usize << (q_odd * d_full)) <= cap {
                let module = realize::build_kac_like(&alg, &full, theta, &vlabel)?;
                out.push((module, false));
            }
        }
    }
    Ok(out)
}

fn criterion_2_irreducibility() -> Result<String> {
    let modules = sweep_modules()?;
    if modules.len() < 30 {
        return Err(Error::Internal(format!(
            "sweep produced only {} pairs",
            modules.len()
        )));
    }
    let mut irreducible = 0usize;
    for (module, is_annihilator) in &modules {
        let report = realize::submodule_search(module)?;
        if report.is_irreducible != *is_annihilator {
            return Err(Error::Internal(format!(
                "submodule search disagrees with I = k_Θ on a dim-{} module",
                module.dim
            )));
        }
        let theta = module.theta.as_ref().expect("kac-like build");
        for partner in StarPartner::all(theta)? {
            let scalar = realize::irreducibility_certificate(module, &partner)?;
            if scalar.is_zero() == *is_annihilator {
                return Err(Error::Internal(format!(
                    "⋆-certificate {} on a dim-{} module with I = k_Θ: {}",
                    if scalar.is_zero() { "vanished" } else { "survived" },
                    module.dim,
                    is_annihilator
                )));
            }
        }
        if *is_annihilator {
            irreducible += 1;
        }
    }
    Ok(format!(
        "{} (Θ, I) pairs ({} irreducible), zero disagreements, all n̂ certified",
        modules.len(),
        irreducible
    ))
}

fn criterion_3_maximal_submodule() -> Result<String> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let q_odd = id.dim_g_minus1();
    let mut lines = Vec::new();

    // k_Θ ⊊ m: maximal submodule dim = dim K_{A/mⁿ} − dim K_{A/k_Θ}
    for (theta, vfw) in [
        (theta_1var(2, &[q_int(3), q_int(1)]), vec![0i64]),
        (theta_1var(2, &[q_zero(), q_int(1)]), vec![1]),
    ] {
        let order = theta.n + 1;
        let base = TruncatedAlgebra::new(theta.r, order)?;
        let full = base.with_ideal(&[])?;
        let module = realize::build_kac_like(&alg, &full, &theta, &label(&id, &vfw))?;
        let report = realize::submodule_search(&module)?;
        let d_k = annihilator_ideal(&theta)?.quotient_dim();
        let vdim = crate::charring::irrep_dimension(&id, &label(&id, &vfw))? as usize;
        let expected = module.dim - (1usize << (q_odd * d_k)) * vdim;
        if report.is_irreducible || report.maximal_submodule_dim != expected {
            return Err(Error::Internal(format!(
                "max submodule {} ≠ dim K_A/mⁿ − dim K_A/k_Θ = {expected}",
                report.maximal_submodule_dim
            )));
        }
        if report.omega_dim != expected || report.z_part_dim != 0 {
            return Err(Error::Internal("Ω-split mismatch in the k_Θ ⊊ m case".into()));
        }
        lines.push(format!("Ω-case dim {}", report.maximal_submodule_dim));
    }

    // k_Θ = m: dim W₁ = dim Ω + dim Z, Z from the classical Kac module
    for (theta0, vfw) in [(q_zero(), vec![0i64]), (q_int(5), vec![0]), (q_int(2), vec![0])] {
        let theta = theta_1var(2, &[theta0.clone()]);
        let order = 2;
        let base = TruncatedAlgebra::new(1, order)?;
        let full = base.with_ideal(&[])?;
        let module = realize::build_kac_like(&alg, &full, &theta, &label(&id, &vfw))?;
        let report = realize::submodule_search(&module)?;
        let vdim = crate::charring::irrep_dimension(&id, &label(&id, &vfw))? as usize;
        let omega = module.dim - (1usize << q_odd) * vdim;
        // Z from an independent submodule search on the classical module
        let trunc1 = TruncatedAlgebra::new(1, 1)?;
        let theta1 = ZFunctional::from_entries(1, 1, &[(vec![0], theta0.clone())])?;
        let classical = realize::build_kac_like(&alg, &trunc1, &theta1, &label(&id, &vfw))?;
        let z_dim = realize::submodule_search(&classical)?.maximal_submodule_dim;
        if report.maximal_submodule_dim != omega + z_dim {
            return Err(Error::Internal(format!(
                "W₁ = {} ≠ Ω + Z = {omega} + {z_dim}",
                report.maximal_submodule_dim
            )));
        }
        if report.omega_dim != omega || report.z_part_dim != z_dim {
            return Err(Error::Internal("Ω/Z split mismatch in the k_Θ = m case".into()));
        }
        lines.push(format!("Ω⊕Z case {omega}+{z_dim}"));
    }
    Ok(lines.join(", "))
}

fn criterion_4_comm_rels() -> Result<String> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let theta = theta_1var(2, &[q_int(3), q_int(1)]);
    let trunc = annihilator_ideal(&theta)?;
    let module = realize::build_kac_like(&alg, &trunc, &theta, &G0IrrepLabel::trivial(&id))?;
    let residual = realize::verify_comm_rels(&module, 3)?;
    if !residual.is_zero() {
        return Err(Error::Internal(format!(
            "nonzero commutation residual {}",
            crate::scalar::q_to_string(&residual)
        )));
    }
    Ok("all three identities exact for k ≤ 3 on dim A/I = 2".into())
}

fn criterion_5_duality() -> Result<String> {
    let modules = sweep_modules()?;
    let mut checked = 0usize;
    for (module, irreducible) in &modules {
        if !irreducible || module.dim > 64 {
            continue;
        }
        let dual = module.dual();
        let (d, _) = realize::hom_space(&dual, module, ActingOn::G)?;
        if d != 1 {
            return Err(Error::Internal(format!(
                "dim Hom(L∨, L) = {d} ≠ 1 on a dim-{} module",
                module.dim
            )));
        }
        checked += 1;
    }
    if checked < 5 {
        return Err(Error::Internal("too few irreducible duals checked".into()));
    }
    Ok(format!("dim Hom(L∨, L) = 1 on {checked} irreducibles"))
}

fn criterion_6_ext_dispatch() -> Result<String> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let point = Point::new(vec![q_zero()]).expect("valid");
    let kac_factor = |theta: &ZFunctional, fw: &[i64]| LocalFactor {
        point: point.clone(),
        kind: FactorKind::Kac {
            theta: theta.clone(),
            vlabel: label(&id, fw),
        },
    };
    let eval_factor = |z: Q, fw: &[i64]| LocalFactor {
        point: point.clone(),
        kind: FactorKind::Eval {
            hw: Weight {
                hprime: fw.iter().map(|&v| q_int(v)).collect(),
                z,
            },
        },
    };
    let t = |z: i64| theta_1var(2, &[q_int(z), q_int(1)]);
    let t_frac = |num: i64, den: i64| theta_1var(2, &[q_frac(num, den), q_int(1)]);

    // pairs spanning all four cases plus the evaluation-pair route
    let pairs: Vec<(LocalFactor, LocalFactor)> = vec![
        // case 3: non-integral z-difference
        (kac_factor(&t_frac(1, 2), &[0]), kac_factor(&t(0), &[0])),
        (kac_factor(&t_frac(1, 3), &[1]), kac_factor(&t(1), &[0])),
        (kac_factor(&t(0), &[0]), kac_factor(&t_frac(-1, 2), &[0])),
        (kac_factor(&t_frac(5, 2), &[0]), kac_factor(&t_frac(1, 3), &[0])),
        // case 1: Θ₁ ≠ Θ₂, difference in Z≥0
        (kac_factor(&t(5), &[0]), kac_factor(&t(0), &[0])),
        (kac_factor(&t(1), &[0]), kac_factor(&t(0), &[0])),
        (kac_factor(&t(1), &[0]), kac_factor(&t(0), &[1])),
        (kac_factor(&t(2), &[1]), kac_factor(&t(0), &[0])),
        // case 2: swapped
        (kac_factor(&t(0), &[0]), kac_factor(&t(5), &[0])),
        (kac_factor(&t(0), &[1]), kac_factor(&t(1), &[0])),
        (kac_factor(&t(0), &[0]), kac_factor(&t(2), &[1])),
        (kac_factor(&t(-1), &[0]), kac_factor(&t(1), &[0])),
        // case 4: equal functionals
        (kac_factor(&t(1), &[0]), kac_factor(&t(1), &[0])),
        (kac_factor(&t(1), &[0]), kac_factor(&t(1), &[2])),
        (kac_factor(&t(1), &[0]), kac_factor(&t(1), &[3])),
        (kac_factor(&t(3), &[1]), kac_factor(&t(3), &[1])),
        // evaluation pairs
        (eval_factor(q_zero(), &[0]), eval_factor(q_zero(), &[0])),
        (eval_factor(q_frac(1, 2), &[0]), eval_factor(q_zero(), &[1])),
        (eval_factor(q_int(5), &[0]), eval_factor(q_int(5), &[0])),
        (eval_factor(q_int(1), &[1]), eval_factor(q_int(0), &[0])),
    ];

    let build = |f: &LocalFactor, order: u32| -> Result<ExplicitModule> {
        match &f.kind {
            FactorKind::Kac { theta, vlabel } => v_module(&alg, theta, vlabel, order),
            FactorKind::Eval { hw } => {
                let fw: Vec<i64> = hw
                    .hprime
                    .iter()
                    .map(|c| c.numer().try_into().expect("small"))
                    .collect();
                eval_module(&alg, &hw.z, &fw, order)
            }
        }
    };

    let mut zero_checked = 0usize;
    let mut hom_zero_checked = 0usize;
    let mut case4_checked = 0usize;
    for (f1, f2) in &pairs {
        let answer = extblocks::ext1_dispatch(&id, f1, f2, OraclePolicy::Auto)?;
        // symmetry of nonvanishing
        let sym = extblocks::ext1_dispatch(&id, f2, f1, OraclePolicy::Auto)?;
        if answer.nonvanishing != sym.nonvanishing {
            return Err(Error::Internal("dispatch asymmetric in nonvanishing".into()));
        }
        let n = f1
            .z_functional()?
            .vanishing_order()
            .max(f2.z_functional()?.vanishing_order())
            .max(1);
        match (answer.case, answer.nonvanishing) {
            (ExtCase::Zero, _) => {
                for order in [n, n + 1] {
                    let m1 = build(f1, order)?;
                    let m2 = build(f2, order)?;
                    let ext = realize::ext1_koszul(&m1, &m2)?;
                    if ext != 0 {
                        return Err(Error::Internal(format!(
                            "dispatch Zero but Ext¹ over g[A/m^{order}] is {ext}"
                        )));
                    }
                }
                zero_checked += 1;
            }
            (ExtCase::Hom1 | ExtCase::Hom2, NonVanishing::No) => {
                for order in [n, n + 1] {
                    let m1 = build(f1, order)?;
                    let m2 = build(f2, order)?;
                    let ext = realize::ext1_koszul(&m1, &m2)?;
                    if ext != 0 {
                        return Err(Error::Internal(format!(
                            "Hom dim 0 but Ext¹ over g[A/m^{order}] is {ext}"
                        )));
                    }
                }
                hom_zero_checked += 1;
            }
            (ExtCase::G0Reduction, nv) => {
                let m1 = build(f1, n)?;
                let m2 = build(f2, n)?;
                let ext = realize::ext1_koszul(&m1, &m2)?;
                let oracle_nonzero = ext > 0;
                let dispatch_nonzero = nv == NonVanishing::Yes;
                if oracle_nonzero != dispatch_nonzero {
                    return Err(Error::Internal(format!(
                        "case-4 nonvanishing test {dispatch_nonzero} but oracle Ext¹ = {ext}"
                    )));
                }
                case4_checked += 1;
            }
            (ExtCase::EvalPair, NonVanishing::No) => {
                let m1 = build(f1, n)?;
                let m2 = build(f2, n)?;
                let ext = realize::ext1_koszul(&m1, &m2)?;
                if ext != 0 {
                    return Err(Error::Internal(format!(
                        "evaluation pair 0 but oracle Ext¹ = {ext}"
                    )));
                }
                zero_checked += 1;
            }
            _ => {}
        }
    }
    Ok(format!(
        "{} pairs: {zero_checked} zero-checks, {hom_zero_checked} hom-zero checks, {case4_checked} case-4 agreements",
        pairs.len()
    ))
}

fn criterion_7_extension_locality() -> Result<String> {
    let id = sl12();
    let point = Point::new(vec![q_zero()]).expect("valid");
    let mut count = 0usize;
    for z in [q_zero(), q_int(1), q_frac(1, 2), q_int(2), q_int(-3)] {
        for fw in [0i64, 1] {
            for theta0 in [q_zero(), q_int(2)] {
                let v = LocalFactor {
                    point: point.clone(),
                    kind: FactorKind::Eval {
                        hw: Weight {
                            hprime: vec![q_int(fw)],
                            z: z.clone(),
                        },
                    },
                };
                let lam = LocalFactor {
                    point: point.clone(),
                    kind: FactorKind::Kac {
                        theta: theta_1var(2, &[theta0.clone(), q_int(1)]),
                        vlabel: G0IrrepLabel::trivial(&id),
                    },
                };
                if !extblocks::extension_local_check(&id, &v, &lam)? {
                    return Err(Error::Internal(format!(
                        "extension locality failed for z = {}, fw = {fw}, Θ(z) = {}",
                        crate::scalar::q_to_string(&z),
                        crate::scalar::q_to_string(&theta0),
                    )));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (V, C_λ) pairs all vanish"))
}

fn criterion_8_change_of_borel() -> Result<String> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let borel = distinguished_borel(&id)?;
    let alpha = borel.simple_roots[0].clone();
    let reflected = odd_reflection(&id, &borel, &alpha)?;
    let alpha_w = root_weight(&id, &alpha);

    // single point, d = 2 (Kac-like) and d = 1 (evaluation)
    let theta = theta_1var(2, &[q_int(3), q_int(1)]);
    let kac = v_module(&alg, &theta, &G0IrrepLabel::trivial(&id), 2)?;
    let (_, functional) = realize::highest_weight_vector(&kac, &reflected)?;
    let expected = Weight {
        hprime: alpha_w.hprime.iter().map(|c| -(c + c)).collect(),
        z: q_int(3) - q_int(2) * &alpha_w.z,
    };
    if functional[&vec![0u32]] != expected {
        return Err(Error::Internal("d = 2 shift mismatch".into()));
    }
    if functional[&vec![1u32]].z != q_int(1) {
        return Err(Error::Internal("ψ on m changed under reflection".into()));
    }

    let evalm = eval_module(&alg, &q_int(5), &[1], 1)?;
    let (_, functional) = realize::highest_weight_vector(&evalm, &reflected)?;
    let base = &functional.get(&vec![0u32]).cloned().unwrap_or_else(|| Weight::zero(&id));
    let expected = Weight {
        hprime: vec![q_int(1) - &alpha_w.hprime[0]],
        z: q_int(5) - &alpha_w.z,
    };
    if base != &expected {
        return Err(Error::Internal("d = 1 shift mismatch".into()));
    }

    // multi-point: two points with d = (2, 1)
    let eval2 = eval_module(&alg, &q_int(5), &[1], 1)?;
    let multi = realize::tensor_product(vec![kac.clone(), eval2])?;
    let (_, functionals) = realize::multi_highest_weight_vector(&multi, &reflected)?;
    let w0 = &functionals[0][&vec![0u32]];
    let expected0 = Weight {
        hprime: alpha_w.hprime.iter().map(|c| -(c + c)).collect(),
        z: q_int(3) - q_int(2) * &alpha_w.z,
    };
    if w0 != &expected0 {
        return Err(Error::Internal("multi-point d = 2 factor mismatch".into()));
    }
    let w1 = &functionals[1][&vec![0u32]];
    let expected1 = Weight {
        hprime: vec![q_int(1) - &alpha_w.hprime[0]],
        z: q_int(5) - &alpha_w.z,
    };
    if w1 != &expected1 {
        return Err(Error::Internal("multi-point d = 1 factor mismatch".into()));
    }

    // and the symbolic transform agrees with the oracle prediction
    let point0 = Point::new(vec![q_zero()]).expect("valid");
    let point1 = Point::new(vec![q_int(1)]).expect("valid");
    let desc = classify::normalize(
        &id,
        vec![
            LocalFactor {
                point: point0.clone(),
                kind: FactorKind::Kac {
                    theta: theta.clone(),
                    vlabel: G0IrrepLabel::trivial(&id),
                },
            },
            LocalFactor {
                point: point1.clone(),
                kind: FactorKind::Eval {
                    hw: Weight {
                        hprime: vec![q_int(1)],
                        z: q_int(5),
                    },
                },
            },
        ],
    )?;
    let hw = classify::descriptor_highest_weight(&id, &desc)?;
    let moved = classify::change_of_borel(&id, &hw, &[alpha.clone()], &borel)?;
    let predicted0 = &moved.psi[&point0][&vec![0u32]];
    let oracle0 = Weight {
        hprime: w0.hprime.clone(),
        z: w0.z.clone(),
    };
    if predicted0 != &oracle0 {
        return Err(Error::Internal(
            "classify.change_of_borel disagrees with the oracle weight".into(),
        ));
    }
    let predicted1 = &moved.psi[&point1][&vec![0u32]];
    if predicted1 != w1 {
        return Err(Error::Internal(
            "classify.change_of_borel disagrees at the second point".into(),
        ));
    }
    Ok("ψ − d·α⊗ev verified for d ∈ {1,2} and the two-point case d = (2,1)".into())
}

fn criterion_9_blocks() -> Result<String> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let p0 = Point::new(vec![q_zero()]).expect("valid");
    let p1 = Point::new(vec![q_int(1)]).expect("valid");
    let kac_at = |p: &Point, theta0: Q, fw: &[i64]| LocalFactor {
        point: p.clone(),
        kind: FactorKind::Kac {
            theta: theta_1var(2, &[theta0, q_int(1)]),
            vlabel: label(&id, fw),
        },
    };
    // ten factors across two points
    let u0 = vec![
        kac_at(&p0, q_int(1), &[0]),
        kac_at(&p0, q_int(1), &[2]),
        kac_at(&p0, q_frac(1, 3), &[0]),
        kac_at(&p0, q_frac(1, 3), &[2]),
        kac_at(&p0, q_int(0), &[0]),
        kac_at(&p0, q_int(1), &[4]),
    ];
    let u1 = vec![
        kac_at(&p1, q_int(1), &[0]),
        kac_at(&p1, q_frac(1, 2), &[0]),
        kac_at(&p1, q_int(1), &[2]),
        kac_at(&p1, q_int(2), &[0]),
    ];

    // dispatch components versus pure-oracle components, per point
    for universe in [&u0, &u1] {
        let symbolic = extblocks::local_components(&id, universe, OraclePolicy::Auto)?;
        let n = universe.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (ti, vi) = match &universe[i].kind {
                    FactorKind::Kac { theta, vlabel } => (theta.clone(), vlabel.clone()),
                    _ => unreachable!(),
                };
                let (tj, vj) = match &universe[j].kind {
                    FactorKind::Kac { theta, vlabel } => (theta.clone(), vlabel.clone()),
                    _ => unreachable!(),
                };
                let order = ti.vanishing_order().max(tj.vanishing_order());
                let mi = v_module(&alg, &ti, &vi, order)?;
                let mj = v_module(&alg, &tj, &vj, order)?;
                let forward = realize::ext1_koszul(&mi, &mj)?;
                let backward = realize::ext1_koszul(&mj, &mi)?;
                if forward > 0 || backward > 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let oracle: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        // same partition?
        for i in 0..n {
            for j in 0..n {
                if (symbolic[i] == symbolic[j]) != (oracle[i] == oracle[j]) {
                    return Err(Error::Internal(format!(
                        "block partition mismatch between factors {i} and {j}"
                    )));
                }
            }
        }
    }

    // same_block is an equivalence relation on descriptors over the universe
    let mut universes = BTreeMap::new();
    universes.insert(p0.clone(), u0.clone());
    universes.insert(p1.clone(), u1.clone());
    let descs: Vec<ModuleDescriptor> = u0
        .iter()
        .take(3)
        .map(|f| ModuleDescriptor {
            factors: vec![f.clone()],
        })
        .collect();
    for a in &descs {
        if !extblocks::same_block(&id, a, a, &universes, OraclePolicy::Auto)? {
            return Err(Error::Internal("same_block not reflexive".into()));
        }
        for b in &descs {
            let ab = extblocks::same_block(&id, a, b, &universes, OraclePolicy::Auto)?;
            let ba = extblocks::same_block(&id, b, a, &universes, OraclePolicy::Auto)?;
            if ab != ba {
                return Err(Error::Internal("same_block not symmetric".into()));
            }
            for c in &descs {
                let bc = extblocks::same_block(&id, b, c, &universes, OraclePolicy::Auto)?;
                let ac = extblocks::same_block(&id, a, c, &universes, OraclePolicy::Auto)?;
                if ab && bc && !ac {
                    return Err(Error::Internal("same_block not transitive".into()));
                }
            }
        }
    }
    // spectral characters distinguish support mismatches
    let d_two_points = ModuleDescriptor {
        factors: vec![u0[0].clone(), u1[0].clone()],
    };
    let d_one_point = ModuleDescriptor {
        factors: vec![u0[0].clone()],
    };
    if extblocks::same_block(&id, &d_two_points, &d_one_point, &universes, OraclePolicy::Auto)? {
        return Err(Error::Internal(
            "descriptors with different supports placed in one block".into(),
        ));
    }
    Ok("10-factor universe: symbolic components = oracle components; equivalence relation verified".into())
}

fn criterion_10_characters() -> Result<String> {
    let id = sl12();
    let mut checked = 0usize;
    for (module, _) in sweep_modules()? {
        if module.dim > 64 {
            continue;
        }
        let theta = module.theta.clone().expect("kac-like build");
        let vlabel = module.vlabel.clone().expect("kac-like build");
        let d = module.b_dim() as u32;
        let zlabel = vlabel.with_z(theta.theta_z());
        let ch = kac_like_character(&id, &zlabel, d, false)?;
        let sch = kac_like_character(&id, &zlabel, d, true)?;
        if module.character(false) != ch || module.character(true) != sch {
            return Err(Error::Internal(format!(
                "weight-graded trace disagrees with the character formula (dim {})",
                module.dim
            )));
        }
        checked += 1;
    }
    // and on an sl(2|2) instance
    let id = sl22();
    let alg = realize::build_superalgebra(&id)?;
    let theta = theta_1var(2, &[q_int(1), q_int(1)]);
    let trunc = annihilator_ideal(&theta)?;
    let module = realize::build_kac_like(&alg, &trunc, &theta, &G0IrrepLabel::trivial(&id))?;
    let ch = kac_like_character(&id, &G0IrrepLabel::trivial(&id).with_z(q_int(1)), 2, false)?;
    if module.character(false) != ch {
        return Err(Error::Internal("sl(2|2) trace mismatch".into()));
    }
    checked += 1;
    Ok(format!("term-by-term trace = character on {checked} modules"))
}

// ---------------------------------------------------------------------
// Structural invariants
// ---------------------------------------------------------------------

fn invariant_roots() -> Result<String> {
    use crate::rootdata::*;
    for id in [sl12(), sl22(), AlgebraId::sl(1, 3)?, AlgebraId::osp(2)?] {
        let roots = all_roots(&id);
        let odd = roots.iter().filter(|r| r.parity == crate::rootdata::Parity::Odd).count();
        let expected = match id.family {
            crate::rootdata::Family::Sl => 2 * id.m * id.n,
            crate::rootdata::Family::Osp => 4 * id.n,
        };
        if odd != expected {
            return Err(Error::Internal("odd root count mismatch".into()));
        }
        // a reflection followed by its inverse restores the simple set
        let borel = distinguished_borel(&id)?;
        for alpha in borel.simple_roots.clone() {
            if alpha.parity != crate::rootdata::Parity::Odd {
                continue;
            }
            let refl = odd_reflection(&id, &borel, &alpha)?;
            let back = odd_reflection(&id, &refl, &alpha.negate())?;
            if back.simple_roots != borel.simple_roots {
                return Err(Error::Internal("double odd reflection is not the identity".into()));
            }
        }
        // z-decomposition has c_β ≠ 0 on every positive odd root
        let (_, odds) = positive_roots(&id, &borel);
        for beta in odds {
            let (c, _) = z_decomposition(&id, &beta)?;
            if c.is_zero() {
                return Err(Error::Internal("vanishing c_β".into()));
            }
        }
    }
    Ok("counts, involution and z-decomposition on sl(1|2), sl(2|2), sl(1|3), osp(2|4)".into())
}

fn invariant_annihilator() -> Result<String> {
    let thetas = [
        theta_1var(3, &[q_int(7), q_int(1), q_zero()]),
        theta_1var(2, &[q_int(3)]),
        ZFunctional::from_entries(
            2,
            2,
            &[
                (vec![0, 0], q_int(4)),
                (vec![1, 0], q_int(1)),
                (vec![0, 1], q_int(-1)),
            ],
        )?,
    ];
    for theta in &thetas {
        let alg = annihilator_ideal(theta)?;
        let ideal = alg.quotient_ideal.clone().expect("ideal data");
        if !theta.vanishes_on(&alg, &ideal) {
            return Err(Error::Internal("Θ does not vanish on k_Θ".into()));
        }
        for b in alg.quotient_monomials() {
            let vb = crate::coeffalg::monomial_vector(&alg, b);
            if alg.ideal_contains(&vb) {
                continue;
            }
            let mut gens = ideal.rows.clone();
            gens.push(vb);
            let bigger = ideal_generated_by(&alg, &gens);
            if bigger.iter().all(|v| theta.apply(&alg, v).is_zero()) {
                return Err(Error::Internal("k_Θ is not maximal".into()));
            }
        }
    }
    Ok("ideal closure and maximality exhaustive on 3 functionals".into())
}

fn invariant_characters() -> Result<String> {
    let id = sl12();
    for d in 1u32..=3 {
        for v in 0..=2i64 {
            let ch = kac_like_character(&id, &label(&id, &[v]), d, false)?;
            if ch.dimension() != (1i64 << (2 * d)) * (v + 1) {
                return Err(Error::Internal("Kac-like dimension formula failed".into()));
            }
            let sch = kac_like_character(&id, &label(&id, &[v]), d, true)?;
            if sch.dimension() != 0 {
                return Err(Error::Internal("nonzero superdimension".into()));
            }
        }
    }
    // decompose ∘ multiply is associative-consistent
    let a = crate::charring::weyl_character(&id, &label(&id, &[1]))?;
    let b = crate::charring::weyl_character(&id, &label(&id, &[2]))?;
    let c = crate::charring::weyl_character(&id, &label(&id, &[1]))?;
    let left = crate::charring::decompose(&id, &a.mul(&b).mul(&c))?;
    let right = crate::charring::decompose(&id, &a.mul(&b.mul(&c)))?;
    if left != right {
        return Err(Error::Internal("decomposition not associative-consistent".into()));
    }
    Ok("dimension formulas and decomposition consistency".into())
}

fn invariant_normalize() -> Result<String> {
    let id = sl12();
    let point = Point::new(vec![q_zero()])?;
    let factor = LocalFactor {
        point,
        kind: FactorKind::Kac {
            theta: theta_1var(2, &[q_int(3), q_int(1)]),
            vlabel: G0IrrepLabel::trivial(&id),
        },
    };
    let desc = classify::normalize(&id, vec![factor])?;
    let again = classify::normalize(&id, desc.factors.clone())?;
    if desc != again {
        return Err(Error::Internal("normalize is not idempotent".into()));
    }
    let hw = classify::descriptor_highest_weight(&id, &desc)?;
    let borel = distinguished_borel(&id)?;
    let same = classify::change_of_borel(&id, &hw, &[], &borel)?;
    if same != hw {
        return Err(Error::Internal("empty chain is not the identity".into()));
    }
    Ok("normalize idempotent; empty chain fixed".into())
}

fn invariant_koszul_monotone() -> Result<String> {
    let id = sl12();
    let alg = realize::build_superalgebra(&id)?;
    let theta = theta_1var(2, &[q_int(1), q_int(1)]);
    let vlabel = G0IrrepLabel::trivial(&id);
    let mut previous = 0usize;
    let mut dims = Vec::new();
    for order in [2u32, 3] {
        let m = v_module(&alg, &theta, &vlabel, order)?;
        let ext = realize::ext1_koszul(&m, &m)?;
        if ext < previous {
            return Err(Error::Internal(format!(
                "Ext¹ dropped from {previous} to {ext} as the truncation grew"
            )));
        }
        previous = ext;
        dims.push(ext);
    }
    Ok(format!("self-extension dims {dims:?} non-decreasing in N"))
}

fn invariant_serde_round_trip() -> Result<String> {
    let id = sl12();
    let point = Point::new(vec![q_frac(1, 2)])?;
    let desc = classify::normalize(
        &id,
        vec![LocalFactor {
            point,
            kind: FactorKind::Kac {
                theta: theta_1var(2, &[q_frac(-3, 7), q_int(1)]),
                vlabel: label(&id, &[2]),
            },
        }],
    )?;
    let json = serde_json::to_string(&desc).map_err(|e| Error::Internal(e.to_string()))?;
    let back: ModuleDescriptor =
        serde_json::from_str(&json).map_err(|e| Error::Internal(e.to_string()))?;
    if back != desc {
        return Err(Error::Internal("descriptor JSON round trip failed".into()));
    }
    let theta = theta_1var(3, &[q_int(0), q_frac(2, 3)]);
    let json = serde_json::to_string(&theta).map_err(|e| Error::Internal(e.to_string()))?;
    let back: ZFunctional =
        serde_json::from_str(&json).map_err(|e| Error::Internal(e.to_string()))?;
    if back != theta {
        return Err(Error::Internal("functional JSON round trip failed".into()));
    }
    Ok("descriptor and functional JSON round trips".into())
}

/// Convenience runner for an arbitrary root.
#[allow(unused)]
fn unused_root_helper(_r: &Root) {}
