//! Formal characters and supercharacters.
//!
//! A [`FormalCharacter`] is a finitely supported integer combination of
//! exponentials `e^λ` of weights, with ring structure `e^λ·e^μ = e^{λ+μ}`.
//! Characters of irreducible `g₀′`-modules are evaluated by Freudenthal's
//! multiplicity recursion per simple ideal (cross-checked against the Weyl
//! dimension formula), which avoids enumerating Weyl groups.  The character
//! of an irreducible Kac-like module is
//! `ch Λ(g₋₁)^{dim A/k_Θ} · ch(Θ ⊠ V)`, and the supercharacter replaces
//! the Grassmann factor by its signed variant, so every Kac-like module has
//! superdimension zero.
//!
//! Weights carry an exact rational `z`-coordinate.  A central functional
//! over ℂ could give `Θ(z)` any complex value; this crate restricts to
//! rationals so equality and integrality tests stay decidable.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{
    distinguished_borel, form, pairing, positive_roots, root_weight, simple_ideals, AlgebraId,
    SimpleIdeal, Weight,
};
use crate::scalar::{q_int, q_is_nonneg_integer, q_one, q_zero, Q};

/// Finitely supported integer combination of weights.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FormalCharacter {
    pub terms: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        FormalCharacter {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(id: &AlgebraId) -> Self {
        Self::monomial(Weight::zero(id), 1)
    }

    pub fn monomial(w: Weight, mult: i64) -> Self {
        let mut terms = BTreeMap::new();
        if mult != 0 {
            terms.insert(w, mult);
        }
        FormalCharacter { terms }
    }

    pub fn from_weights<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut ch = Self::zero();
        for (w, m) in iter {
            ch.add_term(w, m);
        }
        ch
    }

    pub fn add_term(&mut self, w: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            let dead: Vec<Weight> = self
                .terms
                .iter()
                .filter(|(_, &m)| m == 0)
                .map(|(w, _)| w.clone())
                .collect();
            for w in dead {
                self.terms.remove(&w);
            }
        }
    }

    pub fn add(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), *m);
        }
        out
    }

    pub fn sub(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), -m);
        }
        out
    }

    pub fn mul(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for (w1, m1) in &self.terms {
            for (w2, m2) in &other.terms {
                out.add_term(w1.add(w2), m1 * m2);
            }
        }
        out
    }

    pub fn pow(&self, id: &AlgebraId, e: u32) -> FormalCharacter {
        let mut out = FormalCharacter::one(id);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Sum of multiplicities (the dimension for a genuine character, the
    /// superdimension for a supercharacter).
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Dominant-integral label of an irreducible `g₀′⊕z`-module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G0IrrepLabel {
    pub hw: Weight,
}

impl G0IrrepLabel {
    pub fn new(id: &AlgebraId, hw: Weight) -> Result<Self> {
        let label = G0IrrepLabel { hw };
        label.check_dominant(id)?;
        Ok(label)
    }

    pub fn trivial(id: &AlgebraId) -> Self {
        G0IrrepLabel {
            hw: Weight::zero(id),
        }
    }

    pub fn with_z(&self, z: Q) -> Self {
        G0IrrepLabel {
            hw: Weight {
                hprime: self.hw.hprime.clone(),
                z,
            },
        }
    }

    pub fn check_dominant(&self, id: &AlgebraId) -> Result<()> {
        if self.hw.hprime.len() != crate::rootdata::hprime_rank(id) {
            return Err(Error::Domain(format!(
                "label has {} fundamental-weight coordinates, expected {}",
                self.hw.hprime.len(),
                crate::rootdata::hprime_rank(id)
            )));
        }
        if !self.hw.hprime.iter().all(q_is_nonneg_integer) {
            return Err(Error::Domain(
                "label is not dominant integral on g₀′".into(),
            ));
        }
        Ok(())
    }

    /// Fundamental-weight coordinates split per simple ideal.
    pub fn per_ideal(&self, id: &AlgebraId) -> Vec<Vec<i64>> {
        let ideals = simple_ideals(id);
        let mut out = Vec::new();
        let mut pos = 0;
        for ideal in &ideals {
            let rank = ideal.simple_roots.len();
            out.push(
                self.hw.hprime[pos..pos + rank]
                    .iter()
                    .map(|q| {
                        q.numer()
                            .try_into()
                            .expect("dominant labels are small integers")
                    })
                    .collect(),
            );
            pos += rank;
        }
        out
    }
}

/// Per-ideal data used by the Freudenthal recursion.
struct IdealContext {
    rank: usize,
    /// Cartan pairing matrix: `cart[i][j] = γ_j(h_{γ_i})`.
    cart: Vec<Vec<Q>>,
    /// Positive-definite Gram matrix of the simple roots.
    gram: Vec<Vec<Q>>,
    /// Positive roots in simple-root coordinates (integers).
    pos_roots: Vec<Vec<i64>>,
}

impl IdealContext {
    fn new(id: &AlgebraId, ideal: &SimpleIdeal) -> Result<Self> {
        let rank = ideal.simple_roots.len();
        let mut cart = vec![vec![q_zero(); rank]; rank];
        let mut gram = vec![vec![q_zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                cart[i][j] = pairing(id, &ideal.simple_roots[j], &ideal.simple_roots[i])?;
                gram[i][j] = q_int(ideal.form_sign)
                    * form(
                        id,
                        &ideal.simple_roots[i].coords,
                        &ideal.simple_roots[j].coords,
                    );
            }
        }
        let mut pos_roots = Vec::new();
        for alpha in &ideal.positive_roots {
            let fw: Vec<Q> = ideal
                .simple_roots
                .iter()
                .map(|g| pairing(id, alpha, g))
                .collect::<Result<_>>()?;
            let coeffs = crate::linalg::solve_dense(&cart, &fw).ok_or_else(|| {
                Error::Internal("positive root outside the simple-root lattice".into())
            })?;
            let ints: Option<Vec<i64>> = coeffs
                .iter()
                .map(|c| {
                    if crate::scalar::q_is_integer(c) {
                        c.numer().try_into().ok()
                    } else {
                        None
                    }
                })
                .collect();
            pos_roots.push(ints.ok_or_else(|| {
                Error::Internal("positive root has non-integer simple coordinates".into())
            })?);
        }
        Ok(IdealContext {
            rank,
            cart,
            gram,
            pos_roots,
        })
    }

    /// ⟨μ, γ_j⟩ for μ in fundamental coordinates.
    fn pair_fw_simple(&self, fw: &[Q], j: usize) -> Q {
        &fw[j] * &self.gram[j][j] / q_int(2)
    }

    /// ⟨μ, α⟩ for μ in fundamental coordinates and α in root coordinates.
    fn pair_fw_root(&self, fw: &[Q], rc: &[i64]) -> Q {
        (0..self.rank)
            .map(|j| q_int(rc[j]) * self.pair_fw_simple(fw, j))
            .sum()
    }

    /// ⟨c, d⟩ for both in root coordinates.
    fn pair_roots(&self, c: &[i64], d: &[i64]) -> Q {
        let mut acc = q_zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += q_int(c[i]) * &self.gram[i][j] * q_int(d[j]);
            }
        }
        acc
    }

    /// fw coordinates of `Λ − Σ c_j γ_j`.
    fn fw_at_depth(&self, lambda: &[i64], c: &[i64]) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                let mut v = q_int(lambda[i]);
                for j in 0..self.rank {
                    v -= &self.cart[i][j] * q_int(c[j]);
                }
                v
            })
            .collect()
    }

    /// Weight multiplicities of the irreducible with highest weight `lambda`
    /// (fundamental coordinates), keyed by depth vector.
    fn freudenthal(&self, lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, i64>> {
        let rho_shifted: Vec<Q> = lambda.iter().map(|&v| q_int(v + 1)).collect();
        let mut mults: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        mults.insert(vec![0; self.rank], 1);
        let mut frontier: Vec<Vec<i64>> = vec![vec![0; self.rank]];
        let mut guard = 0usize;
        while !frontier.is_empty() {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::Internal("Freudenthal recursion did not close".into()));
            }
            // candidates one root below the frontier, grouped by depth level
            let mut candidates: Vec<Vec<i64>> = Vec::new();
            for c in &frontier {
                for rc in &self.pos_roots {
                    let cand: Vec<i64> = c.iter().zip(rc).map(|(a, b)| a + b).collect();
                    if !mults.contains_key(&cand) && !candidates.contains(&cand) {
                        candidates.push(cand);
                    }
                }
            }
            // process candidates in increasing depth so dependencies resolve
            candidates.sort_by_key(|c| c.iter().sum::<i64>());
            let mut new_frontier = Vec::new();
            for cand in candidates {
                // Freudenthal: (|Λ+ρ|² − |μ+ρ|²) m_μ = 2 Σ_{α>0} Σ_{k≥1} m_{μ+kα} ⟨μ+kα, α⟩
                let prefactor = {
                    // |Λ+ρ|² − |Λ+ρ−c|² = 2⟨Λ+ρ, c⟩ − ⟨c, c⟩
                    let two = q_int(2);
                    &two * self.pair_fw_root(&rho_shifted, &cand) - self.pair_roots(&cand, &cand)
                };
                let mut rhs = q_zero();
                for rc in &self.pos_roots {
                    let mut k = 1i64;
                    loop {
                        let up: Vec<i64> = cand
                            .iter()
                            .zip(rc)
                            .map(|(a, b)| a - k * b)
                            .collect();
                        if up.iter().any(|&v| v < 0) {
                            break;
                        }
                        if let Some(&m) = mults.get(&up) {
                            if m != 0 {
                                // ⟨μ+kα, α⟩ with μ+kα = Λ − up
                                let fw_up = self.fw_at_depth(lambda, &up);
                                rhs += q_int(2 * m) * self.pair_fw_root(&fw_up, rc);
                            }
                        }
                        k += 1;
                    }
                }
                let mult = if prefactor.is_zero() {
                    if !rhs.is_zero() {
                        return Err(Error::Internal(
                            "Freudenthal prefactor vanished with nonzero sum".into(),
                        ));
                    }
                    0
                } else {
                    let q = rhs / prefactor;
                    if !crate::scalar::q_is_integer(&q) {
                        return Err(Error::Internal(
                            "Freudenthal produced a non-integer multiplicity".into(),
                        ));
                    }
                    q.numer().try_into().map_err(|_| {
                        Error::Internal("Freudenthal multiplicity overflowed".into())
                    })?
                };
                if mult > 0 {
                    mults.insert(cand.clone(), mult);
                    new_frontier.push(cand);
                } else {
                    mults.insert(cand, 0);
                }
            }
            frontier = new_frontier;
        }
        mults.retain(|_, m| *m > 0);
        Ok(mults)
    }

    /// Weyl dimension formula, for cross-checking.
    fn weyl_dimension(&self, lambda: &[i64]) -> Q {
        let lam_rho: Vec<Q> = lambda.iter().map(|&v| q_int(v + 1)).collect();
        let rho: Vec<Q> = vec![q_one(); self.rank];
        let mut dim = q_one();
        for rc in &self.pos_roots {
            dim *= self.pair_fw_root(&lam_rho, rc) / self.pair_fw_root(&rho, rc);
        }
        dim
    }
}

/// Character of the irreducible `g₀`-module with the given highest weight;
/// the `z`-coordinate is a global shift.
pub fn weyl_character(id: &AlgebraId, label: &G0IrrepLabel) -> Result<FormalCharacter> {
    label.check_dominant(id)?;
    let ideals = simple_ideals(id);
    let per_ideal = label.per_ideal(id);
    // start with the trivial character carrying the z-shift
    let mut partial: Vec<(Vec<Q>, i64)> = vec![(Vec::new(), 1)];
    let mut total_dim = q_one();
    for (ideal, lambda) in ideals.iter().zip(&per_ideal) {
        let ctx = IdealContext::new(id, ideal)?;
        let mults = ctx.freudenthal(lambda)?;
        let dim_here: i64 = mults.values().sum();
        total_dim *= q_int(dim_here);
        let mut next = Vec::with_capacity(partial.len() * mults.len());
        for (prefix, m0) in &partial {
            for (depth, m) in &mults {
                let fw = ctx.fw_at_depth(lambda, depth);
                let mut w = prefix.clone();
                w.extend(fw);
                next.push((w, m0 * m));
            }
        }
        partial = next;
        // cross-check against the Weyl dimension formula
        if ctx.weyl_dimension(lambda) != q_int(dim_here) {
            return Err(Error::Internal(
                "Freudenthal dimension disagrees with the Weyl formula".into(),
            ));
        }
    }
    Ok(FormalCharacter::from_weights(partial.into_iter().map(
        |(hprime, m)| {
            (
                Weight {
                    hprime,
                    z: label.hw.z.clone(),
                },
                m,
            )
        },
    )))
}

/// Dimension of the irreducible `g₀′`-module with the given label.
pub fn irrep_dimension(id: &AlgebraId, label: &G0IrrepLabel) -> Result<i64> {
    Ok(weyl_character(id, label)?.dimension())
}

/// `∏_{α ∈ R⁺₁} (1 ± e^{−α})`: the (super)character of `Λ(g₋₁)`.
pub fn grassmann_character(id: &AlgebraId, superchar: bool) -> FormalCharacter {
    let borel = distinguished_borel(id).expect("valid id");
    let (_, odd_pos) = positive_roots(id, &borel);
    let sign = if superchar { -1 } else { 1 };
    let mut ch = FormalCharacter::one(id);
    for beta in &odd_pos {
        let neg = root_weight(id, &beta.negate());
        let mut factor = FormalCharacter::one(id);
        factor.add_term(neg, sign);
        ch = ch.mul(&factor);
    }
    ch
}

/// `ch Λ(g₋₁)^d · ch(Θ⊠V)`, the (super)character of an irreducible
/// Kac-like module with `d = dim A/k_Θ`.
pub fn kac_like_character(
    id: &AlgebraId,
    label: &G0IrrepLabel,
    d: u32,
    superchar: bool,
) -> Result<FormalCharacter> {
    if d < 1 {
        return Err(Error::Domain("dim A/k_Θ must be at least 1".into()));
    }
    let grass = grassmann_character(id, superchar).pow(id, d);
    Ok(grass.mul(&weyl_character(id, label)?))
}

/// Greedily peel highest weights off a genuine `g₀`-module character.
pub fn decompose(id: &AlgebraId, ch: &FormalCharacter) -> Result<Vec<(G0IrrepLabel, i64)>> {
    let ideals = simple_ideals(id);
    let ctxs: Vec<IdealContext> = ideals
        .iter()
        .map(|ideal| IdealContext::new(id, ideal))
        .collect::<Result<_>>()?;
    let ranks: Vec<usize> = ideals.iter().map(|i| i.simple_roots.len()).collect();

    // μ ≤ ν iff z-parts match and ν−μ is a nonnegative combination of
    // simple roots within every ideal
    let strictly_below = |mu: &Weight, nu: &Weight| -> bool {
        if mu == nu || mu.z != nu.z {
            return false;
        }
        let mut pos = 0;
        for (ctx, &rank) in ctxs.iter().zip(&ranks) {
            let diff: Vec<Q> = (0..rank)
                .map(|i| &nu.hprime[pos + i] - &mu.hprime[pos + i])
                .collect();
            let Some(coeffs) = crate::linalg::solve_dense(&ctx.cart, &diff) else {
                return false;
            };
            // verify and demand nonnegativity
            for i in 0..rank {
                let lhs: Q = (0..rank).map(|j| &ctx.cart[i][j] * &coeffs[j]).sum();
                if lhs != diff[i] {
                    return false;
                }
            }
            if coeffs.iter().any(|c| c < &q_zero()) {
                return false;
            }
            pos += rank;
        }
        true
    };

    let mut rest = ch.clone();
    let mut out: Vec<(G0IrrepLabel, i64)> = Vec::new();
    let mut guard = 0usize;
    while !rest.is_zero() {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Internal("decomposition did not terminate".into()));
        }
        let weights: Vec<Weight> = rest.terms.keys().cloned().collect();
        let top = weights
            .iter()
            .find(|w| !weights.iter().any(|v| strictly_below(w, v)))
            .cloned()
            .ok_or_else(|| Error::Internal("no maximal term found".into()))?;
        let mult = rest.terms[&top];
        if mult < 0 {
            return Err(Error::Domain(
                "not a module character: negative leading multiplicity".into(),
            ));
        }
        let label = G0IrrepLabel::new(id, top).map_err(|_| {
            Error::Domain("not a module character: non-dominant leading term".into())
        })?;
        let irr = weyl_character(id, &label)?;
        for (w, m) in &irr.terms {
            rest.add_term(w.clone(), -mult * m);
        }
        out.push((label, mult));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Multiplicity of the irreducible `label` inside a genuine character.
pub fn hom_multiplicity(
    id: &AlgebraId,
    ch: &FormalCharacter,
    label: &G0IrrepLabel,
) -> Result<i64> {
    Ok(decompose(id, ch)?
        .into_iter()
        .find(|(l, _)| l == label)
        .map(|(_, m)| m)
        .unwrap_or(0))
}

/// Character of the adjoint `g₀′`-module (all even roots of the ideals plus
/// the Cartan at weight zero); its `z`-coordinate is identically zero.
pub fn adjoint_character(id: &AlgebraId) -> FormalCharacter {
    let mut ch = FormalCharacter::zero();
    let rank = crate::rootdata::hprime_rank(id) as i64;
    ch.add_term(Weight::zero(id), rank);
    for ideal in simple_ideals(id) {
        for alpha in &ideal.positive_roots {
            ch.add_term(root_weight(id, alpha), 1);
            ch.add_term(root_weight(id, &alpha.negate()), 1);
        }
    }
    ch
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl12() -> AlgebraId {
        AlgebraId::sl(1, 2).unwrap()
    }

    fn label(id: &AlgebraId, fw: &[i64], z: i64) -> G0IrrepLabel {
        G0IrrepLabel::new(
            id,
            Weight {
                hprime: fw.iter().map(|&v| q_int(v)).collect(),
                z: q_int(z),
            },
        )
        .unwrap()
    }

    #[test]
    fn weyl_character_small() {
        let id = sl12();
        // trivial: single term e^0
        let ch = weyl_character(&id, &label(&id, &[0], 0)).unwrap();
        assert_eq!(ch.dimension(), 1);
        assert_eq!(ch.terms.len(), 1);
        // sl(2) fundamental: e^ϖ + e^{−ϖ}
        let ch = weyl_character(&id, &label(&id, &[1], 0)).unwrap();
        assert_eq!(ch.dimension(), 2);
        let fws: Vec<i64> = ch
            .terms
            .keys()
            .map(|w| w.hprime[0].numer().try_into().unwrap())
            .collect();
        assert_eq!(fws, vec![-1, 1]);
        // hw 2 → dim 3
        let ch = weyl_character(&id, &label(&id, &[2], 0)).unwrap();
        assert_eq!(ch.dimension(), 3);
        // non-dominant rejected
        assert!(G0IrrepLabel::new(
            &id,
            Weight {
                hprime: vec![q_int(-1)],
                z: q_zero()
            }
        )
        .is_err());
    }

    #[test]
    fn weyl_character_two_ideals_and_bigger_ranks() {
        let id = AlgebraId::sl(2, 2).unwrap();
        // (1,0): fundamental of the first sl(2): dim 2
        assert_eq!(irrep_dimension(&id, &label(&id, &[1, 0], 0)).unwrap(), 2);
        // (1,1): 2×2 = 4
        assert_eq!(irrep_dimension(&id, &label(&id, &[1, 1], 0)).unwrap(), 4);
        let id = AlgebraId::sl(2, 3).unwrap();
        // sl(2)⊕sl(3): (1, 1, 0) → 2 × 3
        assert_eq!(irrep_dimension(&id, &label(&id, &[1, 1, 0], 0)).unwrap(), 6);
        // adjoint of the sl(3) ideal: (0, 1, 1) → 8
        assert_eq!(irrep_dimension(&id, &label(&id, &[0, 1, 1], 0)).unwrap(), 8);
        // sp(4) for osp(2|4): fundamental (1,0) → 4, (0,1) → 5
        let id = AlgebraId::osp(2).unwrap();
        assert_eq!(irrep_dimension(&id, &label(&id, &[1, 0], 0)).unwrap(), 4);
        assert_eq!(irrep_dimension(&id, &label(&id, &[0, 1], 0)).unwrap(), 5);
    }

    #[test]
    fn grassmann_character_examples() {
        let id = sl12();
        let ch = grassmann_character(&id, false);
        // 1 + e^{−(ε₁−δ₁)} + e^{−(ε₁−δ₂)} + e^{−(2ε₁−δ₁−δ₂)}; dim 4
        assert_eq!(ch.dimension(), 4);
        assert_eq!(ch.terms.len(), 4);
        // super variant sums to zero
        let sch = grassmann_character(&id, true);
        assert_eq!(sch.dimension(), 0);
        // dim = 2^{|R⁺₁|}
        let id = AlgebraId::sl(2, 2).unwrap();
        assert_eq!(grassmann_character(&id, false).dimension(), 16);
    }

    #[test]
    fn kac_like_character_examples() {
        let id = sl12();
        // trivial V, d = 2 → 2^{2·2}·1 = 16
        let ch = kac_like_character(&id, &label(&id, &[0], 0), 2, false).unwrap();
        assert_eq!(ch.dimension(), 16);
        // superdimension 0
        let sch = kac_like_character(&id, &label(&id, &[0], 0), 2, true).unwrap();
        assert_eq!(sch.dimension(), 0);
        // d = 1 reduces to the classical Kac character
        let ch = kac_like_character(&id, &label(&id, &[1], 0), 1, false).unwrap();
        let classical = grassmann_character(&id, false)
            .mul(&weyl_character(&id, &label(&id, &[1], 0)).unwrap());
        assert_eq!(ch, classical);
        // dimension formula across d and dim V
        for d in 1..=3u32 {
            for v in 0..=2i64 {
                let ch = kac_like_character(&id, &label(&id, &[v], 0), d, false).unwrap();
                assert_eq!(ch.dimension(), (1i64 << (2 * d)) * (v + 1));
            }
        }
        assert!(kac_like_character(&id, &label(&id, &[0], 0), 0, false).is_err());
    }

    #[test]
    fn decompose_examples() {
        let id = sl12();
        // idempotence on an irreducible
        let l = label(&id, &[2], 3);
        let parts = decompose(&id, &weyl_character(&id, &l).unwrap()).unwrap();
        assert_eq!(parts, vec![(l.clone(), 1)]);
        // Clebsch–Gordan: hw1 ⊗ hw1 = hw2 ⊕ hw0
        let c1 = weyl_character(&id, &label(&id, &[1], 0)).unwrap();
        let parts = decompose(&id, &c1.mul(&c1)).unwrap();
        assert_eq!(
            parts,
            vec![(label(&id, &[0], 0), 1), (label(&id, &[2], 0), 1)]
        );
        // dimension of the Grassmann character
        assert_eq!(grassmann_character(&id, false).dimension(), 4);
        // a non-character is rejected
        let mut bad = FormalCharacter::zero();
        bad.add_term(
            Weight {
                hprime: vec![q_int(1)],
                z: q_zero(),
            },
            -1,
        );
        assert!(decompose(&id, &bad).is_err());
    }

    #[test]
    fn decompose_product_associativity() {
        let id = sl12();
        let a = weyl_character(&id, &label(&id, &[1], 0)).unwrap();
        let b = weyl_character(&id, &label(&id, &[2], 1)).unwrap();
        let c = weyl_character(&id, &label(&id, &[1], -1)).unwrap();
        let left = decompose(&id, &a.mul(&b).mul(&c)).unwrap();
        let right = decompose(&id, &a.mul(&b.mul(&c))).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn adjoint_character_dimension() {
        let id = sl12();
        // g₀′ = sl(2): adjoint has dim 3
        assert_eq!(adjoint_character(&id).dimension(), 3);
        let id = AlgebraId::sl(2, 3).unwrap();
        // sl(2)⊕sl(3): 3 + 8
        assert_eq!(adjoint_character(&id).dimension(), 11);
        // and it decomposes into the two adjoint labels
        let parts = decompose(&id, &adjoint_character(&id)).unwrap();
        assert_eq!(parts.len(), 2);
    }
}
