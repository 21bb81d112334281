//! Truncated local coefficient algebras and central functionals.
//!
//! A maximal ideal `m = ⟨t₁−a₁, …, t_r−a_r⟩` of a polynomial algebra gives
//! the truncation `A/mⁿ`, modeled on the monomial basis
//! `T̄₁^{i₁}⋯T̄_r^{i_r}` (`T_i = t_i − a_i`) with `i₁+⋯+i_r < n`.  A central
//! functional `Θ ∈ z[A]*` is stored by its finitely many values on that
//! basis.  Its annihilator `k_Θ` — the largest proper ideal with
//! `Θ(z⊗k_Θ) = 0` — is the kernel of the multiplication form
//! `(a, b) ↦ Θ(z⊗ab)`, computed by direct linear algebra on the monomial
//! basis; no Gröbner machinery is needed for these local quotients.
//!
//! The exponent support `I_Θ`, its maximal elements `Î_Θ`, and the
//! ⋆-pairing `(y_α ⊗ T̄^i)^⋆ = x_α ⊗ T̄^{n̂−i}` (for a chosen `n̂ ∈ Î_Θ`)
//! drive the constructive irreducibility certificate in the oracle.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{sv_to_dense, Rref};
use crate::rootdata::{AlgebraId, Parity, Root};
use crate::scalar::{q_zero, Q};

/// Exponent tuple of a monomial `T̄₁^{i₁}⋯T̄_r^{i_r}`.
pub type ExpTuple = Vec<u32>;

pub fn total_degree(exp: &[u32]) -> u32 {
    exp.iter().sum()
}

fn leq_componentwise(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A rational point, i.e. the maximal ideal `⟨t₁−a₁,…,t_r−a_r⟩`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "crate::scalar::qjson_vec")]
    pub coords: Vec<Q>,
}

impl Point {
    pub fn new(coords: Vec<Q>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Parameter("a point needs r >= 1 coordinates".into()));
        }
        Ok(Point { coords })
    }

    pub fn r(&self) -> usize {
        self.coords.len()
    }
}

/// An ideal `I/mⁿ` of a truncation, as a reduced row-echelon basis in
/// monomial coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealData {
    /// Fully reduced rows; each has a unit leading coefficient.
    pub rows: Vec<Vec<Q>>,
    /// Pivot monomial index of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl IdealData {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// The truncation `A/mⁿ` (optionally further divided by an ideal `I ⊇ mⁿ`).
#[derive(Debug, Clone)]
pub struct TruncatedAlgebra {
    pub r: usize,
    pub order: u32,
    /// Graded-lexicographic monomial basis of `A/mⁿ`.
    pub basis: Vec<ExpTuple>,
    index: BTreeMap<ExpTuple, usize>,
    pub quotient_ideal: Option<IdealData>,
}

fn enumerate_monomials(r: usize, order: u32) -> Vec<ExpTuple> {
    fn rec(all: &mut Vec<ExpTuple>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
        if pos == current.len() {
            all.push(current.clone());
            return;
        }
        for v in 0..=remaining {
            current[pos] = v;
            rec(all, current, pos + 1, remaining - v);
            current[pos] = 0;
        }
    }
    let mut all = Vec::new();
    let mut current = vec![0u32; r];
    rec(&mut all, &mut current, 0, order - 1);
    all.sort_by_key(|e| (total_degree(e), e.clone()));
    all
}

impl TruncatedAlgebra {
    pub fn new(r: usize, order: u32) -> Result<Self> {
        if r == 0 || order == 0 {
            return Err(Error::Parameter(
                "truncated algebra needs r >= 1 and n >= 1".into(),
            ));
        }
        let basis = enumerate_monomials(r, order);
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(TruncatedAlgebra {
            r,
            order,
            basis,
            index,
            quotient_ideal: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn monomial_index(&self, exp: &[u32]) -> Option<usize> {
        self.index.get(exp).copied()
    }

    /// Index of the constant monomial `1`.
    pub fn one_index(&self) -> usize {
        0
    }

    /// Product of two basis monomials; `None` means it vanished into `mⁿ`.
    pub fn mul_monomials(&self, a: usize, b: usize) -> Option<usize> {
        let exp: ExpTuple = self.basis[a]
            .iter()
            .zip(&self.basis[b])
            .map(|(x, y)| x + y)
            .collect();
        if total_degree(&exp) >= self.order {
            None
        } else {
            self.monomial_index(&exp)
        }
    }

    /// Product of two vectors in monomial coordinates.
    pub fn mul_vectors(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![q_zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                if let Some(k) = self.mul_monomials(i, j) {
                    out[k] += ai * bj;
                }
            }
        }
        out
    }

    /// Multiply a vector by a single basis monomial.
    pub fn mul_vector_by_monomial(&self, a: &[Q], mono: usize) -> Vec<Q> {
        let mut out = vec![q_zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            if let Some(k) = self.mul_monomials(i, mono) {
                out[k] += ai;
            }
        }
        out
    }

    /// Attach an ideal given by spanning vectors; verifies closure under
    /// multiplication by every variable.
    pub fn with_ideal(mut self, spanning: &[Vec<Q>]) -> Result<Self> {
        let mut rref = Rref::new(self.dim());
        for v in spanning {
            rref.insert_dense(v);
        }
        let ideal = ideal_from_rref(&mut rref, self.dim());
        self.check_ideal_closure(&ideal)?;
        self.quotient_ideal = Some(ideal);
        Ok(self)
    }

    /// Spanning rows of the ideal `m^k / mⁿ`.
    pub fn power_ideal_rows(&self, k: u32) -> Vec<Vec<Q>> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, e)| total_degree(e) >= k)
            .map(|(i, _)| {
                let mut v = vec![q_zero(); self.dim()];
                v[i] = crate::scalar::q_one();
                v
            })
            .collect()
    }

    fn check_ideal_closure(&self, ideal: &IdealData) -> Result<()> {
        let mut rref = Rref::new(self.dim());
        for row in &ideal.rows {
            rref.insert_dense(row);
        }
        for row in &ideal.rows {
            for var in 0..self.r {
                let mut exp = vec![0u32; self.r];
                exp[var] = 1;
                if let Some(t) = self.monomial_index(&exp) {
                    let shifted = self.mul_vector_by_monomial(row, t);
                    if !rref.contains_dense(&shifted) {
                        return Err(Error::Domain(
                            "subspace is not closed under multiplication".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Monomial indices forming a basis of the quotient `A/I`
    /// (all monomials when no ideal is attached).
    pub fn quotient_monomials(&self) -> Vec<usize> {
        match &self.quotient_ideal {
            None => (0..self.dim()).collect(),
            Some(ideal) => {
                let pivots: BTreeSet<usize> = ideal.pivots.iter().copied().collect();
                (0..self.dim()).filter(|i| !pivots.contains(i)).collect()
            }
        }
    }

    pub fn quotient_dim(&self) -> usize {
        self.dim() - self.quotient_ideal.as_ref().map_or(0, |i| i.dim())
    }

    /// Reduce a vector modulo the attached ideal; the result is supported on
    /// the quotient monomials.
    pub fn reduce_mod_ideal(&self, v: &[Q]) -> Vec<Q> {
        let Some(ideal) = &self.quotient_ideal else {
            return v.to_vec();
        };
        let mut out = v.to_vec();
        for (row, &p) in ideal.rows.iter().zip(&ideal.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (k, rv) in row.iter().enumerate() {
                if !rv.is_zero() {
                    out[k] = &out[k] - &(&c * rv);
                }
            }
        }
        out
    }

    /// True when the attached ideal contains the given vector.
    pub fn ideal_contains(&self, v: &[Q]) -> bool {
        self.reduce_mod_ideal(v).iter().all(|q| q.is_zero())
    }
}

fn ideal_from_rref(rref: &mut Rref, dim: usize) -> IdealData {
    rref.back_substitute();
    let mut rows_with_pivots: Vec<(usize, Vec<Q>)> = rref
        .rows()
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| (r[0].0, sv_to_dense(r, dim)))
        .collect();
    rows_with_pivots.sort_by_key(|(p, _)| *p);
    let pivots = rows_with_pivots.iter().map(|(p, _)| *p).collect();
    let rows = rows_with_pivots.into_iter().map(|(_, r)| r).collect();
    IdealData { rows, pivots }
}

/// A central functional `Θ`, by its values on the truncation basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZFunctional {
    pub r: usize,
    pub n: u32,
    #[serde(
        serialize_with = "serialize_values",
        deserialize_with = "deserialize_values"
    )]
    pub values: BTreeMap<ExpTuple, Q>,
}

#[derive(Serialize, Deserialize)]
struct ValueEntry {
    exp: ExpTuple,
    #[serde(with = "crate::scalar::qjson")]
    val: Q,
}

fn serialize_values<S: serde::Serializer>(
    values: &BTreeMap<ExpTuple, Q>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|(exp, val)| ValueEntry {
        exp: exp.clone(),
        val: val.clone(),
    }))
}

fn deserialize_values<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<BTreeMap<ExpTuple, Q>, D::Error> {
    let entries = Vec::<ValueEntry>::deserialize(d)?;
    Ok(entries
        .into_iter()
        .filter(|e| !e.val.is_zero())
        .map(|e| (e.exp, e.val))
        .collect())
}

impl ZFunctional {
    pub fn new(r: usize, n: u32, values: BTreeMap<ExpTuple, Q>) -> Result<Self> {
        for exp in values.keys() {
            if exp.len() != r {
                return Err(Error::Parameter(format!(
                    "exponent tuple {exp:?} does not have r = {r} entries"
                )));
            }
            if total_degree(exp) >= n {
                return Err(Error::Parameter(format!(
                    "exponent tuple {exp:?} has total degree >= n = {n}; such values vanish"
                )));
            }
        }
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(ZFunctional { r, n, values })
    }

    /// Convenience constructor from explicit entries.
    pub fn from_entries(r: usize, n: u32, entries: &[(Vec<u32>, Q)]) -> Result<Self> {
        Self::new(r, n, entries.iter().cloned().collect())
    }

    pub fn value(&self, exp: &[u32]) -> Q {
        self.values.get(exp).cloned().unwrap_or_else(q_zero)
    }

    /// `Θ(z) = Θ(z⊗1)`.
    pub fn theta_z(&self) -> Q {
        self.value(&vec![0; self.r])
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// True iff `Θ(z⊗m) ≠ 0`, i.e. some positive-degree monomial has a
    /// nonzero value.
    pub fn touches_maximal_ideal(&self) -> bool {
        self.values.keys().any(|e| total_degree(e) >= 1)
    }

    /// `Θ(z⊗a)` for a vector in the monomial coordinates of `alg`.
    pub fn apply(&self, alg: &TruncatedAlgebra, a: &[Q]) -> Q {
        a.iter()
            .enumerate()
            .map(|(i, c)| c * &self.value(&alg.basis[i]))
            .sum()
    }

    /// True iff Θ vanishes on every row of the ideal.
    pub fn vanishes_on(&self, alg: &TruncatedAlgebra, ideal: &IdealData) -> bool {
        ideal.rows.iter().all(|row| self.apply(alg, row).is_zero())
    }

    /// The minimal `l` with `Θ(z⊗m^l) = 0` (i.e. 1 + max support degree),
    /// or 0 for the zero functional.
    pub fn vanishing_order(&self) -> u32 {
        self.values
            .keys()
            .map(|e| total_degree(e) + 1)
            .max()
            .unwrap_or(0)
    }
}

/// The exponent support `I_Θ`.
pub fn support_set(theta: &ZFunctional) -> BTreeSet<ExpTuple> {
    theta.values.keys().cloned().collect()
}

/// Maximal elements `Î_Θ` of the support under the componentwise order.
pub fn maximal_support(theta: &ZFunctional) -> Result<Vec<ExpTuple>> {
    let support = support_set(theta);
    if support.is_empty() {
        return Err(Error::Domain(
            "maximal support of the zero functional is undefined".into(),
        ));
    }
    Ok(support
        .iter()
        .filter(|e| !support.iter().any(|f| f != *e && leq_componentwise(e, f)))
        .cloned()
        .collect())
}

/// The annihilator ideal `k_Θ`: the largest proper ideal with
/// `Θ(z⊗k_Θ) = 0`, returned as `A/mⁿ` with `quotient_ideal = k_Θ/mⁿ`.
///
/// Computed as the kernel of the multiplication form
/// `G_{ij} = Θ(z ⊗ T̄^{e_i} T̄^{e_j})`; the kernel is automatically an ideal
/// and contains every ideal on which Θ vanishes.  When `Θ(z⊗m) = 0` the
/// kernel is exactly `m/mⁿ`.
pub fn annihilator_ideal(theta: &ZFunctional) -> Result<TruncatedAlgebra> {
    if theta.is_zero() {
        return Err(Error::Degenerate(
            "the zero functional has no unique largest proper vanishing ideal".into(),
        ));
    }
    let alg = TruncatedAlgebra::new(theta.r, theta.n)?;
    let dim = alg.dim();
    let mut rref = Rref::new(dim);
    for i in 0..dim {
        let mut row = vec![q_zero(); dim];
        for j in 0..dim {
            if let Some(k) = alg.mul_monomials(i, j) {
                row[j] = theta.value(&alg.basis[k]);
            }
        }
        rref.insert_dense(&row);
    }
    let kernel = rref.kernel_basis();
    let rows: Vec<Vec<Q>> = kernel.iter().map(|v| sv_to_dense(v, dim)).collect();
    let alg = alg
        .with_ideal(&rows)
        .map_err(|_| Error::Internal("annihilator kernel is not an ideal; this is a bug".into()))?;
    if alg.quotient_dim() == 0 {
        return Err(Error::Internal(
            "annihilator ideal of a nonzero functional contained 1".into(),
        ));
    }
    Ok(alg)
}

/// A chosen maximal exponent `n̂ ∈ Î_Θ` defining the ⋆-pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarPartner {
    pub nhat: ExpTuple,
}

impl StarPartner {
    pub fn new(theta: &ZFunctional, nhat: ExpTuple) -> Result<Self> {
        let maxima = maximal_support(theta)?;
        if !maxima.contains(&nhat) {
            return Err(Error::Precondition(format!(
                "{nhat:?} is not maximal in the support of Θ"
            )));
        }
        Ok(StarPartner { nhat })
    }

    /// All valid choices for a given Θ.
    pub fn all(theta: &ZFunctional) -> Result<Vec<StarPartner>> {
        Ok(maximal_support(theta)?
            .into_iter()
            .map(|nhat| StarPartner { nhat })
            .collect())
    }
}

/// `(y_α ⊗ T̄^i)^⋆ = x_α ⊗ T̄^{n̂−i}`: returns the positive odd root datum
/// for `x_α` together with the complementary exponent.
pub fn star(
    id: &AlgebraId,
    mono: &ExpTuple,
    alpha: &Root,
    partner: &StarPartner,
) -> Result<(Root, ExpTuple)> {
    if alpha.parity != Parity::Odd {
        return Err(Error::Precondition("⋆ is defined on odd roots".into()));
    }
    let borel = crate::rootdata::distinguished_borel(id)?;
    if !crate::rootdata::is_positive(id, alpha, &borel) {
        return Err(Error::Precondition(
            "⋆ is defined on positive odd roots".into(),
        ));
    }
    if !leq_componentwise(mono, &partner.nhat) {
        return Err(Error::Precondition(format!(
            "exponent {mono:?} is not ≤ n̂ = {:?}",
            partner.nhat
        )));
    }
    let complement = partner.nhat.iter().zip(mono).map(|(n, i)| n - i).collect();
    Ok((alpha.clone(), complement))
}

/// Spanning rows (in `A/mⁿ` monomial coordinates) of the ideal generated by
/// the given vectors.
pub fn ideal_generated_by(alg: &TruncatedAlgebra, generators: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut rows = Vec::new();
    for g in generators {
        for mono in 0..alg.dim() {
            let prod = alg.mul_vector_by_monomial(g, mono);
            if prod.iter().any(|q| !q.is_zero()) {
                rows.push(prod);
            }
        }
    }
    rows
}

/// Dense coordinates of a single monomial.
pub fn monomial_vector(alg: &TruncatedAlgebra, idx: usize) -> Vec<Q> {
    let mut v = vec![q_zero(); alg.dim()];
    v[idx] = crate::scalar::q_one();
    v
}

/// Check `v ⪯ n̂` componentwise.
pub fn below_nhat(mono: &[u32], nhat: &[u32]) -> bool {
    leq_componentwise(mono, nhat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q_int, q_one};

    fn theta_1var(n: u32, vals: &[i64]) -> ZFunctional {
        let entries: Vec<(Vec<u32>, Q)> = vals
            .iter()
            .enumerate()
            .map(|(i, &v)| (vec![i as u32], q_int(v)))
            .collect();
        ZFunctional::from_entries(1, n, &entries).unwrap()
    }

    #[test]
    fn support_and_maxima() {
        let theta = ZFunctional::from_entries(1, 2, &[]).unwrap();
        assert!(support_set(&theta).is_empty());
        assert!(maximal_support(&theta).is_err());

        let theta = theta_1var(2, &[5, 1]);
        let supp = support_set(&theta);
        assert_eq!(supp.len(), 2);
        assert_eq!(maximal_support(&theta).unwrap(), vec![vec![1]]);

        let theta = ZFunctional::from_entries(
            2,
            2,
            &[
                (vec![0, 0], q_int(1)),
                (vec![1, 0], q_int(2)),
                (vec![0, 1], q_int(3)),
            ],
        )
        .unwrap();
        assert_eq!(support_set(&theta).len(), 3);
        let maxima = maximal_support(&theta).unwrap();
        assert_eq!(maxima, vec![vec![0, 1], vec![1, 0]]);

        let theta =
            ZFunctional::from_entries(2, 3, &[(vec![0, 0], q_int(1)), (vec![1, 1], q_int(1))])
                .unwrap();
        assert_eq!(maximal_support(&theta).unwrap(), vec![vec![1, 1]]);
    }

    #[test]
    fn annihilator_examples() {
        // r=1, n=3, values {0↦θ₀, 1↦1, 2↦0} → k_Θ = ⟨t²⟩, dim A/k_Θ = 2
        let theta = theta_1var(3, &[7, 1]);
        let alg = annihilator_ideal(&theta).unwrap();
        assert_eq!(alg.quotient_dim(), 2);
        let ideal = alg.quotient_ideal.as_ref().unwrap();
        assert_eq!(ideal.pivots, vec![2]); // the t² coordinate

        // r=1, n=2, values {0↦θ₀≠0, 1↦0} → k_Θ = m, dim A/k_Θ = 1
        let theta = theta_1var(2, &[3]);
        let alg = annihilator_ideal(&theta).unwrap();
        assert_eq!(alg.quotient_dim(), 1);

        // r=1, n=3, values {0↦0,1↦0,2↦1} → k_Θ = m³ (zero in the truncation)
        let theta = ZFunctional::from_entries(1, 3, &[(vec![2], q_one())]).unwrap();
        let alg = annihilator_ideal(&theta).unwrap();
        assert_eq!(alg.quotient_dim(), 3);
        assert_eq!(alg.quotient_ideal.as_ref().unwrap().dim(), 0);

        // zero functional is rejected
        let theta = ZFunctional::from_entries(1, 2, &[]).unwrap();
        assert!(matches!(
            annihilator_ideal(&theta),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn annihilator_non_monomial() {
        // r=2, n=2, Θ: 1↦u, t₁↦1, t₂↦−1 → k_Θ/m² = span{t₁+t₂}
        let theta = ZFunctional::from_entries(
            2,
            2,
            &[
                (vec![0, 0], q_int(4)),
                (vec![1, 0], q_int(1)),
                (vec![0, 1], q_int(-1)),
            ],
        )
        .unwrap();
        let alg = annihilator_ideal(&theta).unwrap();
        assert_eq!(alg.quotient_dim(), 2);
        let ideal = alg.quotient_ideal.as_ref().unwrap();
        assert_eq!(ideal.dim(), 1);
        let row = &ideal.rows[0];
        let t1 = alg.monomial_index(&[1, 0]).unwrap();
        let t2 = alg.monomial_index(&[0, 1]).unwrap();
        assert_eq!(row[t1], row[t2]);
        assert!(!row[t1].is_zero());
    }

    #[test]
    fn ideal_closure_and_maximality_exhaustive() {
        let theta = ZFunctional::from_entries(
            2,
            3,
            &[
                (vec![0, 0], q_int(2)),
                (vec![1, 0], q_int(1)),
                (vec![1, 1], q_int(3)),
            ],
        )
        .unwrap();
        let alg = annihilator_ideal(&theta).unwrap();
        let ideal = alg.quotient_ideal.clone().unwrap();
        // closure: multiplying any row by any monomial stays inside
        let mut rref = Rref::new(alg.dim());
        for row in &ideal.rows {
            rref.insert_dense(row);
        }
        for row in &ideal.rows {
            for mono in 0..alg.dim() {
                let shifted = alg.mul_vector_by_monomial(row, mono);
                assert!(rref.contains_dense(&shifted));
            }
        }
        // Θ vanishes on the ideal
        assert!(theta.vanishes_on(&alg, &ideal));
        // maximality: adjoining any monomial outside k_Θ breaks vanishing
        for b in alg.quotient_monomials() {
            let vb = monomial_vector(&alg, b);
            if alg.ideal_contains(&vb) {
                continue;
            }
            let mut gens = ideal.rows.clone();
            gens.push(vb);
            let bigger = ideal_generated_by(&alg, &gens);
            let violated = bigger.iter().any(|v| !theta.apply(&alg, v).is_zero());
            assert!(violated, "monomial {b} could be adjoined");
        }
        // every support element sits below some maximal element
        let maxima = maximal_support(&theta).unwrap();
        for e in support_set(&theta) {
            assert!(maxima.iter().any(|m| leq_componentwise(&e, m)));
        }
    }

    #[test]
    fn star_examples() {
        let id = AlgebraId::sl(1, 2).unwrap();
        let alpha = Root::from_coords(&id, vec![1, -1, 0]).unwrap();
        let theta = theta_1var(2, &[0, 1]);
        let partner = StarPartner::all(&theta).unwrap().remove(0);
        assert_eq!(partner.nhat, vec![1]);
        // i = n̂ → exponent 0
        let (root, exp) = star(&id, &vec![1], &alpha, &partner).unwrap();
        assert_eq!(root, alpha);
        assert_eq!(exp, vec![0]);
        // i = 0 → exponent n̂
        let (_, exp) = star(&id, &vec![0], &alpha, &partner).unwrap();
        assert_eq!(exp, vec![1]);
        // i ⋠ n̂ is rejected
        assert!(star(&id, &vec![2], &alpha, &partner).is_err());
    }

    #[test]
    fn truncation_arithmetic() {
        let alg = TruncatedAlgebra::new(2, 3).unwrap();
        assert_eq!(alg.dim(), 6); // 1, t1, t2, t1², t1t2, t2²
        let t1 = alg.monomial_index(&[1, 0]).unwrap();
        let t2 = alg.monomial_index(&[0, 1]).unwrap();
        assert_eq!(alg.mul_monomials(t1, t2), alg.monomial_index(&[1, 1]));
        let t1sq = alg.monomial_index(&[2, 0]).unwrap();
        assert_eq!(alg.mul_monomials(t1sq, t1), None);
    }
}
