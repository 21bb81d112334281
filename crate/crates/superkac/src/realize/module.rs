//! Explicit modules over `g[A/I]` with exact rational action matrices.
//!
//! A Kac-like module is realized on `Λ(g₋₁ ⊗ A/I) ⊗ V`: negative odd root
//! vectors act by exterior multiplication, the even part by derivations
//! plus the `Θ⊠V` action on the tensor factor, and positive odd root
//! vectors by the contraction recursion that the supercommutation relations
//! force on an induced module.  The Grassmann generators are ordered
//! lexicographically by (root, monomial), and all exterior-algebra signs
//! follow from that global order.

use std::collections::HashMap;
use std::io::Write;
use std::sync::Arc;

use num::{Signed, Zero};

use crate::caps;
use crate::charring::{FormalCharacter, G0IrrepLabel};
use crate::coeffalg::{TruncatedAlgebra, ZFunctional};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::rootdata::{root_weight, Parity, Weight};
use crate::scalar::{q_one, q_zero, Q};

use super::g0rep::build_g0_irrep;
use super::superalgebra::MatrixSuperalgebra;

/// Which algebra acts: all of `g[·]` or only the even part `g₀[·]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActingOn {
    G,
    G0,
}

/// An explicit module with one action matrix per (basis element of `g`,
/// basis monomial of `B = A/I`).
#[derive(Debug, Clone)]
pub struct ExplicitModule {
    pub alg: Arc<MatrixSuperalgebra>,
    /// The ambient truncation `A/mᴺ`, with `quotient_ideal = I/mᴺ` when the
    /// module genuinely lives over a smaller quotient.
    pub ambient: TruncatedAlgebra,
    /// Ambient monomial indices forming the basis of `B`.
    pub quotient_monos: Vec<usize>,
    pub dim: usize,
    pub parities: Vec<Parity>,
    pub weights: Vec<Weight>,
    pub hw_index: Option<usize>,
    pub acting: ActingOn,
    /// `action[(g, slot)]` for every acting basis element and `B`-slot.
    pub action: HashMap<(usize, usize), SparseMat>,
    /// Ambient monomial → `B` coordinates.
    pub reduction: Vec<Vec<Q>>,
    pub theta: Option<ZFunctional>,
    pub vlabel: Option<G0IrrepLabel>,
}

impl ExplicitModule {
    pub fn b_dim(&self) -> usize {
        self.quotient_monos.len()
    }

    pub fn act(&self, g: usize, slot: usize) -> &SparseMat {
        &self.action[&(g, slot)]
    }

    pub fn has_action(&self, g: usize) -> bool {
        self.action.contains_key(&(g, 0))
    }

    /// Action of `u ⊗ T̄^e` for an ambient monomial index `e`.
    pub fn act_ambient(&self, g: usize, mono: usize) -> SparseMat {
        let mut out = SparseMat::zero(self.dim, self.dim);
        for (k, c) in self.reduction[mono].iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.act(g, k).scale(c));
            }
        }
        out
    }

    /// Action of an algebra element `Σ c_l b_l ⊗ (B-vector)`.
    pub fn operator(&self, elem: &[(usize, Q)], b: &[Q]) -> SparseMat {
        let mut out = SparseMat::zero(self.dim, self.dim);
        for (lbl, c) in elem {
            for (k, bk) in b.iter().enumerate() {
                let coeff = c * bk;
                if !coeff.is_zero() {
                    out = out.add(&self.act(*lbl, k).scale(&coeff));
                }
            }
        }
        out
    }

    /// All action generators `(g, slot)` of the acting algebra.
    pub fn generator_keys(&self) -> Vec<(usize, usize)> {
        let mut keys: Vec<(usize, usize)> = self.action.keys().copied().collect();
        keys.sort_unstable();
        keys
    }

    /// Product of two `B`-coordinate vectors.
    pub fn b_mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut ambient_a = vec![q_zero(); self.ambient.dim()];
        for (k, v) in a.iter().enumerate() {
            ambient_a[self.quotient_monos[k]] = v.clone();
        }
        let mut ambient_b = vec![q_zero(); self.ambient.dim()];
        for (k, v) in b.iter().enumerate() {
            ambient_b[self.quotient_monos[k]] = v.clone();
        }
        let prod = self.ambient.mul_vectors(&ambient_a, &ambient_b);
        let reduced = self.ambient.reduce_mod_ideal(&prod);
        self.quotient_monos
            .iter()
            .map(|&m| reduced[m].clone())
            .collect()
    }

    /// Exhaustive check that the action table represents the superbracket:
    /// returns the largest absolute residual entry (zero for a module).
    pub fn bracket_residual(&self) -> Q {
        let mut worst = q_zero();
        let keys = self.generator_keys();
        for &(u, a) in &keys {
            for &(v, b) in &keys {
                let ua = self.act(u, a);
                let vb = self.act(v, b);
                let uv = ua.compose(vb);
                let vu = vb.compose(ua);
                let super_sign = self.alg.parity_of(u) == Parity::Odd
                    && self.alg.parity_of(v) == Parity::Odd;
                let comm = if super_sign { uv.add(&vu) } else { uv.sub(&vu) };
                let prod = self.b_mul(
                    &unit_b(self.b_dim(), a),
                    &unit_b(self.b_dim(), b),
                );
                let expected = self.operator(&self.alg.brackets[u][v], &prod);
                let resid = comm.sub(&expected);
                for (_, _, q) in resid.triplets() {
                    let a = q.abs();
                    if a > worst {
                        worst = a;
                    }
                }
            }
        }
        worst
    }

    /// Character (or supercharacter) read off the weight grading.
    pub fn character(&self, superchar: bool) -> FormalCharacter {
        FormalCharacter::from_weights(self.weights.iter().zip(&self.parities).map(|(w, p)| {
            let sign = if superchar && *p == Parity::Odd {
                -1
            } else {
                1
            };
            (w.clone(), sign)
        }))
    }

    pub fn superdimension(&self) -> i64 {
        self.parities
            .iter()
            .map(|p| if *p == Parity::Odd { -1 } else { 1 })
            .sum()
    }

    /// The module with the same carrier and action `u ↦ ρ(τ(u))ᵀ`.
    pub fn dual(&self) -> ExplicitModule {
        let mut action = HashMap::new();
        for (&(g, k), _) in self.action.iter() {
            let t = self.alg.tau(g);
            action.insert((g, k), self.act(t, k).transpose());
        }
        ExplicitModule {
            alg: Arc::clone(&self.alg),
            ambient: self.ambient.clone(),
            quotient_monos: self.quotient_monos.clone(),
            dim: self.dim,
            parities: self.parities.clone(),
            weights: self.weights.clone(),
            hw_index: self.hw_index,
            acting: self.acting,
            action,
            reduction: self.reduction.clone(),
            theta: None,
            vlabel: None,
        }
    }

    /// Quotient by an invariant subspace given as fully reduced rows with
    /// the stated pivot coordinates.
    pub fn quotient(&self, rows: &[Vec<Q>], pivots: &[usize]) -> Result<ExplicitModule> {
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let complement: Vec<usize> = (0..self.dim).filter(|i| !pivot_set.contains(i)).collect();
        let reduce = |v: &[Q]| -> Vec<Q> {
            let mut out = v.to_vec();
            for (row, &p) in rows.iter().zip(pivots) {
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
            complement.iter().map(|&i| out[i].clone()).collect()
        };
        // the subspace must be weight- and parity-homogeneous for the
        // induced grading to make sense
        for row in rows {
            let mut seen: Option<(&Weight, &Parity)> = None;
            for (i, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match seen {
                    None => seen = Some((&self.weights[i], &self.parities[i])),
                    Some((w, p)) => {
                        if w != &self.weights[i] || p != &self.parities[i] {
                            return Err(Error::Domain(
                                "subspace is not weight/parity homogeneous".into(),
                            ));
                        }
                    }
                }
            }
        }
        let mut action = HashMap::new();
        for (&(g, k), mat) in self.action.iter() {
            let mut newmat = SparseMat::zero(complement.len(), complement.len());
            for (col, &src) in complement.iter().enumerate() {
                let mut e = vec![q_zero(); self.dim];
                e[src] = q_one();
                let img = mat.apply_dense(&e);
                for (r, c) in reduce(&img).into_iter().enumerate() {
                    if !c.is_zero() {
                        newmat.set(r, col, c);
                    }
                }
            }
            action.insert((g, k), newmat);
        }
        let hw_index = match self.hw_index {
            Some(h) => complement.iter().position(|&i| i == h),
            None => None,
        };
        Ok(ExplicitModule {
            alg: Arc::clone(&self.alg),
            ambient: self.ambient.clone(),
            quotient_monos: self.quotient_monos.clone(),
            dim: complement.len(),
            parities: complement.iter().map(|&i| self.parities[i]).collect(),
            weights: complement.iter().map(|&i| self.weights[i].clone()).collect(),
            hw_index,
            acting: self.acting,
            action,
            reduction: self.reduction.clone(),
            theta: self.theta.clone(),
            vlabel: self.vlabel.clone(),
        })
    }

    /// Export dimensions, parities and the action table as sparse triplets.
    pub fn export_triplets(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "dim {}", self.dim)?;
        let parity_line: String = self
            .parities
            .iter()
            .map(|p| if *p == Parity::Odd { '1' } else { '0' })
            .collect();
        writeln!(out, "parity {parity_line}")?;
        for (g, k) in self.generator_keys() {
            let mono = &self.ambient.basis[self.quotient_monos[k]];
            for (r, c, v) in self.act(g, k).triplets() {
                writeln!(
                    out,
                    "{} {:?} {} {} {}",
                    self.alg.label_name(g),
                    mono,
                    r,
                    c,
                    crate::scalar::q_to_string(&v)
                )?;
            }
        }
        Ok(())
    }
}

fn unit_b(len: usize, k: usize) -> Vec<Q> {
    let mut v = vec![q_zero(); len];
    v[k] = q_one();
    v
}

/// Internal builder state for Kac-like modules.
struct KacBuilder {
    alg: Arc<MatrixSuperalgebra>,
    vdim: usize,
    vaction: HashMap<usize, SparseMat>,
    b_dim: usize,
    dim: usize,
    /// products of B basis monomials
    prod: Vec<Vec<Vec<Q>>>,
    /// θ value of each B basis monomial
    theta_b: Vec<Q>,
    /// indices in the superalgebra of y_β per odd-positive root
    y_idx: Vec<usize>,
    x_idx: Vec<usize>,
}

impl KacBuilder {
    fn index(&self, mask: u64, v: usize) -> usize {
        (mask as usize) * self.vdim + v
    }

    fn insert_gen_sign(mask: u64, gen: usize) -> i64 {
        let below = mask & ((1u64 << gen) - 1);
        if below.count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Exterior left multiplication by `y_{β} ⊗ b`.
    fn apply_odd_neg(&self, beta: usize, b: &[Q], vec: &[Q], out: &mut [Q]) {
        for (idx, c) in vec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mask = (idx / self.vdim) as u64;
            let v = idx % self.vdim;
            for (k, bk) in b.iter().enumerate() {
                if bk.is_zero() {
                    continue;
                }
                let gen = beta * self.b_dim + k;
                if mask & (1 << gen) != 0 {
                    continue;
                }
                let sign = Self::insert_gen_sign(mask, gen);
                let t = self.index(mask | (1 << gen), v);
                out[t] = &out[t] + &(c * bk * crate::scalar::q_int(sign));
            }
        }
    }

    /// Action of an even element `Σ c_l b_l ⊗ b` on a single basis vector.
    fn even_on_basis(
        &self,
        elem: &[(usize, Q)],
        b: &[Q],
        mask: u64,
        v: usize,
        coeff: &Q,
        out: &mut [Q],
    ) {
        for (lbl, lc) in elem {
            let scale = coeff * lc;
            // derivation over the Grassmann factors
            let mut bits = mask;
            while bits != 0 {
                let gen = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let beta = gen / self.b_dim;
                let slot = gen % self.b_dim;
                let bracket = &self.alg.brackets[*lbl][self.y_idx[beta]];
                if bracket.is_empty() {
                    continue;
                }
                let prod = self.b_mul_vec(b, slot);
                if prod.iter().all(|q| q.is_zero()) {
                    continue;
                }
                let sign_rm = Self::insert_gen_sign(mask, gen);
                let mask_rm = mask & !(1 << gen);
                for (lbl2, c2) in bracket {
                    // [g₀, g₋₁] ⊆ g₋₁: lbl2 is some y_{β'}
                    let Some(beta2) = self.y_idx.iter().position(|&y| y == *lbl2) else {
                        continue;
                    };
                    for (k2, pk) in prod.iter().enumerate() {
                        if pk.is_zero() {
                            continue;
                        }
                        let gen2 = beta2 * self.b_dim + k2;
                        if mask_rm & (1 << gen2) != 0 {
                            continue;
                        }
                        let sign_in = Self::insert_gen_sign(mask_rm, gen2);
                        let t = self.index(mask_rm | (1 << gen2), v);
                        out[t] = &out[t]
                            + &(&scale
                                * c2
                                * pk
                                * crate::scalar::q_int(sign_rm * sign_in));
                    }
                }
            }
            // tensor-factor action on V
            if *lbl == self.alg.idx_z() {
                let theta_val: Q = b
                    .iter()
                    .zip(&self.theta_b)
                    .map(|(bk, tv)| bk * tv)
                    .sum();
                if !theta_val.is_zero() {
                    let t = self.index(mask, v);
                    out[t] = &out[t] + &(&scale * &theta_val);
                }
            } else {
                let ev = b[0].clone(); // coefficient of the constant monomial
                if !ev.is_zero() {
                    if let Some(m) = self.vaction.get(lbl) {
                        for (r, mv) in &m.cols[v] {
                            let t = self.index(mask, *r);
                            out[t] = &out[t] + &(&scale * &ev * mv);
                        }
                    }
                }
            }
        }
    }

    /// `b · (slot monomial)` in B coordinates.
    fn b_mul_vec(&self, b: &[Q], slot: usize) -> Vec<Q> {
        let mut out = vec![q_zero(); self.b_dim];
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (k, pv) in self.prod[j][slot].iter().enumerate() {
                if !pv.is_zero() {
                    out[k] = &out[k] + &(bj * pv);
                }
            }
        }
        out
    }

    /// Action of `x_α ⊗ b` on a single basis vector, by the contraction
    /// recursion `x ζ = [x, ζ] − ζ x`.
    fn x_on_basis(&self, alpha: usize, b: &[Q], mask: u64, v: usize, coeff: &Q, out: &mut [Q]) {
        if mask == 0 {
            return; // g₁[B] kills the inducing module
        }
        let gen = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << gen);
        let beta = gen / self.b_dim;
        let slot = gen % self.b_dim;
        // bracket term: [x_α ⊗ b, y_β ⊗ b̄_slot] acting on (rest, v)
        let bracket = &self.alg.brackets[self.x_idx[alpha]][self.y_idx[beta]];
        if !bracket.is_empty() {
            let prod = self.b_mul_vec(b, slot);
            if prod.iter().any(|q| !q.is_zero()) {
                self.even_on_basis(bracket, &prod, rest, v, coeff, out);
            }
        }
        // recursion term: −ζ_gen · (x_α ⊗ b)(rest ⊗ v)
        let mut tmp = vec![q_zero(); self.dim];
        let neg = -coeff.clone();
        self.x_on_basis(alpha, b, rest, v, &neg, &mut tmp);
        for (idx, c) in tmp.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m2 = (idx / self.vdim) as u64;
            let v2 = idx % self.vdim;
            if m2 & (1 << gen) != 0 {
                continue;
            }
            let sign = Self::insert_gen_sign(m2, gen);
            let t = self.index(m2 | (1 << gen), v2);
            out[t] = &out[t] + &(c * crate::scalar::q_int(sign));
        }
    }
}

/// Basis data shared by the full and carrier-only builders.
fn kac_weights_and_parities(
    alg: &MatrixSuperalgebra,
    vweights: &[Weight],
    theta_z: &Q,
    gen_count: usize,
    b_dim: usize,
    vdim: usize,
) -> (Vec<Weight>, Vec<Parity>) {
    let id = &alg.id;
    let neg_weights: Vec<Weight> = alg
        .odd_positive
        .iter()
        .map(|r| root_weight(id, &r.negate()))
        .collect();
    let dim = (1usize << gen_count) * vdim;
    let mut weights = Vec::with_capacity(dim);
    let mut parities = Vec::with_capacity(dim);
    for mask in 0..(1u64 << gen_count) {
        let mut shift = Weight::zero(id);
        let mut bits = mask;
        while bits != 0 {
            let gen = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            shift = shift.add(&neg_weights[gen / b_dim]);
        }
        let parity = if mask.count_ones() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        };
        for v in 0..vdim {
            let mut w = vweights[v].add(&shift);
            w.z = &w.z + theta_z;
            weights.push(w);
            parities.push(parity);
        }
    }
    (weights, parities)
}

fn check_theta_vanishes_on_ideal(trunc: &TruncatedAlgebra, theta: &ZFunctional) -> Result<()> {
    if let Some(ideal) = &trunc.quotient_ideal {
        for row in &ideal.rows {
            let val: Q = row
                .iter()
                .enumerate()
                .map(|(i, c)| c * &theta.value(&trunc.basis[i]))
                .sum();
            if !val.is_zero() {
                return Err(Error::Domain(
                    "Kac-like module not defined: Θ(z⊗I) ≠ 0".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Build the Kac-like module `Λ(g₋₁ ⊗ A/I) ⊗ (Θ ⊠ V)` with full action
/// matrices over `g[A/mᴺ]` (acting through `A/I`).
pub fn build_kac_like(
    alg: &Arc<MatrixSuperalgebra>,
    trunc: &TruncatedAlgebra,
    theta: &ZFunctional,
    vlabel: &G0IrrepLabel,
) -> Result<ExplicitModule> {
    let _id = &alg.id;
    if theta.r != trunc.r {
        return Err(Error::Parameter(
            "Θ and the truncation disagree on the number of variables".into(),
        ));
    }
    check_theta_vanishes_on_ideal(trunc, theta)?;
    let rep = build_g0_irrep(alg, vlabel)?;
    let quotient_monos = trunc.quotient_monomials();
    let b_dim = quotient_monos.len();
    let q_odd = alg.odd_positive.len();
    let gen_count = q_odd * b_dim;
    if gen_count > 60 {
        return Err(Error::SizeCap("too many Grassmann generators".into()));
    }
    let dim = (1usize << gen_count) * rep.dim;
    caps::check_module_dim(dim)?;

    // reduction table and product table
    let reduction: Vec<Vec<Q>> = (0..trunc.dim())
        .map(|mono| {
            let mut unit = vec![q_zero(); trunc.dim()];
            unit[mono] = q_one();
            let red = trunc.reduce_mod_ideal(&unit);
            quotient_monos.iter().map(|&m| red[m].clone()).collect()
        })
        .collect();
    let prod: Vec<Vec<Vec<Q>>> = (0..b_dim)
        .map(|a| {
            (0..b_dim)
                .map(|b| {
                    match trunc.mul_monomials(quotient_monos[a], quotient_monos[b]) {
                        None => vec![q_zero(); b_dim],
                        Some(m) => reduction[m].clone(),
                    }
                })
                .collect()
        })
        .collect();
    let theta_b: Vec<Q> = quotient_monos
        .iter()
        .map(|&m| theta.value(&trunc.basis[m]))
        .collect();

    let y_idx: Vec<usize> = alg
        .odd_positive
        .iter()
        .map(|r| alg.idx_y(r))
        .collect::<Result<_>>()?;
    let x_idx: Vec<usize> = alg
        .odd_positive
        .iter()
        .map(|r| alg.idx_x(r))
        .collect::<Result<_>>()?;

    let builder = KacBuilder {
        alg: Arc::clone(alg),
        vdim: rep.dim,
        vaction: rep.action,
        b_dim,
        dim,
        prod,
        theta_b,
        y_idx: y_idx.clone(),
        x_idx: x_idx.clone(),
    };

    // assemble action matrices column by column
    let mut action: HashMap<(usize, usize), SparseMat> = HashMap::new();
    for g in 0..alg.dim() {
        for k in 0..b_dim {
            let b = unit_b(b_dim, k);
            let mut mat = SparseMat::zero(dim, dim);
            for col in 0..dim {
                let mask = (col / builder.vdim) as u64;
                let v = col % builder.vdim;
                let mut out = vec![q_zero(); dim];
                let one = q_one();
                if let Some(beta) = y_idx.iter().position(|&y| y == g) {
                    let mut unit = vec![q_zero(); dim];
                    unit[col] = q_one();
                    builder.apply_odd_neg(beta, &b, &unit, &mut out);
                } else if let Some(alpha) = x_idx.iter().position(|&x| x == g) {
                    builder.x_on_basis(alpha, &b, mask, v, &one, &mut out);
                } else {
                    let elem = vec![(g, q_one())];
                    builder.even_on_basis(&elem, &b, mask, v, &one, &mut out);
                }
                for (r, val) in out.into_iter().enumerate() {
                    if !val.is_zero() {
                        mat.set(r, col, val);
                    }
                }
            }
            action.insert((g, k), mat);
        }
    }

    let (weights, parities) = kac_weights_and_parities(
        alg,
        &rep.weights,
        &theta.theta_z(),
        gen_count,
        b_dim,
        rep.dim,
    );

    Ok(ExplicitModule {
        alg: Arc::clone(alg),
        ambient: trunc.clone(),
        quotient_monos,
        dim,
        parities,
        weights,
        hw_index: Some(rep.hw_index),
        acting: ActingOn::G,
        action,
        reduction,
        theta: Some(theta.clone()),
        vlabel: Some(vlabel.clone()),
    })
}

/// Carrier-level data of a Kac-like module (no matrices): dimension,
/// superdimension and (super)characters, for instances beyond the cap.
pub struct KacCarrier {
    pub dim: usize,
    pub sdim: i64,
    pub character: FormalCharacter,
    pub supercharacter: FormalCharacter,
}

pub fn build_kac_like_carrier(
    alg: &MatrixSuperalgebra,
    trunc: &TruncatedAlgebra,
    theta: &ZFunctional,
    vlabel: &G0IrrepLabel,
) -> Result<KacCarrier> {
    check_theta_vanishes_on_ideal(trunc, theta)?;
    let vchar = crate::charring::weyl_character(&alg.id, vlabel)?;
    let vdim = vchar.dimension() as usize;
    let mut vweights = Vec::with_capacity(vdim);
    for (w, m) in &vchar.terms {
        for _ in 0..*m {
            vweights.push(w.clone());
        }
    }
    let b_dim = trunc.quotient_dim();
    let gen_count = alg.odd_positive.len() * b_dim;
    if gen_count > 24 {
        return Err(Error::SizeCap("carrier enumeration too large".into()));
    }
    let (weights, parities) = kac_weights_and_parities(
        alg,
        &vweights,
        &theta.theta_z(),
        gen_count,
        b_dim,
        vdim,
    );
    let dim = weights.len();
    let sdim = parities
        .iter()
        .map(|p| if *p == Parity::Odd { -1i64 } else { 1 })
        .sum();
    let character =
        FormalCharacter::from_weights(weights.iter().map(|w| (w.clone(), 1)));
    let supercharacter =
        FormalCharacter::from_weights(weights.iter().zip(&parities).map(|(w, p)| {
            (w.clone(), if *p == Parity::Odd { -1 } else { 1 })
        }));
    Ok(KacCarrier {
        dim,
        sdim,
        character,
        supercharacter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffalg::annihilator_ideal;
    use crate::rootdata::AlgebraId;
    use crate::scalar::q_int;

    fn sl12() -> Arc<MatrixSuperalgebra> {
        Arc::new(MatrixSuperalgebra::new(&AlgebraId::sl(1, 2).unwrap()).unwrap())
    }

    fn trivial_label(id: &AlgebraId) -> G0IrrepLabel {
        G0IrrepLabel::trivial(id)
    }

    #[test]
    fn kac_like_dim_16_and_brackets() {
        let alg = sl12();
        // Θ: 1 ↦ 3, t ↦ 1 over A/m², so k_Θ = m² and dim A/k_Θ = 2
        let theta = ZFunctional::from_entries(
            1,
            2,
            &[(vec![0], q_int(3)), (vec![1], q_int(1))],
        )
        .unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let vlabel = trivial_label(&alg.id);
        let module = build_kac_like(&alg, &trunc, &theta, &vlabel).unwrap();
        assert_eq!(module.dim, 16);
        assert_eq!(module.superdimension(), 0);
        // the action table satisfies the superbracket exactly
        assert!(module.bracket_residual().is_zero());
        // character matches the closed formula
        let expected =
            crate::charring::kac_like_character(&alg.id, &vlabel.with_z(q_int(3)), 2, false)
                .unwrap();
        assert_eq!(module.character(false), expected);
        let sexpected =
            crate::charring::kac_like_character(&alg.id, &vlabel.with_z(q_int(3)), 2, true)
                .unwrap();
        assert_eq!(module.character(true), sexpected);
    }

    #[test]
    fn classical_kac_module() {
        let alg = sl12();
        // order-1 truncation: the classical Kac module over g itself
        let theta = ZFunctional::from_entries(1, 1, &[(vec![0], q_int(5))]).unwrap();
        let trunc = TruncatedAlgebra::new(1, 1).unwrap();
        let module = build_kac_like(&alg, &trunc, &theta, &trivial_label(&alg.id)).unwrap();
        assert_eq!(module.dim, 4);
        assert!(module.bracket_residual().is_zero());
    }

    #[test]
    fn carrier_matches_full_build() {
        let alg = sl12();
        let theta = ZFunctional::from_entries(
            1,
            2,
            &[(vec![0], q_int(3)), (vec![1], q_int(1))],
        )
        .unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let vlabel = trivial_label(&alg.id);
        let module = build_kac_like(&alg, &trunc, &theta, &vlabel).unwrap();
        let carrier = build_kac_like_carrier(&alg, &trunc, &theta, &vlabel).unwrap();
        assert_eq!(carrier.dim, module.dim);
        assert_eq!(carrier.sdim, module.superdimension());
        assert_eq!(carrier.character, module.character(false));
        assert_eq!(carrier.supercharacter, module.character(true));
    }

    #[test]
    fn theta_must_vanish_on_ideal() {
        let alg = sl12();
        // Θ(z⊗t) ≠ 0 but I = m, so Θ(z⊗I) ≠ 0
        let theta = ZFunctional::from_entries(
            1,
            2,
            &[(vec![0], q_int(1)), (vec![1], q_int(1))],
        )
        .unwrap();
        let base = TruncatedAlgebra::new(1, 2).unwrap();
        let rows = base.power_ideal_rows(1);
        let trunc = base.with_ideal(&rows).unwrap();
        assert!(build_kac_like(&alg, &trunc, &theta, &trivial_label(&alg.id)).is_err());
    }

    #[test]
    fn dual_has_same_character_and_brackets() {
        let alg = sl12();
        let theta = ZFunctional::from_entries(
            1,
            2,
            &[(vec![0], q_int(3)), (vec![1], q_int(1))],
        )
        .unwrap();
        let trunc = annihilator_ideal(&theta).unwrap();
        let module = build_kac_like(&alg, &trunc, &theta, &trivial_label(&alg.id)).unwrap();
        let dual = module.dual();
        assert_eq!(dual.dim, module.dim);
        assert_eq!(dual.character(false), module.character(false));
        assert!(dual.bracket_residual().is_zero());
        // double dual returns the original action table
        let double = dual.dual();
        for key in module.generator_keys() {
            assert_eq!(module.action[&key], double.action[&key]);
        }
    }
}
