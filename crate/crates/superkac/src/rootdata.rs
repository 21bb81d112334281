//! Root systems, parities, pairings, Borel subalgebras and odd reflections
//! for `sl(m|n)` (1 ≤ m ≤ n, n > 1) and `osp(2|2n)` (n > 1).
//!
//! Roots live in the ε/δ coordinate lattice: integer vectors of length
//! `m + n` for `sl(m|n)` (ε₁..ε_m, δ₁..δ_n) and `1 + n` for `osp(2|2n)`
//! (ε, δ₁..δ_n).  Keeping roots integral makes odd-reflection arithmetic
//! exact; conversion to fundamental-weight coordinates happens per simple
//! ideal of the even part `g₀′`.
//!
//! The invariant form is diagonal, `+1` on ε-coordinates and `−1` on
//! δ-coordinates.  For an even root α the coroot `h_α` is the usual
//! `2α♯/⟨α,α⟩`; for an odd root it is the form-dual `α♯`, which matches
//! the elementary-matrix bracket `[x_α, y_α]` for positive odd roots of
//! `sl(m|n)` (for negative odd roots the matrix bracket differs by sign,
//! which no consumer of [`pairing`] depends on).
//!
//! The central element `z` of `g₀` is normalized so that every positive
//! odd root takes the value 1 on it when `m < n`; for `sl(n|n)` the center
//! is the identity matrix and odd roots vanish on it.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::solve_dense;
use crate::scalar::{q_int, q_is_integer, q_zero, Q};

/// The two families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sl,
    Osp,
}

/// Which algebra: `sl(m|n)` or `osp(2|2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    pub family: Family,
    /// Only meaningful for `Sl`; fixed to 1 for `Osp` (the single ε).
    pub m: usize,
    pub n: usize,
}

impl AlgebraId {
    pub fn sl(m: usize, n: usize) -> Result<Self> {
        let id = AlgebraId {
            family: Family::Sl,
            m,
            n,
        };
        id.validate()?;
        Ok(id)
    }

    pub fn osp(n: usize) -> Result<Self> {
        let id = AlgebraId {
            family: Family::Osp,
            m: 1,
            n,
        };
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::Sl => {
                if !(1 <= self.m && self.m <= self.n && self.n > 1) {
                    return Err(Error::Parameter(format!(
                        "sl(m|n) requires 1 <= m <= n and n > 1, got m={}, n={}",
                        self.m, self.n
                    )));
                }
            }
            Family::Osp => {
                if self.n <= 1 {
                    return Err(Error::Parameter(format!(
                        "osp(2|2n) requires n > 1, got n={}",
                        self.n
                    )));
                }
            }
        }
        Ok(())
    }

    /// Length of the ε/δ coordinate vectors.
    pub fn coord_len(&self) -> usize {
        match self.family {
            Family::Sl => self.m + self.n,
            Family::Osp => 1 + self.n,
        }
    }

    /// Number of ε coordinates.
    pub fn eps_len(&self) -> usize {
        match self.family {
            Family::Sl => self.m,
            Family::Osp => 1,
        }
    }

    /// Rank of the Cartan subalgebra of `g`.
    pub fn cartan_rank(&self) -> usize {
        match self.family {
            Family::Sl => self.m + self.n - 1,
            Family::Osp => 1 + self.n,
        }
    }

    /// dim g₋₁ = number of positive odd roots.
    pub fn dim_g_minus1(&self) -> usize {
        match self.family {
            Family::Sl => self.m * self.n,
            Family::Osp => 2 * self.n,
        }
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry(
            "family",
            match self.family {
                Family::Sl => "sl",
                Family::Osp => "osp",
            },
        )?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("n", &self.n)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: Family,
            #[serde(default)]
            m: Option<usize>,
            n: usize,
        }
        let raw = Raw::deserialize(d)?;
        let id = match raw.family {
            Family::Sl => AlgebraId {
                family: Family::Sl,
                m: raw.m.unwrap_or(1),
                n: raw.n,
            },
            Family::Osp => AlgebraId {
                family: Family::Osp,
                m: 1,
                n: raw.n,
            },
        };
        id.validate().map_err(serde::de::Error::custom)?;
        Ok(id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A root in ε/δ coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
    pub parity: Parity,
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl Root {
    /// Build from coordinates, inferring and validating the parity pattern.
    pub fn from_coords(id: &AlgebraId, coords: Vec<i64>) -> Result<Root> {
        if coords.len() != id.coord_len() {
            return Err(Error::Domain(format!(
                "root coordinate length {} does not match algebra (expected {})",
                coords.len(),
                id.coord_len()
            )));
        }
        let root = Root {
            parity: infer_parity(id, &coords)?,
            coords,
        };
        if !all_roots(id).contains(&root) {
            return Err(Error::Domain(format!(
                "{:?} is not a root of the given algebra",
                root.coords
            )));
        }
        Ok(root)
    }

    pub fn negate(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
            parity: self.parity,
        }
    }

    pub fn add(&self, other: &Root, parity: Parity) -> Root {
        Root {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            parity,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

fn infer_parity(id: &AlgebraId, coords: &[i64]) -> Result<Parity> {
    let eps = id.eps_len();
    let eps_supp = coords[..eps].iter().any(|&c| c != 0);
    let delta_supp = coords[eps..].iter().any(|&c| c != 0);
    Ok(match (eps_supp, delta_supp) {
        (true, true) => Parity::Odd,
        (true, false) | (false, true) => Parity::Even,
        (false, false) => {
            return Err(Error::Domain("zero vector is not a root".into()));
        }
    })
}

fn unit(id: &AlgebraId, pos: usize, val: i64) -> Vec<i64> {
    let mut v = vec![0i64; id.coord_len()];
    v[pos] = val;
    v
}

fn two_coord(id: &AlgebraId, p1: usize, v1: i64, p2: usize, v2: i64) -> Vec<i64> {
    let mut v = vec![0i64; id.coord_len()];
    v[p1] += v1;
    v[p2] += v2;
    v
}

/// All roots of `g`.
pub fn all_roots(id: &AlgebraId) -> Vec<Root> {
    let mut roots = Vec::new();
    let eps = id.eps_len();
    match id.family {
        Family::Sl => {
            let (m, n) = (id.m, id.n);
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        roots.push(Root {
                            coords: two_coord(id, i, 1, j, -1),
                            parity: Parity::Even,
                        });
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(Root {
                            coords: two_coord(id, eps + i, 1, eps + j, -1),
                            parity: Parity::Even,
                        });
                    }
                }
            }
            for i in 0..m {
                for j in 0..n {
                    for sign in [1i64, -1] {
                        roots.push(Root {
                            coords: two_coord(id, i, sign, eps + j, -sign),
                            parity: Parity::Odd,
                        });
                    }
                }
            }
        }
        Family::Osp => {
            let n = id.n;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(Root {
                            coords: two_coord(id, eps + i, 1, eps + j, -1),
                            parity: Parity::Even,
                        });
                    }
                }
                for s in [2i64, -2] {
                    roots.push(Root {
                        coords: unit(id, eps + i, s),
                        parity: Parity::Even,
                    });
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    for s in [1i64, -1] {
                        roots.push(Root {
                            coords: two_coord(id, eps + i, s, eps + j, s),
                            parity: Parity::Even,
                        });
                    }
                }
            }
            for i in 0..n {
                for (se, sd) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                    roots.push(Root {
                        coords: two_coord(id, 0, se, eps + i, sd),
                        parity: Parity::Odd,
                    });
                }
            }
        }
    }
    roots
}

/// The diagonal invariant form on ε/δ coordinates: `+1` on ε, `−1` on δ.
pub fn form(id: &AlgebraId, a: &[i64], b: &[i64]) -> Q {
    let eps = id.eps_len();
    let mut acc = 0i64;
    for k in 0..id.coord_len() {
        let sign = if k < eps { 1 } else { -1 };
        acc += sign * a[k] * b[k];
    }
    q_int(acc)
}

/// The Cartan element `h_α` as the vector of coordinate-functional values,
/// i.e. `μ(h_α) = Σ_k μ_k v_k` for a weight `μ` in ε/δ coordinates.
pub fn coroot_vector(id: &AlgebraId, alpha: &Root) -> Vec<Q> {
    let eps = id.eps_len();
    let dual: Vec<Q> = alpha
        .coords
        .iter()
        .enumerate()
        .map(|(k, &c)| if k < eps { q_int(c) } else { q_int(-c) })
        .collect();
    match alpha.parity {
        Parity::Odd => dual,
        Parity::Even => {
            let norm = form(id, &alpha.coords, &alpha.coords);
            let two = q_int(2);
            dual.into_iter().map(|v| v * &two / &norm).collect()
        }
    }
}

/// The vector of coordinate-functional values of the central element `z`.
pub fn z_vector(id: &AlgebraId) -> Vec<Q> {
    match id.family {
        Family::Sl => {
            let (m, n) = (id.m as i64, id.n as i64);
            if m == n {
                vec![q_int(1); id.coord_len()]
            } else {
                let a = Q::new(n.into(), (n - m).into());
                let b = Q::new(m.into(), (n - m).into());
                let mut v = vec![a; id.m];
                v.extend(std::iter::repeat(b).take(id.n));
                v
            }
        }
        Family::Osp => {
            let mut v = vec![q_zero(); id.coord_len()];
            v[0] = q_int(1);
            v
        }
    }
}

/// Evaluate an integer coordinate vector (a root, say) on a Cartan vector.
pub fn eval_on_cartan(coords: &[i64], cartan: &[Q]) -> Q {
    coords
        .iter()
        .zip(cartan)
        .map(|(&c, v)| q_int(c) * v)
        .sum()
}

/// β(h_α).
pub fn pairing(id: &AlgebraId, beta: &Root, alpha: &Root) -> Result<Q> {
    let roots = all_roots(id);
    if !roots.contains(beta) || !roots.contains(alpha) {
        return Err(Error::Domain("pairing arguments must be roots".into()));
    }
    Ok(eval_on_cartan(&beta.coords, &coroot_vector(id, alpha)))
}

/// A choice of simple roots together with the odd reflections applied so far.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorelChoice {
    pub simple_roots: Vec<Root>,
    pub reflection_chain: Vec<Root>,
}

/// The distinguished Borel: all odd simple roots sit at the ε/δ boundary.
pub fn distinguished_borel(id: &AlgebraId) -> Result<BorelChoice> {
    id.validate()?;
    let eps = id.eps_len();
    let mut simple = Vec::new();
    match id.family {
        Family::Sl => {
            for i in 0..id.m - 1 {
                simple.push(Root {
                    coords: two_coord(id, i, 1, i + 1, -1),
                    parity: Parity::Even,
                });
            }
            simple.push(Root {
                coords: two_coord(id, id.m - 1, 1, eps, -1),
                parity: Parity::Odd,
            });
            for j in 0..id.n - 1 {
                simple.push(Root {
                    coords: two_coord(id, eps + j, 1, eps + j + 1, -1),
                    parity: Parity::Even,
                });
            }
        }
        Family::Osp => {
            simple.push(Root {
                coords: two_coord(id, 0, 1, eps, -1),
                parity: Parity::Odd,
            });
            for j in 0..id.n - 1 {
                simple.push(Root {
                    coords: two_coord(id, eps + j, 1, eps + j + 1, -1),
                    parity: Parity::Even,
                });
            }
            simple.push(Root {
                coords: unit(id, eps + id.n - 1, 2),
                parity: Parity::Even,
            });
        }
    }
    Ok(BorelChoice {
        simple_roots: simple,
        reflection_chain: Vec::new(),
    })
}

/// Express `root` in the basis of `simple` roots; `None` if not in the span.
pub fn expand_in_simple(id: &AlgebraId, root: &Root, simple: &[Root]) -> Option<Vec<Q>> {
    let rows = id.coord_len();
    let a: Vec<Vec<Q>> = (0..rows)
        .map(|k| simple.iter().map(|s| q_int(s.coords[k])).collect())
        .collect();
    let b: Vec<Q> = root.coords.iter().map(|&c| q_int(c)).collect();
    let sol = solve_dense(&a, &b)?;
    // solve_dense zero-fills free variables; verify it is a genuine solution
    for k in 0..rows {
        let lhs: Q = simple
            .iter()
            .zip(&sol)
            .map(|(s, c)| q_int(s.coords[k]) * c)
            .sum();
        if lhs != b[k] {
            return None;
        }
    }
    Some(sol)
}

/// Check that `simple` is a valid simple-root set: every root of `R` is an
/// all-nonnegative or all-nonpositive integer combination of it.
pub fn is_valid_simple_set(id: &AlgebraId, simple: &[Root]) -> bool {
    for root in all_roots(id) {
        let Some(coeffs) = expand_in_simple(id, &root, simple) else {
            return false;
        };
        if !coeffs.iter().all(q_is_integer) {
            return false;
        }
        let pos = coeffs.iter().any(|c| c > &q_zero());
        let neg = coeffs.iter().any(|c| c < &q_zero());
        if pos && neg {
            return false;
        }
    }
    true
}

/// Positivity of a root with respect to a Borel choice.
pub fn is_positive(id: &AlgebraId, root: &Root, borel: &BorelChoice) -> bool {
    match expand_in_simple(id, root, &borel.simple_roots) {
        Some(coeffs) => coeffs.iter().all(|c| c >= &q_zero()),
        None => false,
    }
}

/// Positive roots, split (evens, odds).
pub fn positive_roots(id: &AlgebraId, borel: &BorelChoice) -> (Vec<Root>, Vec<Root>) {
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for root in all_roots(id) {
        if is_positive(id, &root, borel) {
            match root.parity {
                Parity::Even => evens.push(root),
                Parity::Odd => odds.push(root),
            }
        }
    }
    evens.sort();
    odds.sort();
    (evens, odds)
}

/// The odd reflection `r_α` at an odd isotropic simple root α:
/// α ↦ −α; β ↦ β + α when α(h_β) ≠ 0 or β(h_α) ≠ 0; β ↦ β otherwise.
pub fn odd_reflection(id: &AlgebraId, borel: &BorelChoice, alpha: &Root) -> Result<BorelChoice> {
    if !borel.simple_roots.contains(alpha) {
        return Err(Error::Precondition(
            "odd reflection requires a simple root".into(),
        ));
    }
    if alpha.parity != Parity::Odd {
        return Err(Error::Precondition(
            "odd reflection requires an odd root".into(),
        ));
    }
    if !pairing(id, alpha, alpha)?.is_zero() {
        return Err(Error::Precondition(
            "odd reflection requires an isotropic root".into(),
        ));
    }
    let mut new_simple = Vec::with_capacity(borel.simple_roots.len());
    for beta in &borel.simple_roots {
        if beta == alpha {
            new_simple.push(alpha.negate());
        } else {
            let a_on_hb = pairing(id, alpha, beta)?;
            let b_on_ha = pairing(id, beta, alpha)?;
            if !a_on_hb.is_zero() || !b_on_ha.is_zero() {
                let parity = match beta.parity {
                    Parity::Even => Parity::Odd,
                    Parity::Odd => Parity::Even,
                };
                new_simple.push(beta.add(alpha, parity));
            } else {
                new_simple.push(beta.clone());
            }
        }
    }
    if !is_valid_simple_set(id, &new_simple) {
        return Err(Error::Internal(
            "odd reflection produced an invalid simple-root set".into(),
        ));
    }
    let mut chain = borel.reflection_chain.clone();
    chain.push(alpha.clone());
    Ok(BorelChoice {
        simple_roots: new_simple,
        reflection_chain: chain,
    })
}

/// Apply a chain of odd reflections starting from the distinguished Borel.
pub fn apply_reflection_chain(id: &AlgebraId, chain: &[Root]) -> Result<BorelChoice> {
    let mut borel = distinguished_borel(id)?;
    for alpha in chain {
        borel = odd_reflection(id, &borel, alpha)?;
    }
    Ok(borel)
}

/// Coefficients `(c_β, c_i)` with `z = c_β h_β + Σ_i c_i h_i` over the even
/// simple coroots of the distinguished Borel; `c_β ≠ 0` for β odd positive.
pub fn z_decomposition(id: &AlgebraId, beta: &Root) -> Result<(Q, Vec<Q>)> {
    let borel = distinguished_borel(id)?;
    if beta.parity != Parity::Odd || !is_positive(id, beta, &borel) {
        return Err(Error::Precondition(
            "z-decomposition requires a positive odd root".into(),
        ));
    }
    let even_simple: Vec<&Root> = borel
        .simple_roots
        .iter()
        .filter(|r| r.parity == Parity::Even)
        .collect();
    let mut columns: Vec<Vec<Q>> = vec![coroot_vector(id, beta)];
    for gamma in &even_simple {
        columns.push(coroot_vector(id, gamma));
    }
    let rows = id.coord_len();
    let a: Vec<Vec<Q>> = (0..rows)
        .map(|k| columns.iter().map(|col| col[k].clone()).collect())
        .collect();
    let target = z_vector(id);
    let sol = solve_dense(&a, &target)
        .ok_or_else(|| Error::Internal("z-decomposition solve failed".into()))?;
    // verify (free variables were zero-filled)
    for k in 0..rows {
        let lhs: Q = columns.iter().zip(&sol).map(|(c, s)| &c[k] * s).sum();
        if lhs != target[k] {
            return Err(Error::Internal("z-decomposition residual nonzero".into()));
        }
    }
    let c_beta = sol[0].clone();
    if c_beta.is_zero() {
        return Err(Error::Internal(
            "z-decomposition produced c_beta = 0".into(),
        ));
    }
    Ok((c_beta, sol[1..].to_vec()))
}

/// A weight: fundamental-weight coordinates on each simple ideal of `g₀′`
/// (concatenated in ideal order) plus the value on the central element `z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    #[serde(with = "crate::scalar::qjson_vec")]
    pub hprime: Vec<Q>,
    #[serde(with = "crate::scalar::qjson")]
    pub z: Q,
}

impl Weight {
    pub fn zero(id: &AlgebraId) -> Weight {
        Weight {
            hprime: vec![q_zero(); hprime_rank(id)],
            z: q_zero(),
        }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            hprime: self
                .hprime
                .iter()
                .zip(&other.hprime)
                .map(|(a, b)| a + b)
                .collect(),
            z: &self.z + &other.z,
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            hprime: self
                .hprime
                .iter()
                .zip(&other.hprime)
                .map(|(a, b)| a - b)
                .collect(),
            z: &self.z - &other.z,
        }
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight {
            hprime: self.hprime.iter().map(|a| a * c).collect(),
            z: &self.z * c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.hprime.iter().all(|c| c.is_zero()) && self.z.is_zero()
    }
}

/// One simple ideal of `g₀′` with the data needed for character work.
#[derive(Debug, Clone)]
pub struct SimpleIdeal {
    /// Simple roots of the ideal (from the distinguished Borel).
    pub simple_roots: Vec<Root>,
    /// Positive even roots lying in the ideal.
    pub positive_roots: Vec<Root>,
    /// Sign making the ambient form positive definite on the ideal.
    pub form_sign: i64,
}

/// Simple ideals of `g₀′`, in the fixed order used by `Weight::hprime`:
/// the ε-block `sl(m)` (when m ≥ 2) then the δ-block `sl(n)` for `sl(m|n)`;
/// the single `sp(2n)` for `osp(2|2n)`.
pub fn simple_ideals(id: &AlgebraId) -> Vec<SimpleIdeal> {
    let eps = id.eps_len();
    let borel = distinguished_borel(id).expect("validated id");
    let (even_pos, _) = positive_roots(id, &borel);
    let mut ideals = Vec::new();
    match id.family {
        Family::Sl => {
            if id.m >= 2 {
                ideals.push(SimpleIdeal {
                    simple_roots: (0..id.m - 1)
                        .map(|i| Root {
                            coords: two_coord(id, i, 1, i + 1, -1),
                            parity: Parity::Even,
                        })
                        .collect(),
                    positive_roots: even_pos
                        .iter()
                        .filter(|r| r.coords[..eps].iter().any(|&c| c != 0))
                        .cloned()
                        .collect(),
                    form_sign: 1,
                });
            }
            ideals.push(SimpleIdeal {
                simple_roots: (0..id.n - 1)
                    .map(|j| Root {
                        coords: two_coord(id, eps + j, 1, eps + j + 1, -1),
                        parity: Parity::Even,
                    })
                    .collect(),
                positive_roots: even_pos
                    .iter()
                    .filter(|r| r.coords[eps..].iter().any(|&c| c != 0))
                    .cloned()
                    .collect(),
                form_sign: -1,
            });
        }
        Family::Osp => {
            ideals.push(SimpleIdeal {
                simple_roots: distinguished_borel(id)
                    .expect("validated id")
                    .simple_roots
                    .into_iter()
                    .filter(|r| r.parity == Parity::Even)
                    .collect(),
                positive_roots: even_pos,
                form_sign: -1,
            });
        }
    }
    ideals
}

/// Total number of fundamental-weight coordinates across the simple ideals.
pub fn hprime_rank(id: &AlgebraId) -> usize {
    simple_ideals(id)
        .iter()
        .map(|ideal| ideal.simple_roots.len())
        .sum()
}

/// Even simple coroots across all ideals, in `hprime` coordinate order.
pub fn even_simple_coroots(id: &AlgebraId) -> Vec<Vec<Q>> {
    simple_ideals(id)
        .iter()
        .flat_map(|ideal| ideal.simple_roots.iter().map(|g| coroot_vector(id, g)))
        .collect()
}

/// Convert a functional given in ε/δ coordinates to a [`Weight`].
pub fn coords_to_weight(id: &AlgebraId, coords: &[Q]) -> Weight {
    let hprime = even_simple_coroots(id)
        .iter()
        .map(|h| coords.iter().zip(h).map(|(c, v)| c * v).sum())
        .collect();
    let z = coords
        .iter()
        .zip(z_vector(id))
        .map(|(c, v)| c * &v)
        .sum();
    Weight { hprime, z }
}

/// The weight of a root.
pub fn root_weight(id: &AlgebraId, root: &Root) -> Weight {
    let coords: Vec<Q> = root.coords.iter().map(|&c| q_int(c)).collect();
    coords_to_weight(id, &coords)
}

/// Roots grouped by weight, used to recognize Cartan weights exactly.
pub fn root_weight_table(id: &AlgebraId) -> BTreeMap<Weight, Vec<Root>> {
    let mut table: BTreeMap<Weight, Vec<Root>> = BTreeMap::new();
    for root in all_roots(id) {
        table.entry(root_weight(id, &root)).or_default().push(root);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_one;

    fn sl12() -> AlgebraId {
        AlgebraId::sl(1, 2).unwrap()
    }

    fn sl22() -> AlgebraId {
        AlgebraId::sl(2, 2).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(AlgebraId::sl(0, 2).is_err());
        assert!(AlgebraId::sl(2, 1).is_err());
        assert!(AlgebraId::sl(1, 1).is_err());
        assert!(AlgebraId::osp(1).is_err());
        assert!(AlgebraId::sl(2, 3).is_ok());
        assert!(AlgebraId::osp(2).is_ok());
    }

    #[test]
    fn root_counts() {
        for (id, odd) in [
            (sl12(), 4),
            (sl22(), 8),
            (AlgebraId::sl(1, 3).unwrap(), 6),
            (AlgebraId::osp(2).unwrap(), 8),
            (AlgebraId::osp(3).unwrap(), 12),
        ] {
            let roots = all_roots(&id);
            let odds = roots.iter().filter(|r| r.parity == Parity::Odd).count();
            let evens = roots.iter().filter(|r| r.parity == Parity::Even).count();
            assert_eq!(odds, odd, "odd count for {id:?}");
            assert_eq!(roots.len(), odds + evens);
            if id.family == Family::Osp {
                assert_eq!(evens, 2 * id.n * id.n);
            }
        }
    }

    #[test]
    fn distinguished_simple_roots() {
        // sl(1|2): Δ = {ε₁−δ₁ (odd), δ₁−δ₂ (even)}
        let b = distinguished_borel(&sl12()).unwrap();
        assert_eq!(b.simple_roots.len(), 2);
        assert_eq!(b.simple_roots[0].coords, vec![1, -1, 0]);
        assert_eq!(b.simple_roots[0].parity, Parity::Odd);
        assert_eq!(b.simple_roots[1].coords, vec![0, 1, -1]);
        assert_eq!(b.simple_roots[1].parity, Parity::Even);
        assert!(is_valid_simple_set(&sl12(), &b.simple_roots));

        // sl(2|2): 3 simple roots, exactly one odd
        let b = distinguished_borel(&sl22()).unwrap();
        assert_eq!(b.simple_roots.len(), 3);
        assert_eq!(
            b.simple_roots
                .iter()
                .filter(|r| r.parity == Parity::Odd)
                .count(),
            1
        );
        assert!(is_valid_simple_set(&sl22(), &b.simple_roots));

        // osp(2|4): Δ = {ε−δ₁ (odd), δ₁−δ₂ (even), 2δ₂ (even)}
        let id = AlgebraId::osp(2).unwrap();
        let b = distinguished_borel(&id).unwrap();
        assert_eq!(b.simple_roots.len(), 3);
        assert_eq!(b.simple_roots[0].coords, vec![1, -1, 0]);
        assert_eq!(b.simple_roots[0].parity, Parity::Odd);
        assert_eq!(b.simple_roots[1].coords, vec![0, 1, -1]);
        assert_eq!(b.simple_roots[2].coords, vec![0, 0, 2]);
        assert!(is_valid_simple_set(&id, &b.simple_roots));
    }

    #[test]
    fn pairing_examples() {
        let id = sl12();
        let alpha = Root::from_coords(&id, vec![1, -1, 0]).unwrap();
        let beta = Root::from_coords(&id, vec![0, 1, -1]).unwrap();
        // odd isotropic
        assert!(pairing(&id, &alpha, &alpha).unwrap().is_zero());
        // β = δ₁−δ₂ against α = ε₁−δ₁ is nonzero
        assert!(!pairing(&id, &beta, &alpha).unwrap().is_zero());
        // two orthogonal odd roots of sl(2|2)
        let id = sl22();
        let a = Root::from_coords(&id, vec![1, 0, -1, 0]).unwrap();
        let b = Root::from_coords(&id, vec![0, 1, 0, -1]).unwrap();
        assert!(pairing(&id, &a, &b).unwrap().is_zero());
        assert!(pairing(&id, &b, &a).unwrap().is_zero());
    }

    #[test]
    fn odd_reflection_cases() {
        let id = sl12();
        let borel = distinguished_borel(&id).unwrap();
        let alpha = borel.simple_roots[0].clone();
        let reflected = odd_reflection(&id, &borel, &alpha).unwrap();
        // r_α(α) = −α
        assert!(reflected.simple_roots.contains(&alpha.negate()));
        // β ↦ β + α = ε₁−δ₂
        let expected = Root::from_coords(&id, vec![1, 0, -1]).unwrap();
        assert!(reflected.simple_roots.contains(&expected));
        assert_eq!(reflected.reflection_chain, vec![alpha.clone()]);

        // reflecting again at −α returns the original set
        let back = odd_reflection(&id, &reflected, &alpha.negate()).unwrap();
        assert_eq!(back.simple_roots, borel.simple_roots);

        // sl(2|2): orthogonal β is unchanged
        let id = sl22();
        let borel = distinguished_borel(&id).unwrap();
        let alpha = borel.simple_roots[1].clone(); // ε₂−δ₁, odd
        assert_eq!(alpha.parity, Parity::Odd);
        let reflected = odd_reflection(&id, &borel, &alpha).unwrap();
        // the two neighbors both pair nontrivially; check the set is valid
        // and contains −α
        assert!(reflected.simple_roots.contains(&alpha.negate()));
        // a root orthogonal to alpha stays put under the case table
        let beta = Root::from_coords(&id, vec![1, 0, 0, -1]).unwrap();
        assert!(pairing(&id, &beta, &alpha).unwrap().is_zero());
    }

    #[test]
    fn reflection_preconditions() {
        let id = sl12();
        let borel = distinguished_borel(&id).unwrap();
        let beta = borel.simple_roots[1].clone(); // even
        assert!(odd_reflection(&id, &borel, &beta).is_err());
        let nonsimple = Root::from_coords(&id, vec![1, 0, -1]).unwrap();
        assert!(odd_reflection(&id, &borel, &nonsimple).is_err());
    }

    #[test]
    fn z_decomposition_examples() {
        let id = sl12();
        for coords in [vec![1, -1, 0], vec![1, 0, -1]] {
            let beta = Root::from_coords(&id, coords).unwrap();
            let (c_beta, _) = z_decomposition(&id, &beta).unwrap();
            assert!(!c_beta.is_zero());
        }
        // and for sl(2|2), where z is the identity matrix
        let id = sl22();
        let beta = Root::from_coords(&id, vec![1, 0, -1, 0]).unwrap();
        let (c_beta, _) = z_decomposition(&id, &beta).unwrap();
        assert!(!c_beta.is_zero());
        // osp: the ε-dual z decomposes with c_β = 1 against ε−δ₁
        let id = AlgebraId::osp(2).unwrap();
        let beta = Root::from_coords(&id, vec![1, -1, 0]).unwrap();
        let (c_beta, _) = z_decomposition(&id, &beta).unwrap();
        assert_eq!(c_beta, q_one());
    }

    #[test]
    fn odd_roots_take_value_one_on_z() {
        for id in [sl12(), AlgebraId::sl(1, 3).unwrap(), AlgebraId::osp(2).unwrap()] {
            let borel = distinguished_borel(&id).unwrap();
            let (_, odds) = positive_roots(&id, &borel);
            let z = z_vector(&id);
            for beta in odds {
                assert_eq!(eval_on_cartan(&beta.coords, &z), q_one());
            }
        }
        // sl(n|n): z is central in all of g, odd roots vanish on it
        let id = sl22();
        let borel = distinguished_borel(&id).unwrap();
        let (_, odds) = positive_roots(&id, &borel);
        let z = z_vector(&id);
        for beta in odds {
            assert!(eval_on_cartan(&beta.coords, &z).is_zero());
        }
    }

    #[test]
    fn weight_conversion() {
        let id = sl12();
        // hprime rank: only the sl(2) delta-ideal
        assert_eq!(hprime_rank(&id), 1);
        let alpha = Root::from_coords(&id, vec![1, -1, 0]).unwrap();
        let w = root_weight(&id, &alpha);
        assert_eq!(w.z, q_one());
        let id = sl22();
        assert_eq!(hprime_rank(&id), 2);
    }
}
