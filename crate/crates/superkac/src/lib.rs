//! Finite-dimensional modules over map superalgebras, in exact arithmetic.
//!
//! For a basic classical Lie superalgebra `g` of type I — here `sl(m|n)`
//! (1 ≤ m ≤ n, n > 1) or `osp(2|2n)` (n > 1) — and a finitely generated
//! commutative algebra `A`, the map superalgebra `g[A] = g ⊗ A` carries the
//! bracket `[x⊗a, y⊗b] = [x,y]⊗ab`.  This crate constructs and classifies
//! its finite-dimensional irreducible modules and cross-verifies every
//! formula with a brute-force matrix oracle:
//!
//! * [`rootdata`] — root systems, parities, Borel subalgebras and odd
//!   reflections;
//! * [`coeffalg`] — truncated local coefficient algebras `A/mⁿ`, central
//!   functionals `Θ`, their annihilator ideals `k_Θ`, and the ⋆-pairing;
//! * [`charring`] — formal characters and supercharacters, Weyl characters
//!   via Freudenthal recursion, Grassmann characters, and the Kac-like
//!   dimension/character formulas;
//! * [`classify`] — symbolic descriptors of irreducible `g[A]`-modules as
//!   tensor products of evaluation and Kac-like factors, the irreducibility
//!   criterion `I = k_Θ`, and change-of-Borel weight transforms;
//! * [`realize`] — the matrix oracle: explicit supermatrix realization of
//!   `sl(m|n)`, explicit Kac-like and evaluation modules, submodule search,
//!   duals, highest-weight vectors, Hom spaces, and degree-1 Koszul
//!   cohomology;
//! * [`extblocks`] — symbolic Ext¹ dispatch, spectral characters, and block
//!   decisions.
//!
//! All scalars are exact rationals.  Central functionals `Θ` take rational
//! values here; over ℂ the `z`-coordinate of a weight could be any complex
//! number, and restricting to ℚ keeps every integrality and equality test
//! exactly decidable without losing any of the structure being verified.
//!
//! Size caps keep oracle runs bounded; see [`caps`].  The CLI binary
//! `superkac` exposes each operation, and `examples/` contains one runnable
//! walk-through per capability.

pub mod caps;
pub mod charring;
pub mod classify;
pub mod coeffalg;
pub mod error;
pub mod extblocks;
pub mod linalg;
pub mod realize;
pub mod rootdata;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Q;
