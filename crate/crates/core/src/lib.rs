//! Minimal monomial solutions of `M_n(k,…,k) = ±Id` over ℤ/Nℤ.
//!
//! `M_n(a₁,…,aₙ)` is the product `M(aₙ)···M(a₁)` of the matrices
//! `M(a) = [[a, −1], [1, 0]]`. For every residue `k` some power of `M(k)` is
//! `±Id`; the smallest such length is the size of the k-monomial minimal
//! solution. This crate computes those sizes, decides whether each solution
//! splits as a ⊕-sum of two shorter pieces, classifies moduli by that
//! behaviour, and scans integer ranges with checkpointing.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod construct;
pub mod error;
pub mod modring;
pub mod monomial;
pub mod prime_order;
pub mod scan;
pub mod solutions;

pub use error::{Error, Result};
pub use modring::{Mat2, ResidueRing, Sign};
pub use monomial::{MinimalSize, MonomialReport, ReductionWitness};
pub use solutions::ModTuple;
