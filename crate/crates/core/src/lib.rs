//! Finite Coxeter groups with exact arithmetic.
//!
//! The crate recognizes finite Coxeter graphs (the Dynkin⁺ catalog
//! `A_n, B_n, D_n, E_6..E_8, F_4, H_3, H_4, I_2(m)`), realizes the infinite
//! families as concrete permutation, signed-permutation and dihedral groups,
//! and builds their complete sets of irreducible characters over cyclotomic
//! fields:
//!
//! * `S_n` through Young symmetrizers and the left ideals they generate,
//! * `B_n` by inducing from stabilizers of sign characters,
//! * `D_n` by restricting `B_n` characters and splitting the self-conjugate ones,
//! * `I_2(m)` by inducing from the rotation subgroup.
//!
//! Everything is exact; floats are only used to read off the sign of a real
//! cyclotomic number once it is known to be nonzero.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod coxeter;
mod error;
pub mod family;
pub mod group;
pub mod rep;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
