//! Exact computational algebra for finitely generated modules over `Z` and
//! `Z/n`: canonical submodule lattices, annihilators and colon ideals,
//! smallness and semiannihilator-smallness predicates, morphisms, and a
//! corpus-based statement verifier.
//!
//! The crate is `no_std` (with `alloc`); all arithmetic is exact `i128`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod hom;
pub mod matrix;
pub mod module;
pub mod oracle;
pub mod predicates;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
