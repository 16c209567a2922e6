//! Exact computation with automorphisms of free groups.
//!
//! The crate works entirely with freely reduced words over an
//! integer-indexed alphabet.  On top of that it builds Stallings
//! foldings for finitely generated subgroups, one-edge splittings
//! (HNN extensions, amalgams, and their free analogues), finite
//! windows of the dual tree, Dehn twist automorphisms, right-angled
//! Artin group normal forms, and a certification pipeline that decides
//! when large powers of a collection of twists generate a right-angled
//! Artin subgroup of the outer automorphism group.
//!
//! Everything is allocation-only: the crate is `no_std` and usable
//! from embedded or wasm hosts.  IO, fixture files, and the command
//! line surface live in the companion `outf-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod basstree;
pub mod certify;
pub mod curvespace;
pub mod fixtures;
pub mod raag;
pub mod splitting;
pub mod subgroup;
pub mod twist;
pub mod word;




pub use word::{Alphabet, ConjClass, Letter, Word};
