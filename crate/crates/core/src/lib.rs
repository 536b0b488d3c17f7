//! Exact equivariant invariants of finite p-group actions on flag complexes.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactlin`]: Smith normal form and chain-complex homology over `Z` and `F_p`.
//! * [`permgrp`]: finite permutation groups, subgroup lattices, normalizers, quotients.
//! * [`simp`]: simplicial and flag complexes, group actions, fixed subcomplexes.
//! * [`posets`]: subgroup posets, order complexes and their Euler characteristics.
//! * [`euler`]: equivariant Euler classes of `K ⋉ A_L` and the H1-acyclicity criterion.
//! * [`duality`]: Cohen–Macaulay checks, duality of right-angled Artin groups, doubling.
//! * [`jones`]: chain-level embedding of a Moore complex as a fixed set of a free extension.
//! * [`format`]: the JSON complex/group file formats and cycle-notation parser.

pub mod duality;
pub mod error;
pub mod euler;
pub mod exactlin;
pub mod format;
pub mod jones;
pub mod permgrp;
pub mod posets;
pub mod rational;
pub mod simp;

pub use error::{Error, Result};
pub use rational::Rational;
