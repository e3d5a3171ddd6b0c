//! Exact root-system combinatorics for generalized flag varieties `G/P`.
//!
//! A flag variety is described by a (possibly reducible) Dynkin diagram with
//! some nodes crossed. From that description the library derives the
//! compact / noncompact root split, the canonical weight `omega` (the sum of
//! the noncompact positive roots), and the complete list of `P`-submodules of
//! the cotangent module, each classified as semicanonical, Frobenius, contact
//! or first order nondegenerate. All arithmetic is over the integers.
//!
//! Node numbering follows Bourbaki throughout:
//!
//! | type | diagram (node numbers) |
//! |------|------------------------|
//! | `A_n` | `1 - 2 - ... - n` |
//! | `B_n` | `1 - 2 - ... - (n-1) => n` (node `n` short) |
//! | `C_n` | `1 - 2 - ... - (n-1) <= n` (node `n` long) |
//! | `D_n` | `1 - ... - (n-2)`, with `n-1` and `n` both attached to `n-2` |
//! | `E_n` | `1 - 3 - 4 - 5 - ... - n`, with `2` attached to `4` |
//! | `F_4` | `1 - 2 => 3 - 4` (nodes 1, 2 long) |
//! | `G_2` | `1 <= 2` (node 1 short; highest root `3a1 + 2a2`) |
//!
//! With this numbering the `G_2` pictures drawn with simple roots `alpha`
//! (short) and `beta` (long) have `alpha = a1`, `beta = a2`.

pub mod catalog;
pub mod cli;
pub mod drops;
mod error;
pub mod parabolic;
pub mod rootsys;
pub mod submodule;

pub use error::{Error, Result};
pub use parabolic::{FlagSpec, ParabolicFlag, Weight};
pub use rootsys::{RootId, RootSystem, Series, SimpleType};
pub use submodule::{EnumerationGuard, RootSet, SemicanonicalRatio, Submodule};
