//! Block combinatorics of Ariki-Koike algebras `H_{n,r}(ell, s)` and the
//! index set and dimensions of the irreducible components of the
//! `Gamma_s`-fixed locus of Gieseker spaces.
//!
//! - [`lattice`]: affine type A root and weight lattices, reflections,
//!   dominance reduction and the block invariants `(alpha_d, k_d, Lambda^+_d)`.
//! - [`young`]: partitions, multipartitions, residues, hub, weight and the
//!   Weyl group action on charged multipartitions.
//! - [`abacus`]: `r`-abaci, elementary operations, charged cores, Uglov's map
//!   and `r`-cycles.
//! - [`blocks`]: block classification, component index sets and dimensions,
//!   core-block detection.
//! - [`verify`]: the property suites behind `akb verify`.
//! - [`cli`]: the `akb` command line.

pub mod abacus;
pub mod blocks;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
pub use lattice::{Context, Multicharge, ResidueConvention, RootVector, WeightVector};
pub use young::{ChargedMultipartition, Multipartition, Partition};
