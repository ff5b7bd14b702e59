//! Tiling iterated function systems.
//!
//! A TIFS is a graph-directed IFS of similitudes `f_e(x) = s^{a_e} O_e x + q_e`
//! whose ratios are integer powers of one base `s`. This crate builds the
//! symbolic tilings `Ω_k`, realizes canonical tilings `T_k` and blow-ups
//! `Π(θ)`, names tiles by relative and absolute addresses, and runs the
//! inflation/deflation dynamics on top of them.
//!
//! Edge convention: `f_e` maps `A^{head(e)}` into `A^{tail(e)}`. A forward word
//! `σ` is a path when `head(σ_i) = tail(σ_{i+1})`; a reversed word `θ` when
//! `tail(θ_i) = head(θ_{i+1})`.
//!
//! The crate is `no_std` with `alloc`; floating point goes through `libm`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod address;
pub mod affine;
pub mod dynamics;
pub mod error;
pub mod fixtures;
pub mod geometry;
mod math;
pub mod rng;
pub mod symbolic;
pub mod system;
pub mod tiling;
pub mod word;

pub use address::DottedAddress;
pub use affine::{AffineMap, IsometryRecord, Provenance};
pub use error::{Error, Result};
pub use math::Matrix;
pub use symbolic::SymbolicTiling;
pub use system::{Direction, RawMap, RawTifs, Tifs, Validation, ValidationError, Vertex, Violation};
pub use tiling::{Prototile, Tile, Tiling, TilingContext};
pub use word::{Orientation, Symbol, Word};
