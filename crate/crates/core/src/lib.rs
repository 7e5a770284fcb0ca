//! Exact cohomological arithmetic on reflexive K3 surfaces.
//!
//! * [`lattice`]: Picard lattices, divisor classes, Mukai vectors and the Mukai pairing.
//! * [`reflexive`]: reflexive surfaces, the A1/A2 assumptions, nodal classes,
//!   the non-effectivity certificate for `ℓ + 2H` and moduli dimensions.
//! * [`transform`]: the closed-form Fourier–Mukai transform and its inverse.
//! * [`kunneth`]: Künneth classes on `X × X̂`, `ch(Q)` and an independent
//!   Grothendieck–Riemann–Roch recomputation of the transform.
//! * [`cli`]: the `k3fm` command-line front end.

#![allow(clippy::needless_range_loop)] // dense matrix code reads best with indices

pub mod cli;
pub mod error;
pub mod exact;
pub mod kunneth;
pub mod lattice;
pub mod reflexive;
pub mod transform;

pub use error::{Error, Result};
pub use kunneth::{ch_kernel_q, grr_transform, GrrOracle, KernelReport, ProductClass, SurfaceClass};
pub use lattice::{DivisorClass, MukaiVector, PicardLattice, WitIndex};
pub use reflexive::{NodalReport, ReflexiveSurface};
pub use transform::{fm_vector, inverse_fm_vector, Direction, FmContext};
