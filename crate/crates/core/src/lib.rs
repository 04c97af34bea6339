//! Exact intersection homology of stratified simplicial pseudomanifolds.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is a pure function over
//! immutable values:
//!
//! * [`simplicial`]: finite abstract simplicial complexes and their constructors.
//! * [`linalg`]: exact ranks of sparse integer and rational matrices.
//! * [`stratified`]: stratum-labelled complexes, links and compactly supported
//!   Euler characteristics of strata.
//! * [`perversity`]: Goresky–MacPherson perversities.
//! * [`intersection`]: allowable chains, intersection homology and closed-form
//!   oracles (stalks, cones, suspensions, products with manifolds).
//! * [`euler`]: intersection Euler characteristics, computed directly and
//!   stratum by stratum.
//! * [`hopf`]: multiplicities, singular indices and the Poincaré–Hopf check.
//! * [`gallery`]: the curated spaces with their expected values.
#![no_std]

extern crate alloc;

pub mod error;
pub mod euler;
pub mod gallery;
pub mod hopf;
pub mod intersection;
pub mod linalg;
pub mod perversity;
pub mod simplicial;
pub mod stratified;

pub use error::{Error, Result};
pub use perversity::{Perversity, StandardPerversity};
pub use simplicial::{Simplex, SimplicialComplex};
pub use stratified::{ComponentId, StratifiedSpace, Stratum};
