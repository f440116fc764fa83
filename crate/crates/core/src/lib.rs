//! Formal knot complexes over `Λ = F₂[U, U⁻¹]` and their invariants.
//!
//! A [`FormalComplex`] is a finite filtered basis with Maslov gradings and
//! two filtration levels per generator, plus a GF(2) boundary matrix. From
//! it the crate computes ν⁺, `V_k`, τ, Υ, Υ², the genus, the region
//! invariants `G₀` and `G_n`, and the ν⁺-order between two complexes.
//!
//! ```
//! use formal_knot::{catalog, invariants};
//!
//! let t = catalog::trefoil();
//! assert_eq!(invariants::nu_plus(&t).unwrap(), 1);
//! assert_eq!(invariants::tau(&t).unwrap(), 1);
//! assert_eq!(invariants::upsilon(&t).unwrap().to_string(), "(0,0) (1,-1) (2,0)");
//! ```

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod invariants;
pub mod pl;
pub mod region;

pub use complex::{FormalComplex, Generator, LatticeElement, ValidationReport};
pub use error::{EnumerationLimit, Error, Result};
pub use pl::{PLFunction, Rational};
pub use region::{ClosedRegion, Point};
