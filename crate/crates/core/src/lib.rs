//! Exact toolkit for deciding which elements and subgroups of the monomial
//! reflection groups `G(de,e,r)` admit finite-order liftings to the
//! quasi-abelianized braid group `B/[P,P]`.
//!
//! Roots of unity are carried as exponents of `ζ_de`, so every computation is
//! exact. The crate is organized bottom-up:
//!
//! * [`monomial`]: group elements, orders, cycle data, subgroup closure;
//! * [`arrangement`]: the reflection arrangement, the action on it,
//!   stabilizers and the scalar character on `H^⊥`;
//! * [`lifting`]: the structural lifting oracle and the combinatorial
//!   criterion for the infinite series;
//! * [`classify`]: Bieberbach and odd-order classifications, free actions,
//!   Frobenius and Cayley constructions;
//! * [`lattice`]: the permutation module `Z𝒜`, split extensions and the
//!   integer cocycle solver;
//! * [`suite`]: the end-to-end verification suite.

pub mod arrangement;
pub mod classify;
pub mod error;
pub mod intmat;
pub mod lattice;
pub mod lifting;
pub mod monomial;
pub mod suite;

pub use arrangement::{Arrangement, Hyperplane, ScalarRoot};
pub use error::{Error, Result};
pub use lifting::{LiftReport, Method, Witness};
pub use monomial::{CycleData, GroupDescriptor, MonomialElement, Subgroup};
