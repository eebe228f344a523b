//! The permutation module `Z𝒜`, split extensions `Z𝒜 ⋊ G`, and the integer
//! solver showing `H¹(G, Z𝒜) = 0` constructively.

mod cocycle;
mod module;
mod semidirect;
mod vector;

pub use cocycle::{coboundary, is_cocycle, trivialize_cocycle, Cocycle, CocycleSolver};
pub use module::{fixed_lattice_rank, PermutationModule};
pub use semidirect::{conjugate_complement, SemidirectElement, Splitting};
pub use vector::{permute_vector, LatticeVector};
