use crate::arrangement::{orbits, Arrangement};
use crate::error::{Error, Result};
use crate::intmat::{IntMatrix, IntSolver};
use crate::monomial::{MonomialElement, Subgroup};

use super::LatticeVector;

/// `Z𝒜` as a module over a finite subgroup `G`, with the hyperplane
/// permutation of every element of `G` precomputed.
#[derive(Clone, Debug)]
pub struct PermutationModule {
    group: Subgroup,
    arrangement: Arrangement,
    perms: Vec<Vec<usize>>,
}

impl PermutationModule {
    pub fn new(group: &Subgroup) -> Self {
        let arrangement = Arrangement::new(group.descriptor());
        let perms = group
            .elements()
            .iter()
            .map(|g| arrangement.permutation_of(g).expect("element of the group"))
            .collect();
        PermutationModule { group: group.clone(), arrangement, perms }
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn rank(&self) -> usize {
        self.arrangement.len()
    }

    pub fn zero(&self) -> LatticeVector {
        LatticeVector::zero(self.rank())
    }

    fn index(&self, g: &MonomialElement) -> Result<usize> {
        self.group
            .index_of(g)
            .ok_or_else(|| Error::InvalidElement(format!("{g} is not in the subgroup")))
    }

    /// Permutation of hyperplane indices induced by `g ∈ G`.
    pub fn perm(&self, g: &MonomialElement) -> Result<&[usize]> {
        Ok(&self.perms[self.index(g)?])
    }

    pub fn act(&self, g: &MonomialElement, v: &LatticeVector) -> Result<LatticeVector> {
        Ok(v.permuted(self.perm(g)?))
    }

    pub(crate) fn act_by_index(&self, k: usize, v: &LatticeVector) -> LatticeVector {
        v.permuted(&self.perms[k])
    }

    /// `(g·x − x)` rows stacked over a generating set; its kernel is the
    /// fixed lattice and `x − g·x = c(g)` is solved against it.
    pub(crate) fn generator_system(&self) -> (Vec<usize>, IntMatrix) {
        let gens: Vec<usize> = self
            .group
            .generators()
            .iter()
            .map(|g| self.group.index_of(g).expect("generator lies in the group"))
            .collect();
        let n = self.rank();
        let mut m = IntMatrix::zeros(gens.len() * n, n);
        for (block, &k) in gens.iter().enumerate() {
            let perm = &self.perms[k];
            // (x − g·x)[perm[h]] = x[perm[h]] − x[h]
            for h in 0..n {
                let row = block * n + perm[h];
                m[(row, perm[h])] += 1;
                m[(row, h)] -= 1;
            }
        }
        (gens, m)
    }

    /// Rank of `{x : g·x = x ∀ g}`, computed both as `|𝒜| − rank(stack of
    /// g − 1)` and as the number of orbits. Disagreement is an error.
    pub fn fixed_lattice_rank(&self) -> Result<usize> {
        let (_, m) = self.generator_system();
        let by_linear_algebra = self.rank() - IntSolver::new(&m)?.rank();
        let by_orbits = orbits(&self.group).len();
        if by_linear_algebra != by_orbits {
            return Err(Error::Invariant(format!(
                "fixed lattice rank {by_linear_algebra} but {by_orbits} orbits"
            )));
        }
        Ok(by_orbits)
    }

    /// Orbit-sum vectors `Σ_{H ∈ 𝒞} e_H`, one per orbit: a basis of the
    /// fixed lattice.
    pub fn orbit_sums(&self) -> Vec<LatticeVector> {
        orbits(&self.group)
            .into_iter()
            .map(|orbit| {
                let mut v = self.zero();
                for k in orbit {
                    v = &v + &LatticeVector::basis(self.rank(), k);
                }
                v
            })
            .collect()
    }
}

/// Number of `G`-orbits on `𝒜`, checked against the rank of the fixed
/// lattice.
pub fn fixed_lattice_rank(group: &Subgroup) -> Result<usize> {
    PermutationModule::new(group).fixed_lattice_rank()
}
