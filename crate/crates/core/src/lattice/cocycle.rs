use crate::error::{Error, Result};
use crate::intmat::IntSolver;
use crate::monomial::{MonomialElement, Subgroup};

use super::{LatticeVector, PermutationModule};

/// A map `G → Z𝒜`, stored on every element of `G` in the subgroup's sorted
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    values: Vec<LatticeVector>,
}

impl Cocycle {
    pub fn from_values(values: Vec<LatticeVector>) -> Self {
        Cocycle { values }
    }

    pub fn zero(module: &PermutationModule) -> Self {
        Cocycle { values: vec![module.zero(); module.group().len()] }
    }

    pub fn values(&self) -> &[LatticeVector] {
        &self.values
    }

    pub fn value(&self, module: &PermutationModule, g: &MonomialElement) -> Option<&LatticeVector> {
        module.group().index_of(g).map(|k| &self.values[k])
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        Cocycle { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scaled(&self, k: i64) -> Cocycle {
        Cocycle { values: self.values.iter().map(|v| v.scaled(k)).collect() }
    }
}

impl PermutationModule {
    /// First pair `(g, h)` (as subgroup indices) breaking
    /// `c(gh) = c(g) + g·c(h)`, if any.
    pub fn cocycle_violation(&self, c: &Cocycle) -> Option<(usize, usize)> {
        let group = self.group();
        if c.values.len() != group.len() || c.values.iter().any(|v| v.len() != self.rank()) {
            return Some((0, 0));
        }
        for (gi, g) in group.elements().iter().enumerate() {
            for (hi, h) in group.elements().iter().enumerate() {
                let gh = group.index_of(&g.compose_unchecked(h)).expect("closed subgroup");
                let rhs = &c.values[gi] + &self.act_by_index(gi, &c.values[hi]);
                if c.values[gh] != rhs {
                    return Some((gi, hi));
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self, c: &Cocycle) -> bool {
        self.cocycle_violation(c).is_none()
    }

    /// `g ↦ x − g·x`.
    pub fn coboundary(&self, x: &LatticeVector) -> Cocycle {
        let values = (0..self.group().len()).map(|k| x - &self.act_by_index(k, x)).collect();
        Cocycle { values }
    }
}

pub fn is_cocycle(c: &Cocycle, group: &Subgroup) -> bool {
    PermutationModule::new(group).is_cocycle(c)
}

pub fn coboundary(x: &LatticeVector, group: &Subgroup) -> Cocycle {
    PermutationModule::new(group).coboundary(x)
}

/// Integer solver for `c(g) = x − g·x`, factored once per subgroup.
///
/// Only generator equations are stacked: for a cocycle, agreement with a
/// coboundary on generators propagates to the whole group. Every solution
/// is nevertheless checked on all of `G`.
#[derive(Clone, Debug)]
pub struct CocycleSolver {
    module: PermutationModule,
    generators: Vec<usize>,
    solver: IntSolver,
}

impl CocycleSolver {
    pub fn new(group: &Subgroup) -> Result<Self> {
        Self::for_module(PermutationModule::new(group))
    }

    pub fn for_module(module: PermutationModule) -> Result<Self> {
        let (generators, matrix) = module.generator_system();
        let solver = IntSolver::new(&matrix)?;
        Ok(CocycleSolver { module, generators, solver })
    }

    pub fn module(&self) -> &PermutationModule {
        &self.module
    }

    /// Returns `x` with `c = coboundary(x)`. A valid cocycle with no integral
    /// solution would contradict `H¹(G, Z𝒜) = 0` and is reported as
    /// [`Error::NoIntegralSolution`].
    pub fn trivialize(&self, c: &Cocycle) -> Result<LatticeVector> {
        if let Some((g, h)) = self.module.cocycle_violation(c) {
            let els = self.module.group().elements();
            return Err(Error::NotACocycle(format!(
                "identity fails at g = {}, h = {}",
                els.get(g).map_or("?".into(), |x| x.to_string()),
                els.get(h).map_or("?".into(), |x| x.to_string()),
            )));
        }
        let n = self.module.rank();
        let mut rhs = Vec::with_capacity(self.generators.len() * n);
        for &k in &self.generators {
            rhs.extend_from_slice(c.values[k].as_slice());
        }
        let x = LatticeVector::from_vec(self.solver.solve(&rhs)?);
        if self.module.coboundary(&x) != *c {
            return Err(Error::Invariant(
                "generator solution does not trivialize the cocycle on all of G".into(),
            ));
        }
        Ok(x)
    }
}

pub fn trivialize_cocycle(c: &Cocycle, group: &Subgroup) -> Result<LatticeVector> {
    CocycleSolver::new(group)?.trivialize(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::GroupDescriptor;

    fn three_cycle() -> Subgroup {
        let s3: GroupDescriptor = "S(3)".parse().unwrap();
        Subgroup::cyclic(&MonomialElement::parse(s3, "perm=[2,3,1];exp=[0,0,0]").unwrap())
    }

    #[test]
    fn zero_and_coboundaries_are_cocycles() {
        let g = three_cycle();
        let module = PermutationModule::new(&g);
        assert!(module.is_cocycle(&Cocycle::zero(&module)));
        let c = coboundary(&LatticeVector::basis(3, 0), &g);
        assert!(is_cocycle(&c, &g));
    }

    #[test]
    fn nonzero_at_identity_is_not_a_cocycle() {
        let g = three_cycle();
        let module = PermutationModule::new(&g);
        let mut values = Cocycle::zero(&module).values().to_vec();
        let id = g.index_of(&MonomialElement::identity(g.descriptor())).unwrap();
        values[id] = LatticeVector::basis(3, 1);
        let c = Cocycle::from_values(values);
        assert!(!module.is_cocycle(&c));
        assert!(matches!(trivialize_cocycle(&c, &g), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn zero_cocycle_trivializes_to_zero() {
        let g = three_cycle();
        let module = PermutationModule::new(&g);
        assert!(trivialize_cocycle(&Cocycle::zero(&module), &g).unwrap().is_zero());
    }

    #[test]
    fn coboundary_round_trip() {
        let g = three_cycle();
        let x = LatticeVector::basis(3, 0);
        let c = coboundary(&x, &g);
        let y = trivialize_cocycle(&c, &g).unwrap();
        assert_eq!(coboundary(&y, &g), c);
        // solutions differ by a fixed vector
        let diff = &y - &x;
        let module = PermutationModule::new(&g);
        for el in g.elements() {
            assert_eq!(module.act(el, &diff).unwrap(), diff);
        }
    }
}
