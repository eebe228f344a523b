//! The split extension `Z𝒜 ⋊ G` modelling `p⁻¹(G)` once `G` lifts.

use crate::error::{Error, Result};
use crate::monomial::MonomialElement;

use super::{Cocycle, CocycleSolver, LatticeVector, PermutationModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectElement {
    pub v: LatticeVector,
    pub g: MonomialElement,
}

impl SemidirectElement {
    pub fn new(v: LatticeVector, g: MonomialElement) -> Self {
        SemidirectElement { v, g }
    }
}

impl PermutationModule {
    /// `(v, g)·(w, h) = (v + g·w, g∘h)`.
    pub fn semidirect_compose(
        &self,
        a: &SemidirectElement,
        b: &SemidirectElement,
    ) -> Result<SemidirectElement> {
        let moved = self.act(&a.g, &b.v)?;
        Ok(SemidirectElement { v: &a.v + &moved, g: a.g.compose(&b.g)? })
    }

    /// `(v, g)⁻¹ = (−g⁻¹·v, g⁻¹)`.
    pub fn semidirect_inverse(&self, a: &SemidirectElement) -> Result<SemidirectElement> {
        let inv = a.g.inverse();
        let v = -&self.act(&inv, &a.v)?;
        Ok(SemidirectElement { v, g: inv })
    }

    pub fn semidirect_identity(&self) -> SemidirectElement {
        SemidirectElement {
            v: self.zero(),
            g: MonomialElement::identity(self.group().descriptor()),
        }
    }

    /// `v + g·v + … + g^{n−1}·v` for `n = order(g)`.
    pub fn orbit_sum(&self, a: &SemidirectElement) -> Result<LatticeVector> {
        let mut total = self.zero();
        let mut term = a.v.clone();
        for _ in 0..a.g.order() {
            total = &total + &term;
            term = self.act(&a.g, &term)?;
        }
        Ok(total)
    }

    /// `Some(order(g))` when the orbit sum of `v` vanishes, `None` (infinite
    /// order) otherwise: `(v, g)^n = (orbit sum, id)`.
    pub fn semidirect_order(&self, a: &SemidirectElement) -> Result<Option<u64>> {
        Ok(self.orbit_sum(a)?.is_zero().then(|| a.g.order()))
    }

    /// Section `g ↦ (0, g)`.
    pub fn canonical_splitting(&self) -> Splitting {
        Splitting {
            values: self
                .group()
                .elements()
                .iter()
                .map(|g| SemidirectElement { v: self.zero(), g: g.clone() })
                .collect(),
        }
    }

    /// `g ↦ (x,1)·s(g)·(x,1)⁻¹ = (x + s(g).v − g·x, g)`.
    pub fn conjugate_splitting(&self, s: &Splitting, x: &LatticeVector) -> Result<Splitting> {
        let values = s
            .values
            .iter()
            .map(|a| {
                let v = &(x + &a.v) - &self.act(&a.g, x)?;
                Ok(SemidirectElement { v, g: a.g.clone() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Splitting { values })
    }

    /// Checks that `s` is a homomorphism `G → Z𝒜 ⋊ G` sectioning the
    /// projection.
    pub fn check_splitting(&self, s: &Splitting) -> Result<()> {
        let els = self.group().elements();
        if s.values.len() != els.len() {
            return Err(Error::NotAHomomorphism("not defined on every element".into()));
        }
        for (a, g) in s.values.iter().zip(els) {
            if &a.g != g || a.v.len() != self.rank() {
                return Err(Error::NotAHomomorphism(format!("does not lie over {g}")));
            }
        }
        let group = self.group();
        for (i, g) in els.iter().enumerate() {
            for (j, h) in els.iter().enumerate() {
                let k = group.index_of(&g.compose_unchecked(h)).expect("closed subgroup");
                if self.semidirect_compose(&s.values[i], &s.values[j])? != s.values[k] {
                    return Err(Error::NotAHomomorphism(format!(
                        "s({g})·s({h}) differs from s({g}∘{h})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A section of `Z𝒜 ⋊ G → G`, one value per element of `G` in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    values: Vec<SemidirectElement>,
}

impl Splitting {
    pub fn from_values(values: Vec<SemidirectElement>) -> Self {
        Splitting { values }
    }

    pub fn values(&self) -> &[SemidirectElement] {
        &self.values
    }
}

/// Finds `x` with `(x,1)·s1(g)·(x,1)⁻¹ = s2(g)` for all `g`, by trivializing
/// the difference cocycle `g ↦ s2(g).v − s1(g).v`. The conjugation is
/// re-checked before returning.
pub fn conjugate_complement(
    solver: &CocycleSolver,
    s1: &Splitting,
    s2: &Splitting,
) -> Result<LatticeVector> {
    let module = solver.module();
    module.check_splitting(s1)?;
    module.check_splitting(s2)?;
    let diff =
        Cocycle::from_values(s1.values.iter().zip(&s2.values).map(|(a, b)| &b.v - &a.v).collect());
    let x = solver.trivialize(&diff)?;
    if module.conjugate_splitting(s1, &x)? != *s2 {
        return Err(Error::Invariant("conjugator does not conjugate the splittings".into()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::monomial::Subgroup;

    fn s3_three_cycle() -> (MonomialElement, PermutationModule) {
        let s3 = "S(3)".parse().unwrap();
        let c = MonomialElement::parse(s3, "perm=[2,3,1];exp=[0,0,0]").unwrap();
        let module = PermutationModule::new(&Subgroup::cyclic(&c));
        (c, module)
    }

    #[test]
    fn pure_translation_has_infinite_order() {
        let (_, module) = s3_three_cycle();
        let a = SemidirectElement::new(LatticeVector::basis(3, 0), module.semidirect_identity().g);
        assert_eq!(module.semidirect_order(&a).unwrap(), None);
    }

    #[test]
    fn canonical_lift_has_group_order() {
        let (c, module) = s3_three_cycle();
        let a = SemidirectElement::new(module.zero(), c);
        assert_eq!(module.semidirect_order(&a).unwrap(), Some(3));
    }

    #[test]
    fn vanishing_orbit_sum_gives_torsion() {
        let (c, module) = s3_three_cycle();
        let arr = Arrangement::new(c.descriptor());
        let h12 = arr.index_of("H[1,2;0]".parse().unwrap()).unwrap();
        let h23 = arr.index_of("H[2,3;0]".parse().unwrap()).unwrap();
        let v = &LatticeVector::basis(3, h12) - &LatticeVector::basis(3, h23);
        let a = SemidirectElement::new(v, c);
        assert!(module.orbit_sum(&a).unwrap().is_zero());
        assert_eq!(module.semidirect_order(&a).unwrap(), Some(3));
    }

    #[test]
    fn inverse_law() {
        let (c, module) = s3_three_cycle();
        let a = SemidirectElement::new(LatticeVector::from_vec(vec![2, -1, 5]), c);
        let inv = module.semidirect_inverse(&a).unwrap();
        assert_eq!(module.semidirect_compose(&a, &inv).unwrap(), module.semidirect_identity());
        assert_eq!(module.semidirect_compose(&inv, &a).unwrap(), module.semidirect_identity());
    }

    #[test]
    fn canonical_splittings_are_conjugate_by_zero() {
        let (c, _) = s3_three_cycle();
        let solver = CocycleSolver::new(&Subgroup::cyclic(&c)).unwrap();
        let s = solver.module().canonical_splitting();
        assert!(conjugate_complement(&solver, &s, &s).unwrap().is_zero());
    }

    #[test]
    fn recovers_conjugator() {
        let (c, _) = s3_three_cycle();
        let solver = CocycleSolver::new(&Subgroup::cyclic(&c)).unwrap();
        let module = solver.module();
        let s1 = module.canonical_splitting();
        let s2 = module.conjugate_splitting(&s1, &LatticeVector::basis(3, 1)).unwrap();
        module.check_splitting(&s2).unwrap();
        let x = conjugate_complement(&solver, &s1, &s2).unwrap();
        assert_eq!(module.conjugate_splitting(&s1, &x).unwrap(), s2);
    }

    #[test]
    fn rejects_non_homomorphism() {
        let (c, _) = s3_three_cycle();
        let solver = CocycleSolver::new(&Subgroup::cyclic(&c)).unwrap();
        let module = solver.module();
        let s1 = module.canonical_splitting();
        let mut values = s1.values().to_vec();
        let k = values.iter().position(|a| a.g == c).unwrap();
        values[k].v = LatticeVector::basis(3, 0);
        let bad = Splitting::from_values(values);
        assert!(matches!(
            conjugate_complement(&solver, &s1, &bad),
            Err(Error::NotAHomomorphism(_))
        ));
    }
}
