use std::collections::{HashMap, HashSet, VecDeque};

use super::{GroupDescriptor, MonomialElement};
use crate::error::{Error, Result};

/// Default cap on closures and enumerations.
pub const DEFAULT_GUARD: usize = 1_000_000;

/// A finite subgroup of `G(de,e,r)`, stored with its full element list in
/// sorted order.
#[derive(Clone, Debug)]
pub struct Subgroup {
    desc: GroupDescriptor,
    elements: Vec<MonomialElement>,
    index: HashMap<MonomialElement, usize>,
    generators: Vec<MonomialElement>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.desc == other.desc && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_sorted(
        desc: GroupDescriptor,
        mut elements: Vec<MonomialElement>,
        generators: Vec<MonomialElement>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Subgroup { desc, elements, index, generators }
    }

    pub fn trivial(desc: GroupDescriptor) -> Self {
        Self::from_sorted(desc, vec![MonomialElement::identity(desc)], Vec::new())
    }

    /// Builds a subgroup from an explicit element list, verifying identity,
    /// inverses and closure under composition.
    pub fn from_elements(desc: GroupDescriptor, elements: Vec<MonomialElement>) -> Result<Self> {
        if let Some(g) = elements.iter().find(|g| g.descriptor() != desc) {
            return Err(Error::DescriptorMismatch(desc.to_string(), g.descriptor().to_string()));
        }
        let sub = Self::from_sorted(desc, elements, Vec::new());
        if !sub.contains(&MonomialElement::identity(desc)) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for g in &sub.elements {
            if !sub.contains(&g.inverse()) {
                return Err(Error::NotASubgroup(format!("inverse of {g} missing")));
            }
            for h in &sub.elements {
                let gh = g.compose_unchecked(h);
                if !sub.contains(&gh) {
                    return Err(Error::NotASubgroup(format!("product {gh} missing")));
                }
            }
        }
        Ok(sub)
    }

    /// Smallest subgroup containing `gens`, by breadth-first products.
    pub fn closure(
        desc: GroupDescriptor,
        gens: &[MonomialElement],
        max_size: usize,
    ) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.descriptor() != desc) {
            return Err(Error::DescriptorMismatch(desc.to_string(), g.descriptor().to_string()));
        }
        let id = MonomialElement::identity(desc);
        let mut seen: HashSet<MonomialElement> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if seen.len() >= max_size {
                        return Err(Error::SizeLimit { limit: max_size });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let generators = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(Self::from_sorted(desc, seen.into_iter().collect(), generators))
    }

    pub fn cyclic(w: &MonomialElement) -> Self {
        let desc = w.descriptor();
        let mut elements = vec![MonomialElement::identity(desc)];
        let mut acc = w.clone();
        while !acc.is_identity() {
            elements.push(acc.clone());
            acc = acc.compose_unchecked(w);
        }
        let generators = if w.is_identity() { Vec::new() } else { vec![w.clone()] };
        Self::from_sorted(desc, elements, generators)
    }

    /// The whole group, by closure of the standard generators.
    pub fn full(desc: GroupDescriptor, max_size: usize) -> Result<Self> {
        Self::closure(desc, &MonomialElement::standard_generators(desc), max_size)
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.desc
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[MonomialElement] {
        &self.elements
    }

    pub fn contains(&self, g: &MonomialElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &MonomialElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// A generating set: the one the subgroup was built from, or a greedy
    /// one picked from the sorted element list.
    pub fn generators(&self) -> Vec<MonomialElement> {
        if !self.generators.is_empty() || self.is_trivial() {
            return self.generators.clone();
        }
        let mut gens: Vec<MonomialElement> = Vec::new();
        let mut span: HashSet<MonomialElement> =
            HashSet::from([MonomialElement::identity(self.desc)]);
        for g in &self.elements {
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            // the span stays inside this finite subgroup
            span = Self::closure(self.desc, &gens, self.len())
                .expect("closure of subgroup elements stays inside the subgroup")
                .elements
                .into_iter()
                .collect();
            if span.len() == self.len() {
                break;
            }
        }
        gens
    }

    /// Intersection with another subgroup of the same group.
    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.desc != other.desc {
            return Err(Error::DescriptorMismatch(self.desc.to_string(), other.desc.to_string()));
        }
        let common = self.elements.iter().filter(|g| other.contains(g)).cloned().collect();
        Ok(Self::from_sorted(self.desc, common, Vec::new()))
    }
}

/// Every element of `G(de,e,r)` exactly once: permutations in lexicographic
/// (Lehmer) order, each with all admissible exponent vectors.
pub struct Enumeration {
    desc: GroupDescriptor,
    next: u64,
    total: u64,
    per_perm: u64,
}

pub fn enumerate(desc: GroupDescriptor) -> Result<Enumeration> {
    enumerate_with_guard(desc, DEFAULT_GUARD)
}

pub fn enumerate_with_guard(desc: GroupDescriptor, guard: usize) -> Result<Enumeration> {
    let total =
        desc.order().filter(|&n| n <= guard as u128).ok_or(Error::SizeLimit { limit: guard })?
            as u64;
    let r = desc.rank() as u32;
    let per_perm = u64::from(desc.de()).pow(r - 1) * u64::from(desc.d());
    Ok(Enumeration { desc, next: 0, total, per_perm })
}

fn nth_permutation(r: usize, mut k: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..r).collect();
    let mut fact: u64 = (1..r as u64).product();
    let mut perm = Vec::with_capacity(r);
    for i in (0..r).rev() {
        let idx = (k / fact) as usize;
        k %= fact;
        perm.push(pool.remove(idx));
        if i > 0 {
            fact /= i as u64;
        }
    }
    perm
}

impl Iterator for Enumeration {
    type Item = MonomialElement;

    fn next(&mut self) -> Option<MonomialElement> {
        if self.next >= self.total {
            return None;
        }
        let k = self.next;
        self.next += 1;
        let r = self.desc.rank();
        let de = u64::from(self.desc.de());
        let e = u64::from(self.desc.e());
        let perm = nth_permutation(r, k / self.per_perm);
        let mut rest = k % self.per_perm;
        let mut exps = Vec::with_capacity(r);
        for _ in 0..r - 1 {
            exps.push(rest % de);
            rest /= de;
        }
        let sum: u64 = exps.iter().sum();
        // last exponent: (-sum mod e) plus a multiple of e
        exps.push((e - sum % e) % e + rest * e);
        Some(MonomialElement::new(self.desc, perm, exps).expect("enumerated element is valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Enumeration {}

/// The centre: elements commuting with every standard generator.
pub fn center(desc: GroupDescriptor) -> Result<Subgroup> {
    let gens = MonomialElement::standard_generators(desc);
    let elements = enumerate(desc)?.filter(|w| gens.iter().all(|g| w.commutes_with(g))).collect();
    Ok(Subgroup::from_sorted(desc, elements, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(desc("S(3)")).unwrap().count(), 6);
        assert_eq!(enumerate(desc("G(2,1,2)")).unwrap().count(), 8);
        assert_eq!(enumerate(desc("G(4,4,2)")).unwrap().count(), 8);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all: HashSet<_> = enumerate(desc("G(6,3,3)")).unwrap().collect();
        assert_eq!(all.len() as u128, desc("G(6,3,3)").order().unwrap());
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_with_guard(desc("S(6)"), 100),
            Err(Error::SizeLimit { limit: 100 })
        ));
    }

    #[test]
    fn closure_of_standard_generators() {
        assert_eq!(Subgroup::full(desc("G(3,3,2)"), DEFAULT_GUARD).unwrap().len(), 6);
        assert_eq!(Subgroup::full(desc("G(1,1,1)"), DEFAULT_GUARD).unwrap().len(), 1);
    }

    #[test]
    fn closure_examples() {
        let g = desc("S(3)");
        let triv = Subgroup::closure(g, &[MonomialElement::identity(g)], 10).unwrap();
        assert!(triv.is_trivial());
        let c = MonomialElement::parse(g, "perm=[2,3,1];exp=[0,0,0]").unwrap();
        let sub = Subgroup::closure(g, std::slice::from_ref(&c), 10).unwrap();
        assert_eq!(sub.len(), 3);
        assert_eq!(sub, Subgroup::cyclic(&c));
        assert!(matches!(Subgroup::full(desc("S(4)"), 10), Err(Error::SizeLimit { limit: 10 })));
    }

    #[test]
    fn closure_rejects_foreign_generators() {
        let w = MonomialElement::identity(desc("S(3)"));
        assert!(matches!(
            Subgroup::closure(desc("S(4)"), &[w], 10),
            Err(Error::DescriptorMismatch(..))
        ));
    }

    #[test]
    fn from_elements_checks_closure() {
        let g = desc("S(3)");
        let t = MonomialElement::parse(g, "perm=[2,3,1];exp=[0,0,0]").unwrap();
        let bad = vec![MonomialElement::identity(g), t];
        assert!(matches!(Subgroup::from_elements(g, bad), Err(Error::NotASubgroup(_))));
        let full: Vec<_> = enumerate(g).unwrap().collect();
        assert_eq!(Subgroup::from_elements(g, full).unwrap().len(), 6);
    }

    #[test]
    fn greedy_generators_generate() {
        let g = desc("G(4,2,2)");
        let full = Subgroup::from_elements(g, enumerate(g).unwrap().collect()).unwrap();
        let gens = full.generators();
        assert_eq!(Subgroup::closure(g, &gens, 1000).unwrap(), full);
    }

    #[test]
    fn centers() {
        assert!(center(desc("S(3)")).unwrap().is_trivial());
        let z = center(desc("G(2,1,2)")).unwrap();
        let minus_id = MonomialElement::diagonal(desc("G(2,1,2)"), vec![1, 1]).unwrap();
        assert!(z.contains(&minus_id));
        assert_eq!(center(desc("G(3,3,3)")).unwrap().len(), 3);
    }
}
