use std::collections::BTreeMap;

use super::perm::{perm_compose, Perm, PermutationGroup};
use crate::error::{Error, Result};
use crate::monomial::{MonomialElement, Subgroup};

/// A finite group given by its element list and multiplication.
pub trait FiniteGroup {
    type Element: Clone + Ord;

    fn element_list(&self) -> Vec<Self::Element>;

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
}

impl FiniteGroup for PermutationGroup {
    type Element = Perm;

    fn element_list(&self) -> Vec<Perm> {
        self.elements().to_vec()
    }

    fn multiply(&self, a: &Perm, b: &Perm) -> Perm {
        perm_compose(a, b)
    }
}

impl FiniteGroup for Subgroup {
    type Element = MonomialElement;

    fn element_list(&self) -> Vec<MonomialElement> {
        self.elements().to_vec()
    }

    fn multiply(&self, a: &MonomialElement, b: &MonomialElement) -> MonomialElement {
        a.compose(b).expect("elements of one subgroup")
    }
}

/// Left-translation action of `G` on its sorted element list, as a
/// permutation group of degree `|G|`.
pub fn cayley_embedding<G: FiniteGroup>(group: &G, guard: usize) -> Result<PermutationGroup> {
    let mut elements = group.element_list();
    if elements.len() > guard {
        return Err(Error::SizeLimit { limit: guard });
    }
    elements.sort();
    let position: BTreeMap<&G::Element, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let images = elements
        .iter()
        .map(|g| {
            elements
                .iter()
                .map(|x| position.get(&group.multiply(g, x)).copied())
                .collect::<Option<Perm>>()
                .ok_or_else(|| Error::NotASubgroup("product left the element list".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::from_elements(elements.len(), images)
}
