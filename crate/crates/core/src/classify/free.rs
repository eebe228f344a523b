use crate::arrangement::{stabilizes, Arrangement};
use crate::monomial::{MonomialElement, Subgroup};

/// Membership in `F(de,e,r)`: `σ_w` has cycle type `[k]^{r/k}` with `k` odd
/// and every cycle product is trivial. The identity qualifies with `k = 1`.
pub fn in_f_deer(w: &MonomialElement) -> bool {
    let cycles = w.cycles();
    let k = cycles[0].len();
    k % 2 == 1
        && cycles.iter().all(|c| c.len() == k)
        && cycles.iter().all(|c| c.product_exponent == 0)
}

/// `G ∩ N_H = {1}` for every hyperplane `H`.
pub fn free_action_general(group: &Subgroup) -> bool {
    let arr = Arrangement::new(group.descriptor());
    group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .all(|g| arr.hyperplanes().iter().all(|&h| !stabilizes(g, h).expect("same descriptor")))
}

pub fn all_in_f_deer(group: &Subgroup) -> bool {
    group.elements().iter().all(in_f_deer)
}
