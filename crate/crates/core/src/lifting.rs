//! Lifting criteria.
//!
//! A subgroup `G` of `W = G(de,e,r)` lifts to a finite subgroup of `B/[P,P]`
//! exactly when `N_H ∩ G ⊂ C_H` for every hyperplane `H`. The oracle scans
//! that condition directly; [`element_lifts_fast`] is the closed-form cycle
//! criterion for the infinite series.

use std::fmt;

use serde::Serialize;

use crate::arrangement::{in_parabolic, stabilizes, Arrangement, Hyperplane};
use crate::monomial::{root_order, MonomialElement, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Fast,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Fast => "fast",
        })
    }
}

/// `power`-th power of the subject lies in `N_H` but not in `C_H`. For
/// subgroup reports `element` names the offending member and `power` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub hyperplane: Hyperplane,
    pub power: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub element: String,
    pub lifts: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl LiftReport {
    fn new(element: String, witness: Option<Witness>, method: Method) -> Self {
        LiftReport { element, lifts: witness.is_none(), witness, method }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// First hyperplane (canonical order) with `g ∈ N_H ∖ C_H`.
fn first_violation(g: &MonomialElement, arr: &Arrangement) -> Option<Hyperplane> {
    arr.hyperplanes().iter().copied().find(|&h| {
        stabilizes(g, h).expect("same descriptor") && !in_parabolic(g, h).expect("same descriptor")
    })
}

/// Scans `⟨w⟩ ∩ N_H ⊂ C_H` over every hyperplane and every power
/// `1..=order(w)`. The witness is the smallest power, then the first
/// hyperplane, that violates it.
pub fn element_lifts_oracle(w: &MonomialElement) -> LiftReport {
    let arr = Arrangement::new(w.descriptor());
    let order = w.order();
    let mut acc = w.clone();
    for power in 1..=order {
        if let Some(hyperplane) = first_violation(&acc, &arr) {
            return LiftReport::new(
                w.to_string(),
                Some(Witness { hyperplane, power, element: None }),
                Method::Oracle,
            );
        }
        acc = acc.compose_unchecked(w);
    }
    LiftReport::new(w.to_string(), None, Method::Oracle)
}

/// Closed-form criterion from cycle data.
///
/// * `r = 1`: only the identity lifts (`B/[P,P] ≅ Z`).
/// * even order never lifts.
/// * `d ≥ 2`, or `d = 1` with `σ_w ≠ id`: every cycle product (fixed points
///   included) is trivial.
/// * `d = 1`, `σ_w = id`: for all `i ≠ j`, the order of `a_i a_j^{-1}` is a
///   multiple of the orders of `a_i` and `a_j`.
pub fn element_lifts_fast(w: &MonomialElement) -> bool {
    let desc = w.descriptor();
    if desc.rank() == 1 {
        return w.is_identity();
    }
    if w.order().is_multiple_of(2) {
        return false;
    }
    if desc.d() >= 2 || !w.is_diagonal() {
        return w.cycles().iter().all(|c| c.product_exponent == 0);
    }
    let de = desc.de();
    let a = w.exponents();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let diff = (a[i] + de - a[j]) % de;
            let diff_order = root_order(diff, de);
            if !diff_order.is_multiple_of(root_order(a[i], de))
                || !diff_order.is_multiple_of(root_order(a[j], de))
            {
                return false;
            }
        }
    }
    true
}

pub fn element_lifts_fast_report(w: &MonomialElement) -> LiftReport {
    LiftReport {
        element: w.to_string(),
        lifts: element_lifts_fast(w),
        witness: None,
        method: Method::Fast,
    }
}

/// Checks `N_H ∩ G ⊂ C_H` for every `H`; the witness is the first element
/// (sorted order) and then the first hyperplane violating it.
pub fn subgroup_lifts(group: &Subgroup) -> LiftReport {
    let arr = Arrangement::new(group.descriptor());
    let subject = subgroup_label(group);
    for g in group.elements() {
        if let Some(hyperplane) = first_violation(g, &arr) {
            return LiftReport::new(
                subject,
                Some(Witness { hyperplane, power: 1, element: Some(g.to_string()) }),
                Method::Oracle,
            );
        }
    }
    LiftReport::new(subject, None, Method::Oracle)
}

/// Lifts iff every element of `G` has a finite-order lifting.
pub fn subgroup_lifts_local(group: &Subgroup) -> bool {
    group.elements().iter().all(|g| element_lifts_oracle(g).lifts)
}

fn subgroup_label(group: &Subgroup) -> String {
    let gens: Vec<String> = group.generators().iter().map(|g| g.to_string()).collect();
    format!("<{}> in {} (order {})", gens.join(" | "), group.descriptor(), group.len())
}

/// Cheap sufficient reasons for `w` to have only infinite-order liftings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Obstruction {
    EvenOrder,
    CentralPower,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::EvenOrder => "even-order",
            Obstruction::CentralPower => "central-power",
        })
    }
}

/// All shortcut reasons that apply, `EvenOrder` first.
pub fn obstructions(w: &MonomialElement) -> Vec<Obstruction> {
    let mut out = Vec::new();
    let order = w.order();
    if order.is_multiple_of(2) {
        out.push(Obstruction::EvenOrder);
    }
    let gens = MonomialElement::standard_generators(w.descriptor());
    let mut acc = w.clone();
    for _ in 1..order {
        if !acc.is_identity() && gens.iter().all(|g| acc.commutes_with(g)) {
            out.push(Obstruction::CentralPower);
            break;
        }
        acc = acc.compose_unchecked(w);
    }
    out
}

/// `"even-order"` if the order is even, else `"central-power"` if some proper
/// power is a nontrivial central element, else nothing.
pub fn obstruction_shortcuts(w: &MonomialElement) -> Option<Obstruction> {
    obstructions(w).into_iter().next()
}
