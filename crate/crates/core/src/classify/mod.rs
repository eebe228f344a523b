//! Classifications over the infinite series, with brute-force counterparts.

pub mod cayley;
pub mod free;
pub mod frobenius;
pub mod perm;

use serde::Serialize;

pub use cayley::{cayley_embedding, FiniteGroup};
pub use free::{all_in_f_deer, free_action_general, in_f_deer};
pub use frobenius::{frobenius_coset_action, FrobeniusAction, FrobeniusSpec};
pub use perm::{all_in_f_n, free_action_symmetric, in_f_n, PermutationGroup};

use crate::arrangement::hyperplanes;
use crate::error::Result;
use crate::lifting::element_lifts_oracle;
use crate::monomial::{center, enumerate, GroupDescriptor};

/// Exceptional groups whose `B/[P,P]` is Bieberbach. Stored data only.
pub const EXCEPTIONAL_BIEBERBACH: [&str; 12] =
    ["G_4", "G_5", "G_6", "G_7", "G_10", "G_11", "G_14", "G_15", "G_18", "G_19", "G_25", "G_26"];

pub fn exceptional_bieberbach_list() -> &'static [&'static str] {
    &EXCEPTIONAL_BIEBERBACH
}

/// `r = 1`, or `r = 2` and `d ≥ 2`, or `r = 2`, `d = 1` and `e` a power of 2.
pub fn is_bieberbach_series(desc: GroupDescriptor) -> bool {
    match desc.rank() {
        1 => true,
        2 => desc.d() >= 2 || desc.e().is_power_of_two(),
        _ => false,
    }
}

/// Torsion-free iff no nonidentity element passes the lifting oracle.
pub fn bieberbach_bruteforce(desc: GroupDescriptor) -> Result<bool> {
    Ok(enumerate(desc)?.all(|w| w.is_identity() || !element_lifts_oracle(&w).lifts))
}

/// Groups of the infinite series in which every odd-order element lifts:
/// `G(d,1,1)` with `d` a power of 2, `G(de,e,r)` with `d`, `e` powers of 2
/// and `r ≥ 2`, and `G(e,e,2)`. The rank-one case covers `G(de,e,1)`, which
/// is cyclic of order `d`.
pub fn has_odd_lift_property(desc: GroupDescriptor) -> bool {
    if desc.rank() == 1 {
        return desc.d().is_power_of_two();
    }
    (desc.d().is_power_of_two() && desc.e().is_power_of_two())
        || (desc.rank() == 2 && desc.d() == 1)
}

pub fn odd_lift_bruteforce(desc: GroupDescriptor) -> Result<bool> {
    Ok(enumerate(desc)?.filter(|w| w.order() % 2 == 1).all(|w| element_lifts_oracle(&w).lifts))
}

/// One row of the `classify` / `survey` tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyRow {
    pub descriptor: GroupDescriptor,
    pub bieberbach_formula: bool,
    /// `None` when the group is too large to enumerate.
    pub bieberbach_bruteforce: Option<bool>,
    pub odd_lift_property: bool,
    pub odd_lift_bruteforce: Option<bool>,
    pub arrangement_size: usize,
    pub center_size: Option<usize>,
}

impl ClassifyRow {
    /// Formula and brute force agree wherever brute force ran.
    pub fn consistent(&self) -> bool {
        self.bieberbach_bruteforce.is_none_or(|b| b == self.bieberbach_formula)
            && self.odd_lift_bruteforce.is_none_or(|b| b == self.odd_lift_property)
    }
}

pub fn classify(desc: GroupDescriptor) -> Result<ClassifyRow> {
    use crate::error::Error;
    let optional = |r: Result<bool>| match r {
        Ok(b) => Ok(Some(b)),
        Err(Error::SizeLimit { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let center_size = match center(desc) {
        Ok(z) => Some(z.len()),
        Err(Error::SizeLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassifyRow {
        descriptor: desc,
        bieberbach_formula: is_bieberbach_series(desc),
        bieberbach_bruteforce: optional(bieberbach_bruteforce(desc))?,
        odd_lift_property: has_odd_lift_property(desc),
        odd_lift_bruteforce: optional(odd_lift_bruteforce(desc))?,
        arrangement_size: hyperplanes(desc).len(),
        center_size,
    })
}
