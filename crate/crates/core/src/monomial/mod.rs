//! Exact arithmetic in `G(de,e,r)`.

mod descriptor;
mod element;
mod subgroup;

pub use descriptor::GroupDescriptor;
pub use element::{root_order, CycleData, MonomialElement};
pub use subgroup::{center, enumerate, enumerate_with_guard, Enumeration, Subgroup, DEFAULT_GUARD};
