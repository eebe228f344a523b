//! End-to-end verification suite: every check runs exhaustively (or on a
//! fixed-seed sample) at desk scale and reports pass/fail with a summary.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::arrangement::orbits;
use crate::classify::perm::{perm_from_cycles, perm_order};
use crate::classify::{
    all_in_f_deer, all_in_f_n, bieberbach_bruteforce, cayley_embedding, free_action_general,
    free_action_symmetric, frobenius_coset_action, is_bieberbach_series, FrobeniusSpec,
    PermutationGroup,
};
use crate::error::Result;
use crate::lattice::{fixed_lattice_rank, Cocycle, CocycleSolver, LatticeVector};
use crate::lifting::{element_lifts_fast, element_lifts_oracle, subgroup_lifts};
use crate::monomial::{enumerate, GroupDescriptor, MonomialElement, Subgroup};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// The descriptor grid used throughout the suite.
pub const GRID: [&str; 17] = [
    "G(1,1,2)", "G(1,1,3)", "G(1,1,4)", "G(1,1,5)", "G(1,1,6)", "G(2,1,2)", "G(2,1,3)", "G(2,2,3)",
    "G(2,2,4)", "G(3,3,2)", "G(3,3,3)", "G(4,2,2)", "G(4,4,2)", "G(6,3,2)", "G(6,6,2)", "G(3,1,2)",
    "G(5,5,2)",
];

pub fn grid() -> Vec<GroupDescriptor> {
    GRID.iter().map(|s| s.parse().expect("grid descriptor")).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<28} {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_millis()
        )
    }
}

type Check = fn(&mut StdRng) -> Result<(bool, String)>;

const CRITERIA: [(u8, &str, Check); 12] = [
    (1, "oracle/fast equivalence", oracle_fast_equivalence),
    (2, "worked examples", worked_examples),
    (3, "even order never lifts", parity),
    (4, "Bieberbach classification", bieberbach),
    (5, "symmetric groups", symmetric_groups),
    (6, "F_n characterization", f_n_characterization),
    (7, "F(de,e,r) characterization", f_deer_characterization),
    (8, "Frobenius coset actions", frobenius),
    (9, "Cayley embeddings", cayley),
    (10, "constructive H^1 = 0", constructive_h1),
    (11, "normalizer rank", normalizer_rank),
    (12, "padding stability", stability),
];

pub fn criterion_ids() -> Vec<u8> {
    CRITERIA.iter().map(|c| c.0).collect()
}

/// Runs one criterion; errors count as failures.
pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionResult> {
    let &(id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let mut rng = StdRng::seed_from_u64(seed ^ u64::from(id));
    let start = Instant::now();
    let (passed, detail) = match check(&mut rng) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult { id, name, passed, detail, elapsed: start.elapsed() })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    criterion_ids().into_iter().filter_map(|id| run_criterion(id, seed)).collect()
}

fn oracle_fast_equivalence(_: &mut StdRng) -> Result<(bool, String)> {
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for desc in grid() {
        for w in enumerate(desc)? {
            checked += 1;
            if element_lifts_oracle(&w).lifts != element_lifts_fast(&w) {
                mismatches.push(format!("{desc} {w}"));
            }
        }
    }
    Ok((
        mismatches.is_empty(),
        format!("{checked} elements, {} mismatches {:?}", mismatches.len(), first(&mismatches)),
    ))
}

fn first(v: &[String]) -> Vec<&String> {
    v.iter().take(3).collect()
}

fn worked_examples(_: &mut StdRng) -> Result<(bool, String)> {
    let g332: GroupDescriptor = "G(3,3,2)".parse()?;
    let g442: GroupDescriptor = "G(4,4,2)".parse()?;
    let diag_j = MonomialElement::diagonal(g332, vec![1, 2])?;
    let diag_i = MonomialElement::diagonal(g442, vec![1, 3])?;
    let a = element_lifts_oracle(&diag_j).lifts && element_lifts_fast(&diag_j);
    let b = diag_j.order() == 3;
    let c = !element_lifts_oracle(&diag_i).lifts && !element_lifts_fast(&diag_i);
    Ok((a && b && c, format!("diag(j,j²) lifts={a} order3={b}; diag(i,−i) in G(4,4,2) fails={c}")))
}

fn parity(_: &mut StdRng) -> Result<(bool, String)> {
    let mut even = 0usize;
    let mut bad = Vec::new();
    for desc in grid() {
        for w in enumerate(desc)?.filter(|w| w.order() % 2 == 0) {
            even += 1;
            if element_lifts_oracle(&w).lifts {
                bad.push(format!("{desc} {w}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{even} even-order elements, {} lift {:?}", bad.len(), first(&bad)),
    ))
}

fn bieberbach(_: &mut StdRng) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for desc in grid() {
        if is_bieberbach_series(desc) != bieberbach_bruteforce(desc)? {
            bad.push(desc.to_string());
        }
    }
    let expect = [
        ("G(4,2,2)", true),
        ("G(4,4,2)", true),
        ("G(3,3,2)", false),
        ("G(1,1,4)", false),
        ("G(2,1,3)", false),
    ];
    for (s, want) in expect {
        let desc: GroupDescriptor = s.parse()?;
        if is_bieberbach_series(desc) != want || bieberbach_bruteforce(desc)? != want {
            bad.push(format!("{s} expected {want}"));
        }
    }
    Ok((bad.is_empty(), format!("{} grid groups, disagreements {:?}", GRID.len(), bad)))
}

fn symmetric_groups(_: &mut StdRng) -> Result<(bool, String)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=6 {
        for w in enumerate(GroupDescriptor::symmetric(n)?)? {
            checked += 1;
            if element_lifts_oracle(&w).lifts != (w.order() % 2 == 1) {
                bad.push(format!("S({n}) {w}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{checked} permutations, {} exceptions {:?}", bad.len(), first(&bad)),
    ))
}

/// Distinct cyclic subgroups of a permutation group.
fn cyclic_perm_subgroups(group: &PermutationGroup) -> Result<Vec<PermutationGroup>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in group.elements() {
        let sub = PermutationGroup::closure(group.degree(), std::slice::from_ref(g), group.len())?;
        if seen.insert(sub.elements().to_vec()) {
            out.push(sub);
        }
    }
    Ok(out)
}

/// Cyclic subgroups of S_5 plus 50 subgroups generated by two random
/// order-3 elements.
pub fn s5_test_subgroups(rng: &mut StdRng) -> Result<Vec<PermutationGroup>> {
    let s5 = PermutationGroup::closure(
        5,
        &[perm_from_cycles(5, "(1,2)")?, perm_from_cycles(5, "(1,2,3,4,5)")?],
        120,
    )?;
    let mut subs = cyclic_perm_subgroups(&s5)?;
    let order3: Vec<_> = s5.elements().iter().filter(|p| perm_order(p) == 3).cloned().collect();
    for _ in 0..50 {
        let a = order3.choose(rng).expect("S_5 has 3-cycles").clone();
        let b = order3.choose(rng).expect("S_5 has 3-cycles").clone();
        subs.push(PermutationGroup::closure(5, &[a, b], 120)?);
    }
    Ok(subs)
}

fn f_n_characterization(rng: &mut StdRng) -> Result<(bool, String)> {
    let subs = s5_test_subgroups(rng)?;
    let bad = subs.iter().filter(|g| free_action_symmetric(g) != all_in_f_n(g)).count();
    let free = subs.iter().filter(|g| free_action_symmetric(g)).count();
    Ok((bad == 0, format!("{} subgroups of S_5 ({free} free), {bad} disagreements", subs.len())))
}

/// Distinct cyclic subgroups of the whole group `G(de,e,r)`.
pub fn cyclic_subgroups(desc: GroupDescriptor) -> Result<Vec<Subgroup>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in enumerate(desc)? {
        let sub = Subgroup::cyclic(&w);
        if seen.insert(sub.elements().to_vec()) {
            out.push(sub);
        }
    }
    Ok(out)
}

fn f_deer_characterization(_: &mut StdRng) -> Result<(bool, String)> {
    let mut total = 0;
    let mut bad = Vec::new();
    for s in ["G(2,1,3)", "G(4,2,2)"] {
        for sub in cyclic_subgroups(s.parse()?)? {
            total += 1;
            if free_action_general(&sub) != all_in_f_deer(&sub) {
                bad.push(format!("{s} {}", sub.generators()[0]));
            }
        }
    }
    Ok((bad.is_empty(), format!("{total} cyclic subgroups, disagreements {:?}", first(&bad))))
}

fn frobenius(_: &mut StdRng) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (p, q) in [(7, 3), (13, 3)] {
        let act = frobenius_coset_action(FrobeniusSpec::with_smallest_multiplier(p, q)?)?;
        let lifts = subgroup_lifts(&act.group.to_monomial()?).lifts;
        let pass = act.faithful && act.cycle_structure_ok() && act.all_in_f_p && lifts;
        ok &= pass;
        notes.push(format!(
            "p={p},q={q}: faithful={} cycles={} F_p={} lifts={lifts}",
            act.faithful,
            act.cycle_structure_ok(),
            act.all_in_f_p
        ));
    }
    Ok((ok, notes.join("; ")))
}

/// The source groups of the Cayley check: Z/5, Z/7, Z/3×Z/3, Z/7⋊Z/3.
pub fn cayley_sources() -> Result<Vec<(&'static str, PermutationGroup)>> {
    Ok(vec![
        ("Z/5", PermutationGroup::closure(5, &[perm_from_cycles(5, "(1,2,3,4,5)")?], 10)?),
        ("Z/7", PermutationGroup::closure(7, &[perm_from_cycles(7, "(1,2,3,4,5,6,7)")?], 10)?),
        (
            "Z/3xZ/3",
            PermutationGroup::closure(
                6,
                &[perm_from_cycles(6, "(1,2,3)")?, perm_from_cycles(6, "(4,5,6)")?],
                10,
            )?,
        ),
        ("Z/7:Z/3", frobenius_coset_action(FrobeniusSpec::new(7, 3, 2)?)?.group),
    ])
}

pub fn cayley_images() -> Result<Vec<(&'static str, Subgroup)>> {
    cayley_sources()?
        .into_iter()
        .map(|(name, g)| Ok((name, cayley_embedding(&g, 1000)?.to_monomial()?)))
        .collect()
}

fn cayley(_: &mut StdRng) -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, g) in cayley_sources()? {
        let start = Instant::now();
        let image = cayley_embedding(&g, 1000)?;
        let in_f = all_in_f_n(&image);
        let lifts = subgroup_lifts(&image.to_monomial()?).lifts;
        let secs = start.elapsed().as_secs_f64();
        let pass =
            image.len() == g.len() && image.degree() == g.len() && in_f && lifts && secs < 60.0;
        ok &= pass;
        notes.push(format!("{name}→S_{}: F={in_f} lifts={lifts} {secs:.2}s", image.degree()));
    }
    Ok((ok, notes.join("; ")))
}

/// `count` random integer combinations of coboundaries of basis vectors,
/// each trivialized and checked.
pub fn cocycle_round_trips(group: &Subgroup, count: usize, rng: &mut StdRng) -> Result<usize> {
    let solver = CocycleSolver::new(group)?;
    let module = solver.module();
    let n = module.rank();
    let mut solved = 0;
    for _ in 0..count {
        let mut c = Cocycle::zero(module);
        for _ in 0..rng.gen_range(1..=6) {
            let k = rng.gen_range(0..n);
            let coeff = rng.gen_range(-4i64..=4);
            c = c.add(&module.coboundary(&LatticeVector::basis(n, k)).scaled(coeff));
        }
        let x = solver.trivialize(&c)?;
        if module.coboundary(&x) == c {
            solved += 1;
        }
    }
    Ok(solved)
}

fn constructive_h1(rng: &mut StdRng) -> Result<(bool, String)> {
    let s3: GroupDescriptor = "S(3)".parse()?;
    let s5: GroupDescriptor = "S(5)".parse()?;
    let frob = cayley_images()?.pop().expect("Z/7:Z/3 image").1;
    let groups = vec![
        ("<(1,2,3)>", Subgroup::cyclic(&MonomialElement::permutation(s3, vec![1, 2, 0])?)),
        (
            "<(1,2,3,4,5)>",
            Subgroup::cyclic(&MonomialElement::permutation(s5, vec![1, 2, 3, 4, 0])?),
        ),
        ("Cayley(Z/7:Z/3)", frob),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, g) in groups {
        let solved = cocycle_round_trips(&g, 100, rng)?;
        ok &= solved == 100;
        notes.push(format!("{name}: {solved}/100"));
    }
    Ok((ok, notes.join("; ")))
}

fn normalizer_rank(rng: &mut StdRng) -> Result<(bool, String)> {
    let mut subs: Vec<Subgroup> = Vec::new();
    for g in s5_test_subgroups(rng)? {
        subs.push(g.to_monomial()?);
    }
    for s in ["G(2,1,3)", "G(4,2,2)"] {
        subs.extend(cyclic_subgroups(s.parse()?)?);
    }
    for (p, q) in [(7, 3), (13, 3)] {
        let act = frobenius_coset_action(FrobeniusSpec::with_smallest_multiplier(p, q)?)?;
        subs.push(act.group.to_monomial()?);
    }
    subs.extend(cayley_images()?.into_iter().map(|(_, g)| g));
    let mut bad = 0;
    for g in &subs {
        if fixed_lattice_rank(g)? != orbits(g).len() {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} subgroups, {bad} mismatches", subs.len())))
}

fn stability(_: &mut StdRng) -> Result<(bool, String)> {
    let mut liftable = 0;
    let mut bad = Vec::new();
    for n in 1..=5 {
        for w in enumerate(GroupDescriptor::symmetric(n)?)? {
            if element_lifts_oracle(&w).lifts {
                liftable += 1;
                let padded = w.pad(1)?;
                if !element_lifts_oracle(&padded).lifts {
                    bad.push(format!("S({n}) {w}"));
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{liftable} liftable elements padded, {} lost {:?}", bad.len(), first(&bad)),
    ))
}

/// Random element of `G(de,e,r)`, used by property tests and the CLI.
pub fn random_element(desc: GroupDescriptor, rng: &mut impl Rng) -> MonomialElement {
    let r = desc.rank();
    let de = u64::from(desc.de());
    let e = u64::from(desc.e());
    let mut perm: Vec<usize> = (0..r).collect();
    perm.shuffle(rng);
    let mut exps: Vec<u64> = (0..r - 1).map(|_| rng.gen_range(0..de)).collect();
    let sum: u64 = exps.iter().sum();
    exps.push((e - sum % e) % e + e * rng.gen_range(0..u64::from(desc.d())));
    MonomialElement::new(desc, perm, exps).expect("valid random element")
}
