use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use braidlift::arrangement::{acts_faithfully_on_arrangement, orbits, Arrangement};
use braidlift::classify::frobenius::{frobenius_coset_action, FrobeniusSpec};
use braidlift::classify::{classify, ClassifyRow};
use braidlift::lifting::{
    element_lifts_fast_report, element_lifts_oracle, subgroup_lifts, subgroup_lifts_local,
};
use braidlift::monomial::DEFAULT_GUARD;
use braidlift::suite::{cocycle_round_trips, run_all, DEFAULT_SEED};
use braidlift::{Error, GroupDescriptor, LiftReport, MonomialElement, Subgroup};

const EXIT_NO_LIFT: u8 = 3;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 4;
const EXIT_INVARIANT: u8 = 5;

#[derive(Parser)]
#[command(name = "braidlift", version, about = "Lifting checks for the groups G(de,e,r)")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Fast,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether one element lifts.
    CheckElement {
        #[arg(long)]
        group: String,
        /// "perm=[...];exp=[...]", 1-based.
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// Decide whether the subgroup generated by the given elements lifts.
    CheckSubgroup {
        #[arg(long)]
        group: String,
        /// Elements separated by ';' or '|', e.g.
        /// "perm=[2,1];exp=[0,0];perm=[1,2];exp=[1,2]".
        #[arg(long)]
        generators: String,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Bieberbach and odd-lift classification of one group.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Classification table over a box of parameters, e.g. "d<=2,e<=4,r<=3".
    Survey {
        #[arg(long)]
        grid: String,
    },
    /// Coset action of the affine group Z/p ⋊ Z/q.
    Frobenius {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Multiplier of order q mod p; the smallest one by default.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Random coboundary round trips through the H^1 solver.
    Cocycle {
        #[arg(long)]
        group: String,
        #[arg(long)]
        generators: String,
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Run every acceptance criterion.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

struct Output {
    code: u8,
    text: String,
    json: Value,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidDescriptor(_)
        | Error::InvalidElement(_)
        | Error::DescriptorMismatch(..)
        | Error::InvalidFrobenius(_) => EXIT_PARSE,
        Error::SizeLimit { .. } => EXIT_GUARD,
        _ => EXIT_INVARIANT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json value"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command) -> braidlift::Result<Output> {
    match command {
        Command::CheckElement { group, element, method } => check_element(&group, &element, method),
        Command::CheckSubgroup { group, generators, guard } => {
            check_subgroup(&group, &generators, guard)
        }
        Command::Classify { group } => {
            let row = classify(group.parse()?)?;
            let code = if row.consistent() { 0 } else { EXIT_INVARIANT };
            Ok(Output {
                code,
                text: table(std::slice::from_ref(&row)),
                json: serde_json::to_value(row).expect("row"),
            })
        }
        Command::Survey { grid } => survey(&grid),
        Command::Frobenius { p, q, m } => frobenius(p, q, m),
        Command::Cocycle { group, generators, random, seed, guard } => {
            let sub = subgroup(&group, &generators, guard)?;
            let mut rng = StdRng::seed_from_u64(seed);
            let solved = cocycle_round_trips(&sub, random, &mut rng)?;
            let code = if solved == random { 0 } else { EXIT_INVARIANT };
            Ok(Output {
                code,
                text: format!(
                    "|G| = {}, rank = {}, solved {solved}/{random}\n",
                    sub.len(),
                    Arrangement::new(sub.descriptor()).len()
                ),
                json: json!({ "order": sub.len(), "rank": Arrangement::new(sub.descriptor()).len(), "requested": random, "solved": solved }),
            })
        }
        Command::Verify { seed } => {
            let results = run_all(seed);
            let passed = results.iter().all(|r| r.passed);
            let text: String = results.iter().map(|r| format!("{r}\n")).collect();
            Ok(Output {
                code: if passed { 0 } else { EXIT_INVARIANT },
                text,
                json: json!({ "passed": passed, "criteria": results }),
            })
        }
    }
}

fn describe(r: &LiftReport) -> String {
    let mut s = format!("{}: lifts = {}", r.method, r.lifts);
    if let Some(w) = &r.witness {
        s.push_str(&format!(", witness {} power {}", w.hyperplane, w.power));
        if let Some(g) = &w.element {
            s.push_str(&format!(" element {g}"));
        }
    }
    s
}

fn check_element(group: &str, element: &str, method: MethodArg) -> braidlift::Result<Output> {
    let desc: GroupDescriptor = group.parse()?;
    let w = MonomialElement::parse(desc, element)?;
    let mut reports = Vec::new();
    if method != MethodArg::Fast {
        reports.push(element_lifts_oracle(&w));
    }
    if method != MethodArg::Oracle {
        reports.push(element_lifts_fast_report(&w));
    }
    let lifts = reports[0].lifts;
    let agree = reports.iter().all(|r| r.lifts == lifts);
    let code = match (agree, lifts) {
        (false, _) => EXIT_INVARIANT,
        (true, true) => 0,
        (true, false) => EXIT_NO_LIFT,
    };
    let mut text = format!("{desc} {w} (order {})\n", w.order());
    for r in &reports {
        text.push_str(&describe(r));
        text.push('\n');
    }
    if !agree {
        text.push_str("methods disagree\n");
    }
    Ok(Output {
        code,
        text,
        json: json!({
            "group": desc,
            "element": w.to_string(),
            "order": w.order(),
            "lifts": lifts,
            "agree": agree,
            "reports": reports,
        }),
    })
}

/// Splits a generator list. Elements are written "perm=[..];exp=[..]", so
/// the ';' separating two elements cannot be told apart from the one inside
/// an element; fields are therefore paired up in order. '|' also separates.
fn parse_generators(desc: GroupDescriptor, s: &str) -> braidlift::Result<Vec<MonomialElement>> {
    let fields: Vec<&str> = s.split([';', '|']).map(str::trim).filter(|f| !f.is_empty()).collect();
    if !fields.len().is_multiple_of(2) {
        return Err(Error::Parse(format!("unpaired perm/exp field in {s:?}")));
    }
    fields
        .chunks(2)
        .map(|pair| MonomialElement::parse(desc, &format!("{};{}", pair[0], pair[1])))
        .collect()
}

fn subgroup(group: &str, generators: &str, guard: usize) -> braidlift::Result<Subgroup> {
    let desc: GroupDescriptor = group.parse()?;
    let gens = parse_generators(desc, generators)?;
    Subgroup::closure(desc, &gens, guard)
}

fn check_subgroup(group: &str, generators: &str, guard: usize) -> braidlift::Result<Output> {
    let sub = subgroup(group, generators, guard)?;
    let report = subgroup_lifts(&sub);
    let local = subgroup_lifts_local(&sub);
    let orbit_count = orbits(&sub).len();
    let faithful = match acts_faithfully_on_arrangement(&sub) {
        Ok(b) => Some(b),
        Err(Error::EmptyArrangement) => None,
        Err(e) => return Err(e),
    };
    let code = match (report.lifts == local, report.lifts) {
        (false, _) => EXIT_INVARIANT,
        (true, true) => 0,
        (true, false) => EXIT_NO_LIFT,
    };
    let faithful_text = faithful.map_or("n/a (empty arrangement)".to_string(), |b| b.to_string());
    let text = format!(
        "{}\n|G| = {}\norbits on hyperplanes = {orbit_count}\nfaithful = {faithful_text}\n{}\n{}",
        sub.descriptor(),
        sub.len(),
        describe(&report),
        if report.lifts == local { "" } else { "global and local checks disagree\n" }
    );
    Ok(Output {
        code,
        text: text.trim_end().to_string() + "\n",
        json: json!({
            "group": sub.descriptor(),
            "order": sub.len(),
            "orbits": orbit_count,
            "faithful": faithful,
            "report": report,
        }),
    })
}

fn opt(b: Option<bool>) -> String {
    b.map_or("-".into(), |b| b.to_string())
}

fn table(rows: &[ClassifyRow]) -> String {
    let mut s = format!(
        "{:<12} {:>10} {:>10} {:>9} {:>9} {:>5} {:>5}\n",
        "group", "bieb", "bieb(bf)", "odd-lift", "odd(bf)", "|A|", "|Z|"
    );
    for r in rows {
        s.push_str(&format!(
            "{:<12} {:>10} {:>10} {:>9} {:>9} {:>5} {:>5}\n",
            r.descriptor.to_string(),
            r.bieberbach_formula,
            opt(r.bieberbach_bruteforce),
            r.odd_lift_property,
            opt(r.odd_lift_bruteforce),
            r.arrangement_size,
            r.center_size.map_or("-".into(), |z| z.to_string()),
        ));
    }
    s
}

/// Parses "d<=D,e<=E,r<=R" (or with '≤').
fn parse_grid(s: &str) -> braidlift::Result<(u32, u32, usize)> {
    let bad = || Error::Parse(format!("expected \"d<=D,e<=E,r<=R\", got {s:?}"));
    let mut bounds = [None; 3];
    for part in s.split(',') {
        let part = part.trim().replace('≤', "<=");
        let (name, value) = part.split_once("<=").ok_or_else(bad)?;
        let value: u32 = value.trim().parse().map_err(|_| bad())?;
        let slot = match name.trim() {
            "d" => 0,
            "e" => 1,
            "r" => 2,
            _ => return Err(bad()),
        };
        bounds[slot] = Some(value);
    }
    match bounds {
        [Some(d), Some(e), Some(r)] if d > 0 && e > 0 && r > 0 => Ok((d, e, r as usize)),
        _ => Err(bad()),
    }
}

fn survey(grid: &str) -> braidlift::Result<Output> {
    let (dmax, emax, rmax) = parse_grid(grid)?;
    let mut rows = Vec::new();
    for r in 1..=rmax {
        for d in 1..=dmax {
            for e in 1..=emax {
                rows.push(classify(GroupDescriptor::new(d, e, r)?)?);
            }
        }
    }
    let consistent = rows.iter().all(ClassifyRow::consistent);
    Ok(Output {
        code: if consistent { 0 } else { EXIT_INVARIANT },
        text: table(&rows),
        json: json!({ "consistent": consistent, "rows": rows }),
    })
}

fn frobenius(p: u64, q: u64, m: Option<u64>) -> braidlift::Result<Output> {
    let spec = match m {
        Some(m) => FrobeniusSpec::new(p, q, m)?,
        None => FrobeniusSpec::with_smallest_multiplier(p, q)?,
    };
    let action = frobenius_coset_action(spec)?;
    let cycles_ok = action.cycle_structure_ok();
    let ok = cycles_ok && action.faithful && action.all_in_f_p;
    let text = format!(
        "Z/{p} ⋊ Z/{q} (m = {}) on {p} cosets\norder = {}\nfaithful = {}\ncycle types = {}\nall in F_{p} = {}\n",
        action.spec.m,
        action.group.len(),
        action.faithful,
        if cycles_ok { "ok" } else { "MISMATCH" },
        action.all_in_f_p,
    );
    Ok(Output {
        code: if ok { 0 } else { EXIT_INVARIANT },
        text,
        json: json!({
            "spec": action.spec,
            "order": action.group.len(),
            "faithful": action.faithful,
            "cycle_types_ok": cycles_ok,
            "all_in_f_p": action.all_in_f_p,
        }),
    })
}
