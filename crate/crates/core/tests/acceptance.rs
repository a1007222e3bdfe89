//! Acceptance checks, one line per criterion. Exits non-zero if any fails.
//!
//! Every criterion is exact; the only tolerance is the wall-clock budget
//! printed beside each line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use toplat::corpus::{self, Entry};
use toplat::duality::comfort_ross_map;
use toplat::group::{all_subgroups, direct_product, is_normal, parse_group};
use toplat::lattice::{all_lattices, are_isomorphic, m3, n5, product_lattice, FiniteLattice};
use toplat::pontryagin::verify_roundtrip;
use toplat::report::CheckReport;
use toplat::settop::{enumerate_topologies, verify_classical_facts, SetTopology};
use toplat::topology::{
    analyze, decompose_product_topology, prodanov_lattice, topology_lattice, verify_cover_transfer,
    verify_meet_basis, verify_merzon, verify_quotient_meet, verify_restriction_join,
    verify_saturation_join, verify_semimodular_transfer, ProductOutcome,
};
use toplat::Caps;

type Outcome = Result<String, String>;

fn caps() -> Caps {
    Caps::default().with_enumeration_order(72)
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn err(e: toplat::Error) -> String {
    e.to_string()
}

/// Runs `check` on every entry and stops at the first failing report.
fn sweep<F>(entries: &[Entry], check: F) -> Result<u64, String>
where
    F: Fn(&Entry) -> toplat::Result<CheckReport>,
{
    let mut cases = 0;
    for e in entries {
        let r = check(e).map_err(|x| format!("{}: {x}", e.name))?;
        if !r.passed {
            return fail(format!(
                "{} on {}: {} violations, first {:?}",
                r.check,
                e.name,
                r.violation_count,
                r.violations.first()
            ));
        }
        cases += r.cases;
    }
    Ok(cases)
}

fn abelian_modularity() -> Outcome {
    let groups = corpus::abelian(64).map_err(err)?;
    let mut largest = 0;
    for e in &groups {
        let l = topology_lattice(&e.group, &caps()).map_err(err)?;
        largest = largest.max(l.len());
        if let Some(w) = l.lattice().modular_witness() {
            return fail(format!("{} is not modular: {w:?}", e.name));
        }
    }
    Ok(format!(
        "{} abelian groups, largest lattice {largest}",
        groups.len()
    ))
}

fn nilpotent_semimodularity() -> Outcome {
    let names = [
        "Q8",
        "D 4",
        "Heis 2",
        "Heis 3",
        "Z 3 x Q8",
        "Z 3 x D 4",
        "Z 2 x Q8",
        "Z^k 3 2 x D 4",
    ];
    for e in corpus::from_names(&names).map_err(err)? {
        let r = analyze(&e.group, &caps()).map_err(err)?;
        if r.nilpotency_class.is_none() {
            return fail(format!("{} is not nilpotent", e.name));
        }
        if !r.semimodular {
            return fail(format!("{}: {:?}", e.name, r.semimodular_witness));
        }
        let jh = &r.jordan_holder;
        if !jh.uniform || jh.violation.is_some() {
            return fail(format!(
                "{}: chain lengths differ {:?}",
                e.name, jh.violation
            ));
        }
    }
    Ok(format!("{} groups", names.len()))
}

fn product_decomposition() -> Outcome {
    let pairs = [
        ("Z 3", "Q8"),
        ("Z^k 3 2", "D 4"),
        ("Z 5", "Q8"),
        ("Z 3", "Heis 2"),
    ];
    let mut total = 0;
    for (h, f) in pairs {
        let (h, f) = (parse_group(h).map_err(err)?, parse_group(f).map_err(err)?);
        let g = direct_product(&h, &f).map_err(err)?;
        let l = topology_lattice(&g, &caps()).map_err(err)?;
        for tau in l.topologies() {
            match decompose_product_topology(&g, &tau).map_err(err)? {
                ProductOutcome::Product(_) => total += 1,
                ProductOutcome::NonProduct { witness } => {
                    return fail(format!(
                        "order {}: kernel {:?} not a product, witness {witness}",
                        g.order(),
                        tau.kernel().to_vec()
                    ))
                }
            }
        }
        let lh = topology_lattice(&h, &caps()).map_err(err)?;
        let lf = topology_lattice(&f, &caps()).map_err(err)?;
        let prod = product_lattice(lh.lattice(), lf.lattice()).map_err(err)?;
        if are_isomorphic(l.lattice(), &prod, 64)
            .map_err(err)?
            .is_none()
        {
            return fail(format!("order {}: lattice is not the product", g.order()));
        }
        if !l.lattice().is_modular() {
            return fail(format!("order {}: not modular", g.order()));
        }
    }
    Ok(format!("{total} topologies decomposed"))
}

fn merzon() -> Outcome {
    let groups = corpus::standard(16).map_err(err)?;
    let cases = sweep(&groups, |e| verify_merzon(&e.group, &caps()))?;
    Ok(format!("{} groups, {cases} cases", groups.len()))
}

fn identity_sweeps() -> Outcome {
    let groups = corpus::standard(16).map_err(err)?;
    let checks: [fn(&toplat::FiniteGroup, &Caps) -> toplat::Result<CheckReport>; 5] = [
        verify_restriction_join,
        verify_quotient_meet,
        verify_saturation_join,
        verify_meet_basis,
        verify_cover_transfer,
    ];
    let mut cases = 0;
    for check in checks {
        cases += sweep(&groups, |e| check(&e.group, &caps()))?;
    }
    Ok(format!("{} groups, {cases} cases", groups.len()))
}

fn semimodular_transfer() -> Outcome {
    let groups = corpus::standard(24).map_err(err)?;
    let cases = sweep(&groups, |e| verify_semimodular_transfer(&e.group, &caps()))?;
    Ok(format!(
        "{} groups, {cases} central subgroups",
        groups.len()
    ))
}

fn comfort_ross() -> Outcome {
    let groups = corpus::abelian(32).map_err(err)?;
    let cases = sweep(&groups, |e| {
        comfort_ross_map(&e.group, &caps()).map(|c| c.report)
    })?;
    Ok(format!("{} groups, {cases} cases", groups.len()))
}

/// All families of subsets of an `n`-point set closed under finite unions
/// and intersections and containing the empty and full sets.
fn brute_force_topologies(n: usize) -> Vec<u64> {
    let subsets = 1usize << n;
    let full = subsets - 1;
    (0u64..1 << subsets)
        .filter(|&fam| {
            let has = |s: usize| fam >> s & 1 == 1;
            has(0)
                && has(full)
                && (0..subsets)
                    .all(|a| !has(a) || (0..subsets).all(|b| !has(b) || (has(a | b) && has(a & b))))
        })
        .collect()
}

fn toplattice_classics() -> Outcome {
    let tops = enumerate_topologies(3).map_err(err)?;
    let mut got: Vec<u64> = tops.iter().map(SetTopology::family_bits).collect();
    got.sort_unstable();
    let oracle = brute_force_topologies(3);
    if tops.len() != 29 || got != oracle {
        return fail(format!(
            "{} topologies on 3 points, oracle {}",
            tops.len(),
            oracle.len()
        ));
    }
    for n in [3, 4] {
        let r = verify_classical_facts(n).map_err(err)?;
        if r.distributive_witness.is_none() {
            return fail(format!("no distributivity witness on {n} points"));
        }
    }
    let r = verify_classical_facts(3).map_err(err)?;
    if let Some([a, b]) = r.dual_birkhoff_witness {
        return fail(format!(
            "dual Birkhoff fails on 3 points: opens {a:?} and {b:?} are covered by their join, meet not covered by both"
        ));
    }
    Ok("29 topologies, non-distributive on 3 and 4 points, dual Birkhoff on 3".into())
}

fn pontryagin_roundtrip() -> Outcome {
    let groups = corpus::standard(24).map_err(err)?;
    let cases = sweep(&groups, |e| verify_roundtrip(&e.group, &caps()))?;
    // the sweep above checks each subgroup; count the normal ones separately
    let mut normal = 0;
    for e in &groups {
        for h in all_subgroups(&e.group, &caps()).map_err(err)? {
            normal += usize::from(is_normal(&e.group, &h).map_err(err)?);
        }
    }
    Ok(format!("{cases} subgroups, {normal} normal"))
}

fn prodanov() -> Outcome {
    for name in ["Z^k 2 2", "Z^k 3 2"] {
        let (p, _) = prodanov_lattice(&parse_group(name).map_err(err)?, &caps()).map_err(err)?;
        let k = p.coatoms.len();
        for i in 0..k {
            for j in i + 1..k {
                let pair = 1u32 << i | 1 << j;
                let cl = p.closure(pair);
                if cl == pair || cl & pair != pair {
                    return fail(format!("{name}: closure of coatoms {{{i},{j}}} is {cl:#b}"));
                }
            }
        }
    }
    for name in ["Z 4", "Z 9", "Z 25", "Z 49", "Z 6"] {
        let (_, r) = prodanov_lattice(&parse_group(name).map_err(err)?, &caps()).map_err(err)?;
        if !r.all_closed {
            return fail(format!("{name}: {} non-closed sets", r.non_closed_count));
        }
    }
    Ok("pairs not closed for Z2^2 and Z3^2; all closed for Z4, Z9, Z25, Z49, Z6".into())
}

fn modular_by_definition(l: &FiniteLattice) -> bool {
    let n = l.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| !l.leq(a, c) || l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c))
        })
    })
}

fn lattice_self_consistency() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for l in all_lattices(n) {
            count += 1;
            let modular = l.is_modular();
            let semimodular = l.is_semimodular();
            let jh = l.jordan_holder_check(l.bottom(), l.top()).map_err(err)?;
            let uniform = jh.is_uniform() && l.jordan_holder_violation().is_none();
            if modular != modular_by_definition(&l) {
                return fail(format!("modularity disagrees with the definition on {l:?}"));
            }
            if (modular && !semimodular) || (semimodular && !uniform) {
                return fail(format!("implication chain broken on {l:?}"));
            }
            if l.is_distributive() && !modular {
                return fail(format!("distributive but not modular: {l:?}"));
            }
        }
    }
    let (m, n) = (m3(), n5());
    if !(m.is_modular() && !m.is_distributive()) {
        return fail("M3 misclassified");
    }
    if n.is_modular() || n.is_semimodular() || n.is_distributive() {
        return fail("N5 misclassified");
    }
    Ok(format!("{count} lattices"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("1 abelian modularity", 60, abelian_modularity),
        (
            "2 nilpotent semimodularity and chain lengths",
            120,
            nilpotent_semimodularity,
        ),
        ("3 product decomposition", 120, product_decomposition),
        ("4 Merzon", 60, merzon),
        ("5 identity sweeps", 120, identity_sweeps),
        ("6 semimodular transfer", 60, semimodular_transfer),
        ("7 Comfort-Ross", 60, comfort_ross),
        ("8 toplattice classics", 60, toplattice_classics),
        ("9 Pontryagin round-trip", 30, pontryagin_roundtrip),
        ("10 Prodanov closure", 10, prodanov),
        (
            "11 lattice checker self-consistency",
            60,
            lattice_self_consistency,
        ),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += usize::from(status == "FAIL");
        println!(
            "{status} [{name}] {:.2}s / {budget}s: {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
