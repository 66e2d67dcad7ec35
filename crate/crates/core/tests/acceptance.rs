//! Acceptance criteria, one PASS/FAIL line each.
//!
//! All comparisons are exact. The only tolerances are wall-clock budgets,
//! pinned below.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use common::{catalan, naive_count, p, PATTERNS3};
use permstat::bijections::{
    build_asc_perm, build_atop_perm, conjugate_cr, extract_atop_consistent_pair,
    extract_consistent_pair, phi, phi_inverse, psi, psi_inverse, theta, theta_inverse, theta_prime,
    theta_prime_inverse, ConsistentPair,
};
use permstat::claims::run_suite;
use permstat::distributions::{scan_quadruples, Annotation, AvoidanceClass, Statistic};
use permstat::patterns::{avoids, count_occurrences, registry, VincularPattern};
use permstat::set_stats::{
    asc_set, atop, dbot, des_set, dtop, idr_partition, lrmax, lrmaxl, lrminl, rlmaxl, rlmin, rlminl,
};
use permstat::Perm;

const TRANSPORT_N_MAX: usize = 9;
const DISTRIBUTION_N_MAX: usize = 9;
const NEGATIVE_CONTROL_N_MAX: usize = 8;
const SCAN_N_MAX: usize = 8;
const ORACLE_HOST_N_MAX: usize = 7;
const CATALAN_N_MAX: usize = 10;
const ROUND_TRIP_N_MAX: usize = 8;
const DISTRIBUTION_BUDGET: Duration = Duration::from_secs(60);
const SCAN_BUDGET: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn av(pattern: &str, n: usize) -> Vec<Perm> {
    AvoidanceClass::avoiding(p(pattern), n).unwrap().members()
}

fn eval(name: &str, q: &Perm) -> u64 {
    registry().lookup(name).unwrap().evaluate(q)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_phi_transport() -> Outcome {
    let mut checked = 0;
    for n in 0..=TRANSPORT_N_MAX {
        let mut seen = HashSet::new();
        for q in av("231", n) {
            let f = phi(&q).map_err(|e| e.to_string())?;
            ensure(eval("inv", &f) == eval("foze2", &q), || {
                format!("inv(phi({q})) != foze''({q})")
            })?;
            ensure(lrmax(&f) == lrmax(&q), || format!("Lrmax changes on {q}"))?;
            ensure(seen.insert(f.clone()), || {
                format!("phi repeats image {f} at n = {n}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations"))
}

fn c2_psi_transport() -> Outcome {
    let mut checked = 0;
    for n in 0..=TRANSPORT_N_MAX {
        for q in av("312", n) {
            let s = psi(&q).map_err(|e| e.to_string())?;
            ensure(eval("foze2", &q) == eval("inv", &s), || {
                format!("foze''({q}) != inv(psi({q}))")
            })?;
            ensure(lrmax(&s) == lrmax(&q), || format!("Lrmax changes on {q}"))?;
            ensure(avoids(&p("321"), &s), || {
                format!("psi({q}) = {s} contains 321")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations"))
}

fn c3_pinned_examples() -> Outcome {
    let check = |got: String, want: &str, what: &str| {
        ensure(got == want, || format!("{what}: {got} != {want}"))
    };
    check(phi(&p("321")).unwrap().to_string(), "312", "phi(321)")?;
    let f = phi(&p("321654")).unwrap();
    check(f.to_string(), "312645", "phi(321654)")?;
    check(
        eval("foze2", &p("321654")).to_string(),
        "4",
        "foze''(321654)",
    )?;
    check(eval("inv", &f).to_string(), "4", "inv(312645)")?;
    check(
        lrmax(&p("321654")).to_string(),
        "{(1,3),(4,6)}",
        "Lrmax(321654)",
    )?;
    check(lrmax(&f).to_string(), "{(1,3),(4,6)}", "Lrmax(312645)")?;

    let s = psi(&p("32658741")).unwrap();
    check(s.to_string(), "31628457", "psi(32658741)")?;
    check(
        eval("foze2", &p("32658741")).to_string(),
        "8",
        "foze''(32658741)",
    )?;
    check(eval("inv", &s).to_string(), "8", "inv(31628457)")?;
    check(
        lrmax(&s).to_string(),
        "{(1,3),(3,6),(5,8)}",
        "Lrmax(31628457)",
    )?;

    let t = theta_prime(&p("7653124")).unwrap();
    check(t.to_string(), "7163254", "theta'(7653124)")?;
    check(asc_set(&p("7653124")).to_string(), "{5,6}", "Asc(7653124)")?;
    check(atop(&t).to_string(), "{5,6}", "Atop(7163254)")?;

    let asc_rows = [
        (vec![4, 2, 1], vec![7, 6, 5], "7653124"),
        (vec![4, 2], vec![6, 5], "654213"),
        (vec![4], vec![4], "4321"),
    ];
    let atop_rows = [
        (vec![4, 2, 1], vec![7, 6, 5], "7163254"),
        (vec![4, 1], vec![5, 4], "51432"),
        (vec![4], vec![4], "4321"),
    ];
    for (c, m, perm) in asc_rows {
        let cp = ConsistentPair::new(c, m).map_err(|e| e.to_string())?;
        check(build_asc_perm(&cp).to_string(), perm, "build from Asc")?;
        ensure(extract_consistent_pair(&p(perm)).unwrap() == cp, || {
            format!("extract Asc pair of {perm}")
        })?;
    }
    for (c, m, perm) in atop_rows {
        let cp = ConsistentPair::new(c, m).map_err(|e| e.to_string())?;
        check(build_atop_perm(&cp).to_string(), perm, "build from Atop")?;
        ensure(
            extract_atop_consistent_pair(&p(perm)).unwrap() == cp,
            || format!("extract Atop pair of {perm}"),
        )?;
    }
    check(
        theta_prime_inverse(&p("7163254")).unwrap().to_string(),
        "7653124",
        "theta' inverse",
    )?;

    let c = conjugate_cr(&p("4675321")).unwrap();
    check(c.to_string(), "4365271", "cr-conjugate(4675321)")?;
    check(
        des_set(&p("4675321")).to_string(),
        "{3,4,5,6}",
        "Des(4675321)",
    )?;
    check(
        dtop(&c).shifted_down().to_string(),
        "{3,4,5,6}",
        "Dtop(4365271)-1",
    )?;
    Ok("all pinned values reproduce".into())
}

fn c4_multistatistic_transport() -> Outcome {
    let mut checked = 0;
    for n in 0..=TRANSPORT_N_MAX {
        let prime = AvoidanceClass::avoiding_leading_max(p("231"), n)
            .unwrap()
            .members();
        let mut seen = HashSet::new();
        for q in &prime {
            let t = theta_prime(q).map_err(|e| e.to_string())?;
            ensure(t.first() == q.first() && avoids(&p("231"), &t), || {
                format!("theta'({q}) = {t} leaves Av'")
            })?;
            ensure(
                idr_partition(&t).sizes() == idr_partition(q).sizes(),
                || format!("run sizes on {q}"),
            )?;
            ensure(asc_set(q) == atop(&t), || format!("Asc/Atop on {q}"))?;
            ensure(rlmaxl(q) == rlmaxl(&t) && rlminl(q) == rlminl(&t), || {
                format!("Rlmaxl/Rlminl on {q}")
            })?;
            ensure(des_set(q) == dbot(&t), || format!("Des/Dbot on {q}"))?;
            ensure(seen.insert(t), || {
                format!("theta' not injective at n = {n}")
            })?;
            checked += 1;
        }
        for q in av("231", n) {
            let t = theta(&q).map_err(|e| e.to_string())?;
            let a = (des_set(&q), lrmax(&q), rlmaxl(&q), rlminl(&q));
            let b = (dbot(&t), lrmax(&t), rlmaxl(&t), rlminl(&t));
            ensure(a == b, || format!("theta transport fails on {q}"))?;
            checked += 1;
        }
        for q in av("312", n) {
            let c = conjugate_cr(&q).map_err(|e| e.to_string())?;
            ensure(avoids(&p("312"), &c), || {
                format!("cr-conjugate({q}) contains 312")
            })?;
            let a = (des_set(&q), rlmin(&q), lrminl(&q), lrmaxl(&q));
            let b = (dtop(&c).shifted_down(), rlmin(&c), lrminl(&c), lrmaxl(&c));
            ensure(a == b, || format!("cr-conjugate transport fails on {q}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations"))
}

fn failures(suites: &[&str], n_max: usize) -> Result<Vec<String>, String> {
    let mut bad = Vec::new();
    for s in suites {
        for o in run_suite(s, n_max).map_err(|e| e.to_string())? {
            if !o.passed() {
                bad.push(o.to_string());
            }
        }
    }
    Ok(bad)
}

fn c5_distribution_ledgers() -> Outcome {
    let start = Instant::now();
    let bad = failures(&["cor-maj-makl", "table1", "table2"], DISTRIBUTION_N_MAX)?;
    let elapsed = start.elapsed();
    ensure(bad.is_empty(), || bad.join("; "))?;
    ensure(elapsed < DISTRIBUTION_BUDGET, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{elapsed:.1?}"))
}

fn c6_negative_control() -> Outcome {
    let fm = Statistic::resolve_list("foze2,mad").unwrap();
    let mf = Statistic::resolve_list("mad,foze2").unwrap();
    let tally = |stats: &[Statistic], pat: &str, n: usize| {
        let class = AvoidanceClass::avoiding(p(pat), n).unwrap();
        permstat::distributions::distribution_of(&class, stats, 1)
            .counts()
            .clone()
    };
    let witness = (1..=NEGATIVE_CONTROL_N_MAX).find(|&n| {
        let left = tally(&fm, "312", n);
        left != tally(&fm, "231", n) && left != tally(&mf, "231", n)
    });
    let n = witness.ok_or_else(|| format!("no witness up to n = {NEGATIVE_CONTROL_N_MAX}"))?;
    let lines =
        run_suite("negative-controls", NEGATIVE_CONTROL_N_MAX).map_err(|e| e.to_string())?;
    let printed = format!("smallest witnessing n = {n}");
    ensure(lines.iter().all(|o| o.passed()), || {
        "negative-controls suite fails".into()
    })?;
    ensure(
        lines.iter().any(|o| o.to_string().contains(&printed)),
        || format!("verify does not print {printed:?}"),
    )?;
    Ok(printed)
}

fn c7_scanner_completeness() -> Outcome {
    let stats: Vec<Statistic> = registry()
        .iter()
        .map(|d| Statistic::resolve(d.alias()).unwrap())
        .collect();
    let patterns: Vec<Perm> = PATTERNS3.iter().map(|s| p(s)).collect();
    let start = Instant::now();
    let report = scan_quadruples(&stats, &patterns, SCAN_N_MAX).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for row in permstat::claims::ledger_rows() {
        let q = report
            .find(row.st1, row.st2, row.sigma, row.tau)
            .ok_or_else(|| {
                format!(
                    "missing ({},{};{},{})",
                    row.st1, row.st2, row.sigma, row.tau
                )
            })?;
        ensure(
            q.annotation == Annotation::Listed(row.suite.to_string()),
            || format!("{} not marked listed", q.label()),
        )?;
    }
    let stray: Vec<String> = report
        .quadruples
        .iter()
        .filter(|q| q.involves("foze2"))
        .filter(|q| matches!(q.annotation, Annotation::Independent))
        .map(|q| q.label())
        .collect();
    ensure(stray.is_empty(), || {
        format!("unexplained foze'' quadruples: {stray:?}")
    })?;
    ensure(elapsed < SCAN_BUDGET, || format!("took {elapsed:?}"))?;
    let foze = report
        .quadruples
        .iter()
        .filter(|q| q.involves("foze2"))
        .count();
    Ok(format!(
        "{} quadruples, {foze} involve foze'', {elapsed:.1?}",
        report.quadruples.len()
    ))
}

fn c8_oracles() -> Outcome {
    let mut patterns = Vec::new();
    for k in 1..=3 {
        for values in Perm::all(k) {
            for mask in 0..1usize << (k - 1) {
                let ties: Vec<usize> = (1..k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                patterns.push(VincularPattern::new(values.clone(), &ties).unwrap());
            }
        }
    }
    let mut compared = 0;
    for n in 0..=ORACLE_HOST_N_MAX {
        for host in Perm::all(n) {
            for pat in &patterns {
                let want = naive_count(pat.values().values(), &pat.adjacent(), host.values());
                let got = count_occurrences(pat, &host);
                ensure(got == want, || format!("{pat} in {host}: {got} vs {want}"))?;
                compared += 1;
            }
        }
    }
    for pat in PATTERNS3 {
        for n in 0..=CATALAN_N_MAX {
            let size = AvoidanceClass::avoiding(p(pat), n).unwrap().size() as u64;
            ensure(size == catalan(n), || format!("|Av_{n}({pat})| = {size}"))?;
        }
    }
    Ok(format!(
        "{compared} counts, Catalan through n = {CATALAN_N_MAX}"
    ))
}

fn c9_round_trips() -> Outcome {
    let mut checked = 0;
    for n in 0..=ROUND_TRIP_N_MAX {
        for q in av("231", n) {
            ensure(phi_inverse(&phi(&q).unwrap()).unwrap() == q, || {
                format!("phi round trip on {q}")
            })?;
            ensure(theta_inverse(&theta(&q).unwrap()).unwrap() == q, || {
                format!("theta round trip on {q}")
            })?;
            checked += 1;
        }
        for q in av("312", n) {
            ensure(psi_inverse(&psi(&q).unwrap()).unwrap() == q, || {
                format!("psi round trip on {q}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "1 phi transports (foze'', Lrmax) to (inv, Lrmax), n <= 9",
            c1_phi_transport,
        ),
        (
            "2 psi transports (foze'', Lrmax) into Av(321), n <= 9",
            c2_psi_transport,
        ),
        ("3 pinned examples", c3_pinned_examples),
        (
            "4 theta', theta and cr-conjugate multistatistic transport, n <= 9",
            c4_multistatistic_transport,
        ),
        (
            "5 maj/makl corollaries and both ledgers, n <= 9",
            c5_distribution_ledgers,
        ),
        (
            "6 negative control for (foze'', mad), n <= 8",
            c6_negative_control,
        ),
        (
            "7 scanner completeness at n_max = 8",
            c7_scanner_completeness,
        ),
        ("8 counting and enumeration oracles", c8_oracles),
        ("9 bijection round trips, n <= 8", c9_round_trips),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS  {name}  ({detail})"),
            Err(why) => {
                println!("FAIL  {name}  ({why})");
                failed.push(name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
