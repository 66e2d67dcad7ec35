//! The claims manifest: every checked equidistribution and transport
//! statement, grouped into named suites, plus the runner used by
//! `permstat verify` and the acceptance tests.
//!
//! The README's claims table is rendered from the same data by
//! [`markdown_table`].

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::LazyLock;

use crate::bijections::{conjugate_cr, phi, psi, theta, theta_prime};
use crate::distributions::{AvoidanceClass, DistributionTable, Node, StatValue, Statistic, MAX_N};
use crate::error::{Error, Result};
use crate::patterns::{avoids, StatisticDef, VincularPattern};
use crate::perm::Perm;

/// Suite names accepted by [`run_suite`], in run order (`all` runs every one).
pub const SUITES: [&str; 13] = [
    "definitions",
    "thm1",
    "thm2",
    "cor1",
    "cor-mad",
    "cor-other",
    "thm4",
    "prop5",
    "prop6",
    "cor-maj-makl",
    "table1",
    "table2",
    "negative-controls",
];

/// Default upper length for targeted checks.
pub const DEFAULT_N_MAX: usize = 9;

/// A class of permutations of each length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    Av(&'static str),
    /// Avoiders beginning with their maximum.
    AvLeadingMax(&'static str),
}

impl ClassSpec {
    fn pattern(self) -> Perm {
        let (ClassSpec::Av(s) | ClassSpec::AvLeadingMax(s)) = self;
        s.parse().expect("manifest patterns are valid")
    }

    pub fn at(self, n: usize) -> Result<AvoidanceClass> {
        match self {
            ClassSpec::Av(_) => AvoidanceClass::avoiding(self.pattern(), n),
            ClassSpec::AvLeadingMax(_) => AvoidanceClass::avoiding_leading_max(self.pattern(), n),
        }
    }

    fn contains(self, p: &Perm) -> bool {
        let leading = match self {
            ClassSpec::Av(_) => true,
            ClassSpec::AvLeadingMax(_) => p.first() == Some(p.len()) || p.is_empty(),
        };
        leading && avoids(&self.pattern(), p)
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Av(s) => write!(f, "Av({s})"),
            ClassSpec::AvLeadingMax(s) => write!(f, "Av'({s})"),
        }
    }
}

/// A tuple of statistics measured over a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Side {
    pub stats: &'static [&'static str],
    pub class: ClassSpec,
}

impl Side {
    fn resolved(&self) -> Vec<Statistic> {
        self.stats
            .iter()
            .map(|s| Statistic::resolve(s).expect("manifest statistics resolve"))
            .collect()
    }

    fn tuple_label(&self) -> String {
        let names: Vec<String> = self
            .resolved()
            .iter()
            .map(|s| s.name().to_string())
            .collect();
        if names.len() == 1 {
            names[0].clone()
        } else {
            format!("({})", names.join(", "))
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.tuple_label(), self.class)
    }
}

const fn side(stats: &'static [&'static str], class: ClassSpec) -> Side {
    Side { stats, class }
}

#[derive(Debug, Clone, Copy)]
pub struct NamedMap {
    pub name: &'static str,
    pub apply: fn(&Perm) -> Result<Perm>,
}

#[derive(Debug, Clone)]
pub enum Check {
    /// `target(map(p)) = source(p)` for every `p` in the domain, and the map
    /// is a bijection onto the codomain.
    Transport {
        map: NamedMap,
        domain: ClassSpec,
        codomain: ClassSpec,
        source: &'static [&'static str],
        target: &'static [&'static str],
    },
    /// Equal joint distribution tables for every length.
    SameDistribution { left: Side, right: Side },
    /// `stat(p)` equals the sum of the set statistic `set(p)` on the class.
    SumOfSet {
        class: ClassSpec,
        stat: &'static str,
        set: &'static str,
    },
    /// Some length at which `left` differs from every one of `others`.
    Differs { left: Side, others: Vec<Side> },
    /// Some `p` with `map(map(p)) ≠ p`.
    NotInvolution { map: NamedMap, domain: ClassSpec },
    /// The registry statistic agrees with the written sum of patterns on
    /// all of `S_n` for `n ≤ DEFINITION_N_MAX`.
    Definition {
        stat: &'static str,
        formula: &'static str,
    },
}

/// Length cap for checks over all of `S_n`.
pub const DEFINITION_N_MAX: usize = 8;

/// Statistic definitions as sums of vincular patterns, transcribed
/// independently of the registry so that either copy can be checked
/// against the other.
pub const DEFINITIONS: [(&str, &str); 15] = [
    ("des", "[21]"),
    ("inv", "[23]1+[31]2+[32]1+[21]"),
    ("maj", "1[32]+2[31]+3[21]+[21]"),
    ("mad", "2[31]+2[31]+[31]2+[21]"),
    ("mak", "1[32]+[31]2+[32]1+[21]"),
    ("makl", "1[32]+2[31]+[32]1+[21]"),
    ("bast", "[13]2+[21]3+[32]1+[21]"),
    ("bast1", "[13]2+[31]2+[32]1+[21]"),
    ("bast2", "1[32]+3[12]+3[21]+[21]"),
    ("foze", "[21]3+3[21]+[13]2+[21]"),
    ("foze1", "1[32]+2[31]+2[31]+[21]"),
    ("foze2", "[23]1+[31]2+[31]2+[21]"),
    ("sist", "[13]2+[13]2+2[13]+[21]"),
    ("sist1", "[13]2+[13]2+2[31]+[21]"),
    ("sist2", "[13]2+2[31]+2[31]+[21]"),
];

/// Parses a formula such as `"[21]3+3[21]"` into its terms.
pub fn parse_formula(formula: &str) -> Result<Vec<VincularPattern>> {
    formula.split('+').map(|t| t.trim().parse()).collect()
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub suite: &'static str,
    pub check: Check,
}

impl Claim {
    pub fn statement(&self) -> String {
        match &self.check {
            Check::Transport {
                map,
                domain,
                codomain,
                source,
                target,
            } => {
                let s = side(source, *domain).tuple_label();
                let t = side(target, *codomain).tuple_label();
                format!(
                    "{} is a bijection {domain} -> {codomain} carrying {s} to {t}",
                    map.name
                )
            }
            Check::SameDistribution { left, right } => format!("{left} ~ {right}"),
            Check::SumOfSet { class, stat, set } => {
                format!("{stat} = sum of {set} on {class}")
            }
            Check::Differs { left, others } => {
                let rest: Vec<String> = others.iter().map(|o| o.to_string()).collect();
                format!("{left} differs from {}", rest.join(" and from "))
            }
            Check::NotInvolution { map, domain } => {
                format!("{} is not an involution on {domain}", map.name)
            }
            Check::Definition { stat, formula } => {
                let name = Statistic::resolve(stat)
                    .map(|s| s.name().to_string())
                    .unwrap_or_default();
                format!("{name} = {formula} on S_n, n <= {DEFINITION_N_MAX}")
            }
        }
    }

    fn kind(&self) -> &'static str {
        match self.check {
            Check::Transport { .. } => "pointwise transport",
            Check::SameDistribution { .. } => "equidistribution",
            Check::SumOfSet { .. } => "pointwise identity",
            Check::Differs { .. } => "inequality witness",
            Check::NotInvolution { .. } => "counterexample witness",
            Check::Definition { .. } => "definition",
        }
    }
}

/// One row of the published equidistribution ledgers: `st₁` over `Av(σ)`
/// has the same distribution as `st₂` over `Av(τ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LedgerRow {
    pub suite: &'static str,
    pub st1: &'static str,
    pub st2: &'static str,
    pub sigma: &'static str,
    pub tau: &'static str,
}

impl LedgerRow {
    pub fn left_node(&self) -> Node {
        Node {
            stat: Statistic::resolve(self.st1).expect("ledger statistic"),
            pattern: self.sigma.parse().expect("ledger pattern"),
        }
    }

    pub fn right_node(&self) -> Node {
        Node {
            stat: Statistic::resolve(self.st2).expect("ledger statistic"),
            pattern: self.tau.parse().expect("ledger pattern"),
        }
    }

    pub fn citation(&self) -> String {
        self.suite.to_string()
    }
}

const fn row(
    suite: &'static str,
    st1: &'static str,
    st2: &'static str,
    sigma: &'static str,
    tau: &'static str,
) -> LedgerRow {
    LedgerRow {
        suite,
        st1,
        st2,
        sigma,
        tau,
    }
}

static LEDGER: [LedgerRow; 31] = [
    row("table1", "inv", "foze2", "231", "231"),
    row("table1", "inv", "foze2", "321", "312"),
    row("table1", "inv", "foze2", "312", "231"),
    row("table1", "mad", "foze2", "231", "312"),
    row("table1", "mad", "foze2", "312", "231"),
    row("table1", "foze1", "foze2", "132", "231"),
    row("table1", "sist", "foze2", "213", "231"),
    row("table1", "sist", "foze2", "132", "312"),
    row("table1", "sist1", "foze2", "132", "312"),
    row("table1", "sist1", "foze2", "231", "231"),
    row("table1", "sist2", "foze2", "132", "231"),
    row("table1", "sist2", "foze2", "231", "312"),
    row("table2", "maj", "makl", "231", "231"),
    row("table2", "maj", "makl", "132", "231"),
    row("table2", "maj", "makl", "312", "312"),
    row("table2", "maj", "makl", "213", "312"),
    row("table2", "mak", "makl", "132", "231"),
    row("table2", "mak", "makl", "312", "231"),
    row("table2", "mak", "makl", "213", "312"),
    row("table2", "mak", "makl", "231", "312"),
    row("table2", "bast1", "makl", "132", "231"),
    row("table2", "bast2", "makl", "231", "312"),
    row("table2", "foze", "makl", "132", "231"),
    row("table2", "foze", "makl", "231", "312"),
    row("table2", "bast", "makl", "213", "231"),
    row("table2", "bast", "makl", "231", "312"),
    row("table2", "mak", "bast", "132", "213"),
    row("table2", "mak", "bast", "312", "213"),
    row("table2", "mak", "bast", "213", "231"),
    row("table2", "mak", "bast", "231", "231"),
    row("table2", "bast2", "bast", "231", "231"),
];

/// Both ledgers, foze″ rows first.
pub fn ledger_rows() -> &'static [LedgerRow] {
    &LEDGER
}

const PHI: NamedMap = NamedMap {
    name: "phi",
    apply: phi,
};
const PSI: NamedMap = NamedMap {
    name: "psi",
    apply: psi,
};
const THETA_PRIME: NamedMap = NamedMap {
    name: "theta'",
    apply: theta_prime,
};
const THETA: NamedMap = NamedMap {
    name: "theta",
    apply: theta,
};
const CR_CONJUGATE: NamedMap = NamedMap {
    name: "cr-conjugate",
    apply: conjugate_cr,
};

use ClassSpec::{Av, AvLeadingMax};

fn same(suite: &'static str, left: Side, right: Side) -> Claim {
    Claim {
        suite,
        check: Check::SameDistribution { left, right },
    }
}

fn ledger_claim(suite: &'static str, r: &'static LedgerRow) -> Claim {
    same(
        suite,
        side(std::slice::from_ref(&r.st1), Av(r.sigma)),
        side(std::slice::from_ref(&r.st2), Av(r.tau)),
    )
}

fn ledger_suite_claims(
    ledger_suite: &str,
    suite: &'static str,
    keep: impl Fn(&'static LedgerRow) -> bool,
) -> Vec<Claim> {
    LEDGER
        .iter()
        .filter(|r| r.suite == ledger_suite && keep(r))
        .map(|r| ledger_claim(suite, r))
        .collect()
}

static MANIFEST: LazyLock<Vec<Claim>> = LazyLock::new(|| {
    let mut m: Vec<Claim> = DEFINITIONS
        .iter()
        .map(|&(stat, formula)| Claim {
            suite: "definitions",
            check: Check::Definition { stat, formula },
        })
        .collect();
    m.extend([
        Claim {
            suite: "thm1",
            check: Check::Transport {
                map: PHI,
                domain: Av("231"),
                codomain: Av("231"),
                source: &["foze2", "Lrmax"],
                target: &["inv", "Lrmax"],
            },
        },
        same(
            "thm1",
            side(&["foze2", "Lrmax"], Av("231")),
            side(&["inv", "Lrmax"], Av("231")),
        ),
        Claim {
            suite: "thm2",
            check: Check::Transport {
                map: PSI,
                domain: Av("312"),
                codomain: Av("321"),
                source: &["foze2", "Lrmax"],
                target: &["inv", "Lrmax"],
            },
        },
        same(
            "thm2",
            side(&["foze2", "Lrmax"], Av("312")),
            side(&["inv", "Lrmax"], Av("321")),
        ),
    ]);
    m.extend(ledger_suite_claims("table1", "cor1", |r| {
        r.st1 == "inv" && r.sigma == "312"
    }));
    m.extend(ledger_suite_claims("table1", "cor-mad", |r| r.st1 == "mad"));
    m.extend(ledger_suite_claims("table1", "cor-other", |r| {
        r.st1.starts_with("foze") || r.st1.starts_with("sist")
    }));
    m.extend([
        Claim {
            suite: "thm4",
            check: Check::Transport {
                map: THETA_PRIME,
                domain: AvLeadingMax("231"),
                codomain: AvLeadingMax("231"),
                source: &["Idr", "Asc", "Rlmaxl", "Rlminl"],
                target: &["Idr", "Atop", "Rlmaxl", "Rlminl"],
            },
        },
        Claim {
            suite: "thm4",
            check: Check::Transport {
                map: THETA_PRIME,
                domain: AvLeadingMax("231"),
                codomain: AvLeadingMax("231"),
                source: &["Des"],
                target: &["Dbot"],
            },
        },
        same(
            "thm4",
            side(&["Des", "Rlmaxl", "Rlminl"], AvLeadingMax("231")),
            side(&["Dbot", "Rlmaxl", "Rlminl"], AvLeadingMax("231")),
        ),
        Claim {
            suite: "prop5",
            check: Check::Transport {
                map: THETA,
                domain: Av("231"),
                codomain: Av("231"),
                source: &["Des", "Lrmax", "Rlmaxl", "Rlminl"],
                target: &["Dbot", "Lrmax", "Rlmaxl", "Rlminl"],
            },
        },
        same(
            "prop5",
            side(&["Des", "Lrmax", "Rlmaxl", "Rlminl"], Av("231")),
            side(&["Dbot", "Lrmax", "Rlmaxl", "Rlminl"], Av("231")),
        ),
        Claim {
            suite: "prop6",
            check: Check::Transport {
                map: CR_CONJUGATE,
                domain: Av("312"),
                codomain: Av("312"),
                source: &["Des", "Rlmin", "Lrminl", "Lrmaxl"],
                target: &["Dtop-1", "Rlmin", "Lrminl", "Lrmaxl"],
            },
        },
        same(
            "prop6",
            side(&["Des", "Rlmin", "Lrminl", "Lrmaxl"], Av("312")),
            side(&["Dtop-1", "Rlmin", "Lrminl", "Lrmaxl"], Av("312")),
        ),
        Claim {
            suite: "cor-maj-makl",
            check: Check::SumOfSet {
                class: Av("231"),
                stat: "makl",
                set: "Dbot",
            },
        },
        Claim {
            suite: "cor-maj-makl",
            check: Check::SumOfSet {
                class: Av("312"),
                stat: "makl",
                set: "Dtop-1",
            },
        },
    ]);
    m.extend(ledger_suite_claims("table2", "cor-maj-makl", |r| {
        r.st1 == "maj"
    }));
    m.extend(ledger_suite_claims("table1", "table1", |_| true));
    m.extend(ledger_suite_claims("table2", "table2", |_| true));
    let fm: &'static [&'static str] = &["foze2", "mad"];
    let mf: &'static [&'static str] = &["mad", "foze2"];
    m.push(Claim {
        suite: "negative-controls",
        check: Check::Differs {
            left: side(fm, Av("312")),
            others: vec![side(fm, Av("231")), side(mf, Av("231"))],
        },
    });
    m.push(Claim {
        suite: "negative-controls",
        check: Check::NotInvolution {
            map: PHI,
            domain: Av("231"),
        },
    });
    m
});

pub fn manifest() -> &'static [Claim] {
    &MANIFEST
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass(Option<String>),
    Fail(String),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub claim: &'static Claim,
    pub n_max: usize,
    pub status: Status,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag}  {:<17} {}  [n=1..{}]",
            self.claim.suite,
            self.claim.statement(),
            self.n_max
        )?;
        match &self.status {
            Status::Pass(Some(note)) => write!(f, "  {note}"),
            Status::Pass(None) => Ok(()),
            Status::Fail(why) => write!(f, "\n      counterexample: {why}"),
        }
    }
}

/// Runs the claims of one suite (or `all`) for lengths `1..=n_max`.
pub fn run_suite(suite: &str, n_max: usize) -> Result<Vec<Outcome>> {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Error::UnknownSuite(suite.to_string()));
    }
    if n_max > MAX_N {
        return Err(Error::BoundExceeded {
            n: n_max,
            bound: MAX_N,
        });
    }
    let mut runner = Runner::default();
    manifest()
        .iter()
        .filter(|c| suite == "all" || c.suite == suite)
        .map(|claim| {
            Ok(Outcome {
                claim,
                n_max,
                status: runner.check(claim, n_max)?,
            })
        })
        .collect()
}

/// Markdown table of every claim, grouped by suite.
pub fn markdown_table() -> String {
    let mut out = String::from("| suite | kind | claim |\n|---|---|---|\n");
    for suite in SUITES {
        for c in manifest().iter().filter(|c| c.suite == suite) {
            out.push_str(&format!(
                "| `{}` | {} | {} |\n",
                c.suite,
                c.kind(),
                c.statement()
            ));
        }
    }
    out
}

#[derive(Default)]
struct Runner {
    members: HashMap<(ClassSpec, usize), Vec<Perm>>,
}

impl Runner {
    fn members(&mut self, class: ClassSpec, n: usize) -> Result<&[Perm]> {
        use std::collections::hash_map::Entry;
        match self.members.entry((class, n)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(class.at(n)?.members())),
        }
    }

    fn table(&mut self, s: &Side, n: usize) -> Result<DistributionTable> {
        let stats = s.resolved();
        let label = s.class.to_string();
        let perms = self.members(s.class, n)?;
        Ok(DistributionTable::tally(label, n, &stats, perms, 1))
    }

    fn check(&mut self, claim: &Claim, n_max: usize) -> Result<Status> {
        match &claim.check {
            Check::Transport {
                map,
                domain,
                codomain,
                source,
                target,
            } => {
                let src: Vec<Statistic> = side(source, *domain).resolved();
                let tgt: Vec<Statistic> = side(target, *codomain).resolved();
                for n in 1..=n_max {
                    let codomain_size = self.members(*codomain, n)?.len();
                    let perms = self.members(*domain, n)?.to_vec();
                    let mut seen = HashSet::with_capacity(perms.len());
                    for p in &perms {
                        let q = match (map.apply)(p) {
                            Ok(q) => q,
                            Err(e) => return Ok(Status::Fail(format!("{} {p}: {e}", map.name))),
                        };
                        if !codomain.contains(&q) {
                            return Ok(Status::Fail(format!(
                                "{}({p}) = {q} is not in {codomain}",
                                map.name
                            )));
                        }
                        let a: Vec<StatValue> = src.iter().map(|s| s.evaluate(p)).collect();
                        let b: Vec<StatValue> = tgt.iter().map(|s| s.evaluate(&q)).collect();
                        if a != b {
                            return Ok(Status::Fail(format!(
                                "p = {p}, {}(p) = {q}: {} vs {}",
                                map.name,
                                render(&a),
                                render(&b)
                            )));
                        }
                        if !seen.insert(q.clone()) {
                            return Ok(Status::Fail(format!(
                                "{} is not injective: repeated image {q}",
                                map.name
                            )));
                        }
                    }
                    if seen.len() != codomain_size {
                        return Ok(Status::Fail(format!(
                            "n = {n}: image has {} elements, codomain has {codomain_size}",
                            seen.len()
                        )));
                    }
                }
                Ok(Status::Pass(None))
            }
            Check::SameDistribution { left, right } => {
                for n in 1..=n_max {
                    let (a, b) = (self.table(left, n)?, self.table(right, n)?);
                    if let Some((key, x, y)) = a.first_difference(&b) {
                        let stats = left.resolved();
                        let witness = self
                            .members(left.class, n)?
                            .iter()
                            .find(|p| {
                                stats.iter().map(|s| s.evaluate(p)).collect::<Vec<_>>() == key
                            })
                            .map(|p| format!(", e.g. {p} in {}", left.class))
                            .unwrap_or_default();
                        return Ok(Status::Fail(format!(
                            "n = {n}: value {} occurs {x} vs {y} times{witness}",
                            render(&key)
                        )));
                    }
                }
                Ok(Status::Pass(None))
            }
            Check::SumOfSet { class, stat, set } => {
                let st = Statistic::resolve(stat)?;
                let set_stat = Statistic::resolve(set)?;
                for n in 1..=n_max {
                    for p in self.members(*class, n)? {
                        let lhs = st.evaluate(p);
                        let rhs = match set_stat.evaluate(p) {
                            StatValue::Set(s) => s.sum(),
                            other => unreachable!("{set} is set-valued, got {other}"),
                        };
                        if lhs != StatValue::Int(rhs) {
                            return Ok(Status::Fail(format!(
                                "p = {p}: {stat} = {lhs}, sum = {rhs}"
                            )));
                        }
                    }
                }
                Ok(Status::Pass(None))
            }
            Check::Differs { left, others } => {
                for n in 1..=n_max {
                    let a = self.table(left, n)?;
                    let mut all_differ = true;
                    for o in others {
                        let b = self.table(o, n)?;
                        if a.counts() == b.counts() {
                            all_differ = false;
                        }
                    }
                    if all_differ {
                        return Ok(Status::Pass(Some(format!("smallest witnessing n = {n}"))));
                    }
                }
                Ok(Status::Fail(format!(
                    "no length up to {n_max} separates the distributions"
                )))
            }
            Check::NotInvolution { map, domain } => {
                for n in 1..=n_max {
                    for p in self.members(*domain, n)? {
                        let q = (map.apply)(p)?;
                        let back = (map.apply)(&q)?;
                        if &back != p {
                            return Ok(Status::Pass(Some(format!(
                                "witness {p} -> {q} -> {back} (n = {n})"
                            ))));
                        }
                    }
                }
                Ok(Status::Fail(format!(
                    "{} is an involution up to n = {n_max}",
                    map.name
                )))
            }
            Check::Definition { stat, formula } => {
                let st = Statistic::resolve(stat)?;
                let written = StatisticDef::new(*stat, *stat, parse_formula(formula)?);
                for n in 1..=n_max.min(DEFINITION_N_MAX) {
                    for p in Perm::all(n) {
                        let (a, b) = (st.evaluate(&p), written.evaluate(&p));
                        if a != StatValue::Int(b) {
                            return Ok(Status::Fail(format!(
                                "p = {p}: registry gives {a}, formula gives {b}"
                            )));
                        }
                    }
                }
                Ok(Status::Pass(None))
            }
        }
    }
}

fn render(values: &[StatValue]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_has_claims() {
        for s in SUITES {
            assert!(manifest().iter().any(|c| c.suite == s), "{s}");
        }
        assert_eq!(
            manifest().iter().filter(|c| c.suite == "table1").count(),
            12
        );
        assert_eq!(
            manifest().iter().filter(|c| c.suite == "table2").count(),
            19
        );
        assert_eq!(
            manifest()
                .iter()
                .filter(|c| c.suite == "definitions")
                .count(),
            15
        );
    }

    #[test]
    fn ledger_nodes_resolve() {
        for r in ledger_rows() {
            r.left_node();
            r.right_node();
        }
    }

    #[test]
    fn small_suites_pass() {
        for s in ["definitions", "thm1", "thm2", "cor1", "prop6"] {
            for o in run_suite(s, 6).unwrap() {
                assert!(o.passed(), "{o}");
            }
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("thm9", 3), Err(Error::UnknownSuite(_))));
        assert!(matches!(
            run_suite("thm1", MAX_N + 1),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
