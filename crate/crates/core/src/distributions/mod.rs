//! Pattern classes, joint distribution tables and equidistribution checks.

mod export;
pub mod scan;
mod statistic;

use std::collections::BTreeMap;
use std::fmt;

pub use scan::{scan_quadruples, Annotation, Node, Quadruple, ScanReport, Symmetry};
pub use statistic::{SetStat, StatValue, Statistic};

use crate::error::{Error, Result};
use crate::patterns::occurs_ending_at_last;
use crate::perm::Perm;

/// Hard ceiling on permutation length for enumeration.
pub const MAX_N: usize = 12;

/// `Av_n(σ)`, optionally restricted to permutations starting with `n`
/// (`Av′_n(σ)`), or all of `S_n` when no pattern is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceClass {
    pattern: Option<Perm>,
    n: usize,
    leading_max: bool,
}

impl AvoidanceClass {
    pub fn avoiding(pattern: Perm, n: usize) -> Result<Self> {
        Self::build(Some(pattern), n, false)
    }

    /// `Av′_n(σ)`: avoiders that begin with their maximum.
    pub fn avoiding_leading_max(pattern: Perm, n: usize) -> Result<Self> {
        Self::build(Some(pattern), n, true)
    }

    pub fn all(n: usize) -> Result<Self> {
        Self::build(None, n, false)
    }

    fn build(pattern: Option<Perm>, n: usize, leading_max: bool) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::BoundExceeded { n, bound: MAX_N });
        }
        if let Some(p) = &pattern {
            if p.is_empty() {
                return Err(Error::Empty(p.clone()));
            }
        }
        Ok(AvoidanceClass {
            pattern,
            n,
            leading_max,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> Option<&Perm> {
        self.pattern.as_ref()
    }

    /// Short label: `231`, `231'` or `all`.
    pub fn label(&self) -> String {
        match (&self.pattern, self.leading_max) {
            (None, false) => "all".to_string(),
            (None, true) => "all'".to_string(),
            (Some(p), false) => p.to_string(),
            (Some(p), true) => format!("{p}'"),
        }
    }

    /// Members in lexicographic order, produced by prefix-pruned backtracking.
    pub fn iter(&self) -> Avoiders {
        Avoiders {
            n: self.n,
            pattern: self.pattern.as_ref().map(|p| p.values().to_vec()),
            leading_max: self.leading_max,
            prefix: Vec::with_capacity(self.n),
            used: vec![false; self.n + 1],
            cursor: vec![1; self.n + 1],
            done: false,
        }
    }

    pub fn members(&self) -> Vec<Perm> {
        self.iter().collect()
    }

    pub fn size(&self) -> usize {
        self.iter().count()
    }
}

impl fmt::Display for AvoidanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.pattern, self.leading_max) {
            (None, _) => write!(f, "S_{}", self.n),
            (Some(p), false) => write!(f, "Av_{}({p})", self.n),
            (Some(p), true) => write!(f, "Av'_{}({p})", self.n),
        }
    }
}

/// `Av_n(σ)` in lexicographic order.
pub fn enumerate_class(pattern: &Perm, n: usize) -> Result<Avoiders> {
    Ok(AvoidanceClass::avoiding(pattern.clone(), n)?.iter())
}

/// Lazy depth-first generator of a class. A prefix is extended only while
/// it still avoids the pattern, so dead branches are cut early.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    pattern: Option<Vec<usize>>,
    leading_max: bool,
    prefix: Vec<usize>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    done: bool,
}

impl Avoiders {
    fn admissible(&mut self, v: usize) -> bool {
        if self.leading_max && self.prefix.is_empty() && v != self.n {
            return false;
        }
        match &self.pattern {
            None => true,
            Some(pat) => {
                self.prefix.push(v);
                let bad = occurs_ending_at_last(pat, &self.prefix);
                self.prefix.pop();
                !bad
            }
        }
    }

    fn pop(&mut self) {
        match self.prefix.pop() {
            Some(v) => self.used[v] = false,
            None => self.done = true,
        }
    }
}

impl Iterator for Avoiders {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        while !self.done {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Perm::from_vec_unchecked(self.prefix.clone());
                self.pop();
                return Some(out);
            }
            let start = self.cursor[depth];
            let found = (start..=self.n).find(|&v| !self.used[v] && self.admissible(v));
            match found {
                Some(v) => {
                    self.cursor[depth] = v + 1;
                    self.prefix.push(v);
                    self.used[v] = true;
                    self.cursor[depth + 1] = 1;
                }
                None => {
                    self.cursor[depth] = 1;
                    self.pop();
                }
            }
        }
        None
    }
}

/// Display name and shell-safe alias of one key component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaEntry {
    pub name: String,
    pub alias: String,
}

/// Joint counts of a tuple of statistics over one class of fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    schema: Vec<SchemaEntry>,
    n: usize,
    class_label: String,
    counts: BTreeMap<Vec<StatValue>, u64>,
}

impl DistributionTable {
    /// Tallies `stats` over `perms`, splitting the work over `workers`
    /// threads. Partial tables are merged by summing counts, so the result
    /// does not depend on the worker count.
    pub fn tally(
        class_label: impl Into<String>,
        n: usize,
        stats: &[Statistic],
        perms: &[Perm],
        workers: usize,
    ) -> Self {
        let counts = if workers <= 1 || perms.len() < 256 {
            count_keys(stats, perms)
        } else {
            parallel_counts(stats, perms, workers)
        };
        DistributionTable {
            schema: stats
                .iter()
                .map(|s| SchemaEntry {
                    name: s.name().to_string(),
                    alias: s.alias().to_string(),
                })
                .collect(),
            n,
            class_label: class_label.into(),
            counts,
        }
    }

    pub fn schema(&self) -> &[SchemaEntry] {
        &self.schema
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class_label(&self) -> &str {
        &self.class_label
    }

    pub fn counts(&self) -> &BTreeMap<Vec<StatValue>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, key: &[StatValue]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Convenience lookup for single integer statistics.
    pub fn get_int(&self, value: u64) -> u64 {
        self.get(&[StatValue::Int(value)])
    }

    /// First key (in table order) whose counts differ, if any.
    pub fn first_difference(
        &self,
        other: &DistributionTable,
    ) -> Option<(Vec<StatValue>, u64, u64)> {
        let mut keys: Vec<&Vec<StatValue>> =
            self.counts.keys().chain(other.counts.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.get(k), other.get(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

fn count_keys(stats: &[Statistic], perms: &[Perm]) -> BTreeMap<Vec<StatValue>, u64> {
    let mut counts = BTreeMap::new();
    for p in perms {
        let key: Vec<StatValue> = stats.iter().map(|s| s.evaluate(p)).collect();
        *counts.entry(key).or_insert(0) += 1;
    }
    counts
}

fn parallel_counts(
    stats: &[Statistic],
    perms: &[Perm],
    workers: usize,
) -> BTreeMap<Vec<StatValue>, u64> {
    use rayon::prelude::*;
    let chunk = perms.len().div_ceil(workers);
    let job = || {
        perms
            .par_chunks(chunk)
            .map(|c| count_keys(stats, c))
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    };
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(job),
        Err(_) => count_keys(stats, perms),
    }
}

/// Joint distribution of the named statistics over a class.
pub fn distribution(class: &AvoidanceClass, stats: &[&str]) -> Result<DistributionTable> {
    distribution_with_workers(class, stats, 1)
}

pub fn distribution_with_workers(
    class: &AvoidanceClass,
    stats: &[&str],
    workers: usize,
) -> Result<DistributionTable> {
    let resolved: Vec<Statistic> = stats
        .iter()
        .map(|s| Statistic::resolve(s))
        .collect::<Result<_>>()?;
    Ok(distribution_of(class, &resolved, workers))
}

pub fn distribution_of(
    class: &AvoidanceClass,
    stats: &[Statistic],
    workers: usize,
) -> DistributionTable {
    let members = class.members();
    DistributionTable::tally(class.label(), class.n(), stats, &members, workers)
}

/// Equal count maps. Tables must share `n` and key arity.
pub fn equidistributed(a: &DistributionTable, b: &DistributionTable) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::Incomparable(format!("lengths {} and {}", a.n, b.n)));
    }
    if a.schema.len() != b.schema.len() {
        return Err(Error::Incomparable(format!(
            "key arities {} and {}",
            a.schema.len(),
            b.schema.len()
        )));
    }
    Ok(a.counts == b.counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn av3_231() {
        let members: Vec<String> = enumerate_class(&p("231"), 3)
            .unwrap()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(members, ["123", "132", "213", "312", "321"]);
    }

    #[test]
    fn length_zero_and_one() {
        for pat in ["231", "1", "12"] {
            let class = AvoidanceClass::avoiding(p(pat), 0).unwrap();
            assert_eq!(class.members(), vec![Perm::empty()]);
        }
        assert_eq!(AvoidanceClass::avoiding(p("1"), 1).unwrap().size(), 0);
        assert_eq!(
            AvoidanceClass::avoiding(p("12"), 4).unwrap().members(),
            vec![Perm::decreasing(4)]
        );
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            AvoidanceClass::avoiding(p("231"), MAX_N + 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn leading_max_subclass() {
        let class = AvoidanceClass::avoiding_leading_max(p("231"), 4).unwrap();
        let members = class.members();
        assert!(members.iter().all(|q| q.first() == Some(4)));
        // Av'_n(231) is 4 ⊖ Av_3(231)
        assert_eq!(members.len(), 5);
        assert_eq!(class.label(), "231'");
    }

    #[test]
    fn inv_table_on_av3() {
        let class = AvoidanceClass::avoiding(p("231"), 3).unwrap();
        let t = distribution(&class, &["inv"]).unwrap();
        let rows: Vec<(String, u64)> = t
            .counts()
            .iter()
            .map(|(k, c)| (k[0].to_string(), *c))
            .collect();
        assert_eq!(
            rows,
            [
                ("0".into(), 1),
                ("1".into(), 2),
                ("2".into(), 1),
                ("3".into(), 1)
            ]
        );
        let f = distribution(&class, &["foze2"]).unwrap();
        assert!(equidistributed(&t, &f).unwrap());
    }

    #[test]
    fn empty_class_table() {
        let class = AvoidanceClass::avoiding(p("312"), 0).unwrap();
        let t = distribution(&class, &["maj"]).unwrap();
        assert_eq!(t.total(), 1);
        assert_eq!(t.get_int(0), 1);
    }

    #[test]
    fn incomparable_tables() {
        let c3 = AvoidanceClass::avoiding(p("231"), 3).unwrap();
        let c4 = AvoidanceClass::avoiding(p("231"), 4).unwrap();
        let a = distribution(&c3, &["inv"]).unwrap();
        let b = distribution(&c4, &["inv"]).unwrap();
        let c = distribution(&c3, &["inv", "maj"]).unwrap();
        assert!(equidistributed(&a, &b).is_err());
        assert!(equidistributed(&a, &c).is_err());
        assert!(distribution(&c3, &["nonsense"]).is_err());
    }

    #[test]
    fn worker_count_does_not_change_tables() {
        let class = AvoidanceClass::avoiding(p("132"), 8).unwrap();
        let one = distribution_with_workers(&class, &["foze2", "Lrmax"], 1).unwrap();
        let four = distribution_with_workers(&class, &["foze2", "Lrmax"], 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.to_json(), four.to_json());
    }
}
