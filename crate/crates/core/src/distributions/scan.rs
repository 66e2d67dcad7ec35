//! Exhaustive search for equidistributed quadruples `(st₁, st₂; σ, τ)`:
//! `st₁` over `Av_n(σ)` has the same distribution as `st₂` over `Av_n(τ)`
//! for every `n ≤ n_max`.
//!
//! Each reported quadruple is annotated:
//! * `diagonal`: `(st, st; σ, σ)`;
//! * `listed`: a row of one of the known ledgers ([`crate::claims`]);
//! * `symmetry`: obtained from a single node or from a listed/earlier
//!   quadruple by applying `r`, `c` or `r∘c` to both classes, where the
//!   statistics are carried along by a registry correspondence
//!   `st(π) = st′(g(π))` checked on all of `S_n`, `n ≤ 7`;
//! * `independent`: none of the above.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::LazyLock;

use serde_json::json;

use super::{AvoidanceClass, DistributionTable, StatValue, Statistic, MAX_N};
use crate::claims::{ledger_rows, LedgerRow};
use crate::error::{Error, Result};
use crate::patterns::registry;
use crate::perm::Perm;

/// Per-length distributions of one node.
type Signature = Vec<BTreeMap<Vec<StatValue>, u64>>;

/// A statistic paired with the pattern whose avoiders it is measured on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub stat: Statistic,
    pub pattern: Perm,
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over Av({})", self.stat.name(), self.pattern)
    }
}

/// Trivial transformation applied to both classes of a quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Reverse => "r",
            Symmetry::Complement => "c",
            Symmetry::ReverseComplement => "r∘c",
        }
    }

    pub fn apply(self, p: &Perm) -> Perm {
        match self {
            Symmetry::Reverse => p.reverse(),
            Symmetry::Complement => p.complement(),
            Symmetry::ReverseComplement => p.reverse_complement(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Annotation {
    Diagonal,
    Listed(String),
    /// Image of a single node under the symmetry.
    NodeSymmetry(Symmetry),
    /// Image of another reported quadruple (given as its index in the report).
    Symmetry {
        via: Symmetry,
        source: usize,
    },
    Independent,
}

impl Annotation {
    pub fn kind(&self) -> &'static str {
        match self {
            Annotation::Diagonal => "diagonal",
            Annotation::Listed(_) => "listed",
            Annotation::NodeSymmetry(_) | Annotation::Symmetry { .. } => "symmetry",
            Annotation::Independent => "independent",
        }
    }

    /// Diagonal, listed or symmetry-derived.
    pub fn is_explained(&self) -> bool {
        !matches!(self, Annotation::Independent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    pub left: Node,
    pub right: Node,
    pub annotation: Annotation,
}

impl Quadruple {
    pub fn involves(&self, alias: &str) -> bool {
        self.left.stat.alias() == alias || self.right.stat.alias() == alias
    }

    /// `(st₁,st₂;σ,τ)` with display names.
    pub fn label(&self) -> String {
        format!(
            "({},{};{},{})",
            self.left.stat.name(),
            self.right.stat.name(),
            self.left.pattern,
            self.right.pattern
        )
    }

    fn note(&self, report: &ScanReport) -> String {
        match &self.annotation {
            Annotation::Diagonal => "diagonal".into(),
            Annotation::Listed(l) => format!("listed {l}"),
            Annotation::NodeSymmetry(g) => format!("symmetry {} of a single class", g.name()),
            Annotation::Symmetry { via, source } => {
                format!(
                    "symmetry {} of {}",
                    via.name(),
                    report.quadruples[*source].label()
                )
            }
            Annotation::Independent => "independent".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub n_max: usize,
    pub quadruples: Vec<Quadruple>,
    /// Groups of mutually equidistributed nodes, in node order.
    pub classes: Vec<Vec<Node>>,
}

impl ScanReport {
    pub fn find(&self, st1: &str, st2: &str, sigma: &str, tau: &str) -> Option<&Quadruple> {
        let want =
            |q: &Node, st: &str, pat: &str| q.stat.alias() == st && q.pattern.to_string() == pat;
        self.quadruples.iter().find(|q| {
            (want(&q.left, st1, sigma) && want(&q.right, st2, tau))
                || (want(&q.left, st2, tau) && want(&q.right, st1, sigma))
        })
    }

    pub fn to_plain(&self) -> String {
        let mut out = format!("# equidistributed quadruples, n = 1..{}\n", self.n_max);
        let width = self
            .quadruples
            .iter()
            .map(|q| q.label().chars().count())
            .max()
            .unwrap_or(0);
        for q in &self.quadruples {
            let label = q.label();
            let pad = width - label.chars().count();
            out.push_str(&format!("{label}{}  {}\n", " ".repeat(pad), q.note(self)));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["st1", "st2", "sigma", "tau", "annotation", "note"])
            .expect("in-memory write");
        for q in &self.quadruples {
            w.write_record([
                q.left.stat.alias(),
                q.right.stat.alias(),
                &q.left.pattern.to_string(),
                &q.right.pattern.to_string(),
                q.annotation.kind(),
                &q.note(self),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<_> = self
            .quadruples
            .iter()
            .map(|q| {
                json!({
                    "st1": { "alias": q.left.stat.alias(), "name": q.left.stat.name() },
                    "st2": { "alias": q.right.stat.alias(), "name": q.right.stat.name() },
                    "sigma": q.left.pattern.to_string(),
                    "tau": q.right.pattern.to_string(),
                    "annotation": q.annotation.kind(),
                    "note": q.note(self),
                })
            })
            .collect();
        let doc = json!({ "n_max": self.n_max, "quadruples": rows });
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    }
}

/// Registry correspondences `st(π) = st′(g(π))` on `S_n`, `n ≤ 7`, by alias.
static CORRESPONDENCES: LazyLock<HashMap<(Symmetry, String), String>> = LazyLock::new(|| {
    let mut out = HashMap::new();
    let perms: Vec<Perm> = (0..=7).flat_map(Perm::all).collect();
    for g in Symmetry::ALL {
        let images: Vec<Perm> = perms.iter().map(|p| g.apply(p)).collect();
        for a in registry().iter() {
            let values: Vec<u64> = perms.iter().map(|p| a.evaluate(p)).collect();
            if let Some(b) = registry()
                .iter()
                .find(|b| images.iter().zip(&values).all(|(q, &v)| b.evaluate(q) == v))
            {
                out.insert((g, a.alias().to_string()), b.alias().to_string());
            }
        }
    }
    out
});

fn node_image(node: &Node, g: Symmetry) -> Option<Node> {
    let Statistic::Pattern(_) = node.stat else {
        return None;
    };
    let alias = CORRESPONDENCES.get(&(g, node.stat.alias().to_string()))?;
    Some(Node {
        stat: Statistic::resolve(alias).ok()?,
        pattern: g.apply(&node.pattern),
    })
}

/// Runs the scan. Statistics and patterns are taken in the given order,
/// which fixes the order of nodes and of the report.
pub fn scan_quadruples(stats: &[Statistic], patterns: &[Perm], n_max: usize) -> Result<ScanReport> {
    if n_max > MAX_N {
        return Err(Error::BoundExceeded {
            n: n_max,
            bound: MAX_N,
        });
    }
    let mut nodes = Vec::new();
    for st in stats {
        for pat in patterns {
            nodes.push(Node {
                stat: *st,
                pattern: pat.clone(),
            });
        }
    }

    // the distribution signature of a node: one count map per n
    let members: HashMap<&Perm, Vec<Vec<Perm>>> = patterns
        .iter()
        .map(|pat| {
            let by_n = (1..=n_max)
                .map(|n| AvoidanceClass::avoiding(pat.clone(), n).map(|c| c.members()))
                .collect::<Result<Vec<_>>>()?;
            Ok((pat, by_n))
        })
        .collect::<Result<_>>()?;
    let signature = |node: &Node| -> Vec<BTreeMap<Vec<StatValue>, u64>> {
        members[&node.pattern]
            .iter()
            .enumerate()
            .map(|(i, perms)| {
                DistributionTable::tally("", i + 1, std::slice::from_ref(&node.stat), perms, 1)
                    .counts()
                    .clone()
            })
            .collect()
    };

    let mut groups: Vec<(Signature, Vec<usize>)> = Vec::new();
    for (i, node) in nodes.iter().enumerate() {
        let sig = signature(node);
        match groups.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, idx)) => idx.push(i),
            None => groups.push((sig, vec![i])),
        }
    }
    let group_of: HashMap<usize, usize> = groups
        .iter()
        .enumerate()
        .flat_map(|(g, (_, idx))| idx.iter().map(move |&i| (i, g)))
        .collect();

    let index_of = |node: &Node| nodes.iter().position(|n| n == node);
    let ledger = ledger_rows();
    let listed = |a: usize, b: usize| -> Option<(&LedgerRow, bool)> {
        ledger.iter().find_map(|row| {
            let (l, r) = (row.left_node(), row.right_node());
            if index_of(&l) == Some(a) && index_of(&r) == Some(b) {
                Some((row, false))
            } else if index_of(&l) == Some(b) && index_of(&r) == Some(a) {
                Some((row, true))
            } else {
                None
            }
        })
    };

    // pairs in node order
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..nodes.len() {
        for b in a..nodes.len() {
            if group_of[&a] == group_of[&b] {
                pairs.push((a, b));
            }
        }
    }
    let pair_pos: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut quadruples: Vec<Quadruple> = Vec::with_capacity(pairs.len());
    for (pos, &(a, b)) in pairs.iter().enumerate() {
        let (mut left, mut right) = (nodes[a].clone(), nodes[b].clone());
        let annotation = if a == b {
            Annotation::Diagonal
        } else if let Some((row, swapped)) = listed(a, b) {
            if swapped {
                std::mem::swap(&mut left, &mut right);
            }
            Annotation::Listed(row.citation())
        } else if let Some(g) = Symmetry::ALL
            .into_iter()
            .find(|&g| node_image(&nodes[a], g).as_ref() == Some(&nodes[b]))
        {
            Annotation::NodeSymmetry(g)
        } else {
            Symmetry::ALL
                .into_iter()
                .find_map(|g| {
                    let ia = index_of(&node_image(&nodes[a], g)?)?;
                    let ib = index_of(&node_image(&nodes[b], g)?)?;
                    let key = (ia.min(ib), ia.max(ib));
                    let source = *pair_pos.get(&key)?;
                    let source_listed = listed(key.0, key.1).is_some();
                    (source != pos && (source_listed || source < pos))
                        .then_some(Annotation::Symmetry { via: g, source })
                })
                .unwrap_or(Annotation::Independent)
        };
        quadruples.push(Quadruple {
            left,
            right,
            annotation,
        });
    }

    let classes = groups
        .into_iter()
        .map(|(_, idx)| idx.into_iter().map(|i| nodes[i].clone()).collect())
        .collect();
    Ok(ScanReport {
        n_max,
        quadruples,
        classes,
    })
}
