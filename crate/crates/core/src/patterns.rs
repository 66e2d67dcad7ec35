//! Classical and vincular pattern occurrence counting, and the registry of
//! pattern-based statistics.
//!
//! A vincular pattern is written with its adjacency-constrained letters in
//! brackets: `[31]2` requires the letters playing `3` and `1` to sit in
//! adjacent positions of the host, while `2` may appear anywhere to their
//! right. `1[32]`, `[21]` and `231` (classical) follow the same rule.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A pattern together with the set of underlined (adjacent) letter pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VincularPattern {
    values: Perm,
    /// `adjacent[i]` (0-based) means letters `i+1` and `i+2` of the pattern
    /// must be adjacent in the host.
    adjacent: Vec<bool>,
}

impl VincularPattern {
    /// `adjacent` lists 1-based indices `i` such that letters `i, i+1` are tied.
    pub fn new(values: Perm, adjacent: &[usize]) -> Result<Self> {
        let k = values.len();
        let fail = |reason: String| Error::ParsePattern {
            input: format!("{values}"),
            reason,
        };
        if k == 0 {
            return Err(fail("pattern must be non-empty".into()));
        }
        let mut adj = vec![false; k - 1];
        for &i in adjacent {
            if i == 0 || i >= k {
                return Err(fail(format!("adjacency index {i} outside 1..{k}")));
            }
            adj[i - 1] = true;
        }
        Ok(VincularPattern {
            values,
            adjacent: adj,
        })
    }

    /// Pattern with no adjacency constraints.
    pub fn classical(values: Perm) -> Self {
        let k = values.len().max(1);
        VincularPattern {
            values,
            adjacent: vec![false; k - 1],
        }
    }

    pub fn values(&self) -> &Perm {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based indices of tied letter pairs.
    pub fn adjacent(&self) -> Vec<usize> {
        self.adjacent
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| a.then_some(i + 1))
            .collect()
    }

    pub fn is_classical(&self) -> bool {
        !self.adjacent.iter().any(|&a| a)
    }

    /// Pattern `q` with `count(q, π) = count(self, r(π))`.
    pub fn reverse(&self) -> VincularPattern {
        VincularPattern {
            values: self.values.reverse(),
            adjacent: self.adjacent.iter().rev().copied().collect(),
        }
    }

    /// Pattern `q` with `count(q, π) = count(self, c(π))`.
    pub fn complement(&self) -> VincularPattern {
        VincularPattern {
            values: self.values.complement(),
            adjacent: self.adjacent.clone(),
        }
    }

    /// Number of occurrences of the pattern in `host`.
    pub fn count_in(&self, host: &Perm) -> u64 {
        count_occurrences(self, host)
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals = self.values.values();
        let comma = vals.len() > 9;
        let mut i = 0;
        while i < vals.len() {
            let mut j = i;
            while j < self.adjacent.len() && self.adjacent[j] {
                j += 1;
            }
            if comma && i > 0 {
                f.write_str(",")?;
            }
            if j > i {
                f.write_str("[")?;
            }
            for (t, v) in vals[i..=j].iter().enumerate() {
                if comma && t > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            if j > i {
                f.write_str("]")?;
            }
            i = j + 1;
        }
        Ok(())
    }
}

impl fmt::Debug for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VincularPattern({self})")
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    /// Parses `"[31]2"`, `"1[32]"`, `"[21]"`, `"231"`. Letters are single
    /// digits unless commas are used, as in `"[10,9],1,2,…"`.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePattern {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let text = s.trim();
        let mut values = Vec::new();
        let mut adjacent = Vec::new();
        let mut in_block = false;
        let mut block_len = 0usize;
        let use_commas = text.contains(',');
        let mut number = String::new();

        let flush = |number: &mut String,
                     values: &mut Vec<usize>,
                     adjacent: &mut Vec<usize>,
                     in_block: bool,
                     block_len: &mut usize|
         -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let v: usize = number.parse().map_err(|_| fail("bad letter"))?;
            number.clear();
            values.push(v);
            if in_block {
                if *block_len > 0 {
                    adjacent.push(values.len() - 1);
                }
                *block_len += 1;
            }
            Ok(())
        };

        for ch in text.chars() {
            match ch {
                '[' => {
                    flush(
                        &mut number,
                        &mut values,
                        &mut adjacent,
                        in_block,
                        &mut block_len,
                    )?;
                    if in_block {
                        return Err(fail("nested '['"));
                    }
                    in_block = true;
                    block_len = 0;
                }
                ']' => {
                    flush(
                        &mut number,
                        &mut values,
                        &mut adjacent,
                        in_block,
                        &mut block_len,
                    )?;
                    if !in_block {
                        return Err(fail("unmatched ']'"));
                    }
                    if block_len < 2 {
                        return Err(fail("a bracketed block needs at least two letters"));
                    }
                    in_block = false;
                }
                ',' => flush(
                    &mut number,
                    &mut values,
                    &mut adjacent,
                    in_block,
                    &mut block_len,
                )?,
                c if c.is_ascii_digit() => {
                    number.push(c);
                    if !use_commas {
                        flush(
                            &mut number,
                            &mut values,
                            &mut adjacent,
                            in_block,
                            &mut block_len,
                        )?;
                    }
                }
                c if c.is_whitespace() => {}
                _ => return Err(fail("unexpected character")),
            }
        }
        flush(
            &mut number,
            &mut values,
            &mut adjacent,
            in_block,
            &mut block_len,
        )?;
        if in_block {
            return Err(fail("unclosed '['"));
        }
        let perm = Perm::new(values).map_err(|e| fail(&e.to_string()))?;
        VincularPattern::new(perm, &adjacent)
    }
}

/// Counts index tuples `i_1 < … < i_k` of `host` order-isomorphic to the
/// pattern, with `i_{j+1} = i_j + 1` for each tied pair `j`.
///
/// The pattern is split into maximal tied blocks; each block is placed as a
/// contiguous factor and letters are checked against the already placed ones
/// as they are added, so a length-3 pattern with one tie costs `O(n²)`.
pub fn count_occurrences(pattern: &VincularPattern, host: &Perm) -> u64 {
    let k = pattern.len();
    let n = host.len();
    if k == 0 || k > n {
        return 0;
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..k {
        if i == k - 1 || !pattern.adjacent[i] {
            blocks.push(start..i + 1);
            start = i + 1;
        }
    }
    let mut chosen = vec![0usize; k];
    let pat = pattern.values.values();
    let mut remaining = vec![0usize; blocks.len() + 1];
    for b in (0..blocks.len()).rev() {
        remaining[b] = remaining[b + 1] + blocks[b].len();
    }
    place_blocks(pat, host.values(), &blocks, &remaining, 0, 0, &mut chosen)
}

fn place_blocks(
    pat: &[usize],
    host: &[usize],
    blocks: &[std::ops::Range<usize>],
    remaining: &[usize],
    b: usize,
    min_pos: usize,
    chosen: &mut [usize],
) -> u64 {
    if b == blocks.len() {
        return 1;
    }
    let block = blocks[b].clone();
    let last_start = host.len() - remaining[b];
    let mut total = 0;
    'starts: for s in min_pos..=last_start {
        for (offset, letter) in block.clone().enumerate() {
            let v = host[s + offset];
            for prev in 0..letter {
                if (pat[prev] < pat[letter]) != (chosen[prev] < v) {
                    continue 'starts;
                }
            }
            chosen[letter] = v;
        }
        total += place_blocks(pat, host, blocks, remaining, b + 1, s + block.len(), chosen);
    }
    total
}

/// Classical containment, stopping at the first occurrence.
pub fn contains(pattern: &Perm, host: &Perm) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > host.len() {
        return false;
    }
    let mut chosen = vec![0usize; k];
    find_classical(pattern.values(), host.values(), 0, 0, &mut chosen)
}

fn find_classical(
    pat: &[usize],
    host: &[usize],
    letter: usize,
    from: usize,
    chosen: &mut [usize],
) -> bool {
    let k = pat.len();
    if letter == k {
        return true;
    }
    let last = host.len() - (k - letter);
    'pos: for pos in from..=last {
        let v = host[pos];
        for prev in 0..letter {
            if (pat[prev] < pat[letter]) != (chosen[prev] < v) {
                continue 'pos;
            }
        }
        chosen[letter] = v;
        if find_classical(pat, host, letter + 1, pos + 1, chosen) {
            return true;
        }
    }
    false
}

/// Whether `seq` (distinct values) has an occurrence of the classical
/// pattern whose final letter is the last entry of `seq`.
pub(crate) fn occurs_ending_at_last(pattern: &[usize], seq: &[usize]) -> bool {
    let k = pattern.len();
    let Some((&last, body)) = seq.split_last() else {
        return false;
    };
    if k == 0 || k > seq.len() {
        return false;
    }
    let mut chosen = vec![0usize; k];
    chosen[k - 1] = last;
    find_prefix(pattern, body, 0, 0, &mut chosen)
}

fn find_prefix(
    pat: &[usize],
    body: &[usize],
    letter: usize,
    from: usize,
    chosen: &mut [usize],
) -> bool {
    let k = pat.len();
    if letter == k - 1 {
        return true;
    }
    let need = k - 1 - letter;
    if body.len() < from + need {
        return false;
    }
    'pos: for pos in from..=body.len() - need {
        let v = body[pos];
        if (pat[letter] < pat[k - 1]) != (v < chosen[k - 1]) {
            continue;
        }
        for prev in 0..letter {
            if (pat[prev] < pat[letter]) != (chosen[prev] < v) {
                continue 'pos;
            }
        }
        chosen[letter] = v;
        if find_prefix(pat, body, letter + 1, pos + 1, chosen) {
            return true;
        }
    }
    false
}

pub fn avoids(pattern: &Perm, host: &Perm) -> bool {
    !contains(pattern, host)
}

/// A statistic defined as a formal sum of vincular patterns. Repeated terms
/// are kept and counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatisticDef {
    name: String,
    alias: String,
    terms: Vec<VincularPattern>,
}

impl StatisticDef {
    pub fn new(
        name: impl Into<String>,
        alias: impl Into<String>,
        terms: Vec<VincularPattern>,
    ) -> Self {
        assert!(!terms.is_empty(), "a statistic needs at least one term");
        StatisticDef {
            name: name.into(),
            alias: alias.into(),
            terms,
        }
    }

    /// Display name, e.g. `foze″`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Shell-safe name, e.g. `foze2`.
    pub fn alias(&self) -> &str {
        &self.alias
    }

    pub fn terms(&self) -> &[VincularPattern] {
        &self.terms
    }

    pub fn evaluate(&self, p: &Perm) -> u64 {
        self.terms.iter().map(|t| count_occurrences(t, p)).sum()
    }

    /// The formal sum rendered as `[23]1+[31]2+[31]2+[21]`.
    pub fn formula(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

pub fn evaluate(stat: &StatisticDef, p: &Perm) -> u64 {
    stat.evaluate(p)
}

// (display name, ascii alias, terms)
const REGISTRY_ROWS: &[(&str, &str, &[&str])] = &[
    ("inv", "inv", &["[23]1", "[31]2", "[32]1", "[21]"]),
    ("maj", "maj", &["1[32]", "2[31]", "3[21]", "[21]"]),
    ("des", "des", &["[21]"]),
    ("mad", "mad", &["2[31]", "2[31]", "[31]2", "[21]"]),
    ("mak", "mak", &["1[32]", "[31]2", "[32]1", "[21]"]),
    ("makl", "makl", &["1[32]", "2[31]", "[32]1", "[21]"]),
    ("bast", "bast", &["[13]2", "[21]3", "[32]1", "[21]"]),
    ("bast′", "bast1", &["[13]2", "[31]2", "[32]1", "[21]"]),
    ("bast″", "bast2", &["1[32]", "3[12]", "3[21]", "[21]"]),
    ("foze", "foze", &["[21]3", "3[21]", "[13]2", "[21]"]),
    ("foze′", "foze1", &["1[32]", "2[31]", "2[31]", "[21]"]),
    ("foze″", "foze2", &["[23]1", "[31]2", "[31]2", "[21]"]),
    ("sist", "sist", &["[13]2", "[13]2", "2[13]", "[21]"]),
    ("sist′", "sist1", &["[13]2", "[13]2", "2[31]", "[21]"]),
    ("sist″", "sist2", &["[13]2", "2[31]", "2[31]", "[21]"]),
];

/// The named pattern statistics, in a fixed order.
#[derive(Debug)]
pub struct Registry {
    stats: Vec<StatisticDef>,
}

static REGISTRY: LazyLock<Registry> = LazyLock::new(|| Registry {
    stats: REGISTRY_ROWS
        .iter()
        .map(|(name, alias, terms)| {
            let terms = terms
                .iter()
                .map(|t| t.parse().expect("registry pattern literal"))
                .collect();
            StatisticDef::new(*name, *alias, terms)
        })
        .collect(),
});

pub fn registry() -> &'static Registry {
    &REGISTRY
}

impl Registry {
    pub fn iter(&self) -> impl Iterator<Item = &StatisticDef> {
        self.stats.iter()
    }

    pub fn len(&self) -> usize {
        self.stats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stats.is_empty()
    }

    /// Looks a statistic up by display name, ASCII alias, or the
    /// apostrophe spelling (`foze''`).
    pub fn get(&self, name: &str) -> Option<&StatisticDef> {
        let normalized = normalize_name(name);
        self.stats
            .iter()
            .find(|s| s.alias == normalized || s.name == name)
    }

    pub fn lookup(&self, name: &str) -> Result<&StatisticDef> {
        self.get(name)
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))
    }
}

fn normalize_name(name: &str) -> String {
    let trimmed = name.trim();
    let base = trimmed.trim_end_matches(['\'', '′', '″']);
    let suffix = &trimmed[base.len()..];
    let primes: usize = suffix.chars().map(|c| if c == '″' { 2 } else { 1 }).sum();
    match primes {
        0 => base.to_ascii_lowercase(),
        p => format!("{}{}", base.to_ascii_lowercase(), p),
    }
}
