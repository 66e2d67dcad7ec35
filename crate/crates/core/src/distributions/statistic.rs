//! Name resolution for integer- and set-valued statistics.

use std::fmt;

use crate::error::{Error, Result};
use crate::patterns::{registry, StatisticDef};
use crate::perm::Perm;
use crate::set_stats::{self, IntSet, PointSet};

/// A set-valued (or sequence-valued) statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetStat {
    Des,
    Asc,
    Dtop,
    /// `{x - 1 : x ∈ Dtop}`
    DtopMinusOne,
    Dbot,
    Atop,
    Lrmax,
    Lrmin,
    Rlmax,
    Rlmin,
    Lrmaxl,
    Lrminl,
    Rlmaxl,
    Rlminl,
    /// Sizes of the inverse descent runs, ordered by decreasing largest position.
    IdrSizes,
}

impl SetStat {
    pub const ALL: [SetStat; 15] = [
        SetStat::Des,
        SetStat::Asc,
        SetStat::Dtop,
        SetStat::DtopMinusOne,
        SetStat::Dbot,
        SetStat::Atop,
        SetStat::Lrmax,
        SetStat::Lrmin,
        SetStat::Rlmax,
        SetStat::Rlmin,
        SetStat::Lrmaxl,
        SetStat::Lrminl,
        SetStat::Rlmaxl,
        SetStat::Rlminl,
        SetStat::IdrSizes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetStat::Des => "Des",
            SetStat::Asc => "Asc",
            SetStat::Dtop => "Dtop",
            SetStat::DtopMinusOne => "Dtop-1",
            SetStat::Dbot => "Dbot",
            SetStat::Atop => "Atop",
            SetStat::Lrmax => "Lrmax",
            SetStat::Lrmin => "Lrmin",
            SetStat::Rlmax => "Rlmax",
            SetStat::Rlmin => "Rlmin",
            SetStat::Lrmaxl => "Lrmaxl",
            SetStat::Lrminl => "Lrminl",
            SetStat::Rlmaxl => "Rlmaxl",
            SetStat::Rlminl => "Rlminl",
            SetStat::IdrSizes => "Idr",
        }
    }

    pub fn evaluate(self, p: &Perm) -> StatValue {
        use set_stats::*;
        match self {
            SetStat::Des => StatValue::Set(des_set(p)),
            SetStat::Asc => StatValue::Set(asc_set(p)),
            SetStat::Dtop => StatValue::Set(dtop(p)),
            SetStat::DtopMinusOne => StatValue::Set(dtop(p).shifted_down()),
            SetStat::Dbot => StatValue::Set(dbot(p)),
            SetStat::Atop => StatValue::Set(atop(p)),
            SetStat::Lrmax => StatValue::Points(lrmax(p)),
            SetStat::Lrmin => StatValue::Points(lrmin(p)),
            SetStat::Rlmax => StatValue::Points(rlmax(p)),
            SetStat::Rlmin => StatValue::Points(rlmin(p)),
            SetStat::Lrmaxl => StatValue::Set(lrmaxl(p)),
            SetStat::Lrminl => StatValue::Set(lrminl(p)),
            SetStat::Rlmaxl => StatValue::Set(rlmaxl(p)),
            SetStat::Rlminl => StatValue::Set(rlminl(p)),
            SetStat::IdrSizes => StatValue::Seq(idr_partition(p).sizes()),
        }
    }
}

/// One value of a statistic; the ordering is total so tables sort stably.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatValue {
    Int(u64),
    Set(IntSet),
    Points(PointSet),
    Seq(Vec<usize>),
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(x) => write!(f, "{x}"),
            StatValue::Set(s) => write!(f, "{s}"),
            StatValue::Points(s) => write!(f, "{s}"),
            StatValue::Seq(xs) => {
                f.write_str("(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A resolved statistic name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Pattern(&'static StatisticDef),
    Set(SetStat),
}

impl Statistic {
    /// Resolution order: exact set-statistic name (`Des`), then the pattern
    /// registry (case-insensitive, aliases and primes accepted), then
    /// set-statistic names case-insensitively (`lrmax`).
    pub fn resolve(name: &str) -> Result<Statistic> {
        let trimmed = name.trim();
        if let Some(s) = SetStat::ALL.into_iter().find(|s| s.name() == trimmed) {
            return Ok(Statistic::Set(s));
        }
        if let Some(def) = registry().get(trimmed) {
            return Ok(Statistic::Pattern(def));
        }
        SetStat::ALL
            .into_iter()
            .find(|s| s.name().eq_ignore_ascii_case(trimmed))
            .map(Statistic::Set)
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))
    }

    /// Resolves a comma-separated list such as `"foze2,Lrmax"`.
    pub fn resolve_list(names: &str) -> Result<Vec<Statistic>> {
        names
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(Statistic::resolve)
            .collect()
    }

    pub fn name(&self) -> &str {
        match self {
            Statistic::Pattern(def) => def.name(),
            Statistic::Set(s) => s.name(),
        }
    }

    pub fn alias(&self) -> &str {
        match self {
            Statistic::Pattern(def) => def.alias(),
            Statistic::Set(s) => s.name(),
        }
    }

    pub fn evaluate(&self, p: &Perm) -> StatValue {
        match self {
            Statistic::Pattern(def) => StatValue::Int(def.evaluate(p)),
            Statistic::Set(s) => s.evaluate(p),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
