//! Set-valued statistics: descent and ascent data, left-to-right and
//! right-to-left extrema, and inverse descent runs.

use std::fmt;

use crate::perm::Perm;

/// Sorted, duplicate-free set of positive integers. Used both for sets of
/// positions (`Des`, `Asc`) and sets of values (`Dtop`, `Lrmaxl`, …).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntSet(Vec<usize>);

pub type PositionSet = IntSet;
pub type ValueSet = IntSet;

impl IntSet {
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        IntSet(elements)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// `{x - 1 : x ∈ self}`, dropping a would-be 0.
    pub fn shifted_down(&self) -> IntSet {
        IntSet(self.0.iter().filter(|&&x| x > 0).map(|&x| x - 1).collect())
    }

    /// `{m - x : x ∈ self}`.
    pub fn reflected(&self, m: usize) -> IntSet {
        IntSet::new(self.0.iter().map(|&x| m - x).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<usize> for IntSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IntSet::new(iter.into_iter().collect())
    }
}

/// Set of `(position, value)` pairs sorted by position.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(Vec<(usize, usize)>);

impl PointSet {
    pub fn new(mut points: Vec<(usize, usize)>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointSet(points)
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positions(&self) -> IntSet {
        self.0.iter().map(|&(i, _)| i).collect()
    }

    pub fn letters(&self) -> IntSet {
        self.0.iter().map(|&(_, v)| v).collect()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, v)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({i},{v})")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn des_set(p: &Perm) -> PositionSet {
    let v = p.values();
    IntSet((1..v.len()).filter(|&i| v[i - 1] > v[i]).collect())
}

pub fn asc_set(p: &Perm) -> PositionSet {
    let v = p.values();
    IntSet((1..v.len()).filter(|&i| v[i - 1] < v[i]).collect())
}

pub fn dtop(p: &Perm) -> ValueSet {
    let v = p.values();
    v.windows(2).filter(|w| w[0] > w[1]).map(|w| w[0]).collect()
}

pub fn dbot(p: &Perm) -> ValueSet {
    let v = p.values();
    v.windows(2).filter(|w| w[0] > w[1]).map(|w| w[1]).collect()
}

pub fn atop(p: &Perm) -> ValueSet {
    let v = p.values();
    v.windows(2).filter(|w| w[0] < w[1]).map(|w| w[1]).collect()
}

fn scan_extrema(p: &Perm, from_left: bool, maxima: bool) -> PointSet {
    let v = p.values();
    let n = v.len();
    let mut best: Option<usize> = None;
    let mut points = Vec::new();
    let order: Box<dyn Iterator<Item = usize>> = if from_left {
        Box::new(0..n)
    } else {
        Box::new((0..n).rev())
    };
    for i in order {
        let better = match best {
            None => true,
            Some(b) => (maxima && v[i] > b) || (!maxima && v[i] < b),
        };
        if better {
            best = Some(v[i]);
            points.push((i + 1, v[i]));
        }
    }
    PointSet::new(points)
}

pub fn lrmax(p: &Perm) -> PointSet {
    scan_extrema(p, true, true)
}

pub fn lrmin(p: &Perm) -> PointSet {
    scan_extrema(p, true, false)
}

pub fn rlmax(p: &Perm) -> PointSet {
    scan_extrema(p, false, true)
}

pub fn rlmin(p: &Perm) -> PointSet {
    scan_extrema(p, false, false)
}

pub fn lrmaxl(p: &Perm) -> ValueSet {
    lrmax(p).letters()
}

pub fn lrminl(p: &Perm) -> ValueSet {
    lrmin(p).letters()
}

pub fn rlmaxl(p: &Perm) -> ValueSet {
    rlmax(p).letters()
}

pub fn rlminl(p: &Perm) -> ValueSet {
    rlmin(p).letters()
}

/// Inverse descent runs ordered by decreasing largest element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdrPartition {
    blocks: Vec<PositionSet>,
}

impl IdrPartition {
    pub fn blocks(&self) -> &[PositionSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(IntSet::len).collect()
    }
}

impl fmt::Debug for IdrPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.blocks).finish()
    }
}

/// Maximal position sets whose values read `v, v-1, …` left to right.
///
/// Walks values from `n` down to 1 through the inverse permutation; value
/// `v-1` continues the block of `v` iff it sits to the right of `v`.
pub fn idr_partition(p: &Perm) -> IdrPartition {
    let inv = p.inverse();
    let pos = inv.values();
    let n = p.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut v = n;
    while v >= 1 {
        let mut block = vec![pos[v - 1]];
        while v > 1 && pos[v - 2] > pos[v - 1] {
            v -= 1;
            block.push(pos[v - 1]);
        }
        blocks.push(block);
        v -= 1;
    }
    let mut blocks: Vec<PositionSet> = blocks.into_iter().map(IntSet::new).collect();
    blocks.sort_by_key(|b| std::cmp::Reverse(b.max()));
    IdrPartition { blocks }
}

/// True iff no element of `outer` lies strictly between two elements of `inner`.
pub fn is_nested(inner: &IntSet, outer: &IntSet) -> bool {
    match (inner.as_slice().first(), inner.max()) {
        (Some(&lo), Some(hi)) => !outer.iter().any(|x| x > lo && x < hi),
        _ => true,
    }
}
