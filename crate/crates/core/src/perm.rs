//! Permutations in one-line notation and their structural operations.
//!
//! Values are 1-based everywhere a caller can see them: `Perm::new(vec![3, 1, 2])`
//! is the permutation `312`. The empty permutation is a valid value of length 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Perm {
    values: Vec<usize>,
}

impl Perm {
    /// Validates that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { values, len: n });
            }
            seen[v] = true;
        }
        Ok(Perm { values })
    }

    /// Caller guarantees the rearrangement invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Perm::new(values.clone()).is_ok(), "{values:?}");
        Perm { values }
    }

    pub fn empty() -> Self {
        Perm { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            values: (1..=n).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Perm {
            values: (1..=n).rev().collect(),
        }
    }

    /// Order-isomorphic permutation of a sequence of distinct integers.
    pub fn standardize(seq: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Perm { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Entry at a 1-based position.
    pub fn at(&self, position: usize) -> usize {
        self.values[position - 1]
    }

    pub fn first(&self) -> Option<usize> {
        self.values.first().copied()
    }

    pub fn reverse(&self) -> Perm {
        Perm {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Perm {
        let n = self.len();
        Perm {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// `c∘r`, an involution exchanging `Av(231)` and `Av(312)`.
    pub fn reverse_complement(&self) -> Perm {
        let n = self.len();
        Perm {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Group-theoretic inverse: `inverse[p_i] = i`.
    pub fn inverse(&self) -> Perm {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Perm { values }
    }

    /// `self ∘ other` as functions: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composition needs equal lengths");
        Perm {
            values: other.values.iter().map(|&v| self.values[v - 1]).collect(),
        }
    }

    /// `self ⊕ other`: `other` placed above and to the right.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.len();
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|&v| v + shift));
        Perm { values }
    }

    /// `self ⊖ other`: `other` placed below and to the right.
    pub fn skew_sum(&self, other: &Perm) -> Perm {
        let shift = other.len();
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend(self.values.iter().map(|&v| v + shift));
        values.extend_from_slice(&other.values);
        Perm { values }
    }

    /// Splits a non-empty 231-avoider as `(1 ⊖ alpha) ⊕ beta`.
    ///
    /// Only the positional shape is checked: the first `p_1` entries must be
    /// exactly `{1, …, p_1}`. If that fails the input contains 231 and an
    /// error is returned. Avoidance inside `alpha` and `beta` is asserted in
    /// debug builds only.
    pub fn decompose_231(&self) -> Result<(Perm, Perm)> {
        let head = self.first().ok_or_else(|| Error::Empty(self.clone()))?;
        if self.values[1..head].iter().any(|&v| v > head) {
            return Err(Error::ContainsPattern {
                perm: self.clone(),
                pattern: Perm::from_vec_unchecked(vec![2, 3, 1]),
            });
        }
        let alpha = Perm {
            values: self.values[1..head].to_vec(),
        };
        let beta = Perm {
            values: self.values[head..].iter().map(|&v| v - head).collect(),
        };
        Ok((alpha, beta))
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPerms {
        AllPerms {
            next: Some((1..=n).collect()),
        }
    }

    /// Compact digit string when every value is a single digit, comma list otherwise.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("Perm(λ)")
        } else {
            write!(f, "Perm({self})")
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `"3,2,1,6,5,4"`, the compact `"321654"` (n ≤ 9) and `""` for
    /// the empty permutation. Surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let fail = |reason: &str| Error::ParsePermutation {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Ok(Perm::empty());
        }
        let values: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| fail("bad entry")))
                .collect::<Result<_>>()?
        } else {
            if text.len() > 9 {
                return Err(fail("compact form is limited to 9 entries; use commas"));
            }
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| fail("expected digits"))
                })
                .collect::<Result<_>>()?
        };
        Perm::new(values).map_err(|e| fail(&e.to_string()))
    }
}

/// Lexicographic iterator over `S_n`.
#[derive(Debug, Clone)]
pub struct AllPerms {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Perm { values: current })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("361524").reverse(), p("425163"));
        assert_eq!(Perm::empty().reverse(), Perm::empty());
        assert_eq!(p("1").reverse(), p("1"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p("321").complement(), p("123"));
        let q = p("7653124");
        assert_eq!(q.complement(), p("1235764"));
        assert_eq!(q.complement().complement(), q);
        assert_eq!(Perm::empty().complement(), Perm::empty());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("312").inverse(), p("231"));
        assert_eq!(Perm::identity(6).inverse(), Perm::identity(6));
        let q = p("7615324");
        assert_eq!(q.compose(&q.inverse()), Perm::identity(7));
        assert_eq!(q.inverse().compose(&q), Perm::identity(7));
        assert_eq!(q.inverse(), p("3657421"));
    }

    #[test]
    fn sums() {
        assert_eq!(p("21").direct_sum(&p("1")), p("213"));
        assert_eq!(Perm::empty().direct_sum(&p("132")), p("132"));
        assert_eq!(p("1").direct_sum(&p("12")), p("123"));
        assert_eq!(p("1").skew_sum(&p("12")), p("312"));
        assert_eq!(p("1").skew_sum(&Perm::empty()), p("1"));
        assert_eq!(p("1").skew_sum(&p("21")), p("321"));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(p("321654").decompose_231().unwrap(), (p("21"), p("321")));
        assert_eq!(
            p("1").decompose_231().unwrap(),
            (Perm::empty(), Perm::empty())
        );
        assert_eq!(p("213").decompose_231().unwrap(), (p("1"), p("1")));
        let (a, b) = p("321654").decompose_231().unwrap();
        assert_eq!(p("1").skew_sum(&a).direct_sum(&b), p("321654"));
    }

    #[test]
    fn decompose_rejects() {
        assert!(matches!(
            Perm::empty().decompose_231(),
            Err(Error::Empty(_))
        ));
        assert!(matches!(
            p("231").decompose_231(),
            Err(Error::ContainsPattern { .. })
        ));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("3,2,1,6,5,4"), p("321654"));
        assert_eq!(p(""), Perm::empty());
        assert_eq!(p(" 21 "), p("21"));
        let long: Perm = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(long, Perm::decreasing(10));
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert!("3,1".parse::<Perm>().is_err());
        assert!("112".parse::<Perm>().is_err());
        assert!("1a".parse::<Perm>().is_err());
        assert!("0".parse::<Perm>().is_err());
    }

    #[test]
    fn all_is_lexicographic_and_complete() {
        let s3: Vec<String> = Perm::all(3).map(|q| q.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Perm::all(0).count(), 1);
        assert_eq!(Perm::all(6).count(), 720);
    }

    #[test]
    fn standardize_rescales() {
        assert_eq!(Perm::standardize(&[7, 2, 9]), p("213"));
        assert_eq!(Perm::standardize(&[]), Perm::empty());
    }
}
