//! Inverse-descent-run constructions on 231-avoiders that begin with their
//! maximum (`Av′(231)`), the map `θ′` between them, its direct-sum
//! extension `θ` to all of `Av(231)`, and the `c∘r` conjugate on `Av(312)`.

use super::require_avoids;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::set_stats::{asc_set, atop, idr_partition};

/// Block sizes `c` and ascent/ascent-top data `m` of a permutation in
/// `Av′_n(231)`.
///
/// Consistency: `c_1 ≥ 2`, `Σ c = n = m_1 > m_2 > … > m_k`, and
/// `m_ℓ ≥ c_ℓ + … + c_k + 1` for `ℓ > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConsistentPair {
    c: Vec<usize>,
    m: Vec<usize>,
}

impl ConsistentPair {
    pub fn new(c: Vec<usize>, m: Vec<usize>) -> Result<Self> {
        let fail = |reason| Error::InconsistentPair {
            c: c.clone(),
            m: m.clone(),
            reason,
        };
        if c.is_empty() {
            return Err(fail("k must be at least 1"));
        }
        if c.len() != m.len() {
            return Err(fail("c and m must have the same length"));
        }
        if c.contains(&0) {
            return Err(fail("block sizes must be positive"));
        }
        if c[0] < 2 {
            return Err(fail("c_1 must be at least 2"));
        }
        let n: usize = c.iter().sum();
        if m[0] != n {
            return Err(fail("m_1 must equal c_1 + … + c_k"));
        }
        if m.windows(2).any(|w| w[0] <= w[1]) {
            return Err(fail("m must be strictly decreasing"));
        }
        let mut suffix = 0;
        for l in (1..c.len()).rev() {
            suffix += c[l];
            if m[l] < suffix + 1 {
                return Err(fail("m_l must be at least c_l + … + c_k + 1"));
            }
        }
        Ok(ConsistentPair { c, m })
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn k(&self) -> usize {
        self.c.len()
    }

    pub fn n(&self) -> usize {
        self.m[0]
    }

    /// Every consistent pair with the given `n`, in a deterministic order.
    pub fn enumerate(n: usize) -> Vec<ConsistentPair> {
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        for c1 in 2..=n {
            let mut c = vec![c1];
            compositions(n - c1, &mut c, &mut |c| {
                let k = c.len();
                let mut m = vec![n];
                choose_m(c, 1, k, &mut m, &mut |m| {
                    out.push(ConsistentPair {
                        c: c.to_vec(),
                        m: m.to_vec(),
                    })
                });
            });
        }
        out
    }
}

fn compositions(rest: usize, c: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if rest == 0 {
        f(c);
        return;
    }
    for part in 1..=rest {
        c.push(part);
        compositions(rest - part, c, f);
        c.pop();
    }
}

fn choose_m(c: &[usize], l: usize, k: usize, m: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if l == k {
        f(m);
        return;
    }
    let lower = c[l..].iter().sum::<usize>() + 1;
    let upper = m[l - 1] - 1;
    for v in (lower..=upper).rev() {
        m.push(v);
        choose_m(c, l + 1, k, m, f);
        m.pop();
    }
}

fn require_av_prime(p: &Perm) -> Result<()> {
    require_avoids(p, &[2, 3, 1])?;
    if p.len() < 2 {
        return Err(Error::TooShort(p.clone()));
    }
    if p.first() != Some(p.len()) {
        return Err(Error::NotLeadingMax(p.clone()));
    }
    Ok(())
}

/// Reads `c` from the inverse descent runs of `p` and `m = (n, Asc p ↓)`.
pub fn extract_consistent_pair(p: &Perm) -> Result<ConsistentPair> {
    require_av_prime(p)?;
    pair_from(p, asc_set(p).as_slice())
}

/// Same as [`extract_consistent_pair`] but reading `m` from the ascent tops.
pub fn extract_atop_consistent_pair(p: &Perm) -> Result<ConsistentPair> {
    require_av_prime(p)?;
    pair_from(p, atop(p).as_slice())
}

fn pair_from(p: &Perm, marks: &[usize]) -> Result<ConsistentPair> {
    let c = idr_partition(p).sizes();
    let mut m = vec![p.len()];
    m.extend(marks.iter().rev());
    ConsistentPair::new(c, m)
}

/// The unique `π ∈ Av′_n(231)` with i.d.r. sizes `c` and `Asc π = {m_2, …, m_k}`.
///
/// Built recursively: the permutation for the first `k-1` blocks is lifted
/// by `c_k` and the run `c_k (c_k - 1) … 1` is inserted right after its
/// `(m_k - c_k)`-th entry.
pub fn build_asc_perm(cp: &ConsistentPair) -> Perm {
    Perm::from_vec_unchecked(build_asc(&cp.c, &cp.m))
}

fn build_asc(c: &[usize], m: &[usize]) -> Vec<usize> {
    let k = c.len();
    let n = m[0];
    if k == 1 {
        return (1..=n).rev().collect();
    }
    let ck = c[k - 1];
    let mk = m[k - 1];
    let reduced_m: Vec<usize> = m[..k - 1].iter().map(|&x| x - ck).collect();
    let sigma = build_asc(&c[..k - 1], &reduced_m);
    let cut = mk - ck;
    let mut out = Vec::with_capacity(n);
    out.extend(sigma[..cut].iter().map(|&v| v + ck));
    out.extend((1..=ck).rev());
    out.extend(sigma[cut..].iter().map(|&v| v + ck));
    out
}

/// The unique `τ ∈ Av′_n(231)` with i.d.r. sizes `c` and `Atop τ = {m_2, …, m_k}`.
///
/// Let `S_j = c_{j+1} + … + c_k`. Pick the smallest `j` for which
/// `{S_j + 1, …, S_j + c_j}` misses `{m_2, …, m_k}`, and let `m_p` be the
/// smallest `m` above `n - (c_1 + … + c_{j-1})`. Remove block `j`, build the
/// smaller permutation, lift entries above `S_j` by `c_j`, and insert the
/// run `(S_j + c_j) … (S_j + 1)` right before the entry `m_p`.
pub fn build_atop_perm(cp: &ConsistentPair) -> Perm {
    Perm::from_vec_unchecked(build_atop(&cp.c, &cp.m))
}

fn build_atop(c: &[usize], m: &[usize]) -> Vec<usize> {
    let k = c.len();
    let n = m[0];
    if k == 1 {
        return (1..=n).rev().collect();
    }
    let marks = &m[1..];
    let suffix = |j: usize| -> usize { c[j + 1..].iter().sum() };
    let j = (0..k)
        .find(|&j| {
            let s = suffix(j);
            (s + 1..=s + c[j]).all(|v| !marks.contains(&v))
        })
        .expect("the block {1, …, c_k} never meets m_2, …, m_k");
    let s_j = suffix(j);
    let c_j = c[j];
    let threshold = n - c[..j].iter().sum::<usize>();
    let p = (0..k)
        .rev()
        .find(|&p| m[p] > threshold)
        .expect("m_1 = n exceeds the threshold");
    assert!(
        p >= 1 && j >= 1,
        "block selection left the leading block in place"
    );

    let mut reduced_c = c.to_vec();
    reduced_c.remove(j);
    let mut reduced_m: Vec<usize> = Vec::with_capacity(k - 1);
    reduced_m.extend(m[..p].iter().map(|&x| x - c_j));
    reduced_m.extend(&m[p + 1..]);
    debug_assert!(
        ConsistentPair::new(reduced_c.clone(), reduced_m.clone()).is_ok(),
        "reduced pair must stay consistent: {reduced_c:?} {reduced_m:?}"
    );
    let sigma = build_atop(&reduced_c, &reduced_m);

    let target = m[p];
    let mut out = Vec::with_capacity(n);
    let mut inserted = false;
    for v in sigma {
        let lifted = if v > s_j { v + c_j } else { v };
        if lifted == target {
            out.extend((s_j + 1..=s_j + c_j).rev());
            inserted = true;
        }
        out.push(lifted);
    }
    assert!(
        inserted,
        "entry m_p = {target} must exist in the lifted permutation"
    );
    out
}

/// `Av′_n(231) → Av′_n(231)` carrying `Asc` to `Atop` and `Des` to `Dbot`,
/// keeping the i.d.r. sizes. The singleton permutation is mapped to itself.
pub fn theta_prime(p: &Perm) -> Result<Perm> {
    if p.len() <= 1 {
        return Ok(p.clone());
    }
    Ok(build_atop_perm(&extract_consistent_pair(p)?))
}

pub fn theta_prime_inverse(p: &Perm) -> Result<Perm> {
    if p.len() <= 1 {
        return Ok(p.clone());
    }
    Ok(build_asc_perm(&extract_atop_consistent_pair(p)?))
}

/// Splits a 231-avoider into its direct-sum components from `Av′(231)`.
///
/// A component starting at position `s` ends at position `p_s`.
pub fn av_prime_blocks(p: &Perm) -> Result<Vec<Perm>> {
    require_avoids(p, &[2, 3, 1])?;
    let v = p.values();
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < v.len() {
        let end = v[start];
        let block: Vec<usize> = v[start..end].iter().map(|&x| x - start).collect();
        blocks.push(Perm::from_vec_unchecked(block));
        start = end;
    }
    Ok(blocks)
}

fn blockwise(p: &Perm, f: fn(&Perm) -> Result<Perm>) -> Result<Perm> {
    av_prime_blocks(p)?
        .iter()
        .try_fold(Perm::empty(), |acc, b| Ok(acc.direct_sum(&f(b)?)))
}

/// Componentwise `θ′` on `Av(231)`.
pub fn theta(p: &Perm) -> Result<Perm> {
    blockwise(p, theta_prime)
}

pub fn theta_inverse(p: &Perm) -> Result<Perm> {
    blockwise(p, theta_prime_inverse)
}

/// `c∘r ∘ θ ∘ c∘r` on `Av(312)`; carries `Des` to `Dtop − 1`.
pub fn conjugate_cr(p: &Perm) -> Result<Perm> {
    require_avoids(p, &[3, 1, 2])?;
    Ok(theta(&p.reverse_complement())?.reverse_complement())
}

pub fn conjugate_cr_inverse(p: &Perm) -> Result<Perm> {
    require_avoids(p, &[3, 1, 2])?;
    Ok(theta_inverse(&p.reverse_complement())?.reverse_complement())
}
