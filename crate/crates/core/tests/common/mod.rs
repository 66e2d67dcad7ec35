//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use permstat::Perm;

pub fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

/// Every increasing `k`-tuple of indices into `0..n`.
pub fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn order_isomorphic(pattern: &[usize], seq: &[usize]) -> bool {
    (0..pattern.len())
        .all(|a| (0..pattern.len()).all(|b| (pattern[a] < pattern[b]) == (seq[a] < seq[b])))
}

/// Occurrences of `pattern` in `host`, where `ties` lists 1-based `i` such
/// that letters `i` and `i+1` must be adjacent in the host.
pub fn naive_count(pattern: &[usize], ties: &[usize], host: &[usize]) -> u64 {
    index_tuples(host.len(), pattern.len())
        .into_iter()
        .filter(|idx| ties.iter().all(|&t| idx[t] == idx[t - 1] + 1))
        .filter(|idx| {
            let seq: Vec<usize> = idx.iter().map(|&i| host[i]).collect();
            order_isomorphic(pattern, &seq)
        })
        .count() as u64
}

pub fn naive_avoids(pattern: &[usize], host: &[usize]) -> bool {
    naive_count(pattern, &[], host) == 0
}

/// `S_n` by filtering every `n`-tuple of distinct values, lexicographic.
pub fn naive_class(pattern: &[usize], n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !cur.contains(&v) {
                cur.push(v);
                go(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut all = Vec::new();
    go(n, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|q| naive_avoids(pattern, q))
        .collect()
}

pub fn catalan(n: usize) -> u64 {
    // C_n = binom(2n, n) / (n + 1)
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

pub fn inversions(v: &[usize]) -> u64 {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn major_index(v: &[usize]) -> u64 {
    (1..v.len())
        .filter(|&i| v[i - 1] > v[i])
        .map(|i| i as u64)
        .sum()
}

pub const PATTERNS3: [&str; 6] = ["123", "132", "213", "231", "312", "321"];
