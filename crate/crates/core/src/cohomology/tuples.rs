//! Index sets for cochains: increasing tuples in lexicographic order for the
//! alternating complex, all tuples in base-`d` order for the tensor complex.

use super::Flavor;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of index tuples of length `n` over `d` basis vectors.
pub fn tuple_count(flavor: Flavor, d: usize, n: usize) -> usize {
    match flavor {
        Flavor::ChevalleyEilenberg => binomial(d, n),
        Flavor::Leibniz => d.pow(n as u32),
    }
}

/// Increasing `n`-tuples from `0..d` in lexicographic order.
pub fn combinations(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(d, n));
    if n > d {
        return out;
    }
    let mut t: Vec<usize> = (0..n).collect();
    loop {
        out.push(t.clone());
        let Some(p) = (0..n).rev().find(|&p| t[p] < d - n + p) else {
            return out;
        };
        t[p] += 1;
        for q in p + 1..n {
            t[q] = t[q - 1] + 1;
        }
    }
}

/// All `n`-tuples from `0..d`, last coordinate fastest.
pub fn all_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let count = d.pow(n as u32);
    (0..count).map(|idx| unrank_full(idx, d, n)).collect()
}

pub fn tuples(flavor: Flavor, d: usize, n: usize) -> Vec<Vec<usize>> {
    match flavor {
        Flavor::ChevalleyEilenberg => combinations(d, n),
        Flavor::Leibniz => all_tuples(d, n),
    }
}

/// Position of an increasing tuple in [`combinations`]`(d, t.len())`.
pub fn rank_combination(t: &[usize], d: usize) -> usize {
    let n = t.len();
    let mut rank = 0;
    let mut start = 0;
    for (p, &v) in t.iter().enumerate() {
        for skipped in start..v {
            rank += binomial(d - 1 - skipped, n - 1 - p);
        }
        start = v + 1;
    }
    rank
}

pub fn rank_full(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &v| acc * d + v)
}

fn unrank_full(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for p in (0..n).rev() {
        t[p] = idx % d;
        idx /= d;
    }
    t
}

/// Sorts `t` and returns the sign of the sorting permutation, or `None`
/// when an index repeats.
pub fn sort_with_sign(t: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = t.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}
