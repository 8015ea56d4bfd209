//! Test-only oracle: chemical trees from Prüfer sequences, deduplicated by an
//! AHU string form computed here. Shares no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Edges = Vec<(usize, usize)>;

/// Labeled tree of a Prüfer sequence over labels `0..seq.len() + 2`.
pub fn decode_pruefer(seq: &[usize]) -> Edges {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| ahu(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Centers by repeated leaf removal.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Isomorphism-invariant string of a free tree.
pub fn canonical_string(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    centers(&adj).into_iter().map(|c| ahu(&adj, c, usize::MAX)).min().unwrap()
}

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(a, b) in edges {
        d[a] += 1;
        d[b] += 1;
    }
    d
}

/// Segments end at vertices of degree other than 2; each such vertex of
/// degree `d` is the end of `d` segments.
pub fn segments(n: usize, edges: &[(usize, usize)]) -> usize {
    degrees(n, edges).iter().filter(|&&d| d != 2).sum::<usize>() / 2
}

pub fn branching(n: usize, edges: &[(usize, usize)]) -> usize {
    degrees(n, edges).iter().filter(|&&d| d >= 3).count()
}

pub fn m1(n: usize, edges: &[(usize, usize)]) -> u64 {
    degrees(n, edges).iter().map(|&d| (d * d) as u64).sum()
}

pub fn m2(n: usize, edges: &[(usize, usize)]) -> u64 {
    let d = degrees(n, edges);
    edges.iter().map(|&(a, b)| (d[a] * d[b]) as u64).sum()
}

/// Non-increasing degree sequences with entries in 1..=4 summing to 2n - 2.
fn degree_sequences(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, sum: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for d in (1..=cap.min(4)).rev() {
            if d <= sum && sum - d >= left - 1 {
                cur.push(d);
                rec(left - 1, sum - d, d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 2 * n - 2, 4, &mut Vec::new(), &mut out);
    out
}

/// Lexicographically next permutation; false after the last one.
fn next_permutation(s: &mut [usize]) -> bool {
    let Some(i) = (1..s.len()).rev().find(|&i| s[i - 1] < s[i]) else {
        return false;
    };
    let j = (i..s.len()).rev().find(|&j| s[j] > s[i - 1]).unwrap();
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// One representative per isomorphism class of chemical trees of order `n`,
/// keyed by canonical string.
///
/// Every unlabeled tree has a labeling with non-increasing degrees, and the
/// Prüfer sequences realizing a degree sequence are exactly the arrangements
/// of the multiset with label `i` repeated `d_i - 1` times.
pub fn all_trees(n: usize) -> BTreeMap<String, Edges> {
    let mut out = BTreeMap::new();
    if n == 1 {
        out.insert(canonical_string(1, &[]), Vec::new());
        return out;
    }
    for seq in degree_sequences(n) {
        let mut multiset: Vec<usize> =
            seq.iter().enumerate().flat_map(|(i, &d)| std::iter::repeat_n(i, d - 1)).collect();
        loop {
            let edges = decode_pruefer(&multiset);
            out.entry(canonical_string(n, &edges)).or_insert(edges);
            if !next_permutation(&mut multiset) {
                break;
            }
        }
    }
    out
}

/// Distinct chemical trees among all `n^(n-2)` Prüfer sequences.
pub fn all_trees_exhaustive(n: usize) -> BTreeSet<String> {
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut out = BTreeSet::new();
    loop {
        let edges = decode_pruefer(&seq);
        if degrees(n, &edges).iter().all(|&d| d <= 4) {
            out.insert(canonical_string(n, &edges));
        }
        let Some(i) = (0..len).rev().find(|&i| seq[i] + 1 < n) else {
            return out;
        };
        seq[i] += 1;
        for s in &mut seq[i + 1..] {
            *s = 0;
        }
    }
}

/// Class sizes by segment count and by branching count.
pub fn filtered_counts(n: usize) -> (BTreeMap<usize, usize>, BTreeMap<usize, usize>) {
    let mut by_k = BTreeMap::new();
    let mut by_b = BTreeMap::new();
    for edges in all_trees(n).values() {
        *by_k.entry(segments(n, edges)).or_insert(0) += 1;
        *by_b.entry(branching(n, edges)).or_insert(0) += 1;
    }
    (by_k, by_b)
}
