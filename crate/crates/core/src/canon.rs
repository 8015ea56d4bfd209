//! Canonical codes for free trees.
//!
//! A tree is rooted at its centroid. With a single centroid the code is the
//! tag byte `0` followed by the canonical level sequence of the rooted tree.
//! With two (adjacent) centroids the central edge is cut, both halves are
//! rooted at their centroid, and the code is the tag byte `1` followed by the
//! larger half's level sequence and then the smaller one's.
//!
//! The canonical level sequence of a rooted tree lists depths in preorder,
//! visiting children in decreasing lexicographic order of their own sequences.
//! Depths are single bytes for trees of order at most [`NARROW_LIMIT`]; larger
//! trees use tags `2`/`3` and big-endian two-byte depths.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::tree::ChemicalTree;

/// Largest order whose centroid depths always fit in one byte.
pub const NARROW_LIMIT: usize = 511;

const TAG_VERTEX: u8 = 0;
const TAG_EDGE: u8 = 1;
const WIDE: u8 = 2;

/// Relabeling-invariant identifier of a tree's isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    pub fn to_hex(&self) -> String {
        const DIGITS: &[u8; 16] = b"0123456789abcdef";
        let mut s = String::with_capacity(2 * self.0.len());
        for &b in &self.0 {
            s.push(DIGITS[(b >> 4) as usize] as char);
            s.push(DIGITS[(b & 0xf) as usize] as char);
        }
        s
    }

    pub fn from_hex(hex: &str) -> Option<Self> {
        let hex = hex.as_bytes();
        if !hex.len().is_multiple_of(2) {
            return None;
        }
        let nibble = |c: u8| (c as char).to_digit(16).map(|d| d as u8);
        hex.chunks(2)
            .map(|pair| Some(nibble(pair[0])? << 4 | nibble(pair[1])?))
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalCode)
    }

    /// Rebuilds a representative tree. Vertex 0 is the (first) centroid and ids
    /// follow the preorder of the level sequence. Returns `None` for byte
    /// strings that are not well-formed codes.
    pub fn to_tree(&self) -> Option<ChemicalTree> {
        let (&tag, body) = self.0.split_first()?;
        let levels: Vec<usize> = if tag & WIDE == 0 {
            body.iter().map(|&b| b as usize).collect()
        } else {
            if body.len() % 2 != 0 {
                return None;
            }
            body.chunks(2).map(|c| (c[0] as usize) << 8 | c[1] as usize).collect()
        };
        let halves: Vec<&[usize]> = match tag & !WIDE {
            TAG_VERTEX => vec![&levels[..]],
            TAG_EDGE if levels.len().is_multiple_of(2) && !levels.is_empty() => {
                let (a, b) = levels.split_at(levels.len() / 2);
                vec![a, b]
            }
            _ => return None,
        };
        let mut edges = Vec::new();
        let mut offset = 0;
        for half in &halves {
            edges.extend(edges_from_levels(half)?.into_iter().map(|(u, v)| (u + offset, v + offset)));
            offset += half.len();
        }
        if halves.len() == 2 {
            edges.push((0, halves[0].len()));
        }
        let tree = ChemicalTree::new(levels.len(), &edges).ok()?;
        (tree.canonical_code() == *self).then_some(tree)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Parent links from a level sequence: each vertex hangs under the most
/// recent vertex one level up.
pub(crate) fn edges_from_levels(levels: &[usize]) -> Option<Vec<(usize, usize)>> {
    if levels.first() != Some(&0) {
        return None;
    }
    let mut stack: Vec<usize> = vec![0];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &level) in levels.iter().enumerate().skip(1) {
        if level == 0 || level > stack.len() {
            return None;
        }
        stack.truncate(level);
        edges.push((stack[level - 1], v));
        stack.push(v);
    }
    Some(edges)
}

pub fn canonical_code(t: &ChemicalTree) -> CanonicalCode {
    let wide = t.order() > NARROW_LIMIT;
    let centroids = centroids(t);
    let mut bytes = Vec::with_capacity(t.order() * if wide { 2 } else { 1 } + 1);
    match centroids[..] {
        [c] => {
            bytes.push(TAG_VERTEX | if wide { WIDE } else { 0 });
            push_levels(&mut bytes, &rooted_levels(t, c, None), wide);
        }
        [a, b] => {
            bytes.push(TAG_EDGE | if wide { WIDE } else { 0 });
            let la = rooted_levels(t, a, Some(b));
            let lb = rooted_levels(t, b, Some(a));
            let (hi, lo) = if la >= lb { (la, lb) } else { (lb, la) };
            push_levels(&mut bytes, &hi, wide);
            push_levels(&mut bytes, &lo, wide);
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
    CanonicalCode(bytes)
}

fn push_levels(out: &mut Vec<u8>, levels: &[u16], wide: bool) {
    for &l in levels {
        if wide {
            out.extend_from_slice(&l.to_be_bytes());
        } else {
            out.push(l as u8);
        }
    }
}

/// Vertices minimizing the largest component left after their removal.
pub fn centroids(t: &ChemicalTree) -> Vec<usize> {
    let n = t.order();
    let (order, parent) = t.bfs(0);
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in order.iter().rev() {
        if v != 0 {
            let p = parent[v];
            size[p] += size[v];
            heaviest[p] = heaviest[p].max(size[v]);
        }
    }
    let weight: Vec<usize> = (0..n).map(|v| heaviest[v].max(n - size[v])).collect();
    let best = *weight.iter().min().expect("non-empty tree");
    (0..n).filter(|&v| weight[v] == best).collect()
}

/// Canonical level sequence of `t` rooted at `root`, ignoring the branch through `blocked`.
fn rooted_levels(t: &ChemicalTree, root: usize, blocked: Option<usize>) -> Vec<u16> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    if let Some(b) = blocked {
        parent[b] = b;
    }
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut child_seqs: Vec<Vec<Vec<u16>>> = vec![Vec::new(); n];
    let mut result = Vec::new();
    for &v in order.iter().rev() {
        let mut kids = core::mem::take(&mut child_seqs[v]);
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        seq.push(0u16);
        for k in kids {
            seq.extend(k.into_iter().map(|l| l + 1));
        }
        if v == root {
            result = seq;
        } else {
            child_seqs[parent[v]].push(seq);
        }
    }
    result
}
