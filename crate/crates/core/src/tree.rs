//! Validated chemical trees and the invariants computed on them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{self, CanonicalCode};
use crate::error::TreeError;

/// Largest vertex degree allowed in a chemical tree.
pub const MAX_DEGREE: usize = 4;

/// A tree on vertices `0..n` in which every vertex has at most four neighbors.
///
/// Neighbor lists are kept sorted. Values are immutable once built; the
/// rewrites in [`crate::moves`] produce new trees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChemicalTree {
    adj: Vec<Vec<usize>>,
}

impl ChemicalTree {
    /// Validates an edge list on `order` vertices.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if order == 0 {
            return Err(TreeError::NotATree("order must be at least 1"));
        }
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= order {
                    return Err(TreeError::BadId { id, order });
                }
            }
            if u == v {
                return Err(TreeError::NotATree("self-loop"));
            }
        }
        if edges.len() != order - 1 {
            return Err(TreeError::NotATree("edge count is not order - 1"));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        if let Some((vertex, nbrs)) = adj.iter().enumerate().find(|(_, a)| a.len() > MAX_DEGREE) {
            return Err(TreeError::DegreeExceeded { vertex, degree: nbrs.len() });
        }
        // n - 1 edges and no cycle means connected.
        let mut uf = UnionFind::new(order);
        for &(u, v) in edges {
            if !uf.union(u, v) {
                return Err(TreeError::NotATree("cycle or repeated edge"));
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(ChemicalTree { adj })
    }

    /// Trusted constructor for generators that build trees edge by edge.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for a in &mut adj {
            a.sort_unstable();
        }
        debug_assert!(adj.iter().all(|a| a.len() <= MAX_DEGREE));
        debug_assert_eq!(adj.iter().map(Vec::len).sum::<usize>(), 2 * (adj.len().max(1) - 1));
        ChemicalTree { adj }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(order: usize) -> Self {
        assert!(order >= 1);
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        ChemicalTree::new(order, &edges).expect("a path is a chemical tree")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degree_census(&self) -> DegreeCensus {
        let mut c = DegreeCensus::default();
        for a in &self.adj {
            match a.len() {
                1 => c.n1 += 1,
                2 => c.n2 += 1,
                3 => c.n3 += 1,
                4 => c.n4 += 1,
                _ => {}
            }
        }
        c
    }

    /// First Zagreb index: the sum of squared degrees.
    pub fn zagreb_m1(&self) -> u64 {
        self.adj.iter().map(|a| (a.len() * a.len()) as u64).sum()
    }

    /// Second Zagreb index: the sum over edges of the product of end degrees.
    pub fn zagreb_m2(&self) -> u64 {
        self.edges().map(|(u, v)| (self.degree(u) * self.degree(v)) as u64).sum()
    }

    pub fn edge_type_counts(&self) -> EdgeTypeMatrix {
        let mut x = EdgeTypeMatrix::default();
        for (u, v) in self.edges() {
            x.add(self.degree(u), self.degree(v), 1);
        }
        x
    }

    /// Number of segments. Equals `n1 + n3 + n4 - 1` for `n >= 2`, and 0 for the single vertex.
    pub fn segment_count(&self) -> usize {
        if self.order() < 2 {
            return 0;
        }
        let c = self.degree_census();
        c.n1 + c.n3 + c.n4 - 1
    }

    /// Number of branching vertices (degree at least 3).
    pub fn branching_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() >= 3).count()
    }

    pub fn path_report(&self) -> PathReport {
        let mut report = PathReport { branching_count: self.branching_count(), ..PathReport::default() };
        for v in 0..self.order() {
            if self.degree(v) == 2 {
                continue;
            }
            for &first in self.neighbors(v) {
                let (end, length) = self.walk_degree2(v, first);
                if v > end {
                    continue;
                }
                report.segments.push(Segment { ends: (v, end), length });
                let (dv, de) = (self.degree(v), self.degree(end));
                match (dv, de) {
                    (1, d) if d >= 3 => report.pendent_paths.push(PendentPath { leaf: v, branch: end, length }),
                    (d, 1) if d >= 3 => report.pendent_paths.push(PendentPath { leaf: end, branch: v, length }),
                    (a, b) if a >= 3 && b >= 3 => report.internal_paths.push(InternalPath { ends: (v, end), length }),
                    _ => {}
                }
            }
        }
        report.segment_count = report.segments.len();
        report
    }

    /// Follows degree-2 vertices from `from` through `first` until a vertex of
    /// degree other than 2; returns that vertex and the number of edges walked.
    pub(crate) fn walk_degree2(&self, from: usize, first: usize) -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while self.degree(cur) == 2 {
            let next = self.other_neighbor(cur, prev);
            prev = cur;
            cur = next;
            len += 1;
        }
        (cur, len)
    }

    /// For a degree-2 vertex, the neighbor that is not `not`.
    pub(crate) fn other_neighbor(&self, v: usize, not: usize) -> usize {
        let a = &self.adj[v];
        if a[0] == not {
            a[1]
        } else {
            a[0]
        }
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }

    /// Components of the subgraph induced by the degree-4 vertices (0 when there are none).
    pub fn degree4_components(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut components = 0;
        let mut stack = Vec::new();
        for s in 0..self.order() {
            if seen[s] || self.degree(s) != 4 {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] && self.degree(w) == 4 {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Vertex ids in BFS order from `root`, with each vertex's parent.
    pub fn bfs(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        parent[root] = root;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in self.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Vertices on the unique path from `a` to `b`, both ends included.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let (_, parent) = self.bfs(b);
        let mut path = vec![a];
        let mut v = a;
        while v != b {
            v = parent[v];
            path.push(v);
        }
        path
    }

    /// Vertices reachable from `start` without passing through `blocked`.
    pub fn side_of(&self, start: usize, blocked: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[blocked] = true;
        seen[start] = true;
        let mut out = vec![start];
        let mut head = 0;
        while head < out.len() {
            let v = out[head];
            head += 1;
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out
    }

    /// Removes and adds edges, then revalidates.
    pub fn rewired(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self, TreeError> {
        let mut edges = self.edge_list();
        for &(a, b) in remove {
            let key = (a.min(b), a.max(b));
            let pos = edges.iter().position(|&e| e == key).ok_or(TreeError::NotATree("removed edge is absent"))?;
            edges.swap_remove(pos);
        }
        edges.extend_from_slice(add);
        ChemicalTree::new(self.order(), &edges)
    }
}

impl fmt::Debug for ChemicalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChemicalTree(n={}, edges={:?})", self.order(), self.edge_list())
    }
}

/// Counts of vertices of degree 1, 2, 3 and 4.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct DegreeCensus {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
}

impl DegreeCensus {
    pub const fn new(n1: usize, n2: usize, n3: usize, n4: usize) -> Self {
        DegreeCensus { n1, n2, n3, n4 }
    }

    pub fn order(&self) -> usize {
        self.n1 + self.n2 + self.n3 + self.n4
    }

    /// `sum of degrees`; equals `2(n - 1)` for a tree with `n >= 2`.
    pub fn degree_sum(&self) -> usize {
        self.n1 + 2 * self.n2 + 3 * self.n3 + 4 * self.n4
    }

    pub fn count(&self, degree: usize) -> usize {
        match degree {
            1 => self.n1,
            2 => self.n2,
            3 => self.n3,
            4 => self.n4,
            _ => 0,
        }
    }

    /// `M1` is determined by the census alone.
    pub fn zagreb_m1(&self) -> u64 {
        (self.n1 + 4 * self.n2 + 9 * self.n3 + 16 * self.n4) as u64
    }

    /// `k = n1 + n3 + n4 - 1` (0 for an empty census).
    pub fn segment_count(&self) -> usize {
        (self.n1 + self.n3 + self.n4).saturating_sub(1)
    }

    pub fn branching_count(&self) -> usize {
        self.n3 + self.n4
    }

    /// Both handshake identities for a tree of order `self.order() >= 2`.
    pub fn is_tree_census(&self) -> bool {
        let n = self.order();
        n >= 2 && self.degree_sum() == 2 * (n - 1)
    }
}

impl fmt::Display for DegreeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n1, self.n2, self.n3, self.n4)
    }
}

/// Edge counts `x[i][j]` by unordered end-degree pair, `1 <= i <= j <= 4`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeTypeMatrix {
    x: [usize; 10],
}

const fn slot(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    assert!(i >= 1 && j <= 4);
    // row offsets for i = 1..4 in the upper triangle: 0, 4, 7, 9
    let row = [0, 0, 4, 7, 9][i];
    row + (j - i)
}

impl EdgeTypeMatrix {
    /// All ten pairs `(i, j)` with `i <= j`, in row-major order.
    pub const PAIRS: [(usize, usize); 10] =
        [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)];

    pub fn from_pairs(pairs: &[((usize, usize), usize)]) -> Self {
        let mut m = EdgeTypeMatrix::default();
        for &((i, j), c) in pairs {
            m.add(i, j, c);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.x[slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, count: usize) {
        self.x[slot(i, j)] = count;
    }

    pub fn add(&mut self, i: usize, j: usize, count: usize) {
        self.x[slot(i, j)] += count;
    }

    pub fn total(&self) -> usize {
        self.x.iter().sum()
    }

    /// `sum i*j*x[i][j]`, which is `M2` of any tree with this profile.
    pub fn zagreb_m2(&self) -> u64 {
        Self::PAIRS.iter().map(|&(i, j)| (i * j * self.get(i, j)) as u64).sum()
    }

    /// Degree-`j` endpoint count: `sum_{i != j} x[j][i] + 2 x[j][j]`.
    pub fn endpoint_count(&self, j: usize) -> usize {
        (1..=4).map(|i| if i == j { 2 * self.get(j, j) } else { self.get(i, j) }).sum()
    }

    /// `endpoint_count(j) == j * n_j` for every `j`, and the edge total is `n - 1`.
    pub fn is_consistent_with(&self, census: &DegreeCensus) -> bool {
        (1..=4).all(|j| self.endpoint_count(j) == j * census.count(j)) && self.total() + 1 == census.order().max(1)
    }

    /// Non-zero entries as `((i, j), count)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        Self::PAIRS.iter().map(|&p| (p, self.get(p.0, p.1))).filter(|&(_, c)| c > 0)
    }
}

impl fmt::Display for EdgeTypeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), c) in self.nonzero() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "x{i}{j}={c}")?;
        }
        if first {
            f.write_str("(no edges)")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendentPath {
    pub leaf: usize,
    pub branch: usize,
    pub length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InternalPath {
    pub ends: (usize, usize),
    pub length: usize,
}

/// A maximal path whose ends have degree other than 2 and whose inner vertices have degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub ends: (usize, usize),
    pub length: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathReport {
    pub pendent_paths: Vec<PendentPath>,
    pub internal_paths: Vec<InternalPath>,
    pub segments: Vec<Segment>,
    pub segment_count: usize,
    pub branching_count: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
