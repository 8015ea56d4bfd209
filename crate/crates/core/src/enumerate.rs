//! Streaming generation of non-isomorphic chemical trees.
//!
//! Every free tree is produced in its centroid-rooted canonical form. A
//! *branch* is a rooted tree whose root has at most three children (it hangs
//! from a parent, so its root degree stays at most 4) and whose other vertices
//! also have at most three children. Branches up to order `n / 2` are
//! generated once, in decreasing order of their canonical level sequences.
//!
//! * Trees with a single centroid are a root with one to four branches of
//!   order below `n / 2`, taken as a non-increasing multiset.
//! * Trees with two centroids are an unordered pair of branches of order
//!   exactly `n / 2` joined at their roots.
//!
//! The degree bound is part of the branch definition, so no tree with a vertex
//! of degree 5 or more is ever formed. Multisets are walked with an odometer
//! that only descends into prefixes that can still be completed, so each
//! yielded tree costs `O(n)` amortized work beyond building its adjacency.
//!
//! Trees come out in decreasing order of their [`CanonicalCode`](crate::CanonicalCode):
//! all bicentroidal trees first, then all centroidal ones.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{edges_from_levels, NARROW_LIMIT};
use crate::error::EnumError;
use crate::tree::{ChemicalTree, DegreeCensus};

pub const DEFAULT_ORDER_CAP: usize = 20;

/// Restriction on the enumerated class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EnumFilter {
    #[default]
    None,
    /// Exactly `k` segments: the class `CT(n, k)`.
    Segments(usize),
    /// Exactly `b` branching vertices: the class `CT*(n, b)`.
    Branching(usize),
}

impl EnumFilter {
    pub fn accepts(&self, census: &DegreeCensus) -> bool {
        match *self {
            EnumFilter::None => true,
            EnumFilter::Segments(k) => census.segment_count() == k,
            EnumFilter::Branching(b) => census.branching_count() == b,
        }
    }
}

impl fmt::Display for EnumFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumFilter::None => f.write_str("all"),
            EnumFilter::Segments(k) => write!(f, "segments={k}"),
            EnumFilter::Branching(b) => write!(f, "branching={b}"),
        }
    }
}

#[derive(Debug, Clone)]
struct Branch {
    levels: Vec<u8>,
    children: usize,
    /// Degree counts (index = degree) of the non-root vertices, as they are in any host tree.
    inner: [usize; 5],
}

impl Branch {
    fn size(&self) -> usize {
        self.levels.len()
    }

    /// Adds the branch's vertices to `census`, its root having `root_degree`.
    fn tally(&self, census: &mut [usize; 5], root_degree: usize) {
        for (c, &x) in census.iter_mut().zip(&self.inner) {
            *c += x;
        }
        census[root_degree] += 1;
    }
}

/// All branches of order `1..=max_size`, sorted by decreasing level sequence.
#[derive(Debug)]
struct Catalog {
    branches: Vec<Branch>,
}

impl Catalog {
    fn build(max_size: usize) -> Self {
        let mut branches = vec![Branch { levels: vec![0], children: 0, inner: [0; 5] }];
        for m in 2..=max_size {
            let sizes: Vec<usize> = branches.iter().map(Branch::size).collect();
            let mut fresh = Vec::new();
            let mut picks = Multisets::new(sizes, m - 1, 3, m - 1, None);
            while let Some(kids) = picks.advance() {
                let mut levels = Vec::with_capacity(m);
                levels.push(0u8);
                let mut inner = [0usize; 5];
                for &c in kids {
                    let child = &branches[c];
                    levels.extend(child.levels.iter().map(|l| l + 1));
                    child.tally(&mut inner, child.children + 1);
                }
                fresh.push(Branch { levels, children: kids.len(), inner });
            }
            branches.extend(fresh);
            branches.sort_by(|a, b| b.levels.cmp(&a.levels));
        }
        Catalog { branches }
    }

    fn sizes(&self) -> Vec<usize> {
        self.branches.iter().map(Branch::size).collect()
    }
}

/// Odometer over non-decreasing index tuples `i_1 <= ... <= i_r` (`r <= max_len`)
/// whose part sizes sum to `target`, in increasing lexicographic order.
#[derive(Debug, Clone)]
struct Multisets {
    sizes: Vec<usize>,
    target: usize,
    max_len: usize,
    /// `fill[(i * (target + 1) + r) * (max_len + 1) + s]`: can `r` be written
    /// with at most `s` parts taken from indices `>= i`?
    fill: Vec<bool>,
    picks: Vec<usize>,
    /// When set, the first part is pinned to this index.
    first: Option<usize>,
    state: OdometerState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OdometerState {
    Fresh,
    Running,
    Done,
}

impl Multisets {
    /// Parts larger than `max_part` are never used.
    fn new(sizes: Vec<usize>, target: usize, max_len: usize, max_part: usize, first: Option<usize>) -> Self {
        let sizes: Vec<usize> = sizes.into_iter().map(|s| if s <= max_part { s } else { usize::MAX }).collect();
        let len = sizes.len();
        let (rs, ss) = (target + 1, max_len + 1);
        let mut fill = vec![false; (len + 1) * rs * ss];
        let at = |i: usize, r: usize, s: usize| (i * rs + r) * ss + s;
        for i in (0..=len).rev() {
            for r in 0..=target {
                for s in 0..=max_len {
                    let ok = if r == 0 {
                        true
                    } else if i == len || s == 0 {
                        false
                    } else {
                        fill[at(i + 1, r, s)] || (sizes[i] <= r && fill[at(i, r - sizes[i], s - 1)])
                    };
                    fill[at(i, r, s)] = ok;
                }
            }
        }
        Multisets {
            sizes,
            target,
            max_len,
            fill,
            picks: Vec::with_capacity(max_len),
            first,
            state: OdometerState::Fresh,
        }
    }

    fn can_fill(&self, from: usize, remaining: usize, slots: usize) -> bool {
        let (rs, ss) = (self.target + 1, self.max_len + 1);
        self.fill[(from * rs + remaining) * ss + slots]
    }

    /// Smallest index `>= from` that can start a completion of `remaining` in `slots` parts.
    fn smallest_start(&self, from: usize, remaining: usize, slots: usize, pos: usize) -> Option<usize> {
        if pos == 0 {
            if let Some(f) = self.first {
                let ok = f >= from
                    && f < self.sizes.len()
                    && self.sizes[f] <= remaining
                    && self.can_fill(f, remaining - self.sizes[f], slots - 1);
                return ok.then_some(f);
            }
        }
        (from..self.sizes.len())
            .find(|&i| self.sizes[i] <= remaining && self.can_fill(i, remaining - self.sizes[i], slots - 1))
    }

    /// Appends the lexicographically smallest completion. The caller guarantees one exists.
    fn complete(&mut self, mut from: usize, mut remaining: usize) {
        while remaining > 0 {
            let pos = self.picks.len();
            let i = self.smallest_start(from, remaining, self.max_len - pos, pos).expect("completion exists");
            self.picks.push(i);
            remaining -= self.sizes[i];
            from = i;
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        match self.state {
            OdometerState::Done => return None,
            OdometerState::Fresh => {
                self.state = OdometerState::Running;
                if self.target == 0 || self.smallest_start(0, self.target, self.max_len, 0).is_none() {
                    self.state = OdometerState::Done;
                    return None;
                }
                self.complete(0, self.target);
                return Some(&self.picks);
            }
            OdometerState::Running => {}
        }
        while let Some(current) = self.picks.pop() {
            let pos = self.picks.len();
            if pos == 0 && self.first.is_some() {
                break;
            }
            let used: usize = self.picks.iter().map(|&i| self.sizes[i]).sum();
            let remaining = self.target - used;
            if let Some(next) = self.smallest_start(current + 1, remaining, self.max_len - pos, pos) {
                self.picks.push(next);
                self.complete(next, remaining - self.sizes[next]);
                return Some(&self.picks);
            }
        }
        self.state = OdometerState::Done;
        None
    }
}

#[derive(Debug, Clone)]
enum Stage {
    Single {
        done: bool,
    },
    /// Two centroids: pairs of branches of order `n / 2`.
    Bicentral(Multisets),
    /// One centroid: up to four branches of order below `n / 2`.
    Central(Multisets),
}

/// Streaming generator of the chemical trees of one order, optionally filtered.
///
/// Memory per generator is `O(n)` plus a branch catalog that is shared
/// (reference counted) between the generator and its [`partitions`](Self::partitions).
#[derive(Debug, Clone)]
pub struct TreeEnumerator {
    order: usize,
    filter: EnumFilter,
    catalog: Arc<Catalog>,
    stages: Vec<Stage>,
}

impl TreeEnumerator {
    pub fn new(order: usize, filter: EnumFilter) -> Result<Self, EnumError> {
        Self::with_cap(order, filter, DEFAULT_ORDER_CAP)
    }

    /// As [`new`](Self::new) with an explicit order cap (at most 511).
    pub fn with_cap(order: usize, filter: EnumFilter, cap: usize) -> Result<Self, EnumError> {
        if order == 0 {
            return Err(EnumError::ZeroOrder);
        }
        let cap = cap.min(NARROW_LIMIT);
        if order > cap {
            return Err(EnumError::LimitExceeded { order, cap });
        }
        let catalog = Arc::new(Catalog::build(order / 2));
        let stages = Self::stages(order, &catalog, None, None);
        Ok(TreeEnumerator { order, filter, catalog, stages })
    }

    fn stages(order: usize, catalog: &Catalog, bi_first: Option<usize>, uni_first: Option<usize>) -> Vec<Stage> {
        if order == 1 {
            return vec![Stage::Single { done: false }];
        }
        let sizes = catalog.sizes();
        let mut stages = Vec::with_capacity(2);
        if order.is_multiple_of(2) {
            let half = order / 2;
            let exact: Vec<usize> = sizes.iter().map(|&s| if s == half { s } else { usize::MAX }).collect();
            stages.push(Stage::Bicentral(Multisets::new(exact, order, 2, half, bi_first)));
        }
        stages.push(Stage::Central(Multisets::new(sizes, order - 1, 4, (order - 1) / 2, uni_first)));
        stages
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn filter(&self) -> EnumFilter {
        self.filter
    }

    /// Splits the remaining search space by the first (largest) branch at the
    /// center. Each part is an independent generator; concatenating their
    /// outputs in order reproduces this generator's output. Must be called
    /// before iteration starts.
    pub fn partitions(&self) -> Vec<TreeEnumerator> {
        if self.order == 1 {
            return vec![self.clone()];
        }
        let sizes = self.catalog.sizes();
        let mut parts = Vec::new();
        let mut push = |bi: Option<usize>, uni: Option<usize>| {
            let stages = Self::stages(self.order, &self.catalog, bi, uni)
                .into_iter()
                .filter(|s| match s {
                    Stage::Bicentral(_) => bi.is_some(),
                    Stage::Central(_) => uni.is_some(),
                    Stage::Single { .. } => false,
                })
                .collect();
            parts.push(TreeEnumerator {
                order: self.order,
                filter: self.filter,
                catalog: Arc::clone(&self.catalog),
                stages,
            });
        };
        if self.order.is_multiple_of(2) {
            for (i, &s) in sizes.iter().enumerate() {
                if s == self.order / 2 {
                    push(Some(i), None);
                }
            }
        }
        for (i, &s) in sizes.iter().enumerate() {
            if 2 * s < self.order {
                push(None, Some(i));
            }
        }
        parts
    }

    /// Moves to the next accepted candidate; returns its census.
    fn advance(&mut self) -> Option<DegreeCensus> {
        loop {
            let stage = self.stages.first_mut()?;
            let census = match stage {
                Stage::Single { done } => {
                    if *done {
                        None
                    } else {
                        *done = true;
                        Some(DegreeCensus::default())
                    }
                }
                Stage::Bicentral(m) => m.advance().map(|pair| {
                    let mut c = [0usize; 5];
                    for &i in pair {
                        let b = &self.catalog.branches[i];
                        b.tally(&mut c, b.children + 1);
                    }
                    DegreeCensus::new(c[1], c[2], c[3], c[4])
                }),
                Stage::Central(m) => m.advance().map(|kids| {
                    let mut c = [0usize; 5];
                    c[kids.len()] += 1;
                    for &i in kids {
                        let b = &self.catalog.branches[i];
                        b.tally(&mut c, b.children + 1);
                    }
                    DegreeCensus::new(c[1], c[2], c[3], c[4])
                }),
            };
            match census {
                Some(c) if self.filter.accepts(&c) => return Some(c),
                Some(_) => continue,
                None => {
                    self.stages.remove(0);
                }
            }
        }
    }

    /// Level sequence of the current candidate (two halves for two centroids).
    fn current_tree(&self) -> ChemicalTree {
        let branches = &self.catalog.branches;
        match &self.stages[0] {
            Stage::Single { .. } => ChemicalTree::from_adjacency(vec![Vec::new()]),
            Stage::Bicentral(m) => {
                let (a, b) = (&branches[m.picks[0]], &branches[m.picks[1]]);
                let half = a.size();
                let mut adj = vec![Vec::new(); 2 * half];
                for (offset, branch) in [(0, a), (half, b)] {
                    let levels: Vec<usize> = branch.levels.iter().map(|&l| l as usize).collect();
                    for (u, v) in edges_from_levels(&levels).expect("catalog levels are valid") {
                        adj[u + offset].push(v + offset);
                        adj[v + offset].push(u + offset);
                    }
                }
                adj[0].push(half);
                adj[half].push(0);
                ChemicalTree::from_adjacency(adj)
            }
            Stage::Central(m) => {
                let mut levels = Vec::with_capacity(self.order);
                levels.push(0usize);
                for &i in &m.picks {
                    levels.extend(branches[i].levels.iter().map(|&l| l as usize + 1));
                }
                let mut adj = vec![Vec::new(); self.order];
                for (u, v) in edges_from_levels(&levels).expect("generated levels are valid") {
                    adj[u].push(v);
                    adj[v].push(u);
                }
                ChemicalTree::from_adjacency(adj)
            }
        }
    }

    /// Counts the remaining trees without building them.
    pub fn count_remaining(mut self) -> usize {
        let mut count = 0;
        while self.advance().is_some() {
            count += 1;
        }
        count
    }
}

impl Iterator for TreeEnumerator {
    type Item = ChemicalTree;

    fn next(&mut self) -> Option<ChemicalTree> {
        self.advance()?;
        Some(self.current_tree())
    }
}

/// Every chemical tree of order `n`, one per isomorphism class.
pub fn enumerate_chemical_trees(n: usize) -> Result<TreeEnumerator, EnumError> {
    TreeEnumerator::new(n, EnumFilter::None)
}

/// The members of `CT(n, k)` or `CT*(n, b)` (empty when the class is empty).
pub fn enumerate_filtered(n: usize, filter: EnumFilter) -> Result<TreeEnumerator, EnumError> {
    TreeEnumerator::new(n, filter)
}

pub fn count_chemical_trees(n: usize, filter: EnumFilter) -> Result<usize, EnumError> {
    Ok(TreeEnumerator::new(n, filter)?.count_remaining())
}
