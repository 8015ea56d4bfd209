//! Explicit extremal trees and membership tests for the extremal classes.
//!
//! Witnesses are built in two steps. First a skeleton of branching vertices:
//! the degree-4 vertices form a path (the spine) and the degree-3 vertices hang
//! off it. Then every free slot of the skeleton receives a pendent path.
//! Length-2 paths go to degree-4 slots before degree-3 slots; when there are
//! more degree-2 vertices than slots, every slot gets length 2 and the surplus
//! extends the first slot's path. Slots are visited in BFS order from vertex 0
//! and ids are assigned in construction order, so the output is deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{self, ClassQuery, Family, Index, Regime};
use crate::error::BoundsError;
use crate::tree::ChemicalTree;

/// A necessary condition checked by [`class_membership`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    DegreeSequence,
    InternalPathLength1,
    StarlikeVsLongPendent,
    Deg3BranchingNeighbors,
    /// Segments: a degree-4 vertex with a pendent neighbor excludes a degree-3
    /// vertex with a degree-2 neighbor.
    Deg4PendentVsDeg3Deg2,
    /// Branching: a degree-4 vertex with a pendent neighbor excludes adjacent
    /// degree-3 vertices.
    Deg4PendentVsAdjacentDeg3,
    Deg3AtMostOneDeg4Neighbor,
    Deg4InducedTree,
}

impl Condition {
    pub fn label(&self) -> &'static str {
        match self {
            Condition::DegreeSequence => "degree-sequence",
            Condition::InternalPathLength1 => "internal-path-length-1",
            Condition::StarlikeVsLongPendent => "starlike-vs-long-pendent",
            Condition::Deg3BranchingNeighbors => "deg3-branching-neighbors",
            Condition::Deg4PendentVsDeg3Deg2 => "deg4-pendent-vs-deg3-deg2",
            Condition::Deg4PendentVsAdjacentDeg3 => "deg4-pendent-vs-adjacent-deg3",
            Condition::Deg3AtMostOneDeg4Neighbor => "deg3-at-most-one-deg4-neighbor",
            Condition::Deg4InducedTree => "deg4-induced-tree",
        }
    }

    /// The structural conditions of the `M2` classes, in checking order.
    pub fn structural(family: Family) -> [Condition; 5] {
        match family {
            Family::Segments => [
                Condition::InternalPathLength1,
                Condition::StarlikeVsLongPendent,
                Condition::Deg3BranchingNeighbors,
                Condition::Deg4PendentVsDeg3Deg2,
                Condition::Deg4InducedTree,
            ],
            Family::Branching => [
                Condition::InternalPathLength1,
                Condition::Deg4PendentVsAdjacentDeg3,
                Condition::StarlikeVsLongPendent,
                Condition::Deg3AtMostOneDeg4Neighbor,
                Condition::Deg4InducedTree,
            ],
        }
    }

    /// Whether `t` satisfies this structural condition. `DegreeSequence` needs
    /// the class parameters and is always `true` here.
    pub fn holds(&self, t: &ChemicalTree, family: Family) -> bool {
        match self {
            Condition::DegreeSequence => true,
            Condition::InternalPathLength1 => t.path_report().internal_paths.iter().all(|p| p.length == 1),
            Condition::StarlikeVsLongPendent => {
                let report = t.path_report();
                let starlike = report.pendent_paths.iter().any(|p| p.length == 1);
                !starlike || report.pendent_paths.iter().all(|p| p.length <= 2)
            }
            Condition::Deg3BranchingNeighbors => {
                degree_vertices(t, 3).all(|v| t.neighbors(v).iter().filter(|&&w| t.degree(w) >= 3).count() <= 1)
            }
            Condition::Deg4PendentVsDeg3Deg2 => {
                !has_pendent_on_degree4(t)
                    || !degree_vertices(t, 3).any(|v| t.neighbors(v).iter().any(|&w| t.degree(w) == 2))
            }
            Condition::Deg4PendentVsAdjacentDeg3 => {
                !has_pendent_on_degree4(t) || !t.edges().any(|(a, b)| t.degree(a) == 3 && t.degree(b) == 3)
            }
            Condition::Deg3AtMostOneDeg4Neighbor => {
                degree_vertices(t, 3).all(|v| t.neighbors(v).iter().filter(|&&w| t.degree(w) == 4).count() <= 1)
            }
            Condition::Deg4InducedTree => {
                matches!((family, t.degree4_components()), (_, 1) | (Family::Segments, 0))
            }
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn degree_vertices(t: &ChemicalTree, d: usize) -> impl Iterator<Item = usize> + '_ {
    (0..t.order()).filter(move |&v| t.degree(v) == d)
}

fn has_pendent_on_degree4(t: &ChemicalTree) -> bool {
    degree_vertices(t, 4).any(|v| t.neighbors(v).iter().any(|&w| t.degree(w) == 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub failed_conditions: Vec<Condition>,
}

impl MembershipVerdict {
    fn from_failures(failed_conditions: Vec<Condition>) -> Self {
        MembershipVerdict { member: failed_conditions.is_empty(), failed_conditions }
    }
}

/// Whether `t` belongs to the equality class of the maximum of `index` over
/// the class `(family, n, p)`. Every condition is evaluated, so the verdict
/// lists all failures.
pub fn class_membership(t: &ChemicalTree, family: Family, n: usize, p: usize, index: Index) -> MembershipVerdict {
    let Ok(census) = bounds::extremal_census(family, n, p) else {
        return MembershipVerdict::from_failures(vec![Condition::DegreeSequence]);
    };
    let mut failed = Vec::new();
    if t.order() != n || t.degree_census() != census {
        failed.push(Condition::DegreeSequence);
    }
    let regime = bounds::regime(&ClassQuery::new(family, n, p, index)).expect("feasible");
    let structural = index == Index::M2 && !matches!(regime, Regime::SingleVertex | Regime::Path | Regime::AllCubic);
    if structural {
        failed.extend(Condition::structural(family).into_iter().filter(|c| !c.holds(t, family)));
    }
    MembershipVerdict::from_failures(failed)
}

/// Tree under construction with per-vertex target degrees.
struct Builder {
    adj: Vec<Vec<usize>>,
    target: Vec<usize>,
}

impl Builder {
    fn new() -> Self {
        Builder { adj: Vec::new(), target: Vec::new() }
    }

    fn vertex(&mut self, target: usize) -> usize {
        self.adj.push(Vec::new());
        self.target.push(target);
        self.adj.len() - 1
    }

    fn join(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn spine(&mut self, len: usize) -> Vec<usize> {
        let ids: Vec<usize> = (0..len).map(|_| self.vertex(4)).collect();
        for w in ids.windows(2) {
            self.join(w[0], w[1]);
        }
        ids
    }

    fn hang(&mut self, at: usize, target: usize) -> usize {
        let v = self.vertex(target);
        self.join(at, v);
        v
    }

    fn pendent_path(&mut self, at: usize, length: usize) {
        let mut prev = at;
        for i in 0..length {
            prev = self.hang(prev, if i + 1 == length { 1 } else { 2 });
        }
    }

    /// Free slots of the skeleton in BFS order from vertex 0.
    fn slots(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut order = vec![0];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order.into_iter().flat_map(|v| core::iter::repeat_n(v, self.target[v] - self.adj[v].len())).collect()
    }

    /// Hangs pendent paths carrying `n2` degree-2 vertices on all free slots.
    fn fill(&mut self, n2: usize) {
        let slots = self.slots();
        if n2 <= slots.len() {
            // degree-4 slots take the length-2 paths first
            let mut idx: Vec<usize> = (0..slots.len()).collect();
            idx.sort_by_key(|&i| core::cmp::Reverse(self.target[slots[i]]));
            let mut long = vec![false; slots.len()];
            for &i in idx.iter().take(n2) {
                long[i] = true;
            }
            for (i, &v) in slots.iter().enumerate() {
                self.pendent_path(v, if long[i] { 2 } else { 1 });
            }
        } else {
            let surplus = n2 - slots.len();
            for (i, &v) in slots.iter().enumerate() {
                self.pendent_path(v, if i == 0 { 2 + surplus } else { 2 });
            }
        }
    }

    fn finish(self) -> ChemicalTree {
        debug_assert!(self.adj.iter().zip(&self.target).all(|(a, &t)| a.len() == t));
        ChemicalTree::from_adjacency(self.adj)
    }
}

/// An explicit tree attaining both maxima over the class `(family, n, p)`.
pub fn build_witness(family: Family, n: usize, p: usize) -> Result<ChemicalTree, BoundsError> {
    let census = bounds::extremal_census(family, n, p)?;
    if n == 1 {
        return Ok(ChemicalTree::path(1));
    }
    let regime = bounds::regime(&ClassQuery::new(family, n, p, Index::M2))?;
    let mut b = Builder::new();
    match regime {
        Regime::SingleVertex | Regime::Path => return Ok(ChemicalTree::path(n)),
        Regime::AllCubic => {
            let spine: Vec<usize> = (0..p).map(|_| b.vertex(3)).collect();
            for w in spine.windows(2) {
                b.join(w[0], w[1]);
            }
            b.fill(0);
        }
        _ => {
            let spine = b.spine(census.n4);
            let hosts = if spine.is_empty() { Vec::new() } else { b.slots() };
            let n3 = census.n3;
            if spine.is_empty() {
                // k = 3: one centre; k = 5: two adjacent degree-3 vertices
                let a = b.vertex(3);
                if n3 == 2 {
                    b.hang(a, 3);
                }
            } else if family == Family::Segments {
                // at most two, on opposite spine ends
                let ends = [spine[0], spine[spine.len() - 1]];
                for &end in ends.iter().take(n3) {
                    b.hang(end, 3);
                }
            } else {
                let hosted = n3.min(2 * spine.len() + 2);
                let mut first_hosted = None;
                for &h in hosts.iter().take(hosted) {
                    let v = b.hang(h, 3);
                    first_hosted.get_or_insert(v);
                }
                let mut prev = first_hosted.unwrap_or(0);
                for _ in hosted..n3 {
                    prev = b.hang(prev, 3);
                }
            }
            b.fill(census.n2);
        }
    }
    let t = b.finish();
    debug_assert_eq!(t.order(), n);
    Ok(t)
}
