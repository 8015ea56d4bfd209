//! Local rewrites that strictly increase a Zagreb index while keeping the
//! class parameter (segments `k` or branching vertices `b`) fixed.
//!
//! Each kind removes and adds a few edges. [`find_moves`] lists every site
//! where a kind's hypothesis holds; [`apply_move`] performs one of them. The
//! resulting tree is revalidated, so a rewrite can never yield a non-tree or
//! a vertex of degree above 4 silently.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::Family;
use crate::error::MoveError;
use crate::tree::ChemicalTree;
use crate::witness::Condition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Three degree-3 vertices `u`, `v`, `w` where the paths from `w` to `u`
    /// and to `v` share their first edge: the other two branches of `w` move
    /// to `u` and `v`.
    MergeDeg3,
    /// An internal path of length at least 2 is shortened to one edge and its
    /// inner vertices are re-hung at a pendent vertex.
    ContractInternal,
    /// A pendent path of length at least 3 loses a vertex to a pendent vertex
    /// adjacent to a branching vertex.
    ShortenPendent,
    /// A degree-2 neighbor of a degree-3 vertex moves between a degree-4
    /// vertex and one of its pendent neighbors.
    LeafSwap24,
    /// A degree-3 vertex with two branching neighbors is cut out and
    /// reinserted next to a degree-4 vertex.
    Deg3Detach,
    /// A degree-3 vertex hands two of its branches to a degree-2 vertex.
    Deg2Deg3Elim,
    /// One of two adjacent degree-3 vertices hands its other branches to a
    /// pendent neighbor of a degree-4 vertex.
    AdjDeg3Split,
    /// A degree-3 vertex between two degree-4 vertices moves next to a
    /// pendent vertex.
    Deg3Between4s,
    /// A chain of degree-3 vertices joining two degree-4 vertices is moved
    /// away so that the degree-4 vertices become adjacent.
    Cycle4Fix,
}

impl MoveKind {
    pub const ALL: [MoveKind; 9] = [
        MoveKind::MergeDeg3,
        MoveKind::ContractInternal,
        MoveKind::ShortenPendent,
        MoveKind::LeafSwap24,
        MoveKind::Deg3Detach,
        MoveKind::Deg2Deg3Elim,
        MoveKind::AdjDeg3Split,
        MoveKind::Deg3Between4s,
        MoveKind::Cycle4Fix,
    ];

    /// The kinds used for a family, in search order.
    pub fn for_family(family: Family) -> &'static [MoveKind] {
        match family {
            Family::Segments => &[
                MoveKind::MergeDeg3,
                MoveKind::ContractInternal,
                MoveKind::ShortenPendent,
                MoveKind::LeafSwap24,
                MoveKind::Deg3Detach,
            ],
            Family::Branching => &[
                MoveKind::Deg2Deg3Elim,
                MoveKind::ContractInternal,
                MoveKind::ShortenPendent,
                MoveKind::AdjDeg3Split,
                MoveKind::Deg3Between4s,
                MoveKind::Cycle4Fix,
            ],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MoveKind::MergeDeg3 => "MergeDeg3",
            MoveKind::ContractInternal => "ContractInternal",
            MoveKind::ShortenPendent => "ShortenPendent",
            MoveKind::LeafSwap24 => "LeafSwap24",
            MoveKind::Deg3Detach => "Deg3Detach",
            MoveKind::Deg2Deg3Elim => "Deg2Deg3Elim",
            MoveKind::AdjDeg3Split => "AdjDeg3Split",
            MoveKind::Deg3Between4s => "Deg3Between4s",
            MoveKind::Cycle4Fix => "Cycle4Fix",
        }
    }

    /// Whether the kind also strictly increases `M1` (all kinds increase `M2`).
    pub fn increases_m1(&self) -> bool {
        matches!(self, MoveKind::MergeDeg3 | MoveKind::Deg2Deg3Elim)
    }

    /// Whether `t` has the configuration this kind removes, regardless of
    /// whether a rewrite site exists.
    pub fn violated_by(&self, t: &ChemicalTree) -> bool {
        let census = t.degree_census();
        match self {
            MoveKind::MergeDeg3 => census.n3 >= 3,
            MoveKind::ContractInternal => !Condition::InternalPathLength1.holds(t, Family::Segments),
            MoveKind::ShortenPendent => !Condition::StarlikeVsLongPendent.holds(t, Family::Segments),
            MoveKind::LeafSwap24 => !Condition::Deg4PendentVsDeg3Deg2.holds(t, Family::Segments),
            MoveKind::Deg3Detach => !Condition::Deg3BranchingNeighbors.holds(t, Family::Segments),
            MoveKind::Deg2Deg3Elim => census.n2 > 0 && census.n3 > 0,
            MoveKind::AdjDeg3Split => !Condition::Deg4PendentVsAdjacentDeg3.holds(t, Family::Branching),
            MoveKind::Deg3Between4s => !Condition::Deg3AtMostOneDeg4Neighbor.holds(t, Family::Branching),
            MoveKind::Cycle4Fix => t.degree4_components() >= 2,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A vertex named by a rewrite, with the role it plays there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub role: &'static str,
    pub vertex: usize,
}

/// One applicable rewrite: its kind, the vertices involved and the edges it
/// removes and adds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSpec {
    pub kind: MoveKind,
    pub sites: Vec<Site>,
    pub remove: Vec<(usize, usize)>,
    pub add: Vec<(usize, usize)>,
}

impl MoveSpec {
    pub fn site(&self, role: &str) -> Option<usize> {
        self.sites.iter().find(|s| s.role == role).map(|s| s.vertex)
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for s in &self.sites {
            write!(f, " {}={}", s.role, s.vertex)?;
        }
        f.write_str(" remove")?;
        for (a, b) in &self.remove {
            write!(f, " {a}-{b}")?;
        }
        f.write_str(" add")?;
        for (a, b) in &self.add {
            write!(f, " {a}-{b}")?;
        }
        Ok(())
    }
}

fn spec(
    kind: MoveKind,
    sites: &[(&'static str, usize)],
    remove: &[(usize, usize)],
    add: &[(usize, usize)],
) -> MoveSpec {
    MoveSpec {
        kind,
        sites: sites.iter().map(|&(role, vertex)| Site { role, vertex }).collect(),
        remove: remove.to_vec(),
        add: add.to_vec(),
    }
}

/// Every applicable rewrite of the family's kinds, ordered by kind and then by
/// site ids.
pub fn find_moves(t: &ChemicalTree, family: Family) -> Vec<MoveSpec> {
    MoveKind::for_family(family).iter().flat_map(|&k| find_moves_of_kind(t, k)).collect()
}

/// Every applicable rewrite of one kind, ordered by site ids.
pub fn find_moves_of_kind(t: &ChemicalTree, kind: MoveKind) -> Vec<MoveSpec> {
    let mut out = match kind {
        MoveKind::MergeDeg3 => merge_deg3(t),
        MoveKind::ContractInternal => contract_internal(t),
        MoveKind::ShortenPendent => shorten_pendent(t),
        MoveKind::LeafSwap24 => leaf_swap24(t),
        MoveKind::Deg3Detach => deg3_detach(t),
        MoveKind::Deg2Deg3Elim => deg2_deg3_elim(t),
        MoveKind::AdjDeg3Split => adj_deg3_split(t),
        MoveKind::Deg3Between4s => deg3_between4s(t),
        MoveKind::Cycle4Fix => cycle4_fix(t),
    };
    out.sort();
    out.dedup();
    out
}

/// Applies `m` to `t`. Vertex ids are kept.
pub fn apply_move(t: &ChemicalTree, m: &MoveSpec) -> Result<ChemicalTree, MoveError> {
    if !find_moves_of_kind(t, m.kind).contains(m) {
        return Err(MoveError::NotApplicable("sites do not satisfy the move's hypothesis"));
    }
    t.rewired(&m.remove, &m.add).map_err(MoveError::Invalid)
}

/// The kinds of the family whose forbidden configuration occurs in `t`.
pub fn violations(t: &ChemicalTree, family: Family) -> Vec<MoveKind> {
    MoveKind::for_family(family).iter().copied().filter(|k| k.violated_by(t)).collect()
}

fn vertices_of_degree(t: &ChemicalTree, d: usize) -> Vec<usize> {
    (0..t.order()).filter(|&v| t.degree(v) == d).collect()
}

/// Pendent vertices paired with their neighbor.
fn pendents(t: &ChemicalTree) -> Vec<(usize, usize)> {
    (0..t.order()).filter(|&v| t.degree(v) == 1).map(|v| (v, t.neighbors(v)[0])).collect()
}

/// Vertices reachable from `start` without entering any of `blocked`.
fn reachable_avoiding(t: &ChemicalTree, start: usize, blocked: &[usize]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v) {
            if !blocked.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

fn merge_deg3(t: &ChemicalTree) -> Vec<MoveSpec> {
    let deg3 = vertices_of_degree(t, 3);
    let mut out = Vec::new();
    for &w in &deg3 {
        // first step from w towards each other degree-3 vertex
        let (_, parent) = t.bfs(w);
        let toward = |x: usize| {
            let mut x = x;
            while parent[x] != w {
                x = parent[x];
            }
            x
        };
        for &u in deg3.iter().filter(|&&u| u != w) {
            let w3 = toward(u);
            let [w1, w2] = others(t, w, &[w3]);
            for &v in deg3.iter().filter(|&&v| v != w && v != u && toward(v) == w3) {
                out.push(spec(
                    MoveKind::MergeDeg3,
                    &[("u", u), ("v", v), ("w", w), ("w1", w1), ("w2", w2), ("w3", w3)],
                    &[(w, w1), (w, w2)],
                    &[(u, w1), (v, w2)],
                ));
            }
        }
    }
    out
}

/// The neighbors of `v` outside `exclude`, which must leave exactly `N` of them.
fn others<const N: usize>(t: &ChemicalTree, v: usize, exclude: &[usize]) -> [usize; N] {
    let rest: Vec<usize> = t.neighbors(v).iter().copied().filter(|w| !exclude.contains(w)).collect();
    rest.try_into().expect("neighbor count matches the degree")
}

fn contract_internal(t: &ChemicalTree) -> Vec<MoveSpec> {
    let report = t.path_report();
    let leaves = pendents(t);
    let mut out = Vec::new();
    for ip in report.internal_paths.iter().filter(|p| p.length >= 2) {
        let path = t.path_between(ip.ends.0, ip.ends.1);
        let r = path.len() - 1;
        let (v0, v1, vr1, vr) = (path[0], path[1], path[r - 1], path[r]);
        for &(u, v) in &leaves {
            out.push(spec(
                MoveKind::ContractInternal,
                &[("v0", v0), ("v1", v1), ("vr-1", vr1), ("vr", vr), ("u", u), ("v", v)],
                &[(u, v), (v0, v1), (vr1, vr)],
                &[(v0, vr), (u, v1), (vr1, v)],
            ));
        }
    }
    out
}

fn shorten_pendent(t: &ChemicalTree) -> Vec<MoveSpec> {
    let report = t.path_report();
    let starlike: Vec<(usize, usize)> = pendents(t).into_iter().filter(|&(_, v)| t.degree(v) >= 3).collect();
    let mut out = Vec::new();
    for pp in report.pendent_paths.iter().filter(|p| p.length >= 3) {
        let path = t.path_between(pp.leaf, pp.branch);
        let (v1, v2, v3) = (path[0], path[1], path[2]);
        for &(u, v) in &starlike {
            out.push(spec(
                MoveKind::ShortenPendent,
                &[("v1", v1), ("v2", v2), ("v3", v3), ("vr", pp.branch), ("u", u), ("v", v)],
                &[(u, v), (v1, v2), (v2, v3)],
                &[(u, v2), (v2, v), (v1, v3)],
            ));
        }
    }
    out
}

fn leaf_swap24(t: &ChemicalTree) -> Vec<MoveSpec> {
    let on_deg4: Vec<(usize, usize)> = pendents(t).into_iter().filter(|&(_, w)| t.degree(w) == 4).collect();
    let mut out = Vec::new();
    for v in vertices_of_degree(t, 3) {
        for &u in t.neighbors(v).iter().filter(|&&u| t.degree(u) == 2) {
            let tt = t.other_neighbor(u, v);
            for &(p, w) in on_deg4.iter().filter(|&&(_, w)| w != tt) {
                out.push(spec(
                    MoveKind::LeafSwap24,
                    &[("v", v), ("u", u), ("t", tt), ("p", p), ("w", w)],
                    &[(tt, u), (u, v), (p, w)],
                    &[(tt, v), (p, u), (u, w)],
                ));
            }
        }
    }
    out
}

fn deg3_detach(t: &ChemicalTree) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    for u in vertices_of_degree(t, 3) {
        let branching: Vec<usize> = t.neighbors(u).iter().copied().filter(|&x| t.degree(x) >= 3).collect();
        if branching.len() < 2 {
            continue;
        }
        let (bfs, parent) = t.bfs(u);
        for &v in &branching {
            for &w in &branching {
                if v == w {
                    continue;
                }
                let side = reachable_avoiding(t, w, &[u]);
                // nearest degree-4 vertex on w's side with a low-degree child
                let site = bfs.iter().filter(|x| side.contains(x) && t.degree(**x) == 4).find_map(|&vk| {
                    t.neighbors(vk).iter().copied().find(|&c| c != parent[vk] && t.degree(c) <= 2).map(|vk1| (vk, vk1))
                });
                if let Some((vk, vk1)) = site {
                    out.push(spec(
                        MoveKind::Deg3Detach,
                        &[("u", u), ("v", v), ("w", w), ("vk", vk), ("vk+1", vk1)],
                        &[(v, u), (u, w), (vk, vk1)],
                        &[(v, w), (vk, u), (u, vk1)],
                    ));
                }
            }
        }
    }
    out
}

fn deg2_deg3_elim(t: &ChemicalTree) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    for v in vertices_of_degree(t, 2) {
        let Some(&w) = t.neighbors(v).iter().find(|&&x| t.degree(x) >= 3) else {
            continue;
        };
        let u = t.other_neighbor(v, w);
        for z in vertices_of_degree(t, 3) {
            let path = t.path_between(v, z);
            let z3 = path[path.len() - 2];
            let [z1, z2] = others(t, z, &[z3]);
            out.push(spec(
                MoveKind::Deg2Deg3Elim,
                &[("v", v), ("u", u), ("w", w), ("z", z), ("z1", z1), ("z2", z2), ("z3", z3)],
                &[(z1, z), (z2, z)],
                &[(v, z1), (v, z2)],
            ));
        }
    }
    out
}

fn adj_deg3_split(t: &ChemicalTree) -> Vec<MoveSpec> {
    let on_deg4: Vec<(usize, usize)> = pendents(t).into_iter().filter(|&(_, v)| t.degree(v) == 4).collect();
    let mut out = Vec::new();
    for (a, b) in t.edges().filter(|&(a, b)| t.degree(a) == 3 && t.degree(b) == 3) {
        for (w, z) in [(a, b), (b, a)] {
            let near_z = reachable_avoiding(t, z, &[w]);
            let [w1, w2] = others(t, w, &[z]);
            for &(u, v) in on_deg4.iter().filter(|(u, _)| near_z.contains(u)) {
                out.push(spec(
                    MoveKind::AdjDeg3Split,
                    &[("w", w), ("z", z), ("w1", w1), ("w2", w2), ("u", u), ("v", v)],
                    &[(w1, w), (w2, w)],
                    &[(u, w1), (u, w2)],
                ));
            }
        }
    }
    out
}

fn deg3_between4s(t: &ChemicalTree) -> Vec<MoveSpec> {
    let starlike: Vec<(usize, usize)> = pendents(t).into_iter().filter(|&(_, v)| t.degree(v) >= 3).collect();
    let mut out = Vec::new();
    for z in vertices_of_degree(t, 3) {
        let nbrs = t.neighbors(z);
        for &x in nbrs {
            for &y in nbrs {
                if x >= y || t.degree(x) != 4 || t.degree(y) != 4 {
                    continue;
                }
                let [z3] = others(t, z, &[x, y]);
                let third = reachable_avoiding(t, z3, &[z]);
                for &(u, v) in starlike.iter().filter(|&&(_, v)| v != z && !third.contains(&v)) {
                    out.push(spec(
                        MoveKind::Deg3Between4s,
                        &[("z", z), ("x", x), ("y", y), ("u", u), ("v", v)],
                        &[(x, z), (z, y), (u, v)],
                        &[(x, y), (u, z), (z, v)],
                    ));
                }
            }
        }
    }
    out
}

fn cycle4_fix(t: &ChemicalTree) -> Vec<MoveSpec> {
    let starlike: Vec<(usize, usize)> = pendents(t).into_iter().filter(|&(_, w)| t.degree(w) >= 3).collect();
    let mut out = Vec::new();
    for u0 in vertices_of_degree(t, 4) {
        // depth-first walk through degree-3 vertices until another degree-4 vertex
        let mut stack: Vec<Vec<usize>> =
            t.neighbors(u0).iter().filter(|&&x| t.degree(x) == 3).map(|&x| vec![u0, x]).collect();
        while let Some(path) = stack.pop() {
            let last = path[path.len() - 1];
            let prev = path[path.len() - 2];
            for &x in t.neighbors(last).iter().filter(|&&x| x != prev) {
                let mut next = path.clone();
                next.push(x);
                match t.degree(x) {
                    3 => stack.push(next),
                    4 if u0 < x => {
                        let r = next.len() - 1;
                        let (u1, ur1, ur) = (next[1], next[r - 1], next[r]);
                        let chain = reachable_avoiding(t, u1, &[u0, ur]);
                        for &(v, w) in starlike.iter().filter(|&&(_, w)| !chain.contains(&w)) {
                            out.push(spec(
                                MoveKind::Cycle4Fix,
                                &[("u0", u0), ("u1", u1), ("ur-1", ur1), ("ur", ur), ("v", v), ("w", w)],
                                &[(u0, u1), (ur1, ur), (v, w)],
                                &[(u0, ur), (u1, v), (ur1, w)],
                            ));
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    out
}
