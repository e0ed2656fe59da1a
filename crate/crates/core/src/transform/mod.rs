//! Edge-moving transformations and their monotonicity checks.
//!
//! Every transformation takes an explicit [`TransformSpec`] naming the
//! vertices and edges involved, validates the preconditions on the input
//! hypergraph, and returns the result together with the predicted and the
//! measured effect: a Zagreb-index change for T1 to T4, a drop in the number
//! of 3-edge loose paths for T5 and the path shift.
//!
//! Terminology used in the checks:
//!
//! * a *pendent edge at `u`* contains `u` and `m-1` vertices of degree 1;
//! * a *pendent vertex* is a degree-1 vertex of a pendent edge;
//! * the *branch* of `(w, e)` is the set of edges reachable from `e`
//!   without passing through `w`; it is *pendant* when `e` is its only edge
//!   at `w` and it is acyclic.

mod reduce;
mod sites;

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::census::{count_pattern, Pattern};
use crate::error::{Error, Result};
use crate::family::{coalesce, hyperpath, Attachment};
use crate::hypergraph::{Hypergraph, Vertex};

pub use reduce::{reduce_to_extremal, Mode, Step};
pub use sites::{legal_sites, merge_sites, sites_of_kind, KINDS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TransformSpec {
    /// Move every pendent edge at `u` to `v`, where `edge` is the only
    /// other edge at `u` and contains both.
    T1 {
        edge: Vec<Vertex>,
        u: Vertex,
        v: Vertex,
    },
    /// Move the pendent edges of the lower-degree vertex to the other one.
    T2 { u: Vertex, v: Vertex },
    /// Detach `moved_edge` from `vertex` and hang it at `pendent`, which
    /// lies in the branch of `kept_edge`.
    T3 {
        vertex: Vertex,
        moved_edge: Vec<Vertex>,
        kept_edge: Vec<Vertex>,
        pendent: Vertex,
    },
    /// Detach the binary tree hanging from `u` through `moved_edge` and
    /// hang it at `target`: `v` itself, or a degree-1 vertex of the binary
    /// tree hanging from `v`.
    T4 {
        u: Vertex,
        v: Vertex,
        moved_edge: Vec<Vertex>,
        target: Vertex,
    },
    /// Move the hyperpath hanging from cycle vertex `attach` (through
    /// `moved_edge`) to the pendent vertex `target` of another hyperpath.
    T5 {
        attach: Vertex,
        moved_edge: Vec<Vertex>,
        target: Vertex,
    },
    /// Build the two hypergraphs obtained by hanging paths of `r` and `s`
    /// edges from the degree-1 vertices `u` and `v` of `edge`, or one path of
    /// `r + s` edges from `u`.
    PathShift {
        edge: Vec<Vertex>,
        u: Vertex,
        v: Vertex,
        r: usize,
        s: usize,
    },
    /// Join the hyperpaths hanging from `u` and `v` of `edge` into one path
    /// hanging from the endpoint of the longer one.
    MergePaths {
        edge: Vec<Vertex>,
        u: Vertex,
        v: Vertex,
    },
}

impl TransformSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            TransformSpec::T1 { .. } => "T1",
            TransformSpec::T2 { .. } => "T2",
            TransformSpec::T3 { .. } => "T3",
            TransformSpec::T4 { .. } => "T4",
            TransformSpec::T5 { .. } => "T5",
            TransformSpec::PathShift { .. } => "PathShift",
            TransformSpec::MergePaths { .. } => "MergePaths",
        }
    }
}

/// What a transformation is expected to change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "metric", rename_all = "snake_case")]
pub enum Effect {
    /// Zagreb index change; `increasing` gives the expected sign.
    Zagreb {
        predicted: i64,
        actual: i64,
        increasing: bool,
    },
    /// Number of 3-edge loose paths, which must drop strictly.
    P3 { before: u64, after: u64 },
}

impl Effect {
    pub fn holds(&self) -> bool {
        match *self {
            Effect::Zagreb {
                predicted,
                actual,
                increasing,
            } => predicted == actual && if increasing { actual > 0 } else { actual < 0 },
            Effect::P3 { before, after } => after < before,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applied {
    /// The hypergraph the move starts from. Equal to the input except for
    /// the path shift, where it is the split configuration.
    pub before: Hypergraph,
    pub result: Hypergraph,
    pub effect: Effect,
}

pub fn apply(h: &Hypergraph, spec: &TransformSpec) -> Result<Applied> {
    match spec {
        TransformSpec::T1 { edge, u, v } => apply_t1(h, edge, *u, *v),
        TransformSpec::T2 { u, v } => apply_t2(h, *u, *v),
        TransformSpec::T3 {
            vertex,
            moved_edge,
            kept_edge,
            pendent,
        } => apply_t3(h, *vertex, moved_edge, kept_edge, *pendent),
        TransformSpec::T4 {
            u,
            v,
            moved_edge,
            target,
        } => apply_t4(h, *u, *v, moved_edge, *target),
        TransformSpec::T5 {
            attach,
            moved_edge,
            target,
        } => apply_t5(h, *attach, moved_edge, *target),
        TransformSpec::PathShift { edge, u, v, r, s } => {
            let shift = path_shift(h, edge, *u, *v, *r, *s)?;
            Ok(Applied {
                effect: Effect::P3 {
                    before: shift.p3_split,
                    after: shift.p3_merged,
                },
                before: shift.split,
                result: shift.merged,
            })
        }
        TransformSpec::MergePaths { edge, u, v } => merge_paths(h, edge, *u, *v),
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

fn check_vertex(h: &Hypergraph, v: Vertex) -> Result<()> {
    if v < h.n() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: v,
            n: h.n(),
        })
    }
}

fn find_edge(h: &Hypergraph, vertices: &[Vertex]) -> Result<usize> {
    for &v in vertices {
        check_vertex(h, v)?;
    }
    h.edge_index(vertices)
        .ok_or_else(|| Error::Precondition(format!("{vertices:?} is not an edge")))
}

fn contains(h: &Hypergraph, e: usize, v: Vertex) -> bool {
    h.edge(e).binary_search(&v).is_ok()
}

fn edges_at(h: &Hypergraph, v: Vertex) -> Vec<usize> {
    (0..h.q()).filter(|&e| contains(h, e, v)).collect()
}

/// Edges at `u` whose other vertices all have degree 1.
pub fn pendent_edges_at(h: &Hypergraph, u: Vertex) -> Vec<usize> {
    let deg = h.degrees();
    edges_at(h, u)
        .into_iter()
        .filter(|&e| h.edge(e).iter().all(|&x| x == u || deg.get(x) == 1))
        .collect()
}

/// A degree-1 vertex lying in an edge with at least `m-1` degree-1 vertices.
pub fn is_pendent_vertex(h: &Hypergraph, x: Vertex) -> bool {
    let deg = h.degrees();
    if deg.get(x) != 1 {
        return false;
    }
    let e = edges_at(h, x)[0];
    h.edge(e).iter().filter(|&&y| deg.get(y) == 1).count() >= h.m() - 1
}

/// Edges reachable from `e` without passing through `w`.
pub fn branch(h: &Hypergraph, w: Vertex, e: usize) -> BTreeSet<usize> {
    let inc = h.incidence();
    let mut seen = BTreeSet::from([e]);
    let mut queue = VecDeque::from([e]);
    while let Some(f) = queue.pop_front() {
        for &x in h.edge(f) {
            if x == w {
                continue;
            }
            for &g in &inc[x] {
                if seen.insert(g) {
                    queue.push_back(g);
                }
            }
        }
    }
    seen
}

fn branch_vertices(h: &Hypergraph, edges: &BTreeSet<usize>) -> BTreeSet<Vertex> {
    edges
        .iter()
        .flat_map(|&e| h.edge(e).iter().copied())
        .collect()
}

/// The branch of `(w, e)` if it hangs from `w` as a tree through `e` alone.
fn pendant_tree(h: &Hypergraph, w: Vertex, e: usize) -> Option<BTreeSet<usize>> {
    let b = branch(h, w, e);
    let at_w = b.iter().filter(|&&f| contains(h, f, w)).count();
    let vertices = branch_vertices(h, &b).len();
    (at_w == 1 && vertices == b.len() * (h.m() - 1) + 1).then_some(b)
}

/// Every vertex of the tree other than `w` has degree at most 2.
fn is_binary_tree(h: &Hypergraph, w: Vertex, tree: &BTreeSet<usize>) -> bool {
    let deg = h.degrees();
    branch_vertices(h, tree)
        .into_iter()
        .all(|x| x == w || deg.get(x) <= 2)
}

/// Replaces vertex `from` by `to` in each listed edge.
fn moved(h: &Hypergraph, moves: &[(usize, Vertex, Vertex)]) -> Result<Hypergraph> {
    let mut edges = h.edges().to_vec();
    for &(e, from, to) in moves {
        for x in edges[e].iter_mut() {
            if *x == from {
                *x = to;
            }
        }
    }
    Hypergraph::with_vertex_count(h.m(), h.n(), edges).map_err(|err| {
        Error::Inconsistent(format!(
            "transformation produced an invalid hypergraph: {err}"
        ))
    })
}

fn zagreb_effect(h: &Hypergraph, result: Hypergraph, predicted: i64, increasing: bool) -> Applied {
    let actual = result.zagreb() as i64 - h.zagreb() as i64;
    Applied {
        before: h.clone(),
        result,
        effect: Effect::Zagreb {
            predicted,
            actual,
            increasing,
        },
    }
}

pub fn apply_t1(h: &Hypergraph, edge: &[Vertex], u: Vertex, v: Vertex) -> Result<Applied> {
    let e = find_edge(h, edge)?;
    check_vertex(h, u)?;
    check_vertex(h, v)?;
    if u == v || !contains(h, e, u) || !contains(h, e, v) {
        return fail("u and v must be distinct vertices of the edge");
    }
    let dv = h.degree(v);
    if dv < 2 {
        return fail(format!("d(v) = {dv}, need d(v) >= 2"));
    }
    let pendent = pendent_edges_at(h, u);
    let t = pendent.len();
    if t == 0 {
        return fail("no pendent edge at u");
    }
    if h.degree(u) != t + 1 {
        return fail(format!(
            "d(u) = {} but u has {t} pendent edges besides the edge",
            h.degree(u)
        ));
    }
    let moves: Vec<_> = pendent.iter().map(|&p| (p, u, v)).collect();
    let result = moved(h, &moves)?;
    Ok(zagreb_effect(
        h,
        result,
        2 * t as i64 * (dv as i64 - 1),
        true,
    ))
}

pub fn apply_t2(h: &Hypergraph, u: Vertex, v: Vertex) -> Result<Applied> {
    check_vertex(h, u)?;
    check_vertex(h, v)?;
    if u == v {
        return fail("u and v must differ");
    }
    let at_u = pendent_edges_at(h, u);
    let at_v = pendent_edges_at(h, v);
    if at_u.is_empty() || at_v.is_empty() {
        return fail("both u and v need pendent edges");
    }
    if at_u.iter().any(|e| at_v.contains(e)) {
        return fail("a pendent edge is shared by u and v");
    }
    let (du, dv) = (h.degree(u) as i64, h.degree(v) as i64);
    let (r, t) = (at_u.len() as i64, at_v.len() as i64);
    let (moves, predicted): (Vec<_>, i64) = if dv >= du {
        if du == r {
            return fail("moving every edge of u would leave it isolated");
        }
        (
            at_u.iter().map(|&e| (e, u, v)).collect(),
            2 * r * (r + dv - du),
        )
    } else {
        if dv == t {
            return fail("moving every edge of v would leave it isolated");
        }
        (
            at_v.iter().map(|&e| (e, v, u)).collect(),
            2 * t * (t + du - dv),
        )
    };
    let result = moved(h, &moves)?;
    Ok(zagreb_effect(h, result, predicted, true))
}

pub fn apply_t3(
    h: &Hypergraph,
    w: Vertex,
    moved_edge: &[Vertex],
    kept_edge: &[Vertex],
    pendent: Vertex,
) -> Result<Applied> {
    let ek = find_edge(h, moved_edge)?;
    let ek1 = find_edge(h, kept_edge)?;
    check_vertex(h, w)?;
    check_vertex(h, pendent)?;
    if ek == ek1 || !contains(h, ek, w) || !contains(h, ek1, w) {
        return fail("the moved and kept edges must be distinct edges at the vertex");
    }
    let (Some(b1), Some(b2)) = (pendant_tree(h, w, ek), pendant_tree(h, w, ek1)) else {
        return fail("both edges must start trees hanging from the vertex");
    };
    if !b1.is_disjoint(&b2) {
        return fail("the two branches overlap");
    }
    let tree: BTreeSet<usize> = b1.union(&b2).copied().collect();
    if !is_binary_tree(h, w, &tree) {
        return fail("the hanging tree is not binary");
    }
    let dh = h.degree(w) as i64 - 2;
    if dh < 1 {
        return fail("the host hypergraph is a single vertex");
    }
    if pendent == w || !branch_vertices(h, &b2).contains(&pendent) || !is_pendent_vertex(h, pendent)
    {
        return fail("the target must be a pendent vertex in the branch of the kept edge");
    }
    let result = moved(h, &[(ek, w, pendent)])?;
    Ok(zagreb_effect(h, result, -2 * dh, false))
}

pub fn apply_t4(
    h: &Hypergraph,
    u: Vertex,
    v: Vertex,
    moved_edge: &[Vertex],
    target: Vertex,
) -> Result<Applied> {
    let e0 = find_edge(h, moved_edge)?;
    for x in [u, v, target] {
        check_vertex(h, x)?;
    }
    if u == v {
        return fail("u and v must differ");
    }
    if !contains(h, e0, u) {
        return fail("the moved edge must contain u");
    }
    let Some(t1) = pendant_tree(h, u, e0) else {
        return fail("the moved edge must start a tree hanging from u");
    };
    if !is_binary_tree(h, u, &t1) {
        return fail("the tree hanging from u is not binary");
    }
    let t1_vertices = branch_vertices(h, &t1);
    if t1_vertices.contains(&v) {
        return fail("v lies in the tree hanging from u");
    }
    let dhu = h.degree(u) as i64 - 1;
    if dhu <= 1 {
        return fail(format!("d_H(u) = {dhu}, need d_H(u) > 1"));
    }
    let predicted = if target == v {
        let dhv = h.degree(v) as i64;
        if dhu <= dhv {
            return fail(format!(
                "with no tree at v the move needs d_H(u) > d_H(v), got {dhu} and {dhv}"
            ));
        }
        -2 * (dhu - dhv)
    } else {
        let holder = edges_at(h, v)
            .into_iter()
            .find(|&f| branch_vertices(h, &branch(h, v, f)).contains(&target));
        let Some(f) = holder else {
            return fail("the target is not reachable from v");
        };
        let Some(t2) = pendant_tree(h, v, f) else {
            return fail("the target must lie in a tree hanging from v");
        };
        if !is_binary_tree(h, v, &t2) || branch_vertices(h, &t2).contains(&u) {
            return fail("the tree hanging from v must be binary and avoid u");
        }
        if h.degree(target) != 1 {
            return fail("the target must have degree 1");
        }
        let dhv = h.degree(v) as i64 - 1;
        if dhv < 1 {
            return fail("v has no edge outside its hanging tree");
        }
        if dhu < dhv {
            return fail(format!("need d_H(u) >= d_H(v), got {dhu} and {dhv}"));
        }
        -(2 * dhu - 2)
    };
    let result = moved(h, &[(e0, u, target)])?;
    Ok(zagreb_effect(h, result, predicted, false))
}

/// The hyperpaths hanging from the cycle of a linear unicyclic hypergraph,
/// as (attachment vertex, edge at the attachment, branch edges).
fn cycle_paths(h: &Hypergraph) -> Result<Vec<(Vertex, usize, BTreeSet<usize>)>> {
    if h.m() < 3 {
        return fail("T5 needs m >= 3");
    }
    let Some(cycle) = h.cycle_edges() else {
        return Err(Error::WrongClass {
            expected: "linear unicyclic",
            found: h.structure_class().to_string(),
        });
    };
    let deg = h.degrees();
    let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut cycle_count = vec![0usize; h.n()];
    for &c in &cycle {
        for &x in h.edge(c) {
            cycle_count[x] += 1;
        }
    }
    let mut paths = Vec::new();
    let mut covered = BTreeSet::new();
    for x in h.vertices() {
        if cycle_count[x] == 0 || deg.get(x) == cycle_count[x] {
            continue;
        }
        if cycle_count[x] == 2 {
            return fail("a tree hangs from a vertex shared by two cycle edges");
        }
        if deg.get(x) != 2 {
            return fail("a cycle vertex carries more than one hanging path");
        }
        let f = edges_at(h, x)
            .into_iter()
            .find(|f| !on_cycle.contains(f))
            .expect("degree exceeds cycle incidences");
        let Some(b) = pendant_tree(h, x, f) else {
            return fail("a hanging branch is not a tree");
        };
        if !is_end_attached_path(h, x, &b) {
            return fail("a hanging branch is not a hyperpath attached by its end");
        }
        covered.extend(b.iter().copied());
        paths.push((x, f, b));
    }
    if covered.len() + cycle.len() != h.q() {
        return Err(Error::Inconsistent("hanging paths miss some edges".into()));
    }
    Ok(paths)
}

/// A branch hanging from `x` is a hyperpath whose end edge holds `x`.
fn is_end_attached_path(h: &Hypergraph, x: Vertex, b: &BTreeSet<usize>) -> bool {
    let mut local = vec![0usize; h.n()];
    for &e in b {
        for &y in h.edge(e) {
            local[y] += 1;
        }
    }
    let inner = |e: usize| h.edge(e).iter().filter(|&&y| local[y] == 2).count();
    if local.iter().any(|&d| d > 2) || b.iter().any(|&e| inner(e) > 2) {
        return false;
    }
    let start = b
        .iter()
        .copied()
        .find(|&e| contains(h, e, x))
        .expect("branch holds x");
    local[x] == 1 && inner(start) <= 1
}

pub fn apply_t5(
    h: &Hypergraph,
    attach: Vertex,
    moved_edge: &[Vertex],
    target: Vertex,
) -> Result<Applied> {
    let e1 = find_edge(h, moved_edge)?;
    check_vertex(h, attach)?;
    check_vertex(h, target)?;
    let paths = cycle_paths(h)?;
    if paths.len() < 2 {
        return fail(format!(
            "T5 needs at least 2 hanging paths, found {}",
            paths.len()
        ));
    }
    let Some((_, first, _)) = paths.iter().find(|(x, _, _)| *x == attach) else {
        return fail("no hyperpath hangs from the attachment vertex");
    };
    if *first != e1 {
        return fail("the moved edge must be the path edge at the attachment vertex");
    }
    let other = paths
        .iter()
        .find(|(x, _, b)| *x != attach && branch_vertices(h, b).contains(&target));
    if other.is_none() || !is_pendent_vertex(h, target) {
        return fail("the target must be a pendent vertex of another hanging path");
    }
    let result = moved(h, &[(e1, attach, target)])?;
    Ok(Applied {
        effect: Effect::P3 {
            before: count_pattern(h, Pattern::P3)?,
            after: count_pattern(&result, Pattern::P3)?,
        },
        before: h.clone(),
        result,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathShift {
    pub split: Hypergraph,
    pub merged: Hypergraph,
    pub p3_split: u64,
    pub p3_merged: u64,
}

impl PathShift {
    pub fn holds(&self) -> bool {
        self.p3_split > self.p3_merged
    }
}

/// The attached hypergraphs at the other vertices of `e` must be pairwise
/// disjoint, i.e. lie in different components once `e` is removed.
fn check_shift_host(h: &Hypergraph, e: usize, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    if h.m() < 3 {
        return fail("the path shift needs m >= 3");
    }
    if u == v || !contains(h, e, u) || !contains(h, e, v) {
        return fail("u and v must be distinct vertices of the edge");
    }
    if h.degree(u) != 1 || h.degree(v) != 1 {
        return fail("u and v must have degree 1 in the host");
    }
    if !h.is_connected() {
        return fail("the host must be connected");
    }
    let attached: Vec<Vertex> = h
        .edge(e)
        .iter()
        .copied()
        .filter(|&x| x != u && x != v && h.degree(x) >= 2)
        .collect();
    if attached.is_empty() {
        return fail("no hypergraph is attached to the edge (p = 0)");
    }
    let mut components: Vec<BTreeSet<usize>> = Vec::new();
    for &x in &attached {
        let mut reach = BTreeSet::new();
        for f in edges_at(h, x).into_iter().filter(|&f| f != e) {
            reach.extend(branch(h, x, f));
        }
        if reach.contains(&e) || components.iter().any(|c| !c.is_disjoint(&reach)) {
            return fail("the attached hypergraphs are not disjoint");
        }
        components.push(reach);
    }
    Ok(attached)
}

pub fn path_shift(
    h: &Hypergraph,
    edge: &[Vertex],
    u: Vertex,
    v: Vertex,
    r: usize,
    s: usize,
) -> Result<PathShift> {
    let e = find_edge(h, edge)?;
    check_vertex(h, u)?;
    check_vertex(h, v)?;
    if s < 1 {
        return fail("s must be at least 1");
    }
    if r < s {
        return fail(format!("need r >= s, got r = {r}, s = {s}"));
    }
    check_shift_host(h, e, u, v)?;
    let m = h.m();
    let (pr, ps, prs) = (hyperpath(m, r)?, hyperpath(m, s)?, hyperpath(m, r + s)?);
    let split = coalesce(h, &[Attachment::new(u, &pr, 0), Attachment::new(v, &ps, 0)])?;
    let merged = coalesce(h, &[Attachment::new(u, &prs, 0)])?;
    Ok(PathShift {
        p3_split: count_pattern(&split, Pattern::P3)?,
        p3_merged: count_pattern(&merged, Pattern::P3)?,
        split,
        merged,
    })
}

/// Splits off the hyperpath hanging from `x` away from `e`; returns its
/// edges when it is an end-attached hyperpath.
fn hanging_path(h: &Hypergraph, x: Vertex, e: usize) -> Option<BTreeSet<usize>> {
    let others: Vec<usize> = edges_at(h, x).into_iter().filter(|&f| f != e).collect();
    let [f] = others[..] else {
        return None;
    };
    let b = pendant_tree(h, x, f)?;
    (!b.contains(&e) && is_end_attached_path(h, x, &b)).then_some(b)
}

/// Rewrites `h` as a host with paths hanging from `u` and `v`, then joins
/// the two paths. The move is the path shift read backwards.
pub fn merge_paths(h: &Hypergraph, edge: &[Vertex], u: Vertex, v: Vertex) -> Result<Applied> {
    let e = find_edge(h, edge)?;
    check_vertex(h, u)?;
    check_vertex(h, v)?;
    if u == v || !contains(h, e, u) || !contains(h, e, v) {
        return fail("u and v must be distinct vertices of the edge");
    }
    let (Some(pu), Some(pv)) = (hanging_path(h, u, e), hanging_path(h, v, e)) else {
        return fail("u and v must each carry one hyperpath attached by its end");
    };
    let keep: Vec<usize> = (0..h.q())
        .filter(|f| !pu.contains(f) && !pv.contains(f))
        .collect();
    let (host, map) = h.sub_hypergraph(&keep)?;
    let hu = map[u].expect("u stays in the host");
    let hv = map[v].expect("v stays in the host");
    let host_edge: Vec<Vertex> = h
        .edge(e)
        .iter()
        .map(|&x| map[x].expect("edge kept"))
        .collect();
    let (long, short) = if pu.len() >= pv.len() {
        (hu, hv)
    } else {
        (hv, hu)
    };
    let (r, s) = (pu.len().max(pv.len()), pu.len().min(pv.len()));
    let shift = path_shift(&host, &host_edge, long, short, r, s)?;
    Ok(Applied {
        before: h.clone(),
        effect: Effect::P3 {
            before: count_pattern(h, Pattern::P3)?,
            after: shift.p3_merged,
        },
        result: shift.merged,
    })
}

#[cfg(test)]
mod tests;
