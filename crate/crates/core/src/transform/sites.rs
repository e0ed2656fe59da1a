//! Exhaustive search for the places where a transformation applies.

use crate::hypergraph::{DegreeProfile, Hypergraph, Vertex};

use super::{apply, edges_at, Applied, TransformSpec};

fn verts(h: &Hypergraph, e: usize) -> Vec<Vertex> {
    h.edge(e).to_vec()
}

/// Candidate specs of one kind; most of them fail their preconditions.
fn candidates(h: &Hypergraph, kind: &str) -> Vec<TransformSpec> {
    let n = h.n();
    let deg = h.degrees();
    let mut out = Vec::new();
    match kind {
        "T1" => t1_candidates(h, &mut out),
        "T2" => {
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    out.push(TransformSpec::T2 { u, v });
                }
            }
        }
        "T3" => t3_candidates(h, &deg, &mut out),
        "T4" => t4_candidates(h, &deg, &mut out),
        "T5" if h.m() >= 3 => t5_candidates(h, &deg, &mut out),
        _ => {}
    }
    out
}

fn t1_candidates(h: &Hypergraph, out: &mut Vec<TransformSpec>) {
    for e in 0..h.q() {
        for &u in h.edge(e) {
            for &v in h.edge(e) {
                if u != v {
                    out.push(TransformSpec::T1 {
                        edge: verts(h, e),
                        u,
                        v,
                    });
                }
            }
        }
    }
}

fn t3_candidates(h: &Hypergraph, deg: &DegreeProfile, out: &mut Vec<TransformSpec>) {
    let n = h.n();
    for w in (0..n).filter(|&w| deg.get(w) >= 3) {
        let at = edges_at(h, w);
        for &ek in &at {
            for &ek1 in at.iter().filter(|&&f| f != ek) {
                for x in (0..n).filter(|&x| deg.get(x) == 1) {
                    out.push(TransformSpec::T3 {
                        vertex: w,
                        moved_edge: verts(h, ek),
                        kept_edge: verts(h, ek1),
                        pendent: x,
                    });
                }
            }
        }
    }
}

fn t4_candidates(h: &Hypergraph, deg: &DegreeProfile, out: &mut Vec<TransformSpec>) {
    let n = h.n();
    for u in (0..n).filter(|&u| deg.get(u) >= 3) {
        for e0 in edges_at(h, u) {
            for v in (0..n).filter(|&v| v != u) {
                for target in (0..n).filter(|&t| t == v || deg.get(t) == 1) {
                    out.push(TransformSpec::T4 {
                        u,
                        v,
                        moved_edge: verts(h, e0),
                        target,
                    });
                }
            }
        }
    }
}

fn t5_candidates(h: &Hypergraph, deg: &DegreeProfile, out: &mut Vec<TransformSpec>) {
    let n = h.n();
    for attach in (0..n).filter(|&x| deg.get(x) == 2) {
        for e1 in edges_at(h, attach) {
            for target in (0..n).filter(|&t| deg.get(t) == 1) {
                out.push(TransformSpec::T5 {
                    attach,
                    moved_edge: verts(h, e1),
                    target,
                });
            }
        }
    }
}

pub const KINDS: [&str; 5] = ["T1", "T2", "T3", "T4", "T5"];

/// Legal applications of one kind (`"T1"` to `"T5"`), with their outcomes.
pub fn sites_of_kind(h: &Hypergraph, kind: &str) -> Vec<(TransformSpec, Applied)> {
    candidates(h, kind)
        .into_iter()
        .filter_map(|spec| apply(h, &spec).ok().map(|a| (spec, a)))
        .collect()
}

/// Every legal T1 to T5 application on `h`, with its outcome.
pub fn legal_sites(h: &Hypergraph) -> Vec<(TransformSpec, Applied)> {
    KINDS.iter().flat_map(|k| sites_of_kind(h, k)).collect()
}

/// Every legal path merge on `h`.
pub fn merge_sites(h: &Hypergraph) -> Vec<(TransformSpec, Applied)> {
    if h.m() < 3 {
        return Vec::new();
    }
    let deg = h.degrees();
    let mut out = Vec::new();
    for e in 0..h.q() {
        let edge = h.edge(e);
        if edge.iter().filter(|&&x| deg.get(x) == 2).count() < 3 {
            continue;
        }
        for (i, &u) in edge.iter().enumerate() {
            for &v in &edge[i + 1..] {
                let spec = TransformSpec::MergePaths {
                    edge: edge.to_vec(),
                    u,
                    v,
                };
                if let Ok(a) = apply(h, &spec) {
                    out.push((spec, a));
                }
            }
        }
    }
    out
}
