//! Named families and the coalescence operation.
//!
//! Labelling conventions (stable, relied on by golden files):
//!
//! * hyperpath: edge `i` is `{i(m-1), ..., i(m-1)+m-1}`, so vertex 0 is a
//!   pendent vertex of the first edge.
//! * hyperstar: the centre is vertex 0, petal `i` uses `1+i(m-1) ..`.
//! * hypercycle of length `e`: vertices `0..e` are the intersection
//!   vertices (edge `i` contains `i-1 mod e` and `i`), followed by the core
//!   vertices of edge 0, edge 1, and so on.
//! * pendant-edge cycle `F(e,f)`: the cycle, then `f` pendant edges attached
//!   at intersection vertex 0.
//! * tailed cycle `E(e,f)`: the cycle, then a hyperpath of `f` edges
//!   attached by its pendent vertex at core vertex `e` (the first core of
//!   edge 0). For `m = 2` the cycle has no core vertex and vertex 0 is used.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    Hyperpath {
        q: usize,
    },
    Hyperstar {
        q: usize,
    },
    Hypercycle {
        e: usize,
    },
    /// The m-power of a 2-uniform graph.
    Power {
        graph: Hypergraph,
    },
    /// `F(e,f)`: hypercycle with `f` pendant edges at one intersection vertex.
    #[serde(rename = "F")]
    PendantCycle {
        e: usize,
        f: usize,
    },
    /// `E(e,f)`: hypercycle with a hyperpath of `f` edges at a core vertex.
    #[serde(rename = "E")]
    TailedCycle {
        e: usize,
        f: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub kind: FamilyKind,
    pub m: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, m: usize) -> Self {
        FamilySpec { kind, m }
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Hypergraph> {
    let m = spec.m;
    match &spec.kind {
        FamilyKind::Hyperpath { q } => hyperpath(m, *q),
        FamilyKind::Hyperstar { q } => hyperstar(m, *q),
        FamilyKind::Hypercycle { e } => hypercycle(m, *e),
        FamilyKind::Power { graph } => power(graph, m),
        FamilyKind::PendantCycle { e, f } => pendant_cycle(m, *e, *f),
        FamilyKind::TailedCycle { e, f } => tailed_cycle(m, *e, *f),
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::BadUniformity(m))
    } else {
        Ok(())
    }
}

fn check_q(q: usize, what: &str) -> Result<()> {
    if q == 0 {
        Err(Error::InvalidFamily(format!(
            "{what} with 0 edges is a single vertex, which is not a hypergraph here"
        )))
    } else {
        Ok(())
    }
}

pub fn hyperpath(m: usize, q: usize) -> Result<Hypergraph> {
    check_m(m)?;
    check_q(q, "hyperpath")?;
    Hypergraph::with_vertex_count(
        m,
        q * (m - 1) + 1,
        (0..q).map(|i| (i * (m - 1)..=(i + 1) * (m - 1)).collect::<Vec<_>>()),
    )
}

pub fn hyperstar(m: usize, q: usize) -> Result<Hypergraph> {
    check_m(m)?;
    check_q(q, "hyperstar")?;
    Hypergraph::with_vertex_count(
        m,
        q * (m - 1) + 1,
        (0..q).map(|i| {
            std::iter::once(0)
                .chain(1 + i * (m - 1)..1 + (i + 1) * (m - 1))
                .collect::<Vec<_>>()
        }),
    )
}

fn cycle_edges(m: usize, e: usize) -> Vec<Vec<Vertex>> {
    (0..e)
        .map(|i| {
            let mut edge = vec![(i + e - 1) % e, i];
            edge.extend(e + i * (m - 2)..e + (i + 1) * (m - 2));
            edge
        })
        .collect()
}

fn check_cycle(m: usize, e: usize) -> Result<()> {
    check_m(m)?;
    if e < 3 {
        return Err(Error::InvalidFamily(format!(
            "a hypercycle needs at least 3 edges, got {e}"
        )));
    }
    Ok(())
}

pub fn hypercycle(m: usize, e: usize) -> Result<Hypergraph> {
    check_cycle(m, e)?;
    Hypergraph::with_vertex_count(m, e * (m - 1), cycle_edges(m, e))
}

/// Hypercycle `C_e` with `f` pendant edges at intersection vertex 0.
pub fn pendant_cycle(m: usize, e: usize, f: usize) -> Result<Hypergraph> {
    check_cycle(m, e)?;
    let mut edges = cycle_edges(m, e);
    let mut next = e * (m - 1);
    for _ in 0..f {
        let mut edge = vec![0];
        edge.extend(next..next + m - 1);
        next += m - 1;
        edges.push(edge);
    }
    Hypergraph::with_vertex_count(m, next, edges)
}

/// Hypercycle `C_e` with a hyperpath of `f` edges hanging from a core vertex.
pub fn tailed_cycle(m: usize, e: usize, f: usize) -> Result<Hypergraph> {
    check_cycle(m, e)?;
    let mut edges = cycle_edges(m, e);
    let mut attach = if m > 2 { e } else { 0 };
    let mut next = e * (m - 1);
    for _ in 0..f {
        let mut edge = vec![attach];
        edge.extend(next..next + m - 1);
        next += m - 1;
        attach = next - 1;
        edges.push(edge);
    }
    Hypergraph::with_vertex_count(m, next, edges)
}

/// The m-power of a 2-uniform graph: every edge gains `m-2` fresh vertices
/// of degree one. Graph labels are kept; fresh vertices follow in edge order.
pub fn power(graph: &Hypergraph, m: usize) -> Result<Hypergraph> {
    check_m(m)?;
    if graph.m() != 2 {
        return Err(Error::InvalidFamily(format!(
            "power hypergraphs are built from 2-uniform graphs, got m={}",
            graph.m()
        )));
    }
    let mut next = graph.n();
    let edges: Vec<Vec<Vertex>> = graph
        .edges()
        .iter()
        .map(|e| {
            let mut edge = e.clone();
            edge.extend(next..next + m - 2);
            next += m - 2;
            edge
        })
        .collect();
    Hypergraph::with_vertex_count(m, next, edges)
}

/// One component to glue onto a host: the host vertex, the component and
/// the component vertex identified with it.
#[derive(Debug, Clone, Copy)]
pub struct Attachment<'a> {
    pub host_vertex: Vertex,
    pub component: &'a Hypergraph,
    pub component_vertex: Vertex,
}

impl<'a> Attachment<'a> {
    pub fn new(host_vertex: Vertex, component: &'a Hypergraph, component_vertex: Vertex) -> Self {
        Attachment {
            host_vertex,
            component,
            component_vertex,
        }
    }
}

/// Coalescence: glue each component onto the host by identifying the given
/// vertex pairs. Host vertices keep their labels; the remaining vertices of
/// each component follow in attachment order, ascending within a component.
pub fn coalesce(host: &Hypergraph, attachments: &[Attachment<'_>]) -> Result<Hypergraph> {
    if attachments.is_empty() {
        return Err(Error::Precondition(
            "coalescence needs at least one attachment".into(),
        ));
    }
    let mut edges: Vec<Vec<Vertex>> = host.edges().to_vec();
    let mut next = host.n();
    for a in attachments {
        if a.component.m() != host.m() {
            return Err(Error::MixedUniformity(host.m(), a.component.m()));
        }
        if a.host_vertex >= host.n() {
            return Err(Error::VertexOutOfRange {
                vertex: a.host_vertex,
                n: host.n(),
            });
        }
        if a.component_vertex >= a.component.n() {
            return Err(Error::VertexOutOfRange {
                vertex: a.component_vertex,
                n: a.component.n(),
            });
        }
        let map: Vec<Vertex> = a
            .component
            .vertices()
            .map(|v| {
                if v == a.component_vertex {
                    a.host_vertex
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        edges.extend(
            a.component
                .edges()
                .iter()
                .map(|e| e.iter().map(|&v| map[v]).collect()),
        );
    }
    Hypergraph::with_vertex_count(host.m(), next, edges)
}
