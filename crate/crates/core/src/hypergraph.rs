//! The m-uniform hypergraph value and its elementary invariants.
//!
//! A [`Hypergraph`] is immutable once built. Vertices are labelled `0..n`,
//! every vertex lies in at least one edge, every edge holds exactly `m`
//! distinct vertices and no edge is repeated. Edges are stored sorted
//! internally and the edge list is sorted lexicographically, so two values
//! with the same labelled structure compare equal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    m: usize,
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

/// Wire form used by the JSON format: `{"m": 3, "n": 7, "edges": [[0,1,2], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawHypergraph {
    pub m: usize,
    pub n: usize,
    pub edges: Vec<Vec<Vertex>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::with_vertex_count(raw.m, raw.n, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            m: h.m,
            n: h.n,
            edges: h.edges,
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph from arbitrary vertex labels, relabelling the
    /// distinct labels to `0..n` in ascending order.
    pub fn new<E, I>(m: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let edges = collect_edges(edges);
        let labels: BTreeSet<Vertex> = edges.iter().flatten().copied().collect();
        let index: BTreeMap<Vertex, Vertex> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let relabelled: Vec<Vec<Vertex>> = edges
            .into_iter()
            .map(|e| e.into_iter().map(|v| index[&v]).collect::<Vec<_>>())
            .collect();
        Self::with_vertex_count(m, labels.len(), relabelled)
    }

    /// Builds a hypergraph whose labels must already be exactly `0..n`.
    pub fn with_vertex_count<E, I>(m: usize, n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        if m < 2 {
            return Err(Error::BadUniformity(m));
        }
        let mut edges = collect_edges(edges);
        if edges.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        let mut covered = vec![false; n];
        for (index, edge) in edges.iter_mut().enumerate() {
            let raw_len = edge.len();
            edge.sort_unstable();
            edge.dedup();
            if edge.len() != m || raw_len != m {
                return Err(Error::WrongEdgeSize {
                    index,
                    expected: m,
                    found: edge.len(),
                });
            }
            for &v in edge.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::IsolatedVertex(v));
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph { m, n, edges })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[Vertex] {
        &self.edges[index]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Index of the edge with exactly these vertices, in any order.
    pub fn edge_index(&self, vertices: &[Vertex]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.edges.binary_search(&key).ok()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v < self.n
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    pub fn degrees(&self) -> DegreeProfile {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        DegreeProfile(d)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max()
    }

    /// Zagreb index: the sum of squared vertex degrees.
    pub fn zagreb(&self) -> u64 {
        self.degrees().iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn is_linear(&self) -> bool {
        let inc = self.incidence();
        let mut seen = BTreeSet::new();
        for edges in &inc {
            for (a, &i) in edges.iter().enumerate() {
                for &j in &edges[a + 1..] {
                    // a second shared vertex shows up as a repeated pair
                    if !seen.insert((i, j)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Shortest edge-path distances from `source`; `None` when unreachable.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let inc = self.incidence();
        let mut dist = vec![None; self.n];
        let mut used = vec![false; self.q()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or_default();
            for &e in &inc[x] {
                if std::mem::replace(&mut used[e], true) {
                    continue;
                }
                for &y in &self.edges[e] {
                    if dist[y].is_none() {
                        dist[y] = Some(dx + 1);
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        self.bfs_distances(u)[v].ok_or(Error::Unreachable(u, v))
    }

    /// Length of the shortest hypercycle. Only defined for linear inputs,
    /// where it equals half the length of the shortest cycle of the
    /// vertex-edge incidence graph.
    pub fn girth(&self) -> Result<Girth> {
        if !self.is_linear() {
            return Err(Error::NotLinear);
        }
        let nodes = self.n + self.q();
        let mut adj = vec![Vec::new(); nodes];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                adj[v].push(self.n + i);
                adj[self.n + i].push(v);
            }
        }
        let mut best = usize::MAX;
        for s in 0..nodes {
            let mut dist = vec![usize::MAX; nodes];
            let mut parent = vec![usize::MAX; nodes];
            let mut queue = VecDeque::from([s]);
            dist[s] = 0;
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        Ok(if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best / 2)
        })
    }

    pub fn structure_class(&self) -> StructureClass {
        if !self.is_linear() || !self.is_connected() {
            return StructureClass::Other;
        }
        let span = self.q() * (self.m - 1);
        if self.n == span + 1 {
            StructureClass::Hypertree
        } else if self.n == span {
            match self.girth() {
                Ok(Girth::Finite(g)) => StructureClass::LinearUnicyclic { girth: g },
                _ => StructureClass::Other,
            }
        } else {
            StructureClass::Other
        }
    }

    /// The edges of the unique hypercycle in traversal order, each
    /// consecutive pair (cyclically) sharing one vertex. `None` unless the
    /// hypergraph is linear unicyclic.
    pub fn cycle_edges(&self) -> Option<Vec<usize>> {
        if !matches!(
            self.structure_class(),
            StructureClass::LinearUnicyclic { .. }
        ) {
            return None;
        }
        // Peel pendant structure: repeatedly drop edges with at most one
        // vertex shared with the remaining edges.
        let mut alive = vec![true; self.q()];
        let mut deg = self.degrees().0;
        loop {
            let mut changed = false;
            for (i, e) in self.edges.iter().enumerate() {
                if alive[i] && e.iter().filter(|&&v| deg[v] >= 2).count() <= 1 {
                    alive[i] = false;
                    for &v in e {
                        deg[v] -= 1;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let cycle: Vec<usize> = (0..self.q()).filter(|&i| alive[i]).collect();
        let mut order = vec![cycle[0]];
        let mut used = BTreeSet::from([cycle[0]]);
        while order.len() < cycle.len() {
            let last = &self.edges[*order.last()?];
            let next = cycle.iter().copied().find(|&j| {
                !used.contains(&j) && self.edges[j].iter().any(|v| last.binary_search(v).is_ok())
            })?;
            used.insert(next);
            order.push(next);
        }
        Some(order)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Hypergraph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::Parse(format!(
                "permutation has {} entries, expected {}",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse("not a permutation".into()));
            }
        }
        Hypergraph::with_vertex_count(
            self.m,
            self.n,
            self.edges.iter().map(|e| e.iter().map(|&v| perm[v])),
        )
    }

    /// The hypergraph spanned by a subset of edges, relabelled compactly,
    /// with the old-to-new vertex map.
    pub fn sub_hypergraph(
        &self,
        edge_indices: &[usize],
    ) -> Result<(Hypergraph, Vec<Option<Vertex>>)> {
        let mut map = vec![None; self.n];
        let mut next = 0;
        let mut verts: Vec<Vertex> = edge_indices
            .iter()
            .flat_map(|&i| self.edges[i].iter().copied())
            .collect();
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            map[v] = Some(next);
            next += 1;
        }
        let h = Hypergraph::with_vertex_count(
            self.m,
            next,
            edge_indices
                .iter()
                .map(|&i| self.edges[i].iter().map(|&v| map[v].unwrap_or_default())),
        )?;
        Ok((h, map))
    }

    /// Renders the text format: a header line `m q`, then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.m, self.q());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text format. Labels must be exactly `0..n`.
    pub fn from_text(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let nums = parse_numbers(header)?;
        let [m, q] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be `m q`, got `{header}`"
            )));
        };
        let edges: Vec<Vec<Vertex>> = lines.map(parse_numbers).collect::<Result<_>>()?;
        if edges.len() != q {
            return Err(Error::Parse(format!(
                "header announces {q} edges, found {}",
                edges.len()
            )));
        }
        let n = edges.iter().flatten().max().map_or(0, |&v| v + 1);
        Hypergraph::with_vertex_count(m, n, edges)
    }
}

fn collect_edges<E, I>(edges: E) -> Vec<Vec<Vertex>>
where
    E: IntoIterator<Item = I>,
    I: IntoIterator<Item = Vertex>,
{
    edges.into_iter().map(|e| e.into_iter().collect()).collect()
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a vertex label: `{t}`")))
        })
        .collect()
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(m={}, n={}, edges={:?})", self.m, self.n, self.edges)
    }
}

/// Vertex degrees, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile(pub Vec<usize>);

impl DegreeProfile {
    pub fn get(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Degrees sorted descending.
    pub fn multiset(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Number of vertices with each degree.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &d in &self.0 {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Which moment formulas apply to a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureClass {
    Hypertree,
    LinearUnicyclic { girth: usize },
    Other,
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureClass::Hypertree => f.write_str("hypertree"),
            StructureClass::LinearUnicyclic { girth } => write!(f, "linear-unicyclic({girth})"),
            StructureClass::Other => f.write_str("other"),
        }
    }
}
