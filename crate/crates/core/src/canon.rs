//! Canonical labelling and isomorphism testing.
//!
//! A hypergraph is encoded as its vertex-edge incidence graph. Partitions of
//! that graph are refined to equitable ones, and the search tree of
//! individualisations is explored down to discrete partitions. Each leaf
//! gives a relabelling of the vertices; the lexicographically least sorted
//! edge list wins. Leaves that reproduce an earlier leaf give automorphisms,
//! which prune sibling branches lying in the same orbit.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hypergraph::{Hypergraph, Vertex};

/// Byte string identifying an isomorphism class. Two hypergraphs have equal
/// keys exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(CanonicalKey)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalKey::from_hex(&s).ok_or_else(|| serde::de::Error::custom("invalid hex key"))
    }
}

/// Canonical relabelling: `labeling[v]` is the canonical label of vertex `v`.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub key: CanonicalKey,
    pub labeling: Vec<Vertex>,
    pub form: Hypergraph,
}

pub fn canonical_key(h: &Hypergraph) -> CanonicalKey {
    canonicalize(h).key
}

pub fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.m() == b.m() && a.n() == b.n() && a.q() == b.q() && canonical_key(a) == canonical_key(b)
}

/// The hypergraph relabelled canonically; isomorphic inputs give equal values.
pub fn canonical_form(h: &Hypergraph) -> Hypergraph {
    canonicalize(h).form
}

pub fn canonicalize(h: &Hypergraph) -> Canonical {
    let mut search = Search::new(h);
    let root = search.refine(search.initial_partition());
    search.explore(root, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    let labeling: Vec<Vertex> = best.positions[..h.n()].to_vec();
    let form = h
        .permuted(&labeling)
        .expect("leaf positions form a permutation");
    Canonical {
        key: encode(h, &best.graph),
        labeling,
        form,
    }
}

fn encode(h: &Hypergraph, graph: &[Vec<u16>]) -> CanonicalKey {
    let mut bytes = Vec::with_capacity(6 + 2 * h.m() * h.q());
    for x in [h.m(), h.n(), h.q()] {
        bytes.extend_from_slice(&(x as u16).to_be_bytes());
    }
    for v in graph.iter().flatten() {
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    CanonicalKey(bytes)
}

type Partition = Vec<Vec<usize>>;

struct Leaf {
    /// `positions[node]` is the node's index in the discrete partition.
    positions: Vec<usize>,
    graph: Vec<Vec<u16>>,
}

struct Search<'a> {
    h: &'a Hypergraph,
    adj: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.n();
        let mut adj = vec![Vec::new(); n + h.q()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                adj[v].push(n + i);
                adj[n + i].push(v);
            }
        }
        Search {
            h,
            adj,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    fn initial_partition(&self) -> Partition {
        let n = self.h.n();
        vec![(0..n).collect(), (n..n + self.h.q()).collect()]
    }

    /// Splits cells by neighbour counts into other cells until equitable.
    fn refine(&self, mut p: Partition) -> Partition {
        let mut cell_of = vec![0; self.adj.len()];
        loop {
            for (c, cell) in p.iter().enumerate() {
                for &x in cell {
                    cell_of[x] = c;
                }
            }
            let mut next = Vec::with_capacity(p.len());
            for cell in &p {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
                for &x in cell {
                    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                    for &y in &self.adj[x] {
                        *counts.entry(cell_of[y]).or_default() += 1;
                    }
                    groups
                        .entry(counts.into_iter().collect())
                        .or_default()
                        .push(x);
                }
                next.extend(groups.into_values());
            }
            if next.len() == p.len() {
                return next;
            }
            p = next;
        }
    }

    fn explore(&mut self, p: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = p.iter().position(|c| c.len() > 1) else {
            self.visit_leaf(&p);
            return;
        };
        let cell = p[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, w) {
                continue;
            }
            explored.push(w);
            let mut child = p.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != w).collect();
            child.splice(target..=target, [vec![w], rest]);
            let child = self.refine(child);
            prefix.push(w);
            self.explore(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `w` is mapped onto an explored sibling by the group generated
    /// by the known automorphisms that fix every node of `prefix`.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&x| g[x] == x))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.adj.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for g in gens {
            for (x, &y) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }

    fn visit_leaf(&mut self, p: &Partition) {
        let mut positions = vec![0; self.adj.len()];
        for (i, cell) in p.iter().enumerate() {
            positions[cell[0]] = i;
        }
        let mut graph: Vec<Vec<u16>> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut mapped: Vec<u16> = e.iter().map(|&v| positions[v] as u16).collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();
        graph.sort_unstable();
        let leaf = Leaf { positions, graph };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                positions: leaf.positions.clone(),
                graph: leaf.graph.clone(),
            });
            self.first = Some(leaf);
            return;
        };
        if leaf.graph == first.graph {
            let g = self.automorphism(first, &leaf);
            self.generators.push(g);
            return;
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.graph.cmp(&best.graph) {
            Ordering::Less => self.best = Some(leaf),
            Ordering::Equal => {
                let g = self.automorphism(best, &leaf);
                self.generators.push(g);
            }
            Ordering::Greater => {}
        }
    }

    /// The automorphism sending each node of `b` to the node of `a` carrying
    /// the same position; both leaves must produce the same graph.
    fn automorphism(&self, a: &Leaf, b: &Leaf) -> Vec<usize> {
        let n = self.h.n();
        let mut at_position = vec![0; n];
        for v in 0..n {
            at_position[a.positions[v]] = v;
        }
        let mut g: Vec<usize> = (0..self.adj.len()).collect();
        for v in 0..n {
            g[v] = at_position[b.positions[v]];
        }
        for (i, e) in self.h.edges().iter().enumerate() {
            let image: Vec<Vertex> = e.iter().map(|&v| g[v]).collect();
            g[n + i] = n + self
                .h
                .edge_index(&image)
                .expect("equal leaf graphs induce an automorphism");
        }
        g
    }
}
