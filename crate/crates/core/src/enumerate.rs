//! Isomorphism-free generation of hypertree and unicyclic families.
//!
//! Members grow one pendant edge at a time: a new edge shares exactly one
//! vertex with the current hypergraph and brings `m-1` fresh vertices.
//! Hypertrees grow from a single edge and unicyclic members from the cycle
//! `C_e`. After every step each isomorphism class is kept once, as its
//! canonical form. Results come out in ascending canonical-key order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonicalize, CanonicalKey};
use crate::error::{Error, Result};
use crate::family::{hypercycle, hyperpath};
use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Hypertrees { q: usize },
    BinaryHypertrees { q: usize },
    Unicyclic { e: usize, f: usize },
    UnicyclicAll { q: usize },
    UnicyclicBinary { e: usize, f: usize },
}

impl Family {
    pub fn edge_count(&self) -> usize {
        match *self {
            Family::Hypertrees { q }
            | Family::BinaryHypertrees { q }
            | Family::UnicyclicAll { q } => q,
            Family::Unicyclic { e, f } | Family::UnicyclicBinary { e, f } => e + f,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyQuery {
    #[serde(flatten)]
    pub family: Family,
    pub m: usize,
}

impl FamilyQuery {
    pub fn new(family: Family, m: usize) -> Self {
        FamilyQuery { family, m }
    }
}

/// Largest edge count generated per uniformity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps(BTreeMap<usize, usize>);

impl Default for Caps {
    fn default() -> Self {
        Caps(BTreeMap::from([(2, 9), (3, 7), (4, 6)]))
    }
}

impl Caps {
    pub const ENV_VAR: &'static str = "HYPERMOMENT_CAPS";
    const FALLBACK: usize = 5;

    pub fn max_edges(&self, m: usize) -> usize {
        self.0.get(&m).copied().unwrap_or(Self::FALLBACK)
    }

    /// Overrides from a list like `2=9,3=7`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (m, q) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap `{item}` is not of the form m=q")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("cap `{item}` is not numeric")))
            };
            self.0.insert(parse(m)?, parse(q)?);
        }
        Ok(self)
    }

    /// Defaults, overridden by the environment variable when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

impl FromStr for Caps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Caps::default().with_overrides(s)
    }
}

impl fmt::Display for Caps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, q)| format!("{m}={q}")).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn enumerate_family(fq: &FamilyQuery) -> Result<Vec<Hypergraph>> {
    enumerate_family_capped(fq, &Caps::default())
}

pub fn enumerate_family_capped(fq: &FamilyQuery, caps: &Caps) -> Result<Vec<Hypergraph>> {
    let m = fq.m;
    if m < 2 {
        return Err(Error::BadUniformity(m));
    }
    let q = fq.family.edge_count();
    if q > caps.max_edges(m) {
        return Err(Error::BoundExceeded(format!(
            "{q} edges at m={m} exceeds the cap of {}",
            caps.max_edges(m)
        )));
    }
    let check_cycle = |e: usize| {
        if e < 3 {
            Err(Error::InvalidFamily(format!(
                "girth must be at least 3, got {e}"
            )))
        } else {
            Ok(())
        }
    };
    let classes = match fq.family {
        Family::Hypertrees { q } | Family::BinaryHypertrees { q } => {
            if q == 0 {
                return Err(Error::InvalidFamily(
                    "a hypertree needs at least one edge".into(),
                ));
            }
            let binary = matches!(fq.family, Family::BinaryHypertrees { .. });
            grow(hyperpath(m, 1)?, q - 1, binary)
        }
        Family::Unicyclic { e, f } | Family::UnicyclicBinary { e, f } => {
            check_cycle(e)?;
            let binary = matches!(fq.family, Family::UnicyclicBinary { .. });
            grow(hypercycle(m, e)?, f, binary)
        }
        Family::UnicyclicAll { q } => {
            check_cycle(q)?;
            let mut all = BTreeMap::new();
            for e in 3..=q {
                all.extend(grow(hypercycle(m, e)?, q - e, false));
            }
            all
        }
    };
    Ok(classes.into_values().collect())
}

/// Adds `steps` pendant edges in every possible way, deduplicating after
/// each step. With `binary`, edges only go to vertices of degree at most 1.
fn grow(seed: Hypergraph, steps: usize, binary: bool) -> BTreeMap<CanonicalKey, Hypergraph> {
    let seed = canonicalize(&seed);
    let mut level = BTreeMap::from([(seed.key, seed.form)]);
    for _ in 0..steps {
        let mut next = BTreeMap::new();
        for h in level.values() {
            let degrees = h.degrees();
            for v in h.vertices() {
                if binary && degrees.get(v) > 1 {
                    continue;
                }
                let c = canonicalize(&attach_pendant(h, v));
                next.entry(c.key).or_insert(c.form);
            }
        }
        level = next;
    }
    level
}

/// `h` plus a new edge through `v` and `m-1` fresh vertices.
pub fn attach_pendant(h: &Hypergraph, v: Vertex) -> Hypergraph {
    let n = h.n();
    let mut edges = h.edges().to_vec();
    edges.push(std::iter::once(v).chain(n..n + h.m() - 1).collect());
    Hypergraph::with_vertex_count(h.m(), n + h.m() - 1, edges)
        .expect("pendant attachment stays valid")
}

/// Members with maximum degree at most 2.
pub fn filter_binary(hs: &[Hypergraph]) -> Vec<Hypergraph> {
    hs.iter().filter(|h| h.max_degree() <= 2).cloned().collect()
}
