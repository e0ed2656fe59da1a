//! Driving a hypertree or unicyclic hypergraph to an extremal member of its
//! class by repeated transformations.
//!
//! Star-ward: T1 while possible, then T2. Hypertrees end at the hyperstar
//! and unicyclic members at the cycle with every pendant edge on one vertex.
//!
//! Path-ward: T3 (and T4 for unicyclic input) until the maximum degree is at
//! most 2, then path merges taken farthest from a root, then T5 until one
//! hyperpath remains. Hypertrees end at the hyperpath and unicyclic members
//! at the cycle with a single tail.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, isomorphic};
use crate::error::{Error, Result};
use crate::family::{hyperpath, hyperstar, pendant_cycle, tailed_cycle};
use crate::hypergraph::{Hypergraph, StructureClass};

use super::{merge_sites, sites_of_kind, Applied, Effect, TransformSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    StarWard,
    PathWard,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub spec: TransformSpec,
    pub result: Hypergraph,
    pub effect: Effect,
}

const MAX_STEPS: usize = 10_000;

/// Larger Zagreb gain first (or larger loss when shrinking), then the
/// smallest canonical key of the result.
fn pick(
    sites: Vec<(TransformSpec, Applied)>,
    increasing: bool,
) -> Option<(TransformSpec, Applied)> {
    let score = |a: &Applied| match a.effect {
        Effect::Zagreb { actual, .. } => {
            if increasing {
                actual
            } else {
                -actual
            }
        }
        Effect::P3 { before, after } => before as i64 - after as i64,
    };
    sites
        .into_iter()
        .map(|(s, a)| (score(&a), canonical_key(&a.result), s, a))
        .min_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)))
        .map(|(_, _, s, a)| (s, a))
}

/// Merge sites ordered by the distance of their edge from the root, deepest
/// first. The root is the cycle when there is one, else the lowest-labelled
/// degree-2 vertex.
fn pick_merge(
    h: &Hypergraph,
    sites: Vec<(TransformSpec, Applied)>,
) -> Option<(TransformSpec, Applied)> {
    let roots: Vec<usize> = match h.cycle_edges() {
        Some(cycle) => cycle.iter().flat_map(|&c| h.edge(c).to_vec()).collect(),
        None => h.vertices().filter(|&v| h.degree(v) == 2).take(1).collect(),
    };
    let dist: Vec<Vec<Option<usize>>> = roots.iter().map(|&r| h.bfs_distances(r)).collect();
    let depth = |spec: &TransformSpec| match spec {
        TransformSpec::MergePaths { edge, .. } => edge
            .iter()
            .flat_map(|&x| dist.iter().filter_map(move |d| d[x]))
            .min()
            .unwrap_or(0),
        _ => 0,
    };
    sites
        .into_iter()
        .map(|(s, a)| (depth(&s), canonical_key(&a.result), s, a))
        .min_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)))
        .map(|(_, _, s, a)| (s, a))
}

fn step_from(spec: TransformSpec, applied: Applied) -> Step {
    Step {
        spec,
        result: applied.result,
        effect: applied.effect,
    }
}

pub fn reduce_to_extremal(h: &Hypergraph, mode: Mode) -> Result<Vec<Step>> {
    let class = h.structure_class();
    let (target, girth) = match (class, mode) {
        (StructureClass::Hypertree, Mode::StarWard) => (hyperstar(h.m(), h.q())?, None),
        (StructureClass::Hypertree, Mode::PathWard) => (hyperpath(h.m(), h.q())?, None),
        (StructureClass::LinearUnicyclic { girth }, Mode::StarWard) => {
            (pendant_cycle(h.m(), girth, h.q() - girth)?, Some(girth))
        }
        (StructureClass::LinearUnicyclic { girth }, Mode::PathWard) => {
            if h.m() == 2 {
                return Err(Error::OutOfScope(
                    "path-ward reduction of unicyclic graphs needs m >= 3".into(),
                ));
            }
            (tailed_cycle(h.m(), girth, h.q() - girth)?, Some(girth))
        }
        (other, _) => {
            return Err(Error::WrongClass {
                expected: "hypertree or linear unicyclic",
                found: other.to_string(),
            })
        }
    };
    let phases: &[&str] = match (mode, girth) {
        (Mode::StarWard, _) => &["T1", "T2"],
        (Mode::PathWard, None) => &["T3", "merge"],
        (Mode::PathWard, Some(_)) => &["T3", "T4", "merge", "T5"],
    };
    let increasing = mode == Mode::StarWard;
    let mut steps = Vec::new();
    let mut current = h.clone();
    'outer: loop {
        if steps.len() > MAX_STEPS {
            return Err(Error::Inconsistent("reduction did not terminate".into()));
        }
        // Always resume from the earliest phase that still applies.
        for &phase in phases {
            let chosen = if phase == "merge" {
                pick_merge(&current, merge_sites(&current))
            } else {
                pick(sites_of_kind(&current, phase), increasing)
            };
            if let Some((spec, applied)) = chosen {
                current = applied.result.clone();
                steps.push(step_from(spec, applied));
                continue 'outer;
            }
        }
        break;
    }
    if !isomorphic(&current, &target) {
        return Err(Error::Inconsistent(format!(
            "reduction stalled at {} after {} steps",
            current.to_text().trim(),
            steps.len()
        )));
    }
    Ok(steps)
}
