use super::*;
use crate::canon::isomorphic;
use crate::enumerate::{enumerate_family, Family, FamilyQuery};
use crate::family::{hypercycle, hyperstar, pendant_cycle, tailed_cycle};

fn graph(edges: &[[usize; 2]]) -> Hypergraph {
    Hypergraph::new(2, edges.iter().map(|e| e.to_vec())).unwrap()
}

fn zagreb_delta(a: &Applied) -> (i64, i64) {
    match a.effect {
        Effect::Zagreb {
            predicted, actual, ..
        } => (predicted, actual),
        Effect::P3 { .. } => panic!("expected a Zagreb effect"),
    }
}

#[test]
fn t1_folds_a_path_into_a_star() {
    let p = graph(&[[0, 1], [1, 2], [2, 3]]);
    let a = apply_t1(&p, &[1, 2], 2, 1).unwrap();
    assert_eq!(zagreb_delta(&a), (2, 2));
    assert!(a.effect.holds());
    assert!(isomorphic(&a.result, &hyperstar(2, 3).unwrap()));
    assert!(matches!(
        apply_t1(&p, &[0, 1], 0, 1),
        Err(Error::Precondition(_))
    ));
    assert!(apply_t1(&p, &[1, 2], 1, 2).is_ok());
    assert!(matches!(
        apply_t1(&p, &[0, 2], 0, 2),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn t2_moves_from_the_smaller_degree() {
    let h = graph(&[[0, 1], [0, 2], [0, 3], [1, 4]]);
    let a = apply_t2(&h, 0, 1).unwrap();
    assert_eq!(zagreb_delta(&a), (4, 4));
    assert_eq!(a.result.degree(0), 4);
    let b = apply_t2(&h, 1, 0).unwrap();
    assert_eq!(a.result, b.result);
    assert!(apply_t2(&h, 2, 3).is_err());
}

#[test]
fn t3_unfolds_a_binary_tree() {
    let star = hyperstar(2, 3).unwrap();
    let a = apply_t3(&star, 0, &[0, 1], &[0, 2], 2).unwrap();
    assert_eq!(zagreb_delta(&a), (-2, -2));
    assert!(isomorphic(&a.result, &hyperpath(2, 3).unwrap()));
    // The target has to sit on the kept side.
    assert!(apply_t3(&star, 0, &[0, 1], &[0, 2], 1).is_err());
    let two = hyperstar(2, 2).unwrap();
    assert!(apply_t3(&two, 0, &[0, 1], &[0, 2], 2).is_err());
}

#[test]
fn t3_on_hyperedges() {
    let star = hyperstar(3, 3).unwrap();
    let a = apply_t3(&star, 0, &[0, 1, 2], &[0, 3, 4], 4).unwrap();
    assert_eq!(zagreb_delta(&a), (-2, -2));
    assert!(isomorphic(&a.result, &hyperpath(3, 3).unwrap()));
}

#[test]
fn t4_moves_a_pendant_edge_off_the_cycle() {
    let h = pendant_cycle(3, 3, 1).unwrap();
    let pendant = h
        .edges()
        .iter()
        .find(|e| e.contains(&0) && e.iter().all(|&x| x == 0 || x >= 6))
        .unwrap()
        .clone();
    let a = apply_t4(&h, 0, 3, &pendant, 3).unwrap();
    assert_eq!(zagreb_delta(&a), (-2, -2));
    assert!(isomorphic(&a.result, &tailed_cycle(3, 3, 1).unwrap()));
    // Equal degrees are not enough without a tree at v.
    let c = pendant_cycle(3, 3, 0).unwrap();
    assert!(apply_t4(&c, 0, 3, c.edge(0), 3).is_err());
}

#[test]
fn t4_with_a_tree_at_v() {
    // Two pendant edges at vertex 0 and one at vertex 1 of a triangle.
    let c = hypercycle(3, 3).unwrap();
    let p = hyperpath(3, 1).unwrap();
    let h = coalesce(
        &c,
        &[
            Attachment::new(0, &p, 0),
            Attachment::new(0, &p, 0),
            Attachment::new(1, &p, 0),
        ],
    )
    .unwrap();
    let at0 = pendent_edges_at(&h, 0);
    let at1 = pendent_edges_at(&h, 1);
    assert_eq!((at0.len(), at1.len()), (2, 1));
    let target = *h.edge(at1[0]).iter().find(|&&x| x != 1).unwrap();
    let a = apply_t4(&h, 0, 1, h.edge(at0[0]), target).unwrap();
    // d_H(u) = 3.
    assert_eq!(zagreb_delta(&a), (-4, -4));
}

fn two_tails() -> Hypergraph {
    let c = hypercycle(3, 3).unwrap();
    let p = hyperpath(3, 1).unwrap();
    coalesce(&c, &[Attachment::new(3, &p, 0), Attachment::new(4, &p, 0)]).unwrap()
}

#[test]
fn t5_joins_two_tails() {
    let h = two_tails();
    let moved = h
        .edges()
        .iter()
        .find(|e| e.contains(&4) && e.iter().all(|&x| x == 4 || x >= 6))
        .unwrap()
        .clone();
    let tail3 = h
        .edges()
        .iter()
        .find(|e| e.contains(&3) && e.iter().all(|&x| x == 3 || x >= 6))
        .unwrap();
    let target = tail3[1];
    let a = apply_t5(&h, 4, &moved, target).unwrap();
    assert!(a.effect.holds(), "{:?}", a.effect);
    assert!(isomorphic(&a.result, &tailed_cycle(3, 3, 2).unwrap()));
    assert!(apply_t5(&h, 4, &moved, 5).is_err());
    assert!(apply_t5(&tailed_cycle(3, 3, 2).unwrap(), 3, &[3, 6, 7], 8).is_err());
}

#[test]
fn path_shift_lowers_p3() {
    let host = hyperpath(3, 2).unwrap();
    for (r, s) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let shift = path_shift(&host, &[2, 3, 4], 3, 4, r, s).unwrap();
        assert!(
            shift.holds(),
            "r={r} s={s}: {} vs {}",
            shift.p3_split,
            shift.p3_merged
        );
        assert!(isomorphic(&shift.merged, &hyperpath(3, 2 + r + s).unwrap()));
        let back = merge_paths(&shift.split, &[2, 3, 4], 3, 4).unwrap();
        assert!(isomorphic(&back.result, &shift.merged));
        assert!(back.effect.holds());
    }
    assert!(path_shift(&host, &[2, 3, 4], 3, 4, 1, 2).is_err());
    assert!(path_shift(&host, &[2, 3, 4], 3, 4, 1, 0).is_err());
    assert!(path_shift(&hyperpath(3, 1).unwrap(), &[0, 1, 2], 1, 2, 1, 1).is_err());
    assert!(path_shift(&hyperpath(2, 2).unwrap(), &[1, 2], 1, 2, 1, 1).is_err());
}

#[test]
fn path_shift_rejects_cycle_edges() {
    let c = hypercycle(4, 3).unwrap();
    // Edge 0 holds intersection vertices 2 and 0 and core vertices 3 and 4.
    let e = c.edge(0).to_vec();
    assert!(path_shift(&c, &e, 3, 4, 1, 1).is_err());
}

#[test]
fn spec_json_round_trip() {
    let spec = TransformSpec::T1 {
        edge: vec![1, 2],
        u: 2,
        v: 1,
    };
    let json = serde_json::to_string(&spec).unwrap();
    assert_eq!(json, r#"{"kind":"T1","edge":[1,2],"u":2,"v":1}"#);
    let back: TransformSpec = serde_json::from_str(&json).unwrap();
    assert_eq!(back, spec);
    let p: TransformSpec =
        serde_json::from_str(r#"{"kind":"PathShift","edge":[2,3,4],"u":3,"v":4,"r":2,"s":1}"#)
            .unwrap();
    assert_eq!(p.kind(), "PathShift");
}

#[test]
fn out_of_range_is_invalid_input() {
    let p = hyperpath(2, 3).unwrap();
    assert!(matches!(
        apply_t2(&p, 0, 99),
        Err(Error::VertexOutOfRange { .. })
    ));
}

#[test]
fn legal_sites_have_their_effects() {
    for q in 2..=4 {
        for h in enumerate_family(&FamilyQuery::new(Family::Hypertrees { q }, 3)).unwrap() {
            for (spec, a) in legal_sites(&h) {
                assert!(a.effect.holds(), "{spec:?} on {}", h.to_text());
            }
        }
    }
}

#[test]
fn reductions_reach_the_extremes() {
    for h in enumerate_family(&FamilyQuery::new(Family::Hypertrees { q: 4 }, 3)).unwrap() {
        for mode in [Mode::StarWard, Mode::PathWard] {
            let steps = reduce_to_extremal(&h, mode).unwrap();
            assert!(steps.iter().all(|s| s.effect.holds()));
        }
    }
    for h in enumerate_family(&FamilyQuery::new(Family::Unicyclic { e: 3, f: 2 }, 3)).unwrap() {
        for mode in [Mode::StarWard, Mode::PathWard] {
            let steps = reduce_to_extremal(&h, mode).unwrap();
            assert!(steps.iter().all(|s| s.effect.holds()));
        }
    }
    let c = hypercycle(2, 4).unwrap();
    assert!(matches!(
        reduce_to_extremal(&c, Mode::PathWard),
        Err(Error::OutOfScope(_))
    ));
    assert!(reduce_to_extremal(&c, Mode::StarWard).unwrap().is_empty());
}
