use hypermoment::enumerate::{enumerate_family, Family, FamilyQuery};
use hypermoment::family::{hyperpath, hyperstar};
use hypermoment::transform::{reduce_to_extremal, Effect, Mode};
use hypermoment::{isomorphic, Error};

fn family(f: Family, m: usize) -> Vec<hypermoment::Hypergraph> {
    enumerate_family(&FamilyQuery::new(f, m)).unwrap()
}

#[test]
fn star_ward_from_the_path() {
    let steps = reduce_to_extremal(&hyperpath(3, 4).unwrap(), Mode::StarWard).unwrap();
    assert!(!steps.is_empty());
    assert!(isomorphic(
        &steps.last().unwrap().result,
        &hyperstar(3, 4).unwrap()
    ));
    assert!(
        reduce_to_extremal(&hyperstar(3, 4).unwrap(), Mode::StarWard)
            .unwrap()
            .is_empty()
    );
}

#[test]
fn path_ward_over_binary_trees() {
    for h in family(Family::BinaryHypertrees { q: 5 }, 3) {
        let steps = reduce_to_extremal(&h, Mode::PathWard).unwrap();
        let last = steps.last().map_or(&h, |s| &s.result);
        assert!(isomorphic(last, &hyperpath(3, 5).unwrap()));
        assert!(steps
            .iter()
            .all(|s| matches!(s.effect, Effect::P3 { .. }) && s.effect.holds()));
    }
}

#[test]
fn every_small_member_reduces() {
    for m in [2, 3, 4] {
        for q in 1..=5 {
            for h in family(Family::Hypertrees { q }, m) {
                reduce_to_extremal(&h, Mode::StarWard).unwrap();
                reduce_to_extremal(&h, Mode::PathWard).unwrap();
            }
        }
    }
    for (m, max) in [(3, 6), (4, 5)] {
        for e in 3..=max {
            for f in 0..=max - e {
                for h in family(Family::Unicyclic { e, f }, m) {
                    reduce_to_extremal(&h, Mode::StarWard).unwrap();
                    reduce_to_extremal(&h, Mode::PathWard).unwrap();
                }
            }
        }
    }
}

#[test]
fn star_ward_zagreb_strictly_increases() {
    for h in family(Family::UnicyclicAll { q: 6 }, 3) {
        let steps = reduce_to_extremal(&h, Mode::StarWard).unwrap();
        let mut z = h.zagreb();
        for s in &steps {
            assert!(s.result.zagreb() > z);
            z = s.result.zagreb();
        }
    }
}

#[test]
fn unicyclic_graphs_only_go_star_ward() {
    for h in family(Family::Unicyclic { e: 4, f: 2 }, 2) {
        reduce_to_extremal(&h, Mode::StarWard).unwrap();
        assert!(matches!(
            reduce_to_extremal(&h, Mode::PathWard),
            Err(Error::OutOfScope(_))
        ));
    }
}
