use num_bigint::BigInt;
use proptest::prelude::*;

use hypermoment::canon::{canonical_form, canonical_key, isomorphic};
use hypermoment::census::{Census, Pattern};
use hypermoment::enumerate::attach_pendant;
use hypermoment::family::{hypercycle, hyperpath};
use hypermoment::moments::{general_moment, moment_sequence, s0, s_m, tree_moment};
use hypermoment::transform::{legal_sites, reduce_to_extremal, Mode};
use hypermoment::{Hypergraph, StructureClass};

/// Grows a hypergraph from a seed by attaching pendant edges at the chosen
/// positions (taken modulo the current vertex count).
fn grow(seed: Hypergraph, picks: &[usize]) -> Hypergraph {
    picks.iter().fold(seed, |h, &p| {
        let v = p % h.n();
        attach_pendant(&h, v)
    })
}

fn tree(m: usize) -> impl Strategy<Value = Hypergraph> {
    prop::collection::vec(any::<usize>(), 0..5)
        .prop_map(move |p| grow(hyperpath(m, 1).unwrap(), &p))
}

fn unicyclic(m: usize) -> impl Strategy<Value = Hypergraph> {
    (3usize..=5, prop::collection::vec(any::<usize>(), 0..3))
        .prop_map(move |(e, p)| grow(hypercycle(m, e).unwrap(), &p))
}

fn shuffle(h: &Hypergraph, seed: u64) -> Hypergraph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut perm: Vec<usize> = (0..h.n()).collect();
    perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    h.permuted(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_labels(h in tree(3), seed in any::<u64>()) {
        let g = shuffle(&h, seed);
        prop_assert_eq!(canonical_key(&h), canonical_key(&g));
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
        prop_assert!(isomorphic(&h, &g));
    }

    #[test]
    fn canonical_form_is_isomorphic_and_fixed(h in unicyclic(3)) {
        let c = canonical_form(&h);
        prop_assert!(isomorphic(&h, &c));
        prop_assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn fast_census_matches_brute_force(h in unicyclic(3)) {
        prop_assert_eq!(Census::of(&h).unwrap(), Census::brute_force(&h).unwrap());
    }

    #[test]
    fn tree_census_matches_brute_force(h in tree(4)) {
        let fast = Census::of(&h).unwrap();
        let slow = Census::brute_force(&h).unwrap();
        prop_assert_eq!(fast, slow);
        prop_assert_eq!(fast.get(Pattern::P1), h.q() as u64);
    }

    #[test]
    fn tree_moments_from_both_engines(h in tree(3)) {
        for d in 1..=9 {
            prop_assert_eq!(general_moment(&h, d).unwrap(), tree_moment(&h, d).unwrap());
        }
    }

    #[test]
    fn zero_orders_and_fixed_low_moments(h in unicyclic(4)) {
        let seq = moment_sequence(&h, 8).unwrap();
        prop_assert_eq!(seq.get(0).unwrap(), &s0(&h));
        for d in [1, 2, 3, 5, 6, 7] {
            prop_assert_eq!(seq.get(d).unwrap(), &BigInt::from(0));
        }
        prop_assert_eq!(seq.get(4).unwrap(), &s_m(&h));
    }

    #[test]
    fn moments_ignore_labels(h in unicyclic(3), seed in any::<u64>()) {
        prop_assert_eq!(moment_sequence(&h, 9).unwrap(), moment_sequence(&shuffle(&h, seed), 9).unwrap());
    }

    #[test]
    fn transformations_keep_size_and_class(h in unicyclic(3)) {
        let class = h.structure_class();
        for (spec, a) in legal_sites(&h) {
            prop_assert!(a.effect.holds(), "{:?}", spec);
            prop_assert_eq!((a.result.n(), a.result.q()), (h.n(), h.q()));
            prop_assert_eq!(a.result.structure_class(), class);
        }
    }

    #[test]
    fn reductions_are_monotone(h in tree(3)) {
        for mode in [Mode::StarWard, Mode::PathWard] {
            let steps = reduce_to_extremal(&h, mode).unwrap();
            prop_assert!(steps.iter().all(|s| s.effect.holds()));
            for s in &steps {
                prop_assert_eq!(s.result.structure_class(), StructureClass::Hypertree);
            }
        }
    }
}
