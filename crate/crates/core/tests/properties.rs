use std::collections::BTreeSet;

use avoiders::bijection::{forward, inverse};
use avoiders::permutation::{increasing_runs, standardize};
use avoiders::{AvoidanceMethod, DashedPattern, Permutation, SetPartition};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Random partition via a random restricted growth string.
fn partition(max: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0usize..8, 1..=max).prop_map(|raw| {
        let mut rgs = Vec::with_capacity(raw.len());
        let mut open = 0;
        for r in raw {
            let b = r % (open + 1);
            if b == open {
                open += 1;
            }
            rgs.push(b);
        }
        SetPartition::from_growth_string(&rgs).unwrap()
    })
}

proptest! {
    #[test]
    fn text_roundtrip(p in permutation(20)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn standardize_is_idempotent(word in subsequence((1u32..200).collect::<Vec<_>>(), 1..15).prop_shuffle()) {
        let once = standardize(&word).unwrap();
        let twice = standardize(once.entries()).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!(avoiders::permutation::order_isomorphic(&word, once.entries()).unwrap());
    }

    #[test]
    fn runs_concatenate_and_are_maximal(p in permutation(20)) {
        let runs = increasing_runs(p.entries());
        prop_assert_eq!(runs.concat(), p.entries().to_vec());
        for w in runs.windows(2) {
            prop_assert!(w[1][0] < *w[0].last().unwrap());
        }
        for r in &runs {
            prop_assert!(r.windows(2).all(|x| x[0] < x[1]));
        }
    }

    #[test]
    fn witnesses_standardize_to_pattern(p in permutation(12)) {
        for pat in DashedPattern::ALL {
            if let Some(w) = p.find_dashed(pat) {
                prop_assert_eq!(w[1], w[0] + 1);
                prop_assert_eq!(w[3], w[2] + 1);
                prop_assert!(w[2] >= w[0] + 2);
                let values: Vec<u32> = w.iter().map(|&i| p.at(i)).collect();
                let shape = standardize(&values).unwrap();
                prop_assert_eq!(shape.entries(), &pat.shape()[..]);
            }
        }
    }

    #[test]
    fn three_avoidance_tests_agree(p in permutation(14)) {
        let v: Vec<bool> = AvoidanceMethod::ALL.iter().map(|&m| p.avoids_pair(m)).collect();
        prop_assert!(v.iter().all(|&x| x == v[0]));
    }

    #[test]
    fn canonicalize_is_idempotent(x in partition(14)) {
        let again = SetPartition::canonicalize(x.blocks().to_vec()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(x.to_string().parse::<SetPartition>().unwrap(), x.clone());
        prop_assert_eq!(SetPartition::from_growth_string(&x.growth_string()).unwrap(), x);
    }

    #[test]
    fn inverse_then_forward_is_identity(x in partition(14)) {
        prop_assume!(x.is_indecomposable() && x.size() >= 2);
        let p = inverse(&x).unwrap();
        prop_assert!(p.is_avoider());
        prop_assert_eq!(p.len() + 1, x.size());
        prop_assert_eq!(forward(&p).unwrap(), x);
    }

    #[test]
    fn forward_preserves_run_maxima(p in permutation(14)) {
        prop_assume!(p.is_avoider());
        let image = forward(&p).unwrap();
        let runs = p.increasing_runs();
        prop_assert_eq!(runs.len(), image.num_blocks());
        let run_max: BTreeSet<u32> = runs[..runs.len() - 1].iter().map(|r| *r.last().unwrap()).collect();
        let maxima = image.block_maxima();
        let block_max: BTreeSet<u32> = maxima[..maxima.len() - 1].iter().copied().collect();
        prop_assert_eq!(run_max, block_max);
        prop_assert_eq!(inverse(&image).unwrap(), p);
    }
}
