use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use weightcell::cone::{extreme_rays, facets_from_vrep, redundant_normals, remove_redundant, HRep, IntVec};
use weightcell::Caps;

fn hrep_strategy() -> impl Strategy<Value = HRep> {
    (1usize..=5).prop_flat_map(|dim| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, dim), 1..=8)
            .prop_map(move |normals| HRep::from_ints(dim, &normals).unwrap())
    })
}

fn dot(a: &IntVec, b: &IntVec) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rays_facets_rays_is_a_fixpoint(h in hrep_strategy()) {
        let caps = Caps::default();
        let v = extreme_rays(&h, &caps).unwrap();
        for r in &v.rays {
            for n in h.normals() {
                prop_assert!(dot(n, r) <= BigInt::from(0));
            }
        }
        for l in &v.lineality {
            for n in h.normals() {
                prop_assert_eq!(dot(n, l), BigInt::from(0));
            }
        }
        let facets = facets_from_vrep(&v, &caps).unwrap();
        prop_assert!(facets.same_cone(&h).unwrap());
        let again = extreme_rays(&facets, &caps).unwrap();
        prop_assert_eq!(
            again.rays.iter().cloned().collect::<BTreeSet<_>>(),
            v.rays.iter().cloned().collect::<BTreeSet<_>>()
        );
        prop_assert_eq!(again.lineality.len(), v.lineality.len());
    }

    #[test]
    fn redundancy_removal(h in hrep_strategy()) {
        let r = remove_redundant(&h);
        prop_assert!(r.same_cone(&h).unwrap());
        prop_assert_eq!(remove_redundant(&r).normal_set(), r.normal_set());
        for n in redundant_normals(&h) {
            prop_assert!(r.implies(&n).unwrap());
        }
    }

    #[test]
    fn redundancy_removal_ignores_input_order(h in hrep_strategy()) {
        // The irredundant set is unique only for full-dimensional cones.
        let mut reversed: Vec<IntVec> = h.normals().to_vec();
        reversed.reverse();
        let back = HRep::new(h.dim(), reversed).unwrap();
        let (a, b) = (remove_redundant(&h), remove_redundant(&back));
        prop_assert!(a.same_cone(&b).unwrap());
        if is_full_dimensional(&h) {
            prop_assert_eq!(a.normal_set(), b.normal_set());
        }
    }
}

/// A cone is full-dimensional when no nonzero normal has its negative implied.
fn is_full_dimensional(h: &HRep) -> bool {
    h.normals().iter().all(|n| {
        let neg: IntVec = n.iter().map(|x| -x).collect();
        n.iter().all(|x| *x == BigInt::from(0)) || !h.implies(&neg).unwrap()
    })
}
