use std::cmp::Ordering;

use proptest::prelude::*;
use tn2::index::{enumerate, principal_cmp, ExponentVector};

fn vector() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec((1u32..=8, 0u32..=3), 0..4).prop_map(ExponentVector::from_pairs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn principal_order_is_total(a in vector(), b in vector(), c in vector()) {
        let ab = principal_cmp(&a, &b);
        prop_assert_eq!(ab, principal_cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && principal_cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(principal_cmp(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn weight_dominates(a in vector(), b in vector()) {
        if a.weight2() > b.weight2() {
            prop_assert_eq!(principal_cmp(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn text_round_trips(a in vector()) {
        prop_assert_eq!(a.to_string().parse::<ExponentVector>().unwrap(), a);
    }
}

#[test]
fn enumeration_is_descending_and_bounded() {
    for (w2, len) in [(0, 0), (2, 2), (4, 3), (5, 3), (6, 4)] {
        let all = enumerate(w2, len);
        assert!(all.windows(2).all(|p| principal_cmp(&p[0], &p[1]) == Ordering::Greater));
        assert!(all.iter().all(|i| i.weight2() <= w2 && i.length() <= len));
        assert_eq!(all.last(), Some(&ExponentVector::zero()));
    }
}
