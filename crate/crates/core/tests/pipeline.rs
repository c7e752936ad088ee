//! Cross-module properties of the public API.

use proptest::prelude::*;
use twobridge::{
    census_domain, dt_from_presentation, enumerate_umn, even_cf, knot_class, validate_dt,
    ConwaySequence, Fraction,
};

#[test]
fn census_domain_size() {
    let total: usize = census_domain(16).into_iter().map(|s| enumerate_umn(s).count()).sum();
    assert_eq!(total, 49_044);
    assert_eq!(census_domain(16).len(), 28);
}

#[test]
fn slope_round_trips_through_representatives() {
    for spec in census_domain(10) {
        for p in enumerate_umn(spec) {
            let slope = p.slope().unwrap();
            let back = ConwaySequence::new(even_cf(slope).unwrap().into_vec()).unwrap();
            assert_eq!(back, p);
        }
    }
}

fn even_entry() -> impl Strategy<Value = i64> {
    (1i64..=6, any::<bool>()).prop_map(|(h, neg)| if neg { -2 * h } else { 2 * h })
}

fn even_sequence() -> impl Strategy<Value = ConwaySequence> {
    prop::collection::vec((even_entry(), even_entry()), 1..=5)
        .prop_map(|pairs| ConwaySequence::new(pairs.into_iter().flat_map(|(a, b)| [a, b]).collect()).unwrap())
}

proptest! {
    #[test]
    fn clique_members_share_a_knot(p in even_sequence()) {
        let key = knot_class(&p).unwrap().census_key();
        for q in p.clique() {
            prop_assert_eq!(knot_class(&q).unwrap().census_key(), key);
        }
        let rep = p.clique_representative();
        prop_assert!(rep.is_clique_representative());
        if p.crossings() <= 16 {
            let spec = twobridge::UmnSpec::new(p.crossings(), p.len() as u32).unwrap();
            prop_assert!(enumerate_umn(spec).any(|q| q == rep));
        }
    }

    #[test]
    fn dt_codes_are_valid(p in even_sequence()) {
        let dt = dt_from_presentation(&p).unwrap();
        prop_assert!(validate_dt(dt.evens(), Some(p.crossings() as usize)));
    }

    #[test]
    fn crossing_number_bounds(p in even_sequence()) {
        let c = knot_class(&p).unwrap().crossing_number();
        let (m, n) = (p.crossings(), p.len() as u32);
        prop_assert!(m - n < c && c <= m);
        let slope = p.slope().unwrap();
        prop_assert_eq!(Fraction::new(slope.alpha(), slope.beta()).unwrap(), slope);
    }
}
