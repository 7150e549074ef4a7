use diet_core::oracle::{brute_cycles, brute_orbit_count};
use diet_core::substitution::circular_words_equal;
use diet_core::tree::{children, parent, ParentOf};
use diet_core::{build_diet, count_orbits, is_minimal, psi_apply, Composition};
use proptest::prelude::*;

fn composition(max_part: u64, max_len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|p| Composition::new(p).unwrap())
}

proptest! {
    #[test]
    fn recursion_agrees_with_brute_force(c in composition(40, 8)) {
        prop_assert_eq!(count_orbits(&c), brute_orbit_count(&c));
        prop_assert_eq!(count_orbits(&c), count_orbits(&c.reverse()));
    }

    #[test]
    fn text_round_trip(c in composition(1_000_000, 12)) {
        prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c.clone());
        let json = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<Composition>(&json).unwrap(), c);
    }

    #[test]
    fn reverse_is_inverse(c in composition(30, 6)) {
        let p = build_diet(&c);
        prop_assert!(build_diet(&c.reverse()).compose(&p).unwrap().is_identity());
        prop_assert_eq!(p.cyclic_type().weight(), c.sum());
    }

    #[test]
    fn substitution_matches_enlarged_exchange(c in composition(20, 6), pick in any::<prop::sample::Index>()) {
        let t = pick.index(c.len()) + 1;
        let grow = c.translation_vector().get(t).unsigned_abs();
        let mut parts = c.parts().to_vec();
        parts[t - 1] += grow;
        let enlarged = Composition::new(parts).unwrap();
        let out = psi_apply(&c, t, &brute_cycles(&c)).unwrap();
        prop_assert!(circular_words_equal(&out, &brute_cycles(&enlarged)));
    }

    #[test]
    fn children_of_circular_nodes_point_back(c in composition(12, 5)) {
        prop_assume!(c.len() >= 2 && is_minimal(&c));
        for spec in children(&c).unwrap() {
            prop_assert!(is_minimal(&spec.child));
            prop_assert_eq!(parent(&spec.child).unwrap(), ParentOf::Node(c.clone()));
        }
    }
}
