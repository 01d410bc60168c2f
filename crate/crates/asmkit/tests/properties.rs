//! Randomized invariants: every bijection round-trips on perfectly sampled
//! matrices, the serialization codecs are inverses, and single-site lattice
//! moves stay inside the validated types.

use asmkit::core::{
    asm_to_corner_sum, asm_to_monotone, asm_to_six_vertex, coloring_to_height, corner_sum_to_asm,
    corner_sum_to_height, height_to_coloring, height_to_corner_sum, monotone_to_asm,
    object_from_json, object_from_text, object_to_json, object_to_text, six_vertex_to_asm, Kind,
    Object,
};
use asmkit::sample::{cftp_sample, extreme_heights, glauber_step, RandomSource};
use proptest::prelude::*;

fn sampled_asm(n: usize, seed: u64) -> asmkit::core::Asm {
    cftp_sample(n, &RandomSource::new(seed)).expect("default budget suffices for small orders")
}

proptest! {
    #[test]
    fn every_bijection_round_trips(n in 1usize..=5, seed in any::<u64>()) {
        let a = sampled_asm(n, seed);

        let c = asm_to_corner_sum(&a);
        prop_assert_eq!(&corner_sum_to_asm(&c), &a);

        let h = corner_sum_to_height(&c);
        prop_assert_eq!(height_to_corner_sum(&h), c);

        let t = height_to_coloring(&h);
        prop_assert_eq!(coloring_to_height(&t).unwrap(), h);

        let m = asm_to_monotone(&a);
        prop_assert_eq!(&monotone_to_asm(&m), &a);

        let v = asm_to_six_vertex(&a);
        prop_assert_eq!(six_vertex_to_asm(&v), a);
    }

    #[test]
    fn json_codec_is_an_inverse_for_every_kind(n in 1usize..=5, seed in any::<u64>()) {
        let a = sampled_asm(n, seed);
        for kind in Kind::ALL {
            let object = Object::Asm(a.clone()).convert(kind);
            let encoded = object_to_json(&object).to_string();
            let reparsed: serde_json::Value = serde_json::from_str(&encoded).unwrap();
            let decoded = object_from_json(&reparsed).unwrap();
            prop_assert_eq!(decoded.kind(), kind);
            prop_assert_eq!(decoded.to_asm(), a.clone());
        }
    }

    #[test]
    fn text_codec_is_an_inverse_for_every_kind(n in 1usize..=5, seed in any::<u64>()) {
        let a = sampled_asm(n, seed);
        for kind in Kind::ALL {
            let object = Object::Asm(a.clone()).convert(kind);
            let encoded = object_to_text(&object);
            let decoded = object_from_text(kind, &encoded).unwrap();
            prop_assert_eq!(decoded.to_asm(), a.clone());
        }
    }

    #[test]
    fn single_site_moves_stay_valid_and_local(
        n in 2usize..=5,
        seed in any::<u64>(),
        row_pick in any::<usize>(),
        col_pick in any::<usize>(),
        coin in any::<bool>(),
    ) {
        let a = sampled_asm(n, seed);
        let h = corner_sum_to_height(&asm_to_corner_sum(&a));
        let site = (1 + row_pick % (n - 1), 1 + col_pick % (n - 1));
        let moved = glauber_step(&h, site, coin);
        let mut differences = 0;
        for i in 0..=n {
            for j in 0..=n {
                if moved.value(i, j) != h.value(i, j) {
                    prop_assert_eq!((i, j), site);
                    differences += 1;
                }
            }
        }
        prop_assert!(differences <= 1);
    }

    #[test]
    fn every_height_lies_between_the_extremes(n in 1usize..=5, seed in any::<u64>()) {
        let a = sampled_asm(n, seed);
        let h = corner_sum_to_height(&asm_to_corner_sum(&a));
        let (high, low) = extreme_heights(n);
        for i in 0..=n {
            for j in 0..=n {
                prop_assert!(low.value(i, j) <= h.value(i, j));
                prop_assert!(h.value(i, j) <= high.value(i, j));
            }
        }
    }
}
