//! Randomised properties of strings, moves and half-integers.

use interlacing::recipe::{arch_root_number, dist};
use interlacing::weights::{interlace, enumerate_strings, HalfInt, InfinitesimalCharacter, InterlacingString};
use proptest::prelude::*;

/// A random string of rank 1..=7, chosen uniformly from the enumeration.
fn any_string() -> impl Strategy<Value = InterlacingString> {
    (1usize..=7).prop_flat_map(|n| {
        let all = enumerate_strings(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// A random strictly decreasing interleaving of n + (n-1) distinct values of
/// the right parities (rank >= 2, so b is non-empty), returned as doubled
/// entries.
fn any_weights() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (2usize..=6).prop_flat_map(|n| {
        let gaps = proptest::collection::vec(0i64..4, 2 * n - 1);
        let word = proptest::sample::subsequence((0..2 * n - 1).collect::<Vec<_>>(), n);
        (Just(n), gaps, word, -10i64..10)
    })
    .prop_map(|(n, gaps, a_positions, base)| {
        // a entries have doubled parity (n-1) mod 2, b entries the other one.
        let pa = (n as i64 - 1).rem_euclid(2);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut cur = 2 * base + 101;
        for (pos, gap) in gaps.into_iter().enumerate() {
            let want = if a_positions.contains(&pos) { pa } else { 1 - pa };
            cur -= 1 + gap;
            while cur.rem_euclid(2) != want {
                cur -= 1;
            }
            if want == pa { a.push(cur) } else { b.push(cur) }
        }
        (a, b)
    })
}

proptest! {
    #[test]
    fn half_int_round_trip(d in -10_000i64..10_000) {
        let h = HalfInt::from_doubled(d);
        prop_assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
    }

    #[test]
    fn string_round_trips(s in any_string()) {
        prop_assert_eq!(s.to_string().parse::<InterlacingString>().unwrap(), s.clone());
        prop_assert_eq!(s.to_tableau().to_interlacing(), s.clone());
        let (a, b) = s.realize();
        if let Some(b) = b {
            prop_assert_eq!(interlace(&a, &b).unwrap(), s);
        }
    }

    #[test]
    fn moves_are_symmetric(s in any_string()) {
        for t in s.nearby() {
            prop_assert!(t.nearby().contains(&s));
            prop_assert_eq!(t.area().abs_diff(s.area()), 1);
            prop_assert_eq!(arch_root_number(&t), -arch_root_number(&s));
        }
        for t in s.block_moves() {
            prop_assert!(t.block_moves().contains(&s));
            prop_assert_eq!(t.area().abs_diff(s.area()), 4);
            prop_assert_eq!(dist(&t), dist(&s));
        }
    }

    #[test]
    fn interlace_is_translation_invariant((a, b) in any_weights(), shift in -20i64..20) {
        let ca = InfinitesimalCharacter::from_doubled(&a).unwrap();
        let cb = InfinitesimalCharacter::from_doubled(&b).unwrap();
        let s = interlace(&ca, &cb).unwrap();
        let sa: Vec<i64> = a.iter().map(|x| x + 2 * shift).collect();
        let sb: Vec<i64> = b.iter().map(|x| x + 2 * shift).collect();
        let t = interlace(
            &InfinitesimalCharacter::from_doubled(&sa).unwrap(),
            &InfinitesimalCharacter::from_doubled(&sb).unwrap(),
        ).unwrap();
        prop_assert_eq!(s, t);
    }
}
