use necklaces::word::{self, naive, rotate, Word};
use proptest::prelude::*;

fn arb_word() -> impl Strategy<Value = Word> {
    (2usize..=4).prop_flat_map(|k| {
        prop::collection::vec(0..k as u32, 1..=14).prop_map(move |s| Word::new(s, k).unwrap())
    })
}

/// Every word over `k` symbols of length exactly `n`, in order.
fn all_words(k: usize, n: usize) -> impl Iterator<Item = Word> {
    (0..k.pow(n as u32)).map(move |mut code| {
        let mut s = vec![0u32; n];
        for slot in s.iter_mut().rev() {
            *slot = (code % k) as u32;
            code /= k;
        }
        Word::new(s, k).unwrap()
    })
}

proptest! {
    #[test]
    fn predicate_chain(w in arb_word()) {
        let lyndon = word::is_lyndon(&w).unwrap();
        let necklace = word::is_necklace(&w).unwrap();
        let pre = word::is_prenecklace(&w).unwrap();
        prop_assert!(!lyndon || necklace);
        prop_assert!(!necklace || pre);
    }

    #[test]
    fn fast_predicates_match_rotation_scan(w in arb_word()) {
        prop_assert_eq!(word::is_necklace(&w).unwrap(), naive::is_necklace(&w).unwrap());
        prop_assert_eq!(word::is_lyndon(&w).unwrap(), naive::is_lyndon(&w).unwrap());
        prop_assert_eq!(word::is_necklace(&w).unwrap(), naive::min_rotation(&w) == w);
    }

    #[test]
    fn lyn_is_full_length_iff_lyndon(w in arb_word()) {
        prop_assert_eq!(word::lyn(&w).unwrap() == w.len(), word::is_lyndon(&w).unwrap());
    }

    #[test]
    fn prenecklace_factors_through_lyn(w in arb_word()) {
        let p = word::lyn(&w).unwrap();
        if word::is_prenecklace(&w).unwrap() && p < w.len() {
            let n = w.len();
            let (j, i) = if n % p == 0 { (n / p - 1, p) } else { (n / p, n % p) };
            prop_assert!(j >= 1 && (1..=p).contains(&i));
            let head = &w.symbols()[..p];
            let mut rebuilt: Vec<u32> = head.repeat(j);
            rebuilt.extend_from_slice(&head[..i]);
            prop_assert_eq!(rebuilt.as_slice(), w.symbols());
        }
    }

    #[test]
    fn rotation_inverts(w in arb_word(), r in 0usize..14) {
        let n = w.len();
        let r = r % n;
        let back = rotate(&rotate(&w, r).unwrap(), (n - r) % n).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn text_encoding_round_trips(w in arb_word()) {
        prop_assert_eq!(Word::parse(&w.to_string(), w.alphabet_size()).unwrap(), w);
    }
}

#[test]
fn big_alphabet_round_trip() {
    let w = Word::new(vec![0, 11, 3, 10], 12).unwrap();
    assert_eq!(w.to_string(), "0,11,3,10");
    assert_eq!(Word::parse("0,11,3,10", 12).unwrap(), w);
}

/// Incremental `lyn` along every prefix agrees with the prefix-by-prefix
/// brute force on all words with n <= 12, k <= 3.
#[test]
fn incremental_lyn_matches_prefix_scan() {
    for (k, max_n) in [(2, 12), (3, 12)] {
        for n in 1..=max_n {
            for w in all_words(k, n) {
                // the last prefix is the word itself, so checking the whole word
                // for every n also covers every prefix of every word
                assert_eq!(word::lyn(&w).unwrap(), naive::lyn(&w).unwrap(), "{w}");
            }
        }
    }
}

#[test]
fn prenecklace_matches_definition_on_small_words() {
    // prefix of some necklace, trying every extension of length up to n
    for n in 1..=6 {
        for w in all_words(3, n) {
            let any = (0..=n).any(|m| {
                all_words(3, m).any(|ext| {
                    let mut s = w.symbols().to_vec();
                    s.extend_from_slice(ext.symbols());
                    naive::is_necklace(&Word::new(s, 3).unwrap()).unwrap()
                })
            });
            assert_eq!(word::is_prenecklace(&w).unwrap(), any, "{w}");
        }
    }
}
