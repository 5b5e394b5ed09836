use proptest::prelude::*;
use sagp_core::oracle::brute_force_sagps;
use sagp_core::{canonical_order, compute_report, validate_sagp, Backend, Text};

fn text_over(sigma: u8, max_len: usize) -> impl Strategy<Value = Text> {
    proptest::collection::vec(0..sigma, 0..=max_len)
        .prop_map(|v| Text::from_bytes(&v.into_iter().map(|c| b'a' + c).collect::<Vec<_>>()))
}

fn check(text: &Text) -> Result<(), TestCaseError> {
    let want = brute_force_sagps(text).unwrap();
    for b in Backend::ALL {
        let got = compute_report(text, b).unwrap();
        prop_assert_eq!(&got, &want, "backend {}", b);
    }
    let all: Vec<_> = want.sagps().collect();
    for s in &all {
        prop_assert!(validate_sagp(text, s), "{:?}", s.quad());
    }
    prop_assert!(all.windows(2).all(|w| canonical_order(w[0], w[1]).is_lt()));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn binary_texts(t in text_over(2, 60)) {
        check(&t)?;
    }

    #[test]
    fn ternary_texts(t in text_over(3, 60)) {
        check(&t)?;
    }

    #[test]
    fn wide_alphabet(t in text_over(8, 80)) {
        check(&t)?;
    }
}

#[test]
fn periodic_families() {
    for n in 1..40 {
        for unit in ["a", "ab", "abc", "aab"] {
            check(&Text::from_bytes(unit.repeat(n).as_bytes())).unwrap();
        }
    }
}

#[test]
fn integer_symbols_match_bytes() {
    let bytes = Text::from_bytes(b"baaabaabaacbaabaabac");
    let ints = Text::from_symbols(&[2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 3, 2, 1, 1, 2, 1, 1, 2, 1, 3]);
    for b in Backend::ALL {
        assert_eq!(compute_report(&bytes, b).unwrap(), compute_report(&ints, b).unwrap());
    }
}
