//! Randomized round trips for the text and JSON surfaces, plus a couple of
//! structural involutions sampled beyond the exhaustive bounds.

use proptest::prelude::*;
use zigzag_core::*;

fn arb_permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|values| Permutation::new(values).unwrap())
    })
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=3, 0..=max_len).prop_map(|letters| Word::new(letters).unwrap())
}

/// A word whose letter counts weakly decrease, so it rebuilds into an
/// ordinary tableau.
fn arb_partition_word() -> impl Strategy<Value = Word> {
    (0usize..4, 0usize..4, 0usize..5)
        .prop_flat_map(|(c3, d2, d1)| {
            let c2 = c3 + d2;
            let c1 = c2 + d1;
            let mut letters = vec![1u8; c1];
            letters.extend(std::iter::repeat_n(2, c2));
            letters.extend(std::iter::repeat_n(3, c3));
            Just(letters).prop_shuffle()
        })
        .prop_map(|letters| Word::new(letters).unwrap())
}

/// A word whose letter counts strictly decrease, for shifted tableaux.
fn arb_strict_word() -> impl Strategy<Value = Word> {
    (0usize..3, 1usize..4, 1usize..4)
        .prop_flat_map(|(c3, d2, d1)| {
            let c2 = c3 + d2;
            let c1 = c2 + d1;
            let mut letters = vec![1u8; c1];
            letters.extend(std::iter::repeat_n(2, c2));
            letters.extend(std::iter::repeat_n(3, c3));
            Just(letters).prop_shuffle()
        })
        .prop_map(|letters| Word::new(letters).unwrap())
}

proptest! {
    #[test]
    fn permutation_text_round_trips(p in arb_permutation(40)) {
        let rendered = p.to_string();
        prop_assert_eq!(rendered.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn permutation_parenthesized_form_parses(p in arb_permutation(30)) {
        let compact: String = p
            .values()
            .iter()
            .map(|&v| if v <= 9 { v.to_string() } else { format!("({v})") })
            .collect();
        prop_assert_eq!(compact.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn word_text_round_trips(w in arb_word(60)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn ordinary_tableau_json_round_trips(w in arb_partition_word()) {
        let t = Tableau::chi_inverse(&w, ShapeKind::Ordinary).unwrap();
        prop_assert_eq!(Tableau::from_json_str(&t.to_json_string()).unwrap(), t.clone());
        // the diagram renders one line per row
        let rendered = t.render_text();
        prop_assert_eq!(rendered.lines().count(), t.shape().rows());
    }

    #[test]
    fn shifted_tableau_json_round_trips(w in arb_strict_word()) {
        let t = Tableau::chi_inverse(&w, ShapeKind::Shifted).unwrap();
        prop_assert_eq!(Tableau::from_json_str(&t.to_json_string()).unwrap(), t.clone());
    }

    #[test]
    fn complement_involution_sampled(p in arb_permutation(60)) {
        prop_assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn reversed_complement_involution_sampled(w in arb_word(200)) {
        prop_assert_eq!(w.reversed_complement().reversed_complement(), w);
    }
}
