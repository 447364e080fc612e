//! Codec round trips and goldens against independent constructions.

use ego_codec::{
    attractor_encode, decode_by_iteration, ebinary_decode, ordered_pair, unpair, EBinary, FrequencyDistribution,
};
use ego_core::enumerate::formulas_up_to_nodes;
use ego_core::{parse_formula, EFormula};
use proptest::prelude::*;

/// All bit strings of length 1..=max.
fn bit_strings(max: usize) -> Vec<String> {
    (1..=max)
        .flat_map(|len| (0..1u32 << len).map(move |v| format!("{v:0len$b}")))
        .collect()
}

#[test]
fn ebinary_round_trip_up_to_ten_digits() {
    let all = bit_strings(10);
    assert_eq!(all.len(), 2046);
    for b in &all {
        let e = EBinary::from_bits(b).unwrap();
        let expected = u64::from_str_radix(b, 2).unwrap();
        assert_eq!(ebinary_decode(e.formula()).unwrap(), expected, "{b}");
        assert_eq!(decode_by_iteration(&e), expected, "{b}");
        assert_eq!(EBinary::from_formula(e.formula()).unwrap().bits(), *b);
    }
}

#[test]
fn distinct_strings_give_distinct_sets() {
    let all = bit_strings(8);
    let sets: std::collections::HashSet<EFormula> = all
        .iter()
        .map(|b| EBinary::from_bits(b).unwrap().formula().clone())
        .collect();
    assert_eq!(sets.len(), all.len());
}

/// Kuratowski pair written out by hand, without the codec.
fn kuratowski(a: &EFormula, b: &EFormula) -> EFormula {
    EFormula::set([EFormula::set([a.clone()]), EFormula::set([a.clone(), b.clone()])])
}

#[test]
fn pairs_are_injective() {
    let terms = formulas_up_to_nodes(6);
    let mut pairs = Vec::new();
    for a in &terms {
        for b in &terms {
            let p = ordered_pair(a, b);
            assert_eq!(p, kuratowski(a, b));
            assert_eq!(unpair(&p).unwrap(), (a.clone(), b.clone()));
            pairs.push(((a, b), p));
        }
    }
    for ((a, b), p) in &pairs {
        for ((c, d), q) in &pairs {
            assert_eq!(p == q, a == c && b == d);
        }
    }
}

#[test]
fn first_worked_distribution_golden() {
    // Components as printed in the worked example.
    let x2 = parse_formula("{{{0}},{{0},0}}").unwrap();
    let x4 = parse_formula("{0}").unwrap();
    let x5 = parse_formula("{{0},{0,{0}}}").unwrap();
    let e = EFormula::empty();
    let x3 = kuratowski(&kuratowski(&x2, &e), &kuratowski(&e, &x4));
    let expected = kuratowski(&x3, &x5);

    let d = FrequencyDistribution::new(vec![1.0, 3.0, 5.0, 2.0, 4.0, 1.0]).unwrap();
    let x = attractor_encode(&d).unwrap();
    assert_eq!(x, expected);
    assert_eq!(x.pretty(), expected.pretty());
}

#[test]
fn encoding_depends_on_order() {
    let d = FrequencyDistribution::new(vec![1.0, 3.0, 5.0, 2.0, 4.0, 1.0]).unwrap();
    let r = FrequencyDistribution::new(vec![1.0, 4.0, 2.0, 5.0, 3.0, 1.0]).unwrap();
    assert_ne!(attractor_encode(&d).unwrap(), attractor_encode(&r).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ebinary_values_round_trip(v in any::<u64>()) {
        let e = EBinary::from_value(v);
        prop_assert_eq!(e.value().unwrap(), v);
        prop_assert_eq!(ebinary_decode(e.formula()).unwrap(), v);
        prop_assert!(!e.bits().starts_with('0') || v == 0);
    }

    #[test]
    fn attractor_encoding_is_a_tuple_of_maxima(freqs in prop::collection::vec(0u8..6, 2..12)) {
        let d = FrequencyDistribution::new(freqs.iter().map(|&f| f64::from(f)).collect()).unwrap();
        let again = FrequencyDistribution::new(d.frequencies().to_vec()).unwrap();
        match attractor_encode(&d) {
            Ok(x) => {
                prop_assert_eq!(&x, &attractor_encode(&again).unwrap());
                let maxima = d.relative_maxima();
                prop_assert!(!maxima.is_empty());
                let xs = d.assemblies();
                let items: Vec<EFormula> = maxima.iter().map(|&i| xs[i].clone()).collect();
                prop_assert_eq!(ego_codec::untuple(&x, items.len()).unwrap(), items);
            }
            Err(_) => prop_assert!(freqs.windows(2).all(|w| w[0] == w[1])),
        }
    }
}
