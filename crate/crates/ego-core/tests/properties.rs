//! Property suite for the term layer, checked against independent oracles.

use ego_core::enumerate::formulas_up_to_depth;
use ego_core::sugar::equiv;
use ego_core::{classify, eval_truth, is_member, parse, set_equal, Assembly, EFormula, SentenceClass, TruthValue};
use proptest::prelude::*;

/// Set equality straight from the recursive definition, on raw trees: both
/// are `∅`, or every member of each side equals some member of the other.
fn oracle_equal(x: &Assembly, y: &Assembly) -> bool {
    match (x.is_leaf(), y.is_leaf()) {
        (true, true) => true,
        (false, false) => {
            x.children()
                .iter()
                .all(|a| y.children().iter().any(|b| oracle_equal(a, b)))
                && y.children()
                    .iter()
                    .all(|b| x.children().iter().any(|a| oracle_equal(a, b)))
        }
        _ => false,
    }
}

fn raw_assembly() -> impl Strategy<Value = Assembly> {
    let leaf = Just(Assembly::leaf());
    leaf.prop_recursive(4, 40, 4, |inner| {
        prop::collection::vec(inner, 1..4).prop_map(Assembly::branch)
    })
}

/// A set-equal variant of `x`: members shuffled and some repeated, recursively.
fn scramble(x: &Assembly, seed: &mut u64) -> Assembly {
    if x.is_leaf() {
        return Assembly::leaf();
    }
    let mut kids: Vec<Assembly> = x.children().iter().map(|c| scramble(c, seed)).collect();
    *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let r = (*seed >> 33) as usize;
    if r % 3 == 0 {
        let dup = kids[r % kids.len()].clone();
        kids.push(dup);
    }
    let shift = r % kids.len();
    kids.rotate_left(shift);
    if r % 5 == 0 {
        kids.reverse();
    }
    Assembly::branch(kids)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn set_equal_matches_definition(x in raw_assembly(), y in raw_assembly()) {
        prop_assert_eq!(set_equal(&x, &y), oracle_equal(&x, &y));
    }

    #[test]
    fn set_equal_is_an_equivalence(x in raw_assembly(), y in raw_assembly(), z in raw_assembly()) {
        prop_assert!(set_equal(&x, &x));
        prop_assert_eq!(set_equal(&x, &y), set_equal(&y, &x));
        if set_equal(&x, &y) && set_equal(&y, &z) {
            prop_assert!(set_equal(&x, &z));
        }
    }

    #[test]
    fn scrambled_copies_are_equal(x in raw_assembly(), seed in any::<u64>()) {
        let mut s = seed;
        let y = scramble(&x, &mut s);
        prop_assert!(oracle_equal(&x, &y));
        prop_assert!(set_equal(&x, &y));
        prop_assert_eq!(x.normalize(), y.normalize());
    }

    #[test]
    fn normalize_is_idempotent_and_truth_preserving(x in raw_assembly()) {
        let f = x.normalize();
        prop_assert_eq!(Assembly::from(&f).normalize(), f.clone());
        prop_assert!(set_equal(&x, &Assembly::from(&f)));
        for v in TruthValue::ALL {
            prop_assert_eq!(eval_truth(&x, v), f.truth(v));
        }
        prop_assert_eq!(classify(&x), f.classify());
    }

    #[test]
    fn parse_render_round_trip(x in raw_assembly()) {
        let text = x.render();
        prop_assert_eq!(parse(&text).unwrap(), x.clone());
        let f = x.normalize();
        prop_assert_eq!(parse(&f.render()).unwrap().normalize(), f);
    }

    #[test]
    fn equal_sets_have_tautological_equivalence(x in raw_assembly(), seed in any::<u64>()) {
        let mut s = seed;
        let y = scramble(&x, &mut s);
        let e = equiv(x.normalize(), y.normalize());
        prop_assert_eq!(e.classify(), SentenceClass::Tautology);
    }

    #[test]
    fn canonical_order_is_total_and_consistent(x in raw_assembly(), y in raw_assembly()) {
        let (a, b) = (x.normalize(), y.normalize());
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == std::cmp::Ordering::Equal, a == b);
        if a.desc() != b.desc() {
            prop_assert_eq!(a.cmp(&b), a.desc().cmp(&b.desc()));
        } else {
            prop_assert_eq!(a.cmp(&b), a.render().cmp(&b.render()));
        }
    }
}

/// Classical extensionality as a theorem: two sets are equal exactly when
/// they have the same members, checked over every set of depth ≤ 3 plus
/// raw written variants of each.
#[test]
fn extensionality_by_brute_force() {
    let universe = formulas_up_to_depth(3);
    let mut raws: Vec<Assembly> = universe.iter().map(Assembly::from).collect();
    // Add written variants with repeated and reordered members.
    for f in &universe {
        if !f.is_empty() {
            let mut kids: Vec<Assembly> = f.members().iter().map(Assembly::from).collect();
            kids.reverse();
            kids.push(kids[0].clone());
            raws.push(Assembly::branch(kids));
        }
    }
    let candidates: Vec<Assembly> = formulas_up_to_depth(2).iter().map(Assembly::from).collect();
    for x in &raws {
        for y in &raws {
            let same_members = candidates.iter().all(|z| is_member(z, x) == is_member(z, y));
            assert_eq!(set_equal(x, y), same_members, "x={x} y={y}");
        }
    }
}

#[test]
fn worked_equalities() {
    let a = parse("{0,{0},{0,{0}}}").unwrap();
    let b = parse("{{{0},0},0,{0},0}").unwrap();
    assert!(set_equal(&a, &b));
    assert!(!set_equal(&parse("{0}").unwrap(), &parse("{0,{0}}").unwrap()));
    assert_eq!(
        parse("{0,0}").unwrap().normalize(),
        EFormula::singleton(EFormula::empty())
    );
}
