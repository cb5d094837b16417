mod common;

use paralogic::catalog::{named, parse_logic};
use paralogic::entailment::{
    decide_standard, degree_preserving_checks, entails_degree_preserving, entails_matrix, entails_product_def, StandardClass,
};
use paralogic::formula::{parse, parse_list, parse_sequent};
use paralogic::random::seeded;
use paralogic::{Error, Formula, Limits, ProductMatrix};
use proptest::prelude::*;

fn q(text: &str) -> (Vec<Formula>, Formula) {
    parse_sequent(text).unwrap()
}

#[test]
fn examples_against_the_oracle() {
    let lim = Limits::default();
    let cases = [
        ("p, ~p |- q", "J3", false),
        ("p, ~p |- q", "CPL", true),
        ("D(p <-> ~p) |- 0", "J4", true),
        ("D(p <-> ~p) |- 0", "J3", false),
        ("|- p | !p", "J3", true),
        ("|- p | ~p", "J4", true),
        ("|- D p | !p", "J4", false),
        ("p, p -> q |- q", "J3xJ4", true),
    ];
    for (text, logic, expected) in cases {
        let (g, phi) = q(text);
        let d = named(logic).unwrap();
        let v = d.entails(&g, &phi, &lim).unwrap();
        assert_eq!(v.holds, expected, "{text} in {logic}");
        assert_eq!(common::entails(d.single().unwrap(), &g, &phi), expected);
        assert!(v.certify(&g, &phi));
    }
}

#[test]
fn degree_preserving_companion() {
    let lim = Limits::default();
    let g5 = named("G<=5~").unwrap();
    let (g, phi) = q("p & ~p |- q");
    let v = g5.entails(&g, &phi, &lim).unwrap();
    assert!(!v.holds);
    assert_eq!(v.counterexample.as_ref().unwrap().describe(), "p = 1/4, q = 0");
    let direct = entails_degree_preserving(5, &g, &phi, &lim).unwrap();
    assert!(!direct.holds);
    assert!(direct.certify(&g, &phi));
    // modus ponens survives since min(a, a -> b) <= b, necessitation does not
    let (g, phi) = q("p, p -> q |- q");
    assert!(entails_degree_preserving(5, &g, &phi, &lim).unwrap().holds);
    let (g, phi) = q("p |- D p");
    assert!(!entails_degree_preserving(5, &g, &phi, &lim).unwrap().holds);
    assert!(!common::entails_degree(5, &g, &phi));
    let (g, phi) = q("|- (p -> q) | (q -> p)");
    assert!(entails_degree_preserving(5, &g, &phi, &lim).unwrap().holds);
}

#[test]
fn standard_classes() {
    let lim = Limits::default();
    let (g, phi) = q("!!p |- p");
    assert!(decide_standard(StandardClass::AboveZero, &g, &phi, &lim).unwrap().verdict.holds);
    assert!(!decide_standard(StandardClass::Exact1, &g, &phi, &lim).unwrap().verdict.holds);
    let (g, phi) = q("p & ~p |- D(p <-> ~p)");
    let v = decide_standard(StandardClass::AtHalf, &g, &phi, &lim).unwrap();
    assert!(v.verdict.holds);
    let v = decide_standard(StandardClass::OpenNeg, &g, &phi, &lim).unwrap();
    assert!(!v.verdict.holds && v.verdict.certify(&g, &phi));
    assert!(v.label().contains("finitary companion"));
}

#[test]
fn budgets_are_enforced() {
    let (g, phi) = q("p, q, r |- s");
    let err = named("J4").unwrap().entails(&g, &phi, &Limits::with_budget(3)).unwrap_err();
    assert!(matches!(err, Error::Budget { .. }));
    let m: ProductMatrix = "GV5~[>=2] x GV4~[>=1]".parse().unwrap();
    assert!(entails_matrix(&m, &g, &phi, &Limits::with_budget(3)).is_err());
}

#[test]
fn families_intersect() {
    let lim = Limits::default();
    let fam = parse_logic("J3 ; J4").unwrap();
    assert_eq!(fam.family.len(), 2);
    for text in ["D(p <-> ~p) |- 0", "~((p -> q) | (q -> r) | (r -> s)) |- 0", "p |- p | q"] {
        let (g, phi) = q(text);
        let both = named("J3").unwrap().entails(&g, &phi, &lim).unwrap().holds
            && named("J4").unwrap().entails(&g, &phi, &lim).unwrap().holds;
        assert_eq!(fam.entails(&g, &phi, &lim).unwrap().holds, both);
    }
}

#[test]
fn one_variable_bridge_exhaustive() {
    use paralogic::formula::one_variable_terms;
    let lim = Limits::default();
    for n in 3..=6 {
        let chain = paralogic::Chain::gv(n).unwrap();
        let closure = one_variable_terms(&[chain], "p", 6).unwrap();
        assert!(closure.saturated);
        let terms: Vec<&Formula> = closure.terms.iter().map(|t| &t.0).collect();
        for g in &terms {
            for phi in &terms {
                let c = degree_preserving_checks(n, &[(*g).clone()], phi, &lim).unwrap();
                assert_eq!(c.implication.holds, c.min_preservation.holds, "GV{n}~: {g} |- {phi}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_oracle(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let m = common::random_product(&mut rng, 2, 4);
        let (g, phi) = common::random_query(&mut rng, 2, 3);
        let v = entails_matrix(&m, &g, &phi, &Limits::default()).unwrap();
        prop_assert_eq!(v.holds, common::entails(&m, &g, &phi));
        prop_assert!(v.certify(&g, &phi));
    }

    #[test]
    fn product_definition_and_parallelism(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let m = common::random_product(&mut rng, 3, 5);
        let (g, phi) = common::random_query(&mut rng, 3, 3);
        let lim = Limits::default();
        let a = entails_matrix(&m, &g, &phi, &lim).unwrap();
        let b = entails_product_def(&m, &g, &phi, &lim).unwrap();
        prop_assert_eq!(a.holds, b.holds);
        prop_assert!(b.certify(&g, &phi));
        // the first counterexample does not depend on the number of workers
        prop_assert_eq!(&a, &entails_matrix(&m, &g, &phi, &Limits::sequential()).unwrap());
    }

    #[test]
    fn more_premises_keep_consequences(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let m = common::random_product(&mut rng, 2, 4);
        let (mut g, phi) = common::random_query(&mut rng, 2, 3);
        let lim = Limits::default();
        let before = entails_matrix(&m, &g, &phi, &lim).unwrap().holds;
        g.push(common::random_query(&mut rng, 2, 2).1);
        if before {
            prop_assert!(entails_matrix(&m, &g, &phi, &lim).unwrap().holds);
        }
        // reflexivity
        prop_assert!(entails_matrix(&m, std::slice::from_ref(&phi), &phi, &lim).unwrap().holds);
    }

    #[test]
    fn degree_checks_agree_with_oracle(seed in any::<u64>(), n in 3usize..7) {
        let mut rng = seeded(seed);
        let (g, phi) = common::random_query(&mut rng, 2, 3);
        let v = entails_degree_preserving(n, &g, &phi, &Limits::default()).unwrap();
        prop_assert_eq!(v.holds, common::entails_degree(n, &g, &phi));
    }
}

#[test]
fn premise_lists_parse_like_sequents() {
    let g = parse_list("p, q & r").unwrap();
    let (h, phi) = q("p, q & r |- s");
    assert_eq!(g, h);
    assert_eq!(phi, parse("s").unwrap());
}
