mod common;

use std::collections::BTreeSet;

use common::{formula, frag};
use finsem::formula::{letters_of, ClauseSet};
use finsem::matrix::{evaluate, make_two, Valuation};
use finsem::{gen_alpha_arrow, gen_alpha_orneg, parse, print, print_full, substitute, to_cnf, Formula, Letter};
use proptest::prelude::*;

fn count_disjuncts(f: &Formula, arrow: bool) -> usize {
    match (f, arrow) {
        // a ∨̇ b = (a -> b) -> b
        (Formula::Implies(ab, b), true) => match &**ab {
            Formula::Implies(a, b2) if b2 == b && matches!(**b, Formula::Implies(_, _)) => count_disjuncts(a, true) + 1,
            _ => 1,
        },
        (Formula::Or(a, _), false) => count_disjuncts(a, false) + 1,
        _ => 1,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_parse_round_trip(f in formula(finsem::Fragment::FULL, 6, 8)) {
        prop_assert_eq!(parse(&print(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse(&print_full(&f)).unwrap(), f);
    }

    #[test]
    fn substitution_locality(f in formula(finsem::Fragment::FULL, 5, 5), p in 1u32..=5, q in 1u32..=5) {
        let (p, q) = (Letter::p(p), Letter::p(q));
        let before = letters_of(&f);
        let after = letters_of(&substitute(&f, p, q));
        if before.contains(&p) {
            let mut allowed: BTreeSet<Letter> = before.iter().copied().filter(|&l| l != p).collect();
            allowed.insert(q);
            prop_assert!(after.is_subset(&allowed));
            prop_assert!(after.contains(&q));
        } else {
            prop_assert_eq!(after, before);
        }
    }

    #[test]
    fn cnf_is_classically_equivalent(f in formula(frag("and,or"), 4, 4), bits in 0u32..16) {
        let cnf: ClauseSet = to_cnf(&f).unwrap();
        let two = make_two(frag("and,or"));
        let v: Valuation = (1..=4).map(|i| (Letter::p(i), ((bits >> (i - 1)) & 1) as usize)).collect();
        let direct = evaluate(&two, &v, &f).unwrap();
        let via_clauses = evaluate(&two, &v, &cnf.to_formula()).unwrap();
        let by_hand = usize::from(cnf.clauses().iter().all(|c| c.iter().any(|l| v.get(*l) == Some(1))));
        prop_assert_eq!(direct, via_clauses);
        prop_assert_eq!(direct, by_hand);
    }
}

#[test]
fn alpha_shape() {
    for n in 1..=7u32 {
        let want: BTreeSet<Letter> = (1..=n + 1).map(Letter::p).collect();
        let pairs = (n * (n + 1) / 2) as usize;
        let arrow = gen_alpha_arrow(n).unwrap();
        let orneg = gen_alpha_orneg(n).unwrap();
        assert_eq!(letters_of(&arrow), want);
        assert_eq!(letters_of(&orneg), want);
        assert_eq!(count_disjuncts(&orneg, false), pairs, "orneg {n}");
        assert_eq!(count_disjuncts(&arrow, true), pairs, "arrow {n}");
    }
}
