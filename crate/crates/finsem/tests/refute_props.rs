mod common;

use common::{frag, matrix};
use finsem::decide::classical_consequence;
use finsem::formula::orneg_disjunct;
use finsem::matrix::{is_valid, Valuation};
use finsem::refute::{equal_pair, refute_matrix, Mode, Variant};
use finsem::{Letter, Oracle, Sequent};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn arrow_dichotomy(m in (1usize..=3).prop_flat_map(|m| matrix(frag("implies"), m))) {
        let r = refute_matrix(&m, Variant::Arrow).unwrap();
        let valid = is_valid(&m, &r.alpha).unwrap().holds();
        prop_assert_eq!(r.mode == Mode::CompletenessViolation, valid);
        r.replay(&Oracle::default()).unwrap();
    }

    #[test]
    fn orneg_dichotomy(m in (1usize..=3).prop_flat_map(|m| matrix(frag("or,not"), m))) {
        let r = refute_matrix(&m, Variant::Orneg).unwrap();
        let valid = is_valid(&m, &r.alpha).unwrap().holds();
        prop_assert_eq!(r.mode == Mode::CompletenessViolation, valid);
        r.replay(&Oracle::default()).unwrap();
    }
}

#[test]
fn pigeonhole_is_total() {
    for n in 1..=3u32 {
        let letters = n + 1;
        let total = (n as usize).pow(letters);
        for code in 0..total {
            let mut c = code;
            let w: Valuation = (1..=letters)
                .map(|i| {
                    let v = c % n as usize;
                    c /= n as usize;
                    (Letter::p(i), v)
                })
                .collect();
            let (i, j) = equal_pair(&w, n).expect("n+1 letters over n values");
            assert!(i < j);
            assert_eq!(w.get(Letter::p(i)), w.get(Letter::p(j)));
        }
    }
}

#[test]
fn orneg_disjuncts_fail_classically() {
    for i in 1..=5 {
        for j in 1..=5 {
            if i == j {
                continue;
            }
            let v = classical_consequence(&Sequent::theorem(orneg_disjunct(i, j))).unwrap();
            let w = &v.witness.as_ref().unwrap().valuation;
            assert!(!v.is_derivable());
            assert_eq!((w.get(Letter::p(i)), w.get(Letter::p(j))), (Some(1), Some(0)));
        }
    }
}
