mod common;

use common::{frag, matrix};
use finsem::search::{search, search_with, test_candidate, Corpus, SearchConfig};
use finsem::refute::{refute_matrix, Variant};
use finsem::{Oracle, Sequent};
use proptest::prelude::*;

fn corpus(lines: &str) -> Corpus {
    Corpus::load(lines, &Oracle::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn isomorphic_copies_behave_alike(
        m in matrix(frag("and,not"), 3),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let c = Corpus::standard(frag("and,not"), &Oracle::default()).unwrap();
        prop_assert_eq!(test_candidate(&m, &c).unwrap(), test_candidate(&m.permuted(&perm), &c).unwrap());
    }
}

#[test]
fn refuting_survivors_of_a_weak_corpus_eliminates_them() {
    let mut weak = corpus("p1 |- p1 :: derivable :: identity\n|- p1 :: not-derivable :: bare letter\n");
    let before = search(frag("implies"), 2, &weak).unwrap();
    assert!(!before.survivors.is_empty());
    let oracle = Oracle::default();
    for m in &before.survivors {
        let report = refute_matrix(m, Variant::Arrow).unwrap();
        report.replay(&oracle).unwrap();
        weak.push_labelled(Sequent::theorem(report.witness_formula.clone()), "refutation", &oracle)
            .unwrap();
    }
    let after = search(frag("implies"), 2, &weak).unwrap();
    for m in &before.survivors {
        assert!(!after.contains_structure(m));
    }
}

#[test]
fn worker_count_does_not_change_the_outcome() {
    let c = Corpus::standard(frag("implies"), &Oracle::default()).unwrap();
    let run = |workers| search_with(frag("implies"), 2, &c, &SearchConfig { workers, ..Default::default() }).unwrap();
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(1));
}

#[test]
fn shipped_corpora_match_the_generator() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/corpus");
    let oracle = Oracle::default();
    for spec in ["empty", "and", "or", "and,or", "not", "and,not", "implies", "or,not"] {
        let path = dir.join(format!("{}.corpus", spec.replace(',', "_")));
        let shipped = Corpus::load(&std::fs::read_to_string(&path).unwrap(), &oracle).unwrap();
        assert_eq!(shipped, Corpus::standard(frag(spec), &oracle).unwrap(), "{spec}");
    }
}
