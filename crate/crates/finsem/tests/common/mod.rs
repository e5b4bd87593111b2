#![allow(dead_code)]

use finsem::matrix::{Matrix, Tables};
use finsem::{Connective, Formula, Fragment, Sequent};
use proptest::prelude::*;
use proptest::strategy::Union;

pub fn formula(fragment: Fragment, letters: u32, depth: u32) -> BoxedStrategy<Formula> {
    let leaf = (1..=letters).prop_map(Formula::letter).boxed();
    if fragment.is_empty() || depth == 0 {
        return leaf;
    }
    let connectives: Vec<Connective> = fragment.connectives().collect();
    leaf.prop_recursive(depth, 48, 2, move |inner| {
        let arms: Vec<BoxedStrategy<Formula>> = connectives
            .iter()
            .map(|&c| match c {
                Connective::Not => inner.clone().prop_map(Formula::not).boxed(),
                Connective::And => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)).boxed(),
                Connective::Or => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)).boxed(),
                Connective::Implies => (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Formula::implies(a, b))
                    .boxed(),
            })
            .collect();
        Union::new(arms)
    })
    .boxed()
}

pub fn sequent(fragment: Fragment, letters: u32, depth: u32, premises: usize) -> BoxedStrategy<Sequent> {
    (
        proptest::collection::vec(formula(fragment, letters, depth), 0..=premises),
        formula(fragment, letters, depth),
    )
        .prop_map(|(ps, c)| Sequent::new(ps, c))
        .boxed()
}

/// Arbitrary tables for `fragment` on `m` elements with any designated set.
pub fn matrix(fragment: Fragment, m: usize) -> BoxedStrategy<Matrix> {
    let cells: Vec<(Connective, usize)> = [Connective::Not, Connective::And, Connective::Or, Connective::Implies]
        .into_iter()
        .filter(|&c| fragment.contains(c))
        .map(|c| (c, m.pow(c.arity() as u32)))
        .collect();
    let total: usize = cells.iter().map(|c| c.1).sum();
    (
        proptest::collection::vec(0..m, total),
        proptest::collection::vec(any::<bool>(), m),
    )
        .prop_map(move |(entries, flags)| {
            let mut tables = Tables::default();
            let mut pos = 0;
            for &(c, len) in &cells {
                *tables.get_mut(c) = Some(entries[pos..pos + len].to_vec());
                pos += len;
            }
            let designated: Vec<usize> = (0..m).filter(|&a| flags[a]).collect();
            let names = (0..m).map(|a| a.to_string()).collect();
            Matrix::new(names, &designated, tables).expect("generated tables are in range")
        })
        .boxed()
}

pub fn frag(spec: &str) -> Fragment {
    spec.parse().unwrap()
}

/// The six fragments with a finite semantics.
pub const DECIDABLE: [&str; 6] = ["empty", "and", "or", "and,or", "not", "and,not"];
