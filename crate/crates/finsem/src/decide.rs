//! Decision procedures for the fragments without `→` that have a finite
//! matrix semantics: `∅, {∧}, {∨}, {∧,∨}` are decided by the two-element
//! matrix, `{¬}, {∧,¬}` by the three-element one. Syntactic procedures for
//! `{∧}` and `{∧,∨}` serve as independent cross-checks.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formula::{to_cnf_with_limit, Connective, Fragment, Letter, DEFAULT_CLAUSE_LIMIT};
use crate::matrix::{make_three, make_two, Consequence, Matrix, Valuation};
use crate::sequent::{Countermodel, Method, Outcome, Sequent, Verdict};

fn from_consequence(c: Consequence, matrix: Matrix, method: Method) -> Verdict {
    match c {
        Consequence::Holds => Verdict {
            outcome: Outcome::Derivable,
            method,
            witness: None,
        },
        Consequence::Fails(valuation) => Verdict {
            outcome: Outcome::NotDerivable,
            method,
            witness: Some(Countermodel { matrix, valuation }),
        },
    }
}

fn matrix_verdict(s: &Sequent, matrix: Matrix, method: Method) -> Result<Verdict> {
    let c = crate::matrix::consequence(&matrix, &s.premises, &s.conclusion)?;
    Ok(from_consequence(c, matrix, method))
}

/// Rejects fragments without a finite semantics, naming the smallest
/// offending connective set.
pub fn check_supported(fragment: Fragment) -> Result<()> {
    let or_not = Fragment::of(&[Connective::Or, Connective::Not]);
    if fragment.contains(Connective::Implies) {
        return Err(Error::UnsupportedFragment {
            offending: Fragment::of(&[Connective::Implies]),
        });
    }
    if or_not.is_subset_of(fragment) {
        return Err(Error::UnsupportedFragment { offending: or_not });
    }
    Ok(())
}

/// Decides `Γ ⊢_F φ` for `F` the union fragment of the sequent.
pub fn decide(s: &Sequent) -> Result<Verdict> {
    let fragment = s.fragment();
    check_supported(fragment)?;
    if fragment.is_subset_of(Fragment::of(&[Connective::And, Connective::Or])) {
        matrix_verdict(s, make_two(fragment), Method::MatrixTwo)
    } else {
        matrix_verdict(s, make_three(fragment)?, Method::MatrixThree)
    }
}

/// `{∧}` (and `∅`): derivable iff every letter of the conclusion occurs in
/// some premise. A failure carries the two-valued countermodel that sends
/// the missing letter to 0 and everything else to 1.
pub fn decide_conj_syntactic(s: &Sequent) -> Result<Verdict> {
    let fragment = s.fragment();
    if !fragment.is_subset_of(Fragment::of(&[Connective::And])) {
        return Err(Error::FragmentMismatch(format!(
            "conjunction procedure needs an {{and}} sequent, found `{fragment}`"
        )));
    }
    let available: BTreeSet<Letter> = s.premises.iter().flat_map(|p| p.letters()).collect();
    let missing = s.conclusion.letters().into_iter().find(|l| !available.contains(l));
    Ok(match missing {
        None => Verdict {
            outcome: Outcome::Derivable,
            method: Method::SyntacticConj,
            witness: None,
        },
        Some(q) => {
            let valuation = s.letters().into_iter().map(|l| (l, usize::from(l != q))).collect();
            Verdict {
                outcome: Outcome::NotDerivable,
                method: Method::SyntacticConj,
                witness: Some(Countermodel {
                    matrix: make_two(fragment),
                    valuation,
                }),
            }
        }
    })
}

/// `{∧,∨}` (and `{∨}`): after reducing everything to clauses, derivable iff
/// each conclusion clause contains some premise clause. A failure carries
/// the countermodel sending the failing clause's letters to 0 and the rest
/// to 1.
pub fn decide_conj_disj_syntactic(s: &Sequent) -> Result<Verdict> {
    decide_conj_disj_syntactic_with_limit(s, DEFAULT_CLAUSE_LIMIT)
}

pub fn decide_conj_disj_syntactic_with_limit(s: &Sequent, clause_limit: usize) -> Result<Verdict> {
    let fragment = s.fragment();
    if !fragment.is_subset_of(Fragment::of(&[Connective::And, Connective::Or])) {
        return Err(Error::FragmentMismatch(format!(
            "conjunction-disjunction procedure needs an {{and, or}} sequent, found `{fragment}`"
        )));
    }
    let mut premise_clauses: BTreeSet<BTreeSet<Letter>> = BTreeSet::new();
    for p in &s.premises {
        premise_clauses.extend(to_cnf_with_limit(p, clause_limit)?.clauses().iter().cloned());
    }
    let conclusion = to_cnf_with_limit(&s.conclusion, clause_limit)?;
    let failing = conclusion
        .clauses()
        .iter()
        .find(|c| !premise_clauses.iter().any(|d| d.is_subset(c)));
    Ok(match failing {
        None => Verdict {
            outcome: Outcome::Derivable,
            method: Method::SyntacticConjDisj,
            witness: None,
        },
        Some(clause) => {
            let valuation: Valuation = s
                .letters()
                .into_iter()
                .map(|l| (l, usize::from(!clause.contains(&l))))
                .collect();
            Verdict {
                outcome: Outcome::NotDerivable,
                method: Method::SyntacticConjDisj,
                witness: Some(Countermodel {
                    matrix: make_two(fragment),
                    valuation,
                }),
            }
        }
    })
}

/// Two-valued truth-table consequence over all four connectives.
pub fn classical_consequence(s: &Sequent) -> Result<Verdict> {
    matrix_verdict(s, make_two(Fragment::FULL), Method::Classical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::evaluate;

    fn seq(s: &str) -> Sequent {
        Sequent::parse(s).unwrap()
    }

    /// Replays a countermodel: every premise designated, conclusion not.
    fn replays(s: &Sequent, v: &Verdict) -> bool {
        let w = v.witness.as_ref().expect("witness");
        let d = |f| w.matrix.is_designated(evaluate(&w.matrix, &w.valuation, f).unwrap());
        s.premises.iter().all(d) && !d(&s.conclusion)
    }

    #[test]
    fn decide_examples() {
        assert!(decide(&seq("p1 & p2 |- p2")).unwrap().is_derivable());

        let s = seq("~~p1 |- p1");
        let v = decide(&s).unwrap();
        assert_eq!(v.outcome, Outcome::NotDerivable);
        assert_eq!(v.method, Method::MatrixThree);
        assert_eq!(v.witness_text().unwrap(), "p1=h");
        assert!(replays(&s, &v));

        let v = decide(&seq("p1 | p2 |- p2 | p1")).unwrap();
        assert!(v.is_derivable());
        assert_eq!(v.method, Method::MatrixTwo);
    }

    #[test]
    fn empty_fragment_uses_two() {
        let v = decide(&seq("p1 ; p2 |- p2")).unwrap();
        assert!(v.is_derivable());
        assert_eq!(v.method, Method::MatrixTwo);
        assert!(!decide(&seq("|- p1")).unwrap().is_derivable());
    }

    #[test]
    fn unsupported_fragments() {
        let err = decide(&seq("|- p1 -> p1")).unwrap_err();
        assert_eq!(
            err,
            Error::UnsupportedFragment {
                offending: Fragment::of(&[Connective::Implies])
            }
        );
        let err = decide(&seq("p1 |- ~p2 | p1")).unwrap_err();
        assert_eq!(
            err,
            Error::UnsupportedFragment {
                offending: Fragment::of(&[Connective::Or, Connective::Not])
            }
        );
        // mixed sequents use the union fragment
        assert!(decide(&seq("p1 | p2 |- ~p1")).is_err());
    }

    #[test]
    fn conj_syntactic_examples() {
        assert!(decide_conj_syntactic(&seq("p1 & p2 |- p2 & p1")).unwrap().is_derivable());
        let s = seq("p1 |- p2");
        let v = decide_conj_syntactic(&s).unwrap();
        assert!(!v.is_derivable());
        assert!(replays(&s, &v));
        assert!(decide_conj_syntactic(&seq("p1 & p2 ; p3 |- p3 & p1")).unwrap().is_derivable());
        assert!(decide_conj_syntactic(&seq("p1 |- p1 | p2")).is_err());
    }

    #[test]
    fn conj_disj_syntactic_examples() {
        assert!(decide_conj_disj_syntactic(&seq("p1 | p2 |- p1 | p2 | p3")).unwrap().is_derivable());
        let s = seq("p1 | p2 |- p1");
        let v = decide_conj_disj_syntactic(&s).unwrap();
        assert!(!v.is_derivable());
        assert!(replays(&s, &v));
        assert!(decide_conj_disj_syntactic(&seq("p1 & (p2 | p3) |- p1 & p2 | p3"))
            .unwrap()
            .is_derivable());
        assert!(decide_conj_disj_syntactic(&seq("p1 |- ~p1")).is_err());
    }

    #[test]
    fn conj_disj_agrees_with_two_on_examples() {
        for s in [
            "p1 | p2 |- p1 | p2 | p3",
            "p1 & (p2 | p3) |- p1 & p2 | p3",
            "p1 & (p2 | p3) |- (p1 & p2) | (p1 & p3)",
            "(p1 | p2) & (p1 | p3) |- p1 | p2 & p3",
            "p1 | p2 & p3 |- p2",
            "|- p1 | p2",
        ] {
            let s = seq(s);
            assert_eq!(
                decide(&s).unwrap().outcome,
                decide_conj_disj_syntactic(&s).unwrap().outcome,
                "{s}"
            );
        }
    }

    #[test]
    fn classical_examples() {
        let s = seq("|- ~~(~p1 | p2)");
        let v = classical_consequence(&s).unwrap();
        assert!(!v.is_derivable());
        assert_eq!(v.witness_text().unwrap(), "p1=1,p2=0");
        assert!(replays(&s, &v));
        assert!(classical_consequence(&seq("~~p1 |- p1")).unwrap().is_derivable());
        assert!(classical_consequence(&seq("|- ((p1 -> p2) -> p1) -> p1"))
            .unwrap()
            .is_derivable());
    }
}
