use std::collections::BTreeSet;
use std::fmt;

use super::{Connective, Formula, Letter};
use crate::error::{Error, Result};

pub const DEFAULT_CLAUSE_LIMIT: usize = 4096;

/// Conjunction of non-empty disjunctions of letters, with duplicate clauses
/// and duplicate letters removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClauseSet {
    clauses: BTreeSet<BTreeSet<Letter>>,
}

impl ClauseSet {
    pub fn clauses(&self) -> &BTreeSet<BTreeSet<Letter>> {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Reads the clause set back as a formula, clauses and letters in order.
    pub fn to_formula(&self) -> Formula {
        let disj = |c: &BTreeSet<Letter>| {
            c.iter()
                .map(|&l| Formula::Letter(l))
                .reduce(Formula::or)
                .expect("clauses are non-empty")
        };
        self.clauses
            .iter()
            .map(disj)
            .reduce(Formula::and)
            .expect("clause sets are non-empty")
    }

    /// `{{p1,p2},{p3}}` style, for test output and reports.
    pub fn from_clauses<I, C>(clauses: I) -> ClauseSet
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = Letter>,
    {
        let clauses: BTreeSet<BTreeSet<Letter>> = clauses
            .into_iter()
            .map(|c| c.into_iter().collect::<BTreeSet<_>>())
            .collect();
        assert!(
            !clauses.is_empty() && clauses.iter().all(|c| !c.is_empty()),
            "clause sets and their clauses are non-empty"
        );
        ClauseSet { clauses }
    }
}

impl fmt::Display for ClauseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let ls: Vec<String> = c.iter().map(|l| l.to_string()).collect();
                format!("{{{}}}", ls.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn to_cnf(f: &Formula) -> Result<ClauseSet> {
    to_cnf_with_limit(f, DEFAULT_CLAUSE_LIMIT)
}

/// Full distribution of `∨` over `∧`. Fails with a resource-limit error once
/// an intermediate clause set exceeds `limit` clauses.
pub fn to_cnf_with_limit(f: &Formula, limit: usize) -> Result<ClauseSet> {
    let clauses = distribute(f, limit)?;
    Ok(ClauseSet { clauses })
}

fn distribute(f: &Formula, limit: usize) -> Result<BTreeSet<BTreeSet<Letter>>> {
    match f {
        Formula::Letter(l) => Ok(BTreeSet::from([BTreeSet::from([*l])])),
        Formula::And(a, b) => {
            let mut left = distribute(a, limit)?;
            left.extend(distribute(b, limit)?);
            check(left.len(), limit)?;
            Ok(left)
        }
        Formula::Or(a, b) => {
            let left = distribute(a, limit)?;
            let right = distribute(b, limit)?;
            check(left.len().saturating_mul(right.len()), limit)?;
            let mut out = BTreeSet::new();
            for l in &left {
                for r in &right {
                    out.insert(l.union(r).copied().collect());
                }
            }
            Ok(out)
        }
        other => Err(Error::FragmentMismatch(format!(
            "conjunctive normal form needs an {{and, or}} formula, found {}",
            other.connective().map_or("?", Connective::name)
        ))),
    }
}

fn check(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "conjunctive normal form needs {n} clauses, limit is {limit}"
        )));
    }
    Ok(())
}
