//! Propositional formulas over the connectives `∧ ∨ → ¬`, fragments of the
//! connective set, and the pigeonhole formula families used by the refuter.

mod cnf;
mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use cnf::{to_cnf, to_cnf_with_limit, ClauseSet, DEFAULT_CLAUSE_LIMIT};
pub use parse::{parse, print, print_full};

use crate::error::{Error, ParseError, Result};

/// A propositional letter `p_i`, `i ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(index: u32) -> Result<Letter> {
        if index == 0 {
            return Err(Error::Precondition("letter index must be >= 1".into()));
        }
        Ok(Letter(index))
    }

    /// Panics on index 0; for literals in code.
    pub fn p(index: u32) -> Letter {
        Letter::new(index).expect("letter index must be >= 1")
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connective {
    And,
    Or,
    Implies,
    Not,
}

impl Connective {
    pub const ALL: [Connective; 4] = [
        Connective::And,
        Connective::Or,
        Connective::Implies,
        Connective::Not,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Implies => "implies",
            Connective::Not => "not",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Connective::Not => 1,
            _ => 2,
        }
    }

    fn bit(self) -> u8 {
        match self {
            Connective::And => 1,
            Connective::Or => 2,
            Connective::Implies => 4,
            Connective::Not => 8,
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subset of `{and, or, implies, not}`. There are exactly sixteen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fragment(u8);

impl Fragment {
    pub const EMPTY: Fragment = Fragment(0);
    pub const FULL: Fragment = Fragment(15);

    pub fn of(connectives: &[Connective]) -> Fragment {
        connectives
            .iter()
            .fold(Fragment::EMPTY, |acc, &c| acc.with(c))
    }

    /// All sixteen fragments, ordered by their bit encoding.
    pub fn all() -> impl Iterator<Item = Fragment> {
        (0u8..16).map(Fragment)
    }

    pub fn with(self, c: Connective) -> Fragment {
        Fragment(self.0 | c.bit())
    }

    pub fn contains(self, c: Connective) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn is_subset_of(self, other: Fragment) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Fragment) -> Fragment {
        Fragment(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn connectives(self) -> impl Iterator<Item = Connective> {
        Connective::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        let names: Vec<_> = self.connectives().map(Connective::name).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for Fragment {
    type Err = Error;

    /// Comma-separated connective names, or `empty`.
    fn from_str(s: &str) -> Result<Fragment> {
        let s = s.trim();
        if s == "empty" || s.is_empty() {
            return Ok(Fragment::EMPTY);
        }
        let mut frag = Fragment::EMPTY;
        for part in s.split(',') {
            let c = match part.trim() {
                "and" => Connective::And,
                "or" => Connective::Or,
                "implies" | "imp" => Connective::Implies,
                "not" => Connective::Not,
                other => {
                    return Err(ParseError::new(0, format!("unknown connective `{other}`")).into())
                }
            };
            frag = frag.with(c);
        }
        Ok(frag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Letter(Letter),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn letter(index: u32) -> Formula {
        Formula::Letter(Letter::p(index))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn connective(&self) -> Option<Connective> {
        match self {
            Formula::Letter(_) => None,
            Formula::Not(_) => Some(Connective::Not),
            Formula::And(..) => Some(Connective::And),
            Formula::Or(..) => Some(Connective::Or),
            Formula::Implies(..) => Some(Connective::Implies),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Letter(_) => 0,
            Formula::Not(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Number of connective occurrences.
    pub fn size(&self) -> usize {
        match self {
            Formula::Letter(_) => 0,
            Formula::Not(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        letters_of(self)
    }

    pub fn fragment(&self) -> Fragment {
        fragment_of(self)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Formula, ParseError> {
        parse(s)
    }
}

/// Replace every occurrence of `target` by `replacement`.
pub fn substitute(f: &Formula, target: Letter, replacement: Letter) -> Formula {
    match f {
        Formula::Letter(l) if *l == target => Formula::Letter(replacement),
        Formula::Letter(l) => Formula::Letter(*l),
        Formula::Not(a) => Formula::not(substitute(a, target, replacement)),
        Formula::And(a, b) => Formula::and(
            substitute(a, target, replacement),
            substitute(b, target, replacement),
        ),
        Formula::Or(a, b) => Formula::or(
            substitute(a, target, replacement),
            substitute(b, target, replacement),
        ),
        Formula::Implies(a, b) => Formula::implies(
            substitute(a, target, replacement),
            substitute(b, target, replacement),
        ),
    }
}

pub fn letters_of(f: &Formula) -> BTreeSet<Letter> {
    fn walk(f: &Formula, out: &mut BTreeSet<Letter>) {
        match f {
            Formula::Letter(l) => {
                out.insert(*l);
            }
            Formula::Not(a) => walk(a, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, out);
                walk(b, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

pub fn fragment_of(f: &Formula) -> Fragment {
    match f {
        Formula::Letter(_) => Fragment::EMPTY,
        Formula::Not(a) => a.fragment().with(Connective::Not),
        Formula::And(a, b) => a.fragment().union(b.fragment()).with(Connective::And),
        Formula::Or(a, b) => a.fragment().union(b.fragment()).with(Connective::Or),
        Formula::Implies(a, b) => a.fragment().union(b.fragment()).with(Connective::Implies),
    }
}

/// `a ∨̇ b = (a → b) → b`.
pub fn dotvee(a: Formula, b: Formula) -> Formula {
    Formula::implies(Formula::implies(a, b.clone()), b)
}

/// Letter pairs `(i, j)`, `1 ≤ i < j ≤ n+1`, in ascending lexicographic
/// order: for `n = 2` this is `(1,2), (1,3), (2,3)`. Under `p_i ↦ i` in a
/// chain the arrow disjuncts then take non-decreasing values, so the fold
/// collapses to `n`.
pub fn alpha_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n + 1 {
            pairs.push((i, j));
        }
    }
    pairs
}

fn fold_pairs(
    n: u32,
    disjunct: impl Fn(u32, u32) -> Formula,
    join: impl Fn(Formula, Formula) -> Formula,
) -> Result<Formula> {
    if n < 1 {
        return Err(Error::Precondition("alpha index n must be >= 1".into()));
    }
    let mut parts = alpha_pairs(n).into_iter().map(|(i, j)| disjunct(i, j));
    let first = parts.next().expect("n >= 1 gives at least one pair");
    Ok(parts.fold(first, join))
}

/// Left-associated `∨̇`-fold of `p_j → p_i` over all pairs `i < j ≤ n+1`.
pub fn gen_alpha_arrow(n: u32) -> Result<Formula> {
    fold_pairs(
        n,
        |i, j| Formula::implies(Formula::letter(j), Formula::letter(i)),
        dotvee,
    )
}

/// Left-associated `∨`-fold of `¬¬(¬p_i ∨ p_j)` over all pairs `i < j ≤ n+1`.
pub fn gen_alpha_orneg(n: u32) -> Result<Formula> {
    fold_pairs(n, orneg_disjunct, Formula::or)
}

/// `¬¬(¬p_i ∨ p_j)`.
pub fn orneg_disjunct(i: u32, j: u32) -> Formula {
    Formula::not(Formula::not(Formula::or(
        Formula::not(Formula::letter(i)),
        Formula::letter(j),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: u32) -> Formula {
        Formula::letter(i)
    }

    fn imp(a: Formula, b: Formula) -> Formula {
        Formula::implies(a, b)
    }

    /// Walks a left-associated fold, returning the leaves.
    fn unfold(f: &Formula, dot: bool) -> Vec<Formula> {
        if dot {
            if let Formula::Implies(ab, b2) = f {
                if let Formula::Implies(a, b) = ab.as_ref() {
                    if b == b2 && matches!(b.as_ref(), Formula::Implies(..)) {
                        let mut v = unfold(a, dot);
                        v.push((**b).clone());
                        return v;
                    }
                }
            }
        } else if let Formula::Or(a, b) = f {
            let mut v = unfold(a, dot);
            v.push((**b).clone());
            return v;
        }
        vec![f.clone()]
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(
            substitute(&imp(p(2), p(1)), Letter::p(2), Letter::p(1)),
            imp(p(1), p(1))
        );
        assert_eq!(substitute(&p(1), Letter::p(2), Letter::p(3)), p(1));
        let beta = substitute(&gen_alpha_arrow(2).unwrap(), Letter::p(3), Letter::p(2));
        assert!(print(&beta).ends_with("-> p2 -> p2"));
    }

    #[test]
    fn letters_and_fragments() {
        assert_eq!(
            fragment_of(&Formula::not(Formula::and(p(1), p(2)))),
            Fragment::of(&[Connective::And, Connective::Not])
        );
        let letters: Vec<_> = letters_of(&gen_alpha_arrow(2).unwrap()).into_iter().collect();
        assert_eq!(letters, vec![Letter::p(1), Letter::p(2), Letter::p(3)]);
        assert_eq!(fragment_of(&p(5)), Fragment::EMPTY);
    }

    #[test]
    fn fragment_strings() {
        assert_eq!(Fragment::all().count(), 16);
        for f in Fragment::all() {
            assert_eq!(f.to_string().parse::<Fragment>().unwrap(), f);
        }
        assert_eq!("empty".parse::<Fragment>().unwrap(), Fragment::EMPTY);
        assert_eq!("and,not".parse::<Fragment>().unwrap().to_string(), "and,not");
        assert!("xor".parse::<Fragment>().is_err());
    }

    #[test]
    fn dotvee_examples() {
        assert_eq!(dotvee(p(1), p(2)), imp(imp(p(1), p(2)), p(2)));
        assert_eq!(dotvee(p(4), p(4)), imp(imp(p(4), p(4)), p(4)));
    }

    #[test]
    fn alpha_arrow_examples() {
        assert_eq!(gen_alpha_arrow(1).unwrap(), imp(p(2), p(1)));
        assert_eq!(
            gen_alpha_arrow(2).unwrap(),
            dotvee(
                dotvee(imp(p(2), p(1)), imp(p(3), p(1))),
                imp(p(3), p(2))
            )
        );
        let a3 = gen_alpha_arrow(3).unwrap();
        assert_eq!(a3.letters().len(), 4);
        assert_eq!(unfold(&a3, true).len(), 6);
        assert!(gen_alpha_arrow(0).is_err());
    }

    #[test]
    fn alpha_orneg_examples() {
        let a1 = gen_alpha_orneg(1).unwrap();
        assert_eq!(a1, Formula::not(Formula::not(Formula::or(Formula::not(p(1)), p(2)))));
        assert_eq!(
            gen_alpha_orneg(2).unwrap().fragment(),
            Fragment::of(&[Connective::Or, Connective::Not])
        );
        assert_eq!(
            substitute(&a1, Letter::p(2), Letter::p(1)),
            Formula::not(Formula::not(Formula::or(Formula::not(p(1)), p(1))))
        );
        assert!(gen_alpha_orneg(0).is_err());
    }

    #[test]
    fn alpha_disjunct_counts() {
        for n in 1..=6u32 {
            let expected = (n * (n + 1) / 2) as usize;
            let arrow = gen_alpha_arrow(n).unwrap();
            let orneg = gen_alpha_orneg(n).unwrap();
            assert_eq!(unfold(&arrow, true).len(), expected);
            assert_eq!(unfold(&orneg, false).len(), expected);
            let want: BTreeSet<_> = (1..=n + 1).map(Letter::p).collect();
            assert_eq!(arrow.letters(), want);
            assert_eq!(orneg.letters(), want);
        }
    }

    #[test]
    fn letter_zero_rejected() {
        assert!(Letter::new(0).is_err());
    }
}
