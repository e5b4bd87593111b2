use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::formula::{parse, Formula, Fragment, Letter};
use crate::matrix::{Matrix, Valuation};

/// `Γ ⊢ φ` with a finite premise list. Text form: `phi1 ; phi2 |- psi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Sequent {
        Sequent {
            premises,
            conclusion,
        }
    }

    pub fn theorem(conclusion: Formula) -> Sequent {
        Sequent::new(Vec::new(), conclusion)
    }

    /// Union of the fragments of all formulas.
    pub fn fragment(&self) -> Fragment {
        self.premises
            .iter()
            .fold(self.conclusion.fragment(), |acc, p| acc.union(p.fragment()))
    }

    pub fn letters(&self) -> std::collections::BTreeSet<Letter> {
        let mut out = self.conclusion.letters();
        for p in &self.premises {
            out.extend(p.letters());
        }
        out
    }

    pub fn parse(text: &str) -> Result<Sequent, ParseError> {
        let (lhs, rhs, offset) = if let Some(i) = text.find("|-") {
            (&text[..i], &text[i + 2..], i + 2)
        } else if let Some(i) = text.find('⊢') {
            (&text[..i], &text[i + '⊢'.len_utf8()..], i + '⊢'.len_utf8())
        } else {
            return Err(ParseError::new(text.chars().count(), "expected `|-`"));
        };
        let shift = |e: ParseError, base: usize| {
            ParseError::new(e.position + text[..base].chars().count(), e.message)
        };
        let mut premises = Vec::new();
        if !lhs.trim().is_empty() {
            let mut base = 0;
            for part in lhs.split(';') {
                premises.push(parse(part).map_err(|e| shift(e, base))?);
                base += part.len() + 1;
            }
        }
        let conclusion = parse(rhs).map_err(|e| shift(e, offset))?;
        Ok(Sequent::new(premises, conclusion))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.premises.iter().map(|p| p.to_string()).collect();
        if ps.is_empty() {
            write!(f, "|- {}", self.conclusion)
        } else {
            write!(f, "{} |- {}", ps.join(" ; "), self.conclusion)
        }
    }
}

impl FromStr for Sequent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sequent> {
        Ok(Sequent::parse(s)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Derivable,
    NotDerivable,
}

impl Outcome {
    pub fn from_bool(derivable: bool) -> Outcome {
        if derivable {
            Outcome::Derivable
        } else {
            Outcome::NotDerivable
        }
    }

    pub fn is_derivable(self) -> bool {
        self == Outcome::Derivable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Derivable => "derivable",
            Outcome::NotDerivable => "not-derivable",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Outcome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Outcome> {
        match s.trim() {
            "derivable" => Ok(Outcome::Derivable),
            "not-derivable" => Ok(Outcome::NotDerivable),
            other => Err(Error::Format(format!("unknown outcome `{other}`"))),
        }
    }
}

/// Which procedure produced a verdict. The tag strings are stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Consequence in the two-element matrix.
    MatrixTwo,
    /// Consequence in the three-element matrix.
    MatrixThree,
    SyntacticConj,
    SyntacticConjDisj,
    Classical,
    Oracle,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::MatrixTwo => "matrix-2",
            Method::MatrixThree => "matrix-3",
            Method::SyntacticConj => "syntactic-conj",
            Method::SyntacticConjDisj => "syntactic-conj-disj",
            Method::Classical => "classical",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A countermodel: a valuation into a matrix under which every premise is
/// designated and the conclusion is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub matrix: Matrix,
    pub valuation: Valuation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub method: Method,
    pub witness: Option<Countermodel>,
}

impl Verdict {
    pub fn is_derivable(&self) -> bool {
        self.outcome.is_derivable()
    }

    /// Witness valuation rendered with the matrix's element names.
    pub fn witness_text(&self) -> Option<String> {
        self.witness
            .as_ref()
            .map(|w| w.valuation.render(&w.matrix))
    }

    /// `key: value` lines.
    pub fn porcelain(&self) -> String {
        let mut out = format!("outcome: {}\nmethod: {}\n", self.outcome, self.method);
        if let Some(w) = self.witness_text() {
            out.push_str(&format!("witness: {w}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let s = Sequent::parse("~~p1 |- p1").unwrap();
        assert_eq!(s.premises, vec![parse("~~p1").unwrap()]);
        assert_eq!(s.conclusion, parse("p1").unwrap());

        let s = Sequent::parse("|- p1 -> p1").unwrap();
        assert!(s.premises.is_empty());

        let s = Sequent::parse("p1 ; p1 -> p2 |- p2").unwrap();
        assert_eq!(s.premises.len(), 2);
        assert_eq!(s.to_string(), "p1 ; p1 -> p2 |- p2");
        assert_eq!(Sequent::parse(&s.to_string()).unwrap(), s);

        let s = Sequent::parse("p1 ∧ p2 ⊢ p2").unwrap();
        assert_eq!(s.premises.len(), 1);
    }

    #[test]
    fn parse_errors_point_into_the_text() {
        assert!(Sequent::parse("p1").is_err());
        assert_eq!(Sequent::parse("p1 ; p0 |- p1").unwrap_err().position, 5);
        assert_eq!(Sequent::parse("p1 |- p1 &").unwrap_err().position, 10);
        assert!(Sequent::parse("p1 ; |- p1").is_err());
    }

    #[test]
    fn outcome_strings() {
        for o in [Outcome::Derivable, Outcome::NotDerivable] {
            assert_eq!(o.as_str().parse::<Outcome>().unwrap(), o);
        }
    }
}
