//! Reference prover for intuitionistic propositional derivability.
//!
//! Contraction-free sequent search (G4ip). `¬A` enters as `A → ⊥`; the
//! constant `⊥` exists only inside this module. Right-invertible rules are
//! applied before left-invertible ones, then the non-invertible rules are
//! tried in a fixed order, so results are deterministic.

use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::sequent::{Method, Outcome, Sequent, Verdict};

pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Prop {
    Atom(u32),
    Bot,
    And(P, P),
    Or(P, P),
    Imp(P, P),
}

type P = Rc<Prop>;

fn embed(f: &Formula) -> P {
    Rc::new(match f {
        Formula::Letter(l) => Prop::Atom(l.index()),
        Formula::Not(a) => Prop::Imp(embed(a), Rc::new(Prop::Bot)),
        Formula::And(a, b) => Prop::And(embed(a), embed(b)),
        Formula::Or(a, b) => Prop::Or(embed(a), embed(b)),
        Formula::Implies(a, b) => Prop::Imp(embed(a), embed(b)),
    })
}

fn imp(a: &P, b: &P) -> P {
    Rc::new(Prop::Imp(a.clone(), b.clone()))
}

struct Search {
    budget: u64,
    steps: u64,
    memo: HashMap<(Vec<P>, P), bool>,
}

impl Search {
    fn prove(&mut self, mut ctx: Vec<P>, goal: P) -> Result<bool> {
        ctx.sort();
        ctx.dedup();
        let key = (ctx, goal);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::ResourceLimit(format!(
                "proof search exceeded its budget of {} sequents",
                self.budget
            )));
        }
        let r = self.search(&key.0, &key.1)?;
        self.memo.insert(key, r);
        Ok(r)
    }

    fn without(ctx: &[P], i: usize, extra: &[P]) -> Vec<P> {
        let mut out: Vec<P> = ctx[..i].iter().chain(&ctx[i + 1..]).cloned().collect();
        out.extend_from_slice(extra);
        out
    }

    fn search(&mut self, ctx: &[P], goal: &P) -> Result<bool> {
        if ctx.iter().any(|f| **f == Prop::Bot) || ctx.contains(goal) {
            return Ok(true);
        }

        // right invertible
        match &**goal {
            Prop::And(a, b) => {
                return Ok(self.prove(ctx.to_vec(), a.clone())? && self.prove(ctx.to_vec(), b.clone())?)
            }
            Prop::Imp(a, b) => {
                let mut c = ctx.to_vec();
                c.push(a.clone());
                return self.prove(c, b.clone());
            }
            _ => {}
        }

        // left invertible
        for (i, f) in ctx.iter().enumerate() {
            match &**f {
                Prop::And(a, b) => {
                    return self.prove(Self::without(ctx, i, &[a.clone(), b.clone()]), goal.clone());
                }
                Prop::Or(a, b) => {
                    return Ok(self.prove(Self::without(ctx, i, std::slice::from_ref(a)), goal.clone())?
                        && self.prove(Self::without(ctx, i, std::slice::from_ref(b)), goal.clone())?);
                }
                Prop::Imp(a, b) => match &**a {
                    Prop::Atom(_) if ctx.contains(a) => {
                        return self.prove(Self::without(ctx, i, std::slice::from_ref(b)), goal.clone());
                    }
                    Prop::Bot => return self.prove(Self::without(ctx, i, &[]), goal.clone()),
                    Prop::And(c, d) => {
                        let curried = imp(c, &imp(d, b));
                        return self.prove(Self::without(ctx, i, &[curried]), goal.clone());
                    }
                    Prop::Or(c, d) => {
                        let split = [imp(c, b), imp(d, b)];
                        return self.prove(Self::without(ctx, i, &split), goal.clone());
                    }
                    _ => {}
                },
                _ => {}
            }
        }

        // non-invertible
        if let Prop::Or(a, b) = &**goal {
            if self.prove(ctx.to_vec(), a.clone())? || self.prove(ctx.to_vec(), b.clone())? {
                return Ok(true);
            }
        }
        for (i, f) in ctx.iter().enumerate() {
            let Prop::Imp(ante, b) = &**f else { continue };
            let Prop::Imp(_, d) = &**ante else { continue };
            if self.prove(Self::without(ctx, i, &[imp(d, b)]), ante.clone())?
                && self.prove(Self::without(ctx, i, std::slice::from_ref(b)), goal.clone())?
            {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Intuitionistic prover with a configurable search budget.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    budget: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Oracle {
    pub fn with_budget(budget: u64) -> Oracle {
        Oracle { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn derivable(&self, s: &Sequent) -> Result<bool> {
        let mut search = Search {
            budget: self.budget,
            steps: 0,
            memo: HashMap::new(),
        };
        let ctx = s.premises.iter().map(embed).collect();
        search.prove(ctx, embed(&s.conclusion))
    }

    pub fn prove(&self, s: &Sequent) -> Result<Verdict> {
        Ok(Verdict {
            outcome: Outcome::from_bool(self.derivable(s)?),
            method: Method::Oracle,
            witness: None,
        })
    }

    pub fn is_theorem(&self, f: &Formula) -> Result<bool> {
        self.derivable(&Sequent::theorem(f.clone()))
    }
}

/// Intuitionistic derivability with the default budget.
pub fn prove_ipc(s: &Sequent) -> Result<Verdict> {
    Oracle::default().prove(s)
}

/// Which disjuncts of a derivable disjunction are themselves derivable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisjunctionReport {
    pub left: bool,
    pub right: bool,
}

impl DisjunctionReport {
    pub fn describe(&self) -> &'static str {
        match (self.left, self.right) {
            (true, true) => "both",
            (true, false) => "left",
            (false, true) => "right",
            (false, false) => "neither",
        }
    }
}

/// For a derivable `a ∨ b`, reports which of `a`, `b` are derivable.
pub fn check_disjunction_property(f: &Formula) -> Result<DisjunctionReport> {
    check_disjunction_property_with(&Oracle::default(), f)
}

pub fn check_disjunction_property_with(oracle: &Oracle, f: &Formula) -> Result<DisjunctionReport> {
    let Formula::Or(a, b) = f else {
        return Err(Error::Precondition(format!("`{f}` is not a disjunction")));
    };
    if !oracle.is_theorem(f)? {
        return Err(Error::Precondition(format!("`{f}` is not derivable")));
    }
    let report = DisjunctionReport {
        left: oracle.is_theorem(a)?,
        right: oracle.is_theorem(b)?,
    };
    if !report.left && !report.right {
        return Err(Error::Internal(format!(
            "derivable disjunction `{f}` has no derivable disjunct"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{gen_alpha_arrow, gen_alpha_orneg, parse};

    fn thm(s: &str) -> bool {
        Oracle::default().is_theorem(&parse(s).unwrap()).unwrap()
    }

    fn seq(s: &str) -> bool {
        prove_ipc(&Sequent::parse(s).unwrap()).unwrap().is_derivable()
    }

    #[test]
    fn examples() {
        assert!(thm("p1 -> p1"));
        assert!(!thm("p2 -> p1"));
        assert!(thm("~~(p1 | ~p1)"));
        assert!(!Oracle::default().is_theorem(&gen_alpha_arrow(2).unwrap()).unwrap());
    }

    #[test]
    fn classical_principles_fail() {
        assert!(!thm("p1 | ~p1"));
        assert!(!thm("~~p1 -> p1"));
        assert!(!thm("((p1 -> p2) -> p1) -> p1"));
        assert!(!thm("(p1 -> p2) | (p2 -> p1)"));
        assert!(!thm("~p1 | ~~p1"));
        assert!(!Oracle::default().is_theorem(&gen_alpha_orneg(2).unwrap()).unwrap());
    }

    #[test]
    fn intuitionistic_principles_hold() {
        assert!(thm("p1 -> ~~p1"));
        assert!(thm("~~~p1 -> ~p1"));
        assert!(thm("(p1 -> p2) -> ~p2 -> ~p1"));
        assert!(thm("~(p1 | p2) -> ~p1 & ~p2"));
        assert!(thm("~p1 & ~p2 -> ~(p1 | p2)"));
        assert!(thm("(p1 & p2 -> p3) -> p1 -> p2 -> p3"));
        assert!(thm("p1 & (p2 | p3) -> p1 & p2 | p1 & p3"));
        assert!(thm("~~(((p1 -> p2) -> p1) -> p1)"));
        assert!(seq("p1 ; p1 -> p2 |- p2"));
        assert!(seq("p1 ; ~p1 |- p2"));
        assert!(!seq("~~p1 |- p1"));
        assert!(seq("p1 |- ~~p1"));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let tiny = Oracle::with_budget(3);
        let f = gen_alpha_arrow(2).unwrap();
        assert!(matches!(tiny.is_theorem(&f), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn disjunction_property_examples() {
        let r = check_disjunction_property(&parse("(p1 -> p1) | p2").unwrap()).unwrap();
        assert_eq!(r.describe(), "left");
        let r = check_disjunction_property(&parse("(p1 -> p1) | (p2 -> p2)").unwrap()).unwrap();
        assert_eq!(r.describe(), "both");
        let f = parse("~~(~p1 | p2) | ~~(~p1 | p2)").unwrap();
        assert!(matches!(check_disjunction_property(&f), Err(Error::Precondition(_))));
        assert!(matches!(
            check_disjunction_property(&parse("p1 -> p1").unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
