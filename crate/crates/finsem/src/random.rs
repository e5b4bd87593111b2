//! Seeded random formulas and sequents within a fragment.

use rand::Rng;

use crate::formula::{Connective, Formula, Fragment};
use crate::sequent::Sequent;

/// Shape bounds for generated formulas and sequents.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub fragment: Fragment,
    /// Letters are drawn from `p1..p_letters`.
    pub letters: u32,
    pub max_depth: usize,
    pub max_premises: usize,
}

impl Shape {
    pub fn new(fragment: Fragment, letters: u32, max_depth: usize, max_premises: usize) -> Shape {
        assert!(letters >= 1);
        Shape {
            fragment,
            letters,
            max_depth,
            max_premises,
        }
    }

    pub fn formula<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        random_formula(rng, self.fragment, self.letters, self.max_depth)
    }

    pub fn sequent<R: Rng + ?Sized>(&self, rng: &mut R) -> Sequent {
        let k = rng.gen_range(0..=self.max_premises);
        let premises = (0..k).map(|_| self.formula(rng)).collect();
        Sequent::new(premises, self.formula(rng))
    }
}

pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, fragment: Fragment, letters: u32, max_depth: usize) -> Formula {
    let connectives: Vec<Connective> = fragment.connectives().collect();
    if max_depth == 0 || connectives.is_empty() || rng.gen_bool(0.3) {
        return Formula::letter(rng.gen_range(1..=letters));
    }
    let pick = connectives[rng.gen_range(0..connectives.len())];
    let mut sub = || random_formula(rng, fragment, letters, max_depth - 1);
    match pick {
        Connective::Not => Formula::not(sub()),
        Connective::And => Formula::and(sub(), sub()),
        Connective::Or => Formula::or(sub(), sub()),
        Connective::Implies => Formula::implies(sub(), sub()),
    }
}
