//! Finite logical matrices: an operation table per connective plus a set of
//! designated elements. Evaluation, semantic consequence, and the standard
//! matrices `2`, `3` and the `m`-element chains.

mod algebra;
mod file;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

pub use algebra::{congruences, is_subalgebra, Congruence, MAX_CONGRUENCE_SIZE};
pub use file::{parse_matrix, render_matrix};

use crate::error::{Error, MatrixError, Result};
use crate::formula::{Connective, Formula, Fragment, Letter};

/// Operation tables. Binary tables are row-major: entry `a * m + b` holds
/// `a op b`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tables {
    pub not: Option<Vec<usize>>,
    pub and: Option<Vec<usize>>,
    pub or: Option<Vec<usize>>,
    pub implies: Option<Vec<usize>>,
}

impl Tables {
    pub fn get(&self, c: Connective) -> Option<&Vec<usize>> {
        match c {
            Connective::Not => self.not.as_ref(),
            Connective::And => self.and.as_ref(),
            Connective::Or => self.or.as_ref(),
            Connective::Implies => self.implies.as_ref(),
        }
    }

    pub fn get_mut(&mut self, c: Connective) -> &mut Option<Vec<usize>> {
        match c {
            Connective::Not => &mut self.not,
            Connective::And => &mut self.and,
            Connective::Or => &mut self.or,
            Connective::Implies => &mut self.implies,
        }
    }

    pub fn fragment(&self) -> Fragment {
        Connective::ALL
            .into_iter()
            .filter(|&c| self.get(c).is_some())
            .fold(Fragment::EMPTY, Fragment::with)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixWarning {
    /// Nothing is designated: no formula is valid.
    NothingDesignated,
    /// Everything is designated: every formula is valid.
    EverythingDesignated,
}

impl fmt::Display for MatrixWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixWarning::NothingDesignated => f.write_str("designated set is empty"),
            MatrixWarning::EverythingDesignated => f.write_str("every element is designated"),
        }
    }
}

/// Checks the matrix invariants, reporting the first violation.
pub fn validate_matrix(
    names: &[String],
    designated: &[usize],
    tables: &Tables,
) -> Result<Vec<MatrixWarning>, MatrixError> {
    let m = names.len();
    if m == 0 {
        return Err(MatrixError::Empty);
    }
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(MatrixError::DuplicateName(n.clone()));
        }
    }
    for &d in designated {
        if d >= m {
            return Err(MatrixError::DesignatedOutOfRange { index: d, size: m });
        }
    }
    for c in Connective::ALL {
        let Some(table) = tables.get(c) else { continue };
        let expected = m.pow(c.arity() as u32);
        if table.len() != expected {
            return Err(MatrixError::TableSize {
                connective: c,
                expected,
                found: table.len(),
            });
        }
        if let Some((position, &value)) = table.iter().enumerate().find(|(_, &v)| v >= m) {
            return Err(MatrixError::EntryOutOfRange {
                connective: c,
                position,
                value,
                size: m,
            });
        }
    }
    let distinct: BTreeSet<_> = designated.iter().collect();
    let mut warnings = Vec::new();
    if distinct.is_empty() {
        warnings.push(MatrixWarning::NothingDesignated);
    } else if distinct.len() == m {
        warnings.push(MatrixWarning::EverythingDesignated);
    }
    Ok(warnings)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    names: Vec<String>,
    designated: Vec<bool>,
    tables: Tables,
}

impl Matrix {
    pub fn new(names: Vec<String>, designated: &[usize], tables: Tables) -> Result<Matrix, MatrixError> {
        validate_matrix(&names, designated, &tables)?;
        let mut flags = vec![false; names.len()];
        for &d in designated {
            flags[d] = true;
        }
        Ok(Matrix {
            names,
            designated: flags,
            tables,
        })
    }

    /// Caller guarantees the invariants checked by [`validate_matrix`].
    pub(crate) fn from_parts_unchecked(names: Vec<String>, designated: Vec<bool>, tables: Tables) -> Matrix {
        debug_assert_eq!(names.len(), designated.len());
        Matrix {
            names,
            designated,
            tables,
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_designated(&self, element: usize) -> bool {
        self.designated[element]
    }

    pub fn designated(&self) -> impl Iterator<Item = usize> + '_ {
        self.designated
            .iter()
            .enumerate()
            .filter(|(_, &d)| d)
            .map(|(i, _)| i)
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn fragment(&self) -> Fragment {
        self.tables.fragment()
    }

    pub fn warnings(&self) -> Vec<MatrixWarning> {
        let designated: Vec<usize> = self.designated().collect();
        validate_matrix(&self.names, &designated, &self.tables).unwrap_or_default()
    }

    pub fn apply_unary(&self, c: Connective, a: usize) -> Option<usize> {
        self.tables.get(c).map(|t| t[a])
    }

    pub fn apply_binary(&self, c: Connective, a: usize, b: usize) -> Option<usize> {
        let m = self.size();
        self.tables.get(c).map(|t| t[a * m + b])
    }

    /// Same matrix with element `a` renamed to position `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        let m = self.size();
        assert_eq!(perm.len(), m);
        let mut names = vec![String::new(); m];
        let mut designated = vec![false; m];
        for a in 0..m {
            names[perm[a]] = self.names[a].clone();
            designated[perm[a]] = self.designated[a];
        }
        let mut tables = Tables::default();
        for c in Connective::ALL {
            let Some(t) = self.tables.get(c) else { continue };
            let mut out = vec![0; t.len()];
            if c.arity() == 1 {
                for a in 0..m {
                    out[perm[a]] = perm[t[a]];
                }
            } else {
                for a in 0..m {
                    for b in 0..m {
                        out[perm[a] * m + perm[b]] = perm[t[a * m + b]];
                    }
                }
            }
            *tables.get_mut(c) = Some(out);
        }
        Matrix {
            names,
            designated,
            tables,
        }
    }

    /// Tables (in `not, and, or, implies` order) followed by the designated
    /// flags. Names are ignored.
    pub fn encoding(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for c in [Connective::Not, Connective::And, Connective::Or, Connective::Implies] {
            if let Some(t) = self.tables.get(c) {
                out.extend_from_slice(t);
            }
        }
        out.extend(self.designated.iter().map(|&d| d as usize));
        out
    }

    /// Equal tables and designated set, names aside.
    pub fn same_structure(&self, other: &Matrix) -> bool {
        self.size() == other.size()
            && self.fragment() == other.fragment()
            && self.encoding() == other.encoding()
    }
}

/// Assignment of matrix elements to letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(BTreeMap<Letter, usize>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn get(&self, l: Letter) -> Option<usize> {
        self.0.get(&l).copied()
    }

    pub fn insert(&mut self, l: Letter, element: usize) {
        self.0.insert(l, element);
    }

    pub fn with(mut self, l: Letter, element: usize) -> Valuation {
        self.insert(l, element);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, usize)> + '_ {
        self.0.iter().map(|(&l, &v)| (l, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `p1=h,p2=0` using the matrix's element names.
    pub fn render(&self, m: &Matrix) -> String {
        self.iter()
            .map(|(l, v)| format!("{}={}", l, m.name(v)))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Inverse of [`Valuation::render`].
    pub fn parse(text: &str, m: &Matrix) -> Result<Valuation> {
        let mut v = Valuation::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (l, e) = part
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("expected `pN=element`, found `{part}`")))?;
            let letter = match crate::formula::parse(l.trim())? {
                Formula::Letter(l) => l,
                _ => return Err(Error::Format(format!("`{l}` is not a letter"))),
            };
            let element = m
                .element(e.trim())
                .ok_or_else(|| Error::Format(format!("unknown element `{}`", e.trim())))?;
            v.insert(letter, element);
        }
        Ok(v)
    }
}

impl FromIterator<(Letter, usize)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Letter, usize)>>(iter: I) -> Self {
        Valuation(iter.into_iter().collect())
    }
}

fn require_tables(m: &Matrix, f: &Formula) -> Result<(), MatrixError> {
    let missing = f.fragment().connectives().find(|&c| !m.fragment().contains(c));
    match missing {
        Some(c) => Err(MatrixError::MissingTable(c)),
        None => Ok(()),
    }
}

/// Value of `f` under `v`, computed bottom-up through the tables.
pub fn evaluate(m: &Matrix, v: &Valuation, f: &Formula) -> Result<usize, MatrixError> {
    require_tables(m, f)?;
    eval_checked(m, v, f)
}

fn eval_checked(m: &Matrix, v: &Valuation, f: &Formula) -> Result<usize, MatrixError> {
    let bin = |c, a: &Formula, b: &Formula| -> Result<usize, MatrixError> {
        let x = eval_checked(m, v, a)?;
        let y = eval_checked(m, v, b)?;
        Ok(m.apply_binary(c, x, y).expect("tables checked"))
    };
    match f {
        Formula::Letter(l) => {
            let value = v.get(*l).ok_or(MatrixError::Unassigned(*l))?;
            if value >= m.size() {
                return Err(MatrixError::ValueOutOfRange {
                    letter: *l,
                    value,
                    size: m.size(),
                });
            }
            Ok(value)
        }
        Formula::Not(a) => {
            let x = eval_checked(m, v, a)?;
            Ok(m.apply_unary(Connective::Not, x).expect("tables checked"))
        }
        Formula::And(a, b) => bin(Connective::And, a, b),
        Formula::Or(a, b) => bin(Connective::Or, a, b),
        Formula::Implies(a, b) => bin(Connective::Implies, a, b),
    }
}

/// Outcome of a semantic consequence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consequence {
    Holds,
    /// First counter-valuation in enumeration order.
    Fails(Valuation),
}

impl Consequence {
    pub fn holds(&self) -> bool {
        matches!(self, Consequence::Holds)
    }

    pub fn witness(&self) -> Option<&Valuation> {
        match self {
            Consequence::Holds => None,
            Consequence::Fails(v) => Some(v),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Load(usize),
    Not,
    Bin(Connective),
}

/// A formula flattened to postfix form over letter slots.
#[derive(Debug, Clone)]
pub(crate) struct Program {
    ops: Vec<Op>,
}

impl Program {
    pub(crate) fn compile(f: &Formula, slots: &[Letter]) -> Program {
        fn go(f: &Formula, slots: &[Letter], ops: &mut Vec<Op>) {
            match f {
                Formula::Letter(l) => {
                    let slot = slots.binary_search(l).expect("letter has a slot");
                    ops.push(Op::Load(slot));
                }
                Formula::Not(a) => {
                    go(a, slots, ops);
                    ops.push(Op::Not);
                }
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                    go(a, slots, ops);
                    go(b, slots, ops);
                    ops.push(Op::Bin(f.connective().expect("binary node")));
                }
            }
        }
        let mut ops = Vec::new();
        go(f, slots, &mut ops);
        Program { ops }
    }

    /// Tables must cover the program's connectives.
    pub(crate) fn run(&self, m: &Matrix, values: &[usize], stack: &mut Vec<usize>) -> usize {
        let size = m.size();
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Load(s) => stack.push(values[s]),
                Op::Not => {
                    let a = stack.pop().expect("operand");
                    stack.push(m.tables.not.as_ref().expect("not table")[a]);
                }
                Op::Bin(c) => {
                    let b = stack.pop().expect("operand");
                    let a = stack.pop().expect("operand");
                    let t = m.tables.get(c).expect("binary table");
                    stack.push(t[a * size + b]);
                }
            }
        }
        stack.pop().expect("result")
    }
}

/// A premise list and conclusion compiled against a shared letter order.
#[derive(Debug, Clone)]
pub(crate) struct CompiledSequent {
    pub(crate) letters: Vec<Letter>,
    premises: Vec<Program>,
    conclusion: Program,
    fragment: Fragment,
}

impl CompiledSequent {
    pub(crate) fn new(premises: &[Formula], conclusion: &Formula) -> CompiledSequent {
        let mut letters = BTreeSet::new();
        let mut fragment = conclusion.fragment();
        letters.extend(conclusion.letters());
        for p in premises {
            letters.extend(p.letters());
            fragment = fragment.union(p.fragment());
        }
        let letters: Vec<Letter> = letters.into_iter().collect();
        CompiledSequent {
            premises: premises.iter().map(|p| Program::compile(p, &letters)).collect(),
            conclusion: Program::compile(conclusion, &letters),
            letters,
            fragment,
        }
    }

    /// First counter-valuation as raw values, or `None` when consequence
    /// holds. Tables must cover the sequent's fragment.
    pub(crate) fn counter_values(&self, m: &Matrix) -> Option<Vec<usize>> {
        let size = m.size();
        let k = self.letters.len();
        let mut values = vec![0usize; k];
        let mut stack = Vec::with_capacity(16);
        loop {
            let premises_hold = self
                .premises
                .iter()
                .all(|p| m.designated[p.run(m, &values, &mut stack)]);
            if premises_hold && !m.designated[self.conclusion.run(m, &values, &mut stack)] {
                return Some(values);
            }
            // odometer, lowest letter most significant
            let mut pos = k;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                values[pos] += 1;
                if values[pos] < size {
                    break;
                }
                values[pos] = 0;
            }
        }
    }

    pub(crate) fn check(&self, m: &Matrix) -> Result<Consequence, MatrixError> {
        if let Some(c) = self.fragment.connectives().find(|&c| !m.fragment().contains(c)) {
            return Err(MatrixError::MissingTable(c));
        }
        Ok(match self.counter_values(m) {
            None => Consequence::Holds,
            Some(values) => Consequence::Fails(self.letters.iter().copied().zip(values).collect()),
        })
    }
}

/// Whether every valuation designating all `premises` designates
/// `conclusion`. Only letters occurring in the sequent are enumerated, in
/// lexicographic order with the lowest letter most significant.
pub fn consequence(m: &Matrix, premises: &[Formula], conclusion: &Formula) -> Result<Consequence, MatrixError> {
    CompiledSequent::new(premises, conclusion).check(m)
}

pub fn is_valid(m: &Matrix, f: &Formula) -> Result<Consequence, MatrixError> {
    consequence(m, &[], f)
}

fn names(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

fn binary_table(m: usize, op: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..m * m).map(|i| op(i / m, i % m)).collect()
}

/// Two-element Boolean matrix `0 < 1` with `D = {1}`, one table per
/// connective of `fragment`.
pub fn make_two(fragment: Fragment) -> Matrix {
    let mut tables = Tables::default();
    for c in fragment.connectives() {
        *tables.get_mut(c) = Some(match c {
            Connective::Not => vec![1, 0],
            Connective::And => binary_table(2, |a, b| a.min(b)),
            Connective::Or => binary_table(2, |a, b| a.max(b)),
            Connective::Implies => binary_table(2, |a, b| (1 - a).max(b)),
        });
    }
    Matrix::new(names(&["0", "1"]), &[1], tables).expect("two-element matrix is valid")
}

/// Three-element chain `0 < h < 1` with meet and meet complement, `D = {1}`.
/// Defined only for `{and, not}` and `{not}`.
pub fn make_three(fragment: Fragment) -> Result<Matrix> {
    let allowed = Fragment::of(&[Connective::And, Connective::Not]);
    if !fragment.is_subset_of(allowed) || fragment.is_empty() {
        return Err(Error::FragmentMismatch(format!(
            "the three-element matrix is defined for and/not fragments, not `{fragment}`"
        )));
    }
    let mut tables = Tables::default();
    if fragment.contains(Connective::And) {
        tables.and = Some(binary_table(3, |a, b| a.min(b)));
    }
    if fragment.contains(Connective::Not) {
        tables.not = Some(vec![2, 0, 0]);
    }
    Ok(Matrix::new(names(&["0", "h", "1"]), &[2], tables)?)
}

/// The chain `1 < 2 < … < m` as a Heyting algebra, `D = {m}`. Element with
/// index `k` is named `k + 1`.
pub fn make_chain(m: usize, fragment: Fragment) -> Result<Matrix> {
    if m == 0 {
        return Err(Error::Precondition("chain size must be >= 1".into()));
    }
    let top = m - 1;
    let imp = move |a: usize, b: usize| if a <= b { top } else { b };
    let mut tables = Tables::default();
    for c in fragment.connectives() {
        *tables.get_mut(c) = Some(match c {
            Connective::Not => (0..m).map(|a| imp(a, 0)).collect(),
            Connective::And => binary_table(m, |a, b| a.min(b)),
            Connective::Or => binary_table(m, |a, b| a.max(b)),
            Connective::Implies => binary_table(m, imp),
        });
    }
    let labels = (1..=m).map(|i| i.to_string()).collect();
    Ok(Matrix::new(labels, &[top], tables)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{gen_alpha_arrow, parse, Connective::*};

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn frag(cs: &[Connective]) -> Fragment {
        Fragment::of(cs)
    }

    fn val(pairs: &[(u32, usize)]) -> Valuation {
        pairs.iter().map(|&(i, v)| (Letter::p(i), v)).collect()
    }

    fn three() -> Matrix {
        make_three(frag(&[And, Not])).unwrap()
    }

    #[test]
    fn validate_examples() {
        let t = three();
        let designated: Vec<_> = t.designated().collect();
        assert!(validate_matrix(t.names(), &designated, t.tables()).unwrap().is_empty());

        let mut bad = t.tables().clone();
        bad.not = Some(vec![3, 0, 0]);
        assert!(matches!(
            validate_matrix(t.names(), &designated, &bad),
            Err(MatrixError::EntryOutOfRange { connective: Not, value: 3, .. })
        ));

        let mut short = t.tables().clone();
        short.and = Some(vec![0; 8]);
        assert!(matches!(
            validate_matrix(t.names(), &designated, &short),
            Err(MatrixError::TableSize { expected: 9, found: 8, .. })
        ));

        assert!(matches!(
            validate_matrix(t.names(), &[5], t.tables()),
            Err(MatrixError::DesignatedOutOfRange { index: 5, .. })
        ));
        assert!(matches!(
            validate_matrix(&names(&["a", "a"]), &[], &Tables::default()),
            Err(MatrixError::DuplicateName(_))
        ));
        assert_eq!(validate_matrix(&[], &[], &Tables::default()), Err(MatrixError::Empty));
    }

    #[test]
    fn degenerate_designation_warns() {
        let m = Matrix::new(names(&["a", "b"]), &[], Tables::default()).unwrap();
        assert_eq!(m.warnings(), vec![MatrixWarning::NothingDesignated]);
        let m = Matrix::new(names(&["a", "b"]), &[0, 1], Tables::default()).unwrap();
        assert_eq!(m.warnings(), vec![MatrixWarning::EverythingDesignated]);
    }

    #[test]
    fn two_tables() {
        let m = make_two(frag(&[And]));
        assert_eq!(m.apply_binary(And, 1, 0), Some(0));
        let m = make_two(frag(&[And, Or]));
        assert_eq!(m.apply_binary(Or, 0, 1), Some(1));
        let m = make_two(frag(&[And, Not]));
        assert_eq!(m.apply_unary(Not, 0), Some(1));
        assert_eq!(make_two(Fragment::EMPTY).fragment(), Fragment::EMPTY);
    }

    #[test]
    fn three_tables() {
        let m = three();
        assert_eq!(m.apply_unary(Not, 1), Some(0));
        assert_eq!(m.apply_binary(And, 1, 2), Some(1));
        assert_eq!(evaluate(&m, &val(&[(1, 1)]), &f("~~p1")).unwrap(), 2);
        assert!(make_three(frag(&[Or])).is_err());
        assert!(make_three(frag(&[And, Implies])).is_err());
        assert!(make_three(Fragment::EMPTY).is_err());
        assert!(make_three(frag(&[Not])).is_ok());
    }

    #[test]
    fn chain_tables() {
        let c3 = make_chain(3, frag(&[Implies])).unwrap();
        // elements named 1..3 live at indices 0..2
        assert_eq!(c3.apply_binary(Implies, 2, 0), Some(0));
        assert_eq!(c3.apply_binary(Implies, 1, 1), Some(2));
        let c4 = make_chain(4, frag(&[Implies, And])).unwrap();
        assert_eq!(c4.apply_binary(And, 1, 3), Some(1));
        let c3n = make_chain(3, frag(&[Not])).unwrap();
        assert_eq!(c3n.tables().not.as_ref().unwrap(), &vec![2, 0, 0]);
        assert!(make_chain(0, frag(&[Implies])).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let c3 = make_chain(3, frag(&[Implies])).unwrap();
        let v = val(&[(1, 0), (2, 1), (3, 2)]);
        assert_eq!(c3.name(evaluate(&c3, &v, &gen_alpha_arrow(2).unwrap()).unwrap()), "2");

        let two = make_two(frag(&[And, Or]));
        assert_eq!(evaluate(&two, &val(&[(1, 0), (2, 1)]), &f("p1 | p1 & p2")).unwrap(), 0);
    }

    #[test]
    fn evaluate_errors() {
        let two = make_two(frag(&[And]));
        assert_eq!(
            evaluate(&two, &val(&[(1, 0)]), &f("p1 & p2")),
            Err(MatrixError::Unassigned(Letter::p(2)))
        );
        assert_eq!(
            evaluate(&two, &val(&[(1, 0)]), &f("~p1")),
            Err(MatrixError::MissingTable(Not))
        );
        assert!(matches!(
            evaluate(&two, &val(&[(1, 7)]), &f("p1")),
            Err(MatrixError::ValueOutOfRange { .. })
        ));
    }

    #[test]
    fn consequence_examples() {
        let t = three();
        assert_eq!(
            consequence(&t, &[f("~~p1")], &f("p1")).unwrap(),
            Consequence::Fails(val(&[(1, 1)]))
        );
        assert!(consequence(&t, &[f("p1"), f("~p1")], &f("p2")).unwrap().holds());
        let two = make_two(frag(&[And, Or]));
        assert_eq!(
            consequence(&two, &[f("p1 | p2")], &f("p1")).unwrap(),
            Consequence::Fails(val(&[(1, 0), (2, 1)]))
        );
    }

    #[test]
    fn validity_examples() {
        let c3 = make_chain(3, frag(&[Implies])).unwrap();
        // first counter-valuation in order is p1=1, p2=2, p3=3
        assert_eq!(
            is_valid(&c3, &gen_alpha_arrow(2).unwrap()).unwrap(),
            Consequence::Fails(val(&[(1, 0), (2, 1), (3, 2)]))
        );
        let peirce = f("((p1 -> p2) -> p1) -> p1");
        assert!(is_valid(&make_two(Fragment::FULL), &peirce).unwrap().holds());
        assert!(!is_valid(&c3, &peirce).unwrap().holds());
    }

    #[test]
    fn valuation_render_roundtrip() {
        let t = three();
        let v = val(&[(1, 1), (3, 2)]);
        assert_eq!(v.render(&t), "p1=h,p3=1");
        assert_eq!(Valuation::parse("p1=h, p3=1", &t).unwrap(), v);
        assert!(Valuation::parse("p1=x", &t).is_err());
    }

    #[test]
    fn permutation_preserves_consequence() {
        let t = three();
        let perm = [2, 0, 1];
        let p = t.permuted(&perm);
        let cases = [("~~p1", "p1"), ("p1 & ~p2", "~p2"), ("p1", "~~p1")];
        for (a, b) in cases {
            assert_eq!(
                consequence(&t, &[f(a)], &f(b)).unwrap().holds(),
                consequence(&p, &[f(a)], &f(b)).unwrap().holds()
            );
        }
        assert_eq!(p.name(perm[1]), "h");
    }
}
