//! Refutation of candidate finite semantics for fragments containing `→`,
//! or containing both `∨` and `¬`.
//!
//! For an `n`-element matrix `M` the pipeline evaluates the pigeonhole
//! formula `α_n` (over `n + 1` letters). Exactly one of two things happens:
//!
//! * `α_n` is valid in `M`. Since `α_n` is not intuitionistically
//!   derivable, `M` validates a non-theorem (completeness violation). The
//!   report carries independent evidence of non-derivability: the
//!   `(n+1)`-chain countermodel for the arrow family, or per-disjunct
//!   classical falsifications for the or-neg family.
//! * Some valuation `w` refutes `α_n`. Two letters `p_i`, `p_j` share a
//!   value under `w`; substituting `p_j` for `p_i` yields a theorem `β` with
//!   the same value as `α_n`, so `M` refutes a theorem (soundness violation).

use std::fmt;
use std::str::FromStr;

use crate::decide::classical_consequence;
use crate::error::{Error, Result};
use crate::formula::{
    alpha_pairs, gen_alpha_arrow, gen_alpha_orneg, orneg_disjunct, substitute, Connective,
    Formula, Fragment, Letter,
};
use crate::matrix::{evaluate, is_valid, make_chain, make_two, Consequence, Matrix, Valuation};
use crate::oracle::Oracle;
use crate::sequent::{Outcome, Sequent};

/// Largest matrix size for which oracle confirmation cannot be skipped.
pub const MANDATORY_ORACLE_SIZE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `∨̇`-fold of `p_j → p_i`.
    Arrow,
    /// `∨`-fold of `¬¬(¬p_i ∨ p_j)`.
    Orneg,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Arrow => "arrow",
            Variant::Orneg => "orneg",
        }
    }

    pub fn alpha(self, n: u32) -> Result<Formula> {
        match self {
            Variant::Arrow => gen_alpha_arrow(n),
            Variant::Orneg => gen_alpha_orneg(n),
        }
    }

    /// Connectives a matrix needs for this variant.
    pub fn required(self) -> Fragment {
        match self {
            Variant::Arrow => Fragment::of(&[Connective::Implies]),
            Variant::Orneg => Fragment::of(&[Connective::Or, Connective::Not]),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "arrow" => Ok(Variant::Arrow),
            "orneg" => Ok(Variant::Orneg),
            other => Err(Error::Format(format!("unknown variant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// The matrix validates `α_n`, which is not derivable.
    CompletenessViolation,
    /// The matrix refutes `β`, which is derivable.
    SoundnessViolation,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::CompletenessViolation => "completeness-violation",
            Mode::SoundnessViolation => "soundness-violation",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The `(n+1)`-element chain with `p_i ↦ i`, under which `α_n` takes the
/// undesignated value `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCountermodel {
    pub matrix: Matrix,
    pub valuation: Valuation,
    /// Element index of `α_n`'s value.
    pub value: usize,
}

impl ChainCountermodel {
    pub fn value_name(&self) -> &str {
        self.matrix.name(self.value)
    }
}

pub fn chain_countermodel_report(n: u32) -> Result<ChainCountermodel> {
    let alpha = gen_alpha_arrow(n)?;
    let size = n as usize + 1;
    let matrix = make_chain(size, Fragment::of(&[Connective::Implies]))?;
    let valuation: Valuation = (1..=n + 1).map(|i| (Letter::p(i), i as usize - 1)).collect();
    let value = evaluate(&matrix, &valuation, &alpha)?;
    if matrix.name(value) != n.to_string() {
        return Err(Error::Internal(format!(
            "alpha_{n} evaluates to {} in the {size}-chain, expected {n}",
            matrix.name(value)
        )));
    }
    Ok(ChainCountermodel {
        matrix,
        valuation,
        value,
    })
}

/// A disjunct of the or-neg family with a Boolean valuation refuting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalFalsification {
    pub disjunct: Formula,
    pub valuation: Valuation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationReport {
    pub variant: Variant,
    /// The refuted matrix.
    pub matrix: Matrix,
    pub n: usize,
    pub alpha: Formula,
    pub mode: Mode,
    /// `α_n` for a completeness violation, `β` for a soundness violation.
    pub witness_formula: Formula,
    pub witness_valuation: Option<Valuation>,
    pub identified_pair: Option<(u32, u32)>,
    pub chain_countermodel: Option<ChainCountermodel>,
    pub classical_falsifications: Option<Vec<ClassicalFalsification>>,
    /// Oracle verdict on `witness_formula`; `None` when skipped.
    pub oracle_confirmation: Option<Outcome>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RefuteOptions {
    /// Skip the oracle for matrices larger than [`MANDATORY_ORACLE_SIZE`].
    pub skip_oracle: bool,
    pub oracle: Oracle,
}

pub fn refute_matrix(m: &Matrix, variant: Variant) -> Result<RefutationReport> {
    refute_matrix_with(m, variant, &RefuteOptions::default())
}

pub fn refute_matrix_with(m: &Matrix, variant: Variant, opts: &RefuteOptions) -> Result<RefutationReport> {
    if !variant.required().is_subset_of(m.fragment()) {
        return Err(Error::FragmentMismatch(format!(
            "{variant} refutation needs a matrix with {}, matrix has `{}`",
            variant.required(),
            m.fragment()
        )));
    }
    let n = m.size();
    let alpha = variant.alpha(n as u32)?;
    let use_oracle = n <= MANDATORY_ORACLE_SIZE || !opts.skip_oracle;

    match is_valid(m, &alpha)? {
        Consequence::Holds => {
            let oracle_confirmation = if use_oracle {
                let derivable = opts.oracle.is_theorem(&alpha)?;
                if derivable {
                    return Err(Error::Internal(format!("oracle derives alpha_{n}")));
                }
                Some(Outcome::NotDerivable)
            } else {
                None
            };
            let (chain_countermodel, classical_falsifications) = match variant {
                Variant::Arrow => (Some(chain_countermodel_report(n as u32)?), None),
                Variant::Orneg => (None, Some(classical_falsifications(n as u32)?)),
            };
            Ok(RefutationReport {
                variant,
                matrix: m.clone(),
                n,
                witness_formula: alpha.clone(),
                alpha,
                mode: Mode::CompletenessViolation,
                witness_valuation: None,
                identified_pair: None,
                chain_countermodel,
                classical_falsifications,
                oracle_confirmation,
            })
        }
        Consequence::Fails(w) => {
            let pair = equal_pair(&w, n as u32).ok_or_else(|| {
                Error::Internal(format!(
                    "no two of the {} letters share a value among {n} elements",
                    n + 1
                ))
            })?;
            let beta = substitute(&alpha, Letter::p(pair.0), Letter::p(pair.1));
            let value = evaluate(m, &w, &beta)?;
            if m.is_designated(value) || value != evaluate(m, &w, &alpha)? {
                return Err(Error::Internal(
                    "substitution instance does not share the refuted value".into(),
                ));
            }
            let oracle_confirmation = if use_oracle {
                if !opts.oracle.is_theorem(&beta)? {
                    return Err(Error::Internal(format!("oracle rejects beta `{beta}`")));
                }
                Some(Outcome::Derivable)
            } else {
                None
            };
            Ok(RefutationReport {
                variant,
                matrix: m.clone(),
                n,
                alpha,
                mode: Mode::SoundnessViolation,
                witness_formula: beta,
                witness_valuation: Some(w),
                identified_pair: Some(pair),
                chain_countermodel: None,
                classical_falsifications: None,
                oracle_confirmation,
            })
        }
    }
}

/// Lexicographically least `(i, j)`, `i < j ≤ n+1`, with `w(p_i) = w(p_j)`.
pub fn equal_pair(w: &Valuation, n: u32) -> Option<(u32, u32)> {
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            let (a, b) = (w.get(Letter::p(i)), w.get(Letter::p(j)));
            if a.is_some() && a == b {
                return Some((i, j));
            }
        }
    }
    None
}

fn classical_falsifications(n: u32) -> Result<Vec<ClassicalFalsification>> {
    let mut out = Vec::new();
    for (i, j) in alpha_pairs(n) {
        let disjunct = orneg_disjunct(i, j);
        let verdict = classical_consequence(&Sequent::theorem(disjunct.clone()))?;
        let Some(w) = verdict.witness else {
            return Err(Error::Internal(format!("`{disjunct}` is classically valid")));
        };
        out.push(ClassicalFalsification {
            disjunct,
            valuation: w.valuation,
        });
    }
    Ok(out)
}

fn fail(msg: String) -> Result<()> {
    Err(Error::Internal(format!("report does not replay: {msg}")))
}

impl RefutationReport {
    /// Re-checks every piece of evidence through evaluation and, when the
    /// report carries an oracle verdict, through the prover.
    pub fn replay(&self, oracle: &Oracle) -> Result<()> {
        let m = &self.matrix;
        if self.alpha != self.variant.alpha(self.n as u32)? || self.n != m.size() {
            return fail("alpha does not match the matrix size".into());
        }
        if let Some(expected) = self.oracle_confirmation {
            let got = Outcome::from_bool(oracle.is_theorem(&self.witness_formula)?);
            if got != expected {
                return fail(format!("oracle says {got}, report says {expected}"));
            }
        }
        match self.mode {
            Mode::CompletenessViolation => {
                if !is_valid(m, &self.alpha)?.holds() {
                    return fail("alpha is not valid in the matrix".into());
                }
                if self.oracle_confirmation == Some(Outcome::Derivable) {
                    return fail("alpha marked derivable".into());
                }
                match self.variant {
                    Variant::Arrow => {
                        let c = self
                            .chain_countermodel
                            .as_ref()
                            .ok_or_else(|| Error::Internal("missing chain countermodel".into()))?;
                        let v = evaluate(&c.matrix, &c.valuation, &self.alpha)?;
                        if v != c.value || c.matrix.is_designated(v) {
                            return fail("chain countermodel does not refute alpha".into());
                        }
                    }
                    Variant::Orneg => {
                        let fs = self.classical_falsifications.as_ref().ok_or_else(|| {
                            Error::Internal("missing classical falsifications".into())
                        })?;
                        let two = make_two(Fragment::FULL);
                        if fs.len() != alpha_pairs(self.n as u32).len() {
                            return fail("wrong number of falsified disjuncts".into());
                        }
                        for f in fs {
                            if two.is_designated(evaluate(&two, &f.valuation, &f.disjunct)?) {
                                return fail(format!("`{}` is not falsified", f.disjunct));
                            }
                        }
                    }
                }
            }
            Mode::SoundnessViolation => {
                let w = self
                    .witness_valuation
                    .as_ref()
                    .ok_or_else(|| Error::Internal("missing witness valuation".into()))?;
                let (i, j) = self
                    .identified_pair
                    .ok_or_else(|| Error::Internal("missing letter pair".into()))?;
                if w.get(Letter::p(i)) != w.get(Letter::p(j)) {
                    return fail("identified letters differ under the witness".into());
                }
                if self.witness_formula != substitute(&self.alpha, Letter::p(i), Letter::p(j)) {
                    return fail("witness formula is not the substitution instance".into());
                }
                let beta_value = evaluate(m, w, &self.witness_formula)?;
                if m.is_designated(beta_value) || beta_value != evaluate(m, w, &self.alpha)? {
                    return fail("witness valuation does not refute beta".into());
                }
                if self.oracle_confirmation == Some(Outcome::NotDerivable) {
                    return fail("beta marked not derivable".into());
                }
            }
        }
        Ok(())
    }

    /// `key: value` lines, one fact per line.
    pub fn porcelain(&self) -> String {
        let m = &self.matrix;
        let mut lines = vec![
            format!("variant: {}", self.variant),
            format!("n: {}", self.n),
            format!("mode: {}", self.mode),
            format!("alpha: {}", self.alpha),
            format!("witness_formula: {}", self.witness_formula),
        ];
        match &self.witness_valuation {
            Some(w) => {
                lines.push(format!("witness_valuation: {}", w.render(m)));
                if let Ok(v) = evaluate(m, w, &self.witness_formula) {
                    lines.push(format!("witness_value: {}", m.name(v)));
                }
            }
            None => lines.push("witness_valuation: none".into()),
        }
        match self.identified_pair {
            Some((i, j)) => lines.push(format!("identified_pair: p{i},p{j}")),
            None => lines.push("identified_pair: none".into()),
        }
        if let Some(c) = &self.chain_countermodel {
            lines.push(format!(
                "chain_countermodel: size={} valuation={} value={}",
                c.matrix.size(),
                c.valuation.render(&c.matrix),
                c.value_name()
            ));
        }
        if let Some(fs) = &self.classical_falsifications {
            let two = make_two(Fragment::FULL);
            for f in fs {
                lines.push(format!(
                    "classical_falsification: {} at {}",
                    f.disjunct,
                    f.valuation.render(&two)
                ));
            }
        }
        lines.push(format!(
            "oracle: {}",
            self.oracle_confirmation.map_or("skipped", Outcome::as_str)
        ));
        lines.join("\n") + "\n"
    }

    /// Human-readable summary.
    pub fn render_text(&self) -> String {
        let m = &self.matrix;
        let mut out = format!(
            "Refuting a {}-element matrix ({} family)\n  alpha_{} = {}\n",
            self.n, self.variant, self.n, self.alpha
        );
        match self.mode {
            Mode::CompletenessViolation => {
                out.push_str("  The matrix validates alpha, which is not intuitionistically derivable.\n");
                if let Some(c) = &self.chain_countermodel {
                    out.push_str(&format!(
                        "  In the {}-chain under {}, alpha takes the undesignated value {}.\n",
                        c.matrix.size(),
                        c.valuation.render(&c.matrix),
                        c.value_name()
                    ));
                }
                if let Some(fs) = &self.classical_falsifications {
                    let two = make_two(Fragment::FULL);
                    out.push_str("  Every disjunct fails classically:\n");
                    for f in fs {
                        out.push_str(&format!("    {} at {}\n", f.disjunct, f.valuation.render(&two)));
                    }
                }
            }
            Mode::SoundnessViolation => {
                let w = self.witness_valuation.as_ref().expect("soundness reports carry a valuation");
                let (i, j) = self.identified_pair.expect("soundness reports carry a pair");
                out.push_str(&format!(
                    "  Under {} alpha is undesignated and p{i}, p{j} share a value.\n  \
                     beta = alpha[p{i} := p{j}] = {}\n  \
                     beta is a theorem but the matrix gives it the undesignated value {}.\n",
                    w.render(m),
                    self.witness_formula,
                    evaluate(m, w, &self.witness_formula).map_or("?".into(), |v| m.name(v).to_string())
                ));
            }
        }
        out.push_str(&format!(
            "  Verdict: {}; oracle: {}\n",
            self.mode,
            self.oracle_confirmation.map_or("skipped", Outcome::as_str)
        ));
        out
    }
}
