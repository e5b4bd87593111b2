//! Finite matrix semantics for fragments of intuitionistic propositional
//! logic.
//!
//! Fragments without `→` that avoid the pair `{∨, ¬}` are decided by the
//! two- and three-element matrices. Fragments with `→`, or with both `∨`
//! and `¬`, have no characteristic finite matrix: [`refute`] turns any
//! candidate matrix into a concrete counterexample, and [`search`] checks
//! small sizes exhaustively against an oracle-labelled corpus.
//!
//! ```
//! use finsem::{decide, Sequent};
//!
//! let s: Sequent = "~~p1 |- p1".parse().unwrap();
//! let v = decide(&s).unwrap();
//! assert!(!v.is_derivable());
//! assert_eq!(v.witness_text().as_deref(), Some("p1=h"));
//! ```

pub mod cli;
pub mod decide;
pub mod error;
pub mod formula;
pub mod matrix;
pub mod oracle;
pub mod random;
pub mod refute;
pub mod search;
pub mod sequent;

pub use decide::{
    check_supported, classical_consequence, decide, decide_conj_disj_syntactic, decide_conj_syntactic,
};
pub use error::{Error, MatrixError, ParseError, Result};
pub use formula::{
    dotvee, gen_alpha_arrow, gen_alpha_orneg, parse, print, print_full, substitute, to_cnf, Connective,
    Formula, Fragment, Letter,
};
pub use matrix::{
    congruences, consequence, evaluate, is_subalgebra, is_valid, make_chain, make_three, make_two,
    parse_matrix, render_matrix, Congruence, Consequence, Matrix, Tables, Valuation,
};
pub use oracle::{check_disjunction_property, prove_ipc, DisjunctionReport, Oracle};
pub use refute::{chain_countermodel_report, refute_matrix, Mode, RefutationReport, Variant};
pub use search::{canonical_form, enumerate_matrices, search, test_candidate, Corpus, SearchOutcome};
pub use sequent::{Countermodel, Method, Outcome, Sequent, Verdict};
