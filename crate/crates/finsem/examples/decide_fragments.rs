//! Deciding sequents in the fragments that have a finite semantics, with
//! the syntactic procedures and the oracle alongside.

use finsem::decide::{check_supported, classical_consequence, decide, decide_conj_disj_syntactic};
use finsem::{prove_ipc, Sequent};

fn main() -> finsem::Result<()> {
    let sequents = [
        "p1 & p2 |- p2",
        "p1 | p2 |- p2 | p1",
        "p1 & (p2 | p3) |- p1 & p2 | p1 & p3",
        "p1 | p2 |- p1",
        "~~p1 |- p1",
        "~~~p1 |- ~p1",
        "~p1 |- ~(p1 & p2)",
        "|- ~(p1 & ~p1)",
    ];
    for text in sequents {
        let s: Sequent = text.parse()?;
        let v = decide(&s)?;
        let oracle = prove_ipc(&s)?;
        assert_eq!(v.outcome, oracle.outcome);
        let witness = v.witness_text().map(|w| format!("  [{w}]")).unwrap_or_default();
        println!("{text:<38} {:<14} {}{witness}", v.outcome.as_str(), v.method);
    }

    let s: Sequent = "p1 & (p2 | p3) |- p1 & p2 | p3".parse()?;
    println!("\nclause check: {}", decide_conj_disj_syntactic(&s)?.outcome);

    // classical and intuitionistic agree on negated conclusions
    let s: Sequent = "~~p1 & ~p2 |- ~(p2 & ~p1)".parse()?;
    println!(
        "{s}: classical {}, intuitionistic {}",
        classical_consequence(&s)?.outcome,
        prove_ipc(&s)?.outcome
    );

    for text in ["|- p1 -> p1", "p1 |- ~p1 | p2"] {
        let s: Sequent = text.parse()?;
        if let Err(e) = check_supported(s.fragment()) {
            println!("{text}: {e}");
        }
    }
    Ok(())
}
