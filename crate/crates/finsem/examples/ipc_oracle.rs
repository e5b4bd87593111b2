//! The intuitionistic prover on classical principles, their double
//! negations, and the disjunction property.

use finsem::oracle::{check_disjunction_property, Oracle};
use finsem::{gen_alpha_arrow, gen_alpha_orneg, parse};

fn main() -> finsem::Result<()> {
    let oracle = Oracle::default();
    for text in [
        "p1 | ~p1",
        "~~(p1 | ~p1)",
        "~~p1 -> p1",
        "~~(~~p1 -> p1)",
        "((p1 -> p2) -> p1) -> p1",
        "(p1 -> p2) | (p2 -> p1)",
        "(p1 -> p2) -> ~p2 -> ~p1",
    ] {
        let verdict = if oracle.is_theorem(&parse(text)?)? { "theorem" } else { "not a theorem" };
        println!("{text:<28} {verdict}");
    }

    for n in 1..=3 {
        println!(
            "alpha_{n}: arrow {}, orneg {}",
            oracle.is_theorem(&gen_alpha_arrow(n)?)?,
            oracle.is_theorem(&gen_alpha_orneg(n)?)?
        );
    }

    let d = parse("(p1 -> p1) | ~~(p2 | ~p2) ")?;
    println!("\n{d}: derivable disjunct(s) = {}", check_disjunction_property(&d)?.describe());

    let tiny = Oracle::with_budget(10);
    println!("budget 10 on alpha_3: {:?}", tiny.is_theorem(&gen_alpha_arrow(3)?).err());
    Ok(())
}
