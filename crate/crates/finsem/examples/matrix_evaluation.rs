//! Loading a matrix file, evaluating formulas and checking consequence.
//!
//! ```bash
//! cargo run -p finsem --example matrix_evaluation
//! ```

use finsem::matrix::{consequence, evaluate, is_valid, make_chain, parse_matrix, Valuation};
use finsem::{parse, Fragment};

const THREE: &str = include_str!("../data/matrices/three.matrix");

fn main() -> finsem::Result<()> {
    let three = parse_matrix(THREE)?;
    println!("elements {:?}, designated {:?}", three.names(), three.designated().collect::<Vec<_>>());

    let v = Valuation::parse("p1=h,p2=1", &three)?;
    for text in ["~p1", "~~p1", "p1 & ~p1", "~~p1 & p2"] {
        let value = evaluate(&three, &v, &parse(text)?)?;
        println!("  {text:<10} = {}", three.name(value));
    }

    let premises = [parse("~~p1")?];
    match consequence(&three, &premises, &parse("p1")?)? {
        finsem::Consequence::Holds => println!("~~p1 |= p1"),
        finsem::Consequence::Fails(w) => println!("~~p1 does not entail p1: {}", w.render(&three)),
    }

    let peirce = parse("((p1 -> p2) -> p1) -> p1")?;
    for m in [2, 3] {
        let chain = make_chain(m, Fragment::FULL)?;
        let verdict = match is_valid(&chain, &peirce)? {
            finsem::Consequence::Holds => "valid".to_string(),
            finsem::Consequence::Fails(w) => format!("fails at {}", w.render(&chain)),
        };
        println!("Peirce's law in the {m}-chain: {verdict}");
    }
    Ok(())
}
