//! Parsing, printing and the pigeonhole formulas.
//!
//! ```bash
//! cargo run -p finsem --example parse_and_print
//! ```

use finsem::formula::{gen_alpha_arrow, gen_alpha_orneg, parse, print, print_full, substitute, to_cnf};
use finsem::Letter;

fn main() -> finsem::Result<()> {
    let f = parse("¬¬p1 ∧ (p2 → p3) ∨ p4")?;
    println!("pretty:   {}", print(&f));
    println!("explicit: {}", print_full(&f));
    println!("depth {}, size {}, fragment {}", f.depth(), f.size(), f.fragment());

    match parse("p1 & p01") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let a2 = gen_alpha_arrow(2)?;
    println!("\nalpha_2 (arrow) = {}", print(&a2));
    println!("                = {}", print_full(&a2));
    println!("alpha_2 (orneg) = {}", gen_alpha_orneg(2)?);

    // identifying p3 with p2 plants p2 -> p2 inside the fold
    let beta = substitute(&a2, Letter::p(3), Letter::p(2));
    println!("alpha_2[p3 := p2] = {beta}");

    let cnf = to_cnf(&parse("p1 & (p2 | p3 & p4)")?)?;
    println!("\nclauses of p1 & (p2 | p3 & p4): {cnf}");
    Ok(())
}
