//! Congruences and subalgebras of the three-element matrix.

use finsem::matrix::{congruences, is_subalgebra, make_three};
use finsem::Fragment;

fn main() -> finsem::Result<()> {
    let three = make_three("and,not".parse::<Fragment>()?)?;
    for c in congruences(&three)? {
        println!("{}", c.render(&three));
    }
    for subset in [vec![0, 2], vec![1, 2], vec![0, 1]] {
        let names: Vec<&str> = subset.iter().map(|&a| three.name(a)).collect();
        println!("{{{}}} subalgebra: {}", names.join(", "), is_subalgebra(&three, &subset)?);
    }
    Ok(())
}
