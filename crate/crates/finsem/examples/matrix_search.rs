//! Exhaustive search for small matrices agreeing with an oracle-labelled
//! corpus. `{and}` recovers the two-element matrix, `{and,not}` the
//! three-element one, and `{implies}` has no survivors.
//!
//! ```bash
//! cargo run --release -p finsem --example matrix_search
//! ```

use finsem::matrix::{make_three, make_two, render_matrix};
use finsem::search::{canonical_form, search, Corpus};
use finsem::{Fragment, Oracle};

fn main() -> finsem::Result<()> {
    let oracle = Oracle::default();
    for (spec, max_size) in [("and", 2), ("and,not", 3), ("implies", 3)] {
        let fragment: Fragment = spec.parse()?;
        let corpus = Corpus::standard(fragment, &oracle)?;
        let outcome = search(fragment, max_size, &corpus)?;
        print!("{}", outcome.render_table());
        for m in &outcome.survivors {
            println!("survivor:\n{}", render_matrix(m));
        }
        let expected = match spec {
            "and" => Some(make_two(fragment)),
            "and,not" => Some(make_three(fragment)?),
            _ => None,
        };
        if let Some(m) = expected {
            println!("known matrix found: {}\n", outcome.contains_structure(&canonical_form(&m)));
        }
    }
    Ok(())
}
