//! Refuting candidate matrices for fragments with `->`, or with both `|`
//! and `~`. Every report names either a non-theorem the matrix validates
//! or a theorem it rejects, and replays.

use finsem::matrix::{make_chain, parse_matrix};
use finsem::refute::{refute_matrix, Variant};
use finsem::{Fragment, Oracle};

fn main() -> finsem::Result<()> {
    let imp: Fragment = "implies".parse()?;
    let candidates = [
        ("2-chain", make_chain(2, imp)?, Variant::Arrow),
        ("3-chain", make_chain(3, imp)?, Variant::Arrow),
        (
            "constant-false implication",
            parse_matrix(include_str!("../data/matrices/broken_imp.matrix"))?,
            Variant::Arrow,
        ),
        (
            "Boolean",
            parse_matrix(include_str!("../data/matrices/boolean.matrix"))?,
            Variant::Orneg,
        ),
        (
            "strong Kleene",
            parse_matrix(include_str!("../data/matrices/kleene.matrix"))?,
            Variant::Orneg,
        ),
    ];
    for (label, m, variant) in candidates {
        let report = refute_matrix(&m, variant)?;
        report.replay(&Oracle::default())?;
        println!("== {label}\n{}", report.render_text());
    }
    Ok(())
}
