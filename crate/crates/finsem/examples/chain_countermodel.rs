//! The arrow formulas are not intuitionistic theorems: in the (n+1)-chain,
//! `p_i ↦ i` sends `alpha_n` to `n`, one below the top.
//!
//! ```bash
//! cargo run -p finsem --example chain_countermodel
//! ```

use finsem::refute::chain_countermodel_report;

fn main() -> finsem::Result<()> {
    println!("{:>2}  {:>5}  {:>5}  valuation", "n", "chain", "value");
    for n in 1..=6 {
        let c = chain_countermodel_report(n)?;
        println!(
            "{n:>2}  {:>5}  {:>5}  {}",
            c.matrix.size(),
            c.value_name(),
            c.valuation.render(&c.matrix)
        );
    }
    Ok(())
}
