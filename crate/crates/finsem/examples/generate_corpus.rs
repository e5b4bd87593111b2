//! Writes the standard oracle-labelled corpus of each fragment to
//! `data/corpus/`, or prints one fragment's corpus.
//!
//! ```bash
//! cargo run -p finsem --example generate_corpus            # all files
//! cargo run -p finsem --example generate_corpus -- and,not # stdout
//! ```

use std::path::Path;

use finsem::search::Corpus;
use finsem::{Fragment, Oracle};

const FRAGMENTS: [&str; 8] = ["empty", "and", "or", "and,or", "not", "and,not", "implies", "or,not"];

fn main() -> finsem::Result<()> {
    let oracle = Oracle::default();
    if let Some(spec) = std::env::args().nth(1) {
        print!("{}", Corpus::standard(spec.parse()?, &oracle)?.render());
        return Ok(());
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/corpus");
    std::fs::create_dir_all(&dir).map_err(|e| finsem::Error::Format(e.to_string()))?;
    for spec in FRAGMENTS {
        let fragment: Fragment = spec.parse()?;
        let corpus = Corpus::standard(fragment, &oracle)?;
        let name = spec.replace(',', "_");
        let text = format!("# standard corpus for {spec}, labels from the oracle\n{}", corpus.render());
        let path = dir.join(format!("{name}.corpus"));
        std::fs::write(&path, text).map_err(|e| finsem::Error::Format(e.to_string()))?;
        println!("{:<10} {:>3} entries -> {}", spec, corpus.len(), path.display());
    }
    Ok(())
}
