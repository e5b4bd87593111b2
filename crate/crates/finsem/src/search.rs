//! Exhaustive search for small matrices that agree with an oracle-labelled
//! corpus of sequents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formula::{alpha_pairs, substitute, Connective, Fragment, Letter};
use crate::matrix::{CompiledSequent, Matrix, Tables};
use crate::oracle::Oracle;
use crate::random::Shape;
use crate::refute::Variant;
use crate::sequent::{Outcome, Sequent};

/// Default bound on the raw candidate space of one size.
pub const DEFAULT_MAX_RAW: u128 = 100_000_000;

const STANDARD_CORPUS_SIZE: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub sequent: Sequent,
    pub expected: Outcome,
    pub note: String,
}

/// Labelled sequents. File form, one per line:
/// `<sequent> :: derivable|not-derivable :: <note>`, `#` comments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// Parses without checking labels.
    pub fn parse(text: &str) -> Result<Corpus> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.splitn(3, "::").collect();
            if parts.len() < 2 {
                return Err(Error::Format(format!(
                    "corpus line {}: expected `<sequent> :: <label> :: <note>`",
                    i + 1
                )));
            }
            let sequent = Sequent::parse(parts[0].trim())
                .map_err(|e| Error::Format(format!("corpus line {}: {e}", i + 1)))?;
            let expected = parts[1]
                .parse()
                .map_err(|e| Error::Format(format!("corpus line {}: {e}", i + 1)))?;
            let note = parts.get(2).map_or("", |s| s.trim()).to_string();
            entries.push(CorpusEntry {
                sequent,
                expected,
                note,
            });
        }
        Ok(Corpus { entries })
    }

    /// Parses and checks every label against the oracle.
    pub fn load(text: &str, oracle: &Oracle) -> Result<Corpus> {
        let corpus = Corpus::parse(text)?;
        corpus.validate(oracle)?;
        Ok(corpus)
    }

    pub fn validate(&self, oracle: &Oracle) -> Result<()> {
        for (i, e) in self.entries.iter().enumerate() {
            let got = Outcome::from_bool(oracle.derivable(&e.sequent)?);
            if got != e.expected {
                return Err(Error::Format(format!(
                    "corpus entry {i} `{}` is labelled {} but the oracle says {got}",
                    e.sequent, e.expected
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            writeln!(out, "{} :: {} :: {}", e.sequent, e.expected, e.note).unwrap();
        }
        out
    }

    pub fn fragment(&self) -> Fragment {
        self.entries
            .iter()
            .fold(Fragment::EMPTY, |acc, e| acc.union(e.sequent.fragment()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds a sequent labelled by the oracle, skipping duplicates.
    pub fn push_labelled(&mut self, sequent: Sequent, note: impl Into<String>, oracle: &Oracle) -> Result<bool> {
        if self.entries.iter().any(|e| e.sequent == sequent) {
            return Ok(false);
        }
        let expected = Outcome::from_bool(oracle.derivable(&sequent)?);
        self.entries.push(CorpusEntry {
            sequent,
            expected,
            note: note.into(),
        });
        Ok(true)
    }

    /// The shipped corpus for `fragment`: structural sequents for each
    /// connective present, the pigeonhole families (both `α_n` and all
    /// their `β` instances for `n ≤ 3`) when the fragment lacks a finite
    /// semantics, and seeded random sequents. Every label comes from the
    /// oracle.
    pub fn standard(fragment: Fragment, oracle: &Oracle) -> Result<Corpus> {
        let mut corpus = Corpus::default();
        for (text, note) in structural_sequents() {
            let s = Sequent::parse(text)?;
            if s.fragment().is_subset_of(fragment) {
                corpus.push_labelled(s, note, oracle)?;
            }
        }
        for variant in [Variant::Arrow, Variant::Orneg] {
            if !variant.required().is_subset_of(fragment) {
                continue;
            }
            for n in 1..=3u32 {
                let alpha = variant.alpha(n)?;
                for (i, j) in alpha_pairs(n) {
                    let beta = substitute(&alpha, Letter::p(i), Letter::p(j));
                    corpus.push_labelled(
                        Sequent::theorem(beta),
                        format!("beta_{n} {variant} p{i}:=p{j}"),
                        oracle,
                    )?;
                }
                corpus.push_labelled(Sequent::theorem(alpha), format!("alpha_{n} {variant}"), oracle)?;
            }
        }
        let shape = Shape::new(fragment, 3, 3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(fragment_bits(fragment)));
        let mut attempts = 0;
        while corpus.len() < STANDARD_CORPUS_SIZE && attempts < 2000 {
            attempts += 1;
            corpus.push_labelled(shape.sequent(&mut rng), "random", oracle)?;
        }
        Ok(corpus)
    }
}

fn fragment_bits(f: Fragment) -> u8 {
    f.connectives().fold(0, |acc, c| {
        acc | match c {
            Connective::And => 1,
            Connective::Or => 2,
            Connective::Implies => 4,
            Connective::Not => 8,
        }
    })
}

fn structural_sequents() -> Vec<(&'static str, &'static str)> {
    vec![
        ("p1 |- p1", "identity"),
        ("p1 |- p2", "unrelated letters"),
        ("|- p1", "bare letter"),
        ("p1 ; p2 |- p2", "premise membership"),
        ("p1 & p2 |- p1", "conjunction elimination"),
        ("p1 & p2 |- p2 & p1", "conjunction commutes"),
        ("p1 |- p1 & p2", "conjunction needs both"),
        ("p1 ; p2 |- p1 & p2", "conjunction introduction"),
        ("p1 |- p1 | p2", "disjunction introduction"),
        ("p1 | p1 |- p1", "disjunction idempotent"),
        ("p1 | p2 |- p1", "disjunction elimination fails"),
        ("p1 | p2 |- p2 | p1", "disjunction commutes"),
        ("p1 & (p2 | p3) |- p1 & p2 | p1 & p3", "distributivity"),
        ("(p1 | p2) & (p1 | p3) |- p1 | p2 & p3", "distributivity converse"),
        ("(p1 | p2) & p3 |- p1", "conjunct of a disjunction"),
        ("~~p1 |- p1", "double negation elimination"),
        ("~p1 ; ~~p1 |- p2", "explosion on negations"),
        ("p1 |- ~~p1", "double negation introduction"),
        ("~~~p1 |- ~p1", "triple negation"),
        ("p1 ; ~p1 |- p2", "explosion"),
        ("~p1 |- p1", "negation to letter"),
        ("|- ~p1", "bare negation"),
        ("~p1 |- ~~~p1", "negation to triple negation"),
        ("|- ~(p1 & ~p1)", "non-contradiction"),
        ("~(p1 & p2) |- ~p1", "negated conjunction"),
        ("~p1 |- ~(p1 & p2)", "negation weakening"),
        ("~~p1 & ~~p2 |- ~~(p1 & p2)", "double negation over conjunction"),
        ("~~(p1 & p2) |- p1", "double negated conjunction to letter"),
        ("|- p1 -> p1", "implication identity"),
        ("p1 ; p1 -> p2 |- p2", "modus ponens"),
        ("|- p1 -> p2 -> p1", "weakening axiom"),
        ("|- ((p1 -> p2) -> p1) -> p1", "Peirce's law"),
        ("|- (p1 -> p2) -> (p2 -> p3) -> p1 -> p3", "transitivity"),
        ("|- p1 | ~p1", "excluded middle"),
        ("|- ~~(p1 | ~p1)", "double negated excluded middle"),
        ("~(p1 | p2) |- ~p1", "negated disjunction"),
        ("|- ~~p1 -> p1", "double negation law"),
    ]
}

/// Why a candidate was rejected, with the index of the corpus entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CandidateResult {
    Pass,
    /// Entry expected derivable, but the matrix refutes it.
    Unsound(usize),
    /// Entry expected not derivable, but the matrix validates it.
    Incomplete(usize),
}

struct CompiledCorpus {
    /// Original index, compiled sequent, expected outcome; fewest letters first.
    entries: Vec<(usize, CompiledSequent, Outcome)>,
    fragment: Fragment,
}

impl CompiledCorpus {
    fn new(corpus: &Corpus) -> CompiledCorpus {
        let mut entries: Vec<_> = corpus
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                (
                    i,
                    CompiledSequent::new(&e.sequent.premises, &e.sequent.conclusion),
                    e.expected,
                )
            })
            .collect();
        entries.sort_by_key(|(i, c, _)| (c.letters.len(), *i));
        CompiledCorpus {
            entries,
            fragment: corpus.fragment(),
        }
    }

    fn test(&self, m: &Matrix) -> CandidateResult {
        for (i, seq, expected) in &self.entries {
            let holds = seq.counter_values(m).is_none();
            match (expected, holds) {
                (Outcome::Derivable, false) => return CandidateResult::Unsound(*i),
                (Outcome::NotDerivable, true) => return CandidateResult::Incomplete(*i),
                _ => {}
            }
        }
        CandidateResult::Pass
    }
}

/// Checks the matrix against every corpus entry, cheapest entries first.
pub fn test_candidate(m: &Matrix, corpus: &Corpus) -> Result<CandidateResult> {
    let compiled = CompiledCorpus::new(corpus);
    if !compiled.fragment.is_subset_of(m.fragment()) {
        return Err(Error::FragmentMismatch(format!(
            "corpus uses `{}` but the matrix only has `{}`",
            compiled.fragment,
            m.fragment()
        )));
    }
    Ok(compiled.test(m))
}

/// Layout of the raw candidate space for one fragment and size: every table
/// cell ranges over the `m` elements, and every subset may be designated.
#[derive(Debug, Clone)]
struct Space {
    m: usize,
    connectives: Vec<Connective>,
    cells: usize,
    raw: u128,
    /// All permutations other than the identity, with their inverses.
    perms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Space {
    fn new(fragment: Fragment, m: usize, max_raw: u128) -> Result<Space> {
        if m == 0 {
            return Err(Error::Precondition("matrix size must be >= 1".into()));
        }
        // encoding order: not, and, or, implies
        let connectives: Vec<Connective> = [Connective::Not, Connective::And, Connective::Or, Connective::Implies]
            .into_iter()
            .filter(|&c| fragment.contains(c))
            .collect();
        let cells: usize = connectives.iter().map(|c| m.pow(c.arity() as u32)).sum();
        let raw = (m as u128)
            .checked_pow(cells as u32)
            .and_then(|t| t.checked_mul(1u128 << m.min(127)))
            .filter(|&r| r <= max_raw)
            .ok_or_else(|| {
                Error::ResourceLimit(format!(
                    "{m}-element matrices for `{fragment}` exceed the candidate limit of {max_raw}"
                ))
            })?;
        let mut perms = Vec::new();
        permutations(m, &mut |p| {
            if p.iter().enumerate().any(|(i, &x)| i != x) {
                let mut inv = vec![0; m];
                for (i, &x) in p.iter().enumerate() {
                    inv[x] = i;
                }
                perms.push((p.to_vec(), inv));
            }
        });
        Ok(Space {
            m,
            connectives,
            cells,
            raw,
            perms,
        })
    }

    /// Writes candidate `index` as its encoding: table cells then designated flags.
    fn decode(&self, mut index: u128, enc: &mut Vec<usize>) {
        enc.clear();
        let mask = (index % (1u128 << self.m)) as usize;
        index >>= self.m;
        let m = self.m as u128;
        // most significant digit first so encodings increase with the index
        let mut digits = vec![0usize; self.cells];
        for d in digits.iter_mut().rev() {
            *d = (index % m) as usize;
            index /= m;
        }
        enc.extend_from_slice(&digits);
        enc.extend((0..self.m).map(|a| (mask >> (self.m - 1 - a)) & 1));
    }

    /// True iff no permutation yields a lexicographically smaller encoding.
    fn is_canonical(&self, enc: &[usize]) -> bool {
        let m = self.m;
        'perm: for (perm, inv) in &self.perms {
            let mut pos = 0;
            for c in &self.connectives {
                if c.arity() == 1 {
                    for a in 0..m {
                        let v = perm[enc[pos + inv[a]]];
                        match v.cmp(&enc[pos + a]) {
                            std::cmp::Ordering::Less => return false,
                            std::cmp::Ordering::Greater => continue 'perm,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                    pos += m;
                } else {
                    for a in 0..m {
                        for b in 0..m {
                            let v = perm[enc[pos + inv[a] * m + inv[b]]];
                            match v.cmp(&enc[pos + a * m + b]) {
                                std::cmp::Ordering::Less => return false,
                                std::cmp::Ordering::Greater => continue 'perm,
                                std::cmp::Ordering::Equal => {}
                            }
                        }
                    }
                    pos += m * m;
                }
            }
            for a in 0..m {
                let v = enc[pos + inv[a]];
                match v.cmp(&enc[pos + a]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => continue 'perm,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }

    fn build(&self, enc: &[usize]) -> Matrix {
        let m = self.m;
        let mut tables = Tables::default();
        let mut pos = 0;
        for &c in &self.connectives {
            let len = m.pow(c.arity() as u32);
            *tables.get_mut(c) = Some(enc[pos..pos + len].to_vec());
            pos += len;
        }
        let designated = enc[pos..].iter().map(|&d| d == 1).collect();
        let names = (0..m).map(|i| i.to_string()).collect();
        Matrix::from_parts_unchecked(names, designated, tables)
    }
}

fn permutations(m: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(current: &mut Vec<usize>, used: &mut [bool], visit: &mut impl FnMut(&[usize])) {
        if current.len() == used.len() {
            visit(current);
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                current.push(x);
                go(current, used, visit);
                current.pop();
                used[x] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(m), &mut vec![false; m], visit);
}

/// Every `m`-element matrix over `fragment`'s signature, one per
/// isomorphism class (the representative with the least encoding), in
/// increasing encoding order.
pub fn enumerate_matrices(fragment: Fragment, m: usize) -> Result<impl Iterator<Item = Matrix>> {
    enumerate_matrices_with_limit(fragment, m, DEFAULT_MAX_RAW)
}

pub fn enumerate_matrices_with_limit(
    fragment: Fragment,
    m: usize,
    max_raw: u128,
) -> Result<impl Iterator<Item = Matrix>> {
    let space = Space::new(fragment, m, max_raw)?;
    let mut enc = Vec::new();
    Ok((0..space.raw).filter_map(move |i| {
        space.decode(i, &mut enc);
        space.is_canonical(&enc).then(|| space.build(&enc))
    }))
}

/// Number of raw candidates (before isomorphism filtering).
pub fn raw_candidate_count(fragment: Fragment, m: usize) -> Result<u128> {
    Ok(Space::new(fragment, m, u128::MAX)?.raw)
}

/// The isomorphic copy of `m` with the least encoding.
pub fn canonical_form(m: &Matrix) -> Matrix {
    let mut best: Option<Matrix> = None;
    permutations(m.size(), &mut |p| {
        let candidate = m.permuted(p);
        if best.as_ref().is_none_or(|b| candidate.encoding() < b.encoding()) {
            best = Some(candidate);
        }
    });
    best.expect("at least the identity permutation")
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
    pub max_raw: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            workers: 0,
            max_raw: DEFAULT_MAX_RAW,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SizeStats {
    pub size: usize,
    pub raw: u128,
    pub canonical: u64,
    pub survivors: u64,
    /// Rejections by corpus entry index.
    pub unsound: BTreeMap<usize, u64>,
    pub incomplete: BTreeMap<usize, u64>,
}

impl SizeStats {
    fn merge(mut self, other: SizeStats) -> SizeStats {
        self.canonical += other.canonical;
        self.survivors += other.survivors;
        for (k, v) in other.unsound {
            *self.unsound.entry(k).or_default() += v;
        }
        for (k, v) in other.incomplete {
            *self.incomplete.entry(k).or_default() += v;
        }
        self
    }

    pub fn rejected_unsound(&self) -> u64 {
        self.unsound.values().sum()
    }

    pub fn rejected_incomplete(&self) -> u64 {
        self.incomplete.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub fragment: Fragment,
    pub max_size: usize,
    pub sizes: Vec<SizeStats>,
    /// Canonical representatives, by size then encoding.
    pub survivors: Vec<Matrix>,
}

impl SearchOutcome {
    pub fn contains_structure(&self, m: &Matrix) -> bool {
        let c = canonical_form(m);
        self.survivors.iter().any(|s| s.same_structure(&c))
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("fragment {}  sizes 1..={}\n", self.fragment, self.max_size);
        writeln!(
            out,
            "{:>4} {:>12} {:>10} {:>10} {:>10} {:>9}",
            "size", "raw", "canonical", "unsound", "incomplete", "survivors"
        )
        .unwrap();
        for s in &self.sizes {
            writeln!(
                out,
                "{:>4} {:>12} {:>10} {:>10} {:>10} {:>9}",
                s.size,
                s.raw,
                s.canonical,
                s.rejected_unsound(),
                s.rejected_incomplete(),
                s.survivors
            )
            .unwrap();
        }
        out
    }

    pub fn porcelain(&self) -> String {
        let mut out = format!("fragment: {}\nmax_size: {}\n", self.fragment, self.max_size);
        for s in &self.sizes {
            writeln!(
                out,
                "size: {} raw={} canonical={} rejected_unsound={} rejected_incomplete={} survivors={}",
                s.size,
                s.raw,
                s.canonical,
                s.rejected_unsound(),
                s.rejected_incomplete(),
                s.survivors
            )
            .unwrap();
        }
        for m in &self.survivors {
            writeln!(out, "survivor: {}", describe_tables(m)).unwrap();
        }
        out
    }
}

/// `size=3 designated=2 not=2,0,0 and=...` over element indices.
pub fn describe_tables(m: &Matrix) -> String {
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let designated: Vec<usize> = m.designated().collect();
    let mut parts = vec![format!("size={}", m.size()), format!("designated={}", join(&designated))];
    for c in [Connective::Not, Connective::And, Connective::Or, Connective::Implies] {
        if let Some(t) = m.tables().get(c) {
            let name = if c == Connective::Implies { "imp" } else { c.name() };
            parts.push(format!("{name}={}", join(t)));
        }
    }
    parts.join(" ")
}

const CHUNK: u128 = 1 << 14;

fn search_size(space: &Space, corpus: &CompiledCorpus) -> (SizeStats, Vec<Matrix>) {
    let chunks = space.raw.div_ceil(CHUNK);
    let (stats, mut survivors) = (0..chunks as u64)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk as u128 * CHUNK;
            let end = (start + CHUNK).min(space.raw);
            let mut stats = SizeStats::default();
            let mut found = Vec::new();
            let mut enc = Vec::new();
            for i in start..end {
                space.decode(i, &mut enc);
                if !space.is_canonical(&enc) {
                    continue;
                }
                stats.canonical += 1;
                let m = space.build(&enc);
                match corpus.test(&m) {
                    CandidateResult::Pass => {
                        stats.survivors += 1;
                        found.push(m);
                    }
                    CandidateResult::Unsound(e) => *stats.unsound.entry(e).or_default() += 1,
                    CandidateResult::Incomplete(e) => *stats.incomplete.entry(e).or_default() += 1,
                }
            }
            (stats, found)
        })
        .reduce(
            || (SizeStats::default(), Vec::new()),
            |(a, mut fa), (b, fb)| {
                fa.extend(fb);
                (a.merge(b), fa)
            },
        );
    survivors.sort_by_key(Matrix::encoding);
    let stats = SizeStats {
        size: space.m,
        raw: space.raw,
        ..stats
    };
    (stats, survivors)
}

/// Tests every canonical candidate of sizes `1..=max_size` against the
/// corpus. Output does not depend on the worker count.
pub fn search(fragment: Fragment, max_size: usize, corpus: &Corpus) -> Result<SearchOutcome> {
    search_with(fragment, max_size, corpus, &SearchConfig::default())
}

pub fn search_with(
    fragment: Fragment,
    max_size: usize,
    corpus: &Corpus,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    let compiled = CompiledCorpus::new(corpus);
    if !compiled.fragment.is_subset_of(fragment) {
        return Err(Error::FragmentMismatch(format!(
            "corpus uses `{}`, outside the searched fragment `{fragment}`",
            compiled.fragment
        )));
    }
    let spaces = (1..=max_size)
        .map(|m| Space::new(fragment, m, config.max_raw))
        .collect::<Result<Vec<_>>>()?;
    let run = || {
        let mut sizes = Vec::new();
        let mut survivors = Vec::new();
        for space in &spaces {
            let (stats, found) = search_size(space, &compiled);
            sizes.push(stats);
            survivors.extend(found);
        }
        SearchOutcome {
            fragment,
            max_size,
            sizes,
            survivors,
        }
    };
    if config.workers == 0 {
        return Ok(run());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(run))
}

/// Letters used anywhere in the corpus; handy for reports.
pub fn corpus_letters(corpus: &Corpus) -> BTreeSet<Letter> {
    corpus.entries.iter().flat_map(|e| e.sequent.letters()).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Connective::*;
    use crate::matrix::{make_three, make_two};

    fn frag(cs: &[Connective]) -> Fragment {
        Fragment::of(cs)
    }

    /// Isomorphism classes by brute force: group raw candidates by their
    /// least permuted encoding.
    fn brute_force_classes(fragment: Fragment, m: usize) -> usize {
        let space = Space::new(fragment, m, u128::MAX).unwrap();
        let mut classes = BTreeSet::new();
        let mut enc = Vec::new();
        for i in 0..space.raw {
            space.decode(i, &mut enc);
            classes.insert(canonical_form(&space.build(&enc)).encoding());
        }
        classes.len()
    }

    #[test]
    fn raw_counts() {
        assert_eq!(raw_candidate_count(frag(&[Not]), 1).unwrap(), 2);
        assert_eq!(raw_candidate_count(frag(&[Not]), 2).unwrap(), 16);
        assert_eq!(raw_candidate_count(frag(&[And]), 2).unwrap(), 64);
        assert_eq!(
            raw_candidate_count(frag(&[And, Not]), 3).unwrap(),
            3u128.pow(9) * 27 * 8
        );
    }

    #[test]
    fn canonical_counts_match_brute_force() {
        assert_eq!(enumerate_matrices(frag(&[Not]), 1).unwrap().count(), 2);
        // 16 raw {not} matrices on two elements fall into 10 classes
        assert_eq!(brute_force_classes(frag(&[Not]), 2), 10);
        assert_eq!(enumerate_matrices(frag(&[Not]), 2).unwrap().count(), 10);
        for (f, m) in [(frag(&[And]), 2), (frag(&[Not]), 3), (Fragment::EMPTY, 3)] {
            assert_eq!(
                enumerate_matrices(f, m).unwrap().count(),
                brute_force_classes(f, m),
                "{f} size {m}"
            );
        }
    }

    #[test]
    fn enumerated_matrices_are_canonical() {
        for m in enumerate_matrices(frag(&[And]), 2).unwrap() {
            assert_eq!(canonical_form(&m).encoding(), m.encoding());
        }
    }

    #[test]
    fn raw_limit() {
        assert!(matches!(
            enumerate_matrices(frag(&[And, Or]), 4),
            Err(Error::ResourceLimit(_))
        ));
        assert!(enumerate_matrices(frag(&[Not]), 0).is_err());
    }

    fn entry(s: &str, expected: Outcome) -> CorpusEntry {
        CorpusEntry {
            sequent: Sequent::parse(s).unwrap(),
            expected,
            note: String::new(),
        }
    }

    #[test]
    fn test_candidate_examples() {
        let corpus = Corpus {
            entries: vec![
                entry("p1 |- p1", Outcome::Derivable),
                entry("~~p1 |- p1", Outcome::NotDerivable),
            ],
        };
        let three = make_three(frag(&[And, Not])).unwrap();
        assert_eq!(test_candidate(&three, &corpus).unwrap(), CandidateResult::Pass);
        let two = make_two(frag(&[And, Not]));
        assert_eq!(test_candidate(&two, &corpus).unwrap(), CandidateResult::Incomplete(1));
        let and_only = make_two(frag(&[And]));
        assert!(matches!(
            test_candidate(&and_only, &corpus),
            Err(Error::FragmentMismatch(_))
        ));
    }

    #[test]
    fn corpus_file_roundtrip() {
        let text = "# comment\np1 |- p1 :: derivable :: identity\n~~p1 |- p1 :: not-derivable :: dn\n";
        let c = Corpus::load(text, &Oracle::default()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(Corpus::parse(&c.render()).unwrap(), c);
        let wrong = "~~p1 |- p1 :: derivable :: mislabelled\n";
        assert!(Corpus::load(wrong, &Oracle::default()).is_err());
        assert!(Corpus::parse("p1 |- p1\n").is_err());
        assert!(Corpus::parse("p1 |- p1 :: maybe :: x\n").is_err());
    }

    #[test]
    fn small_search_finds_two_for_and() {
        let corpus = Corpus::standard(frag(&[And]), &Oracle::default()).unwrap();
        let out = search(frag(&[And]), 2, &corpus).unwrap();
        assert!(out.contains_structure(&make_two(frag(&[And]))));
        assert_eq!(out.sizes[0].survivors, 0);
        assert_eq!(out.sizes[1].raw, 64);
    }
}
