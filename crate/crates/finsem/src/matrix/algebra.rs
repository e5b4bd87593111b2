use std::fmt;

use super::Matrix;
use crate::error::{Error, MatrixError, Result};
use crate::formula::Connective;

/// Largest universe for which [`congruences`] enumerates partitions
/// (Bell(8) = 4140 candidates).
pub const MAX_CONGRUENCE_SIZE: usize = 8;

/// True iff `subset` is closed under every table of `m`.
pub fn is_subalgebra(m: &Matrix, subset: &[usize]) -> Result<bool, MatrixError> {
    let size = m.size();
    if subset.is_empty() || subset.iter().any(|&a| a >= size) {
        return Err(MatrixError::BadSubset { size });
    }
    let mut inside = vec![false; size];
    for &a in subset {
        inside[a] = true;
    }
    for c in m.fragment().connectives() {
        let closed = if c.arity() == 1 {
            subset
                .iter()
                .all(|&a| inside[m.apply_unary(c, a).expect("table present")])
        } else {
            subset.iter().all(|&a| {
                subset
                    .iter()
                    .all(|&b| inside[m.apply_binary(c, a, b).expect("table present")])
            })
        };
        if !closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An equivalence relation given by its blocks. Blocks are sorted, and
/// ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    blocks: Vec<Vec<usize>>,
}

impl Congruence {
    /// Panics unless `blocks` partition `0..size` for some size.
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Congruence {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        assert!(
            blocks.iter().all(|b| !b.is_empty()) && all.iter().enumerate().all(|(i, &a)| i == a),
            "blocks must partition 0..n"
        );
        Congruence { blocks }
    }

    fn from_labels(labels: &[usize]) -> Congruence {
        let count = labels.iter().max().map_or(0, |&x| x + 1);
        let mut blocks = vec![Vec::new(); count];
        for (a, &l) in labels.iter().enumerate() {
            blocks[l].push(a);
        }
        Congruence { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&a))
            .expect("element belongs to a block")
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block_of(a) == self.block_of(b)
    }

    pub fn is_diagonal(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn is_all(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Compatibility with every table of `m`.
    pub fn is_compatible(&self, m: &Matrix) -> bool {
        let size = m.size();
        let label: Vec<usize> = (0..size).map(|a| self.block_of(a)).collect();
        compatible(m, &label)
    }

    /// `{{0}, {h, 1}}` using the matrix's element names.
    pub fn render(&self, m: &Matrix) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|&a| m.name(a)).collect();
                format!("{{{}}}", names.join(", "))
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|a| a.to_string()).collect();
                format!("{{{}}}", xs.join(", "))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn compatible(m: &Matrix, label: &[usize]) -> bool {
    let size = m.size();
    for c in m.fragment().connectives() {
        let t = m.tables().get(c).expect("table present");
        if c == Connective::Not {
            for a in 0..size {
                for b in 0..size {
                    if label[a] == label[b] && label[t[a]] != label[t[b]] {
                        return false;
                    }
                }
            }
        } else {
            for a1 in 0..size {
                for b1 in 0..size {
                    if label[a1] != label[b1] {
                        continue;
                    }
                    for a2 in 0..size {
                        for b2 in 0..size {
                            if label[a2] == label[b2]
                                && label[t[a1 * size + a2]] != label[t[b1 * size + b2]]
                            {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// All congruences of the algebra underlying `m`, in restricted-growth
/// order: the diagonal first, the all relation last.
pub fn congruences(m: &Matrix) -> Result<Vec<Congruence>> {
    let size = m.size();
    if size > MAX_CONGRUENCE_SIZE {
        return Err(Error::ResourceLimit(format!(
            "congruence enumeration supports at most {MAX_CONGRUENCE_SIZE} elements, matrix has {size}"
        )));
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; size];
    partitions(&mut labels, 0, 0, &mut |labels| {
        if compatible(m, labels) {
            out.push(Congruence::from_labels(labels));
        }
    });
    // restricted growth strings come out from all-in-one to diagonal
    out.reverse();
    Ok(out)
}

fn partitions(labels: &mut [usize], pos: usize, used: usize, visit: &mut impl FnMut(&[usize])) {
    if pos == labels.len() {
        visit(labels);
        return;
    }
    for l in 0..=used {
        labels[pos] = l;
        let next = if l == used { used + 1 } else { used };
        partitions(labels, pos + 1, next, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Connective::*, Fragment};
    use crate::matrix::{make_chain, make_three, make_two};

    fn three() -> Matrix {
        make_three(Fragment::of(&[And, Not])).unwrap()
    }

    #[test]
    fn subalgebras_of_three() {
        let t = three();
        assert!(is_subalgebra(&t, &[0, 2]).unwrap());
        assert!(!is_subalgebra(&t, &[1, 2]).unwrap());
        assert!(is_subalgebra(&t, &[0, 1, 2]).unwrap());
        assert!(is_subalgebra(&t, &[]).is_err());
        assert!(is_subalgebra(&t, &[3]).is_err());
    }

    #[test]
    fn congruences_of_three() {
        let t = three();
        let cs = congruences(&t).unwrap();
        assert_eq!(cs.len(), 3);
        assert!(cs[0].is_diagonal());
        assert!(cs[2].is_all());
        assert_eq!(cs[1], Congruence::from_blocks(vec![vec![0], vec![1, 2]]));
        assert_eq!(cs[1].render(&t), "{{0}, {h, 1}}");
        assert!(!Congruence::from_blocks(vec![vec![0, 1], vec![2]]).is_compatible(&t));
    }

    #[test]
    fn two_element_has_only_trivial() {
        let cs = congruences(&make_two(Fragment::of(&[And]))).unwrap();
        assert_eq!(cs.len(), 2);
        assert!(cs[0].is_diagonal() && cs[1].is_all());
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        // no tables: every partition is a congruence
        for (m, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
            let c = make_chain(m, Fragment::EMPTY).unwrap();
            assert_eq!(congruences(&c).unwrap().len(), bell);
        }
    }

    #[test]
    fn size_limit() {
        let c = make_chain(9, Fragment::EMPTY).unwrap();
        assert!(matches!(congruences(&c), Err(Error::ResourceLimit(_))));
    }
}
