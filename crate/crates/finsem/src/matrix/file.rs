//! Line-oriented matrix files:
//!
//! ```text
//! # the three-element algebra
//! size 3
//! elements 0 h 1
//! designated 1
//! op not 1
//! 0 -> 1
//! h -> 0
//! 1 -> 0
//! op and 2
//! 0 0 -> 0
//! ...
//! ```

use std::fmt::Write as _;

use super::{Matrix, Tables};
use crate::error::MatrixError;
use crate::formula::Connective;

fn op_name(c: Connective) -> &'static str {
    match c {
        Connective::Not => "not",
        Connective::And => "and",
        Connective::Or => "or",
        Connective::Implies => "imp",
    }
}

fn op_from_name(s: &str) -> Option<Connective> {
    Connective::ALL.into_iter().find(|&c| op_name(c) == s)
}

struct PendingOp {
    connective: Connective,
    cells: Vec<Option<usize>>,
    filled: usize,
    header_line: usize,
}

pub fn parse_matrix(text: &str) -> Result<Matrix, MatrixError> {
    let err = |line: usize, message: String| MatrixError::File { line, message };

    let mut size: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut designated: Option<Vec<usize>> = None;
    let mut tables = Tables::default();
    let mut pending: Option<PendingOp> = None;

    let finish = |op: PendingOp, tables: &mut Tables| -> Result<(), MatrixError> {
        if op.filled < op.cells.len() {
            return Err(err(
                op.header_line,
                format!(
                    "op {} has {} of {} cells",
                    op_name(op.connective),
                    op.filled,
                    op.cells.len()
                ),
            ));
        }
        let table = op.cells.into_iter().map(|c| c.expect("filled")).collect();
        *tables.get_mut(op.connective) = Some(table);
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();

        if let Some(op) = pending.as_mut() {
            if op.filled < op.cells.len() {
                let names = names.as_ref().expect("op requires elements");
                let lookup = |t: &str| {
                    names
                        .iter()
                        .position(|n| n == t)
                        .ok_or_else(|| err(line_no, format!("unknown element `{t}`")))
                };
                let arity = op.connective.arity();
                if tokens.len() != arity + 2 || tokens[arity] != "->" {
                    return Err(err(
                        line_no,
                        format!("expected {} argument(s), `->` and a result", arity),
                    ));
                }
                let m = names.len();
                let mut cell = 0;
                for t in &tokens[..arity] {
                    cell = cell * m + lookup(t)?;
                }
                let result = lookup(tokens[arity + 1])?;
                if op.cells[cell].is_some() {
                    return Err(err(line_no, "duplicate cell".into()));
                }
                op.cells[cell] = Some(result);
                op.filled += 1;
                continue;
            }
            let op = pending.take().expect("pending op");
            finish(op, &mut tables)?;
        }

        match tokens[0] {
            "size" => {
                let m = tokens
                    .get(1)
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|_| tokens.len() == 2)
                    .ok_or_else(|| err(line_no, "expected `size <m>`".into()))?;
                size = Some(m);
            }
            "elements" => {
                let m = size.ok_or_else(|| err(line_no, "`elements` before `size`".into()))?;
                if tokens.len() - 1 != m {
                    return Err(err(
                        line_no,
                        format!("expected {m} element names, found {}", tokens.len() - 1),
                    ));
                }
                names = Some(tokens[1..].iter().map(|s| s.to_string()).collect());
            }
            "designated" => {
                let ns = names
                    .as_ref()
                    .ok_or_else(|| err(line_no, "`designated` before `elements`".into()))?;
                let mut ds = Vec::new();
                for t in &tokens[1..] {
                    let d = ns
                        .iter()
                        .position(|n| n == t)
                        .ok_or_else(|| err(line_no, format!("unknown element `{t}`")))?;
                    ds.push(d);
                }
                designated = Some(ds);
            }
            "op" => {
                let ns = names
                    .as_ref()
                    .ok_or_else(|| err(line_no, "`op` before `elements`".into()))?;
                if tokens.len() != 3 {
                    return Err(err(line_no, "expected `op <name> <arity>`".into()));
                }
                let c = op_from_name(tokens[1])
                    .ok_or_else(|| err(line_no, format!("unknown op `{}`", tokens[1])))?;
                if tokens[2].parse::<usize>().ok() != Some(c.arity()) {
                    return Err(err(line_no, format!("op {} has arity {}", tokens[1], c.arity())));
                }
                if tables.get(c).is_some() {
                    return Err(err(line_no, format!("op {} defined twice", tokens[1])));
                }
                pending = Some(PendingOp {
                    connective: c,
                    cells: vec![None; ns.len().pow(c.arity() as u32)],
                    filled: 0,
                    header_line: line_no,
                });
            }
            other => return Err(err(line_no, format!("unknown directive `{other}`"))),
        }
    }
    if let Some(op) = pending.take() {
        finish(op, &mut tables)?;
    }
    let names = names.ok_or_else(|| err(0, "missing `elements`".into()))?;
    let designated = designated.ok_or_else(|| err(0, "missing `designated`".into()))?;
    Matrix::new(names, &designated, tables)
}

pub fn render_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    let n = m.size();
    writeln!(out, "size {n}").unwrap();
    writeln!(out, "elements {}", m.names().join(" ")).unwrap();
    let ds: Vec<&str> = m.designated().map(|d| m.name(d)).collect();
    writeln!(out, "designated {}", ds.join(" ")).unwrap();
    for c in [Connective::Not, Connective::And, Connective::Or, Connective::Implies] {
        let Some(t) = m.tables().get(c) else { continue };
        writeln!(out, "op {} {}", op_name(c), c.arity()).unwrap();
        if c.arity() == 1 {
            for (a, &v) in t.iter().enumerate() {
                writeln!(out, "{} -> {}", m.name(a), m.name(v)).unwrap();
            }
        } else {
            for a in 0..n {
                for b in 0..n {
                    writeln!(out, "{} {} -> {}", m.name(a), m.name(b), m.name(t[a * n + b])).unwrap();
                }
            }
        }
    }
    out
}
