//! Text syntax: `~` binds tightest, then `&`, then `|` (both left
//! associative), then `->` (right associative). `¬ ∧ ∨ →` are accepted on
//! input.

use super::{Formula, Letter};
use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Letter(u32),
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
}

fn describe(tok: Option<Token>) -> String {
    match tok {
        None => "end of input".into(),
        Some(Token::Letter(i)) => format!("letter p{i}"),
        Some(Token::Not) => "`~`".into(),
        Some(Token::And) => "`&`".into(),
        Some(Token::Or) => "`|`".into(),
        Some(Token::Implies) => "`->`".into(),
        Some(Token::LParen) => "`(`".into(),
        Some(Token::RParen) => "`)`".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '¬' => Token::Not,
            '&' | '∧' => Token::And,
            '|' | '∨' => Token::Or,
            '→' => Token::Implies,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    i += 1;
                    Token::Implies
                } else {
                    return Err(ParseError::new(start, "expected `->`"));
                }
            }
            'p' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return Err(ParseError::new(start, "letter `p` needs an index"));
                }
                let digits: String = chars[i + 1..j].iter().collect();
                if digits.starts_with('0') {
                    let msg = if digits.chars().all(|d| d == '0') {
                        "letter index must be >= 1"
                    } else {
                        "letter index has a leading zero"
                    };
                    return Err(ParseError::new(start, msg));
                }
                let index: u32 = digits
                    .parse()
                    .map_err(|_| ParseError::new(start, "letter index too large"))?;
                i = j - 1;
                Token::Letter(index)
            }
            other => return Err(ParseError::new(start, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disj()?;
        if self.peek() == Some(Token::Implies) {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conj()?;
        while self.peek() == Some(Token::Or) {
            self.bump();
            acc = Formula::or(acc, self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.negation()?;
        while self.peek() == Some(Token::And) {
            self.bump();
            acc = Formula::and(acc, self.negation()?);
        }
        Ok(acc)
    }

    fn negation(&mut self) -> Result<Formula, ParseError> {
        let mut count = 0;
        while self.peek() == Some(Token::Not) {
            self.bump();
            count += 1;
        }
        let mut f = self.atom()?;
        for _ in 0..count {
            f = Formula::not(f);
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Letter(i)) => Ok(Formula::Letter(Letter(i))),
            Some(Token::LParen) => {
                let inner = self.formula()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(ParseError::new(
                        close,
                        format!("expected `)`, found {}", describe(other)),
                    )),
                }
            }
            other => Err(ParseError::new(
                at,
                format!("expected a letter or `(`, found {}", describe(other)),
            )),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let f = parser.formula()?;
    if parser.pos < parser.tokens.len() {
        let at = parser.offset();
        return Err(ParseError::new(
            at,
            format!("unexpected {}", describe(parser.peek())),
        ));
    }
    Ok(f)
}

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Letter(_) => 5,
        Formula::Not(_) => 4,
        Formula::And(..) => 3,
        Formula::Or(..) => 2,
        Formula::Implies(..) => 1,
    }
}

fn write_min(f: &Formula, out: &mut String) {
    let child = |c: &Formula, parens: bool, out: &mut String| {
        if parens {
            out.push('(');
            write_min(c, out);
            out.push(')');
        } else {
            write_min(c, out);
        }
    };
    let own = precedence(f);
    match f {
        Formula::Letter(l) => out.push_str(&l.to_string()),
        Formula::Not(a) => {
            out.push('~');
            child(a, precedence(a) < own, out);
        }
        Formula::And(a, b) | Formula::Or(a, b) => {
            let op = if own == 3 { " & " } else { " | " };
            child(a, precedence(a) < own, out);
            out.push_str(op);
            child(b, precedence(b) <= own, out);
        }
        Formula::Implies(a, b) => {
            child(a, precedence(a) <= own, out);
            out.push_str(" -> ");
            child(b, precedence(b) < own, out);
        }
    }
}

/// Minimal-parentheses rendering; `parse(&print(f)) == f`.
pub fn print(f: &Formula) -> String {
    let mut out = String::new();
    write_min(f, &mut out);
    out
}

/// Fully parenthesized rendering: every binary subformula, the outermost
/// included, is wrapped in parentheses.
pub fn print_full(f: &Formula) -> String {
    match f {
        Formula::Letter(l) => l.to_string(),
        Formula::Not(a) => format!("~{}", print_full(a)),
        Formula::And(a, b) => format!("({} & {})", print_full(a), print_full(b)),
        Formula::Or(a, b) => format!("({} | {})", print_full(a), print_full(b)),
        Formula::Implies(a, b) => format!("({} -> {})", print_full(a), print_full(b)),
    }
}
