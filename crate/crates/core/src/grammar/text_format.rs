//! Line-based grammar syntax:
//!
//! ```text
//! S -> A B B B
//! A -> 'a' 'b'
//! B -> 'a' 'a' 98
//! ```
//!
//! The first rule is the start rule. Right-hand side tokens are quoted byte
//! literals (`'a'`, `'\''`, `'\\'`, `'\n'`, `'\x7f'`), decimal terminal ids,
//! or nonterminal names. Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;
use std::fmt::Write;

use super::{Cfg, Symbol};
use crate::error::{Error, Result};

enum Token {
    Literal(u32),
    Name(String),
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Grammar(format!("line {line}: {msg}"))
}

fn tokenize(line_no: usize, s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c == '\'' {
            chars.next();
            let value = match chars.next() {
                Some('\\') => match chars.next() {
                    Some('n') => b'\n' as u32,
                    Some('t') => b'\t' as u32,
                    Some('r') => b'\r' as u32,
                    Some('0') => 0,
                    Some('\\') => b'\\' as u32,
                    Some('\'') => b'\'' as u32,
                    Some('x') => {
                        let hex: String = chars.by_ref().take(2).collect();
                        u32::from_str_radix(&hex, 16)
                            .map_err(|_| err(line_no, format!("bad escape \\x{hex}")))?
                    }
                    other => return Err(err(line_no, format!("bad escape {other:?}"))),
                },
                Some(ch) if (ch as u32) < 256 => ch as u32,
                Some(ch) => return Err(err(line_no, format!("literal {ch:?} is not a byte"))),
                None => return Err(err(line_no, "unterminated literal")),
            };
            if chars.next() != Some('\'') {
                return Err(err(line_no, "unterminated literal"));
            }
            out.push(Token::Literal(value));
            continue;
        }
        let mut word = String::new();
        while let Some(&ch) = chars.peek() {
            if ch.is_whitespace() {
                break;
            }
            word.push(ch);
            chars.next();
        }
        if word.bytes().all(|b| b.is_ascii_digit()) {
            let v = word
                .parse::<u32>()
                .map_err(|_| err(line_no, format!("terminal {word} too large")))?;
            out.push(Token::Literal(v));
        } else {
            out.push(Token::Name(word));
        }
    }
    Ok(out)
}

pub fn parse_grammar(src: &str) -> Result<Cfg> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut bodies: Vec<(usize, Vec<Token>)> = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = trimmed
            .split_once("->")
            .ok_or_else(|| err(line_no, "expected `NAME -> symbols`"))?;
        let lhs = lhs.trim();
        if lhs.is_empty() || lhs.contains(char::is_whitespace) || lhs.starts_with('\'') {
            return Err(err(line_no, format!("bad rule name {lhs:?}")));
        }
        if lhs.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(line_no, "rule names cannot be numbers"));
        }
        if index.insert(lhs.to_string(), names.len()).is_some() {
            return Err(err(line_no, format!("{lhs} is defined twice")));
        }
        names.push(lhs.to_string());
        bodies.push((line_no, tokenize(line_no, rhs)?));
    }
    if names.is_empty() {
        return Err(Error::Grammar("no rules".into()));
    }
    let mut rules = Vec::with_capacity(bodies.len());
    for (line_no, body) in bodies {
        let mut rhs = Vec::with_capacity(body.len());
        for t in body {
            rhs.push(match t {
                Token::Literal(c) => Symbol::Terminal(c),
                Token::Name(n) => Symbol::NonTerminal(
                    *index
                        .get(&n)
                        .ok_or_else(|| err(line_no, format!("undefined nonterminal {n}")))?,
                ),
            });
        }
        rules.push(rhs);
    }
    Cfg::with_names(rules, names, 0)
}

fn write_terminal(out: &mut String, c: u32) {
    match c {
        0x27 => out.push_str("'\\''"),
        0x5c => out.push_str("'\\\\'"),
        0x21..=0x7e => {
            out.push('\'');
            out.push(c as u8 as char);
            out.push('\'');
        }
        _ => write!(out, "{c}").unwrap(),
    }
}

/// Writes `g` in the syntax accepted by [`parse_grammar`], start rule first.
pub fn format_grammar(g: &Cfg) -> String {
    let mut out = String::new();
    let order = std::iter::once(g.start()).chain((0..g.rules().len()).filter(|&x| x != g.start()));
    for x in order {
        out.push_str(&g.names()[x]);
        out.push_str(" ->");
        for &s in g.rule(x) {
            out.push(' ');
            match s {
                Symbol::Terminal(c) => write_terminal(&mut out, c),
                Symbol::NonTerminal(y) => out.push_str(&g.names()[y]),
            }
        }
        out.push('\n');
    }
    out
}
