//! Field streams of each compressed representation and their zeroth-order
//! empirical entropy.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baselines::{Lz77Phrase, LzssPhrase};
use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization};
use crate::grammar::{grammar_to_lzse, Cfg, Symbol};

/// Zeroth-order empirical entropy in bits per symbol; 0 for an empty stream.
pub fn h0<T: std::hash::Hash + Eq>(stream: &[T]) -> f64 {
    if stream.is_empty() {
        return 0.0;
    }
    let mut counts: HashMap<&T, usize> = HashMap::new();
    for s in stream {
        *counts.entry(s).or_default() += 1;
    }
    let n = stream.len() as f64;
    counts
        .values()
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum::<f64>()
        .max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Lz77,
    Lzss,
    Lzse,
    Repair,
    RepairSe,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Lz77,
        Method::Lzss,
        Method::Lzse,
        Method::Repair,
        Method::RepairSe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lz77 => "lz77",
            Method::Lzss => "lzss",
            Method::Lzse => "lzse",
            Method::Repair => "repair",
            Method::RepairSe => "repair-se",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

/// The output of one compression method.
#[derive(Debug, Clone, Copy)]
pub enum Artifact<'a> {
    Factorization(&'a Factorization),
    Lzss(&'a [LzssPhrase]),
    Lz77(&'a [Lz77Phrase]),
    Grammar(&'a Cfg),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stream {
    pub name: &'static str,
    pub symbols: Vec<u64>,
}

impl Stream {
    fn new(name: &'static str) -> Self {
        Stream {
            name,
            symbols: Vec::new(),
        }
    }

    pub fn h0(&self) -> f64 {
        h0(&self.symbols)
    }

    /// `H0 * len`, the size of the stream under an ideal order-0 coder.
    pub fn bits(&self) -> f64 {
        self.h0() * self.symbols.len() as f64
    }
}

/// Named symbol streams of one representation.
///
/// * `lzse`, `repair-se`: `flag`, `literal`, `source` (index of the first
///   referenced factor), `length` (number of referenced factors)
/// * `lzss`: `flag`, `literal`, `source` (text offset), `length` (characters)
/// * `lz77`: `source`, `length`, `next_char`
/// * `repair`: `left` and `right` (the two symbols of every rule) and `start`
///   (children of the start symbol); nonterminals are written as `2^32 + k`
#[derive(Debug, Clone, PartialEq)]
pub struct FieldStreams {
    pub method: Method,
    pub streams: Vec<Stream>,
}

impl FieldStreams {
    pub fn get(&self, name: &str) -> Option<&Stream> {
        self.streams.iter().find(|s| s.name == name)
    }

    pub fn total_bits(&self) -> f64 {
        self.streams.iter().map(Stream::bits).sum()
    }
}

fn lzse_streams(method: Method, f: &Factorization) -> FieldStreams {
    let [mut flag, mut literal, mut source, mut length] =
        ["flag", "literal", "source", "length"].map(Stream::new);
    for factor in f.factors() {
        match *factor {
            Factor::Char(c) => {
                flag.symbols.push(0);
                literal.symbols.push(c.into());
            }
            Factor::Copy { start, count } => {
                flag.symbols.push(1);
                source.symbols.push(start as u64);
                length.symbols.push(count as u64);
            }
        }
    }
    FieldStreams {
        method,
        streams: vec![flag, literal, source, length],
    }
}

const NONTERMINAL_BASE: u64 = 1 << 32;

fn grammar_symbol(s: Symbol) -> u64 {
    match s {
        Symbol::Terminal(c) => c.into(),
        Symbol::NonTerminal(k) => NONTERMINAL_BASE + k as u64,
    }
}

pub fn extract_field_streams(method: Method, artifact: Artifact<'_>) -> Result<FieldStreams> {
    match (method, artifact) {
        (Method::Lzse | Method::RepairSe, Artifact::Factorization(f)) => Ok(lzse_streams(method, f)),
        (Method::RepairSe, Artifact::Grammar(g)) => Ok(lzse_streams(method, &grammar_to_lzse(g))),
        (Method::Lzss, Artifact::Lzss(phrases)) => {
            let [mut flag, mut literal, mut source, mut length] =
                ["flag", "literal", "source", "length"].map(Stream::new);
            for ph in phrases {
                match *ph {
                    LzssPhrase::Literal(c) => {
                        flag.symbols.push(0);
                        literal.symbols.push(c.into());
                    }
                    LzssPhrase::Copy { src, len } => {
                        flag.symbols.push(1);
                        source.symbols.push(src as u64);
                        length.symbols.push(len as u64);
                    }
                }
            }
            Ok(FieldStreams {
                method,
                streams: vec![flag, literal, source, length],
            })
        }
        (Method::Lz77, Artifact::Lz77(phrases)) => {
            let [mut source, mut length, mut next] =
                ["source", "length", "next_char"].map(Stream::new);
            for ph in phrases {
                source.symbols.push(ph.src as u64);
                length.symbols.push(ph.len as u64);
                next.symbols.push(ph.next.into());
            }
            Ok(FieldStreams {
                method,
                streams: vec![source, length, next],
            })
        }
        (Method::Repair, Artifact::Grammar(g)) => {
            let [mut left, mut right, mut start] = ["left", "right", "start"].map(Stream::new);
            for (x, rhs) in g.rules().iter().enumerate() {
                if x == g.start() {
                    start.symbols.extend(rhs.iter().map(|&s| grammar_symbol(s)));
                } else if let [a, b] = rhs[..] {
                    left.symbols.push(grammar_symbol(a));
                    right.symbols.push(grammar_symbol(b));
                } else {
                    return Err(Error::InvalidArgument(
                        "repair streams need binary rules outside the start rule".into(),
                    ));
                }
            }
            Ok(FieldStreams {
                method,
                streams: vec![left, right, start],
            })
        }
        (m, _) => Err(Error::InvalidArgument(format!(
            "artifact does not belong to method {m}"
        ))),
    }
}
