//! Per-method size report: factor counts and order-0 entropy of every field
//! stream.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::baselines::{lz77_factorize, lzss_factorize};
use crate::entropy::{extract_field_streams, Artifact, FieldStreams, Method};
use crate::grammar::{grammar_to_lzse, repair_compress, Cfg};
use crate::greedy::greedy_factorize;
use crate::suffix::SuffixIndex;
use crate::text::Text;

#[derive(Debug, Clone, Serialize)]
pub struct StreamReport {
    pub name: &'static str,
    pub len: usize,
    pub distinct: usize,
    pub h0: f64,
    pub bits: f64,
}

/// Entropies of the `source`, `length` and `next_char` streams only, summed
/// in `total`. Char factors and flags are not part of these columns.
#[derive(Debug, Clone, Serialize)]
pub struct CopyColumns {
    pub source: f64,
    pub length: f64,
    pub next_char: Option<f64>,
    pub total: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodReport {
    pub method: Method,
    /// Phrases for the LZ methods; pair rules plus distinct terminals for `repair`.
    pub factors: usize,
    /// Phrases or factors that carry a source.
    pub copies: usize,
    /// Total right-hand side length, `repair` only.
    pub grammar_size: Option<usize>,
    pub streams: Vec<StreamReport>,
    /// Sum of `bits` over all streams.
    pub total_bits: f64,
    pub copy_columns: Option<CopyColumns>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SizeReport {
    pub text_len: usize,
    pub symbol_mode: &'static str,
    pub methods: Vec<MethodReport>,
}

impl SizeReport {
    pub fn method(&self, m: Method) -> Option<&MethodReport> {
        self.methods.iter().find(|r| r.method == m)
    }
}

fn stream_reports(fs: &FieldStreams) -> Vec<StreamReport> {
    fs.streams
        .iter()
        .map(|s| StreamReport {
            name: s.name,
            len: s.symbols.len(),
            distinct: s.symbols.iter().collect::<HashSet<_>>().len(),
            h0: s.h0(),
            bits: s.bits(),
        })
        .collect()
}

fn method_report(
    method: Method,
    factors: usize,
    grammar_size: Option<usize>,
    fs: FieldStreams,
) -> MethodReport {
    let streams = stream_reports(&fs);
    let h = |name: &str| streams.iter().find(|s| s.name == name).map(|s| s.h0);
    let copy_columns = match (h("source"), h("length")) {
        (Some(source), Some(length)) => {
            let next_char = h("next_char");
            Some(CopyColumns {
                source,
                length,
                next_char,
                total: source + length + next_char.unwrap_or(0.0),
            })
        }
        _ => None,
    };
    let copies = fs.get("source").map_or(0, |s| s.symbols.len());
    MethodReport {
        method,
        factors,
        copies,
        grammar_size,
        total_bits: streams.iter().map(|s| s.bits).sum(),
        streams,
        copy_columns,
    }
}

/// Runs every requested method on `text` and reports its streams.
///
/// Up to `threads` methods run at once; the suffix index and the Re-Pair
/// grammar are built once and shared.
pub fn size_report(text: &Text, methods: &[Method], threads: usize) -> SizeReport {
    let mut wanted: Vec<Method> = Vec::new();
    for &m in methods {
        if !wanted.contains(&m) {
            wanted.push(m);
        }
    }
    let symbols = text.symbols();
    let index: OnceLock<SuffixIndex> = OnceLock::new();
    let grammar: OnceLock<Cfg> = OnceLock::new();
    let index = || index.get_or_init(|| SuffixIndex::new(symbols));
    let grammar = || grammar.get_or_init(|| repair_compress(symbols));

    let run = |m: Method| -> MethodReport {
        let fs = |a| extract_field_streams(m, a).expect("artifact matches method");
        match m {
            Method::Lz77 => {
                let z = lz77_factorize(symbols, index());
                method_report(m, z.len(), None, fs(Artifact::Lz77(&z)))
            }
            Method::Lzss => {
                let z = lzss_factorize(symbols, index());
                method_report(m, z.len(), None, fs(Artifact::Lzss(&z)))
            }
            Method::Lzse => {
                let f = greedy_factorize(symbols, index());
                method_report(m, f.len(), None, fs(Artifact::Factorization(&f)))
            }
            Method::Repair => {
                let g = grammar();
                let terminals: HashSet<u32> = symbols.iter().copied().collect();
                let factors = g.rules().len() - 1 + terminals.len();
                method_report(m, factors, Some(g.size()), fs(Artifact::Grammar(g)))
            }
            Method::RepairSe => {
                let f = grammar_to_lzse(grammar());
                method_report(m, f.len(), None, fs(Artifact::Factorization(&f)))
            }
        }
    };

    let slots: Vec<Mutex<Option<MethodReport>>> = wanted.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = threads.clamp(1, wanted.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&m) = wanted.get(i) else { break };
                *slots[i].lock().unwrap() = Some(run(m));
            });
        }
    });
    SizeReport {
        text_len: symbols.len(),
        symbol_mode: text.mode().name(),
        methods: slots
            .into_iter()
            .map(|s| s.into_inner().unwrap().expect("every method ran"))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_chars_cost_their_literal_entropy() {
        let t = Text::from("abcdefgh");
        let r = size_report(&t, &[Method::Lzse], 1);
        let m = r.method(Method::Lzse).unwrap();
        assert_eq!(m.factors, 8);
        assert_eq!(m.copies, 0);
        let literal = m.streams.iter().find(|s| s.name == "literal").unwrap();
        assert!((literal.bits - 3.0 * 8.0).abs() < 1e-9);
        assert!((m.total_bits - literal.bits).abs() < 1e-9);
    }

    #[test]
    fn repair_se_within_grammar_size() {
        let t = Text::from("ababab");
        let r = size_report(&t, &Method::ALL, 3);
        assert_eq!(r.methods.len(), 5);
        let g = r.method(Method::Repair).unwrap().grammar_size.unwrap();
        assert!(r.method(Method::RepairSe).unwrap().factors <= g);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with("{\"text_len\":6,\"symbol_mode\":\"byte\",\"methods\":[{\"method\":\"lz77\""));
    }
}
