//! Greedy LZSE parsing.
//!
//! [`greedy_factorize`] is the practical parser: it keeps a trie of extended
//! factors, walks it along the unparsed suffix, and evaluates each marked
//! candidate with an LCP query. [`greedy_factorize_oracle`] enumerates every
//! factor-aligned candidate by direct comparison and serves as the reference.

use std::collections::{HashMap, HashSet};

use crate::factorization::{Factor, Factorization};
use crate::suffix::SuffixIndex;

const NONE: u32 = u32::MAX;

/// One extended factor: `E_index` starts at factor `index` and spans `len` symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedFactor {
    pub index: usize,
    pub len: usize,
}

/// Trie over the extended factors of the current prefix parse. A node is
/// marked with the factor index `i` when the string it spells is `E_i`.
#[derive(Debug, Clone)]
pub struct ExtendedFactorTrie {
    children: HashMap<(u32, u32), u32>,
    depth: Vec<u32>,
    marks: Vec<[u32; 2]>,
    /// Marks beyond the second on a node; stays empty for greedy parses.
    overflow: HashMap<u32, Vec<u32>>,
}

impl Default for ExtendedFactorTrie {
    fn default() -> Self {
        ExtendedFactorTrie {
            children: HashMap::new(),
            depth: vec![0],
            marks: vec![[NONE; 2]],
            overflow: HashMap::new(),
        }
    }
}

impl ExtendedFactorTrie {
    const ROOT: u32 = 0;

    fn child(&self, node: u32, symbol: u32) -> Option<u32> {
        self.children.get(&(node, symbol)).copied()
    }

    fn insert(&mut self, s: &[u32], factor: usize) {
        let mut node = Self::ROOT;
        for &c in s {
            node = match self.child(node, c) {
                Some(next) => next,
                None => {
                    let next = self.depth.len() as u32;
                    self.depth.push(self.depth[node as usize] + 1);
                    self.marks.push([NONE; 2]);
                    self.children.insert((node, c), next);
                    next
                }
            };
        }
        let slot = &mut self.marks[node as usize];
        if slot[0] == NONE {
            slot[0] = factor as u32;
        } else if slot[1] == NONE {
            slot[1] = factor as u32;
        } else {
            self.overflow.entry(node).or_default().push(factor as u32);
        }
    }

    /// Whether `s` is one of the marked extended factors.
    fn contains(&self, s: &[u32]) -> bool {
        let mut node = Self::ROOT;
        for &c in s {
            match self.child(node, c) {
                Some(next) => node = next,
                None => return false,
            }
        }
        self.marks[node as usize][0] != NONE
    }

    fn marks_at(&self, node: u32) -> impl Iterator<Item = usize> + '_ {
        let extra = self.overflow.get(&node).map(|v| v.as_slice()).unwrap_or(&[]);
        self.marks[node as usize]
            .iter()
            .chain(extra)
            .take_while(|&&m| m != NONE)
            .map(|&m| m as usize)
    }

    /// All marked extended factors, sorted by factor index.
    pub fn extended_factors(&self) -> Vec<ExtendedFactor> {
        let mut out: Vec<ExtendedFactor> = (0..self.marks.len() as u32)
            .flat_map(|node| {
                self.marks_at(node).map(move |index| ExtendedFactor {
                    index,
                    len: self.depth[node as usize] as usize,
                })
            })
            .collect();
        out.sort();
        out
    }

    pub fn max_marks_per_node(&self) -> usize {
        (0..self.marks.len() as u32)
            .map(|node| self.marks_at(node).count())
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        self.depth.len()
    }
}

/// Greedy LZSE factorization of `text`; `idx` must be built over `text`.
pub fn greedy_factorize(text: &[u32], idx: &SuffixIndex) -> Factorization {
    greedy_factorize_with_trie(text, idx).0
}

/// As [`greedy_factorize`], also returning the final extended-factor trie.
pub fn greedy_factorize_with_trie(
    text: &[u32],
    idx: &SuffixIndex,
) -> (Factorization, ExtendedFactorTrie) {
    assert_eq!(text.len(), idx.len(), "suffix index built over a different text");
    let n = text.len();
    let mut fact = Factorization::empty();
    let mut trie = ExtendedFactorTrie::default();
    // Factor whose extended factor waits for its successor.
    let mut pending: Option<usize> = None;
    let mut p = 0;
    while p < n {
        let bounds = fact.bounds();
        // (len, source start, first factor, factor count)
        let mut best: Option<(usize, usize, usize, usize)> = None;
        let mut node = ExtendedFactorTrie::ROOT;
        let mut depth = 0;
        while p + depth < n {
            match trie.child(node, text[p + depth]) {
                Some(next) => node = next,
                None => break,
            }
            depth += 1;
            for i in trie.marks_at(node) {
                let src = bounds[i];
                let d = idx.lcp_unchecked(p, src).min(p - src);
                let end = bounds.partition_point(|&b| b <= src + d) - 1;
                if end <= i {
                    continue;
                }
                let len = bounds[end] - src;
                let better = match best {
                    None => true,
                    Some((blen, bsrc, _, _)) => len > blen || (len == blen && src < bsrc),
                };
                if better {
                    best = Some((len, src, i, end - i));
                }
            }
        }
        let factor = match best {
            Some((_, _, start, count)) => Factor::Copy { start, count },
            None => Factor::Char(text[p]),
        };
        fact.push(factor);
        let k = fact.len() - 1;
        let bounds = fact.bounds();
        if let Some(prev) = pending.take() {
            trie.insert(&text[bounds[prev]..bounds[k + 1]], prev);
        }
        let fk = &text[bounds[k]..bounds[k + 1]];
        if trie.contains(fk) {
            pending = Some(k);
        } else {
            trie.insert(fk, k);
        }
        p = bounds[k + 1];
    }
    (fact, trie)
}

/// Reference greedy parser: at each step tries every earlier factor as the
/// start of a source, extends it by direct symbol comparison, and keeps the
/// longest factor-aligned match (leftmost on ties).
pub fn greedy_factorize_oracle(text: &[u32]) -> Factorization {
    let n = text.len();
    let mut fact = Factorization::empty();
    let mut p = 0;
    while p < n {
        let bounds = fact.bounds();
        let mut best: Option<(usize, usize, usize)> = None;
        for l in 0..fact.len() {
            let src = bounds[l];
            let m = text[src..p]
                .iter()
                .zip(&text[p..])
                .take_while(|(a, b)| a == b)
                .count();
            let end = bounds.partition_point(|&b| b <= src + m) - 1;
            if end > l {
                let len = bounds[end] - src;
                if best.is_none_or(|(blen, _, _)| len > blen) {
                    best = Some((len, l, end - l));
                }
            }
        }
        fact.push(match best {
            Some((_, start, count)) => Factor::Copy { start, count },
            None => Factor::Char(text[p]),
        });
        p = fact.text_len();
    }
    fact
}

/// Extended factors of a greedy factorization of `text`, by direct string
/// comparison: `E_i = F_i F_{i+1}` if `F_i` equals an earlier extended
/// factor, else `F_i`; a trailing duplicate is dropped.
pub fn compute_extended_factors(fact: &Factorization, text: &[u32]) -> Vec<ExtendedFactor> {
    let z = fact.len();
    let mut seen: HashSet<&[u32]> = HashSet::new();
    let mut out = Vec::with_capacity(z);
    for i in 0..z {
        let fi = &text[fact.start(i)..fact.end(i)];
        let e = if seen.contains(fi) {
            if i + 1 == z {
                break;
            }
            &text[fact.start(i)..fact.end(i + 1)]
        } else {
            fi
        };
        seen.insert(e);
        out.push(ExtendedFactor {
            index: i,
            len: e.len(),
        });
    }
    out
}
