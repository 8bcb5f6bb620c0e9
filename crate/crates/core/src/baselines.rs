//! Classic LZ77 and LZSS parsers over a suffix index.
//!
//! Both take, at every position, the longest previous occurrence (which may
//! overlap the current position) and among those the leftmost source.

use serde::{Deserialize, Serialize};

use crate::sparse_table::SparseTable;
use crate::suffix::SuffixIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LzssPhrase {
    Literal(u32),
    Copy { src: usize, len: usize },
}

/// A phrase `T[src..src + len]` followed by one explicit symbol. `len` is 0
/// when the symbol has not occurred before.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lz77Phrase {
    pub src: usize,
    pub len: usize,
    pub next: u32,
}

/// Longest previous factor at any position with the leftmost source.
struct PreviousFactors<'a> {
    idx: &'a SuffixIndex,
    psv: Vec<u32>,
    nsv: Vec<u32>,
    min_pos: SparseTable<u32>,
}

const NONE: u32 = u32::MAX;

impl<'a> PreviousFactors<'a> {
    fn new(idx: &'a SuffixIndex) -> Self {
        let sa = idx.sa();
        let n = sa.len();
        let mut psv = vec![NONE; n];
        let mut nsv = vec![NONE; n];
        let mut stack: Vec<usize> = Vec::new();
        for r in 0..n {
            while let Some(&top) = stack.last() {
                if sa[top] > sa[r] {
                    nsv[top] = r as u32;
                    stack.pop();
                } else {
                    break;
                }
            }
            psv[r] = stack.last().map_or(NONE, |&t| t as u32);
            stack.push(r);
        }
        PreviousFactors {
            idx,
            psv,
            nsv,
            min_pos: SparseTable::argmin(sa.to_vec()),
        }
    }

    /// `(src, len)` of the longest earlier occurrence of a prefix of
    /// `T[p..]`, or `len == 0`.
    fn at(&self, p: usize) -> (usize, usize) {
        let sa = self.idx.sa();
        let r = self.idx.isa()[p] as usize;
        let mut best = 0;
        for other in [self.psv[r], self.nsv[r]] {
            if other != NONE {
                best = best.max(self.idx.lcp_unchecked(p, sa[other as usize] as usize));
            }
        }
        if best == 0 {
            return (0, 0);
        }
        (self.leftmost(r, best), best)
    }

    /// Smallest text position whose suffix shares at least `len` symbols with
    /// the suffix of rank `r`.
    fn leftmost(&self, r: usize, len: usize) -> usize {
        let n = self.idx.len();
        // lowest rank lo with min(lcp[lo+1..=r]) >= len
        let (mut a, mut b) = (0, r);
        while a < b {
            let mid = (a + b) / 2;
            if self.idx.lcp_range_min(mid + 1, r) >= len {
                b = mid;
            } else {
                a = mid + 1;
            }
        }
        let lo = a;
        // highest rank hi with min(lcp[r+1..=hi]) >= len
        let (mut a, mut b) = (r, n - 1);
        while a < b {
            let mid = (a + b).div_ceil(2);
            if self.idx.lcp_range_min(r + 1, mid) >= len {
                a = mid;
            } else {
                b = mid - 1;
            }
        }
        let hi = a;
        self.idx.sa()[self.min_pos.query(lo, hi)] as usize
    }
}

pub fn lzss_factorize(text: &[u32], idx: &SuffixIndex) -> Vec<LzssPhrase> {
    let pf = PreviousFactors::new(idx);
    let mut out = Vec::new();
    let mut p = 0;
    while p < text.len() {
        let (src, len) = pf.at(p);
        if len == 0 {
            out.push(LzssPhrase::Literal(text[p]));
            p += 1;
        } else {
            out.push(LzssPhrase::Copy { src, len });
            p += len;
        }
    }
    out
}

pub fn lz77_factorize(text: &[u32], idx: &SuffixIndex) -> Vec<Lz77Phrase> {
    let pf = PreviousFactors::new(idx);
    let n = text.len();
    let mut out = Vec::new();
    let mut p = 0;
    while p < n {
        let (_, longest) = pf.at(p);
        let len = longest.min(n - p - 1);
        let src = if len == 0 {
            0
        } else {
            pf.leftmost(idx.isa()[p] as usize, len)
        };
        out.push(Lz77Phrase {
            src,
            len,
            next: text[p + len],
        });
        p += len + 1;
    }
    out
}

pub fn lzss_decode(phrases: &[LzssPhrase]) -> Vec<u32> {
    let mut out = Vec::new();
    for ph in phrases {
        match *ph {
            LzssPhrase::Literal(c) => out.push(c),
            LzssPhrase::Copy { src, len } => {
                for k in 0..len {
                    out.push(out[src + k]);
                }
            }
        }
    }
    out
}

pub fn lz77_decode(phrases: &[Lz77Phrase]) -> Vec<u32> {
    let mut out = Vec::new();
    for ph in phrases {
        for k in 0..ph.len {
            out.push(out[ph.src + k]);
        }
        out.push(ph.next);
    }
    out
}
