//! Suffix array, inverse suffix array, LCP array and constant-time
//! longest-common-prefix queries between arbitrary suffixes.

use crate::error::{Error, Result};
use crate::sparse_table::SparseTable;

/// Suffix structures over a text of length `n`. All positions are 0-based.
///
/// `lcp[i]` is the longest common prefix of suffixes `sa[i - 1]` and `sa[i]`,
/// with `lcp[0] = 0`.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    sa: Vec<u32>,
    isa: Vec<u32>,
    lcp: SparseTable<u32>,
}

impl SuffixIndex {
    pub fn new(text: &[u32]) -> Self {
        assert!(text.len() < u32::MAX as usize, "text too long for 32-bit suffix index");
        let sa = suffix_array(text);
        let mut isa = vec![0u32; sa.len()];
        for (rank, &pos) in sa.iter().enumerate() {
            isa[pos as usize] = rank as u32;
        }
        let lcp = kasai(text, &sa, &isa);
        SuffixIndex {
            sa,
            isa,
            lcp: SparseTable::argmin(lcp),
        }
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    pub fn isa(&self) -> &[u32] {
        &self.isa
    }

    pub fn lcp(&self) -> &[u32] {
        self.lcp.values()
    }

    /// Minimum of `lcp[lo..=hi]`, i.e. the common prefix length of all
    /// suffixes ranked `lo - 1 ..= hi`.
    pub fn lcp_range_min(&self, lo: usize, hi: usize) -> usize {
        self.lcp.value(self.lcp.query(lo, hi)) as usize
    }

    /// Length of the longest common prefix of the suffixes starting at `p` and `q`.
    pub fn lcp_suffixes(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.len();
        for pos in [p, q] {
            if pos >= n {
                return Err(Error::OutOfRange { pos, len: n });
            }
        }
        Ok(self.lcp_unchecked(p, q))
    }

    #[inline]
    pub(crate) fn lcp_unchecked(&self, p: usize, q: usize) -> usize {
        if p == q {
            return self.len() - p;
        }
        let (a, b) = (self.isa[p] as usize, self.isa[q] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.lcp_range_min(lo + 1, hi)
    }
}

/// Prefix doubling with stable counting sorts, O(n log n).
fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut alphabet: Vec<u32> = text.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let mut rank: Vec<u32> = text
        .iter()
        .map(|s| alphabet.binary_search(s).unwrap() as u32)
        .collect();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_by_key(|&i| rank[i as usize]);
    let mut classes = alphabet.len();
    let mut tmp = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut count = vec![0usize; n.max(classes) + 1];
    let mut k = 1;
    while classes < n {
        // Order by second key: suffixes without a second half come first.
        order.clear();
        order.extend((n - k..n).map(|i| i as u32));
        order.extend(sa.iter().filter(|&&j| j as usize >= k).map(|&j| j - k as u32));

        count[..=classes].iter_mut().for_each(|c| *c = 0);
        for &i in &order {
            count[rank[i as usize] as usize + 1] += 1;
        }
        for c in 1..=classes {
            count[c] += count[c - 1];
        }
        for &i in &order {
            let r = rank[i as usize] as usize;
            sa[count[r]] = i;
            count[r] += 1;
        }

        let second = |i: usize| if i + k < n { rank[i + k] as i64 } else { -1 };
        tmp[sa[0] as usize] = 0;
        let mut c = 0u32;
        for w in 1..n {
            let (a, b) = (sa[w - 1] as usize, sa[w] as usize);
            if rank[a] != rank[b] || second(a) != second(b) {
                c += 1;
            }
            tmp[b] = c;
        }
        std::mem::swap(&mut rank, &mut tmp);
        classes = c as usize + 1;
        k *= 2;
    }
    sa
}

fn kasai(text: &[u32], sa: &[u32], isa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
