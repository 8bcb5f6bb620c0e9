use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::{Cfg, Symbol};

const NIL: usize = usize::MAX;
const GAP: u64 = u64::MAX;
/// Nonterminal `k` is stored as `NT_BASE + k` in the working sequence.
const NT_BASE: u64 = 1 << 32;

type Pair = (u64, u64);

struct Sequence {
    sym: Vec<u64>,
    prev: Vec<usize>,
    next: Vec<usize>,
}

impl Sequence {
    fn holds(&self, i: usize, (a, b): Pair) -> bool {
        self.sym[i] == a && self.next[i] != NIL && self.sym[self.next[i]] == b
    }
}

/// Drops stale entries from `list` and returns the number of non-overlapping
/// occurrences (counted greedily left to right) and the leftmost position.
fn recount(seq: &Sequence, pair: Pair, list: &mut Vec<usize>) -> (usize, usize) {
    if !list.is_sorted() {
        list.sort_unstable();
    }
    list.dedup();
    list.retain(|&i| seq.holds(i, pair));
    let mut count = 0;
    let mut blocked = NIL;
    for &i in list.iter() {
        if i != blocked {
            count += 1;
            blocked = seq.next[i];
        }
    }
    (count, list.first().copied().unwrap_or(NIL))
}

/// Re-Pair: repeatedly replaces the most frequent adjacent pair by a new
/// nonterminal until every pair occurs at most once.
///
/// Frequencies count non-overlapping occurrences taken left to right; ties are
/// broken by the leftmost first occurrence. The start rule is nonterminal 0
/// and rule `k` (for `k >= 1`) is the `k`-th pair created.
pub fn repair_compress(text: &[u32]) -> Cfg {
    let n = text.len();
    let mut seq = Sequence {
        sym: text.iter().map(|&c| u64::from(c)).collect(),
        prev: (0..n).map(|i| i.wrapping_sub(1)).collect(),
        next: (0..n).map(|i| if i + 1 < n { i + 1 } else { NIL }).collect(),
    };
    let mut occ: HashMap<Pair, Vec<usize>> = HashMap::new();
    for i in 0..n.saturating_sub(1) {
        occ.entry((seq.sym[i], seq.sym[i + 1])).or_default().push(i);
    }
    let mut heap: BinaryHeap<(usize, Reverse<usize>, Pair)> = BinaryHeap::new();
    for (&pair, list) in occ.iter_mut() {
        let (count, first) = recount(&seq, pair, list);
        if count >= 2 {
            heap.push((count, Reverse(first), pair));
        }
    }

    let mut pairs: Vec<Pair> = Vec::new();
    while let Some((count, Reverse(first), pair)) = heap.pop() {
        let Some(list) = occ.get_mut(&pair) else { continue };
        let current = recount(&seq, pair, list);
        if current.0 < 2 {
            occ.remove(&pair);
            continue;
        }
        if current != (count, first) {
            heap.push((current.0, Reverse(current.1), pair));
            continue;
        }
        let z = NT_BASE + pairs.len() as u64;
        pairs.push(pair);
        let list = occ.remove(&pair).unwrap_or_default();
        let mut touched: Vec<Pair> = Vec::new();
        for i in list {
            // Overlapping occurrences of `aa` fail this check once their
            // left neighbour was replaced.
            if !seq.holds(i, pair) {
                continue;
            }
            let j = seq.next[i];
            let before = seq.prev[i];
            let after = seq.next[j];
            seq.sym[i] = z;
            seq.sym[j] = GAP;
            seq.next[i] = after;
            if after != NIL {
                seq.prev[after] = i;
            }
            if before != NIL {
                let p = (seq.sym[before], z);
                occ.entry(p).or_default().push(before);
                touched.push(p);
            }
            if after != NIL {
                let p = (z, seq.sym[after]);
                occ.entry(p).or_default().push(i);
                touched.push(p);
            }
        }
        touched.sort_unstable();
        touched.dedup();
        for p in touched {
            let list = occ.get_mut(&p).expect("just inserted");
            let (count, first) = recount(&seq, p, list);
            if count >= 2 {
                heap.push((count, Reverse(first), p));
            }
        }
    }

    let to_symbol = |s: u64| {
        if s < NT_BASE {
            Symbol::Terminal(s as u32)
        } else {
            Symbol::NonTerminal((s - NT_BASE) as usize + 1)
        }
    };
    let mut rules = Vec::with_capacity(pairs.len() + 1);
    let mut start = Vec::new();
    let mut i = if n == 0 { NIL } else { 0 };
    while i != NIL {
        start.push(to_symbol(seq.sym[i]));
        i = seq.next[i];
    }
    rules.push(start);
    rules.extend(pairs.iter().map(|&(a, b)| vec![to_symbol(a), to_symbol(b)]));
    Cfg::new(rules, 0).expect("pairs only refer to earlier pairs")
}
