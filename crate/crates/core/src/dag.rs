//! Derivation DAG of an LZSE factorization and its symmetric centroid path
//! decomposition.
//!
//! Copy factor `i = Copy { start, count }` has an edge to every factor in
//! `start..start + count`. `s[i]` counts the paths from `i` down to char
//! factors (it equals the factor length) and `e[i]` counts the paths from
//! source nodes down to `i`. An edge `(u, v)` to the child with the largest
//! `s` is heavy when `⌊lg s⌋` and `⌊lg e⌋` agree on both ends.

use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization};
use crate::sparse_table::SparseTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCounts {
    pub s: Vec<u64>,
    pub e: Vec<u64>,
    /// Nodes without incoming edges.
    pub is_source: Vec<bool>,
    /// Number of maximal source-to-sink paths, `n_D`.
    pub total: u64,
}

pub fn compute_path_counts(fact: &Factorization) -> PathCounts {
    let z = fact.len();
    let mut s = vec![0u64; z];
    let mut prefix = vec![0u64; z + 1];
    for (i, f) in fact.factors().iter().enumerate() {
        s[i] = match *f {
            Factor::Char(_) => 1,
            Factor::Copy { start, count } => prefix[start + count] - prefix[start],
        };
        prefix[i + 1] = prefix[i] + s[i];
    }

    // Right-to-left sweep: a copy covering l..=r adds its count at r and
    // cancels it again below l.
    let mut add = vec![0u64; z];
    let mut cancel = vec![0u64; z];
    let mut e = vec![0u64; z];
    let mut is_source = vec![false; z];
    let mut running = 0u64;
    for i in (0..z).rev() {
        running += add[i];
        running -= cancel[i];
        e[i] = running;
        if e[i] == 0 {
            e[i] = 1;
            is_source[i] = true;
        }
        if let Factor::Copy { start, count } = fact.factor(i) {
            add[start + count - 1] += e[i];
            if start > 0 {
                cancel[start - 1] += e[i];
            }
        }
    }
    let total = (0..z).filter(|&i| is_source[i]).map(|i| s[i]).sum();
    PathCounts {
        s,
        e,
        is_source,
        total,
    }
}

pub(crate) fn floor_lg(x: u64) -> u32 {
    debug_assert!(x > 0);
    63 - x.leading_zeros()
}

/// Heavy child of every copy factor, or `None`.
pub fn select_heavy_edges(fact: &Factorization, counts: &PathCounts) -> Vec<Option<usize>> {
    if fact.is_empty() {
        return Vec::new();
    }
    let rmq = SparseTable::argmax(counts.s.clone());
    let (s, e) = (&counts.s, &counts.e);
    fact.factors()
        .iter()
        .enumerate()
        .map(|(u, f)| match *f {
            Factor::Char(_) => None,
            Factor::Copy { start, count } => {
                let v = rmq.query(start, start + count - 1);
                let heavy = floor_lg(s[u]) == floor_lg(s[v]) && floor_lg(e[u]) == floor_lg(e[v]);
                heavy.then_some(v)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyPathDecomposition {
    /// Each path lists factor indices from its head down along heavy edges.
    pub paths: Vec<Vec<usize>>,
    /// Factor index to `(path, position in path)`.
    pub locator: Vec<(u32, u32)>,
}

impl HeavyPathDecomposition {
    pub fn locate(&self, factor: usize) -> (usize, usize) {
        let (p, j) = self.locator[factor];
        (p as usize, j as usize)
    }
}

/// Chains heavy edges into maximal paths. Fails if some node has two
/// incoming heavy edges, which the heavy-edge rule never produces.
pub fn heavy_paths(fact: &Factorization, heavy: &[Option<usize>]) -> Result<HeavyPathDecomposition> {
    let z = fact.len();
    if heavy.len() != z {
        return Err(Error::InvalidArgument("heavy child array has wrong length".into()));
    }
    let mut has_parent = vec![false; z];
    for (u, h) in heavy.iter().enumerate() {
        if let Some(v) = *h {
            if v >= u {
                return Err(Error::InvalidArgument(format!("heavy edge {u} -> {v} is not backward")));
            }
            if std::mem::replace(&mut has_parent[v], true) {
                return Err(Error::InvalidArgument(format!(
                    "factor {v} has two incoming heavy edges"
                )));
            }
        }
    }
    let mut paths = Vec::new();
    let mut locator = vec![(0u32, 0u32); z];
    for head in (0..z).filter(|&i| !has_parent[i]) {
        let id = paths.len() as u32;
        let mut path = vec![head];
        let mut v = head;
        while let Some(next) = heavy[v] {
            path.push(next);
            v = next;
        }
        for (j, &f) in path.iter().enumerate() {
            locator[f] = (id, j as u32);
        }
        paths.push(path);
    }
    debug_assert_eq!(paths.iter().map(Vec::len).sum::<usize>(), z);
    Ok(HeavyPathDecomposition { paths, locator })
}

/// Maximum number of light edges on any path of the derivation DAG.
pub fn max_light_edges_on_path(fact: &Factorization, heavy: &[Option<usize>]) -> usize {
    let mut best = vec![0usize; fact.len()];
    for (u, f) in fact.factors().iter().enumerate() {
        if let Factor::Copy { start, count } = *f {
            best[u] = (start..start + count)
                .map(|v| best[v] + usize::from(heavy[u] != Some(v)))
                .max()
                .unwrap_or(0);
        }
    }
    best.into_iter().max().unwrap_or(0)
}
