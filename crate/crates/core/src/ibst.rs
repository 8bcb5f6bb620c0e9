//! Interval-biased search trees.
//!
//! An [`Ibst`] stores consecutive half-open intervals `[a_0, a_1), …,
//! [a_{m-1}, a_m)`. The root of every subtree holds the interval containing
//! the midpoint of the subtree's span, so each child spans at most half of
//! its parent and a search ending in interval `x` visits
//! `O(log(span / |x|))` nodes. Node `i` stores interval `i`.
//!
//! A [`Hint`] for a boundary range `[a_i, a_j)` holds three precomputed LCA
//! nodes that let a query known to lie in that range skip the path from the
//! root.

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Ibst {
    bounds: Vec<usize>,
    left: Vec<u32>,
    right: Vec<u32>,
    root: u32,
}

/// Precomputed entry points for searches restricted to `[a_lo, a_hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hint {
    pub lo: usize,
    pub hi: usize,
    /// `lca(v_lo, v_{hi-1})`.
    pub center: usize,
    /// `lca(v_lo, v_{center-1})`, absent when `lo == center`.
    pub left: Option<usize>,
    /// `lca(v_{center+1}, v_{hi-1})`, absent when `center + 1 == hi`.
    pub right: Option<usize>,
}

impl Hint {
    /// Number of node references held by this hint.
    pub fn node_count(&self) -> usize {
        1 + self.left.is_some() as usize + self.right.is_some() as usize
    }
}

impl Ibst {
    /// Builds the tree over `bounds = [a_0, …, a_m]`, `m ≥ 1`.
    pub fn new(bounds: Vec<usize>) -> Result<Self> {
        if bounds.len() < 2 {
            return Err(Error::InvalidArgument(
                "an interval-biased search tree needs at least one interval".into(),
            ));
        }
        if let Some(w) = bounds.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingBoundaries(w + 1));
        }
        let m = bounds.len() - 1;
        let mut tree = Ibst {
            bounds,
            left: vec![NONE; m],
            right: vec![NONE; m],
            root: NONE,
        };
        tree.root = tree.build(0, m);
        Ok(tree)
    }

    fn build(&mut self, lo: usize, hi: usize) -> u32 {
        if lo == hi {
            return NONE;
        }
        let (a_lo, a_hi) = (self.bounds[lo], self.bounds[hi]);
        let mid = a_lo + (a_hi - a_lo) / 2;
        let i = lo + self.bounds[lo..=hi].partition_point(|&a| a <= mid) - 1;
        self.left[i] = self.build(lo, i);
        self.right[i] = self.build(i + 1, hi);
        i as u32
    }

    /// Number of intervals (and nodes), `m`.
    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn root(&self) -> usize {
        self.root as usize
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        (self.left[v] != NONE).then(|| self.left[v] as usize)
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        (self.right[v] != NONE).then(|| self.right[v] as usize)
    }

    pub fn interval(&self, v: usize) -> (usize, usize) {
        (self.bounds[v], self.bounds[v + 1])
    }

    /// Index of the interval containing `q`.
    pub fn search(&self, q: usize) -> Result<usize> {
        self.search_counted(q).map(|(x, _)| x)
    }

    /// Index of the interval containing `q` and the number of visited nodes.
    pub fn search_counted(&self, q: usize) -> Result<(usize, usize)> {
        let (lo, hi) = (self.bounds[0], *self.bounds.last().unwrap());
        if q < lo || q >= hi {
            return Err(Error::QueryOutOfRange { query: q, lo, hi });
        }
        Ok(self.descend(self.root, q))
    }

    #[inline]
    fn descend(&self, mut v: u32, q: usize) -> (usize, usize) {
        let mut visited = 0;
        loop {
            visited += 1;
            let i = v as usize;
            v = if q < self.bounds[i] {
                self.left[i]
            } else if q >= self.bounds[i + 1] {
                self.right[i]
            } else {
                return (i, visited);
            };
            debug_assert_ne!(v, NONE);
        }
    }

    /// Lowest common ancestor of nodes `x ≤ y`: the first node on the root
    /// path whose index lies in `[x, y]`.
    fn lca(&self, x: usize, y: usize) -> usize {
        let mut v = self.root as usize;
        loop {
            if v < x {
                v = self.right[v] as usize;
            } else if v > y {
                v = self.left[v] as usize;
            } else {
                return v;
            }
        }
    }

    /// Hint for the boundary-index range `lo..hi`, i.e. queries in `[a_lo, a_hi)`.
    pub fn hint(&self, lo: usize, hi: usize) -> Result<Hint> {
        if lo >= hi || hi > self.len() {
            return Err(Error::InvalidArgument(format!(
                "hint range {lo}..{hi} is not within 0..{}",
                self.len()
            )));
        }
        let center = self.lca(lo, hi - 1);
        Ok(Hint {
            lo,
            hi,
            center,
            left: (lo < center).then(|| self.lca(lo, center - 1)),
            right: (center + 1 < hi).then(|| self.lca(center + 1, hi - 1)),
        })
    }

    pub fn precompute_hints(&self, ranges: &[(usize, usize)]) -> Result<Vec<Hint>> {
        ranges.iter().map(|&(lo, hi)| self.hint(lo, hi)).collect()
    }

    pub fn search_with_hint(&self, hint: &Hint, q: usize) -> Result<usize> {
        self.search_with_hint_counted(hint, q).map(|(x, _)| x)
    }

    pub fn search_with_hint_counted(&self, hint: &Hint, q: usize) -> Result<(usize, usize)> {
        let (lo, hi) = (self.bounds[hint.lo], self.bounds[hint.hi]);
        if q < lo || q >= hi {
            return Err(Error::QueryOutOfRange { query: q, lo, hi });
        }
        Ok(self.hinted(hint, q))
    }

    #[inline]
    pub(crate) fn hinted(&self, hint: &Hint, q: usize) -> (usize, usize) {
        let c = hint.center;
        if q < self.bounds[c] {
            let (x, v) = self.descend(hint.left.expect("query left of center") as u32, q);
            (x, v + 1)
        } else if q >= self.bounds[c + 1] {
            let (x, v) = self.descend(hint.right.expect("query right of center") as u32, q);
            (x, v + 1)
        } else {
            (c, 1)
        }
    }

    /// Boundary-index range `[lo, hi)` covered by the subtree rooted at `v`.
    pub fn subtree_range(&self, v: usize) -> (usize, usize) {
        let mut lo = v;
        while self.left[lo] != NONE {
            lo = self.left[lo] as usize;
        }
        let mut hi = v;
        while self.right[hi] != NONE {
            hi = self.right[hi] as usize;
        }
        (lo, hi + 1)
    }

    pub fn subtree_span(&self, v: usize) -> usize {
        let (lo, hi) = self.subtree_range(v);
        self.bounds[hi] - self.bounds[lo]
    }
}
