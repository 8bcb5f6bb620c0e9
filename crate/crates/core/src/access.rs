//! `O(log n)` random access over an LZSE factorization.
//!
//! The index combines a global interval-biased search tree over factor
//! positions with one skip structure per heavy path of the derivation DAG.
//! A query first locates its factor from the root of the global tree; each
//! further step skips along a heavy path to the point where the jump
//! sequence leaves it, then follows that one light jump through the global
//! tree using a precomputed hint for the exit interval's source range.

use crate::dag::{compute_path_counts, heavy_paths, select_heavy_edges, HeavyPathDecomposition};
use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization};
use crate::ibst::{Hint, Ibst};

/// Where a jump sequence leaves a heavy path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    /// Through the part of the source left of the next path node (`I_j^L`).
    Left(usize),
    /// Through the part of the source right of the next path node (`I_j^R`).
    Right(usize),
    /// At the last node of the path.
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exit {
    /// Position on the path of the exit factor.
    pub pos: usize,
    /// Offset inside the exit factor.
    pub offset: usize,
    pub kind: ExitKind,
    /// Nodes visited in the path tree.
    pub steps: usize,
}

/// Skip structure for one heavy path `(F_{i_1}, …, F_{i_l})`.
#[derive(Debug, Clone)]
pub struct PathSkipStructure {
    members: Vec<usize>,
    lefts: Vec<usize>,
    rights: Vec<usize>,
    tree: Ibst,
    kinds: Vec<ExitKind>,
    hints: Vec<Hint>,
}

impl PathSkipStructure {
    pub fn new(fact: &Factorization, members: Vec<usize>) -> Result<Self> {
        let len = members.len();
        if len == 0 {
            return Err(Error::InvalidArgument("empty heavy path".into()));
        }
        let mut left_gap = vec![0usize; len];
        let mut right_gap = vec![0usize; len];
        for j in 0..len - 1 {
            let (u, v) = (members[j], members[j + 1]);
            let (src_lo, src_hi) = fact.source(u).ok_or(Error::NotACopy(u))?;
            if fact.start(v) < src_lo || fact.end(v) > src_hi {
                return Err(Error::InvalidArgument(format!(
                    "factor {v} is not inside the source of factor {u}"
                )));
            }
            left_gap[j] = fact.start(v) - src_lo;
            right_gap[j] = src_hi - fact.end(v);
        }
        let mut lefts = vec![0usize; len];
        for j in 1..len {
            lefts[j] = lefts[j - 1] + left_gap[j - 1];
        }
        let mut rights = vec![0usize; len];
        rights[len - 1] = lefts[len - 1] + fact.factor_len(members[len - 1]);
        for j in (0..len - 1).rev() {
            rights[j] = rights[j + 1] + right_gap[j];
        }

        // L_1..L_l, R_l..R_1 with empty intervals dropped.
        let mut bounds = vec![lefts[0]];
        let mut kinds = Vec::new();
        let mut left_idx = vec![0usize; len];
        let mut right_idx = vec![0usize; len];
        let mut push = |value: usize, kind: ExitKind, bounds: &mut Vec<usize>| {
            if value > *bounds.last().unwrap() {
                bounds.push(value);
                kinds.push(kind);
            }
            bounds.len() - 1
        };
        for j in 1..len {
            left_idx[j] = push(lefts[j], ExitKind::Left(j - 1), &mut bounds);
        }
        right_idx[len - 1] = push(rights[len - 1], ExitKind::Final, &mut bounds);
        for j in (0..len - 1).rev() {
            right_idx[j] = push(rights[j], ExitKind::Right(j), &mut bounds);
        }
        let tree = Ibst::new(bounds)?;
        let hints = (0..len)
            .map(|j| tree.hint(left_idx[j], right_idx[j]))
            .collect::<Result<Vec<_>>>()?;
        Ok(PathSkipStructure {
            members,
            lefts,
            rights,
            tree,
            kinds,
            hints,
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn lefts(&self) -> &[usize] {
        &self.lefts
    }

    pub fn rights(&self) -> &[usize] {
        &self.rights
    }

    /// The path intervals in order, each with its exit kind.
    pub fn intervals(&self) -> impl Iterator<Item = ((usize, usize), ExitKind)> + '_ {
        (0..self.tree.len()).map(|x| (self.tree.interval(x), self.kinds[x]))
    }

    /// Exit position of the jump sequence starting at offset `r` of path node `s`.
    pub fn exit_query(&self, s: usize, r: usize) -> Result<Exit> {
        if s >= self.members.len() {
            return Err(Error::OutOfRange {
                pos: s,
                len: self.members.len(),
            });
        }
        let width = self.rights[s] - self.lefts[s];
        if r >= width {
            return Err(Error::OutOfRange { pos: r, len: width });
        }
        Ok(self.exit_unchecked(s, r))
    }

    #[inline]
    fn exit_unchecked(&self, s: usize, r: usize) -> Exit {
        let q = self.lefts[s] + r;
        let (x, steps) = self.tree.hinted(&self.hints[s], q);
        let kind = self.kinds[x];
        let pos = match kind {
            ExitKind::Left(j) | ExitKind::Right(j) => j,
            ExitKind::Final => self.members.len() - 1,
        };
        Exit {
            pos,
            offset: q - self.lefts[pos],
            kind,
            steps,
        }
    }

    fn footprint(&self) -> usize {
        self.tree.len() + self.hints.iter().map(Hint::node_count).sum::<usize>()
    }
}

/// Result of one instrumented access.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AccessTrace {
    pub symbol: u32,
    /// Iterations of the skip-then-jump loop.
    pub iterations: usize,
    /// Nodes visited across all search trees.
    pub steps: usize,
}

#[derive(Debug, Clone)]
pub struct AccessIndex {
    fact: Factorization,
    global: Option<Ibst>,
    source_hints: Vec<Option<Hint>>,
    left_exit_hints: Vec<Option<Hint>>,
    right_exit_hints: Vec<Option<Hint>>,
    decomposition: HeavyPathDecomposition,
    paths: Vec<PathSkipStructure>,
}

impl AccessIndex {
    pub fn new(fact: Factorization) -> Result<Self> {
        let z = fact.len();
        let counts = compute_path_counts(&fact);
        let heavy = select_heavy_edges(&fact, &counts);
        let decomposition = heavy_paths(&fact, &heavy)?;
        let global = if z > 0 {
            Some(Ibst::new(fact.bounds().to_vec())?)
        } else {
            None
        };

        let mut source_hints = vec![None; z];
        let mut left_exit_hints = vec![None; z];
        let mut right_exit_hints = vec![None; z];
        if let Some(tree) = &global {
            for (i, f) in fact.factors().iter().enumerate() {
                let Factor::Copy { start, count } = *f else { continue };
                source_hints[i] = Some(tree.hint(start, start + count)?);
                if let Some(v) = heavy[i] {
                    if start < v {
                        left_exit_hints[i] = Some(tree.hint(start, v)?);
                    }
                    if v + 1 < start + count {
                        right_exit_hints[i] = Some(tree.hint(v + 1, start + count)?);
                    }
                }
            }
        }
        let paths = decomposition
            .paths
            .iter()
            .map(|p| PathSkipStructure::new(&fact, p.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(AccessIndex {
            fact,
            global,
            source_hints,
            left_exit_hints,
            right_exit_hints,
            decomposition,
            paths,
        })
    }

    pub fn factorization(&self) -> &Factorization {
        &self.fact
    }

    pub fn len(&self) -> usize {
        self.fact.text_len()
    }

    pub fn is_empty(&self) -> bool {
        self.fact.text_len() == 0
    }

    pub fn decomposition(&self) -> &HeavyPathDecomposition {
        &self.decomposition
    }

    pub fn path(&self, id: usize) -> &PathSkipStructure {
        &self.paths[id]
    }

    /// Total search-tree nodes plus hint node references.
    pub fn footprint(&self) -> usize {
        let hints = |v: &[Option<Hint>]| v.iter().flatten().map(Hint::node_count).sum::<usize>();
        self.global.as_ref().map_or(0, Ibst::len)
            + hints(&self.source_hints)
            + hints(&self.left_exit_hints)
            + hints(&self.right_exit_hints)
            + self.paths.iter().map(PathSkipStructure::footprint).sum::<usize>()
    }

    pub fn access(&self, p: usize) -> Result<u32> {
        self.access_traced(p).map(|t| t.symbol)
    }

    pub fn access_traced(&self, p: usize) -> Result<AccessTrace> {
        let global = self.global.as_ref().ok_or(Error::OutOfRange { pos: p, len: 0 })?;
        let (mut i, mut steps) = global.search_counted(p)?;
        let mut r = p - self.fact.start(i);
        let mut iterations = 0;
        loop {
            if let Factor::Char(symbol) = self.fact.factor(i) {
                return Ok(AccessTrace {
                    symbol,
                    iterations,
                    steps,
                });
            }
            iterations += 1;
            let (path_id, s) = self.decomposition.locate(i);
            let path = &self.paths[path_id];
            let exit = path.exit_unchecked(s, r);
            steps += exit.steps;
            let u = path.members[exit.pos];
            let hint = match exit.kind {
                ExitKind::Left(_) => self.left_exit_hints[u],
                ExitKind::Right(_) => self.right_exit_hints[u],
                ExitKind::Final => match self.fact.factor(u) {
                    Factor::Char(symbol) => {
                        return Ok(AccessTrace {
                            symbol,
                            iterations,
                            steps,
                        })
                    }
                    Factor::Copy { .. } => self.source_hints[u],
                },
            }
            .expect("exit interval without a hint");
            let q = self.fact.source(u).unwrap().0 + exit.offset;
            let (next, st) = global.hinted(&hint, q);
            steps += st;
            debug_assert!(self.fact.factor_len(next) <= self.fact.factor_len(u));
            debug_assert!(self.fact.factor_len(u) <= self.fact.factor_len(i));
            r = q - self.fact.start(next);
            i = next;
        }
    }

    /// Symbols at positions `range`, one access per position.
    pub fn extract(&self, range: std::ops::Range<usize>) -> Result<Vec<u32>> {
        if range.start >= range.end || range.end > self.len() {
            return Err(Error::InvalidArgument(format!(
                "range {}..{} is not a nonempty part of 0..{}",
                range.start,
                range.end,
                self.len()
            )));
        }
        range.map(|p| self.access(p)).collect()
    }
}
