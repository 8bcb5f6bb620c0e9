use super::{Slp, SlpRule};
use crate::error::{Error, Result};

/// Answers of an off-line range-sum instance and the number of semigroup
/// operations spent computing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrspSolution<V> {
    pub answers: Vec<V>,
    pub operations: usize,
}

struct Node<V> {
    delims: u64,
    /// Sum over the symbols before the first delimiter (the whole expansion
    /// if there is none).
    head: Option<V>,
    head_len: u64,
    /// Sum over the symbols after the last delimiter.
    tail: Option<V>,
}

/// Evaluates an instance encoded as `x_1 .. x_m $ x_{l_1} .. x_{r_1} $ .. $`
/// and compressed as an SLP.
///
/// Each rule is summarised by its delimiter count and the sums of its
/// delimiter-free prefix and suffix; query `k` is then the suffix sum of the
/// left child plus the prefix sum of the right child at the unique node
/// whose split point separates delimiter `k` from delimiter `k + 1`. At most
/// two operations are spent per rule, plus one per query.
pub fn orsp_solve_from_slp<V: Clone>(
    slp: &Slp,
    is_delim: impl Fn(u32) -> bool,
    op: impl Fn(&V, &V) -> V,
    lift: impl Fn(u32) -> V,
) -> Result<OrspSolution<V>> {
    let mut ops = 0usize;
    let mut combine = |a: Option<&V>, b: Option<&V>| -> Option<V> {
        match (a, b) {
            (Some(x), Some(y)) => {
                ops += 1;
                Some(op(x, y))
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    };

    let mut nodes: Vec<Node<V>> = Vec::with_capacity(slp.rules().len());
    for r in slp.rules() {
        let node = match *r {
            SlpRule::Terminal(c) if is_delim(c) => Node {
                delims: 1,
                head: None,
                head_len: 0,
                tail: None,
            },
            SlpRule::Terminal(c) => {
                let v = lift(c);
                Node {
                    delims: 0,
                    head: Some(v.clone()),
                    head_len: 1,
                    tail: Some(v),
                }
            }
            SlpRule::Pair(y, z) => {
                let (ny, nz) = (&nodes[y], &nodes[z]);
                if ny.delims == 0 && nz.delims == 0 {
                    let v = combine(ny.head.as_ref(), nz.head.as_ref());
                    Node {
                        delims: 0,
                        head: v.clone(),
                        head_len: ny.head_len + nz.head_len,
                        tail: v,
                    }
                } else {
                    let (head, head_len) = if ny.delims > 0 {
                        (ny.head.clone(), ny.head_len)
                    } else {
                        (
                            combine(ny.head.as_ref(), nz.head.as_ref()),
                            ny.head_len + nz.head_len,
                        )
                    };
                    let tail = if nz.delims > 0 {
                        nz.tail.clone()
                    } else {
                        combine(ny.tail.as_ref(), nz.head.as_ref())
                    };
                    Node {
                        delims: ny.delims + nz.delims,
                        head,
                        head_len,
                        tail,
                    }
                }
            }
        };
        nodes.push(node);
    }

    let Some(root) = slp.start() else {
        return Err(Error::NotOrsp("empty text"));
    };
    let total = nodes[root].delims;
    if total < 2 {
        return Err(Error::NotOrsp("fewer than two delimiters"));
    }
    if nodes[root].tail.is_some() {
        return Err(Error::NotOrsp("text does not end with a delimiter"));
    }
    if nodes[root].head_len != total - 1 {
        return Err(Error::NotOrsp("prefix length differs from the number of queries"));
    }

    let queries = (total - 1) as usize;
    let mut answers: Vec<Option<V>> = vec![None; queries];
    // (rule, delimiters preceding its expansion)
    let mut stack = vec![(root, 0u64)];
    while let Some((x, before)) = stack.pop() {
        let SlpRule::Pair(y, z) = slp.rules()[x] else { continue };
        let (dy, dz) = (nodes[y].delims, nodes[z].delims);
        if dy > 0 && dz > 0 {
            let k = (before + dy - 1) as usize;
            answers[k] = Some(
                combine(nodes[y].tail.as_ref(), nodes[z].head.as_ref())
                    .ok_or(Error::NotOrsp("empty query range"))?,
            );
        }
        if dy >= 2 {
            stack.push((y, before));
        }
        if dz >= 2 {
            stack.push((z, before + dy));
        }
    }
    let answers = answers
        .into_iter()
        .map(|a| a.expect("every delimiter gap is split at some node"))
        .collect();
    Ok(OrspSolution {
        answers,
        operations: ops,
    })
}
