use std::collections::HashMap;

use super::{Cfg, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlpRule {
    Terminal(u32),
    /// Children always have smaller indices than the rule itself.
    Pair(usize, usize),
}

/// A straight-line program: every rule is a single terminal or a pair of
/// earlier rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slp {
    rules: Vec<SlpRule>,
    lens: Vec<u64>,
    start: Option<usize>,
}

impl Slp {
    /// `start` is `None` only for the empty string.
    pub fn new(rules: Vec<SlpRule>, start: Option<usize>) -> Result<Self> {
        let mut lens = Vec::with_capacity(rules.len());
        for (x, r) in rules.iter().enumerate() {
            lens.push(match *r {
                SlpRule::Terminal(_) => 1,
                SlpRule::Pair(y, z) => {
                    if y >= x || z >= x {
                        return Err(Error::Grammar(format!(
                            "rule {x} refers to a rule that does not precede it"
                        )));
                    }
                    lens[y] + lens[z]
                }
            });
        }
        if let Some(s) = start {
            if s >= rules.len() {
                return Err(Error::Grammar(format!("start rule {s} does not exist")));
            }
        }
        Ok(Slp { rules, lens, start })
    }

    pub fn rules(&self) -> &[SlpRule] {
        &self.rules
    }

    pub fn start(&self) -> Option<usize> {
        self.start
    }

    /// Expansion length of rule `x`.
    pub fn rule_len(&self, x: usize) -> u64 {
        self.lens[x]
    }

    pub fn len(&self) -> u64 {
        self.start.map_or(0, |s| self.lens[s])
    }

    pub fn is_empty(&self) -> bool {
        self.start.is_none()
    }

    /// Grammar size: one per terminal rule, two per pair.
    pub fn size(&self) -> usize {
        self.rules
            .iter()
            .map(|r| match r {
                SlpRule::Terminal(_) => 1,
                SlpRule::Pair(..) => 2,
            })
            .sum()
    }

    pub fn expand(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut stack: Vec<usize> = self.start.into_iter().collect();
        while let Some(x) = stack.pop() {
            match self.rules[x] {
                SlpRule::Terminal(c) => out.push(c),
                SlpRule::Pair(y, z) => {
                    stack.push(z);
                    stack.push(y);
                }
            }
        }
        out
    }

    /// The same program as a general grammar.
    pub fn to_cfg(&self) -> Result<Cfg> {
        let mut rules: Vec<Vec<Symbol>> = self
            .rules
            .iter()
            .map(|r| match *r {
                SlpRule::Terminal(c) => vec![Symbol::Terminal(c)],
                SlpRule::Pair(y, z) => vec![Symbol::NonTerminal(y), Symbol::NonTerminal(z)],
            })
            .collect();
        let start = match self.start {
            Some(s) => s,
            None => {
                rules.push(Vec::new());
                rules.len() - 1
            }
        };
        Cfg::new(rules, start)
    }
}

/// Converts a grammar to an SLP generating the same string.
///
/// Long right-hand sides are split into right-nested pairs
/// (`S -> A B C D` becomes `S -> A S1`, `S1 -> B S2`, `S2 -> C D`), every
/// terminal gets one wrapping rule, unit rules are collapsed and nonterminals
/// deriving the empty string are dropped. The result has size at most
/// `2 * g.size()` plus one wrapping rule per distinct terminal.
pub fn cfg_to_slp(g: &Cfg) -> Slp {
    let mut rules: Vec<SlpRule> = Vec::new();
    let mut terminal: HashMap<u32, usize> = HashMap::new();
    // SLP rule standing for each nonterminal; None if it derives the empty string.
    let mut image: Vec<Option<usize>> = vec![None; g.rules().len()];
    for &x in g.topological_order() {
        let mut parts: Vec<usize> = Vec::with_capacity(g.rule(x).len());
        for &s in g.rule(x) {
            match s {
                Symbol::Terminal(c) => {
                    let id = *terminal.entry(c).or_insert_with(|| {
                        rules.push(SlpRule::Terminal(c));
                        rules.len() - 1
                    });
                    parts.push(id);
                }
                Symbol::NonTerminal(y) => parts.extend(image[y]),
            }
        }
        image[x] = match parts.len() {
            0 => None,
            1 => Some(parts[0]),
            k => {
                let mut cur = parts[k - 1];
                for &p in parts[..k - 1].iter().rev() {
                    rules.push(SlpRule::Pair(p, cur));
                    cur = rules.len() - 1;
                }
                Some(cur)
            }
        };
    }
    Slp::new(rules, image[g.start()]).expect("rules are emitted children first")
}
