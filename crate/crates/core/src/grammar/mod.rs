//! Context-free grammars that generate a single string, their conversion to
//! straight-line programs and to LZSE factorizations, a Re-Pair compressor,
//! and a range-sum evaluator over SLPs.

mod orsp;
mod repair;
mod slp;
mod text_format;

pub use orsp::{orsp_solve_from_slp, OrspSolution};
pub use repair::repair_compress;
pub use slp::{cfg_to_slp, Slp, SlpRule};

use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Terminal(u32),
    NonTerminal(usize),
}

/// A grammar with exactly one production per nonterminal and an acyclic
/// derivation relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    rules: Vec<Vec<Symbol>>,
    names: Vec<String>,
    start: usize,
    /// Nonterminals ordered so that every rule only mentions earlier ones.
    order: Vec<usize>,
}

impl Cfg {
    /// Builds a grammar with generated names (`S` for the start symbol, `R<i>` otherwise).
    pub fn new(rules: Vec<Vec<Symbol>>, start: usize) -> Result<Self> {
        let names = (0..rules.len())
            .map(|i| if i == start { "S".to_string() } else { format!("R{i}") })
            .collect();
        Self::with_names(rules, names, start)
    }

    pub fn with_names(rules: Vec<Vec<Symbol>>, names: Vec<String>, start: usize) -> Result<Self> {
        if start >= rules.len() {
            return Err(Error::Grammar(format!("start symbol {start} has no rule")));
        }
        if names.len() != rules.len() {
            return Err(Error::Grammar("one name per rule required".into()));
        }
        for (x, rhs) in rules.iter().enumerate() {
            for s in rhs {
                if let Symbol::NonTerminal(y) = *s {
                    if y >= rules.len() {
                        return Err(Error::Grammar(format!(
                            "rule {} references undefined nonterminal {y}",
                            names[x]
                        )));
                    }
                }
            }
        }
        let order = topological_order(&rules, &names)?;
        Ok(Cfg {
            rules,
            names,
            start,
            order,
        })
    }

    pub fn rules(&self) -> &[Vec<Symbol>] {
        &self.rules
    }

    pub fn rule(&self, x: usize) -> &[Symbol] {
        &self.rules[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Nonterminals in an order where each rule mentions only earlier nonterminals.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    /// Total number of symbols on right-hand sides.
    pub fn size(&self) -> usize {
        self.rules.iter().map(Vec::len).sum()
    }

    /// Length of every nonterminal's expansion.
    pub fn expansion_lengths(&self) -> Vec<u64> {
        let mut len = vec![0u64; self.rules.len()];
        for &x in &self.order {
            len[x] = self.rules[x]
                .iter()
                .map(|s| match *s {
                    Symbol::Terminal(_) => 1,
                    Symbol::NonTerminal(y) => len[y],
                })
                .sum();
        }
        len
    }

    /// The unique string generated by the start symbol.
    pub fn expand(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut stack: Vec<Symbol> = self.rules[self.start].iter().rev().copied().collect();
        while let Some(s) = stack.pop() {
            match s {
                Symbol::Terminal(c) => out.push(c),
                Symbol::NonTerminal(y) => stack.extend(self.rules[y].iter().rev().copied()),
            }
        }
        out
    }
}

fn topological_order(rules: &[Vec<Symbol>], names: &[String]) -> Result<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark = vec![Mark::New; rules.len()];
    let mut order = Vec::with_capacity(rules.len());
    for root in 0..rules.len() {
        if mark[root] != Mark::New {
            continue;
        }
        // (nonterminal, next child to inspect)
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Open;
        while let Some(&mut (x, ref mut k)) = stack.last_mut() {
            if let Some(&s) = rules[x].get(*k) {
                *k += 1;
                if let Symbol::NonTerminal(y) = s {
                    match mark[y] {
                        Mark::New => {
                            mark[y] = Mark::Open;
                            stack.push((y, 0));
                        }
                        Mark::Open => {
                            return Err(Error::Grammar(format!(
                                "cyclic derivation through {}",
                                names[y]
                            )))
                        }
                        Mark::Done => {}
                    }
                }
            } else {
                mark[x] = Mark::Done;
                order.push(x);
                stack.pop();
            }
        }
    }
    Ok(order)
}

/// Converts a grammar to an LZSE factorization of its expansion with at most
/// `g.size()` factors.
///
/// The derivation tree is walked depth first. The first occurrence of each
/// nonterminal is expanded and the factor range its leaves produce is
/// recorded; every later occurrence becomes one copy of that range.
/// Terminal leaves become char factors.
pub fn grammar_to_lzse(g: &Cfg) -> Factorization {
    enum Step {
        Visit(Symbol),
        Close(usize, usize),
    }
    let mut first: Vec<Option<(usize, usize)>> = vec![None; g.rules.len()];
    let mut factors: Vec<Factor> = Vec::new();
    let mut stack = vec![Step::Visit(Symbol::NonTerminal(g.start))];
    while let Some(step) = stack.pop() {
        match step {
            Step::Visit(Symbol::Terminal(c)) => factors.push(Factor::Char(c)),
            Step::Visit(Symbol::NonTerminal(x)) => match first[x] {
                Some((_, 0)) => {}
                Some((start, count)) => factors.push(Factor::Copy { start, count }),
                None => {
                    stack.push(Step::Close(x, factors.len()));
                    stack.extend(g.rules[x].iter().rev().map(|&s| Step::Visit(s)));
                }
            },
            Step::Close(x, begin) => first[x] = Some((begin, factors.len() - begin)),
        }
    }
    Factorization::new(factors).expect("grammar decomposition yields backward references")
}

pub use text_format::{format_grammar, parse_grammar};
