#![allow(dead_code)]

use lzse::grammar::{Cfg, Symbol};
use lzse::{Factor, Factorization};
use rand::Rng;

/// A random valid factorization with at most `z` factors whose text stays
/// below `max_len` symbols. Not greedy in general.
pub fn random_factorization(rng: &mut impl Rng, z: usize, sigma: u32, max_len: usize) -> Factorization {
    let mut factors = Vec::with_capacity(z);
    let mut lens: Vec<usize> = Vec::with_capacity(z);
    let mut total = 0usize;
    for i in 0..z {
        let mut f = Factor::Char(rng.gen_range(0..sigma));
        if i > 0 && rng.gen_bool(0.7) {
            let start = rng.gen_range(0..i);
            let count = rng.gen_range(1..=(i - start).min(6));
            let len: usize = lens[start..start + count].iter().sum();
            if total + len <= max_len {
                f = Factor::Copy { start, count };
            }
        }
        let len = match f {
            Factor::Char(_) => 1,
            Factor::Copy { start, count } => lens[start..start + count].iter().sum(),
        };
        if total + len > max_len {
            break;
        }
        total += len;
        lens.push(len);
        factors.push(f);
    }
    Factorization::new(factors).unwrap()
}

pub fn random_text(rng: &mut impl Rng, n: usize, sigma: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

/// A random acyclic grammar with start symbol 0 whose expansion has at most
/// `max_len` symbols.
pub fn random_grammar(rng: &mut impl Rng, max_len: u64) -> Cfg {
    loop {
        let k = rng.gen_range(1..10);
        let rules: Vec<Vec<Symbol>> = (0..k)
            .map(|x| {
                let len = rng.gen_range(if x == 0 { 1 } else { 0 }..6);
                (0..len)
                    .map(|_| {
                        if x + 1 < k && rng.gen_bool(0.5) {
                            Symbol::NonTerminal(rng.gen_range(x + 1..k))
                        } else {
                            Symbol::Terminal(rng.gen_range(0..3))
                        }
                    })
                    .collect()
            })
            .collect();
        let g = Cfg::new(rules, 0).unwrap();
        if g.expansion_lengths()[0] <= max_len {
            return g;
        }
    }
}

pub fn lg(x: f64) -> f64 {
    x.log2()
}
