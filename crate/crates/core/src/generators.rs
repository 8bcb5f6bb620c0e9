//! String families used by the tests and the `gen` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization};
use crate::text::{SymbolMode, Text};

/// An off-line range-sum instance `x_1 .. x_m $_1 Q_1 $_2 .. $_m Q_m $_{m+1}`
/// with `Q_i = x_{l_i} .. x_{r_i}`.
///
/// Token `k - 1` stands for `x_k` and token `m + i - 1` for `$_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrspInstance {
    pub m: usize,
    /// 1-based inclusive ranges.
    pub queries: Vec<(usize, usize)>,
    pub text: Text,
}

impl OrspInstance {
    pub fn is_delimiter(&self, token: u32) -> bool {
        token as usize >= self.m
    }

    /// Evaluates every query directly, `lift` receiving `k` for `x_k`.
    pub fn direct_answers<V>(&self, op: impl Fn(&V, &V) -> V, lift: impl Fn(usize) -> V) -> Vec<V> {
        self.queries
            .iter()
            .map(|&(l, r)| {
                let mut acc = lift(l);
                for k in l + 1..=r {
                    acc = op(&acc, &lift(k));
                }
                acc
            })
            .collect()
    }
}

/// Builds the instance for `m` and the given queries (one per delimiter gap,
/// so `queries.len()` must equal `m`).
pub fn gen_orsp(m: usize, queries: &[(usize, usize)]) -> Result<OrspInstance> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if queries.len() != m {
        return Err(Error::InvalidArgument(format!(
            "expected {m} queries, got {}",
            queries.len()
        )));
    }
    if u32::try_from(2 * m + 1).is_err() {
        return Err(Error::InvalidArgument("m too large".into()));
    }
    let mut tokens: Vec<u32> = (0..m as u32).collect();
    tokens.push(m as u32);
    for (i, &(l, r)) in queries.iter().enumerate() {
        if !(1 <= l && l <= r && r <= m) {
            return Err(Error::InvalidArgument(format!(
                "query ({l}, {r}) outside 1..={m}"
            )));
        }
        tokens.extend((l - 1) as u32..r as u32);
        tokens.push((m + i + 1) as u32);
    }
    Ok(OrspInstance {
        m,
        queries: queries.to_vec(),
        text: Text::from_tokens(tokens),
    })
}

/// `m` uniformly random ranges.
pub fn random_queries(m: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m)
        .map(|_| {
            let a = rng.gen_range(1..=m);
            let b = rng.gen_range(1..=m);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// The binary string `T_{m-1,m-1}` on which greedy parsing needs
/// `2m^2 - 2m + 7` factors, together with a valid factorization of
/// `m^2 + 6` factors.
#[derive(Debug, Clone)]
pub struct LowerBoundFamily {
    pub m: usize,
    pub text: Text,
    pub alternative: Factorization,
}

pub fn gen_lower_bound_family(m: usize) -> Result<LowerBoundFamily> {
    if !(2..=24).contains(&m) {
        return Err(Error::InvalidArgument(format!("m = {m} outside 2..=24")));
    }
    let (a, b) = (b'a' as u32, b'b' as u32);
    let pow = |k: usize| 1usize << k;
    let mut t: Vec<u32> = Vec::new();
    t.extend(std::iter::repeat_n(a, pow(m + 1)));
    t.extend(std::iter::repeat_n(b, pow(m + 1) + 1));
    for i in 1..m {
        // A_i = a^{2^{m-i+1}} .. a^{2^m}
        let a_i: usize = (m - i + 1..=m).map(pow).sum();
        for j in 1..m {
            t.extend(std::iter::repeat_n(a, a_i));
            t.extend(std::iter::repeat_n(b, pow(j + 1) + 1));
        }
    }

    // a | a | a^2 | .. | a^{2^m}: a^{2^k} is factor k + 1.
    let mut f = vec![Factor::Char(a)];
    f.extend((0..=m).map(|k| Factor::Copy { start: 0, count: if k == 0 { 1 } else { k + 1 } }));
    // b | b | b | b^2 | .. | b^{2^m}: b^{2^k} is factor m + 4 + k.
    let b0 = m + 2;
    f.push(Factor::Char(b));
    f.push(Factor::Copy { start: b0, count: 1 });
    f.push(Factor::Copy { start: b0, count: 1 });
    f.extend((1..=m).map(|k| Factor::Copy { start: b0 + 1, count: k + 1 }));
    // A_i b^{2^{j+1}} b runs from a^{2^{m-i+1}} to b^{2^j}.
    for i in 1..m {
        for j in 1..m {
            f.push(Factor::Copy {
                start: m - i + 2,
                count: i + j + 3,
            });
        }
    }
    let alternative = Factorization::new(f)?;
    alternative.validate(&t)?;
    Ok(LowerBoundFamily {
        m,
        text: Text::new(t, SymbolMode::Byte)?,
        alternative,
    })
}

/// `a^n`.
pub fn gen_unary(n: usize) -> Text {
    Text::from_bytes(&vec![b'a'; n])
}

/// `n` uniform symbols from an alphabet of size `sigma`: the letters
/// `a, b, ..` when `sigma <= 26`, bytes `0..sigma` up to 256, tokens beyond.
pub fn gen_random(n: usize, sigma: u32, seed: u64) -> Result<Text> {
    if sigma == 0 {
        return Err(Error::InvalidArgument("alphabet must be non-empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset = if sigma <= 26 { b'a' as u32 } else { 0 };
    let symbols: Vec<u32> = (0..n).map(|_| offset + rng.gen_range(0..sigma)).collect();
    Ok(if sigma <= 256 {
        Text::new(symbols, SymbolMode::Byte)?
    } else {
        Text::from_tokens(symbols)
    })
}

/// `pattern` repeated `reps` times.
pub fn gen_periodic(pattern: &[u8], reps: usize) -> Text {
    Text::from_bytes(&pattern.repeat(reps))
}

/// A random DNA-like period of length `period` repeated up to length `n`,
/// with every position replaced by a random letter with probability `rate`.
pub fn gen_noisy_periodic(n: usize, period: usize, rate: f64, seed: u64) -> Result<Text> {
    if period == 0 || !(0.0..=1.0).contains(&rate) {
        return Err(Error::InvalidArgument("period must be positive and rate in [0, 1]".into()));
    }
    const ACGT: &[u8; 4] = b"acgt";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: Vec<u8> = (0..period).map(|_| ACGT[rng.gen_range(0..4)]).collect();
    let bytes: Vec<u8> = (0..n)
        .map(|i| {
            if rng.gen_bool(rate) {
                ACGT[rng.gen_range(0..4)]
            } else {
                base[i % period]
            }
        })
        .collect();
    Ok(Text::from_bytes(&bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orsp_templates() {
        let inst = gen_orsp(2, &[(1, 2), (2, 2)]).unwrap();
        assert_eq!(inst.text.symbols(), &[0, 1, 2, 0, 1, 3, 1, 4]);
        let inst = gen_orsp(1, &[(1, 1)]).unwrap();
        assert_eq!(inst.text.symbols(), &[0, 1, 0, 2]);
        assert!(gen_orsp(2, &[(2, 1), (1, 1)]).is_err());
        assert!(gen_orsp(2, &[(1, 3), (1, 1)]).is_err());
        assert!(gen_orsp(2, &[(1, 1)]).is_err());
        assert_eq!(random_queries(5, 9), random_queries(5, 9));
    }

    #[test]
    fn lower_bound_m2() {
        let fam = gen_lower_bound_family(2).unwrap();
        let expected = "a".repeat(8) + &"b".repeat(9) + "aaaa" + "bbbbb";
        assert_eq!(fam.text.to_bytes().unwrap(), expected.as_bytes());
        assert_eq!(fam.alternative.len(), 10);
        assert!(gen_lower_bound_family(1).is_err());
    }

    #[test]
    fn simple_families() {
        assert_eq!(gen_unary(8).to_bytes().unwrap(), b"aaaaaaaa");
        assert_eq!(gen_periodic(b"ab", 3).to_bytes().unwrap(), b"ababab");
        assert_eq!(gen_random(100, 2, 42).unwrap(), gen_random(100, 2, 42).unwrap());
        assert!(gen_random(100, 2, 42)
            .unwrap()
            .symbols()
            .iter()
            .all(|&c| c == 97 || c == 98));
        let t = gen_noisy_periodic(1000, 10, 0.01, 1).unwrap();
        assert_eq!(t.len(), 1000);
    }
}
