//! The LZSE factorization model: factors, positional bookkeeping, decoding,
//! validation and the naive jump-based character access.
//!
//! Factor indices, text positions and in-factor offsets are all 0-based. A
//! copy factor `Copy { start, count }` at index `i` stands for the
//! concatenation of factors `start..start + count`, which must all precede `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::text::{SymbolMode, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Factor {
    Char(u32),
    Copy { start: usize, count: usize },
}

impl Factor {
    pub fn is_copy(&self) -> bool {
        matches!(self, Factor::Copy { .. })
    }
}

/// An immutable, structurally valid LZSE factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Factor>,
    /// `bounds[i]` is the start of factor `i`; `bounds[z]` is the text length.
    bounds: Vec<usize>,
}

/// Checks the structural rules that do not need the text: every copy
/// references a nonempty run of strictly earlier factors.
pub fn check_structure(factors: &[Factor]) -> Result<()> {
    for (i, f) in factors.iter().enumerate() {
        if let Factor::Copy { start, count } = *f {
            if count == 0 {
                return Err(Error::Invalid {
                    index: i,
                    kind: Violation::EmptyCopy,
                });
            }
            if start.checked_add(count).is_none_or(|end| end > i) {
                return Err(Error::Invalid {
                    index: i,
                    kind: Violation::ForwardReference,
                });
            }
        }
    }
    Ok(())
}

impl Factorization {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        check_structure(&factors)?;
        let mut bounds = Vec::with_capacity(factors.len() + 1);
        bounds.push(0usize);
        for f in &factors {
            let len = match *f {
                Factor::Char(_) => 1,
                Factor::Copy { start, count } => bounds[start + count] - bounds[start],
            };
            bounds.push(bounds.last().unwrap() + len);
        }
        Ok(Factorization { factors, bounds })
    }

    pub fn empty() -> Self {
        Factorization {
            factors: Vec::new(),
            bounds: vec![0],
        }
    }

    /// Appends a factor, checking only that it references earlier factors.
    pub(crate) fn push(&mut self, f: Factor) {
        let len = match f {
            Factor::Char(_) => 1,
            Factor::Copy { start, count } => {
                debug_assert!(count > 0 && start + count <= self.factors.len());
                self.bounds[start + count] - self.bounds[start]
            }
        };
        self.factors.push(f);
        self.bounds.push(self.text_len() + len);
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Factor> {
        self.factors
    }

    /// Number of factors, `z`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn text_len(&self) -> usize {
        *self.bounds.last().unwrap()
    }

    /// Factor start positions followed by the text length (monotone, `z + 1` entries).
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn factor(&self, i: usize) -> Factor {
        self.factors[i]
    }

    pub fn start(&self, i: usize) -> usize {
        self.bounds[i]
    }

    /// Exclusive end position of factor `i`.
    pub fn end(&self, i: usize) -> usize {
        self.bounds[i + 1]
    }

    pub fn factor_len(&self, i: usize) -> usize {
        self.bounds[i + 1] - self.bounds[i]
    }

    /// Half-open text interval a copy factor copies from.
    pub fn source(&self, i: usize) -> Option<(usize, usize)> {
        match self.factors[i] {
            Factor::Char(_) => None,
            Factor::Copy { start, count } => Some((self.bounds[start], self.bounds[start + count])),
        }
    }

    pub fn copy_count(&self) -> usize {
        self.factors.iter().filter(|f| f.is_copy()).count()
    }

    /// Largest symbol used by a char factor, if any.
    pub fn max_symbol(&self) -> Option<u32> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                Factor::Char(c) => Some(*c),
                _ => None,
            })
            .max()
    }

    /// `rel(p)`: the factor containing `p` and the offset of `p` inside it.
    pub fn locate(&self, p: usize) -> Result<(usize, usize)> {
        if p >= self.text_len() {
            return Err(Error::OutOfRange {
                pos: p,
                len: self.text_len(),
            });
        }
        let i = self.bounds.partition_point(|&b| b <= p) - 1;
        Ok((i, p - self.bounds[i]))
    }

    /// Maps offset `r` of copy factor `i` to the factor and offset it copies from.
    pub fn jump(&self, i: usize, r: usize) -> Result<(usize, usize)> {
        let (src, _) = self.source(i).ok_or(Error::NotACopy(i))?;
        if r >= self.factor_len(i) {
            return Err(Error::OutOfRange {
                pos: r,
                len: self.factor_len(i),
            });
        }
        self.locate(src + r)
    }

    /// Follows the jump sequence from `rel(p)` down to a char factor.
    pub fn access_naive(&self, p: usize) -> Result<u32> {
        let (mut i, mut r) = self.locate(p)?;
        loop {
            match self.factors[i] {
                Factor::Char(c) => return Ok(c),
                Factor::Copy { .. } => (i, r) = self.jump(i, r)?,
            }
        }
    }

    pub fn decode_symbols(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::with_capacity(self.text_len());
        for (i, f) in self.factors.iter().enumerate() {
            match *f {
                Factor::Char(c) => out.push(c),
                Factor::Copy { .. } => {
                    let (lo, hi) = self.source(i).unwrap();
                    out.extend_from_within(lo..hi);
                }
            }
        }
        out
    }

    pub fn decode(&self, mode: SymbolMode) -> Result<Text> {
        Text::new(self.decode_symbols(), mode)
    }

    /// Checks that this factorization describes `text`: total length, every
    /// char factor's symbol, and that each copy's source equals its target.
    pub fn validate(&self, text: &[u32]) -> Result<()> {
        for (i, f) in self.factors.iter().enumerate() {
            let (lo, hi) = (self.start(i), self.end(i));
            if hi > text.len() {
                return Err(Error::Invalid {
                    index: i,
                    kind: Violation::LengthMismatch,
                });
            }
            let ok = match *f {
                Factor::Char(c) => text[lo] == c,
                Factor::Copy { .. } => {
                    let (slo, shi) = self.source(i).unwrap();
                    text[slo..shi] == text[lo..hi]
                }
            };
            if !ok {
                return Err(Error::Invalid {
                    index: i,
                    kind: Violation::SourceMismatch,
                });
            }
        }
        if self.text_len() != text.len() {
            return Err(Error::Invalid {
                index: self.len(),
                kind: Violation::LengthMismatch,
            });
        }
        Ok(())
    }
}
