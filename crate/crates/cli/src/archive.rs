//! Binary archive of an LZSE factorization.
//!
//! ```text
//! "LZSE" | version 0x01 | mode (0 byte, 1 token) | varint n | varint z | z records
//! record: varint 0, symbol (one byte, or a varint in token mode)
//!       | varint k >= 1, varint d   (copy of k factors starting d factors back)
//! ```
//!
//! Varints are unsigned LEB128.

use std::io::Cursor;

use lzse::{Error, Factor, Factorization, Result, SymbolMode};

pub const MAGIC: &[u8; 4] = b"LZSE";
pub const VERSION: u8 = 1;

pub fn serialize(fact: &Factorization, mode: SymbolMode) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(10 + 3 * fact.len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(match mode {
        SymbolMode::Byte => 0,
        SymbolMode::Token => 1,
    });
    let varint = |out: &mut Vec<u8>, v: usize| {
        leb128::write::unsigned(out, v as u64).expect("writing to a Vec cannot fail");
    };
    varint(&mut out, fact.text_len());
    varint(&mut out, fact.len());
    for (i, f) in fact.factors().iter().enumerate() {
        match *f {
            Factor::Char(c) => {
                varint(&mut out, 0);
                match mode {
                    SymbolMode::Byte => out.push(u8::try_from(c).map_err(|_| Error::SymbolTooLarge {
                        symbol: c,
                        mode: mode.name(),
                    })?),
                    SymbolMode::Token => varint(&mut out, c as usize),
                }
            }
            Factor::Copy { start, count } => {
                varint(&mut out, count);
                varint(&mut out, i - start);
            }
        }
    }
    Ok(out)
}

struct Reader<'a> {
    cur: Cursor<&'a [u8]>,
}

impl Reader<'_> {
    fn offset(&self) -> usize {
        self.cur.position() as usize
    }

    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::Archive {
            offset: self.offset(),
            reason: reason.into(),
        }
    }

    fn byte(&mut self) -> Result<u8> {
        let pos = self.offset();
        let b = *self.cur.get_ref().get(pos).ok_or_else(|| self.fail("truncated"))?;
        self.cur.set_position(pos as u64 + 1);
        Ok(b)
    }

    fn varint(&mut self) -> Result<u64> {
        let start = self.offset();
        leb128::read::unsigned(&mut self.cur).map_err(|e| Error::Archive {
            offset: start,
            reason: match e {
                leb128::read::Error::Overflow => "varint overflow".into(),
                leb128::read::Error::IoError(_) => "truncated".into(),
            },
        })
    }

    fn usize(&mut self) -> Result<usize> {
        let start = self.offset();
        usize::try_from(self.varint()?).map_err(|_| Error::Archive {
            offset: start,
            reason: "value too large".into(),
        })
    }
}

/// Parses an archive and checks that it describes a valid factorization of
/// the announced length.
pub fn deserialize(bytes: &[u8]) -> Result<(Factorization, SymbolMode)> {
    let mut r = Reader {
        cur: Cursor::new(bytes),
    };
    if bytes.len() < 4 || &bytes[..4] != MAGIC {
        return Err(r.fail("bad magic"));
    }
    r.cur.set_position(4);
    let version = r.byte()?;
    if version != VERSION {
        return Err(Error::Archive {
            offset: 4,
            reason: format!("unsupported version {version}"),
        });
    }
    let mode = match r.byte()? {
        0 => SymbolMode::Byte,
        1 => SymbolMode::Token,
        m => {
            return Err(Error::Archive {
                offset: 5,
                reason: format!("unknown symbol mode {m}"),
            })
        }
    };
    let n = r.usize()?;
    let z = r.usize()?;
    // every record takes at least two bytes
    let mut factors = Vec::with_capacity(z.min(bytes.len() / 2));
    for i in 0..z {
        let at = r.offset();
        let k = r.usize()?;
        if k == 0 {
            let c = match mode {
                SymbolMode::Byte => r.byte()? as u32,
                SymbolMode::Token => u32::try_from(r.varint()?)
                    .map_err(|_| Error::Archive {
                        offset: at,
                        reason: "token does not fit 32 bits".into(),
                    })?,
            };
            factors.push(Factor::Char(c));
        } else {
            let d = r.usize()?;
            if d == 0 || d > i || k > d {
                return Err(Error::Archive {
                    offset: at,
                    reason: format!("factor {i}: copy of {k} factors from {d} back"),
                });
            }
            factors.push(Factor::Copy { start: i - d, count: k });
        }
    }
    if r.offset() != bytes.len() {
        return Err(r.fail("trailing bytes"));
    }
    let fact = Factorization::new(factors).map_err(|e| Error::Archive {
        offset: bytes.len(),
        reason: format!("validation failed: {e}"),
    })?;
    if fact.text_len() != n {
        return Err(Error::Archive {
            offset: bytes.len(),
            reason: format!("validation failed: factors cover {} symbols, header says {n}", fact.text_len()),
        });
    }
    Ok((fact, mode))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let empty = serialize(&Factorization::empty(), SymbolMode::Byte).unwrap();
        assert_eq!(empty, b"LZSE\x01\x00\x00\x00");
        assert_eq!(deserialize(&empty).unwrap().0.len(), 0);

        let f = Factorization::new(vec![
            Factor::Char(97),
            Factor::Char(98),
            Factor::Copy { start: 0, count: 2 },
        ])
        .unwrap();
        let bytes = serialize(&f, SymbolMode::Byte).unwrap();
        assert_eq!(bytes, b"LZSE\x01\x00\x04\x03\x00a\x00b\x02\x02");
        assert_eq!(deserialize(&bytes).unwrap(), (f.clone(), SymbolMode::Byte));

        let tok = serialize(&f, SymbolMode::Token).unwrap();
        assert_eq!(deserialize(&tok).unwrap(), (f, SymbolMode::Token));
    }

    #[test]
    fn corrupt_archives() {
        let err = deserialize(b"LZSX\x01\x00\x00\x00").unwrap_err();
        assert!(err.to_string().contains("bad magic"));
        let err = deserialize(b"LZSE\x01\x00\x04\x03\x00a\x00b\x02").unwrap_err();
        assert_eq!(
            err,
            Error::Archive {
                offset: 13,
                reason: "truncated".into()
            }
        );
        // header claims 5 symbols
        assert!(deserialize(b"LZSE\x01\x00\x05\x03\x00a\x00b\x02\x02").is_err());
        // reference past the beginning
        assert!(deserialize(b"LZSE\x01\x00\x02\x02\x00a\x01\x02").is_err());
        assert!(deserialize(b"LZSE\x02\x00\x00\x00").is_err());
        assert!(serialize(
            &Factorization::new(vec![Factor::Char(300)]).unwrap(),
            SymbolMode::Byte
        )
        .is_err());
    }
}
