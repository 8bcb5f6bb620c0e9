//! On-disk texts. Byte texts are stored verbatim; token texts as
//! `"LZTK" | u64 LE length | u32 LE symbols`.

use std::io::{Cursor, Read};

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use lzse::{Error, Result, SymbolMode, Text};

pub const TOKEN_MAGIC: &[u8; 4] = b"LZTK";

/// Reads a token file if `bytes` carries a well-formed token header, and a
/// byte text otherwise.
pub fn parse_text(bytes: &[u8]) -> Text {
    decode_tokens(bytes).unwrap_or_else(|| Text::from_bytes(bytes))
}

fn decode_tokens(bytes: &[u8]) -> Option<Text> {
    let body = bytes.strip_prefix(TOKEN_MAGIC)?;
    let mut cur = Cursor::new(body);
    let n = usize::try_from(cur.read_u64::<LittleEndian>().ok()?).ok()?;
    if (body.len() - 8) / 4 != n || (body.len() - 8) % 4 != 0 {
        return None;
    }
    let mut tokens = vec![0u32; n];
    cur.read_u32_into::<LittleEndian>(&mut tokens).ok()?;
    Some(Text::from_tokens(tokens))
}

pub fn encode_text(text: &Text) -> Vec<u8> {
    match text.mode() {
        SymbolMode::Byte => text.to_bytes().expect("byte mode"),
        SymbolMode::Token => {
            let mut out = Vec::with_capacity(12 + 4 * text.len());
            out.extend_from_slice(TOKEN_MAGIC);
            out.write_u64::<LittleEndian>(text.len() as u64).unwrap();
            for &t in text.symbols() {
                out.write_u32::<LittleEndian>(t).unwrap();
            }
            out
        }
    }
}

pub fn read_text(path: &std::path::Path) -> Result<Text> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Ok(parse_text(&bytes))
}
