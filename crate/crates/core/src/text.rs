use crate::error::{Error, Result};

/// How symbols are stored on disk and which values they may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolMode {
    /// Symbols are bytes, `0..=255`.
    Byte,
    /// Symbols are arbitrary 32-bit tokens.
    Token,
}

impl SymbolMode {
    pub fn name(self) -> &'static str {
        match self {
            SymbolMode::Byte => "byte",
            SymbolMode::Token => "token",
        }
    }

    pub fn admits(self, symbol: u32) -> bool {
        match self {
            SymbolMode::Byte => symbol < 256,
            SymbolMode::Token => true,
        }
    }
}

/// A string over byte or token symbols. Positions are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Vec<u32>,
    mode: SymbolMode,
}

impl Text {
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Text {
            symbols: bytes.iter().map(|&b| u32::from(b)).collect(),
            mode: SymbolMode::Byte,
        }
    }

    pub fn from_tokens(tokens: Vec<u32>) -> Self {
        Text {
            symbols: tokens,
            mode: SymbolMode::Token,
        }
    }

    pub fn new(symbols: Vec<u32>, mode: SymbolMode) -> Result<Self> {
        if let Some(&symbol) = symbols.iter().find(|&&s| !mode.admits(s)) {
            return Err(Error::SymbolTooLarge {
                symbol,
                mode: mode.name(),
            });
        }
        Ok(Text { symbols, mode })
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }

    pub fn mode(&self) -> SymbolMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Bytes of a byte-mode text. Token texts return `None`.
    pub fn to_bytes(&self) -> Option<Vec<u8>> {
        match self.mode {
            SymbolMode::Byte => Some(self.symbols.iter().map(|&s| s as u8).collect()),
            SymbolMode::Token => None,
        }
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::from_bytes(s.as_bytes())
    }
}

impl std::ops::Index<usize> for Text {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.symbols[i]
    }
}
