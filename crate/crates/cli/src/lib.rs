//! Archive and token-file formats shared by the `lzse` binary and its tests.

pub mod archive;
pub mod textfile;
