//! ASCII `0`/`1` encoding of binary sequences and a packed form for hashing.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid bit character {found:?} at offset {offset}")]
pub struct BitParseError {
    pub offset: usize,
    pub found: char,
}

/// One sequence as a line of `0`/`1` characters with no separators.
pub fn to_ascii(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn from_ascii(s: &str) -> Result<Vec<bool>, BitParseError> {
    s.chars()
        .enumerate()
        .map(|(offset, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            found => Err(BitParseError { offset, found }),
        })
        .collect()
}

/// Packs bits into little-endian `u64` words (bit `i` → word `i / 64`).
pub fn pack(bits: &[bool]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
        words[i / 64] |= 1 << (i % 64);
    }
    words
}

pub fn xor(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

pub fn complement(a: &[bool]) -> Vec<bool> {
    a.iter().map(|x| !x).collect()
}
