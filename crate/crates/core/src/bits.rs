//! Fixed-length classical bit strings.
//!
//! Bit 0 is the leftmost character of the textual form and corresponds to
//! qubit 0 throughout the crate; for an `n`-bit string the basis index is
//! `sum b_i << (n-1-i)`, i.e. bit 0 is the most significant bit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BitStringError {
    #[error("bit string must not be empty")]
    Empty,
    #[error("invalid character {0:?} in bit string (expected '0' or '1')")]
    InvalidChar(char),
    #[error("bit string length {len} exceeds maximum {max}")]
    TooLong { len: usize, max: usize },
}

/// Longest bit string that still maps onto a simulable register.
pub const MAX_BITS: usize = 12;

/// An immutable string of classical bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    /// All-zero string of length `n`.
    pub fn zeros(n: usize) -> Self {
        BitString(vec![false; n])
    }

    /// Decode the low `n` bits of `value`, bit 0 taking the most significant
    /// position.
    pub fn from_index(value: usize, n: usize) -> Self {
        let bits = (0..n).map(|i| (value >> (n - 1 - i)) & 1 == 1).collect();
        BitString(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Basis-state index of this string (bit 0 most significant).
    pub fn to_index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Bitwise XOR of two equal-length strings.
    pub fn xor(&self, other: &BitString) -> BitString {
        debug_assert_eq!(self.len(), other.len());
        BitString(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a ^ b)
                .collect(),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn parse_checked(s: &str, max: usize) -> Result<Self, BitStringError> {
        if s.is_empty() {
            return Err(BitStringError::Empty);
        }
        if s.len() > max {
            return Err(BitStringError::TooLong { len: s.len(), max });
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(BitStringError::InvalidChar(other)),
            }
        }
        Ok(BitString(bits))
    }
}

impl FromStr for BitString {
    type Err = BitStringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // Parsing is used for keys and payloads alike; both are capped by the
        // register limit only at the point of state construction, so allow
        // longer classical strings here.
        BitString::parse_checked(s, usize::MAX)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let b: BitString = "101".parse().unwrap();
        assert_eq!(b.to_index(), 5);
        assert_eq!(BitString::from_index(5, 3), b);
        assert_eq!(b.to_string(), "101");
    }

    #[test]
    fn bit_zero_is_most_significant() {
        let b: BitString = "100".parse().unwrap();
        assert_eq!(b.to_index(), 4);
        assert!(b.bit(0));
        assert!(!b.bit(2));
    }

    #[test]
    fn xor_and_ones() {
        let a: BitString = "1100".parse().unwrap();
        let b: BitString = "1010".parse().unwrap();
        assert_eq!(a.xor(&b).to_string(), "0110");
        assert_eq!(a.count_ones(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!("".parse::<BitString>(), Err(BitStringError::Empty));
        assert_eq!(
            "01x".parse::<BitString>(),
            Err(BitStringError::InvalidChar('x'))
        );
        assert!(BitString::parse_checked("0101", 3).is_err());
    }

    #[test]
    fn serde_as_string() {
        let b: BitString = "0110".parse().unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, "\"0110\"");
        let back: BitString = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
    }
}
