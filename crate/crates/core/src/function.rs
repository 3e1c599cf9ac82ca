//! Truth-table model of Boolean functions `F_2^n -> F_2`.
//!
//! Point `x` is identified with the integer index whose bit `j` is coordinate
//! `j` of `x`, so the vector sum `x + u` is the index XOR `i ^ u`. Table bit
//! `i` is stored at bit `i % 64` of word `i / 64`, least-significant first.

use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARIABLES: u32 = 30;

/// Index of a point of `F_2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointIndex(usize);

impl PointIndex {
    pub const fn new(value: usize) -> Self {
        PointIndex(value)
    }

    pub const fn value(self) -> usize {
        self.0
    }

    /// Dot product `x . u` over `F_2`.
    pub fn dot(self, other: PointIndex) -> bool {
        (self.0 & other.0).count_ones() & 1 == 1
    }
}

impl From<usize> for PointIndex {
    fn from(value: usize) -> Self {
        PointIndex(value)
    }
}

impl BitXor for PointIndex {
    type Output = PointIndex;

    fn bitxor(self, rhs: PointIndex) -> PointIndex {
        PointIndex(self.0 ^ rhs.0)
    }
}

impl fmt::Display for PointIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// External encodings of a truth table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// One `'0'`/`'1'` character per table bit; ASCII whitespace is ignored.
    Ascii01,
    /// Packed bytes, bit `i` at bit `i % 8` of byte `i / 8`.
    Raw,
    /// The raw bytes as hexadecimal digits, two per byte.
    Hex,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "ascii01" => Ok(Format::Ascii01),
            "raw" => Ok(Format::Raw),
            "hex" => Ok(Format::Hex),
            other => Err(format!("unknown format '{other}' (expected ascii01, raw or hex)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Ascii01 => "ascii01",
            Format::Raw => "raw",
            Format::Hex => "hex",
        })
    }
}

/// A Boolean function on `n` variables stored as a packed truth table.
///
/// Values are immutable once built; every constructor enforces that bits past
/// `2^n` in the last word are zero, so word-level operations never see padding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

fn check_dimension(n: u32) -> Result<()> {
    if (1..=MAX_VARIABLES).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidDimension { n, min: 1, max: MAX_VARIABLES })
    }
}

fn word_count(n: u32) -> usize {
    ((1usize << n) + 63) / 64
}

fn last_word_mask(n: u32) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

impl BooleanFunction {
    /// The constant-zero function.
    pub fn zero(n: u32) -> Result<Self> {
        check_dimension(n)?;
        Ok(BooleanFunction { n, words: vec![0; word_count(n)] })
    }

    pub fn constant(n: u32, value: bool) -> Result<Self> {
        let mut f = Self::zero(n)?;
        if value {
            f.words.iter_mut().for_each(|w| *w = u64::MAX);
            f.clear_padding();
        }
        Ok(f)
    }

    /// The affine function `x -> mask . x + constant`.
    pub fn affine(n: u32, mask: PointIndex, constant: bool) -> Result<Self> {
        check_dimension(n)?;
        if mask.value() >> n != 0 {
            return Err(Error::IndexOutOfRange { index: mask.value(), n });
        }
        Ok(Self::from_fn(n, |x| x.dot(mask) ^ constant)?)
    }

    /// Builds the table by evaluating `f` at every point in index order.
    pub fn from_fn(n: u32, mut f: impl FnMut(PointIndex) -> bool) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for i in 0..out.len() {
            if f(PointIndex(i)) {
                out.words[i >> 6] |= 1 << (i & 63);
            }
        }
        Ok(out)
    }

    /// Takes table bits from an iterator; the iterator must yield exactly `2^n` bits.
    pub fn from_bits(n: u32, bits: impl IntoIterator<Item = bool>) -> Result<Self> {
        let mut out = Self::zero(n)?;
        let len = out.len();
        let mut found = 0usize;
        for bit in bits {
            if found < len && bit {
                out.words[found >> 6] |= 1 << (found & 63);
            }
            found += 1;
        }
        if found != len {
            return Err(Error::LengthMismatch { n, expected: len, found });
        }
        Ok(out)
    }

    /// Wraps packed words. Bits beyond `2^n` in the final word are cleared.
    pub fn from_words(n: u32, words: Vec<u64>) -> Result<Self> {
        check_dimension(n)?;
        let expected = word_count(n);
        if words.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                expected: 1 << n,
                found: words.len() * 64,
            });
        }
        let mut out = BooleanFunction { n, words };
        out.clear_padding();
        Ok(out)
    }

    fn clear_padding(&mut self) {
        let mask = last_word_mask(self.n);
        if let Some(last) = self.words.last_mut() {
            *last &= mask;
        }
    }

    /// Number of variables.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Table length `l = 2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Table bit at `i`; panics if `i >= 2^n`.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len(), "point index {i} out of range for n = {}", self.n);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    pub fn evaluate(&self, x: PointIndex) -> Result<bool> {
        if x.0 >= self.len() {
            return Err(Error::IndexOutOfRange { index: x.0, n: self.n });
        }
        Ok(self.bit(x.0))
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| (self.words[i >> 6] >> (i & 63)) & 1 == 1)
    }

    /// Hamming weight of the table.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Number of points where `self` and `other` differ.
    pub fn distance(&self, other: &BooleanFunction) -> u64 {
        assert_eq!(self.n, other.n, "distance between functions of different arity");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum()
    }

    /// Inverts table bit `i`.
    pub(crate) fn flip_in_place(&mut self, i: usize) {
        self.words[i >> 6] ^= 1 << (i & 63);
    }

    /// `(-1)^f(x)` for every point, as `+1`/`-1`.
    pub fn sign_vector<T: From<i8>>(&self) -> Vec<T> {
        self.bits().map(|b| T::from(if b { -1 } else { 1 })).collect()
    }

    /// SHA-256 of the raw serialization, lowercase hex.
    pub fn table_hash(&self) -> String {
        let digest = Sha256::digest(self.serialize(Format::Raw));
        format!("{digest:x}")
    }

    pub fn parse(input: &[u8], format: Format, n: u32) -> Result<Self> {
        check_dimension(n)?;
        match format {
            Format::Ascii01 => {
                let mut bits = Vec::with_capacity(1 << n);
                for (offset, &byte) in input.iter().enumerate() {
                    match byte {
                        b'0' => bits.push(false),
                        b'1' => bits.push(true),
                        b' ' | b'\t' | b'\r' | b'\n' => {}
                        _ => return Err(Error::InvalidCharacter { offset, byte }),
                    }
                }
                Self::from_bits(n, bits)
            }
            Format::Raw => Self::from_raw(input, n),
            Format::Hex => {
                let mut digits = Vec::with_capacity(input.len());
                for (offset, &byte) in input.iter().enumerate() {
                    let value = match byte {
                        b'0'..=b'9' => byte - b'0',
                        b'a'..=b'f' => byte - b'a' + 10,
                        b'A'..=b'F' => byte - b'A' + 10,
                        b' ' | b'\t' | b'\r' | b'\n' => continue,
                        _ => return Err(Error::InvalidCharacter { offset, byte }),
                    };
                    digits.push(value);
                }
                if digits.len() % 2 != 0 {
                    return Err(Error::LengthMismatch {
                        n,
                        expected: 1 << n,
                        found: digits.len() * 4,
                    });
                }
                let bytes: Vec<u8> = digits.chunks(2).map(|p| (p[0] << 4) | p[1]).collect();
                Self::from_raw(&bytes, n)
            }
        }
    }

    fn from_raw(bytes: &[u8], n: u32) -> Result<Self> {
        let len = 1usize << n;
        let expected_bytes = (len + 7) / 8;
        let mismatch = Error::LengthMismatch { n, expected: len, found: bytes.len() * 8 };
        if bytes.len() != expected_bytes {
            return Err(mismatch);
        }
        // Tables shorter than a byte must leave the padding bits clear.
        if len < 8 && bytes[0] >> len != 0 {
            return Err(mismatch);
        }
        let mut words = vec![0u64; word_count(n)];
        for (k, &b) in bytes.iter().enumerate() {
            words[k / 8] |= u64::from(b) << (8 * (k % 8));
        }
        Self::from_words(n, words)
    }

    pub fn serialize(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Ascii01 => self.bits().map(|b| if b { b'1' } else { b'0' }).collect(),
            Format::Raw => {
                let nbytes = (self.len() + 7) / 8;
                self.words
                    .iter()
                    .flat_map(|w| w.to_le_bytes())
                    .take(nbytes)
                    .collect()
            }
            Format::Hex => {
                const DIGITS: &[u8; 16] = b"0123456789abcdef";
                self.serialize(Format::Raw)
                    .into_iter()
                    .flat_map(|b| [DIGITS[usize::from(b >> 4)], DIGITS[usize::from(b & 15)]])
                    .collect()
            }
        }
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 8 {
            write!(f, "BooleanFunction(n={}, {})", self.n, self)
        } else {
            write!(f, "BooleanFunction(n={}, sha256={})", self.n, self.table_hash())
        }
    }
}

/// Prints the truth table as `0`/`1` characters.
impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
