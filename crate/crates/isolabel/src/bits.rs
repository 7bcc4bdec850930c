//! Bit-exact primitives for label serialization: fixed-width fields,
//! self-delimiting Elias-gamma integers, the unary run bijection used by the
//! flat scheme, and base-3 trit packing used by the hierarchical scheme.
//!
//! Bit order is most-significant-first throughout; hex dumps pad the final
//! byte with zero bits.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A finite sequence of bits, MSB-first within each byte.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    bytes: Vec<u8>,
    len: usize,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[self.len / 8] |= 1 << (7 - (self.len % 8));
        }
        self.len += 1;
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        if i >= self.len {
            return None;
        }
        Some(self.bytes[i / 8] & (1 << (7 - (i % 8))) != 0)
    }

    pub fn append(&mut self, other: &BitString) {
        for i in 0..other.len {
            self.push(other.get(i).unwrap());
        }
    }

    /// Underlying bytes; unused trailing bits of the last byte are zero.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn cursor(&self) -> BitCursor<'_> {
        BitCursor { bits: self, pos: 0 }
    }

    /// Hex dump, MSB-first, zero-padded to full bytes.
    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    /// Parse a hex dump of exactly `len` bits. Rejects wrong byte counts and
    /// nonzero padding bits, so the mapping hex ↔ (bits, len) is a bijection.
    pub fn from_hex(hex: &str, len: usize) -> Result<Self> {
        let expected_bytes = len.div_ceil(8);
        if hex.len() != expected_bytes * 2 {
            return Err(Error::Malformed(format!(
                "hex literal has {} chars, expected {} for {} bits",
                hex.len(),
                expected_bytes * 2,
                len
            )));
        }
        let mut bytes = Vec::with_capacity(expected_bytes);
        for i in 0..expected_bytes {
            let b = u8::from_str_radix(&hex[2 * i..2 * i + 2], 16)
                .map_err(|_| Error::Malformed(format!("bad hex literal `{hex}`")))?;
            bytes.push(b);
        }
        let bs = BitString { bytes, len };
        for i in len..expected_bytes * 8 {
            if bs.bytes[i / 8] & (1 << (7 - (i % 8))) != 0 {
                return Err(Error::Malformed("nonzero padding bits".into()));
            }
        }
        Ok(bs)
    }

    /// Parse a string of '0'/'1' characters (test and example convenience).
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let mut bs = BitString::new();
        for c in s.chars() {
            match c {
                '0' => bs.push(false),
                '1' => bs.push(true),
                _ => return Err(Error::Malformed(format!("bad bit character `{c}`"))),
            }
        }
        Ok(bs)
    }

    /// Append `value` as a big-endian field of exactly `width` bits.
    pub fn write_fixed(&mut self, value: u64, width: u32) -> Result<()> {
        if width > 64 {
            return Err(Error::Guard {
                name: "fixed field width",
                value: width as usize,
                max: 64,
            });
        }
        if width < 64 && value >= (1u64 << width) {
            return Err(Error::FixedOverflow { value, width });
        }
        for j in (0..width).rev() {
            self.push((value >> j) & 1 == 1);
        }
        Ok(())
    }

    /// Append the Elias-gamma code of `value` (>= 1): floor(log2 v) zeros
    /// followed by the binary expansion of v. Self-delimiting, 2·floor(log2 v)+1 bits.
    pub fn write_gamma(&mut self, value: u64) -> Result<()> {
        if value == 0 {
            return Err(Error::GammaZero);
        }
        let nbits = 64 - value.leading_zeros();
        for _ in 0..nbits - 1 {
            self.push(false);
        }
        for j in (0..nbits).rev() {
            self.push((value >> j) & 1 == 1);
        }
        Ok(())
    }

    /// Append one run per magnitude: a 1 followed by b_i zeros.
    pub fn write_runs(&mut self, magnitudes: &[u64]) {
        for &b in magnitudes {
            self.push(true);
            for _ in 0..b {
                self.push(false);
            }
        }
    }

    /// Append the trits as a single base-3 number in exactly
    /// ceil(m·log2 3) bits, t_1 most significant.
    pub fn write_trits(&mut self, trits: &[u8]) -> Result<()> {
        let packed = pack_trits(trits)?;
        self.append(&packed);
        Ok(())
    }

    fn write_biguint(&mut self, value: &BigUint, width: usize) {
        for j in (0..width).rev() {
            self.push(value.bit(j as u64));
        }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i).unwrap() { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

/// Sequential reader over a [`BitString`]. Reads never pass the end.
pub struct BitCursor<'a> {
    bits: &'a BitString,
    pos: usize,
}

impl<'a> BitCursor<'a> {
    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.bits.len() - self.pos
    }

    pub fn is_exhausted(&self) -> bool {
        self.pos == self.bits.len()
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        let b = self.bits.get(self.pos).ok_or(Error::Exhausted)?;
        self.pos += 1;
        Ok(b)
    }

    fn peek(&self) -> Option<bool> {
        self.bits.get(self.pos)
    }

    pub fn read_fixed(&mut self, width: u32) -> Result<u64> {
        if width > 64 {
            return Err(Error::Guard {
                name: "fixed field width",
                value: width as usize,
                max: 64,
            });
        }
        let mut v = 0u64;
        for _ in 0..width {
            v = (v << 1) | self.read_bit()? as u64;
        }
        Ok(v)
    }

    pub fn read_gamma(&mut self) -> Result<u64> {
        let mut zeros = 0u32;
        loop {
            if self.read_bit()? {
                break;
            }
            zeros += 1;
            if zeros > 63 {
                return Err(Error::Malformed("oversized gamma header".into()));
            }
        }
        let mut v = 1u64;
        for _ in 0..zeros {
            v = (v << 1) | self.read_bit()? as u64;
        }
        Ok(v)
    }

    /// Read `m` runs, consuming exactly `m` one-bits. Run i's zeros end at the
    /// next 1 (or at the end of the string for the final run), so the field is
    /// self-delimiting when it is the last field of a fully-consumed label.
    pub fn read_runs(&mut self, m: usize) -> Result<Vec<u64>> {
        let mut mags = Vec::with_capacity(m);
        for _ in 0..m {
            if !self.read_bit()? {
                return Err(Error::Malformed("run does not start with a 1".into()));
            }
            let mut b = 0u64;
            while self.peek() == Some(false) {
                self.pos += 1;
                b += 1;
            }
            mags.push(b);
        }
        Ok(mags)
    }

    /// Read `m` trits packed as one base-3 number in ceil(m·log2 3) bits.
    pub fn read_trits(&mut self, m: usize) -> Result<Vec<u8>> {
        let width = trit_width(m);
        let value = self.read_biguint(width)?;
        if m > 0 && value >= BigUint::from(3u32).pow(m as u32) {
            return Err(Error::Malformed("trit block exceeds 3^m".into()));
        }
        let mut out = Vec::with_capacity(m);
        biguint_to_trits(&value, m, &mut out);
        Ok(out)
    }

    fn read_biguint(&mut self, width: usize) -> Result<BigUint> {
        let mut bytes = vec![0u8; width.div_ceil(8)];
        for i in 0..width {
            if self.read_bit()? {
                bytes[i / 8] |= 1 << (7 - (i % 8));
            }
        }
        let pad = bytes.len() * 8 - width;
        Ok(BigUint::from_bytes_be(&bytes) >> pad)
    }
}

/// One run per magnitude: a 1 followed by b_i zeros. Total length m + sum(b_i).
pub fn encode_runs(magnitudes: &[u64]) -> BitString {
    let mut bs = BitString::new();
    bs.write_runs(magnitudes);
    bs
}

/// Pack trits (each in {0,1,2}) as one base-3 number, t_1 most significant,
/// in a field of exactly ceil(m·log2 3) bits.
pub fn pack_trits(trits: &[u8]) -> Result<BitString> {
    for &t in trits {
        if t > 2 {
            return Err(Error::TritOutOfRange(t));
        }
    }
    let mut bs = BitString::new();
    if trits.is_empty() {
        return Ok(bs);
    }
    let (value, pow) = trits_to_biguint(trits);
    let width = (pow - 1u32).bits() as usize;
    bs.write_biguint(&value, width);
    Ok(bs)
}

/// Unpack `m` trits from the cursor.
pub fn unpack_trits(cursor: &mut BitCursor<'_>, m: usize) -> Result<Vec<u8>> {
    cursor.read_trits(m)
}

/// Exact width of the packed trit field: ceil(m·log2 3), computed without
/// floating point as the bit length of 3^m − 1.
pub fn trit_width(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        ((BigUint::from(3u32).pow(m as u32)) - 1u32).bits() as usize
    }
}

// Divide-and-conquer base conversion keeps packing subquadratic for the long
// trit blocks produced at n = 10^4 and above.
fn trits_to_biguint(trits: &[u8]) -> (BigUint, BigUint) {
    let m = trits.len();
    if m <= 32 {
        let mut v = 0u64;
        let mut p = 1u64;
        for &t in trits {
            v = v * 3 + t as u64;
            p *= 3;
        }
        return (BigUint::from(v), BigUint::from(p));
    }
    let (left, right) = trits.split_at(m / 2);
    let (vl, pl) = trits_to_biguint(left);
    let (vr, pr) = trits_to_biguint(right);
    (vl * &pr + vr, pl * pr)
}

fn biguint_to_trits(value: &BigUint, m: usize, out: &mut Vec<u8>) {
    if m <= 32 {
        let mut v = u64::try_from(value).expect("block below 3^32 fits u64");
        let start = out.len();
        out.resize(start + m, 0);
        for i in (0..m).rev() {
            out[start + i] = (v % 3) as u8;
            v /= 3;
        }
        return;
    }
    let ml = m / 2;
    let mr = m - ml;
    let p = BigUint::from(3u32).pow(mr as u32);
    let q = value / &p;
    let r = value % &p;
    biguint_to_trits(&q, ml, out);
    biguint_to_trits(&r, mr, out);
}

/// Signed step sequence split into signs and magnitudes, with the canonical
/// convention that magnitude 0 forces sign 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSeq {
    signs: Vec<i8>,
    magnitudes: Vec<u64>,
}

impl DeltaSeq {
    pub fn from_steps(steps: &[i64]) -> Self {
        let signs = steps.iter().map(|&d| d.signum() as i8).collect();
        let magnitudes = steps.iter().map(|&d| d.unsigned_abs()).collect();
        DeltaSeq { signs, magnitudes }
    }

    /// Reassemble from decoded parts, enforcing the canonical zero convention.
    pub fn from_parts(signs: Vec<i8>, magnitudes: Vec<u64>) -> Result<Self> {
        if signs.len() != magnitudes.len() {
            return Err(Error::Malformed("sign/magnitude length mismatch".into()));
        }
        for (s, &b) in signs.iter().zip(&magnitudes) {
            if b == 0 && *s != 0 {
                return Err(Error::Malformed("nonzero sign on zero magnitude".into()));
            }
            if b != 0 && *s == 0 {
                return Err(Error::Malformed("zero sign on nonzero magnitude".into()));
            }
        }
        Ok(DeltaSeq { signs, magnitudes })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn magnitudes(&self) -> &[u64] {
        &self.magnitudes
    }

    pub fn step(&self, i: usize) -> i64 {
        self.signs[i] as i64 * self.magnitudes[i] as i64
    }
}

pub(crate) fn floor_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    usize::BITS - 1 - n.leading_zeros()
}

pub(crate) fn ceil_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    if n == 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Index/distance field width: ceil(log2 n), widened to 1 for n = 1 so no
/// field has zero width.
pub(crate) fn index_width(n: usize) -> u32 {
    ceil_log2(n).max(1)
}
