//! Versioned binary form of the Murnaghan–Nakayama memo table.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic   8 bytes  "SPECHTMN"
//! version u32      1
//! count   u64
//! entries count ×  { λ: u32 len, u32 parts.., μ: u32 len, u32 parts..,
//!                    value: u32 byte len, two's complement bytes }
//! check   u64      FNV-1a over everything after the version field
//! ```
//!
//! A file that fails any check is rejected as a whole, so a damaged cache only
//! costs recomputation.

use std::io::{Read, Write};

use num_bigint::BigInt;

use crate::characters::mn;
use crate::error::{Error, Result};
use crate::shapes::Partition;

const MAGIC: &[u8; 8] = b"SPECHTMN";
pub const CACHE_VERSION: u32 = 1;

struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn feed(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }
}

fn put_partition(buf: &mut Vec<u8>, p: &Partition) {
    buf.extend_from_slice(&(p.len() as u32).to_le_bytes());
    for &part in p.parts() {
        buf.extend_from_slice(&(part as u32).to_le_bytes());
    }
}

/// Serializes the given entries.
pub fn encode(entries: &[(Partition, Partition, BigInt)]) -> Vec<u8> {
    let mut body = Vec::new();
    body.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (lambda, mu, value) in entries {
        put_partition(&mut body, lambda);
        put_partition(&mut body, mu);
        let bytes = value.to_signed_bytes_le();
        body.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        body.extend_from_slice(&bytes);
    }
    let mut hash = Fnv::new();
    hash.feed(&body);
    let mut out = Vec::with_capacity(body.len() + 20);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    out.extend_from_slice(&body);
    out.extend_from_slice(&hash.0.to_le_bytes());
    out
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.pos + n > self.data.len() {
            return Err(Error::Io("truncated cache file".to_string()));
        }
        let slice = &self.data[self.pos..self.pos + n];
        self.pos += n;
        Ok(slice)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn partition(&mut self) -> Result<Partition> {
        let len = self.u32()? as usize;
        if len > self.data.len() {
            return Err(Error::Io("corrupt partition length".to_string()));
        }
        let parts = (0..len)
            .map(|_| self.u32().map(|p| p as usize))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Io(format!("corrupt cache entry: {e}")))
    }
}

/// Parses a cache file, validating magic, version, structure and checksum.
pub fn decode(data: &[u8]) -> Result<Vec<(Partition, Partition, BigInt)>> {
    if data.len() < 20 || &data[..8] != MAGIC {
        return Err(Error::Io("not a specht cache file".to_string()));
    }
    let version = u32::from_le_bytes(data[8..12].try_into().expect("4 bytes"));
    if version != CACHE_VERSION {
        return Err(Error::Io(format!("unsupported cache version {version}")));
    }
    let body = &data[12..data.len() - 8];
    let stored = u64::from_le_bytes(data[data.len() - 8..].try_into().expect("8 bytes"));
    let mut hash = Fnv::new();
    hash.feed(body);
    if hash.0 != stored {
        return Err(Error::Io("cache checksum mismatch".to_string()));
    }
    let mut cur = Cursor { data: body, pos: 0 };
    let count = cur.u64()?;
    let mut out = Vec::new();
    for _ in 0..count {
        let lambda = cur.partition()?;
        let mu = cur.partition()?;
        let len = cur.u32()? as usize;
        let value = BigInt::from_signed_bytes_le(cur.take(len)?);
        if lambda.weight() != mu.weight() {
            return Err(Error::Io("cache entry with mismatched weights".to_string()));
        }
        out.push((lambda, mu, value));
    }
    if cur.pos != body.len() {
        return Err(Error::Io("trailing bytes in cache file".to_string()));
    }
    Ok(out)
}

/// Writes the current process-wide memo table.
pub fn save<W: Write>(mut w: W) -> Result<usize> {
    let entries = mn::cache_entries();
    w.write_all(&encode(&entries))?;
    Ok(entries.len())
}

/// Loads a cache file into the memo table; returns the number of entries.
pub fn load<R: Read>(mut r: R) -> Result<usize> {
    let mut data = Vec::new();
    r.read_to_end(&mut data)?;
    let entries = decode(&data)?;
    Ok(mn::cache_extend(entries))
}
