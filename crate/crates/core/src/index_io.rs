//! Binary serialization of the index arrays.
//!
//! Layout: the 8-byte magic `SUSIDX01`, then `n` as unsigned 64-bit
//! little-endian, then the suffix array (`n` u64), the rank array (`n`
//! u64) and the LCP array (`n + 1` u64), all little-endian. The loader
//! verifies the magic, the exact byte length, and the permutation/inverse
//! invariants of the arrays before handing them out.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::suffix::{SuffixContext, Text, MAX_TEXT_LEN};

pub const MAGIC: &[u8; 8] = b"SUSIDX01";

/// Writes the index arrays of `ctx`.
pub fn write_index<W: Write>(ctx: &SuffixContext, writer: &mut W) -> Result<()> {
    writer.write_all(MAGIC)?;
    writer.write_all(&(ctx.len() as u64).to_le_bytes())?;
    for array in [ctx.sa(), ctx.rank(), ctx.lcp()] {
        for &value in array {
            writer.write_all(&u64::from(value).to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn save_index(ctx: &SuffixContext, path: &Path) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    write_index(ctx, &mut writer)?;
    writer.flush()?;
    Ok(())
}

fn read_u64<R: Read>(reader: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    reader.read_exact(&mut buf).map_err(|e| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            Error::InvalidIndex("file is shorter than its declared length".into())
        } else {
            Error::Io(e)
        }
    })?;
    Ok(u64::from_le_bytes(buf))
}

fn read_array<R: Read>(reader: &mut R, len: usize, max: u64) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let value = read_u64(reader)?;
        if value > max {
            return Err(Error::InvalidIndex(format!(
                "array value {value} exceeds maximum {max}"
            )));
        }
        out.push(value as u32);
    }
    Ok(out)
}

/// Reads and validates an index stream, binding it to `text`. The declared
/// length must match the text, the stream must carry exactly the declared
/// number of entries, and the array invariants must hold.
pub fn read_index<R: Read>(reader: &mut R, text: Text) -> Result<SuffixContext> {
    let mut magic = [0u8; 8];
    reader.read_exact(&mut magic).map_err(|e| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            Error::InvalidIndex("file too short for the magic header".into())
        } else {
            Error::Io(e)
        }
    })?;
    if &magic != MAGIC {
        return Err(Error::InvalidIndex(format!(
            "bad magic {:?}, expected {:?}",
            magic, MAGIC
        )));
    }
    let n = read_u64(reader)?;
    if n == 0 || n > MAX_TEXT_LEN as u64 {
        return Err(Error::InvalidIndex(format!("unsupported text length {n}")));
    }
    let n = n as usize;
    if n != text.len() {
        return Err(Error::InvalidIndex(format!(
            "index was built for a text of {n} bytes, input has {}",
            text.len()
        )));
    }
    let sa = read_array(reader, n, n as u64)?;
    let rank = read_array(reader, n, n as u64)?;
    let lcp = read_array(reader, n + 1, n as u64)?;
    let mut trailing = [0u8; 1];
    match reader.read(&mut trailing)? {
        0 => {}
        _ => {
            return Err(Error::InvalidIndex(
                "trailing bytes after the declared arrays".into(),
            ))
        }
    }
    SuffixContext::from_parts(text, sa, rank, lcp)
}

pub fn load_index(path: &Path, text: Text) -> Result<SuffixContext> {
    let mut reader = BufReader::new(File::open(path)?);
    read_index(&mut reader, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(bytes: &[u8]) -> SuffixContext {
        SuffixContext::build(Text::from_bytes(bytes.to_vec()).unwrap())
    }

    fn roundtrip(bytes: &[u8]) -> Vec<u8> {
        let mut buf = Vec::new();
        write_index(&ctx(bytes), &mut buf).unwrap();
        buf
    }

    #[test]
    fn roundtrips_and_validates() {
        for text in [&b"abcbb"[..], b"a", b"\x00\x00a\x00", b"mississippi"] {
            let buf = roundtrip(text);
            let expected_len = 8 + 8 + 8 * (text.len() * 2 + text.len() + 1);
            assert_eq!(buf.len(), expected_len);
            let loaded = read_index(
                &mut buf.as_slice(),
                Text::from_bytes(text.to_vec()).unwrap(),
            )
            .unwrap();
            let direct = ctx(text);
            assert_eq!(loaded.sa(), direct.sa());
            assert_eq!(loaded.rank(), direct.rank());
            assert_eq!(loaded.lcp(), direct.lcp());
        }
    }

    #[test]
    fn rejects_bad_magic() {
        let mut buf = roundtrip(b"abcbb");
        buf[0] ^= 0xff;
        let err = read_index(
            &mut buf.as_slice(),
            Text::from_bytes(b"abcbb".to_vec()).unwrap(),
        );
        assert!(matches!(err, Err(Error::InvalidIndex(_))));
    }

    #[test]
    fn rejects_truncated_and_padded_files() {
        let buf = roundtrip(b"abcbb");
        let text = || Text::from_bytes(b"abcbb".to_vec()).unwrap();
        assert!(read_index(&mut &buf[..buf.len() - 1], text()).is_err());
        let mut padded = buf.clone();
        padded.push(0);
        assert!(read_index(&mut padded.as_slice(), text()).is_err());
    }

    #[test]
    fn rejects_length_mismatch_with_text() {
        let buf = roundtrip(b"abcbb");
        let err = read_index(&mut buf.as_slice(), Text::from_bytes(b"abcb".to_vec()).unwrap());
        assert!(matches!(err, Err(Error::InvalidIndex(_))));
    }

    #[test]
    fn rejects_non_permutation() {
        let mut buf = roundtrip(b"abcbb");
        // First suffix-array entry lives right after magic and length.
        buf[16] = 9;
        let err = read_index(
            &mut buf.as_slice(),
            Text::from_bytes(b"abcbb".to_vec()).unwrap(),
        );
        assert!(matches!(err, Err(Error::InvalidIndex(_))));
    }
}
