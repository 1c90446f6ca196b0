//! Text plus its suffix array, rank array and LCP array.
//!
//! All positions are 1-based. The suffix array holds the start positions of
//! all suffixes in lexicographic order (raw byte comparison, where a suffix
//! that is a proper prefix of another sorts first). The rank array is its
//! inverse. The LCP array carries `n + 1` entries: `lcp[i]` (1-based) is the
//! longest-common-prefix length of the suffixes ranked `i - 1` and `i`, with
//! zeros padded at both ends so that neighbour lookups never branch.

use crate::error::{Error, Result};
use crate::sais;

/// Maximum supported text length; positions must fit the index arrays.
pub const MAX_TEXT_LEN: usize = u32::MAX as usize;

/// A non-empty byte text. Any byte value is allowed, including zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    /// Validates and wraps raw bytes. Empty and oversized inputs are
    /// rejected here, so every `Text` in circulation is indexable.
    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        if bytes.len() > MAX_TEXT_LEN {
            return Err(Error::TextTooLarge {
                len: bytes.len(),
                max: MAX_TEXT_LEN,
            });
        }
        Ok(Text { bytes })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The substring starting at 1-based `start` with `length` bytes.
    pub fn slice(&self, start: usize, length: usize) -> &[u8] {
        &self.bytes[start - 1..start - 1 + length]
    }
}

/// Builds the suffix array of `text`: a permutation of `{1..n}` such that
/// the suffixes it lists are in ascending lexicographic order.
pub fn build_suffix_array(text: &Text) -> Vec<u32> {
    sais::suffix_array(text.as_bytes())
}

/// Inverts a suffix array: `rank[sa[j]] = j` in 1-based terms.
pub fn build_rank_array(sa: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; sa.len()];
    for (j, &pos) in sa.iter().enumerate() {
        rank[pos as usize - 1] = j as u32 + 1;
    }
    rank
}

/// Builds the LCP array with `n + 1` entries via Kasai's algorithm, which
/// walks suffixes in text order and reuses the previous overlap.
pub fn build_lcp_array(text: &Text, sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let bytes = text.as_bytes();
    let n = bytes.len();
    let mut lcp = vec![0u32; n + 1];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r > 1 {
            let j = sa[r - 2] as usize - 1;
            while i + h < n && j + h < n && bytes[i + h] == bytes[j + h] {
                h += 1;
            }
            lcp[r - 1] = h as u32;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// Immutable bundle of a text and its three index arrays. Building it is
/// single-threaded; once built it is safe to share across readers.
#[derive(Debug, Clone)]
pub struct SuffixContext {
    text: Text,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
}

impl SuffixContext {
    /// Constructs all three arrays for `text`.
    pub fn build(text: Text) -> Self {
        let sa = build_suffix_array(&text);
        let rank = build_rank_array(&sa);
        let lcp = build_lcp_array(&text, &sa, &rank);
        SuffixContext {
            text,
            sa,
            rank,
            lcp,
        }
    }

    /// Assembles a context from externally supplied arrays, enforcing the
    /// cheap structural invariants: array lengths, `sa` a permutation of
    /// `{1..n}`, `rank` its inverse, and zeroed LCP boundaries. Lexicographic
    /// order of `sa` is not re-verified.
    pub fn from_parts(text: Text, sa: Vec<u32>, rank: Vec<u32>, lcp: Vec<u32>) -> Result<Self> {
        let n = text.len();
        if sa.len() != n || rank.len() != n || lcp.len() != n + 1 {
            return Err(Error::InvalidIndex(format!(
                "array lengths {}/{}/{} do not match text length {}",
                sa.len(),
                rank.len(),
                lcp.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &pos in &sa {
            let p = pos as usize;
            if p < 1 || p > n || seen[p - 1] {
                return Err(Error::InvalidIndex(format!(
                    "suffix array is not a permutation of 1..={n} (offending value {p})"
                )));
            }
            seen[p - 1] = true;
        }
        for (j, &pos) in sa.iter().enumerate() {
            if rank[pos as usize - 1] as usize != j + 1 {
                return Err(Error::InvalidIndex(
                    "rank array is not the inverse of the suffix array".into(),
                ));
            }
        }
        if lcp[0] != 0 || lcp[n] != 0 {
            return Err(Error::InvalidIndex("LCP boundary entries must be zero".into()));
        }
        if let Some(&bad) = lcp.iter().find(|&&v| v as usize >= n) {
            return Err(Error::InvalidIndex(format!(
                "LCP value {bad} out of range for text length {n}"
            )));
        }
        Ok(SuffixContext {
            text,
            sa,
            rank,
            lcp,
        })
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    /// Text length `n`.
    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based suffix array values.
    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    /// 1-based rank values.
    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    /// LCP array with `n + 1` entries; entry `i` (0-based) corresponds to
    /// the 1-based definition index `i + 1`.
    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Validates a 1-based position.
    pub fn check_position(&self, pos: usize) -> Result<()> {
        if pos < 1 || pos > self.len() {
            return Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            });
        }
        Ok(())
    }
}
