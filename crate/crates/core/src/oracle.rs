//! Brute-force reference implementations used for cross-checking.
//!
//! Everything here works by direct window scans over the text and shares no
//! code with the index-based fast path, so a bug cannot hide on both sides
//! of a comparison. These run in polynomial time and are only meant for
//! small inputs.

use crate::error::{Error, Result};
use crate::lsus::Interval;
use crate::suffix::Text;

/// True iff the substring `(start, length)` occurs exactly once in `text`,
/// determined by comparing every window of that length.
pub fn is_unique_naive(text: &Text, start: usize, length: usize) -> Result<bool> {
    let n = text.len();
    if start < 1 || length < 1 || start - 1 + length > n {
        return Err(Error::InvalidInterval {
            start,
            length,
            len: n,
        });
    }
    let bytes = text.as_bytes();
    let pattern = &bytes[start - 1..start - 1 + length];
    let mut occurrences = 0usize;
    for window in bytes.windows(length) {
        if window == pattern {
            occurrences += 1;
            if occurrences > 1 {
                return Ok(false);
            }
        }
    }
    Ok(occurrences == 1)
}

/// Shortest unique substring starting exactly at `i`, found by growing the
/// window one byte at a time; `None` if every substring starting at `i`
/// (including the suffix itself) repeats elsewhere.
pub fn lsus_at_naive(text: &Text, i: usize) -> Result<Option<Interval>> {
    let n = text.len();
    if i < 1 || i > n {
        return Err(Error::PositionOutOfRange { pos: i, len: n });
    }
    for length in 1..=n - i + 1 {
        if is_unique_naive(text, i, length)? {
            return Ok(Some(Interval::new(i, length)));
        }
    }
    Ok(None)
}

/// Every shortest unique substring covering position `k`: lengths are tried
/// in ascending order and all unique windows covering `k` at the first
/// successful length are collected, ascending by start. Never empty, since
/// the whole text is unique.
pub fn all_sus_at_naive(text: &Text, k: usize) -> Result<Vec<Interval>> {
    let n = text.len();
    if k < 1 || k > n {
        return Err(Error::PositionOutOfRange { pos: k, len: n });
    }
    for length in 1..=n {
        let lo = k.saturating_sub(length - 1).max(1);
        let hi = k.min(n - length + 1);
        let mut found = Vec::new();
        for start in lo..=hi {
            if is_unique_naive(text, start, length)? {
                found.push(Interval::new(start, length));
            }
        }
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the whole text is always unique");
}

/// Leftmost shortest unique substring covering `k`.
pub fn sus_at_naive(text: &Text, k: usize) -> Result<Interval> {
    Ok(all_sus_at_naive(text, k)?[0])
}

/// Shortest (leftmost on ties) of the left-bounded shortest unique
/// substrings starting at or before `k` that cover `k`, or `None` when no
/// such substring covers `k`.
pub fn sls_at_naive(text: &Text, k: usize) -> Result<Option<Interval>> {
    let n = text.len();
    if k < 1 || k > n {
        return Err(Error::PositionOutOfRange { pos: k, len: n });
    }
    let mut best: Option<Interval> = None;
    for i in 1..=k {
        if let Some(candidate) = lsus_at_naive(text, i)? {
            if candidate.end() >= k && best.map_or(true, |b| candidate.length < b.length) {
                best = Some(candidate);
            }
        }
    }
    Ok(best)
}
