//! Shortest unique substring queries for one position.
//!
//! Every shortest unique substring covering `k` is a left-bounded shortest
//! unique substring or an extension of one, starting at or before `k`. The
//! scan walks `i = 1..=k`, forms each candidate (extended up to `k` when it
//! falls short) and keeps the shortest; earlier starts win ties because the
//! comparison is strict. Once a position has no left-bounded candidate, no
//! later position has one either, so the scan stops early.

use crate::error::Result;
use crate::lsus::{length_bound_raw, Interval};
use crate::suffix::SuffixContext;

/// Length of the candidate for covering `k` built from position `i`: the
/// left-bounded shortest unique substring at `i`, stretched to reach `k`
/// if needed.
#[inline]
fn candidate_length(bound: usize, i: usize, k: usize) -> usize {
    (bound + 1).max(k - i + 1)
}

fn scan_leftmost(ctx: &SuffixContext, k: usize) -> Interval {
    let n = ctx.len();
    // The whole text is unique, so it is always a valid starting candidate.
    let mut best = Interval::new(1, n);
    for i in 1..=k {
        let bound = length_bound_raw(ctx, i);
        if i + bound > n {
            break;
        }
        let length = candidate_length(bound, i, k);
        if length < best.length {
            best = Interval::new(i, length);
        }
    }
    best
}

/// The shortest unique substring covering `k`; the one with the smallest
/// start is returned when several share the minimal length.
pub fn sus_at(ctx: &SuffixContext, k: usize) -> Result<Interval> {
    ctx.check_position(k)?;
    Ok(scan_leftmost(ctx, k))
}

/// All shortest unique substrings covering `k`, ascending by start. The
/// first entry equals `sus_at(ctx, k)`.
pub fn all_sus_at(ctx: &SuffixContext, k: usize) -> Result<Vec<Interval>> {
    ctx.check_position(k)?;
    let best = scan_leftmost(ctx, k);
    let n = ctx.len();
    let mut out = Vec::new();
    for i in 1..=k {
        let bound = length_bound_raw(ctx, i);
        if i + bound > n {
            break;
        }
        if candidate_length(bound, i, k) == best.length {
            out.push(Interval::new(i, best.length));
        }
    }
    debug_assert_eq!(out.first(), Some(&best));
    Ok(out)
}
