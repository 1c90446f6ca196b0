//! Left-bounded shortest unique substrings.
//!
//! For a position `i`, let `L_i` be the longest common prefix between the
//! suffix at `i` and any other suffix; it is the larger of the two LCP
//! entries adjacent to `i`'s rank. The shortest unique substring starting
//! exactly at `i` is then `(i, L_i + 1)` when it fits inside the text, and
//! does not exist otherwise (the whole suffix at `i` repeats elsewhere).

use crate::error::Result;
use crate::suffix::SuffixContext;

/// A substring identified by 1-based start and positive length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: usize,
    pub length: usize,
}

impl Interval {
    pub fn new(start: usize, length: usize) -> Self {
        debug_assert!(start >= 1 && length >= 1);
        Interval { start, length }
    }

    /// 1-based position of the last covered byte.
    pub fn end(&self) -> usize {
        self.start + self.length - 1
    }

    pub fn covers(&self, pos: usize) -> bool {
        self.start <= pos && pos <= self.end()
    }
}

/// `L_i` without bounds checking; callers validate `i` first.
#[inline]
pub(crate) fn length_bound_raw(ctx: &SuffixContext, i: usize) -> usize {
    let r = ctx.rank()[i - 1] as usize;
    let lcp = ctx.lcp();
    lcp[r - 1].max(lcp[r]) as usize
}

/// Longest common prefix length between the suffix at `i` and any other
/// suffix of the text.
pub fn lsus_length_bound(ctx: &SuffixContext, i: usize) -> Result<usize> {
    ctx.check_position(i)?;
    Ok(length_bound_raw(ctx, i))
}

/// The shortest unique substring starting exactly at `i`, or `None` when
/// the whole suffix at `i` is a repeat.
pub fn lsus_at(ctx: &SuffixContext, i: usize) -> Result<Option<Interval>> {
    ctx.check_position(i)?;
    Ok(lsus_at_raw(ctx, i))
}

#[inline]
pub(crate) fn lsus_at_raw(ctx: &SuffixContext, i: usize) -> Option<Interval> {
    let bound = length_bound_raw(ctx, i);
    if i + bound <= ctx.len() {
        Some(Interval::new(i, bound + 1))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::suffix::Text;
    use proptest::prelude::*;

    fn ctx(bytes: &[u8]) -> SuffixContext {
        SuffixContext::build(Text::from_bytes(bytes.to_vec()).unwrap())
    }

    /// Independent bound: maximum pairwise prefix overlap of suffix `i`
    /// with every other suffix.
    fn length_bound_by_pairwise_scan(bytes: &[u8], i: usize) -> usize {
        let suffix = &bytes[i - 1..];
        (1..=bytes.len())
            .filter(|&j| j != i)
            .map(|j| {
                bytes[j - 1..]
                    .iter()
                    .zip(suffix)
                    .take_while(|(a, b)| a == b)
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn length_bound_examples() {
        let c = ctx(b"abcbb");
        assert_eq!(lsus_length_bound(&c, 2).unwrap(), 1);
        assert_eq!(lsus_length_bound(&c, 1).unwrap(), 0);
        assert_eq!(lsus_length_bound(&ctx(b"aaaa"), 1).unwrap(), 3);
        assert_eq!(length_bound_by_pairwise_scan(b"abcbb", 2), 1);
        assert_eq!(length_bound_by_pairwise_scan(b"aaaa", 1), 3);
    }

    #[test]
    fn lsus_examples() {
        assert_eq!(
            lsus_at(&ctx(b"abcbb"), 2).unwrap(),
            Some(Interval::new(2, 2))
        );
        assert_eq!(lsus_at(&ctx(b"abcabc"), 4).unwrap(), None);
        assert_eq!(lsus_at(&ctx(b"abcbb"), 5).unwrap(), None);
        // Single byte: the bound is zero and the one-byte substring stands.
        assert_eq!(lsus_at(&ctx(b"a"), 1).unwrap(), Some(Interval::new(1, 1)));
    }

    #[test]
    fn position_out_of_range() {
        let c = ctx(b"abc");
        assert!(lsus_at(&c, 0).is_err());
        assert!(lsus_at(&c, 4).is_err());
        assert!(lsus_length_bound(&c, 4).is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_window_oracle(bytes in proptest::collection::vec(0u8..4, 1..120)) {
            let t = Text::from_bytes(bytes.clone()).unwrap();
            let c = SuffixContext::build(t.clone());
            for i in 1..=bytes.len() {
                prop_assert_eq!(lsus_at(&c, i).unwrap(), oracle::lsus_at_naive(&t, i).unwrap());
            }
        }

        #[test]
        fn existence_is_a_prefix_of_positions(bytes in proptest::collection::vec(0u8..3, 1..150)) {
            let c = SuffixContext::build(Text::from_bytes(bytes.clone()).unwrap());
            let exists: Vec<bool> =
                (1..=bytes.len()).map(|i| lsus_at(&c, i).unwrap().is_some()).collect();
            prop_assert!(exists[0], "the first position always has one");
            for w in exists.windows(2) {
                prop_assert!(w[0] || !w[1], "existence may only switch off once");
            }
        }

        #[test]
        fn neighbour_length_bound(bytes in proptest::collection::vec(0u8..3, 2..150)) {
            let c = SuffixContext::build(Text::from_bytes(bytes.clone()).unwrap());
            for i in 2..=bytes.len() {
                if let (Some(prev), Some(cur)) =
                    (lsus_at(&c, i - 1).unwrap(), lsus_at(&c, i).unwrap())
                {
                    prop_assert!(cur.length + 1 >= prev.length);
                }
            }
        }
    }
}
