//! Batch drivers: the shortest unique substring for every position of the
//! text in one linear pass, optionally with all tied answers per position.
//!
//! The driver walks positions left to right. At each step it asks the
//! walker for the shortest left-bounded candidate covering the position.
//! The only other possible answer is the previous answer grown by one byte,
//! which is valid exactly when the previous answer ends at the previous
//! position; comparing the two (extension wins ties, being further left)
//! yields the leftmost shortest answer. Tied alternatives, when requested,
//! are read off the walker's chunks, whose candidate lengths are
//! non-decreasing, so the scan stops at the first longer one.

use crate::error::Result;
use crate::lsus::Interval;
use crate::sls::SlsWalker;
use crate::suffix::SuffixContext;

/// Per-position result row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SusRecord {
    /// 1-based position the row answers for.
    pub position: usize,
    /// The shortest unique substring covering the position, leftmost on
    /// ties.
    pub leftmost: Interval,
    /// All tied shortest answers, ascending by start, with `leftmost`
    /// first. `None` when ties were not requested.
    pub all_tied: Option<Vec<Interval>>,
}

/// Instrumentation from one full walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStats {
    pub merge_count: u64,
    pub nodes_appended: u64,
    pub peak_nodes: usize,
    pub node_capacity: usize,
}

fn drive<F>(ctx: &SuffixContext, want_ties: bool, mut emit: F) -> Result<WalkStats>
where
    F: FnMut(SusRecord),
{
    let n = ctx.len();
    let mut walker = SlsWalker::new(ctx);
    let mut prev: Option<Interval> = None;
    for k in 1..=n {
        let sls = walker.find_sls(k)?;
        // `ambiguous` marks the branches where the answer came from the
        // walker and other candidates of equal length may exist.
        let (answer, ambiguous) = match prev {
            None => (sls.expect("the first position always has a candidate"), false),
            Some(p) if p.end() > k - 1 => {
                // The previous answer runs past k-1, so no extension can be
                // an answer here and a left-bounded candidate must exist.
                let s = sls.expect("a left-bounded candidate must cover this position");
                (s, true)
            }
            Some(p) => {
                let extension = Interval::new(p.start, p.length + 1);
                match sls {
                    None => (extension, false),
                    Some(s) if s.length < extension.length => (s, true),
                    Some(s) if s.length == extension.length => (extension, true),
                    Some(_) => (extension, false),
                }
            }
        };

        let all_tied = if want_ties {
            let mut tied = vec![answer];
            if ambiguous {
                if let Some(p) = prev {
                    if p.length + 1 == answer.length {
                        tied.push(Interval::new(p.start, p.length + 1));
                    }
                }
                if let Some(s) = sls {
                    if s.length == answer.length {
                        tied.push(s);
                    }
                }
                // Equal-length candidates sit in a prefix of the chunk
                // list; the first longer one ends the run.
                for node in walker.peek_chunks() {
                    if node.cand_length != answer.length {
                        break;
                    }
                    tied.push(node.candidate());
                }
                tied.sort_unstable();
                tied.dedup();
            }
            Some(tied)
        } else {
            None
        };

        emit(SusRecord {
            position: k,
            leftmost: answer,
            all_tied,
        });
        prev = Some(answer);
    }
    Ok(WalkStats {
        merge_count: walker.merge_count(),
        nodes_appended: walker.nodes_appended(),
        peak_nodes: walker.peak_nodes(),
        node_capacity: walker.node_capacity(),
    })
}

/// Streams the leftmost shortest unique substring of every position to
/// `emit`, holding O(1) result state itself.
pub fn for_each_sus<F>(ctx: &SuffixContext, mut emit: F) -> WalkStats
where
    F: FnMut(usize, Interval),
{
    drive(ctx, false, |record| emit(record.position, record.leftmost))
        .expect("sequential walk over a valid context cannot fail")
}

/// Streams every position's record including all tied answers.
pub fn for_each_sus_record<F>(ctx: &SuffixContext, emit: F) -> WalkStats
where
    F: FnMut(SusRecord),
{
    drive(ctx, true, emit).expect("sequential walk over a valid context cannot fail")
}

/// The leftmost shortest unique substring for every position, materialized.
pub fn sus_every(ctx: &SuffixContext) -> Vec<Interval> {
    let mut out = Vec::with_capacity(ctx.len());
    for_each_sus(ctx, |_, interval| out.push(interval));
    out
}

/// Records with all tied answers for every position, materialized.
pub fn all_sus_every(ctx: &SuffixContext) -> Vec<SusRecord> {
    let mut out = Vec::with_capacity(ctx.len());
    for_each_sus_record(ctx, |record| out.push(record));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::single;
    use crate::suffix::Text;
    use proptest::prelude::*;

    fn ctx(bytes: &[u8]) -> SuffixContext {
        SuffixContext::build(Text::from_bytes(bytes.to_vec()).unwrap())
    }

    fn intervals(pairs: &[(usize, usize)]) -> Vec<Interval> {
        pairs.iter().map(|&(s, l)| Interval::new(s, l)).collect()
    }

    #[test]
    fn every_for_abcbb() {
        assert_eq!(
            sus_every(&ctx(b"abcbb")),
            intervals(&[(1, 1), (1, 2), (3, 1), (3, 2), (4, 2)])
        );
    }

    #[test]
    fn every_for_repeating_text() {
        // From position 4 on, nothing left-bounded exists and the answers
        // grow from "ca" one byte at a time.
        assert_eq!(
            sus_every(&ctx(b"abcabc")),
            intervals(&[(1, 4), (2, 3), (3, 2), (3, 2), (3, 3), (3, 4)])
        );
    }

    #[test]
    fn every_for_single_byte() {
        assert_eq!(sus_every(&ctx(b"a")), intervals(&[(1, 1)]));
    }

    #[test]
    fn all_tied_for_abcbb() {
        let records = all_sus_every(&ctx(b"abcbb"));
        let tied: Vec<Vec<Interval>> =
            records.into_iter().map(|r| r.all_tied.unwrap()).collect();
        assert_eq!(
            tied,
            vec![
                intervals(&[(1, 1)]),
                intervals(&[(1, 2), (2, 2)]),
                intervals(&[(3, 1)]),
                intervals(&[(3, 2), (4, 2)]),
                intervals(&[(4, 2)]),
            ]
        );
    }

    #[test]
    fn all_tied_for_uniform_text() {
        let records = all_sus_every(&ctx(b"aaaa"));
        for record in records {
            assert_eq!(record.leftmost, Interval::new(1, 4));
            assert_eq!(record.all_tied.unwrap(), intervals(&[(1, 4)]));
        }
    }

    #[test]
    fn all_tied_for_single_byte() {
        let records = all_sus_every(&ctx(b"a"));
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].all_tied.as_deref(), Some(&intervals(&[(1, 1)])[..]));
    }

    proptest! {
        #[test]
        fn agrees_with_single_queries(bytes in proptest::collection::vec(0u8..4, 1..120)) {
            let c = ctx(&bytes);
            let every = sus_every(&c);
            let records = all_sus_every(&c);
            for k in 1..=bytes.len() {
                prop_assert_eq!(every[k - 1], single::sus_at(&c, k).unwrap());
                let tied = records[k - 1].all_tied.as_ref().unwrap();
                prop_assert_eq!(tied, &single::all_sus_at(&c, k).unwrap());
                prop_assert_eq!(records[k - 1].leftmost, every[k - 1]);
                prop_assert_eq!(tied[0], every[k - 1]);
            }
        }

        #[test]
        fn extension_answers_grow_the_previous_one(bytes in proptest::collection::vec(0u8..3, 2..120)) {
            // Whenever the chosen answer is not itself a left-bounded
            // shortest unique substring, it must be the previous answer
            // plus one byte, and the previous answer ends right before k.
            let t = Text::from_bytes(bytes.clone()).unwrap();
            let c = SuffixContext::build(t.clone());
            let every = sus_every(&c);
            for k in 2..=bytes.len() {
                let cur = every[k - 1];
                let is_lsus = oracle::lsus_at_naive(&t, cur.start).unwrap() == Some(cur);
                if !is_lsus {
                    let prev = every[k - 2];
                    prop_assert_eq!(prev.end(), k - 1);
                    prop_assert_eq!(cur, Interval::new(prev.start, prev.length + 1));
                }
            }
        }

        #[test]
        fn stats_stay_linear(bytes in proptest::collection::vec(0u8..3, 1..200)) {
            let c = ctx(&bytes);
            let stats = for_each_sus(&c, |_, _| {});
            prop_assert!(stats.merge_count <= bytes.len() as u64);
            prop_assert!(stats.nodes_appended <= bytes.len() as u64);
            prop_assert!(stats.peak_nodes <= bytes.len());
        }
    }
}
