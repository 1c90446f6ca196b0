//! Streaming computation of the shortest covering left-bounded candidate
//! for every position, in one left-to-right walk.
//!
//! The walker maintains, for the positions ahead of the walk that are
//! already covered by some left-bounded shortest unique substring, the
//! shortest such candidate per position. Consecutive positions sharing one
//! candidate form a chunk, stored as a single node; the nodes, ordered by
//! position, live in an array-backed deque with the head at the walk
//! position. Candidate lengths never decrease from head to tail, so a new
//! candidate claims exactly a trailing run of nodes: the run is merged into
//! one node. Ties keep the earlier candidate because only strictly longer
//! candidates are replaced. Nodes never split; they are appended at the
//! tail, merged near the tail, or consumed at the head, which is what makes
//! the whole walk amortized constant per step.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::lsus::{length_bound_raw, Interval};
use crate::suffix::SuffixContext;

/// One chunk of positions that currently share a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkNode {
    /// First position of the chunk (1-based).
    pub chunk_start: usize,
    /// Last position of the chunk (inclusive).
    pub chunk_end: usize,
    /// Start of the shared candidate substring.
    pub cand_start: usize,
    /// Length of the shared candidate substring.
    pub cand_length: usize,
}

impl ChunkNode {
    pub fn candidate(&self) -> Interval {
        Interval::new(self.cand_start, self.cand_length)
    }
}

/// Sequential walker; call [`SlsWalker::find_sls`] with `k = 1, 2, ..., n`
/// exactly once each. Holds only read access to the shared context.
#[derive(Debug)]
pub struct SlsWalker<'a> {
    ctx: &'a SuffixContext,
    nodes: VecDeque<ChunkNode>,
    next_k: usize,
    merge_count: u64,
    nodes_appended: u64,
    peak_nodes: usize,
}

impl<'a> SlsWalker<'a> {
    pub fn new(ctx: &'a SuffixContext) -> Self {
        SlsWalker {
            ctx,
            nodes: VecDeque::new(),
            next_k: 1,
            merge_count: 0,
            nodes_appended: 0,
            peak_nodes: 0,
        }
    }

    /// The position the next `find_sls` call must pass.
    pub fn next_position(&self) -> usize {
        self.next_k
    }

    /// Pairwise node merges performed so far; bounded by `n` over a full
    /// walk, which is the crux of the amortized cost argument.
    pub fn merge_count(&self) -> u64 {
        self.merge_count
    }

    /// Nodes ever pushed at the tail; also bounded by `n`.
    pub fn nodes_appended(&self) -> u64 {
        self.nodes_appended
    }

    /// Largest number of live nodes observed at any point.
    pub fn peak_nodes(&self) -> usize {
        self.peak_nodes
    }

    /// Current allocation size of the node storage.
    pub fn node_capacity(&self) -> usize {
        self.nodes.capacity()
    }

    /// Head-to-tail snapshot of the live chunks. Taken right after a
    /// `find_sls(k)` call it reflects the state after the answer was taken
    /// and position `k` was consumed.
    pub fn peek_chunks(&self) -> impl Iterator<Item = &ChunkNode> {
        self.nodes.iter()
    }

    /// Returns the shortest left-bounded shortest unique substring covering
    /// `k` (leftmost on ties), or `None` when no such substring covers `k`.
    ///
    /// Steps must be consumed strictly in order; an out-of-order call is an
    /// error and the walker must be rebuilt to start over.
    pub fn find_sls(&mut self, k: usize) -> Result<Option<Interval>> {
        if k != self.next_k {
            return Err(Error::WalkOutOfOrder {
                expected: self.next_k,
                got: k,
            });
        }
        let n = self.ctx.len();
        if k > n {
            return Err(Error::PositionOutOfRange { pos: k, len: n });
        }

        let bound = length_bound_raw(self.ctx, k);
        if k + bound <= n {
            // The candidate starting at k exists and reaches through gamma.
            let gamma = k + bound;
            let cand_length = bound + 1;
            match self.nodes.back() {
                None => {
                    self.nodes.push_back(ChunkNode {
                        chunk_start: k,
                        chunk_end: gamma,
                        cand_start: k,
                        cand_length,
                    });
                    self.nodes_appended += 1;
                }
                Some(tail) if gamma > tail.chunk_end => {
                    let chunk_start = tail.chunk_end + 1;
                    self.nodes.push_back(ChunkNode {
                        chunk_start,
                        chunk_end: gamma,
                        cand_start: k,
                        cand_length,
                    });
                    self.nodes_appended += 1;
                }
                Some(_) => {}
            }
            // Claim the trailing run of strictly longer candidates; its
            // chunks all sit inside [k, gamma], so the new candidate covers
            // them. Keeping equal-length candidates preserves leftmost ties.
            let mut run_start = self.nodes.len();
            while run_start > 0 && self.nodes[run_start - 1].cand_length > cand_length {
                run_start -= 1;
            }
            if run_start < self.nodes.len() {
                let run_end_pos = self.nodes.back().expect("run is nonempty").chunk_end;
                self.merge_count += (self.nodes.len() - run_start - 1) as u64;
                self.nodes.truncate(run_start + 1);
                let node = &mut self.nodes[run_start];
                node.chunk_end = run_end_pos;
                node.cand_start = k;
                node.cand_length = cand_length;
            }
            self.peak_nodes = self.peak_nodes.max(self.nodes.len());
        }

        let answer = self.nodes.front().map(ChunkNode::candidate);

        // Position k is now behind the walk; drop it from the head chunk.
        if let Some(head) = self.nodes.front_mut() {
            if head.chunk_end <= k {
                self.nodes.pop_front();
            } else {
                head.chunk_start = k + 1;
            }
        }
        self.next_k += 1;
        Ok(answer)
    }
}
