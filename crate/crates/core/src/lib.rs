//! Shortest unique substring queries over byte texts.
//!
//! A substring is unique if it occurs exactly once in the text. For any
//! position `k`, some shortest unique substring covering `k` exists (the
//! whole text covers everything), and this crate finds it — or all tied
//! ones — for a single position or for every position at once, in time and
//! space linear in the text length. The only data structures involved are
//! the suffix array, its inverse and the LCP array.
//!
//! ```
//! use sus_core::{every, single, SuffixContext, Text};
//!
//! let ctx = SuffixContext::build(Text::from_bytes(b"abcbb".to_vec()).unwrap());
//! let sus = single::sus_at(&ctx, 2).unwrap();
//! assert_eq!((sus.start, sus.length), (1, 2)); // "ab"
//! assert_eq!(every::sus_every(&ctx).len(), 5);
//! ```

mod error;
mod sais;

pub mod every;
pub mod index_io;
pub mod lsus;
pub mod oracle;
pub mod single;
pub mod sls;
pub mod suffix;

pub use error::{Error, Result};
pub use every::{SusRecord, WalkStats};
pub use lsus::Interval;
pub use sls::{ChunkNode, SlsWalker};
pub use suffix::{SuffixContext, Text};
