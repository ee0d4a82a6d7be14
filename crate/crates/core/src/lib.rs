//! Exact arithmetic in free products of finite groups, with decision procedures for
//! conjugacy and commutators and a constructive classification of commutators that are
//! proper powers.
//!
//! ```
//! use freeprod::GroupContext;
//!
//! let g = GroupContext::cyclic(&[2, 3]).unwrap();
//! let u = g.parse_word("0.1 1.1 1.1 0.1").unwrap();
//! assert_eq!(g.format_word(&u), "0.1 1.2 0.1");
//! ```

pub mod classifier;
pub mod conjugacy;
pub mod error;
pub mod factor;
pub mod group_file;
pub mod harness;
pub mod wicks;
pub mod word;

pub use error::{Error, Result};
pub use factor::{FactorElement, FactorGroup};
pub use group_file::{load_group, GroupSpecFile};
pub use word::{CyclicReduction, ElementOrder, GroupContext, Word};
