//! The overlap analysis for a commutator that is a proper power, and the clause-by-clause
//! classification built on it.

mod overlap;
mod theorem;

pub use overlap::*;
pub use theorem::*;
