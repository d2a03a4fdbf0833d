//! Multi-word modular arithmetic.
//!
//! Wide modular kernels (addition, subtraction, Barrett multiplication,
//! vector ops and NTTs) are built as straight-line programs over wide
//! integers, rewritten level by level until every operation works on machine
//! words, verified against a big-integer oracle and emitted as C or CUDA.

pub mod emit;
pub mod ir;
pub mod kernels;
pub mod oracle;
pub mod rewrite;
