//! Weight sequences, associated weight functions, Legendre conjugates and weight matrices,
//! with growth-condition verdicts and a verification harness for the equivalences
//! between them.

// `!(x > 0.0)` is used deliberately so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod conditions;
pub mod config;
pub mod error;
pub mod io;
pub mod matrix;
pub mod num;
pub mod random;
pub mod report;
pub mod seqcore;
pub mod theorems;
pub mod verdict;
pub mod weightfun;

pub use error::{Error, Result};
