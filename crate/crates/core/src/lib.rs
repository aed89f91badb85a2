//! Exact symbolic computation for the twisted N=2 superconformal algebra and its
//! untwisted sibling: field arithmetic in Q(i, sqrt 2), bracket presentations,
//! PBW straightening, induced modules and executable checks on them.

pub mod algebra;
pub mod index;
pub mod lab;
pub mod linalg;
pub mod parse;
pub mod pbw;
pub mod scalar;
pub mod zoo;

pub use scalar::{Scalar, ScalarError};
