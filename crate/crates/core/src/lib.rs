//! Syntax-aware on-the-fly code completion.
//!
//! The pipeline runs from raw Python source to evaluation reports:
//! [`lexer`] → [`corpus`] → [`bpe`] → [`align`] → [`model`] / [`trainer`]
//! → [`decode`] → [`metrics`]. [`probe`] reproduces the character-prefix
//! parsability analysis that motivates lexing over full parsing.

pub mod align;
pub mod autodiff;
pub mod bpe;
pub mod corpus;
pub mod decode;
pub mod error;
pub mod evaluate;
pub mod fixtures;
pub mod lexer;
pub mod metrics;
pub mod model;
pub mod probe;
pub mod trainer;

pub use error::{Error, Result};
