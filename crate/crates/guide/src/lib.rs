//! The chapters of the book under `book/src` and the README, included as
//! module docs so that every listing runs as a doctest. Nothing here is meant
//! to be used as a library.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/generation.md")]
pub mod generation {}

#[doc = include_str!("../../../book/src/injection.md")]
pub mod injection {}

#[doc = include_str!("../../../book/src/equality.md")]
pub mod equality {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
