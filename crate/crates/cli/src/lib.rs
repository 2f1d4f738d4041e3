//! Library surface of the `pg` binary: the group-spec parser and the
//! command implementations, kept callable for tests.

#![forbid(unsafe_code)]

pub mod app;
pub mod parse;

pub use app::run;
