//! Companion crate to `cyclespace`: file IO, JSON reports, the built-in
//! graph corpus, and the CLI plumbing.

pub mod corpus;
pub mod load;
pub mod parallel;
pub mod report;
