//! Command-line companion to `pathspace-core`: curated plane fixtures,
//! exhaustive and random corpora of small 2-connected graphs, brute-force
//! oracles, DOT export, and the verification suite with its JSON reports.

pub mod corpus;
pub mod dot;
pub mod fixtures;
pub mod oracle;
pub mod report;
pub mod suite;
