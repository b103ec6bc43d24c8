//! Bundle files, report records and the `phm` command line on top of
//! `phm-core`.

pub mod bundle;
pub mod cli;
pub mod rational;
pub mod records;

pub use bundle::{from_json, parse_bundle, to_json, Bundle, ParseError};
