//! IO surface for the fourfold workbench: the polynomial text grammar,
//! the example file format, JSON report schemas, and the subcommand logic
//! behind the `fourfold` binary.

pub mod commands;
pub mod files;
pub mod grammar;
pub mod report;

/// Version tag stamped into every JSON document this crate emits.
pub const SCHEMA_VERSION: &str = "v1";
