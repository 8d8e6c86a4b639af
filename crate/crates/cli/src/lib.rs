//! Command-line front end for `flagdom`: report schemas, certificate
//! serialization and the subcommand bodies used by the binary.

pub mod certificate;
pub mod commands;
pub mod report;
