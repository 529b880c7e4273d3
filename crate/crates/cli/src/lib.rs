//! Oracle ingestion, table assembly, and verification on top of the sieve.

pub mod oracle;
pub mod tables;
pub mod templates;
pub mod verify;

/// The shipped rank-4 involution index table, `index s_rho(1) .. s_rho(4)`
/// per line.
pub const APPENDIX_F4: &str = include_str!("../data/appendix_f4.txt");

/// The shipped verdict records for the published tables.
pub const ORACLE_DATA: &str = include_str!("../data/oracle.txt");
