//! File format, random instances, the theorem suite and the command layer
//! behind the `grpd` binary.

pub mod commands;
pub mod generator;
pub mod suite;
pub mod workspace;
