//! Command-line front end for `a4witt-core`: polynomial text formats, JSON
//! reports, seeded sampling and the verification suites.

pub mod commands;
pub mod parse;
pub mod report;
pub mod sample;
pub mod suite;
