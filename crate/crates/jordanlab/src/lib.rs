//! Verification front end over the core library.
//!
//! The library side of this crate packages the evidence for the dimension
//! conjectures into named suites of pass/fail cases, and renders tables and
//! reports in machine and human formats. The binary `jordanlab` exposes the
//! same functionality on the command line.

pub mod report;
pub mod suites;
pub mod tables;
