//! Batch front end for the `mlie` library: document ingestion, named
//! checks, and machine-readable verdict reports.

pub mod fixtures;
pub mod report;
pub mod run;
