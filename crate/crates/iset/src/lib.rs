//! File formats, generator specs, parallel drivers and the command-line
//! front end for `iset-core`.

pub mod cli;
pub mod edgelist;
pub mod genspec;
pub mod parallel;
pub mod report;
