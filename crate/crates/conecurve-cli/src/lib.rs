//! Library surface of the command-line front end, exposed so integration
//! tests can drive panel and command generation directly.

pub mod config;
pub mod figure;
pub mod obj;
pub mod run;
pub mod svg;
