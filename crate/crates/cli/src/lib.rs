//! Report document types shared between the `ribbonlab` binary and its
//! integration tests.

pub mod report;
