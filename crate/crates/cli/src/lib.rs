//! File formats, the enumeration cache and the verification harness behind
//! the `ct` command.

pub mod cache;
pub mod edgelist;
pub mod harness;
pub mod report;

pub use cache::{Cache, CacheError};
pub use edgelist::EdgeListError;
pub use harness::{verify, verify_family, Agreement, HarnessError, VerificationRecord, VerifyConfig};
pub use report::{Finding, Report, ReportFormat, Summary};
