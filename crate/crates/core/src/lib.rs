pub mod circleops;
pub mod kseq;
pub mod ncforms;
pub mod report;

pub use report::CheckReport;
