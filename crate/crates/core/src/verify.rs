//! Verification suites and structured reports: every identity the library
//! relies on, checked against quadrature and special-function oracles, with
//! JSON / CSV / table emission.

mod report;
mod suites;

pub use report::{
    emit_report, fmt12, validate_report_json, CheckCase, Complex64, Report, ReportFormat,
};
pub use suites::{default_tol, gr_table_check, run_suite, GR_IDENTITIES, SUITE_NAMES, T_GRID};
