//! Library half of the `geocoh` command-line tool.
//!
//! Everything the binary prints is produced here as a string, which keeps the
//! commands testable and their output byte-deterministic: same arguments,
//! same stdout, same files.

pub mod commands;
pub mod figures;
pub mod output;
pub mod specs;
pub mod verify;

/// Exit codes of the binary: success, verification failure, input error.
pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILURE: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
}
