//! Support code for the `orrforge` binary: exit codes and the reproduction
//! suite shared with the acceptance test.

pub mod suite;

use orrforge::Error;

pub const EXIT_OK: i32 = 0;
/// A negative verdict: no ORR, a non-trivial stabiliser, a failed check.
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Exit code and stderr prefix for a library error.
pub fn classify_error(e: &Error) -> (i32, &'static str) {
    match e {
        Error::Timeout { .. } => (EXIT_RESOURCE, "timeout:"),
        Error::Resource(_) => (EXIT_RESOURCE, "error:"),
        _ => (EXIT_USAGE, "error:"),
    }
}
