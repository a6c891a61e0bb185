//! Library surface of the CLI: the on-disk formats and report shapes,
//! shared between the `shs` binary and its integration tests.

pub mod model_file;
pub mod presentation_file;
pub mod report;

/// Input or schema error; the binary maps it to exit status 2.
#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn input(message: impl ToString) -> Self {
        CliError { message: message.to_string() }
    }
}
