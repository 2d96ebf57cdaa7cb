use gtable_core::gallery::GalleryError;
use gtable_core::gtable::TableError;
use gtable_core::repkit::RepError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input files.
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Gallery(#[from] GalleryError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Rep(#[from] RepError),
    /// A property or fixture check came out false.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    /// 2 for input errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            _ => 1,
        }
    }
}
