use jetbound_core::morse::MorseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("no threshold: leading coefficient {0} is not positive")]
    NoThreshold(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::NoThreshold(_) => 3,
            CliError::Invariant(_) | CliError::Io(_) => 4,
        }
    }
}

impl From<MorseError> for CliError {
    fn from(e: MorseError) -> Self {
        match e {
            MorseError::Inadmissible(_) | MorseError::WeightCount { .. } => {
                CliError::Input(e.to_string())
            }
            MorseError::Tower(jetbound_core::tower::TowerError::InvalidDimensions { .. }) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}
