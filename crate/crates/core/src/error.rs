use thiserror::Error;

/// Errors produced by the word and algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("alphabet has more than 256 letters")]
    AlphabetTooLarge,
    #[error("letter {0:?} appears twice in the alphabet")]
    DuplicateLetter(char),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("letter code {code} is out of range for an alphabet of size {size}")]
    LetterOutOfRange { code: u8, size: usize },
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),
    #[error("a Lyndon word of length at least 2 is required, got {0}")]
    TooShort(String),
    #[error("not a minimal presentation: relation {0} is a single letter")]
    LetterRelation(String),
    #[error("relations are not all Lyndon words: {0}")]
    NonLyndonAntichain(String),
    #[error("word {0} is not normal")]
    NotNormal(String),
    #[error("GK-dimension infinite: the algebra has exponential growth")]
    ExponentialGrowth,
    #[error("the atom set is not known to be complete")]
    IncompleteAtoms,
    #[error("the Ufnarovski graph needs an obstruction of length at least 2")]
    GraphTooSmall,
    #[error("chain enumeration needs an explicit bound for non-Lyndon relations")]
    UnboundedChains,
    #[error("global dimension not determined <= {0}")]
    GlobalDimensionUndetermined(usize),
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("index {index} exceeds the configured cap {cap}")]
    CapExceeded { index: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors meaning "the answer is not determinable within the
    /// configured bounds", as opposed to malformed input.
    pub fn is_undetermined(&self) -> bool {
        matches!(
            self,
            Error::GlobalDimensionUndetermined(_)
                | Error::LimitExceeded(_)
                | Error::CapExceeded { .. }
                | Error::UnboundedChains
                | Error::ExponentialGrowth
                | Error::IncompleteAtoms
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
