use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank set {set:?} for a poset of rank {rank}")]
    InvalidRankSet { set: Vec<usize>, rank: usize },

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    Guard {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),

    #[error("not a lattice: {0}")]
    NotLattice(String),

    #[error("not a geometric lattice: {0}")]
    NotGeometric(String),

    #[error("matroid axiom violated: {axiom} (witness {witness})")]
    MatroidAxiom { axiom: &'static str, witness: String },

    #[error("atoms {0:?} are dependent or do not reach the expected rank")]
    Dependent(Vec<usize>),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("the poset carries no permutation action")]
    NoAction,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRankSet { .. } => "invalid_rank_set",
            Error::Guard { .. } => "guard",
            Error::NotComparable(..) => "not_comparable",
            Error::NotLattice(_) => "not_lattice",
            Error::NotGeometric(_) => "not_geometric",
            Error::MatroidAxiom { .. } => "matroid_axiom",
            Error::Dependent(_) => "dependent",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::NotACharacter(_) => "not_a_character",
            Error::InvalidPoset(_) => "invalid_poset",
            Error::InvalidInput(_) => "invalid_input",
            Error::NoAction => "no_action",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
