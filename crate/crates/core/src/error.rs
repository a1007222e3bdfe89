use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} of {requested} exceeds the limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a partial order: {reason} (witness {witness:?})")]
    NotAPoset {
        reason: &'static str,
        witness: Vec<usize>,
    },

    #[error("not a lattice: elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),

    #[error("invalid interval: {0} is not below {1}")]
    InvalidInterval(usize, usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn limit(what: &'static str, requested: usize, limit: usize) -> Self {
        Error::ResourceLimit {
            what,
            requested,
            limit,
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
