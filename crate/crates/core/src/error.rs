use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("{0:?} is not a simplex of the complex")]
    NotASimplex(Vec<String>),

    #[error("{face:?} is not a face of {simplex:?}")]
    NotAFace { face: Vec<String>, simplex: Vec<String> },

    #[error("operation requires a nonempty simplex")]
    EmptySimplex,

    #[error("complex is empty")]
    EmptyComplex,

    #[error("{what}: {needed} cells exceeds the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("k-largeness is only defined for k >= 5 (got {0})")]
    InvalidLargeness(usize),

    #[error("complex is disconnected; component containing {component:?} misses other vertices")]
    Disconnected { component: Vec<String> },

    #[error("no common cube contains {0:?}")]
    NoCommonCube(Vec<String>),

    #[error("5-largeness violated: {0:?} and {1:?} are incomparable minimal cubes")]
    FiveLargenessViolated(Vec<String>, Vec<String>),

    #[error("cube {0:?} is not in the complex")]
    CubeNotInComplex(Vec<String>),

    #[error("malformed cube: {0}")]
    MalformedCube(String),

    #[error("alpha map is not surjective: no preimage of `{0}`")]
    NotSurjective(String),

    #[error("thickening is empty: every pair of vertices shares a cube")]
    ThickeningEmpty,

    #[error("not a section of alpha at `{0}`")]
    NotASection(String),

    #[error("complex is not flag: {0:?} is a clique spanning no simplex")]
    NotFlag(Vec<String>),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("invalid gluing: {0}")]
    InvalidGluing(String),

    #[error("state has length {got}, expected {expected}")]
    StateLength { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
