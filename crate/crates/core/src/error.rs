use thiserror::Error;

/// Errors raised by constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size guard exceeded: {what} needs about {estimate} candidates (bound {bound})")]
    SizeGuard {
        what: String,
        estimate: u128,
        bound: u128,
    },
    #[error("invalid game `{game}`: {detail}")]
    InvalidGame { game: String, detail: String },
    #[error("invalid strategy `{strategy}`: {detail}")]
    InvalidStrategy { strategy: String, detail: String },
    #[error("invalid strategy isomorphism: {0}")]
    InvalidIso(String),
    #[error("game mismatch: {0}")]
    GameMismatch(String),
    #[error("duplicate index `{0}`")]
    DuplicateIndex(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("`{what}` is not a member of {of}")]
    NotAMember { what: String, of: String },
    #[error("functor law violated: {law} at {witness}")]
    FunctorLaw { law: String, witness: String },
    #[error("typing mismatch: {0}")]
    Typing(String),
    #[error("gamoid `{0}` is not registered in the universe")]
    Unregistered(String),
    #[error("naturality violated: {0}")]
    Naturality(String),
    #[error("parse error at {0}")]
    Parse(crate::frontend::Diagnostic),
    #[error("in {decl}: unknown {kind} `{reference}`")]
    Resolution {
        decl: String,
        kind: String,
        reference: String,
    },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
