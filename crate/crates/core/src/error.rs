use thiserror::Error;

use crate::graph::ForbiddenWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("empty graph has no players")]
    EmptyGraph,

    #[error("instance too large for exact oracle ({size} > cap {cap})")]
    TooLarge { size: usize, cap: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("not population monotonic: {0}")]
    NotPopulationMonotonic(ForbiddenWitness),

    #[error("game is not balanced (matching number {matching} < vertex cover number {cover})")]
    NotBalanced { matching: usize, cover: usize },

    #[error("malformed scheme: {0}")]
    MalformedScheme(String),

    #[error("malformed integral scheme: {0}")]
    MalformedIntegralScheme(String),

    #[error("invalid preference system: {0}")]
    InvalidPreferences(String),

    #[error("free rider {edge} is not ranked lowest at vertex {vertex}")]
    FreeRiderNotLowest { edge: usize, vertex: String },

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
