use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("shadow index {i} invalid for a {r}-graph on {n} vertices: {reason}")]
    InvalidShadow {
        i: isize,
        r: usize,
        n: usize,
        reason: &'static str,
    },
    #[error("density undefined: need n >= {need}, got n = {n}")]
    DensityUndefined { n: usize, need: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("x = {x} lies outside the domain [{lo}, {hi}] of {curve}")]
    OutsideDomain {
        curve: String,
        x: f64,
        lo: f64,
        hi: f64,
    },
    #[error("hypergraph is not {0}-free; the bound does not apply")]
    NotFree(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
