use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("{what} refused: graph has {n} vertices, cap is {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("{what}: argument {value} outside supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },

    #[error("translation of {instance} left the target universe {universe}")]
    OutOfUniverse { instance: String, universe: String },

    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: String, right: String },
}
