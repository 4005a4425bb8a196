use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not weakly increasing: r({position}) = {value} is smaller than r({prev_position}) = {prev_value}", prev_position = position - 1)]
    NotWeaklyIncreasing {
        position: usize,
        value: i64,
        prev_value: i64,
    },

    #[error("out of range: r({position}) = {value}, expected 0 <= r(i) < i")]
    OutOfRange { position: usize, value: i64 },

    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error(
        "colouring is not proper: vertices {j} and {i} are adjacent and both have colour {colour}"
    )]
    NotProper { j: usize, i: usize, colour: usize },

    #[error("colour {colour} at position {position} is outside 1..={m}")]
    ColourOutOfRange {
        position: usize,
        colour: usize,
        m: usize,
    },

    #[error("infeasible: vertex {position} needs {needed} colours but only m = {m} are available")]
    Infeasible {
        position: usize,
        needed: usize,
        m: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
