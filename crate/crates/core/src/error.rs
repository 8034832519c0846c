use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} outside the supported range [2, 2^31 - 1]")]
    ModulusOutOfRange(u64),

    #[error("matrix entry {value} at ({row}, {col}) is not a residue mod {p}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u32,
        p: u32,
    },

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {actual}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("height n = {0} outside the supported range 1..=6")]
    HeightOutOfRange(usize),

    #[error("degree q_{k} overflows 64-bit arithmetic at p = {p}")]
    DegreeOverflow { p: u64, k: usize },

    #[error("invalid generator h{i},{j} for height {n}")]
    InvalidGenerator { i: usize, j: usize, n: usize },

    #[error("repeated generator h{i},{j} in monomial")]
    RepeatedGenerator { i: usize, j: usize },

    #[error("element is not homogeneous in cohomological degree")]
    NotHomogeneous,

    #[error("cohomological degree {s} exceeds n^2 = {max}")]
    DegreeOutOfRange { s: usize, max: usize },

    #[error("invalid coefficient profile: {0}")]
    InvalidProfile(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(
        "degree bound {bound} exceeds the validity range of the generator table at p = {p} \
         (t - s <= (2p^2 + 4p + 6)q + 7 = {max})"
    )]
    BoundOutOfRange { p: u64, bound: u64, max: u64 },

    #[error("degree {degree} outside the enumerated range [0, {bound}]")]
    DegreeOutsideTable { degree: i64, bound: u64 },

    #[error("cell structure of V({k}) requires k <= 3 and 2k < p, got p = {p}")]
    SkeletonOutOfRange { p: u64, k: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
