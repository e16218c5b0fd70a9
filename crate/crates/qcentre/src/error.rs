//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Cartan type {letter}{rank}")]
    UnsupportedType { letter: char, rank: usize },

    #[error("exponent {0} is not integral in the allowed units of the ground field")]
    NonIntegralExponent(String),

    #[error("specialization has a pole at q = 1")]
    PoleAtOne,

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("binomial index out of range: k = {k}, m = {m}")]
    BinomialRange { m: u64, k: u64 },

    #[error("weight {0} is not dominant")]
    NonDominantWeight(String),

    #[error("weight {0} has the wrong rank")]
    RankMismatch(String),

    #[error("word {0:?} is not a reduced expression for the longest Weyl element")]
    NonReducedWord(Vec<usize>),

    #[error("generator index {0} out of range for rank {1}")]
    IndexOutOfRange(usize, usize),

    #[error("element does not have homogeneous degree zero")]
    GradingNotZero,

    #[error("element contains symbols outside the allowed subalgebra")]
    SymbolRestriction,

    #[error("probe battery is empty")]
    EmptyBattery,

    #[error("unknown battery preset {0:?}")]
    UnknownBattery(String),

    #[error("element is not invariant under the Weyl group")]
    NotWInvariant,

    #[error("element has a K-exponent outside the doubled weight lattice")]
    NotEven,

    #[error("power must be at least 1")]
    PowerRange,

    #[error("decomposition did not terminate within the step bound")]
    DecompositionStuck,

    #[error("modules are attached to different Cartan data")]
    DatumMismatch,

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
