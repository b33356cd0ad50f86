use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("β-set elements must be strictly increasing and non-empty: {0:?}")]
    InvalidBetaSet(Vec<usize>),
    #[error("β-set length {length} is shorter than the {parts} parts of the partition")]
    BetaLengthTooShort { length: usize, parts: usize },
    #[error("partition {0} is not {1}-regular")]
    NotRegular(String, usize),
    #[error("bipartition {0} is not an Uglov bipartition for e = {1}, s = {2}")]
    NotUglov(String, usize, String),
    #[error("bipartition {0} is not a Kleshchev bipartition for e = {1}, s = {2}")]
    NotKleshchev(String, usize, String),
    #[error("first β-set has {first} elements but the second only {second}")]
    SizeOrder { first: usize, second: usize },
    #[error("second β-set does not contain the staircase 0..{0} or is too short")]
    NotInImage(usize),
    #[error("bicharge must satisfy s1 <= s2, got ({0}, {1})")]
    ChargeOrder(i64, i64),
}
