use thiserror::Error;

/// Validation and precondition failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 1")]
    InvalidGenus,
    #[error("images are not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("symplectic condition w(2g+1-i) = 2g+1-w(i) fails at i = {i}")]
    NotSymplectic { i: usize },
    #[error("sign vector entries must be 0 or 1")]
    InvalidSignBit,
    #[error("pair sums are not constant: v({i}) + v(2g+1-{i}) differs from v(1) + v(2g)")]
    NonConstantPairSums { i: usize },
    #[error("not an extended alcove: {0}")]
    NotAnAlcove(String),
    #[error("not a G-alcove: no constant c with x_i + theta(x_(2g-i)) = c*1")]
    NotAGAlcove,
    #[error("element is not mu-admissible")]
    NotAdmissible,
    #[error("element is not possibly maximal")]
    NotPossiblyMaximal,
    #[error("{cycle} is not a cycle of the element")]
    NotACycle { cycle: String },
    #[error("the alcove lies on the wall")]
    OnWall,
    #[error("p-rank {d} out of range 0..={g}")]
    PrankOutOfRange { d: usize, g: usize },
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("elements lie in different cosets of the affine Weyl group")]
    MixedCosets,
    #[error("p-rank equals genus; the stripped element would have genus 0")]
    NothingToStrip,
    #[error("genus {g} exceeds the budget for check `{check}` (limit {limit}); raise the budget to override")]
    BudgetExceeded {
        check: String,
        g: usize,
        limit: usize,
    },
}
