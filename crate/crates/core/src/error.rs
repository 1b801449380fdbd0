use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("variable x{index} outside the ambient ring with {ambient} variables")]
    VariableOutOfRange { index: usize, ambient: usize },
    #[error("associated primes are undefined for the zero ideal")]
    ZeroIdeal,
    #[error("associated primes are undefined for the unit ideal")]
    UnitIdeal,
    #[error("the input is the graded maximal ideal; its only associated prime is itself")]
    MaximalIdeal,
    #[error("variable blocks overlap: {0:?}")]
    OverlappingBlocks(Vec<usize>),
    #[error("power must be at least 1")]
    ZeroPower,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("wall-clock budget exhausted")]
    Time,
    #[error("step budget exhausted")]
    Steps,
}
