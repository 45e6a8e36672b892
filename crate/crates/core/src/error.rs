use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring must have at least 2 variables, got {0}")]
    TooFewVariables(usize),

    #[error("variable names must be pairwise distinct (duplicate `{0}`)")]
    DuplicateVariable(String),

    #[error("context mismatch: expected {expected} variables, got {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("exact division failed: {divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("exponent overflow")]
    Overflow,

    #[error("cannot parse monomial: {0}")]
    MonomialSyntax(String),

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("degenerate ideal: {0}")]
    DegenerateIdeal(&'static str),

    #[error("truncation degree {e} is below deg(I) = {deg}")]
    TruncationBelowDegree { e: u32, deg: u32 },

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("ideal is not of Borel type: {0}")]
    NotBorelType(String),

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("infeasible budget: {0}")]
    InfeasibleBudget(String),

    #[error("budget exceeded: {required} multidegrees, cap is {cap}")]
    BudgetExceeded { required: u128, cap: u64 },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
