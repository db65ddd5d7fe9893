use thiserror::Error;

/// Everything that can go wrong while building groups, graphs or reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation degree must be at least 1")]
    ZeroDegree,
    #[error("degree {0} exceeds the supported maximum of {max}", max = u16::MAX)]
    DegreeTooLarge(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image sequence is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("malformed cycle notation at byte {position}: {message}")]
    MalformedCycles { position: usize, message: String },
    #[error("point label {0} appears more than once")]
    RepeatedLabel(usize),
    #[error("point label {label} out of range 1..={degree}")]
    LabelOutOfRange { label: usize, degree: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group enumeration exceeded the element cap of {0}")]
    ElementCapExceeded(usize),
    #[error("graph has {vertices} vertices, over the cap of {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },
    #[error("enumeration exceeded the cap of {0} sets")]
    EnumerationCapExceeded(usize),
    #[error("operation requires a transitive group")]
    NotTransitive,
    #[error("at least one factor group is required")]
    NoFactors,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("permutation is not an element of the group")]
    NotAnElement,
    #[error("block system is not invariant under the group")]
    InvalidBlockSystem,
    #[error("constructed set is not intersecting: elements {0} and {1} do not agree anywhere")]
    NotIntersecting(usize, usize),
    #[error("time budget exhausted")]
    BudgetExhausted,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("spec parse error on line {line}: {message}")]
    Spec { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
