use thiserror::Error;

/// Failure to read or validate a PD code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{line}:{column}: malformed token `{token}`")]
    MalformedToken { line: usize, column: usize, token: String },
    #[error("arc label {label} used {count} times (expected 2)")]
    LabelMultiplicity { label: u32, count: usize },
    #[error("arc labels do not form consecutive per-component blocks: {0}")]
    NonConsecutive(String),
    #[error("crossing {crossing}: under-strand {from} -> {to} violates succession")]
    UnderStrand { crossing: usize, from: u32, to: u32 },
    #[error("crossing {crossing}: over-strand labels {b}, {d} are not consecutive")]
    OverStrand { crossing: usize, b: u32, d: u32 },
    #[error("arc orientations are inconsistent: {0}")]
    Orientation(String),
    #[error("face tracing does not close up: {faces} faces for {crossings} crossings in {pieces} pieces")]
    NotPlanar { faces: usize, crossings: usize, pieces: usize },
    #[error("unknown crossing id {0}")]
    UnknownCrossing(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial parse error: {0}")]
pub struct PolyParseError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("zero polynomial has no a-span")]
    ZeroPolynomial,
    #[error("odd a-span {0}")]
    OddSpan(i32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CastleError {
    #[error("Seifert circle {0} is not innermost")]
    NotInnermost(usize),
    #[error("unknown Seifert circle {0}")]
    UnknownCircle(usize),
    #[error("diagram has no crossings")]
    NoCrossings,
    #[error("trap-free search made no progress after {0} rebasing steps")]
    NoProgress(usize),
    #[error("not an IS circle: {0}")]
    NotIsCircle(String),
    #[error("start arc {0} is not on the expected component")]
    BadStart(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("Seifert circles {0} and {1} are not joined by a weight-one edge")]
    StalePair(usize, usize),
    #[error("no overpass rerouting found that merges circles {0} and {1}")]
    NoRerouting(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
