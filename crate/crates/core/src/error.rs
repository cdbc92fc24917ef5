use thiserror::Error;

/// Errors produced by the algebra, group, and analysis layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid character '{found}' at position {position}")]
    InvalidPauliChar { position: usize, found: char },

    #[error("empty pauli string")]
    EmptyPauli,

    #[error("pauli string longer than {max} qubits", max = crate::pauli::MAX_QUBITS)]
    TooManyQubits,

    #[error("qubit count mismatch: {0} vs {1}")]
    QubitCountMismatch(usize, usize),

    #[error("operator dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("generator phase must be +1 or -1, found i-phase on generator {0}")]
    GeneratorPhase(usize),

    #[error("generators {0} and {1} anticommute")]
    AnticommutingGenerators(usize, usize),

    #[error("-I is in the closure: not a valid stabilizer group")]
    MinusIdentityInClosure,

    #[error("generators are dependent: closure has fewer than 2^r labels")]
    DependentGenerators,

    #[error("representatives {0} and {1} lie in the same coset")]
    DuplicateCoset(usize, usize),

    #[error("character has {0} signs but the group has {1} generators")]
    CharacterLength(usize, usize),

    #[error("character signs must be +1 or -1")]
    CharacterSign,

    #[error("operator is not hermitian (defect {0:.3e})")]
    NotHermitian(f64),

    #[error("not a projector: {0}")]
    NotAProjector(String),

    #[error("rank-one projector required, got rank {0}")]
    NotRankOne(usize),

    #[error("translated projectors for representatives {0} and {1} overlap")]
    OverlappingTranslates(usize, usize),

    #[error("weight class {0} has zero mass but a positive target")]
    EmptyWeightClass(usize),

    #[error("invalid weight enumerator target: {0}")]
    BadTarget(String),

    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),

    #[error("rotation images must be three distinct non-identity letters")]
    InvalidRotation,

    #[error("rotation is orientation-reversing and cannot be realized by conjugation")]
    ImproperRotation,

    #[error("invalid qubit permutation")]
    InvalidPermutation,

    #[error("group is not self-dual (r = {r}, n = {n})")]
    NotSelfDual { r: usize, n: usize },

    #[error("conjugation by generator {0} is not a symmetry of the expansion")]
    NotASymmetry(String),

    #[error("character projectors do not resolve the code projector (residual {0:.3e})")]
    CharacterResolution(f64),

    #[error("line {line}: {msg}")]
    FileFormat { line: usize, msg: String },

    #[error("duplicate label '{0}'")]
    DuplicateLabel(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
