use thiserror::Error;

/// Every failure the library can report.
///
/// Structural variants (`Associativity`, `Coassociativity`, ...) carry the
/// basis indices that witness the violation so callers can point at the
/// offending entry of an input file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("mixed fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("polynomial is not monic with integer coefficients")]
    NotMonicInteger,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("could not parse scalar {0:?}: {1}")]
    Parse(String, String),

    #[error("associativity fails at basis triple ({i}, {j}, {k})")]
    Associativity { i: usize, j: usize, k: usize },
    #[error("unit law fails at basis element {0}")]
    UnitLaw(usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("structural corruption: {0}")]
    Corruption(String),

    #[error("bilinear form is singular; kernel witness {witness:?}")]
    SingularForm { witness: Vec<String> },
    #[error("functional is not an algebra homomorphism at ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("integral space has dimension {0}, expected 1")]
    IntegralSpaceNotLine(usize),

    #[error("module axiom fails at basis pair ({0}, {1})")]
    NotAModule(usize, usize),
    #[error("module is not schur (dim End = {0})")]
    NotSchur(usize),
    #[error("index [A:M] is zero")]
    IndexNotInvertible,
    #[error("no weak form certificate supplied")]
    NoWeakForm,

    #[error("coassociativity fails at basis element {0}")]
    Coassociativity(usize),
    #[error("counit law fails at basis element {0}")]
    Counit(usize),
    #[error("comultiplication or counit is not multiplicative at ({0}, {1})")]
    Bialgebra(usize, usize),
    #[error("antipode law fails at basis element {0}")]
    Antipode(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("irreducible set is not complete: sum of squared dimensions {got} != {expected}")]
    NotComplete { got: String, expected: String },
    #[error("module {0} is not split irreducible")]
    NotSplit(usize),
    #[error("fusion multiplicity N[{0}][{1}][{2}] = {3} is not a nonnegative integer")]
    NonIntegerMultiplicity(usize, usize, usize, String),
    #[error("fusion ring is not commutative")]
    NotCommutative,
    #[error("invalid fusion data: {0}")]
    InvalidFusion(String),

    #[error("field does not split the group: {0}")]
    NonSplittingField(String),
    #[error("group closure exceeds bound {0}")]
    ClosureBound(usize),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("characteristic 2 is not allowed here")]
    CharacteristicTwo,

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
