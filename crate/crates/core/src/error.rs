use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order {0} (expected 2, 3, 4 or an odd prime <= 251)")]
    UnsupportedField(u32),
    #[error("element {value} out of range for GF({order})")]
    ElementOutOfRange { value: u32, order: u32 },
    #[error("field mismatch")]
    FieldMismatch,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("Schur pivot singular")]
    SchurPivotSingular,
    #[error("column index {index} out of range for length {len}")]
    ColumnOutOfRange { index: usize, len: usize },
    #[error("generator not full rank (use rref tool): rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("Hermitian inner product requires GF(4), got {0}")]
    HermitianNeedsGf4(crate::gf::Field),
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("enumerator guard exceeded: {q}^{k} codewords")]
    EnumerationGuard { q: u32, k: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("D must be invertible")]
    SingularD,
    #[error("block shape mismatch: {0}")]
    BlockShape(String),
    #[error("not an embedding of the given base")]
    NotAnEmbedding,
    #[error("recovered D block is singular; the input is not a shortest LCD embedding")]
    ExtractedSingularD,
    #[error("assembled generator is not LCD")]
    NotLcd,
    #[error("minimality certified analytically only: exhaustive sweep over {q}^{exponent} blocks exceeds the guard")]
    CertificationGuard { q: u32, exponent: usize },
    #[error("code has trivial hull; nothing to search")]
    TrivialHull,
    #[error("exhaustive search space too large ({0} candidates); use the random strategy")]
    ExhaustiveGuard(u128),
}
