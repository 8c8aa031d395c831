use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures reported by the library.
///
/// Faces inside errors are given as external (1-based) vertex ids so the
/// message can be matched against the input file directly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {0} is not a positive integer")]
    InvalidVertex(i64),

    #[error("complex exceeds the face limit of {limit} faces")]
    TooManyFaces { limit: usize },

    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<u32>),

    #[error("exponent {key:?} is outside the degree bound {bound:?}")]
    KeyOutOfRange { key: Vec<u32>, bound: Vec<u32> },

    #[error("degree bound mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("complex is not reciprocal: face {face:?} has multiplicity {multiplicity}")]
    NotReciprocal { face: Vec<u32>, multiplicity: i64 },

    #[error("complex is not semi-Eulerian: face {face:?} has multiplicity {multiplicity}")]
    NotSemiEulerian { face: Vec<u32>, multiplicity: i64 },

    #[error("complex is not a homology manifold: link of face {face:?} has reduced Betti numbers {betti:?}")]
    NotHomologyManifold { face: Vec<u32>, betti: Vec<u64> },

    #[error("vertex {0} has no color")]
    UncoloredVertex(u32),

    #[error("vertex {vertex} has color {color}, expected a color in 1..={colors}")]
    InvalidColor { vertex: u32, color: u32, colors: usize },

    #[error("facet {facet:?} has color counts {found:?}, expected type {expected:?}")]
    Unbalanced {
        facet: Vec<u32>,
        found: Vec<u32>,
        expected: Vec<u32>,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// The offending face for precondition failures, if there is one.
    pub fn witness(&self) -> Option<&[u32]> {
        match self {
            Error::NotReciprocal { face, .. }
            | Error::NotSemiEulerian { face, .. }
            | Error::NotHomologyManifold { face, .. }
            | Error::FaceNotInComplex(face) => Some(face),
            Error::Unbalanced { facet, .. } => Some(facet),
            _ => None,
        }
    }
}
