use thiserror::Error;

/// Errors raised by lattice construction, flag arithmetic, constructions,
/// the hull oracle and the tiling calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("poset is not graded")]
    NotGraded,
    #[error("facet {0} appears more than once")]
    DuplicateFacet(usize),
    #[error("facet {inner} is contained in facet {outer}")]
    NestedFacet { inner: usize, outer: usize },
    #[error("atom index {atom} out of range for {atom_count} atoms")]
    AtomOutOfRange { atom: usize, atom_count: usize },
    #[error("atom {0} lies in no facet")]
    UncoveredAtom(usize),
    #[error("atom {0} is not a face on its own; supports do not determine the order")]
    NotAtomistic(usize),
    #[error("lattice needs at least one atom")]
    NoAtoms,
    #[error("elements are not comparable")]
    NotComparable,
    #[error("element index {0} out of range")]
    NoSuchElement(usize),
    #[error("expected lattice length {expected}, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("Euler-Poincare relation violated")]
    EulerViolation,
    #[error("quantity undefined at the simplex (zero denominator)")]
    SimplexDegenerate,
    #[error("input is not a simple 4-polytope")]
    NotSimple,
    #[error("combinatorial closure of the construction is not graded")]
    ClosureNotGraded,
    #[error("f-vector ({f0},{f1},{f2}) is not the f-vector of a 3-polytope")]
    NotRealizable { f0: i64, f1: i64, f2: i64 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("points do not span dimension {dim} (affine rank {rank})")]
    DegenerateInput { dim: usize, rank: usize },
    #[error("host tiling does not consist of tetrahedra")]
    NotTetrahedral,
    #[error("invalid tiling counts: {0}")]
    InvalidCounts(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
