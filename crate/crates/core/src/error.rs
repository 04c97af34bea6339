use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A simplex listed a vertex more than once.
    MalformedSimplex(Vec<u32>),
    /// A vertex identification produced a degenerate or duplicated simplex.
    QuotientNotSimplicial {
        simplex: Vec<u32>,
        reason: &'static str,
    },
    /// The closure of `stratum` meets `other` without containing it, or contains a
    /// stratum of larger dimension.
    FrontierViolation {
        stratum: u32,
        other: u32,
    },
    /// Declared stratum dimension differs from the simplices it carries.
    StratumDimension {
        stratum: u32,
        declared: usize,
        found: Option<usize>,
    },
    UnlabeledSimplex(Vec<u32>),
    UnknownStratum(u32),
    DuplicateStratum(u32),
    UnknownComponent {
        stratum: u32,
        component: usize,
    },
    /// A stratum has no simplex of its own dimension.
    MalformedStratum(u32),
    /// Perversity growth condition fails at index `k` (of `p_k`).
    PerversityGrowth {
        k: usize,
    },
    PerversityLength {
        n: usize,
        len: usize,
    },
    UnknownPerversity(String),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// An index supplied for a zero on a point stratum was not 1.
    PointIndex {
        stratum: u32,
        component: usize,
        index: i64,
    },
    /// A formula only defined for even-dimensional strata was applied elsewhere.
    Inapplicable(&'static str),
    UnknownGallery(String),
    EmptyComplex,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedSimplex(s) => write!(f, "malformed simplex {s:?}: repeated vertex"),
            Error::QuotientNotSimplicial { simplex, reason } => {
                write!(f, "quotient is not simplicial at {simplex:?} ({reason}); subdivide first")
            }
            Error::FrontierViolation { stratum, other } => {
                write!(f, "frontier condition fails: closure of stratum {stratum} meets stratum {other}")
            }
            Error::StratumDimension { stratum, declared, found } => match found {
                Some(d) => write!(f, "stratum {stratum} declared dim {declared} but carries dim {d}"),
                None => write!(f, "stratum {stratum} declared dim {declared} but carries no simplices"),
            },
            Error::UnlabeledSimplex(s) => write!(f, "simplex {s:?} has no stratum"),
            Error::UnknownStratum(id) => write!(f, "unknown stratum {id}"),
            Error::DuplicateStratum(id) => write!(f, "stratum id {id} declared twice"),
            Error::UnknownComponent { stratum, component } => {
                write!(f, "stratum {stratum} has no component {component}")
            }
            Error::MalformedStratum(id) => write!(f, "stratum {id} has no simplex of its own dimension"),
            Error::PerversityGrowth { k } => write!(f, "perversity violates growth condition at p_{k}"),
            Error::PerversityLength { n, len } => {
                write!(f, "perversity for dimension {n} needs {} values, got {len}", n.saturating_sub(1))
            }
            Error::UnknownPerversity(s) => write!(f, "unknown perversity {s:?}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::PointIndex { stratum, component, index } => {
                write!(f, "zero on point component {stratum}/{component} must have index 1, got {index}")
            }
            Error::Inapplicable(why) => write!(f, "formula inapplicable: {why}"),
            Error::UnknownGallery(name) => write!(f, "unknown gallery space {name:?}"),
            Error::EmptyComplex => f.write_str("complex is empty"),
        }
    }
}

impl core::error::Error for Error {}
