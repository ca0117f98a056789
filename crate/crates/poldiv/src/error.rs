use thiserror::Error;

/// Errors surfaced by the library. Variants carry enough context for the
/// command-line front end to emit a machine-readable reason.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tail cones of the operands differ")]
    TailMismatch,
    #[error("weight vector lies outside the dual of the tail cone")]
    OutsideDomain,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("scalar must be positive")]
    NonPositiveScalar,
    #[error("a tailed polyhedron needs at least one vertex")]
    EmptyPolyhedron,
    #[error("quasifans have different supports")]
    SupportMismatch,
    #[error("point lies outside the support of the quasifan")]
    OutsideSupport,
    #[error("weight vector lies outside the weight cone of the divisor")]
    OutsideWeightCone,
    #[error("divisor degree is only defined over a projective curve")]
    NotProjectiveCurve,
    #[error("operation is not defined over this base")]
    UnsupportedBase,
    #[error("toric base fan is not complete; properness left unchecked")]
    IncompleteToricFan,
    #[error("divisors are not comparable: {0}")]
    Mismatch(String),
    #[error("shift vectors do not sum to zero")]
    DegreeNotZero,
    #[error("embedding does not split: cokernel has torsion or map is not injective")]
    NotSplit,
    #[error("sublattice is not saturated: downgrade needs a primitive embedding")]
    NotSaturated,
    #[error("provided section is not a left inverse of the embedding")]
    SectionInvalid,
    #[error("unknown ray reference: {0}")]
    UnknownRay(String),
    #[error("unknown point label: {0}")]
    UnknownPoint(String),
    #[error("vertex set is not a face of the fiber polyhedron")]
    FaceNotInFiber,
    #[error("input is not a rank-one datum over a smooth curve with proper divisor")]
    NotASurfaceDatum,
    #[error("base is not the projective line")]
    NotP1,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
