use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("reflection is not a reflection of this model's group: {0}")]
    UnknownReflection(String),
    #[error("descent exceeded the iteration cap of {cap} steps")]
    IterationCapExceeded { cap: usize },
    #[error("candidate walls do not cut out the base chamber: missing generator s{missing}")]
    NotEnclosing { missing: usize },
    #[error("no wall-neighborhood witness found for generator s{generator}")]
    WitnessNotFound { generator: usize },
    #[error("geodesic interpolation is not available between the given points")]
    NoGeodesicSegment,
    #[error("point parse error: {0}")]
    PointParse(String),
    #[error(transparent)]
    Coxeter(#[from] coxeter_core::CoxeterError),
}

pub type Result<T> = std::result::Result<T, SpaceError>;
