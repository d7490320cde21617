use thiserror::Error;

/// Errors raised by the polynomial kernel and the geometric layers built on it.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arity mismatch: {0} vs {1}")]
    Arity(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point lies on the z-axis, a singular point of the congruence")]
    SingularPointOfCongruence,
    #[error("point lies on the z-axis: the directrix meets a singular point of the congruence at t = {0}")]
    PointOnAxis(String),
    #[error("denominator of the parametrization vanishes at t = {0}")]
    PoleAtParameter(String),
    #[error("circle and sphere do not intersect")]
    NoIntersection,
    #[error("degenerate parametrization: {0}")]
    DegenerateCurve(String),
    #[error("directrix lies in the plane through the z-axis with direction ({0}, {1}); the surface degenerates to that plane")]
    DegeneratePlane(String, String),
    #[error("elimination resultant vanishes identically: the incidence equations share a component")]
    CommonComponent,
    #[error("every factor of the eliminant was removed; the configuration is fully degenerate")]
    EmptySurface,
    #[error("point is not on the surface (F = {0})")]
    NotOnSurface(String),
    #[error("predicted counts are negative: {0}")]
    ModelViolation(String),
    #[error("empty parameter range")]
    EmptyRange,
}

pub type Result<T> = std::result::Result<T, Error>;
