//! Circular surfaces generated by a congruence of circles through two fixed
//! points: exact implicitization and degree/multiplicity analysis.

pub mod analysis;
pub mod catalog;
pub mod congruence;
pub mod directrix;
pub mod error;
pub mod implicitize;
pub mod mesh;
pub mod poly;
pub mod surface;

pub use congruence::{CongruenceClass, CongruenceParam, Point3};
pub use directrix::{CurveInvariants, DegeneratePosition, RationalCurve};
pub use error::{Error, Result};
pub use poly::{MultiPoly, QPoly, Rational, UniPoly};
