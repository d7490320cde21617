//! Exact polynomial kernel.

pub mod gcd;
pub mod json;
pub mod multi;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod uni;

pub use gcd::{content_and_primitive, content_in, content_in_vars, gcd, perfect_root};
pub use json::{poly_from_json_str, poly_to_json_string, PolyJson};
pub use multi::{absolute_quadric, xyz, Monomial, MultiPoly, DEFAULT_VARS};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use resultant::{resultant, sylvester_resultant};
pub use roots::{count_real_roots, isolate_real_roots, real_roots_f64, Interval, IsolatedRoot, Sturm};
pub use uni::{QPoly, UniPoly};
