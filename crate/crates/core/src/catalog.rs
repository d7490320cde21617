//! Named directrices used by the examples, tests and the CLI suite.

use crate::directrix::{trig, RationalCurve};
use crate::poly::rational::{int, rat, Rational};
use crate::poly::{MultiPoly, QPoly};

fn q(coeffs: Vec<Rational>) -> QPoly {
    QPoly::new(coeffs)
}

/// `(1, t, b t + c)`.
pub fn line(b: &Rational, c: &Rational) -> RationalCurve {
    RationalCurve::new("line", [q(vec![int(1)]), q(vec![int(0), int(1)]), q(vec![c.clone(), b.clone()])], QPoly::one())
        .expect("valid curve")
}

/// Rectangular hyperbola `(t, 1/t, 0)`.
pub fn h1() -> RationalCurve {
    RationalCurve::from_ints("h1", [&[0, 0, 1], &[1], &[]], &[0, 1]).expect("valid curve")
}

/// Rectangular hyperbola `(1, t, 1/t)` in the plane `x = 1`.
pub fn h2() -> RationalCurve {
    RationalCurve::from_ints("h2", [&[0, 1], &[0, 0, 1], &[1]], &[0, 1]).expect("valid curve")
}

/// Twisted cubic circle `(t, t + t³, t²) / (1 + t²)`.
pub fn twisted_cubic() -> RationalCurve {
    RationalCurve::from_ints("twisted-cubic", [&[0, 1], &[0, 1, 0, 1], &[0, 0, 1]], &[1, 0, 1]).expect("valid curve")
}

fn trig_curve(name: &str, coords: [MultiPoly; 3]) -> RationalCurve {
    trig::ingest(name, coords).expect("valid trigonometric curve")
}

fn c() -> MultiPoly {
    trig::cos_t()
}

fn s() -> MultiPoly {
    trig::sin_t()
}

fn k(v: Rational) -> MultiPoly {
    MultiPoly::constant(2, v)
}

/// Horizontal circle `x² + y² = 9/16` at height `z = 5/4`.
pub fn latitude_circle() -> RationalCurve {
    trig_curve("latitude-circle", [c().scale(&rat(3, 4)), s().scale(&rat(3, 4)), k(rat(5, 4))])
}

/// Circle of radius `r` about the origin in `z = 0`.
pub fn circle_in_plane_z0(r: &Rational) -> RationalCurve {
    trig_curve("equator", [c().scale(r), s().scale(r), MultiPoly::zero(2)])
}

/// Ellipse `((1/2) cos t, 2 sin t, 0)`.
pub fn ellipse_fig12a() -> RationalCurve {
    trig_curve("ellipse-fig12a", [c().scale(&rat(1, 2)), s().scale(&int(2)), MultiPoly::zero(2)])
}

/// Ellipse `((3/2) cos t, 3 sin t − 1, 0)`.
pub fn ellipse_fig12b() -> RationalCurve {
    trig_curve("ellipse-fig12b", [c().scale(&rat(3, 2)), &s().scale(&int(3)) - &k(int(1)), MultiPoly::zero(2)])
}

/// Cyclic-harmonic curve `ρ = cos(n t) + k` in `z = 0`.
pub fn cyclic_harmonic(n: u32, shift: &Rational) -> RationalCurve {
    let (cn, _) = trig::multiple_angle(n);
    let rho = &cn + &k(shift.clone());
    trig_curve("cyclic-harmonic", [&rho * &c(), &rho * &s(), MultiPoly::zero(2)])
}

/// `(4 cos t + cos 4t, 4 sin t − sin 4t, 0)`.
pub fn hypocycloid_fig7() -> RationalCurve {
    let (c4, s4) = trig::multiple_angle(4);
    trig_curve("fig7-curve", [&c().scale(&int(4)) + &c4, &s().scale(&int(4)) - &s4, MultiPoly::zero(2)])
}

/// `(9 cos t − 4 cos(9t/2), 9 sin t − 4 cos(9t/2), 0)` written in the half
/// angle `s = t/2`, so the parameter runs once around for `s ∈ [0, 2π)`.
pub fn rose_fig6() -> RationalCurve {
    let (c2, s2) = trig::multiple_angle(2);
    let (c9, _) = trig::multiple_angle(9);
    let four_c9 = c9.scale(&int(4));
    trig_curve("fig6-curve", [&c2.scale(&int(9)) - &four_c9, &s2.scale(&int(9)) - &four_c9, MultiPoly::zero(2)])
}

/// Named lookup used by the CLI; `b, c` default to `1, 2` for the line.
pub fn by_name(name: &str) -> Option<RationalCurve> {
    Some(match name {
        "line" => line(&int(1), &int(2)),
        "h1" => h1(),
        "h2" => h2(),
        "twisted-cubic" => twisted_cubic(),
        "latitude-circle" => latitude_circle(),
        "ellipse-fig12a" => ellipse_fig12a(),
        "ellipse-fig12b" => ellipse_fig12b(),
        "cyclic-harmonic" => cyclic_harmonic(3, &int(2)),
        "fig7-curve" => hypocycloid_fig7(),
        "fig6-curve" => rose_fig6(),
        _ => return None,
    })
}

pub const NAMES: [&str; 10] = [
    "line",
    "h1",
    "h2",
    "twisted-cubic",
    "latitude-circle",
    "ellipse-fig12a",
    "ellipse-fig12b",
    "cyclic-harmonic",
    "fig7-curve",
    "fig6-curve",
];
