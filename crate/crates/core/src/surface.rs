//! Parametric evaluation of the circular surface, its standard form
//! `γ(t) + r(t)(cos θ a1(t) + sin θ a2)`, and singular candidates.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::congruence::{CongruenceParam, Point3};
use crate::directrix::{BinaryForm, RationalCurve};
use crate::error::{Error, Result};
use crate::poly::rational::{self, to_f64, Rational};
use crate::poly::resultant::resultant;
use crate::poly::{gcd, Interval, MultiPoly, QPoly, UniPoly};

/// Floating-point copy of a curve for fast repeated evaluation.
#[derive(Clone, Debug)]
pub struct CurveF64 {
    f: [Vec<f64>; 3],
    g: Vec<f64>,
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, v| acc * t + v)
}

impl CurveF64 {
    pub fn new(c: &RationalCurve) -> Self {
        let conv = |p: &QPoly| p.coeffs().iter().map(to_f64).collect::<Vec<_>>();
        CurveF64 { f: [conv(&c.f[0]), conv(&c.f[1]), conv(&c.f[2])], g: conv(&c.g) }
    }

    pub fn eval(&self, t: f64) -> Result<Point3> {
        let g = horner(&self.g, t);
        if g == 0.0 || !g.is_finite() {
            return Err(Error::PoleAtParameter(format!("{t}")));
        }
        Ok([horner(&self.f[0], t) / g, horner(&self.f[1], t) / g, horner(&self.f[2], t) / g])
    }
}

/// Circle data of the surface at one parameter value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleFrame {
    pub gamma: Point3,
    pub r_squared: f64,
    pub a1: Point3,
    pub a2: Point3,
}

impl CircleFrame {
    pub fn point(&self, theta: f64) -> Point3 {
        let r = self.r_squared.max(0.0).sqrt();
        let (c, s) = (theta.cos(), theta.sin());
        [
            self.gamma[0] + r * (c * self.a1[0] + s * self.a2[0]),
            self.gamma[1] + r * (c * self.a1[1] + s * self.a2[1]),
            self.gamma[2] + r * (c * self.a1[2] + s * self.a2[2]),
        ]
    }
}

/// Frame of the congruence circle through a directrix point `a`.
pub fn frame_at_point(q: f64, a: Point3) -> Result<CircleFrame> {
    let rho0_sq = a[0] * a[0] + a[1] * a[1];
    if rho0_sq == 0.0 {
        return Err(Error::PointOnAxis(format!("({}, {}, {})", a[0], a[1], a[2])));
    }
    let rho0 = rho0_sq.sqrt();
    let excess = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] - q;
    let scale = excess / (2.0 * rho0_sq);
    // = (ρ0² − z² + q)² + 4 ρ0² z² ≥ 0
    let radicand = 4.0 * q * rho0_sq + excess * excess;
    Ok(CircleFrame {
        gamma: [scale * a[0], scale * a[1], 0.0],
        r_squared: (radicand / (4.0 * rho0_sq)).max(0.0),
        a1: [a[0] / rho0, a[1] / rho0, 0.0],
        a2: [0.0, 0.0, 1.0],
    })
}

/// Point of the surface at `(t, θ)`.
pub fn eval_surface(c: &RationalCurve, q: &CongruenceParam, t: f64, theta: f64) -> Result<Point3> {
    Ok(standard_form(c, q).frame(t)?.point(theta))
}

/// Same as [`eval_surface`] at a rational parameter, evaluating the curve exactly.
pub fn eval_surface_rational(c: &RationalCurve, q: &CongruenceParam, t: &Rational, theta: f64) -> Result<Point3> {
    let a = c.eval(t)?;
    let a = [to_f64(&a[0]), to_f64(&a[1]), to_f64(&a[2])];
    Ok(frame_at_point(q.q_f64(), a)?.point(theta))
}

/// Evaluators for `γ`, `r²`, `a1`, `a2`.
#[derive(Clone, Debug)]
pub struct StandardForm {
    curve: CurveF64,
    q: f64,
}

impl StandardForm {
    pub fn frame(&self, t: f64) -> Result<CircleFrame> {
        frame_at_point(self.q, self.curve.eval(t)?)
    }

    pub fn gamma(&self, t: f64) -> Result<Point3> {
        Ok(self.frame(t)?.gamma)
    }

    pub fn r_squared(&self, t: f64) -> Result<f64> {
        Ok(self.frame(t)?.r_squared)
    }

    pub fn a1(&self, t: f64) -> Result<Point3> {
        Ok(self.frame(t)?.a1)
    }

    pub fn a2(&self) -> Point3 {
        [0.0, 0.0, 1.0]
    }

    pub fn curve(&self) -> &CurveF64 {
        &self.curve
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

pub fn standard_form(c: &RationalCurve, q: &CongruenceParam) -> StandardForm {
    StandardForm { curve: CurveF64::new(c), q: q.q_f64() }
}

/// Exact `r²(t) = q + (‖α‖² − q)² / (4 ‖α_xy‖²)` at a rational parameter.
pub fn r_squared_exact(c: &RationalCurve, q: &CongruenceParam, t: &Rational) -> Result<Rational> {
    let a = c.eval(t)?;
    let rho0_sq = &a[0] * &a[0] + &a[1] * &a[1];
    if rho0_sq.is_zero() {
        return Err(Error::PointOnAxis(rational::format_rational(t)));
    }
    let excess = &rho0_sq + &a[2] * &a[2] - &q.q;
    Ok(&q.q + &excess * &excess / (rational::int(4) * rho0_sq))
}

/// A parameter on the curve; `None` stands for the parameter at infinity.
pub type Param = Option<f64>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SingularCandidate {
    /// Two curve points on one congruence circle: a multiple circle.
    SingularCircle(Param, Param),
    /// Curve point on `c(0)`: a zero-radius circle, a double point.
    PinchPoint(Param),
    /// Singular point of the directrix itself.
    CurveSingularity(Param),
}

/// Double points off the singular lines: pinch points and points of singular
/// circles are both counted once per candidate.
pub fn double_point_count(cands: &[SingularCandidate]) -> usize {
    cands
        .iter()
        .filter(|c| matches!(c, SingularCandidate::PinchPoint(_) | SingularCandidate::SingularCircle(..)))
        .count()
}

fn real_roots_of_form(form: &BinaryForm) -> Result<Vec<Param>> {
    if form.is_zero() {
        return Err(Error::Domain("identically vanishing condition".into()));
    }
    let mut out: Vec<Param> = crate::poly::real_roots_f64(&form.poly, &Interval::all(), 1e-14)?
        .into_iter()
        .map(|(r, _)| Some(r))
        .collect();
    if form.degree > form.poly.degree().unwrap_or(0) {
        out.push(None);
    }
    Ok(out)
}

/// Curve points on `c(0)` (q < 0): `f3 = 0` and `f1² + f2² + q g² = 0`.
pub fn pinch_points(c: &RationalCurve, q: &CongruenceParam) -> Result<Vec<Param>> {
    if !q.q.is_negative() {
        return Ok(Vec::new());
    }
    let (f, g) = c.forms();
    let circle = f[0].mul(&f[0]).add(&f[1].mul(&f[1])).add(&g.mul(&g).scale(&q.q));
    let f3_sq = f[2].mul(&f[2]);
    let common = f3_sq.gcd(&circle);
    if common.is_zero() {
        return Err(Error::DegenerateCurve("directrix lies on c(0)".into()));
    }
    real_roots_of_form(&common)
}

/// Real parameters where `α'` vanishes (all `f_i' g − f_i g'` share a root).
pub fn curve_singular_parameters(c: &RationalCurve) -> Result<Vec<Param>> {
    let gp = c.g.derivative();
    let mut acc = QPoly::zero();
    for fi in &c.f {
        let w = &(&fi.derivative() * &c.g) - &(fi * &gp);
        acc = acc.gcd(&w);
    }
    if acc.is_zero() {
        return Err(Error::DegenerateCurve("constant parametrization".into()));
    }
    if acc.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    Ok(crate::poly::real_roots_f64(&acc, &Interval::all(), 1e-14)?.into_iter().map(|(r, _)| Some(r)).collect())
}

/// The correspondence polynomials `C1(t1, t2)`, `C2(t1, t2)` (variables 0, 1)
/// with every power of `t1 − t2` divided out.
pub fn correspondence_system(c: &RationalCurve, q: &CongruenceParam) -> (MultiPoly, MultiPoly) {
    let lift = |p: &QPoly, var: usize| p.to_multi(2, var);
    let (f1a, f2a, f3a, ga) = (lift(&c.f[0], 0), lift(&c.f[1], 0), lift(&c.f[2], 0), lift(&c.g, 0));
    let (f1b, f2b, f3b, gb) = (lift(&c.f[0], 1), lift(&c.f[1], 1), lift(&c.f[2], 1), lift(&c.g, 1));
    let qc = MultiPoly::constant(2, q.q.clone());
    let c1 = &(&f1a * &f2b) - &(&f2a * &f1b);
    let na = &(&(&f1a * &f1a) + &(&f2a * &f2a)) + &(&f3a * &f3a);
    let nb = &(&(&f1b * &f1b) + &(&f2b * &f2b)) + &(&f3b * &f3b);
    let excess_a = &na - &(&qc * &(&ga * &ga));
    let excess_b = &nb - &(&qc * &(&gb * &gb));
    let dot = &(&f1a * &f1b) + &(&f2a * &f2b);
    let horiz_a = &(&f1a * &f1a) + &(&f2a * &f2a);
    let c2 = &(&(&dot * &excess_a) * &gb) - &(&(&horiz_a * &excess_b) * &ga);
    let diag = &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1);
    (c1.divide_out(&diag).0, c2.divide_out(&diag).0)
}

/// Real off-diagonal pairs `(t1 < t2)` on a common congruence circle, in one
/// parameter chart. Pairs through poles or axis points are dropped.
fn singular_circle_pairs_chart(c: &RationalCurve, q: &CongruenceParam) -> Result<Vec<(f64, f64)>> {
    let (c1, c2) = correspondence_system(c, q);
    if c1.is_zero() || c2.is_zero() {
        return Err(Error::DegenerateCurve("correspondence condition vanishes identically".into()));
    }
    if c1.is_constant() || c2.is_constant() {
        return Ok(Vec::new());
    }
    let common = gcd(&c1, &c2);
    if !common.is_constant() {
        return Err(Error::DegenerateCurve("curve meets a congruence circle along a component".into()));
    }
    let res = resultant(&UniPoly::from_multi(&c1, 1), &UniPoly::from_multi(&c2, 1))?;
    if res.is_zero() {
        return Err(Error::CommonComponent);
    }
    let res_t1 = QPoly::from_multi(&res, 0)?;
    if res_t1.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let t1_roots = crate::poly::isolate_real_roots(&res_t1, &Interval::all())?;
    let curve = CurveF64::new(c);
    let mut pairs = Vec::new();
    for root in &t1_roots {
        let t1 = crate::poly::roots::refine_root(&res_t1, root, 1e-30);
        let t1_rat = rational::from_f64(t1).ok_or_else(|| Error::Domain("non-finite root".into()))?;
        let c1_at = QPoly::from_multi(&c1.substitute(0, &t1_rat), 1)?;
        if c1_at.is_zero() || c1_at.degree().unwrap_or(0) == 0 {
            continue;
        }
        let c2_at = c2.substitute(0, &t1_rat);
        let c2_scale = c2_at.max_abs_coeff().max(f64::MIN_POSITIVE);
        for (t2, _) in crate::poly::real_roots_f64(&c1_at, &Interval::all(), 1e-15)? {
            if (t1 - t2).abs() < 1e-7 * (1.0 + t1.abs()) {
                continue;
            }
            let resid = c2_at.eval_f64(&[0.0, t2]).abs() / (c2_scale * (1.0 + t2.abs()).powi(c2_at.degree().unwrap_or(0) as i32));
            if resid > 1e-8 {
                continue;
            }
            let (Ok(a), Ok(b)) = (curve.eval(t1), curve.eval(t2)) else { continue };
            if a[0].hypot(a[1]) < 1e-12 || b[0].hypot(b[1]) < 1e-12 {
                continue;
            }
            pairs.push((t1.min(t2), t1.max(t2)));
        }
    }
    pairs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pairs.dedup_by(|x, y| (x.0 - y.0).abs() < 1e-9 && (x.1 - y.1).abs() < 1e-9);
    Ok(pairs)
}

/// Singular candidates: multiple circles, pinch points and curve
/// singularities. The parameter at infinity is covered by the chart `t = 1/s`.
pub fn singular_candidates(c: &RationalCurve, q: &CongruenceParam) -> Result<Vec<SingularCandidate>> {
    let mut out = Vec::new();
    let curve = CurveF64::new(c);

    let mut pairs: Vec<(Param, Param)> = Vec::new();
    for (t1, t2) in singular_circle_pairs_chart(c, q)? {
        pairs.push((Some(t1), Some(t2)));
    }
    // pairs with one end at infinity show up at s = 0 in the inverted chart
    for (s1, s2) in singular_circle_pairs_chart(&c.inverted_chart(), q)? {
        let to_t = |s: f64| if s.abs() < 1e-9 { None } else { Some(1.0 / s) };
        let (a, b) = (to_t(s1), to_t(s2));
        if a.is_none() || b.is_none() {
            pairs.push((a, b));
        }
    }
    for (a, b) in pairs {
        // coincident curve points are self-intersections of the directrix
        let pa = a.map(|t| curve.eval(t));
        let pb = b.map(|t| curve.eval(t));
        if let (Some(Ok(x)), Some(Ok(y))) = (&pa, &pb) {
            let d = ((x[0] - y[0]).powi(2) + (x[1] - y[1]).powi(2) + (x[2] - y[2]).powi(2)).sqrt();
            if d < 1e-9 * (1.0 + x[0].abs() + x[1].abs() + x[2].abs()) {
                out.push(SingularCandidate::CurveSingularity(a));
                out.push(SingularCandidate::CurveSingularity(b));
                continue;
            }
        }
        out.push(SingularCandidate::SingularCircle(a, b));
    }
    for t in pinch_points(c, q)? {
        out.push(SingularCandidate::PinchPoint(t));
    }
    for t in curve_singular_parameters(c)? {
        out.push(SingularCandidate::CurveSingularity(t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poly::rational::int;
    use std::f64::consts::FRAC_PI_2;

    fn q(v: i64) -> CongruenceParam {
        CongruenceParam::from_int(v)
    }

    fn close(a: Point3, b: Point3, tol: f64) -> bool {
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn line_sample_point() {
        let l = catalog::line(&int(1), &int(2));
        let p = eval_surface(&l, &q(1), 0.0, FRAC_PI_2).unwrap();
        assert!(close(p, [2.0, 0.0, 5f64.sqrt()], 1e-14));
        // on Eq. (8) with b = 1, c = 2, p² = 1
        let [x, y, z] = p;
        let a = x * x + y * y + z * z;
        let f = x * a - x * x * 4.0 - 4.0 * x * y - 2.0 * y * y - x;
        assert!(f.abs() < 1e-12);
    }

    #[test]
    fn every_circle_passes_p1() {
        let l = catalog::line(&int(1), &int(2));
        let fr = standard_form(&l, &q(1)).frame(0.7).unwrap();
        let r = fr.r_squared.sqrt();
        let rho_c = fr.gamma[0].hypot(fr.gamma[1]) * (fr.gamma[0] * fr.a1[0] + fr.gamma[1] * fr.a1[1]).signum();
        let theta = (1.0 / r).asin();
        let theta = if (r * theta.cos() + rho_c).abs() < 1e-12 { theta } else { std::f64::consts::PI - theta };
        assert!(close(fr.point(theta), [0.0, 0.0, 1.0], 1e-12));
    }

    #[test]
    fn h1_sample_on_eq9() {
        let h1 = catalog::h1();
        let [x, y, z] = eval_surface(&h1, &q(1), 1.0, 0.0).unwrap();
        let a = x * x + y * y + z * z;
        let f = x * y * a * a - (x.powi(4) + 2.0 * x * x * y * y + x * x * y * y + y.powi(4) + 2.0 * x * y * z * z) + x * y;
        assert!(f.abs() < 1e-12);
    }

    #[test]
    fn standard_form_values() {
        let l = catalog::line(&int(1), &int(2));
        let fr = standard_form(&l, &q(1)).frame(0.0).unwrap();
        assert!(close(fr.gamma, [2.0, 0.0, 0.0], 1e-15));
        assert!((fr.r_squared - 5.0).abs() < 1e-14);
        assert!(close(fr.a1, [1.0, 0.0, 0.0], 1e-15));
        assert_eq!(fr.a2, [0.0, 0.0, 1.0]);
        let lat = catalog::latitude_circle();
        let sf = standard_form(&lat, &q(1));
        for u in [-3.0, 0.2, 1.5] {
            let fr = sf.frame(u).unwrap();
            assert!((fr.r_squared - 25.0 / 16.0).abs() < 1e-13);
            assert!((fr.gamma[0].hypot(fr.gamma[1]) - 0.75).abs() < 1e-13);
        }
    }

    #[test]
    fn axis_points_are_rejected() {
        let t = catalog::twisted_cubic();
        assert!(matches!(eval_surface(&t, &q(1), 0.0, 0.0), Err(Error::PointOnAxis(_))));
    }

    #[test]
    fn exact_radius() {
        let l = catalog::line(&int(1), &int(2));
        assert_eq!(r_squared_exact(&l, &q(1), &int(0)).unwrap(), int(5));
        let zero = crate::directrix::RationalCurve::from_ints("l", [&[1], &[0, 1], &[]], &[1]).unwrap();
        assert_eq!(r_squared_exact(&zero, &q(-1), &int(0)).unwrap(), int(0));
    }

    #[test]
    fn line_has_no_singular_circles() {
        let l = catalog::line(&int(1), &int(2));
        let c = singular_candidates(&l, &q(1)).unwrap();
        assert!(c.is_empty(), "{c:?}");
    }

    #[test]
    fn planted_singular_circle() {
        // meets the circle through (2, 0, 0) (q = 1) again at (3/4, 0, 5/4)
        let c = RationalCurve::new(
            "parabola",
            [
                QPoly::new(vec![int(2), rational::rat(-5, 4)]),
                QPoly::from_ints(&[0, 1, -1]),
                QPoly::new(vec![int(0), rational::rat(5, 4)]),
            ],
            QPoly::one(),
        )
        .unwrap();
        let cands = singular_candidates(&c, &q(1)).unwrap();
        let found = cands.iter().any(|s| match s {
            SingularCandidate::SingularCircle(Some(a), Some(b)) => a.abs() < 1e-9 && (b - 1.0).abs() < 1e-9,
            _ => false,
        });
        assert!(found, "{cands:?}");
    }

    #[test]
    fn fig12_double_points() {
        let a = singular_candidates(&catalog::ellipse_fig12a(), &q(-1)).unwrap();
        assert_eq!(double_point_count(&a), 4, "{a:?}");
        let b = singular_candidates(&catalog::ellipse_fig12b(), &q(-4)).unwrap();
        assert_eq!(double_point_count(&b), 3, "{b:?}");
    }
}
