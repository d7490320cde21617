//! Directrix curves as rational parametrizations `(f1, f2, f3) / g` with
//! homogeneous parameter `(t : u)`, and the invariants that drive the
//! degree/multiplicity formulas.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::congruence::{CongruenceParam, Point3};
use crate::error::{Error, Result};
use crate::poly::rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
use crate::poly::{MultiPoly, QPoly};

/// A binary form of formal degree `degree`, stored dehomogenized at `u = 1`.
/// The root at `(1 : 0)` has multiplicity `degree − deg poly`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    pub poly: QPoly,
    pub degree: usize,
}

impl BinaryForm {
    pub fn new(poly: QPoly, degree: usize) -> Self {
        debug_assert!(poly.degree().unwrap_or(0) <= degree);
        BinaryForm { poly, degree }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn infinity_mult(&self) -> usize {
        if self.poly.is_zero() {
            usize::MAX
        } else {
            self.degree - self.poly.degree().unwrap_or(0)
        }
    }

    /// Gcd as forms; the zero form is absorbed.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.poly.gcd(&other.poly);
        let inf = self.infinity_mult().min(other.infinity_mult());
        BinaryForm { degree: g.degree().unwrap_or(0) + inf, poly: g }
    }

    /// Number of projective roots counted with multiplicity.
    pub fn root_count(&self) -> usize {
        self.degree
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        BinaryForm { poly: &self.poly * &other.poly, degree: self.degree + other.degree }
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, other.degree, "forms of different degree");
        BinaryForm { poly: &self.poly + &other.poly, degree: self.degree }
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm { poly: self.poly.scale(c), degree: self.degree }
    }
}

/// Rational directrix `α(t) = (f1(t), f2(t), f3(t)) / g(t)`.
#[derive(Clone, PartialEq)]
pub struct RationalCurve {
    pub name: String,
    pub f: [QPoly; 3],
    pub g: QPoly,
}

impl fmt::Debug for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalCurve {:?}: ({}, {}, {}) / ({})", self.name, self.f[0], self.f[1], self.f[2], self.g)
    }
}

impl RationalCurve {
    /// Builds and normalizes (common factor of all four removed).
    pub fn new(name: impl Into<String>, f: [QPoly; 3], g: QPoly) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DegenerateCurve("denominator is identically zero".into()));
        }
        let mut c = RationalCurve { name: name.into(), f, g };
        c.normalize();
        Ok(c)
    }

    pub fn from_ints(name: &str, f: [&[i64]; 3], g: &[i64]) -> Result<Self> {
        Self::new(name, [QPoly::from_ints(f[0]), QPoly::from_ints(f[1]), QPoly::from_ints(f[2])], QPoly::from_ints(g))
    }

    fn normalize(&mut self) {
        let mut common = self.g.clone();
        for fi in &self.f {
            common = common.gcd(fi);
        }
        if common.degree().unwrap_or(0) > 0 {
            for fi in self.f.iter_mut() {
                *fi = fi.exact_div(&common).expect("nonzero").expect("gcd divides");
            }
            self.g = self.g.exact_div(&common).expect("nonzero").expect("gcd divides");
        }
        // monic denominator for a canonical representative
        let lc = self.g.leading_coeff();
        if !lc.is_one() {
            let inv = Rational::one() / lc;
            for fi in self.f.iter_mut() {
                *fi = fi.scale(&inv);
            }
            self.g = self.g.scale(&inv);
        }
    }

    /// `d = max(deg f1, deg f2, deg f3, deg g)`.
    pub fn degree_hom(&self) -> usize {
        self.f.iter().chain(std::iter::once(&self.g)).filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Numerators and denominator as binary forms of degree `d`.
    pub fn forms(&self) -> ([BinaryForm; 3], BinaryForm) {
        let d = self.degree_hom();
        (
            [
                BinaryForm::new(self.f[0].clone(), d),
                BinaryForm::new(self.f[1].clone(), d),
                BinaryForm::new(self.f[2].clone(), d),
            ],
            BinaryForm::new(self.g.clone(), d),
        )
    }

    pub fn eval(&self, t: &Rational) -> Result<[Rational; 3]> {
        let g = self.g.eval(t);
        if g.is_zero() {
            return Err(Error::PoleAtParameter(format_rational(t)));
        }
        Ok([self.f[0].eval(t) / &g, self.f[1].eval(t) / &g, self.f[2].eval(t) / &g])
    }

    pub fn eval_f64(&self, t: f64) -> Result<Point3> {
        let g = self.g.eval_f64(t);
        if g == 0.0 || !g.is_finite() {
            return Err(Error::PoleAtParameter(format!("{t}")));
        }
        Ok([self.f[0].eval_f64(t) / g, self.f[1].eval_f64(t) / g, self.f[2].eval_f64(t) / g])
    }

    /// Reparametrization `t -> (a t + b) / (c t + e)`, `a e − b c ≠ 0`.
    pub fn mobius(&self, a: &Rational, b: &Rational, c: &Rational, e: &Rational) -> Result<RationalCurve> {
        if (a * e - b * c).is_zero() {
            return Err(Error::Domain("singular Möbius map".into()));
        }
        let d = self.degree_hom();
        let m = |p: &QPoly| p.mobius(d, a, b, c, e);
        RationalCurve::new(self.name.clone(), [m(&self.f[0]), m(&self.f[1]), m(&self.f[2])], m(&self.g))
    }

    /// The chart `t = 1/s`, covering the parameter at infinity.
    pub fn inverted_chart(&self) -> RationalCurve {
        self.mobius(&int(0), &int(1), &int(1), &int(0)).expect("inversion is regular")
    }

    /// Real roots of `g`: poles of the parametrization.
    pub fn real_poles(&self) -> Vec<f64> {
        if self.g.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        crate::poly::real_roots_f64(&self.g, &crate::poly::Interval::all(), 1e-15)
            .map(|v| v.into_iter().map(|(r, _)| r).collect())
            .unwrap_or_default()
    }

    /// `f1² + f2²` (squared horizontal norm times `g²`).
    pub fn horizontal_norm_numerator(&self) -> QPoly {
        &(&self.f[0] * &self.f[0]) + &(&self.f[1] * &self.f[1])
    }

    /// `f1² + f2² + f3²`.
    pub fn norm_numerator(&self) -> QPoly {
        &self.horizontal_norm_numerator() + &(&self.f[2] * &self.f[2])
    }
}

/// Counts along the directrix entering the degree/multiplicity formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub m: usize,
    pub z_prime: usize,
    pub a_prime: usize,
    pub p1_prime: usize,
    pub p2_prime: usize,
    /// `q = 0`: `P1 = P2` and the merged count sits in `p1_prime`.
    pub coincident_points: bool,
    /// Number of parameter values over a generic curve point (1 for proper
    /// parametrizations); counts above are already divided by it.
    pub covering: usize,
}

impl CurveInvariants {
    pub fn p_sum(&self) -> usize {
        self.p1_prime + self.p2_prime
    }

    pub fn tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.m, self.z_prime, self.a_prime, self.p1_prime, self.p2_prime)
    }
}

/// Covering index of the parametrization: the degree of the common factor of
/// `f_i(t) g(t0) − f_i(t0) g(t)` at generic `t0`.
pub fn covering_index(c: &RationalCurve) -> Result<usize> {
    let (f, g) = c.forms();
    let mut best: Option<usize> = None;
    for t0 in [rat(17, 5), rat(-23, 7), rat(41, 13)] {
        let g0 = c.g.eval(&t0);
        let mut acc = BinaryForm::new(QPoly::zero(), g.degree);
        for fi in &f {
            let fi0 = fi.poly.eval(&t0);
            let h = fi.scale(&g0).add(&g.scale(&-fi0));
            acc = acc.gcd(&h);
        }
        if acc.is_zero() {
            return Err(Error::DegenerateCurve(format!("{}: image is a single point", c.name)));
        }
        let k = acc.root_count();
        best = Some(best.map_or(k, |b: usize| b.min(k)));
    }
    Ok(best.unwrap_or(1).max(1))
}

/// Order `m` of the curve.
pub fn curve_order(c: &RationalCurve) -> Result<usize> {
    let d = c.degree_hom();
    let k = covering_index(c)?;
    if !d.is_multiple_of(k) {
        return Err(Error::DegenerateCurve(format!("covering index {k} does not divide degree {d}")));
    }
    Ok(d / k)
}

/// Plane section degree: roots of `a f1 + b f2 + c f3 + e g` as a form of
/// degree `d`, divided by the covering index.
pub fn generic_plane_section_count(c: &RationalCurve, plane: [Rational; 4]) -> Result<usize> {
    let (f, g) = c.forms();
    let mut acc = g.scale(&plane[3]);
    for (fi, a) in f.iter().zip(&plane) {
        acc = acc.add(&fi.scale(a));
    }
    if acc.is_zero() {
        return Err(Error::Domain("curve lies in the test plane".into()));
    }
    Ok(acc.root_count() / covering_index(c)?)
}

pub fn invariants(c: &RationalCurve, q: &CongruenceParam) -> Result<CurveInvariants> {
    if c.f[0].is_zero() && c.f[1].is_zero() {
        return Err(Error::PointOnAxis(format!("{}: curve lies on the z-axis", c.name)));
    }
    let d = c.degree_hom();
    let k = covering_index(c)?;
    let (f, g) = c.forms();

    let on_axis = f[0].gcd(&f[1]);
    let f3_sq = f[2].mul(&f[2]);
    let g_sq = g.mul(&g);
    let at_fixed = on_axis.gcd(&f3_sq.add(&g_sq.scale(&-q.q.clone())));
    let p_total = at_fixed.root_count();
    let z_raw = on_axis.root_count() - p_total;

    let norm = f[0].mul(&f[0]).add(&f[1].mul(&f[1])).add(&f3_sq);
    let abs_raw = g.gcd(&norm).root_count();

    let (p1_raw, p2_raw) = if q.q.is_zero() {
        (p_total, 0)
    } else if let Some(p) = q.rational_p() {
        let plus = on_axis.gcd(&f[2].add(&g.scale(&-p.clone()))).root_count();
        let minus = on_axis.gcd(&f[2].add(&g.scale(&p))).root_count();
        (plus, minus)
    } else {
        (p_total - p_total / 2, p_total / 2)
    };

    let div = |n: usize, what: &str| -> Result<usize> {
        if !n.is_multiple_of(k) {
            Err(Error::DegenerateCurve(format!("{what} count {n} not divisible by covering index {k}")))
        } else {
            Ok(n / k)
        }
    };
    if abs_raw % 2 != 0 {
        return Err(Error::ModelViolation(format!("odd absolute-point count {abs_raw}")));
    }
    Ok(CurveInvariants {
        m: div(d, "degree")?,
        z_prime: div(z_raw, "z-axis")?,
        a_prime: div(abs_raw / 2, "absolute-point pair")?,
        p1_prime: div(p1_raw, "P1")?,
        p2_prime: div(p2_raw, "P2")?,
        coincident_points: q.q.is_zero(),
        covering: k,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum DegeneratePosition {
    /// The curve lies in a plane through the z-axis with this direction.
    InPlaneZeta { direction: [Rational; 2] },
    /// The curve lies on the torus `τ(r)` of circles with radius² `r_squared`.
    OnTorus { r_squared: Rational },
    /// The curve lies on the sphere `ρ_C = 0`, `r² = q`.
    OnSphereS,
    Generic,
}

impl DegeneratePosition {
    pub fn unit_direction(&self) -> Option<[f64; 2]> {
        match self {
            DegeneratePosition::InPlaneZeta { direction } => {
                let (a, b) = (to_f64(&direction[0]), to_f64(&direction[1]));
                let n = a.hypot(b);
                Some([a / n, b / n])
            }
            _ => None,
        }
    }

    pub fn diagnosis(&self) -> String {
        match self {
            DegeneratePosition::InPlaneZeta { direction } => format!(
                "directrix lies in the plane through the z-axis with direction ({}, {}); the circular surface is that plane, counted with multiplicity",
                format_rational(&direction[0]),
                format_rational(&direction[1])
            ),
            DegeneratePosition::OnTorus { r_squared } => format!(
                "directrix lies on the torus of congruence circles with r² = {}; the circular surface is that torus, counted with multiplicity",
                format_rational(r_squared)
            ),
            DegeneratePosition::OnSphereS => "directrix lies on the sphere through P1, P2 centered at the origin".into(),
            DegeneratePosition::Generic => "generic position".into(),
        }
    }
}

pub fn detect_degenerate_position(c: &RationalCurve, q: &CongruenceParam) -> DegeneratePosition {
    let (f1, f2) = (&c.f[0], &c.f[1]);
    if f1.is_zero() || f2.is_zero() || (&f1.scale(&f2.leading_coeff()) - &f2.scale(&f1.leading_coeff())).is_zero() {
        let direction = if f1.is_zero() && f2.is_zero() {
            [int(1), int(0)]
        } else if f1.is_zero() {
            [int(0), int(1)]
        } else if f2.is_zero() {
            [int(1), int(0)]
        } else {
            [f1.leading_coeff(), f2.leading_coeff()]
        };
        return DegeneratePosition::InPlaneZeta { direction };
    }
    // (N − q g²)² = 4 K (f1² + f2²) g² with K = ρ_C²
    let lhs = {
        let s = &c.norm_numerator() - &(&c.g * &c.g).scale(&q.q);
        &s * &s
    };
    let rhs = (&c.horizontal_norm_numerator() * &(&c.g * &c.g)).scale(&int(4));
    if lhs.is_zero() {
        return DegeneratePosition::OnSphereS;
    }
    if lhs.degree() != rhs.degree() {
        return DegeneratePosition::Generic;
    }
    let k = lhs.leading_coeff() / rhs.leading_coeff();
    if rhs.scale(&k) != lhs || k.is_negative() {
        return DegeneratePosition::Generic;
    }
    DegeneratePosition::OnTorus { r_squared: k + &q.q }
}

/// Curve spec JSON with ascending coefficient lists.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub name: String,
    pub numerators: Vec<Vec<serde_json::Value>>,
    pub denominator: Vec<serde_json::Value>,
    #[serde(default)]
    pub coeffs_as: Option<String>,
}

fn coeff_from_json(v: &serde_json::Value) -> Result<Rational> {
    match v {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("coefficient must be a string or number, got {other}"))),
    }
}

fn qpoly_from_json(list: &[serde_json::Value]) -> Result<QPoly> {
    Ok(QPoly::new(list.iter().map(coeff_from_json).collect::<Result<Vec<_>>>()?))
}

impl CurveSpec {
    pub fn from_curve(c: &RationalCurve) -> Self {
        let enc = |p: &QPoly| p.coeffs().iter().map(|r| serde_json::Value::String(format_rational(r))).collect();
        CurveSpec {
            name: c.name.clone(),
            numerators: c.f.iter().map(enc).collect(),
            denominator: enc(&c.g),
            coeffs_as: Some("rational-strings".into()),
        }
    }

    pub fn to_curve(&self) -> Result<RationalCurve> {
        if self.numerators.len() != 3 {
            return Err(Error::Parse(format!("expected 3 numerators, got {}", self.numerators.len())));
        }
        if let Some(kind) = &self.coeffs_as {
            if kind != "rational-strings" && kind != "numbers" {
                return Err(Error::Parse(format!("unknown coeffs_as {kind:?}")));
            }
        }
        let f = [
            qpoly_from_json(&self.numerators[0])?,
            qpoly_from_json(&self.numerators[1])?,
            qpoly_from_json(&self.numerators[2])?,
        ];
        RationalCurve::new(self.name.clone(), f, qpoly_from_json(&self.denominator)?)
    }
}

pub fn curve_from_json_str(s: &str) -> Result<RationalCurve> {
    let spec: CurveSpec = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    spec.to_curve()
}

pub fn curve_to_json_string(c: &RationalCurve) -> String {
    serde_json::to_string_pretty(&CurveSpec::from_curve(c)).expect("plain data serializes")
}

/// Trigonometric polynomials in `(cos t, sin t)`, as `MultiPoly` in two
/// variables `c, s`.
pub mod trig {
    use super::*;

    pub fn cos_t() -> MultiPoly {
        MultiPoly::var(2, 0)
    }

    pub fn sin_t() -> MultiPoly {
        MultiPoly::var(2, 1)
    }

    /// `(cos nt, sin nt)` from the real and imaginary parts of `(c + i s)^n`.
    pub fn multiple_angle(n: u32) -> (MultiPoly, MultiPoly) {
        let mut re = MultiPoly::one(2);
        let mut im = MultiPoly::zero(2);
        let (c, s) = (cos_t(), sin_t());
        for _ in 0..n {
            let nre = &(&re * &c) - &(&im * &s);
            let nim = &(&re * &s) + &(&im * &c);
            re = nre;
            im = nim;
        }
        (re, im)
    }

    /// Tan-half substitution `c = (1 − u²)/(1 + u²)`, `s = 2u/(1 + u²)` for the
    /// three coordinates; the parameter becomes `u = tan(t/2)`.
    pub fn ingest(name: &str, coords: [MultiPoly; 3]) -> Result<RationalCurve> {
        let dmax = coords.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        let one_plus = QPoly::from_ints(&[1, 0, 1]);
        let one_minus = QPoly::from_ints(&[1, 0, -1]);
        let two_u = QPoly::from_ints(&[0, 2]);
        let convert = |p: &MultiPoly| -> QPoly {
            let mut acc = QPoly::zero();
            for (m, coef) in p.terms() {
                let (i, j) = (m.exps()[0], m.exps()[1]);
                let rest = dmax - i - j;
                let term = &(&one_minus.pow(i) * &two_u.pow(j)) * &one_plus.pow(rest);
                acc = &acc + &term.scale(coef);
            }
            acc
        };
        let f = [convert(&coords[0]), convert(&coords[1]), convert(&coords[2])];
        RationalCurve::new(name, f, one_plus.pow(dmax))
    }

    /// Parameter `u = tan(t/2)` of an angle, `None` at `t = π`.
    pub fn tan_half_of(t: f64) -> Option<f64> {
        let c = (t / 2.0).cos();
        if c.abs() < 1e-300 {
            None
        } else {
            Some((t / 2.0).tan())
        }
    }
}

/// Serializable summary of a curve for reports.
pub fn describe(c: &RationalCurve) -> String {
    format!(
        "{}: ({}, {}, {}) / ({}), d = {}",
        c.name,
        c.f[0],
        c.f[1],
        c.f[2],
        c.g,
        c.degree_hom()
    )
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q(v: i64) -> CongruenceParam {
        CongruenceParam::from_int(v)
    }

    #[test]
    fn evaluation() {
        let l = catalog::line(&int(1), &int(2));
        assert_eq!(l.eval(&int(0)).unwrap(), [int(1), int(0), int(2)]);
        let t = catalog::twisted_cubic();
        assert_eq!(t.eval(&int(0)).unwrap(), [int(0), int(0), int(0)]);
        let h1 = catalog::h1();
        assert_eq!(h1.eval(&int(2)).unwrap(), [int(2), rat(1, 2), int(0)]);
        assert!(matches!(h1.eval(&int(0)), Err(Error::PoleAtParameter(_))));
    }

    #[test]
    fn orders() {
        assert_eq!(curve_order(&catalog::line(&int(1), &int(2))).unwrap(), 1);
        assert_eq!(curve_order(&catalog::h1()).unwrap(), 2);
        assert_eq!(curve_order(&catalog::twisted_cubic()).unwrap(), 3);
        let point = RationalCurve::from_ints("pt", [&[1], &[2], &[3]], &[1]).unwrap();
        assert!(curve_order(&point).is_err());
        // t -> t² double cover of a line
        let dbl = RationalCurve::from_ints("dbl", [&[1], &[0, 0, 1], &[0]], &[1]).unwrap();
        assert_eq!(curve_order(&dbl).unwrap(), 1);
        let plane = [int(2), int(-3), int(5), int(7)];
        assert_eq!(generic_plane_section_count(&catalog::twisted_cubic(), plane).unwrap(), 3);
    }

    #[test]
    fn invariant_values() {
        let inv = |c: &RationalCurve, qv: i64| invariants(c, &q(qv)).unwrap().tuple();
        assert_eq!(inv(&catalog::line(&int(1), &int(2)), 1), (1, 0, 0, 0, 0));
        assert_eq!(inv(&catalog::h1(), 1), (2, 0, 0, 0, 0));
        assert_eq!(inv(&catalog::h2(), 1), (2, 1, 0, 0, 0));
        assert_eq!(inv(&catalog::twisted_cubic(), 1), (3, 1, 1, 0, 0));
        let tq0 = invariants(&catalog::twisted_cubic(), &q(0)).unwrap();
        assert_eq!(tq0.tuple(), (3, 0, 1, 1, 0));
        assert!(tq0.coincident_points);
        assert_eq!(inv(&catalog::cyclic_harmonic(3, &int(2)), -1), (8, 6, 2, 0, 0));
    }

    #[test]
    fn fixed_point_split() {
        // line through P1 = (0,0,1) along x: (t, 0, 1)
        let c = RationalCurve::from_ints("through-p1", [&[0, 1], &[0, 0, 0], &[1]], &[1]).unwrap();
        // f2 = 0 puts it in a z-plane, which is fine for counting
        let inv = invariants(&c, &q(1)).unwrap();
        assert_eq!((inv.p1_prime, inv.p2_prime, inv.z_prime), (1, 0, 0));
        let inv = invariants(&c, &q(4)).unwrap();
        assert_eq!((inv.p1_prime, inv.p2_prime, inv.z_prime), (0, 0, 1));
    }

    #[test]
    fn degenerate_positions() {
        let c = RationalCurve::from_ints("zeta", [&[0, 1], &[0, 2], &[0, 0, 1]], &[1]).unwrap();
        assert_eq!(detect_degenerate_position(&c, &q(1)), DegeneratePosition::InPlaneZeta { direction: [int(1), int(2)] });
        let lat = catalog::latitude_circle();
        assert_eq!(detect_degenerate_position(&lat, &q(1)), DegeneratePosition::OnTorus { r_squared: rat(25, 16) });
        assert_eq!(detect_degenerate_position(&catalog::line(&int(1), &int(2)), &q(1)), DegeneratePosition::Generic);
        let eq = catalog::circle_in_plane_z0(&int(1));
        assert_eq!(detect_degenerate_position(&eq, &q(1)), DegeneratePosition::OnSphereS);
    }

    #[test]
    fn json_round_trip() {
        let t = catalog::twisted_cubic();
        let s = curve_to_json_string(&t);
        assert_eq!(curve_from_json_str(&s).unwrap(), t);
        let from_numbers = r#"{"name":"l","numerators":[[1],[0,1],[2,1]],"denominator":[1]}"#;
        assert_eq!(curve_from_json_str(from_numbers).unwrap().f, catalog::line(&int(1), &int(2)).f);
        assert!(curve_from_json_str(r#"{"name":"bad","numerators":[[1]],"denominator":[1]}"#).is_err());
    }

    #[test]
    fn multiple_angles() {
        let (c3, s3) = trig::multiple_angle(3);
        for t in [0.3f64, 1.7, -2.2] {
            let p = [t.cos(), t.sin()];
            assert!((c3.eval_f64(&p) - (3.0 * t).cos()).abs() < 1e-12);
            assert!((s3.eval_f64(&p) - (3.0 * t).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn tan_half_ingestion_matches_trig() {
        let e = catalog::ellipse_fig12a();
        for t in [0.4f64, 2.0, -1.3] {
            let u = trig::tan_half_of(t).unwrap();
            let p = e.eval_f64(u).unwrap();
            assert!((p[0] - 0.5 * t.cos()).abs() < 1e-12);
            assert!((p[1] - 2.0 * t.sin()).abs() < 1e-12);
        }
    }
}
