//! The congruence of circles through `P1, P2 = (0, 0, ±p)`, parametrized by
//! `q = p²` so hyperbolic congruences stay in real arithmetic.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::multi::{absolute_quadric, xyz};
use crate::poly::rational::{self, int, to_f64, Rational};
use crate::poly::MultiPoly;

pub type Point3 = [f64; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for CongruenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CongruenceClass::Elliptic => "elliptic",
            CongruenceClass::Parabolic => "parabolic",
            CongruenceClass::Hyperbolic => "hyperbolic",
        };
        f.write_str(s)
    }
}

/// `q = p²`; any rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CongruenceParam {
    pub q: Rational,
}

impl CongruenceParam {
    pub fn new(q: Rational) -> Self {
        CongruenceParam { q }
    }

    pub fn from_int(q: i64) -> Self {
        Self::new(int(q))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::new(rational::parse_rational(s)?))
    }

    pub fn classify(&self) -> CongruenceClass {
        classify(&self.q)
    }

    pub fn q_f64(&self) -> f64 {
        to_f64(&self.q)
    }

    /// `p` itself when `q` is the square of a rational.
    pub fn rational_p(&self) -> Option<Rational> {
        if self.q.is_negative() {
            None
        } else {
            rational::sqrt(&self.q)
        }
    }

    /// The real points `P1, P2` (coincident when `q = 0`); none for `q < 0`.
    pub fn fixed_points_f64(&self) -> Option<(Point3, Point3)> {
        if self.q.is_negative() {
            return None;
        }
        let p = self.q_f64().sqrt();
        Some(([0.0, 0.0, p], [0.0, 0.0, -p]))
    }
}

impl fmt::Display for CongruenceParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::format_rational(&self.q))
    }
}

pub fn classify(q: &Rational) -> CongruenceClass {
    if q.is_positive() {
        CongruenceClass::Elliptic
    } else if q.is_zero() {
        CongruenceClass::Parabolic
    } else {
        CongruenceClass::Hyperbolic
    }
}

/// The circle of the congruence through a point `A` off the z-axis.
///
/// With `ρ0 = ‖A_xy‖` the signed center coordinate is `ρ_C = k / ρ0` where
/// `k = (ρ0² + z0² − q) / 2`; everything except `ρ_C` itself stays rational.
#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceCircle {
    /// `(A_x, A_y)`: the half-plane direction, not normalized.
    pub direction: [Rational; 2],
    pub rho0_squared: Rational,
    /// `ρ_C · ρ0`.
    pub center_times_rho0: Rational,
    pub r_squared: Rational,
}

impl CongruenceCircle {
    /// Zero-radius members sit on `c(0)` of a hyperbolic congruence.
    pub fn is_zero_radius(&self) -> bool {
        self.r_squared.is_zero()
    }

    /// `ρ_C²`, always rational.
    pub fn rho_c_squared(&self) -> Rational {
        &self.center_times_rho0 * &self.center_times_rho0 / &self.rho0_squared
    }

    /// Exact `ρ_C` when `ρ0` is rational.
    pub fn rho_c(&self) -> Option<Rational> {
        rational::sqrt(&self.rho0_squared).map(|r0| &self.center_times_rho0 / r0)
    }

    pub fn rho_c_f64(&self) -> f64 {
        to_f64(&self.center_times_rho0) / to_f64(&self.rho0_squared).sqrt()
    }

    pub fn unit_direction_f64(&self) -> [f64; 2] {
        let r0 = to_f64(&self.rho0_squared).sqrt();
        [to_f64(&self.direction[0]) / r0, to_f64(&self.direction[1]) / r0]
    }

    /// Angle `φ` of the half-plane `ζ(φ)`.
    pub fn phi(&self) -> f64 {
        to_f64(&self.direction[1]).atan2(to_f64(&self.direction[0]))
    }

    pub fn center_f64(&self) -> Point3 {
        let d = self.unit_direction_f64();
        let rc = self.rho_c_f64();
        [rc * d[0], rc * d[1], 0.0]
    }

    /// Point at angle `θ` measured from the radial direction in `ζ(φ)`.
    pub fn point_at(&self, theta: f64) -> Point3 {
        let d = self.unit_direction_f64();
        let r = to_f64(&self.r_squared).sqrt();
        let rho = r * theta.cos() + self.rho_c_f64();
        [rho * d[0], rho * d[1], r * theta.sin()]
    }

    /// Exact incidence test of a rational point with this circle: coplanarity
    /// with the z-axis plane and the torus/sphere condition of the circle.
    pub fn contains_exact(&self, x: &[Rational; 3]) -> bool {
        let cross = &self.direction[0] * &x[1] - &self.direction[1] * &x[0];
        if !cross.is_zero() {
            return false;
        }
        // X_xy = λ A_xy; on the circle: ‖X‖² − q = 2 λ k
        let lambda = if !self.direction[0].is_zero() { &x[0] / &self.direction[0] } else { &x[1] / &self.direction[1] };
        let norm = &x[0] * &x[0] + &x[1] * &x[1] + &x[2] * &x[2];
        let q = &self.r_squared - self.rho_c_squared();
        norm - q == int(2) * lambda * &self.center_times_rho0
    }
}

/// Circle of `C(p)` through `A` (Eq. 4 geometry).
pub fn circle_through_point(q: &CongruenceParam, a: &[Rational; 3]) -> Result<CongruenceCircle> {
    let rho0_squared = &a[0] * &a[0] + &a[1] * &a[1];
    if rho0_squared.is_zero() {
        return Err(Error::SingularPointOfCongruence);
    }
    let k = (&rho0_squared + &a[2] * &a[2] - &q.q) / int(2);
    let r_squared = &k * &k / &rho0_squared + &q.q;
    Ok(CongruenceCircle { direction: [a[0].clone(), a[1].clone()], rho0_squared, center_times_rho0: k, r_squared })
}

/// Floating-point circle data: `(unit direction, ρ_C, r²)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleF64 {
    pub direction: [f64; 2],
    pub rho_c: f64,
    pub r_squared: f64,
}

impl CircleF64 {
    pub fn center(&self) -> Point3 {
        [self.rho_c * self.direction[0], self.rho_c * self.direction[1], 0.0]
    }
}

pub fn circle_through_point_f64(q: f64, a: Point3) -> Result<CircleF64> {
    let rho0_sq = a[0] * a[0] + a[1] * a[1];
    if rho0_sq == 0.0 {
        return Err(Error::SingularPointOfCongruence);
    }
    let rho0 = rho0_sq.sqrt();
    let rho_c = (rho0_sq + a[2] * a[2] - q) / (2.0 * rho0);
    Ok(CircleF64 { direction: [a[0] / rho0, a[1] / rho0], rho_c, r_squared: (rho_c * rho_c + q).max(0.0) })
}

/// Eq. (3): `(cos φ (r cos θ + ρ_C), sin φ (r cos θ + ρ_C), r sin θ)` with
/// `ρ_C = √(r² − q) ≥ 0`.
pub fn congruence_point(q: f64, theta: f64, r: f64, phi: f64) -> Result<Point3> {
    if r < 0.0 {
        return Err(Error::Domain("negative radius".into()));
    }
    let rc2 = r * r - q;
    if rc2 < 0.0 {
        return Err(Error::Domain(format!("radius r = {r} below p for q = {q}")));
    }
    let rho = r * theta.cos() + rc2.sqrt();
    Ok([phi.cos() * rho, phi.sin() * rho, r * theta.sin()])
}

/// Rational form of Eq. (3): angles enter through their tan-half values and
/// both `r` and `ρ_C` are rational with `r² − ρ_C² = q`.
pub fn congruence_point_rational(
    q: &CongruenceParam,
    tan_half_theta: &Rational,
    r: &Rational,
    rho_c: &Rational,
    tan_half_phi: &Rational,
) -> Result<[Rational; 3]> {
    if r * r - rho_c * rho_c != q.q {
        return Err(Error::Domain("r² − ρ_C² must equal q".into()));
    }
    let (ct, st) = tan_half(tan_half_theta);
    let (cp, sp) = tan_half(tan_half_phi);
    let rho = r * ct + rho_c;
    Ok([&cp * &rho, &sp * &rho, r * st])
}

/// `(cos, sin)` of the angle with the given tangent of its half.
pub fn tan_half(u: &Rational) -> (Rational, Rational) {
    let den = Rational::one() + u * u;
    ((Rational::one() - u * u) / &den, int(2) * u / den)
}

/// The torus `τ(r)` carrying all circles of radius `r`:
/// `(A − q)² − 4(r² − q)(x² + y²)` with `A = x² + y² + z²`.
pub fn torus_polynomial(q: &CongruenceParam, r_squared: &Rational) -> Result<MultiPoly> {
    let floor = if q.q.is_positive() { q.q.clone() } else { Rational::zero() };
    if *r_squared < floor {
        return Err(Error::Domain("r² below max(q, 0)".into()));
    }
    Ok(torus_polynomial_unchecked(&q.q, r_squared))
}

pub(crate) fn torus_polynomial_unchecked(q: &Rational, r_squared: &Rational) -> MultiPoly {
    let (x, y, _) = xyz(3);
    let shifted = &absolute_quadric(3) - &MultiPoly::constant(3, q.clone());
    let radial = &(&x * &x) + &(&y * &y);
    &shifted.pow(2) - &radial.scale(&(int(4) * (r_squared - q)))
}

/// Sphere centered on the z-axis.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilSphere {
    pub center_z: Rational,
    pub radius_squared: Rational,
}

impl PencilSphere {
    pub fn new(center_z: Rational, radius_squared: Rational) -> Result<Self> {
        if !radius_squared.is_positive() {
            return Err(Error::Domain("sphere radius² must be positive".into()));
        }
        Ok(PencilSphere { center_z, radius_squared })
    }
}

/// The member of the pencil orthogonal to every circle of `C(p)`: centered at
/// `(0, 0, c)` with `R² = c² − q`.
pub fn orthogonal_pencil_sphere(q: &CongruenceParam, center_z: Rational) -> Result<PencilSphere> {
    let r2 = &center_z * &center_z - &q.q;
    PencilSphere::new(center_z, r2)
}

/// Relative defect of `‖C_circle − C_sphere‖² = r_circle² + R²`.
pub fn orthogonality_defect(q: f64, a: Point3, sphere: &PencilSphere) -> Result<f64> {
    let c = circle_through_point_f64(q, a)?;
    let cz = to_f64(&sphere.center_z);
    let lhs = c.rho_c * c.rho_c + cz * cz;
    let rhs = c.r_squared + to_f64(&sphere.radius_squared);
    Ok((lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs())))
}

/// `‖T × N‖` at an intersection of the circle through `A` with the sphere,
/// where `T` is the unit circle tangent and `N` the unit sphere normal:
/// 0 for orthogonal incidence, 1 when the circle lies on the sphere.
pub fn apollonian_orthogonality(q: f64, a: Point3, sphere: &PencilSphere) -> Result<f64> {
    let c = circle_through_point_f64(q, a)?;
    let r = c.r_squared.sqrt();
    let big_r = to_f64(&sphere.radius_squared).sqrt();
    let cz = to_f64(&sphere.center_z);
    // meridian plane coordinates (ρ along the signed direction, z)
    let (c1, c2) = ([c.rho_c, 0.0], [0.0, cz]);
    let d = ((c2[0] - c1[0]).powi(2) + (c2[1] - c1[1]).powi(2)).sqrt();
    let scale = 1.0 + r.max(big_r);
    let x2 = if d < 1e-12 * scale {
        if (r - big_r).abs() > 1e-12 * scale {
            return Err(Error::NoIntersection);
        }
        // concentric and equal: the circle lies on the sphere; use A itself
        let rho_a = (a[0] * a[0] + a[1] * a[1]).sqrt();
        [rho_a, a[2]]
    } else {
        if d > r + big_r + 1e-12 * scale || d < (r - big_r).abs() - 1e-12 * scale {
            return Err(Error::NoIntersection);
        }
        let along = (r * r - big_r * big_r + d * d) / (2.0 * d);
        let h = (r * r - along * along).max(0.0).sqrt();
        let u = [(c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d];
        [c1[0] + along * u[0] - h * u[1], c1[1] + along * u[1] + h * u[0]]
    };
    let radial = [x2[0] - c1[0], x2[1] - c1[1]];
    let rn = (radial[0].hypot(radial[1])).max(f64::MIN_POSITIVE);
    let tangent = [-radial[1] / rn, radial[0] / rn];
    let normal_raw = [x2[0] - c2[0], x2[1] - c2[1]];
    let nn = normal_raw[0].hypot(normal_raw[1]).max(f64::MIN_POSITIVE);
    let normal = [normal_raw[0] / nn, normal_raw[1] / nn];
    // both vectors lie in the meridian plane, so the cross product is scalar
    Ok((tangent[0] * normal[1] - tangent[1] * normal[0]).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn pt(x: i64, y: i64, z: i64) -> [Rational; 3] {
        [int(x), int(y), int(z)]
    }

    #[test]
    fn classification() {
        assert_eq!(CongruenceParam::from_int(1).classify(), CongruenceClass::Elliptic);
        assert_eq!(CongruenceParam::from_int(0).classify(), CongruenceClass::Parabolic);
        assert_eq!(CongruenceParam::from_int(-1).classify(), CongruenceClass::Hyperbolic);
    }

    #[test]
    fn circles_through_points() {
        let q1 = CongruenceParam::from_int(1);
        let c = circle_through_point(&q1, &pt(1, 0, 0)).unwrap();
        assert_eq!(c.rho_c(), Some(int(0)));
        assert_eq!(c.r_squared, int(1));

        let c = circle_through_point(&q1, &pt(2, 0, 0)).unwrap();
        assert_eq!(c.rho_c(), Some(rat(3, 4)));
        assert_eq!(c.r_squared, rat(25, 16));
        assert!(c.contains_exact(&pt(0, 0, 1)));
        assert!(c.contains_exact(&pt(0, 0, -1)));
        assert!(c.contains_exact(&pt(2, 0, 0)));
        assert!(!c.contains_exact(&pt(1, 0, 0)));

        let c = circle_through_point(&CongruenceParam::from_int(-1), &pt(1, 0, 0)).unwrap();
        assert_eq!(c.rho_c(), Some(int(1)));
        assert!(c.is_zero_radius());

        assert_eq!(circle_through_point(&q1, &pt(0, 0, 3)), Err(Error::SingularPointOfCongruence));
    }

    #[test]
    fn eq3_points() {
        let p = congruence_point(1.0, FRAC_PI_2, 1.0, 0.0).unwrap();
        assert!(p[0].abs() < 1e-15 && p[1].abs() < 1e-15 && (p[2] - 1.0).abs() < 1e-15);
        let p = congruence_point(1.0, 0.0, 1.25, 0.0).unwrap();
        assert!((p[0] - 2.0).abs() < 1e-15);
        let p = congruence_point(0.0, PI, 1.0, 0.0).unwrap();
        assert!(p.iter().all(|v| v.abs() < 1e-15));
        assert!(congruence_point(1.0, 0.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn tori() {
        let q1 = CongruenceParam::from_int(1);
        let (x, y, _) = xyz(3);
        let a = absolute_quadric(3);
        let one = MultiPoly::one(3);
        let expected = &(&a - &one).pow(2) - &(&(&x * &x) + &(&y * &y)).scale(&rat(9, 4));
        assert_eq!(torus_polynomial(&q1, &rat(25, 16)).unwrap(), expected);
        assert_eq!(torus_polynomial(&q1, &int(1)).unwrap(), (&a - &one).pow(2));
        let t = torus_polynomial(&CongruenceParam::from_int(-1), &int(0)).unwrap();
        assert_eq!(t.eval(&pt(1, 0, 0)), int(0));
        assert_eq!(t.eval(&[rat(3, 5), rat(4, 5), int(0)]), int(0));
        assert!(torus_polynomial(&q1, &rat(1, 2)).is_err());
    }

    #[test]
    fn orthogonality() {
        // sphere through A centered at the origin is not in the pencil
        let s = PencilSphere::new(int(0), int(4)).unwrap();
        assert!(apollonian_orthogonality(1.0, [2.0, 0.0, 0.0], &s).unwrap() > 1e-3);
        // great circle lies on the unit sphere
        let s = PencilSphere::new(int(0), int(1)).unwrap();
        assert!((apollonian_orthogonality(1.0, [1.0, 0.0, 0.0], &s).unwrap() - 1.0).abs() < 1e-12);
        let qm = CongruenceParam::from_int(-1);
        let s = orthogonal_pencil_sphere(&qm, int(1)).unwrap();
        assert!(apollonian_orthogonality(-1.0, [2.0, 0.0, 0.0], &s).unwrap() < 1e-9);
        assert!(orthogonality_defect(-1.0, [2.0, 0.0, 0.0], &s).unwrap() < 1e-12);
    }
}
