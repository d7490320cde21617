//! Order and multiplicity checks of the implicit surface: z-axis,
//! absolute conic, fixed points of the congruence, and the spherical
//! inversion that maps the surface to a cone.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::congruence::{CongruenceClass, CongruenceParam, Point3};
use crate::directrix::{invariants, CurveInvariants, RationalCurve};
use crate::error::{Error, Result};
use crate::implicitize::{membership_residual, ImplicitSurface};
use crate::poly::rational::{self, format_rational, Rational};
use crate::poly::{absolute_quadric, MultiPoly};
use crate::surface::CurveF64;

/// Order of the surface and multiplicities of its three distinguished loci.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCounts {
    pub order: i64,
    pub abs_conic_mult: i64,
    pub z_axis_mult: i64,
    pub p_point_mult: i64,
}

impl SurfaceCounts {
    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.order, self.abs_conic_mult, self.z_axis_mult, self.p_point_mult)
    }
}

/// Counts predicted from the curve invariants (all divided by the covering
/// index already).
pub fn predicted_counts(inv: &CurveInvariants) -> Result<SurfaceCounts> {
    let m = inv.m as i64;
    let z = inv.z_prime as i64;
    let a = inv.a_prime as i64;
    let p = inv.p_sum() as i64;
    let counts = SurfaceCounts {
        order: 3 * m - (z + 2 * a + 2 * p),
        abs_conic_mult: m - (z + p),
        z_axis_mult: m - 2 * a + z,
        p_point_mult: 2 * m - (2 * a + p),
    };
    let (o, s, zm, pm) = counts.tuple();
    if o < 0 || s < 0 || zm < 0 || pm < 0 {
        return Err(Error::ModelViolation(format!("negative predicted count {:?}", counts.tuple())));
    }
    Ok(counts)
}

/// Minimum of `e_x + e_y` over the monomials of `F`.
pub fn mult_along_z(f: &MultiPoly) -> Result<u32> {
    f.terms()
        .map(|(m, _)| m.exps()[0] + m.exps()[1])
        .min()
        .ok_or_else(|| Error::Domain("zero polynomial".into()))
}

/// Largest `s` such that the degree `n − s + k` part of `F` is divisible by
/// `A^k` for `k = 1..s`, where `A = x² + y² + z²`.
pub fn absolute_conic_mult(f: &MultiPoly) -> Result<u32> {
    let n = f.degree().ok_or_else(|| Error::Domain("zero polynomial".into()))?;
    let nv = f.nvars();
    let comps = f.homogeneous_components_in(&[0, 1, 2]);
    let part = |d: u32| -> MultiPoly {
        comps.iter().find(|(deg, _)| *deg == d).map(|(_, p)| p.clone()).unwrap_or_else(|| MultiPoly::zero(nv))
    };
    let a = absolute_quadric(nv);
    let divisible = |s: u32| -> Result<bool> {
        for k in 1..=s {
            let h = part(n - s + k);
            if h.is_zero() {
                continue;
            }
            match h.exact_divide(&a.pow(k))? {
                Some(_) => {}
                None => return Ok(false),
            }
        }
        Ok(true)
    };
    let mut best = 0;
    for s in 1..=n / 2 {
        if divisible(s)? {
            best = s;
        }
    }
    Ok(best)
}

fn lowest_component(f: &MultiPoly, vars: &[usize]) -> (u32, MultiPoly) {
    f.homogeneous_components_in(vars)
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .min_by_key(|(d, _)| *d)
        .expect("nonzero polynomial")
}

/// Multiplicity of `F` at a rational point and the tangent cone there
/// (lowest homogeneous part after translating the point to the origin).
pub fn point_multiplicity_and_cone(f: &MultiPoly, p: &[Rational; 3]) -> Result<(u32, MultiPoly)> {
    if f.nvars() != 3 {
        return Err(Error::Arity(3, f.nvars()));
    }
    if !f.eval(p).is_zero() {
        return Err(Error::NotOnSurface(p.iter().map(format_rational).collect::<Vec<_>>().join(", ")));
    }
    let g = f.translate(p)?;
    Ok(lowest_component(&g, &[0, 1, 2]))
}

/// Multiplicity at the fixed point `(0, 0, ±√q)` for `q ≥ 0`. When `q` is
/// not a rational square, `√q` is carried as a fourth variable `w` reduced
/// by `w² = q`; the returned cone then lives in `(x, y, z, w)`.
pub fn fixed_point_multiplicity(f: &MultiPoly, q: &CongruenceParam, upper: bool) -> Result<(u32, MultiPoly)> {
    if q.q.is_negative() {
        return Err(Error::Domain("fixed points are imaginary for q < 0".into()));
    }
    if let Some(p) = q.rational_p() {
        let z = if upper { p } else { -p };
        return point_multiplicity_and_cone(f, &[Rational::zero(), Rational::zero(), z]);
    }
    if f.nvars() != 3 {
        return Err(Error::Arity(3, f.nvars()));
    }
    let n = 4;
    let w = MultiPoly::var(n, 3);
    let shift = if upper { w } else { -&w };
    let lifted = f.extend_vars(1);
    let moved = lifted.compose(&[MultiPoly::var(n, 0), MultiPoly::var(n, 1), &MultiPoly::var(n, 2) + &shift, MultiPoly::var(n, 3)]);
    let mut reduced = MultiPoly::zero(n);
    for (m, c) in moved.terms() {
        let e = m.exps();
        let coeff = c * rational::pow(&q.q, e[3] / 2);
        reduced += &MultiPoly::term(vec![e[0], e[1], e[2], e[3] % 2], coeff);
    }
    if reduced.terms().all(|(m, _)| m.exps()[0] + m.exps()[1] + m.exps()[2] > 0) {
        Ok(lowest_component(&reduced, &[0, 1, 2]))
    } else {
        Err(Error::NotOnSurface(format!("0, 0, {}sqrt({})", if upper { "" } else { "-" }, format_rational(&q.q))))
    }
}

/// Computed counts; the fixed-point item is `None` when it cannot be
/// witnessed in real arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputedCounts {
    pub order: i64,
    pub abs_conic_mult: i64,
    pub z_axis_mult: i64,
    pub p_point_mult: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassFlags {
    pub order: bool,
    pub abs_conic_mult: bool,
    pub z_axis_mult: bool,
    pub p_point_mult: bool,
}

impl PassFlags {
    pub fn all(&self) -> bool {
        self.order && self.abs_conic_mult && self.z_axis_mult && self.p_point_mult
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub curve: String,
    pub q: String,
    pub invariants: CurveInvariants,
    pub predicted: SurfaceCounts,
    pub computed: ComputedCounts,
    pub pass: PassFlags,
    pub flags: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.pass.all()
    }
}

/// Compares the predicted counts with those read off the cleaned implicit
/// polynomial.
pub fn theorem1_check(c: &RationalCurve, q: &CongruenceParam, s: &ImplicitSurface) -> Result<TheoremReport> {
    let f = s.at_q(q)?;
    let inv = invariants(c, q)?;
    let predicted = predicted_counts(&inv)?;
    let mut flags = Vec::new();
    if inv.coincident_points {
        flags.push("parabolic congruence: fixed points coincide".to_string());
    }
    if inv.covering > 1 {
        flags.push(format!("directrix covers its circles {} times", inv.covering));
    }
    if s.power > 1 {
        flags.push(format!("eliminant was the {}-th power of the surface", s.power));
    }
    let order = f.degree().unwrap_or(0) as i64;
    let abs_conic_mult = absolute_conic_mult(&f)? as i64;
    let z_axis_mult = mult_along_z(&f)? as i64;
    let p_point_mult = match q.classify() {
        CongruenceClass::Hyperbolic => {
            flags.push("imaginary-P: formula-only".to_string());
            None
        }
        _ => {
            let (k1, _) = fixed_point_multiplicity(&f, q, true)?;
            let (k2, _) = fixed_point_multiplicity(&f, q, false)?;
            if k1 != k2 {
                flags.push(format!("fixed points differ in multiplicity: {k1} and {k2}"));
            }
            Some(k1.min(k2) as i64)
        }
    };
    let computed = ComputedCounts { order, abs_conic_mult, z_axis_mult, p_point_mult };
    let order_ok = order == predicted.order;
    let z_ok = z_axis_mult == predicted.z_axis_mult;
    let pass = PassFlags {
        order: order_ok,
        abs_conic_mult: abs_conic_mult == predicted.abs_conic_mult,
        z_axis_mult: z_ok,
        p_point_mult: match p_point_mult {
            Some(k) => k == predicted.p_point_mult,
            None => order_ok && z_ok,
        },
    };
    Ok(TheoremReport {
        curve: c.name.clone(),
        q: format_rational(&q.q),
        invariants: inv,
        predicted,
        computed,
        pass,
        flags,
    })
}

/// Inversion in the sphere centred at `(0, 0, √q)` through `(0, 0, −√q)`.
pub fn invert(q: f64, x: Point3) -> Point3 {
    let p = q.sqrt();
    let d = [x[0], x[1], x[2] - p];
    let n2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    let k = 4.0 * q / n2;
    [k * d[0], k * d[1], p + k * d[2]]
}

/// Samples the cone with vertex `(0, 0, −√q)` over the inverted directrix,
/// maps the samples back through the inversion and returns the largest
/// membership residual against `F`.
pub fn inversion_check(c: &RationalCurve, q: &CongruenceParam, f: &MultiPoly, samples: usize, seed: u64) -> Result<f64> {
    if !q.q.is_positive() {
        return Err(Error::Domain("inversion equivalence needs q > 0".into()));
    }
    let qf = q.q_f64();
    let p = qf.sqrt();
    let vertex = [0.0, 0.0, -p];
    let curve = CurveF64::new(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut taken = 0;
    let mut attempts = 0;
    while taken < samples && attempts < 100 * samples.max(1) {
        attempts += 1;
        let t: f64 = rng.gen_range(-3.0..3.0);
        let s: f64 = rng.gen_range(-2.0..2.0);
        let Ok(a) = curve.eval(t) else { continue };
        if a[0].hypot(a[1]) < 1e-4 || a.iter().any(|v| v.abs() > 1e4) {
            continue;
        }
        let ia = invert(qf, a);
        let cone_pt = [0, 1, 2].map(|i| vertex[i] + s * (ia[i] - vertex[i]));
        let dist = (cone_pt[0].powi(2) + cone_pt[1].powi(2) + (cone_pt[2] - p).powi(2)).sqrt();
        if dist < 1e-3 * (1.0 + p) {
            continue;
        }
        let x = invert(qf, cone_pt);
        if x.iter().any(|v| !v.is_finite() || v.abs() > 1e3) {
            continue;
        }
        worst = worst.max(membership_residual(f, x));
        taken += 1;
    }
    if taken == 0 {
        return Err(Error::Domain("no admissible cone samples".into()));
    }
    Ok(worst)
}

/// Convenience for callers holding only an `ImplicitSurface`.
pub fn inversion_check_surface(c: &RationalCurve, q: &CongruenceParam, s: &ImplicitSurface, samples: usize, seed: u64) -> Result<f64> {
    inversion_check(c, q, &s.at_q(q)?, samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::implicitize::implicitize;
    use crate::poly::rational::int;

    fn xyz() -> (MultiPoly, MultiPoly, MultiPoly) {
        crate::poly::xyz(3)
    }

    fn eq8(b: i64, c: i64, q: i64) -> MultiPoly {
        let (x, y, _) = xyz();
        let a = absolute_quadric(3);
        let k = |v: i64| MultiPoly::from_int(3, v);
        &(&(&(&(&x * &a) - &(&(&x * &x) * &k(c * c + 1 - q))) - &(&(&x * &y) * &k(2 * b * c))) - &(&(&y * &y) * &k(b * b + 1)))
            - &(&x * &k(q))
    }

    fn eq9(q: i64) -> MultiPoly {
        let (x, y, z) = xyz();
        let a = absolute_quadric(3);
        let k = |v: i64| MultiPoly::from_int(3, v);
        let xy = &x * &y;
        let quartic = &(&(&(&x.pow(4) + &(&(&x * &x) * &(&y * &y)).scale(&int(2))) + &(&xy.pow(2) * &k(q * q))) + &y.pow(4))
            + &(&(&xy * &z.pow(2)) * &k(2 * q));
        &(&(&xy * &a.pow(2)) - &quartic) + &(&xy * &k(q * q))
    }

    #[test]
    fn predicted_examples() {
        let mk = |m, z, a, p1| CurveInvariants { m, z_prime: z, a_prime: a, p1_prime: p1, p2_prime: 0, coincident_points: false, covering: 1 };
        assert_eq!(predicted_counts(&mk(1, 0, 0, 0)).unwrap().tuple(), (3, 1, 1, 2));
        assert_eq!(predicted_counts(&mk(2, 1, 0, 0)).unwrap().tuple(), (5, 1, 3, 4));
        assert_eq!(predicted_counts(&mk(8, 6, 2, 0)).unwrap().tuple(), (14, 2, 10, 12));
        assert!(predicted_counts(&mk(1, 0, 1, 1)).is_err());
    }

    #[test]
    fn multiplicities_of_known_equations() {
        assert_eq!(mult_along_z(&eq8(1, 2, 1)).unwrap(), 1);
        assert_eq!(mult_along_z(&eq9(1)).unwrap(), 2);
        assert_eq!(absolute_conic_mult(&eq8(1, 2, 1)).unwrap(), 1);
        assert_eq!(absolute_conic_mult(&eq9(1)).unwrap(), 2);
    }

    #[test]
    fn tangent_cone_of_cyclide() {
        let p1 = [int(0), int(0), int(1)];
        let (k, cone) = point_multiplicity_and_cone(&eq8(1, 2, 1), &p1).unwrap();
        assert_eq!(k, 2);
        let (x, y, z) = xyz();
        let expected = &(&(&(&x * &x).scale(&int(4)) + &(&x * &y).scale(&int(4))) + &(&y * &y).scale(&int(2))) - &(&x * &z).scale(&int(2));
        assert!(cone.equals_up_to_scalar(&expected));
        assert!(matches!(point_multiplicity_and_cone(&eq8(1, 2, 1), &[int(1), int(1), int(1)]), Err(Error::NotOnSurface(_))));
    }

    #[test]
    fn irrational_fixed_point() {
        let q = CongruenceParam::from_int(2);
        let f = eq8(1, 2, 2);
        let (k, cone) = fixed_point_multiplicity(&f, &q, true).unwrap();
        assert_eq!(k, 2);
        assert!(cone.involves(3));
    }

    #[test]
    fn line_report_passes() {
        let l = catalog::line(&int(1), &int(2));
        let q = CongruenceParam::from_int(1);
        let s = implicitize(&l, &q).unwrap();
        let r = theorem1_check(&l, &q, &s).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.predicted.tuple(), (3, 1, 1, 2));
        assert!(inversion_check(&l, &q, &s.f, 50, 1).unwrap() < 1e-9);
    }

    #[test]
    fn inversion_fixes_far_point() {
        let x = invert(1.0, [0.0, 0.0, -1.0]);
        assert!((x[2] + 1.0).abs() < 1e-15 && x[0].abs() < 1e-15);
    }
}
