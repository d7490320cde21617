//! Implicit equation of the circular surface by eliminating the curve
//! parameter from the incidence system, followed by removal of the factors
//! that do not vanish on the surface.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::predicted_counts;
use crate::congruence::{CongruenceParam, Point3};
use crate::directrix::{detect_degenerate_position, invariants, DegeneratePosition, RationalCurve};
use crate::error::{Error, Result};
use crate::poly::json::PolyJson;
use crate::poly::rational::{self, format_rational, int, rat, Rational};
use crate::poly::{content_in, perfect_root, resultant, MultiPoly, QPoly, UniPoly};
use crate::surface::{frame_at_point, CurveF64};

/// Index of the symbolic congruence parameter in symbolic mode.
pub const Q_VAR: usize = 3;

/// `E1`, `E2` in `t` over `Q[x, y, z]` (or `Q[x, y, z, q]`); `t` is the last
/// variable.
#[derive(Clone, Debug)]
pub struct EliminationSystem {
    pub e1: UniPoly,
    pub e2: UniPoly,
    pub symbolic_q: bool,
}

impl EliminationSystem {
    pub fn nvars(&self) -> usize {
        self.e1.nvars()
    }

    pub fn t_var(&self) -> usize {
        self.nvars() - 1
    }
}

/// How `q` enters the elimination.
#[derive(Clone, Debug, PartialEq)]
pub enum QMode {
    Value(CongruenceParam),
    Symbolic,
}

impl QMode {
    fn nvars(&self) -> usize {
        match self {
            QMode::Value(_) => 4,
            QMode::Symbolic => 5,
        }
    }

    fn q_poly(&self) -> MultiPoly {
        match self {
            QMode::Value(q) => MultiPoly::constant(4, q.q.clone()),
            QMode::Symbolic => MultiPoly::var(5, Q_VAR),
        }
    }
}

/// Generic value used where invariants or samples need a concrete `q` in
/// symbolic mode.
pub fn generic_q() -> CongruenceParam {
    CongruenceParam::new(rat(1009, 97))
}

/// Builds the incidence system in signed-λ form:
/// `X_xy = λ α_xy`, `‖X‖² − q = λ (‖α‖² − q)`, with `λ` eliminated. `E1`
/// uses `f1, f2` with their common factor divided out.
pub fn build_system(c: &RationalCurve, mode: &QMode) -> Result<EliminationSystem> {
    let probe_q = match mode {
        QMode::Value(q) => q.clone(),
        QMode::Symbolic => generic_q(),
    };
    if let DegeneratePosition::InPlaneZeta { direction } = detect_degenerate_position(c, &probe_q) {
        return Err(Error::DegeneratePlane(format_rational(&direction[0]), format_rational(&direction[1])));
    }
    let n = mode.nvars();
    let tv = n - 1;
    let h = c.f[0].gcd(&c.f[1]);
    let f1r = c.f[0].exact_div(&h)?.expect("gcd divides");
    let f2r = c.f[1].exact_div(&h)?.expect("gcd divides");
    let lift = |p: &QPoly| p.to_multi(n, tv);
    let (x, y, z) = (MultiPoly::var(n, 0), MultiPoly::var(n, 1), MultiPoly::var(n, 2));
    let (f1, f2, f3, g) = (lift(&c.f[0]), lift(&c.f[1]), lift(&c.f[2]), lift(&c.g));
    let (f1r, f2r) = (lift(&f1r), lift(&f2r));
    let q = mode.q_poly();

    let e1 = &(&x * &f2r) - &(&y * &f1r);

    let norm_x = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
    let horiz = &(&f1 * &f1) + &(&f2 * &f2);
    let big_n = &horiz + &(&f3 * &f3);
    let excess = &big_n - &(&q * &(&g * &g));
    // (‖X‖² − q) g (f1² + f2²) − (x f1 + y f2)(N − q g²)
    let e2 = &(&(&norm_x - &q) * &(&g * &horiz)) - &(&(&(&x * &f1) + &(&y * &f2)) * &excess);
    if e2.is_zero() {
        return Err(Error::DegenerateCurve("incidence condition vanishes identically".into()));
    }
    let e2 = e2.rational_content().1;
    let e1 = e1.rational_content().1;
    Ok(EliminationSystem {
        e1: UniPoly::from_multi(&e1, tv),
        e2: UniPoly::from_multi(&e2, tv),
        symbolic_q: matches!(mode, QMode::Symbolic),
    })
}

/// `Res_t(E1, E2)` with `t` dropped from the variable list. The common
/// factor of `f1, f2` left in `E2` contributes the planes through the z-axis
/// at the curve's axis crossings.
pub fn eliminate(sys: &EliminationSystem) -> Result<MultiPoly> {
    let raw = resultant(&sys.e1, &sys.e2)?;
    if raw.is_zero() {
        return Err(Error::CommonComponent);
    }
    raw.drop_var(sys.t_var())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemovedFactor {
    pub kind: String,
    pub factor: String,
    pub multiplicity: u32,
    /// Outcome of the sampled membership test (false for every removal that
    /// is justified by falsification).
    pub vanishes_on_samples: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitSurface {
    /// Over `x, y, z` (value mode) or `x, y, z, q` (symbolic mode).
    pub f: MultiPoly,
    pub q: Option<CongruenceParam>,
    pub removed_factors: Vec<RemovedFactor>,
    /// Power of `F` in the cleaned eliminant (> 1 when circles are met more
    /// than once by the directrix).
    pub power: u32,
    pub raw_degree: u32,
    pub predicted_order: i64,
    pub computed_order: u32,
}

impl ImplicitSurface {
    pub fn is_symbolic(&self) -> bool {
        self.q.is_none()
    }

    pub fn degree_matches(&self) -> bool {
        self.predicted_order == self.computed_order as i64
    }

    pub fn var_names(&self) -> Vec<&'static str> {
        if self.is_symbolic() {
            vec!["x", "y", "z", "q"]
        } else {
            vec!["x", "y", "z"]
        }
    }

    /// `F` with `q` fixed (identity in value mode).
    pub fn at_q(&self, q: &CongruenceParam) -> Result<MultiPoly> {
        if self.is_symbolic() {
            self.f.substitute(Q_VAR, &q.q).drop_var(Q_VAR)
        } else {
            Ok(self.f.clone())
        }
    }

    pub fn to_json(&self) -> Result<ImplicitSurfaceJson> {
        Ok(ImplicitSurfaceJson {
            poly: PolyJson::from_poly(&self.f, &self.var_names())?,
            q: self.q.as_ref().map(|q| format_rational(&q.q)).unwrap_or_else(|| "symbolic".into()),
            removed_factors: self.removed_factors.clone(),
            predicted_order: self.predicted_order,
            computed_order: self.computed_order,
            power: self.power,
            raw_degree: self.raw_degree,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImplicitSurfaceJson {
    #[serde(flatten)]
    pub poly: PolyJson,
    pub q: String,
    pub removed_factors: Vec<RemovedFactor>,
    pub predicted_order: i64,
    pub computed_order: u32,
    pub power: u32,
    pub raw_degree: u32,
}

impl ImplicitSurfaceJson {
    pub fn to_surface(&self) -> Result<ImplicitSurface> {
        let f = self.poly.to_poly()?;
        let q = if self.q == "symbolic" { None } else { Some(CongruenceParam::parse(&self.q)?) };
        Ok(ImplicitSurface {
            f,
            q,
            removed_factors: self.removed_factors.clone(),
            power: self.power,
            raw_degree: self.raw_degree,
            predicted_order: self.predicted_order,
            computed_order: self.computed_order,
        })
    }
}

fn xyz_degree(p: &MultiPoly) -> u32 {
    p.terms().map(|(m, _)| m.exps()[0] + m.exps()[1] + m.exps()[2]).max().unwrap_or(0)
}

/// Seeded random points of the surface (curve parameter and circle angle
/// uniform), skipping poles, axis points and far-away samples.
pub fn surface_samples(c: &RationalCurve, q: f64, count: usize, seed: u64) -> Vec<Point3> {
    let curve = CurveF64::new(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) {
        attempts += 1;
        let t: f64 = rng.gen_range(-3.0..3.0);
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let Ok(a) = curve.eval(t) else { continue };
        if a[0].hypot(a[1]) < 1e-4 || a.iter().any(|v| v.abs() > 1e4) {
            continue;
        }
        let Ok(fr) = frame_at_point(q, a) else { continue };
        let p = fr.point(theta);
        if p.iter().all(|v| v.is_finite() && v.abs() < 1e5) {
            out.push(p);
        }
    }
    out
}

/// `|F(X)| / (max|coeff| · (1 + ‖X‖^deg F))`.
pub fn membership_residual(f: &MultiPoly, x: Point3) -> f64 {
    let deg = f.degree().unwrap_or(0) as i32;
    let norm = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let scale = f.max_abs_coeff().max(f64::MIN_POSITIVE);
    f.eval_f64(&x).abs() / (scale * (1.0 + norm.powi(deg)))
}

const FALSIFY_SAMPLES: usize = 32;
const FALSIFY_TOL: f64 = 1e-8;

fn vanishes_on(factor: &MultiPoly, samples: &[Point3]) -> bool {
    samples.iter().all(|p| membership_residual(factor, *p) < FALSIFY_TOL)
}

/// Real rational parameters (and infinity) where `f1 = f2 = 0`, mapped to the
/// limiting half-plane directions: candidate planes `b x − a y` through the
/// z-axis.
fn candidate_planes(c: &RationalCurve, n: usize) -> Vec<MultiPoly> {
    let h = c.f[0].gcd(&c.f[1]);
    let f1r = c.f[0].exact_div(&h).ok().flatten().unwrap_or_else(|| c.f[0].clone());
    let f2r = c.f[1].exact_div(&h).ok().flatten().unwrap_or_else(|| c.f[1].clone());
    let (x, y) = (MultiPoly::var(n, 0), MultiPoly::var(n, 1));
    let mut dirs: Vec<(Rational, Rational)> = vec![(int(1), int(0)), (int(0), int(1))];
    dirs.push((f1r.leading_coeff(), f2r.leading_coeff()));
    // rational roots of h via its linear squarefree factors
    for (_, factor) in h.squarefree_decomposition() {
        if factor.degree() == Some(1) {
            let t0 = -factor.coeff(0) / factor.coeff(1);
            dirs.push((f1r.eval(&t0), f2r.eval(&t0)));
        }
    }
    let mut out: Vec<MultiPoly> = Vec::new();
    for (a, b) in dirs {
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let plane = (&x.scale(&b) - &y.scale(&a)).normalized();
        if !out.contains(&plane) {
            out.push(plane);
        }
    }
    out
}

/// Cleans the eliminant: strips the z-free part (rational content, powers of
/// `x² + y²`, planes through the z-axis, other z-free factors), confirms each
/// removal by sampled falsification, extracts the radical when the eliminant
/// is a perfect power, and reconciles the degree with the prediction.
pub fn remove_extraneous(raw: &MultiPoly, c: &RationalCurve, mode: &QMode) -> Result<ImplicitSurface> {
    if raw.is_zero() {
        return Err(Error::CommonComponent);
    }
    let symbolic = matches!(mode, QMode::Symbolic);
    let n = raw.nvars();
    let q_sample = match mode {
        QMode::Value(q) => q.clone(),
        QMode::Symbolic => generic_q(),
    };
    let samples = surface_samples(c, q_sample.q_f64(), FALSIFY_SAMPLES, 0x5eed);
    let at_sample_q = |p: &MultiPoly| -> MultiPoly {
        if symbolic {
            p.substitute(Q_VAR, &q_sample.q).drop_var(Q_VAR).expect("q substituted")
        } else {
            p.clone()
        }
    };
    let names: &[&str] = if symbolic { &["x", "y", "z", "q"] } else { &["x", "y", "z"] };
    let show = |p: &MultiPoly| p.display_with(names).to_string();

    let mut removed = Vec::new();
    let (scalar, prim) = raw.rational_content();
    if !scalar.is_one() {
        removed.push(RemovedFactor {
            kind: "rational-content".into(),
            factor: format_rational(&scalar),
            multiplicity: 1,
            vanishes_on_samples: false,
        });
    }

    let mut zfree = content_in(&prim, 2);
    let mut body = prim.exact_divide(&zfree)?.expect("content divides");

    let record = |kind: &str, factor: &MultiPoly, mult: u32, removed: &mut Vec<RemovedFactor>| -> bool {
        let vanishes = vanishes_on(&at_sample_q(factor), &samples);
        removed.push(RemovedFactor { kind: kind.into(), factor: show(factor), multiplicity: mult, vanishes_on_samples: vanishes });
        vanishes
    };

    let mut kept_zfree = MultiPoly::one(n);
    let (x, y) = (MultiPoly::var(n, 0), MultiPoly::var(n, 1));
    let radial = &(&x * &x) + &(&y * &y);
    let (rest, k) = zfree.divide_out(&radial);
    if k > 0 && record("radial-projection (x^2 + y^2)", &radial, k, &mut removed) {
        kept_zfree = &kept_zfree * &radial.pow(k);
    }
    zfree = rest;
    for plane in candidate_planes(c, n) {
        let (rest, k) = zfree.divide_out(&plane);
        if k > 0 && record("plane through the z-axis", &plane, k, &mut removed) {
            kept_zfree = &kept_zfree * &plane.pow(k);
        }
        zfree = rest;
    }
    let zfree = zfree.normalized();
    if !zfree.is_constant() {
        let kind = if symbolic && !zfree.involves(0) && !zfree.involves(1) { "parameter-only factor" } else { "other z-free factor" };
        if record(kind, &zfree, 1, &mut removed) {
            kept_zfree = &kept_zfree * &zfree;
        }
    }
    if !kept_zfree.is_constant() {
        body = &body * &kept_zfree;
    }
    if body.is_constant() {
        return Err(Error::EmptySurface);
    }

    let probe_q = match mode {
        QMode::Value(q) => q.clone(),
        QMode::Symbolic => generic_q(),
    };
    let inv = invariants(c, &probe_q)?;
    let predicted_order = predicted_counts(&inv)?.order;
    let raw_degree = xyz_degree(raw);

    let mut power = 1;
    let deg = xyz_degree(&body) as i64;
    if predicted_order > 0 && deg > predicted_order && deg % predicted_order == 0 {
        let k = (deg / predicted_order) as u32;
        if let Some(root) = perfect_root(&body.normalized(), k) {
            body = root;
            power = k;
        }
    }
    let f = body.normalized();
    let computed_order = xyz_degree(&f);
    if computed_order as i64 != predicted_order {
        log::warn!(
            "{}: implicit degree {} differs from the predicted order {}",
            c.name,
            computed_order,
            predicted_order
        );
    }
    Ok(ImplicitSurface {
        f,
        q: match mode {
            QMode::Value(q) => Some(q.clone()),
            QMode::Symbolic => None,
        },
        removed_factors: removed,
        power,
        raw_degree,
        predicted_order,
        computed_order,
    })
}

/// Full pipeline for a numeric `q`.
pub fn implicitize(c: &RationalCurve, q: &CongruenceParam) -> Result<ImplicitSurface> {
    let mode = QMode::Value(q.clone());
    let sys = build_system(c, &mode)?;
    let raw = eliminate(&sys)?;
    remove_extraneous(&raw, c, &mode)
}

/// Full pipeline with `q` kept as the fourth variable.
pub fn implicitize_symbolic(c: &RationalCurve) -> Result<ImplicitSurface> {
    let mode = QMode::Symbolic;
    let sys = build_system(c, &mode)?;
    let raw = eliminate(&sys)?;
    remove_extraneous(&raw, c, &mode)
}

/// Element `a + b σ + c ρ + d σρ` of `Q[σ, ρ] / (σ² − S, ρ² − P)`.
#[derive(Clone, Debug, PartialEq)]
struct Biquad {
    c: [Rational; 4],
}

#[derive(Clone, Debug)]
struct BiquadField {
    s: Rational,
    p: Rational,
}

impl BiquadField {
    fn zero(&self) -> Biquad {
        Biquad { c: [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    fn constant(&self, r: Rational) -> Biquad {
        let mut e = self.zero();
        e.c[0] = r;
        e
    }

    fn add(&self, a: &Biquad, b: &Biquad) -> Biquad {
        Biquad { c: std::array::from_fn(|i| &a.c[i] + &b.c[i]) }
    }

    fn scale(&self, a: &Biquad, r: &Rational) -> Biquad {
        Biquad { c: std::array::from_fn(|i| &a.c[i] * r) }
    }

    fn mul(&self, a: &Biquad, b: &Biquad) -> Biquad {
        let (s, p) = (&self.s, &self.p);
        let sp = s * p;
        let [a0, a1, a2, a3] = &a.c;
        let [b0, b1, b2, b3] = &b.c;
        Biquad {
            c: [
                a0 * b0 + s * (a1 * b1) + p * (a2 * b2) + &sp * (a3 * b3),
                a0 * b1 + a1 * b0 + p * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + s * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            ],
        }
    }

    fn is_zero(&self, a: &Biquad) -> bool {
        a.c.iter().all(Zero::is_zero)
    }

    fn pow(&self, a: &Biquad, e: u32) -> Biquad {
        let mut r = self.constant(Rational::one());
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }
}

/// Exact check that the surface point at curve parameter `t` and circle
/// angle with tan-half value `u` satisfies `F = 0`. The shared radical
/// `σ = √(4 q ρ0² + (‖α‖² − q)²)` and `ρ0 = ‖α_xy‖` are carried symbolically
/// (reduced to rationals when they are rational).
pub fn verify_membership_exact(f: &MultiPoly, c: &RationalCurve, q: &CongruenceParam, t: &Rational, u: &Rational) -> Result<bool> {
    if f.nvars() != 3 {
        return Err(Error::Arity(3, f.nvars()));
    }
    let a = c.eval(t)?;
    let rho0_sq = &a[0] * &a[0] + &a[1] * &a[1];
    if rho0_sq.is_zero() {
        return Err(Error::PointOnAxis(format_rational(t)));
    }
    let excess = &rho0_sq + &a[2] * &a[2] - &q.q;
    let radicand = int(4) * &q.q * &rho0_sq + &excess * &excess;
    let field = BiquadField { s: radicand.clone(), p: rho0_sq.clone() };

    let basis = |i: usize| {
        let mut e = field.zero();
        e.c[i] = Rational::one();
        e
    };
    // σ and ρ, replaced by rationals (or σ by a multiple of ρ) when possible
    let rho = match rational::sqrt(&rho0_sq) {
        Some(r) => field.constant(r),
        None => basis(2),
    };
    let sigma = if let Some(s) = rational::sqrt(&radicand) {
        field.constant(s)
    } else if let Some(k) = rational::sqrt(&(&radicand / &rho0_sq)).filter(|_| rational::sqrt(&rho0_sq).is_none()) {
        field.scale(&basis(2), &k)
    } else {
        basis(1)
    };

    let den = Rational::one() + u * u;
    let cos_t = (Rational::one() - u * u) / &den;
    let sin_t = int(2) * u / &den;
    let two_rho_sq = int(2) * &rho0_sq;
    // X_xy = α_xy (excess + cos θ σ) / (2 ρ0²), z = sin θ σ ρ / (2 ρ0²)
    let radial = field.add(&field.constant(&excess / &two_rho_sq), &field.scale(&sigma, &(&cos_t / &two_rho_sq)));
    let xs = field.scale(&radial, &a[0]);
    let ys = field.scale(&radial, &a[1]);
    let zs = field.scale(&field.mul(&sigma, &rho), &(&sin_t / &two_rho_sq));

    let mut acc = field.zero();
    for (m, coef) in f.terms() {
        let e = m.exps();
        let term = field.mul(&field.mul(&field.pow(&xs, e[0]), &field.pow(&ys, e[1])), &field.pow(&zs, e[2]));
        acc = field.add(&acc, &field.scale(&term, coef));
    }
    Ok(field.is_zero(&acc))
}

/// Rational sample pairs `(t, u)` for exact checks, skipping poles and axis
/// points.
pub fn rational_samples(c: &RationalCurve, count: usize, seed: u64) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let t = rat(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        let u = rat(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        let Ok(a) = c.eval(&t) else { continue };
        if (&a[0] * &a[0] + &a[1] * &a[1]).is_zero() {
            continue;
        }
        if !c.g.eval(&t).abs().is_zero() {
            out.push((t, u));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poly::multi::absolute_quadric;

    fn eq8(b: i64, c: i64, q: i64) -> MultiPoly {
        let n = 3;
        let (x, y) = (MultiPoly::var(n, 0), MultiPoly::var(n, 1));
        let a = absolute_quadric(n);
        let k = |v: i64| MultiPoly::from_int(n, v);
        &(&(&(&(&x * &a) - &(&(&x * &x) * &k(c * c + 1 - q))) - &(&(&x * &y) * &k(2 * b * c))) - &(&(&y * &y) * &k(b * b + 1)))
            - &(&x * &k(q))
    }

    #[test]
    fn line_system_e1() {
        let l = catalog::line(&int(1), &int(2));
        let sys = build_system(&l, &QMode::Value(CongruenceParam::from_int(1))).unwrap();
        let n = 4;
        let expected = &(&MultiPoly::var(n, 0) * &MultiPoly::var(n, 3)) - &MultiPoly::var(n, 1);
        assert!(sys.e1.to_multi().equals_up_to_scalar(&expected));
    }

    #[test]
    fn line_matches_eq8() {
        for (b, c, q) in [(1, 2, 1), (1, 2, 0), (1, 2, -1), (0, 0, 1)] {
            let l = catalog::line(&int(b), &int(c));
            let s = implicitize(&l, &CongruenceParam::from_int(q)).unwrap();
            assert!(s.f.equals_up_to_scalar(&eq8(b, c, q)), "b={b} c={c} q={q}: {}", s.f);
            assert!(s.degree_matches());
        }
    }

    #[test]
    fn in_plane_curve_is_rejected() {
        let c = RationalCurve::from_ints("zeta", [&[0, 1], &[0, 2], &[0, 0, 1]], &[1]).unwrap();
        assert!(matches!(implicitize(&c, &CongruenceParam::from_int(1)), Err(Error::DegeneratePlane(..))));
    }

    #[test]
    fn exact_and_float_membership() {
        let l = catalog::line(&int(1), &int(2));
        let q = CongruenceParam::from_int(1);
        let f = eq8(1, 2, 1);
        assert!(membership_residual(&f, [2.0, 0.0, 5f64.sqrt()]) < 1e-15);
        for (t, u) in rational_samples(&l, 10, 7) {
            assert!(verify_membership_exact(&f, &l, &q, &t, &u).unwrap());
        }
        let wrong = eq8(1, 2, 0);
        assert!(!verify_membership_exact(&wrong, &l, &q, &int(1), &rat(1, 3)).unwrap());
    }
}
