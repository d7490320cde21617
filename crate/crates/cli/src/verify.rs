use circsurf::analysis::inversion_check;
use circsurf::congruence::{apollonian_orthogonality, orthogonal_pencil_sphere, orthogonality_defect};
use circsurf::implicitize::{membership_residual, rational_samples, surface_samples, verify_membership_exact, ImplicitSurface};
use circsurf::poly::rat;
use circsurf::surface::CurveF64;
use circsurf::{CongruenceParam, RationalCurve, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub curve: String,
    pub q: String,
    pub tol: f64,
    pub membership_samples: usize,
    pub membership_max_residual: f64,
    pub exact_samples: usize,
    pub exact_passed: usize,
    pub orthogonality_samples: usize,
    pub orthogonality_max_defect: f64,
    pub inversion_max_residual: Option<f64>,
    pub pass: bool,
}

/// Orthogonality of the circles through sampled curve points with random
/// spheres of the orthogonal pencil.
fn orthogonality_run(c: &RationalCurve, q: &CongruenceParam, samples: usize, seed: u64) -> Result<(usize, f64)> {
    let curve = CurveF64::new(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let qf = q.q_f64();
    let mut worst: f64 = 0.0;
    let mut taken = 0;
    let mut attempts = 0;
    while taken < samples && attempts < 100 * samples.max(1) {
        attempts += 1;
        let t: f64 = rng.gen_range(-3.0..3.0);
        let Ok(a) = curve.eval(t) else { continue };
        if a[0].hypot(a[1]) < 1e-4 || a.iter().any(|v| v.abs() > 1e4) {
            continue;
        }
        let cz = rat(rng.gen_range(-50..=50), 10);
        let Ok(sphere) = orthogonal_pencil_sphere(q, cz) else { continue };
        let d = orthogonality_defect(qf, a, &sphere)?;
        let Ok(cross) = apollonian_orthogonality(qf, a, &sphere) else { continue };
        worst = worst.max(d).max(cross);
        taken += 1;
    }
    Ok((taken, worst))
}

pub fn verify(c: &RationalCurve, q: &CongruenceParam, s: &ImplicitSurface, samples: usize, seed: u64, tol: f64) -> Result<VerifyReport> {
    let f = s.at_q(q)?;
    let pts = surface_samples(c, q.q_f64(), samples, seed);
    let membership_max_residual = pts.iter().map(|p| membership_residual(&f, *p)).fold(0.0, f64::max);
    let rs = rational_samples(c, 10, seed);
    let mut exact_passed = 0;
    for (t, u) in &rs {
        if verify_membership_exact(&f, c, q, t, u)? {
            exact_passed += 1;
        }
    }
    let (orthogonality_samples, orthogonality_max_defect) = orthogonality_run(c, q, samples, seed)?;
    let inversion_max_residual = if q.q_f64() > 0.0 { Some(inversion_check(c, q, &f, samples, seed)?) } else { None };
    let pass = !pts.is_empty()
        && membership_max_residual < tol
        && exact_passed == rs.len()
        && orthogonality_max_defect < tol
        && inversion_max_residual.is_none_or(|r| r < tol);
    Ok(VerifyReport {
        curve: c.name.clone(),
        q: q.to_string(),
        tol,
        membership_samples: pts.len(),
        membership_max_residual,
        exact_samples: rs.len(),
        exact_passed,
        orthogonality_samples,
        orthogonality_max_defect,
        inversion_max_residual,
        pass,
    })
}
