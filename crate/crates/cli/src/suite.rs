use std::time::Instant;

use circsurf::analysis::{predicted_counts, theorem1_check};
use circsurf::catalog;
use circsurf::directrix::{detect_degenerate_position, invariants, DegeneratePosition};
use circsurf::implicitize::{implicitize, implicitize_symbolic, membership_residual, ImplicitSurface};
use circsurf::mesh::{mesh_closed, MeshOptions};
use circsurf::poly::{int, rat};
use circsurf::surface::{double_point_count, singular_candidates};
use circsurf::{CongruenceParam, RationalCurve, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::verify::verify;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteRow {
    pub member: String,
    pub pass: bool,
    pub millis: u128,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub mesh: MeshOptions,
}

pub const MEMBERS: [&str; 9] = [
    "line",
    "h1",
    "h2",
    "twisted-cubic",
    "latitude-circle",
    "ellipse-fig12a",
    "ellipse-fig12b",
    "cyclic-harmonic",
    "fig7-curve",
];

fn q(v: i64) -> CongruenceParam {
    CongruenceParam::from_int(v)
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn failed(name: &str, err: circsurf::Error) -> Check {
    check(name, false, err.to_string())
}

fn degree_check(c: &RationalCurve, qv: i64) -> Check {
    let name = format!("implicit order q={qv}");
    match implicitize(c, &q(qv)) {
        Ok(s) => check(name, s.degree_matches(), format!("computed {} predicted {}", s.computed_order, s.predicted_order)),
        Err(e) => failed(&name, e),
    }
}

fn theorem_check(c: &RationalCurve, qv: i64, s: &ImplicitSurface) -> Check {
    let name = format!("theorem counts q={qv}");
    match theorem1_check(c, &q(qv), s) {
        Ok(r) => check(name, r.passed(), format!("predicted {:?} computed {:?}", r.predicted.tuple(), r.computed)),
        Err(e) => failed(&name, e),
    }
}

fn verify_check(c: &RationalCurve, qv: i64, s: &ImplicitSurface, cfg: &SuiteConfig) -> Check {
    let name = format!("membership/orthogonality/inversion q={qv}");
    match verify(c, &q(qv), s, cfg.samples, cfg.seed, cfg.tol) {
        Ok(r) => check(
            name,
            r.pass,
            format!(
                "residual {:.1e}, exact {}/{}, orthogonality {:.1e}, inversion {}",
                r.membership_max_residual,
                r.exact_passed,
                r.exact_samples,
                r.orthogonality_max_defect,
                r.inversion_max_residual.map_or("n/a".into(), |v| format!("{v:.1e}"))
            ),
        ),
        Err(e) => failed(&name, e),
    }
}

/// Theorem and sampling checks on the surface at `q = 1`, plus order checks
/// in all three congruence classes.
fn full_checks(c: &RationalCurve, cfg: &SuiteConfig, symbolic: bool) -> Vec<Check> {
    let mut out = Vec::new();
    if symbolic {
        match implicitize_symbolic(c) {
            Ok(s) => out.push(check("symbolic implicitization", s.degree_matches(), format!("order {}", s.computed_order))),
            Err(e) => out.push(failed("symbolic implicitization", e)),
        }
    }
    for qv in [0, -1] {
        out.push(degree_check(c, qv));
    }
    match implicitize(c, &q(1)) {
        Ok(s) => {
            out.push(check("implicit order q=1", s.degree_matches(), format!("computed {} predicted {}", s.computed_order, s.predicted_order)));
            out.push(theorem_check(c, 1, &s));
            out.push(verify_check(c, 1, &s, cfg));
        }
        Err(e) => out.push(failed("implicit order q=1", e)),
    }
    out
}

fn double_point_check(c: &RationalCurve, qv: i64, expected: usize) -> Check {
    let name = format!("double points q={qv}");
    match singular_candidates(c, &q(qv)) {
        Ok(cands) => {
            let n = double_point_count(&cands);
            check(name, n == expected, format!("found {n}, expected {expected}"))
        }
        Err(e) => failed(&name, e),
    }
}

fn mesh_check(c: &RationalCurve, qv: i64, cfg: &SuiteConfig, implicit: Option<&ImplicitSurface>) -> Check {
    let name = format!("closed mesh q={qv}");
    let m = match mesh_closed(c, &q(qv), &cfg.mesh) {
        Ok(m) => m,
        Err(e) => return failed(&name, e),
    };
    let per_patch = (cfg.mesh.n_t + 1) * (cfg.mesh.n_theta + 1);
    let counts_ok = m.vertices.len() == per_patch * m.patches.len()
        && m.faces.len() == 2 * cfg.mesh.n_t * cfg.mesh.n_theta * m.patches.len();
    let mut detail = format!("{} vertices, {} faces, {} patches", m.vertices.len(), m.faces.len(), m.patches.len());
    let mut pass = counts_ok && !m.has_nan();
    if let Some(s) = implicit {
        let worst = m.vertices.iter().map(|v| membership_residual(&s.f, *v)).fold(0.0, f64::max);
        detail.push_str(&format!(", vertex residual {worst:.1e}"));
        pass &= worst < cfg.tol;
    }
    check(name, pass, detail)
}

fn invariant_check(c: &RationalCurve, qv: i64, inv_expected: (usize, usize, usize, usize), counts: (i64, i64, i64, i64)) -> Check {
    let name = format!("invariants and predicted counts q={qv}");
    let r: Result<Check> = (|| {
        let inv = invariants(c, &q(qv))?;
        let p = predicted_counts(&inv)?;
        let got = (inv.m, inv.z_prime, inv.a_prime, inv.p_sum());
        Ok(check(&name, got == inv_expected && p.tuple() == counts, format!("invariants {got:?} counts {:?}", p.tuple())))
    })();
    r.unwrap_or_else(|e| failed(&name, e))
}

fn member_checks(member: &str, cfg: &SuiteConfig) -> Vec<Check> {
    let Some(c) = catalog::by_name(member) else {
        return vec![check("lookup", false, format!("unknown member {member}"))];
    };
    match member {
        "line" | "h2" | "twisted-cubic" => full_checks(&c, cfg, false),
        "h1" => full_checks(&c, cfg, true),
        "latitude-circle" => {
            let mut out = Vec::new();
            let pos = detect_degenerate_position(&c, &q(1));
            out.push(check(
                "position",
                pos == DegeneratePosition::OnTorus { r_squared: rat(25, 16) },
                pos.diagnosis(),
            ));
            match implicitize(&c, &q(1)) {
                Ok(s) => {
                    out.push(check("implicit order q=1", s.computed_order == 4, format!("computed {}", s.computed_order)));
                    out.push(verify_check(&c, 1, &s, cfg));
                }
                Err(e) => out.push(failed("implicit order q=1", e)),
            }
            out
        }
        "ellipse-fig12a" | "ellipse-fig12b" => {
            let (qv, expected) = if member == "ellipse-fig12a" { (-1, 4) } else { (-4, 3) };
            let mut out = vec![double_point_check(&c, qv, expected)];
            match implicitize(&c, &q(qv)) {
                Ok(s) => {
                    out.push(check(format!("implicit order q={qv}"), s.degree_matches(), format!("computed {}", s.computed_order)));
                    out.push(mesh_check(&c, qv, cfg, Some(&s)));
                }
                Err(e) => out.push(failed("implicitization", e)),
            }
            out
        }
        "cyclic-harmonic" => {
            let c = catalog::cyclic_harmonic(3, &int(2));
            vec![invariant_check(&c, -1, (8, 6, 2, 0), (14, 2, 10, 12)), mesh_check(&c, -1, cfg, None)]
        }
        _ => vec![mesh_check(&c, 1, cfg, None), mesh_check(&c, -1, cfg, None)],
    }
}

pub fn run_member(member: &str, cfg: &SuiteConfig) -> SuiteRow {
    let start = Instant::now();
    let checks = member_checks(member, cfg);
    SuiteRow {
        member: member.to_string(),
        pass: !checks.is_empty() && checks.iter().all(|c| c.pass),
        millis: start.elapsed().as_millis(),
        checks,
    }
}

pub fn run_suite(members: &[&str], cfg: &SuiteConfig) -> Vec<SuiteRow> {
    members.par_iter().map(|m| run_member(m, cfg)).collect()
}

pub fn summary_table(rows: &[SuiteRow]) -> String {
    let width = rows.iter().map(|r| r.member.len()).max().unwrap_or(6).max(6);
    let mut s = format!("{:<width$}  {:<6}  {:>8}  checks\n", "member", "result", "ms");
    for r in rows {
        let passed = r.checks.iter().filter(|c| c.pass).count();
        s.push_str(&format!(
            "{:<width$}  {:<6}  {:>8}  {}/{}\n",
            r.member,
            if r.pass { "PASS" } else { "FAIL" },
            r.millis,
            passed,
            r.checks.len()
        ));
        for c in r.checks.iter().filter(|c| !c.pass) {
            s.push_str(&format!("{:<width$}    failed: {} ({})\n", "", c.name, c.detail));
        }
    }
    s
}
