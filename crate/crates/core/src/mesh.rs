//! Grid tessellation of the parametric surface and Wavefront OBJ output.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::congruence::{CongruenceParam, Point3};
use crate::directrix::RationalCurve;
use crate::error::{Error, Result};
use crate::poly::{real_roots_f64, Interval};
use crate::surface::{standard_form, StandardForm};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeshOptions {
    pub n_t: usize,
    pub n_theta: usize,
    /// Parameter half-width excised around poles and z-axis crossings, as a
    /// fraction of the requested range.
    pub guard: f64,
    /// `r²` at or below `pinch_tol · (1 + ‖γ‖²)` marks a pinch vertex.
    pub pinch_tol: f64,
}

impl Default for MeshOptions {
    fn default() -> Self {
        MeshOptions { n_t: 64, n_theta: 48, guard: 1e-3, pinch_tol: 1e-12 }
    }
}

/// One unbroken grid patch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeshPatch {
    pub name: String,
    pub t_range: (f64, f64),
    pub first_vertex: usize,
    pub vertex_count: usize,
    pub first_face: usize,
    pub face_count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceMesh {
    pub vertices: Vec<Point3>,
    pub faces: Vec<[usize; 3]>,
    pub n_t: usize,
    pub n_theta: usize,
    pub patches: Vec<MeshPatch>,
    /// Vertices on zero-radius circles.
    pub pinch_vertices: Vec<usize>,
    pub curve_name: String,
    pub q: String,
    pub t_range: (f64, f64),
}

impl SurfaceMesh {
    fn empty(c: &RationalCurve, q: &CongruenceParam, opts: &MeshOptions, t_range: (f64, f64)) -> Self {
        SurfaceMesh {
            vertices: Vec::new(),
            faces: Vec::new(),
            n_t: opts.n_t,
            n_theta: opts.n_theta,
            patches: Vec::new(),
            pinch_vertices: Vec::new(),
            curve_name: c.name.clone(),
            q: q.to_string(),
            t_range,
        }
    }

    pub fn has_nan(&self) -> bool {
        self.vertices.iter().any(|v| v.iter().any(|x| !x.is_finite()))
    }

    fn add_patch(&mut self, name: String, sf: &StandardForm, t0: f64, t1: f64, opts: &MeshOptions) -> Result<()> {
        let (nt, nth) = (opts.n_t, opts.n_theta);
        let rows: Vec<Result<(Vec<Point3>, bool)>> = (0..=nt)
            .into_par_iter()
            .map(|i| {
                let t = if i == nt { t1 } else { t0 + (t1 - t0) * i as f64 / nt as f64 };
                let fr = sf.frame(t)?;
                let scale = 1.0 + fr.gamma[0] * fr.gamma[0] + fr.gamma[1] * fr.gamma[1];
                let pinch = fr.r_squared <= opts.pinch_tol * scale;
                let row = (0..=nth)
                    .map(|j| fr.point(std::f64::consts::TAU * j as f64 / nth as f64))
                    .collect();
                Ok((row, pinch))
            })
            .collect();
        let first_vertex = self.vertices.len();
        let first_face = self.faces.len();
        for (i, row) in rows.into_iter().enumerate() {
            let (row, pinch) = row?;
            if pinch {
                let base = first_vertex + i * (nth + 1);
                self.pinch_vertices.extend(base..base + nth + 1);
            }
            self.vertices.extend(row);
        }
        let idx = |i: usize, j: usize| first_vertex + i * (nth + 1) + j;
        for i in 0..nt {
            for j in 0..nth {
                self.faces.push([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
                self.faces.push([idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
            }
        }
        self.patches.push(MeshPatch {
            name,
            t_range: (t0, t1),
            first_vertex,
            vertex_count: self.vertices.len() - first_vertex,
            first_face,
            face_count: self.faces.len() - first_face,
        });
        Ok(())
    }
}

/// Parameters in `[t0, t1]` where the surface is undefined: poles of `g` and
/// curve points on the z-axis.
fn breakpoints(c: &RationalCurve, t0: f64, t1: f64) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let on_axis = c.f[0].gcd(&c.f[1]);
    for p in [&c.g, &on_axis] {
        if p.degree().unwrap_or(0) > 0 {
            out.extend(real_roots_f64(p, &Interval::all(), 1e-15)?.into_iter().map(|(r, _)| r));
        }
    }
    out.retain(|t| *t >= t0 && *t <= t1);
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    Ok(out)
}

/// Valid sub-ranges of `[t0, t1]` after excising guard bands.
pub fn valid_ranges(c: &RationalCurve, t0: f64, t1: f64, guard: f64) -> Result<Vec<(f64, f64)>> {
    if t0.is_nan() || t1.is_nan() || t1 <= t0 {
        return Err(Error::EmptyRange);
    }
    let band = guard * (t1 - t0);
    let mut ranges = Vec::new();
    let mut start = t0;
    for b in breakpoints(c, t0, t1)? {
        if b - band > start {
            ranges.push((start, b - band));
        }
        start = start.max(b + band);
    }
    if t1 > start {
        ranges.push((start, t1));
    }
    if ranges.is_empty() {
        return Err(Error::EmptyRange);
    }
    Ok(ranges)
}

/// Grid mesh over `[t0, t1] × [0, 2π]`, split at poles and axis crossings.
pub fn mesh(c: &RationalCurve, q: &CongruenceParam, t_range: (f64, f64), opts: &MeshOptions) -> Result<SurfaceMesh> {
    if opts.n_t < 2 || opts.n_theta < 2 {
        return Err(Error::Domain("grid dimensions must be at least 2".into()));
    }
    let sf = standard_form(c, q);
    let mut m = SurfaceMesh::empty(c, q, opts, t_range);
    for (k, (a, b)) in valid_ranges(c, t_range.0, t_range.1, opts.guard)?.into_iter().enumerate() {
        m.add_patch(format!("{}_patch{}", c.name, k), &sf, a, b, opts)?;
    }
    if m.has_nan() {
        return Err(Error::Domain("mesh produced non-finite vertices".into()));
    }
    Ok(m)
}

/// Two-chart mesh of a closed curve given in tan-half form: `u ∈ [−1, 1]` and
/// the inverted chart `s = 1/u ∈ [−1, 1]`, which covers the parameter at
/// infinity.
pub fn mesh_closed(c: &RationalCurve, q: &CongruenceParam, opts: &MeshOptions) -> Result<SurfaceMesh> {
    if opts.n_t < 2 || opts.n_theta < 2 {
        return Err(Error::Domain("grid dimensions must be at least 2".into()));
    }
    let mut m = SurfaceMesh::empty(c, q, opts, (f64::NEG_INFINITY, f64::INFINITY));
    let charts = [(c.clone(), "chart0"), (c.inverted_chart(), "chart1")];
    for (curve, chart) in &charts {
        let sf = standard_form(curve, q);
        for (k, (a, b)) in valid_ranges(curve, -1.0, 1.0, opts.guard)?.into_iter().enumerate() {
            m.add_patch(format!("{}_{}_patch{}", c.name, chart, k), &sf, a, b, opts)?;
        }
    }
    if m.has_nan() {
        return Err(Error::Domain("mesh produced non-finite vertices".into()));
    }
    Ok(m)
}

/// OBJ text: `v` lines with 17 significant digits, one object group per
/// patch, 1-based `f` lines.
pub fn write_obj<W: Write>(m: &SurfaceMesh, mut w: W) -> io::Result<()> {
    writeln!(w, "# circular surface mesh")?;
    writeln!(w, "# curve {} q {} grid {}x{}", m.curve_name, m.q, m.n_t, m.n_theta)?;
    for p in &m.patches {
        writeln!(w, "o {}", p.name)?;
        writeln!(w, "g {}", p.name)?;
        for v in &m.vertices[p.first_vertex..p.first_vertex + p.vertex_count] {
            writeln!(w, "v {:.16e} {:.16e} {:.16e}", v[0], v[1], v[2])?;
        }
        for f in &m.faces[p.first_face..p.first_face + p.face_count] {
            writeln!(w, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
        }
    }
    Ok(())
}

pub fn obj_string(m: &SurfaceMesh) -> String {
    let mut buf = Vec::new();
    write_obj(m, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poly::rational::int;

    fn opts(n_t: usize, n_theta: usize) -> MeshOptions {
        MeshOptions { n_t, n_theta, ..MeshOptions::default() }
    }

    #[test]
    fn grid_counts() {
        let l = catalog::line(&int(1), &int(2));
        let m = mesh(&l, &CongruenceParam::from_int(1), (-5.0, 5.0), &opts(10, 12)).unwrap();
        assert_eq!(m.patches.len(), 1);
        assert_eq!(m.vertices.len(), 143);
        assert_eq!(m.faces.len(), 240);
        assert!(!m.has_nan());
    }

    #[test]
    fn splits_at_poles() {
        let m = mesh(&catalog::h1(), &CongruenceParam::from_int(-1), (-2.0, 2.0), &opts(8, 6)).unwrap();
        assert_eq!(m.patches.len(), 2);
        assert_eq!(m.vertices.len(), 2 * 9 * 7);
        assert!(m.faces.iter().flatten().all(|&i| i < m.vertices.len()));
    }

    #[test]
    fn pinch_flagged() {
        let l = RationalCurve::from_ints("l", [&[1], &[0, 1], &[]], &[1]).unwrap();
        let m = mesh(&l, &CongruenceParam::from_int(-1), (-1.0, 1.0), &opts(10, 8)).unwrap();
        assert_eq!(m.pinch_vertices.len(), 9);
    }

    #[test]
    fn empty_range() {
        let l = catalog::line(&int(1), &int(2));
        assert_eq!(mesh(&l, &CongruenceParam::from_int(1), (1.0, 1.0), &opts(4, 4)), Err(Error::EmptyRange));
    }

    #[test]
    fn closed_curve_two_charts() {
        let e = catalog::ellipse_fig12a();
        let m = mesh_closed(&e, &CongruenceParam::from_int(-1), &opts(6, 6)).unwrap();
        assert_eq!(m.patches.len(), 2);
        let text = obj_string(&m);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), m.vertices.len());
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), m.faces.len());
        assert_eq!(text.lines().filter(|l| l.starts_with("o ")).count(), 2);
    }
}
