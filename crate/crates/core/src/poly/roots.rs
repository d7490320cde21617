//! Real roots of univariate rational polynomials: Sturm counting, isolation
//! by bisection with rational endpoints, and refinement.

use num_traits::{One, Signed, Zero};

use super::rational::{int, to_f64, Rational};
use super::uni::QPoly;
use crate::error::{Error, Result};

/// Half-open interval `(lo, hi]`; a missing bound means infinite.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Interval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Interval {
    pub fn all() -> Self {
        Interval::default()
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        Interval { lo: Some(lo), hi: Some(hi) }
    }
}

/// A real root `x` with `lo < x <= hi` (or exactly `lo == hi == x`).
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        0.5 * (to_f64(&self.lo) + to_f64(&self.hi))
    }
}

pub struct Sturm {
    chain: Vec<QPoly>,
}

impl Sturm {
    /// Sturm chain of the squarefree part of `p`.
    pub fn new(p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Domain("real roots of the zero polynomial".into()));
        }
        let p0 = p.squarefree();
        let mut chain = vec![p0.clone(), p0.derivative()];
        if chain[1].is_zero() {
            chain.pop();
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps sign patterns and tames coefficient growth
            let scale = -(Rational::one() / r.leading_coeff().abs());
            chain.push(r.scale(&scale));
        }
        Ok(Sturm { chain })
    }

    fn variations_at(&self, x: &Option<Rational>, upper: bool) -> usize {
        let signs = self.chain.iter().map(|p| match x {
            Some(v) => p.sign_at(v),
            None => {
                let lc = p.leading_coeff();
                let s = if lc.is_positive() { 1 } else { -1 };
                let odd = p.degree().unwrap_or(0) % 2 == 1;
                if !upper && odd {
                    -s
                } else {
                    s
                }
            }
        });
        let mut count = 0;
        let mut prev = 0;
        for s in signs.filter(|s| *s != 0) {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, iv: &Interval) -> usize {
        let a = self.variations_at(&iv.lo, false);
        let b = self.variations_at(&iv.hi, true);
        a.saturating_sub(b)
    }

    pub fn squarefree(&self) -> &QPoly {
        &self.chain[0]
    }
}

/// Number of distinct real roots of `p` in the interval.
pub fn count_real_roots(p: &QPoly, iv: &Interval) -> Result<usize> {
    Ok(Sturm::new(p)?.count(iv))
}

/// Cauchy bound: every root has `|x| < bound`.
fn root_bound(p: &QPoly) -> Rational {
    let lc = p.leading_coeff().abs();
    let m = p.coeffs().iter().map(|c| c.abs() / &lc).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// Isolating intervals for the distinct real roots of `p` inside `iv`, with
/// multiplicities from the squarefree decomposition; sorted ascending.
pub fn isolate_real_roots(p: &QPoly, iv: &Interval) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::Domain("real roots of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for (mult, factor) in p.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (lo, hi) in isolate_squarefree(&factor, iv)? {
            out.push(IsolatedRoot { lo, hi, multiplicity: mult });
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
    Ok(out)
}

fn isolate_squarefree(p: &QPoly, iv: &Interval) -> Result<Vec<(Rational, Rational)>> {
    let sturm = Sturm::new(p)?;
    let bound = root_bound(p);
    let lo = match &iv.lo {
        Some(v) if *v > -bound.clone() => v.clone(),
        _ => -bound.clone(),
    };
    let hi = match &iv.hi {
        Some(v) if *v < bound => v.clone(),
        _ => bound,
    };
    let mut out = Vec::new();
    if lo >= hi {
        return Ok(out);
    }
    let two = int(2);
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count(&Interval::new(a.clone(), b.clone()));
        match n {
            0 => {}
            1 => {
                if p.sign_at(&b) == 0 {
                    out.push((b.clone(), b));
                } else {
                    out.push((a, b));
                }
            }
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    Ok(out)
}

/// Shrinks an isolating interval of a root of the squarefree `p` until its
/// width is at most `tol`, returning the midpoint.
pub fn refine_root(p: &QPoly, root: &IsolatedRoot, tol: f64) -> f64 {
    if root.is_exact() {
        return to_f64(&root.lo);
    }
    let p = p.squarefree();
    let (mut a, mut b) = (root.lo.clone(), root.hi.clone());
    let sb = p.sign_at(&b);
    if sb == 0 {
        return to_f64(&b);
    }
    let two = int(2);
    let tol_r = Rational::from_float(tol.max(1e-300)).unwrap_or_else(|| Rational::new(1.into(), 1_000_000_000_000i64.into()));
    for _ in 0..400 {
        if &b - &a <= tol_r {
            break;
        }
        let mid = (&a + &b) / &two;
        let sm = p.sign_at(&mid);
        if sm == 0 {
            return to_f64(&mid);
        }
        if sm == sb {
            b = mid;
        } else {
            a = mid;
        }
    }
    0.5 * (to_f64(&a) + to_f64(&b))
}

/// Distinct real roots as floats (refined to `tol`), with multiplicities.
pub fn real_roots_f64(p: &QPoly, iv: &Interval, tol: f64) -> Result<Vec<(f64, usize)>> {
    let roots = isolate_real_roots(p, iv)?;
    Ok(roots.iter().map(|r| (refine_root(p, r, tol), r.multiplicity)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    #[test]
    fn counts() {
        let all = Interval::all();
        assert_eq!(count_real_roots(&QPoly::from_ints(&[-2, 0, 1]), &all).unwrap(), 2);
        assert_eq!(count_real_roots(&QPoly::from_ints(&[1, 0, 1]), &all).unwrap(), 0);
        // (t-1)^2 (t+3) = t^3 + t^2 - 5t + 3
        let p = QPoly::from_ints(&[3, -5, 1, 1]);
        assert_eq!(count_real_roots(&p, &all).unwrap(), 2);
        let roots = isolate_real_roots(&p, &all).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 1);
        assert_eq!(roots[1].multiplicity, 2);
        assert!(count_real_roots(&QPoly::zero(), &all).is_err());
    }

    #[test]
    fn half_open_bounds() {
        let p = QPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(count_real_roots(&p, &Interval::new(int(-1), int(1))).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &Interval::new(rat(-3, 2), int(1))).unwrap(), 2);
        assert_eq!(count_real_roots(&p, &Interval { lo: Some(int(0)), hi: None }).unwrap(), 1);
    }

    #[test]
    fn refinement() {
        let p = QPoly::from_ints(&[-2, 0, 1]);
        let roots = real_roots_f64(&p, &Interval::all(), 1e-14).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 + 2f64.sqrt()).abs() < 1e-12);
        assert!((roots[1].0 - 2f64.sqrt()).abs() < 1e-12);
    }
}
